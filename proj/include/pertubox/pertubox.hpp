// Copyright 2026 The Pertubox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PERTUBOX_PERTUBOX_HPP_
#define PERTUBOX_PERTUBOX_HPP_

#include "pertubox/anonymize.hpp"
#include "pertubox/dataset.hpp"
#include "pertubox/dimreduce_perturb.hpp"
#include "pertubox/evaluate.hpp"
#include "pertubox/linalg.hpp"
#include "pertubox/matrix.hpp"
#include "pertubox/multidim_perturb.hpp"
#include "pertubox/noise.hpp"
#include "pertubox/rng.hpp"
#include "pertubox/schema.hpp"
#include "pertubox/value_perturb.hpp"

#endif  // PERTUBOX_PERTUBOX_HPP_
