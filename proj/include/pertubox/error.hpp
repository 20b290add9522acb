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

#ifndef PERTUBOX_ERROR_HPP_
#define PERTUBOX_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace pertubox {

// Raised for invalid data or parameters (bad CSV cells, out-of-range k,
// non-identifiable theta, ...). The CLI maps it to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace pertubox

#endif  // PERTUBOX_ERROR_HPP_
