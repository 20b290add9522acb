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

// pertubox: data-modification toolkit for privacy-preserving data mining.
// Subcommands: perturb, anonymize, reconstruct, estimate, evaluate, registry.
// Exit codes: 0 success, 1 usage error, 2 data/validation error.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pertubox/anonymize.hpp"
#include "pertubox/dataset.hpp"
#include "pertubox/dimreduce_perturb.hpp"
#include "pertubox/evaluate.hpp"
#include "pertubox/json_util.hpp"
#include "pertubox/multidim_perturb.hpp"
#include "pertubox/noise.hpp"
#include "pertubox/rng.hpp"
#include "pertubox/schema.hpp"
#include "pertubox/value_perturb.hpp"

namespace pertubox::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// All file outputs go through a temp file plus rename, so a failing run
// never leaves a torn file behind.
void atomic_write_text(const fs::path& path, const std::string& text) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + tmp.string());
    out << text;
    if (!out) throw ValidationError("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

void atomic_write_csv(const Dataset& dataset, const fs::path& path) {
  const fs::path tmp = path.string() + ".tmp";
  write_csv(dataset, tmp);
  fs::rename(tmp, path);
}

void atomic_write_json(const json& j, const fs::path& path) {
  atomic_write_text(path, j.dump(2) + "\n");
}

void emit_json(const json& j, const std::string& output_path) {
  if (output_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    atomic_write_json(j, output_path);
}

fs::path sidecar_path(const fs::path& output) {
  return fs::path(output.string() + ".meta.json");
}

std::string canonical_technique(const std::string& name) {
  static const std::map<std::string, std::string> aliases{
      {"noise", "noise_addition"},
      {"rr", "randomized_response"},
      {"condense", "condensation"},
      {"rotate", "random_rotation"},
      {"geometric", "geometric_perturbation"},
      {"project", "random_projection"},
      {"svd", "svd_distortion"},
      {"nmf", "nmf_distortion"},
      {"anonymize", "k_anonymity"}};
  const auto alias = aliases.find(name);
  const std::string canonical = alias != aliases.end() ? alias->second : name;
  const auto& ids = technique_ids();
  if (std::find(ids.begin(), ids.end(), canonical) == ids.end())
    throw UsageError("unknown technique \"" + name + "\"");
  return canonical;
}

NoiseSpec make_noise(const std::string& family, double param) {
  if (family == "gaussian") return NoiseSpec::gaussian(param);
  if (family == "uniform") return NoiseSpec::uniform(param);
  throw UsageError("unknown noise family \"" + family +
                   "\" (expected gaussian or uniform)");
}

// Shared flags for commands that read one dataset.
struct IoOptions {
  std::string input;
  std::string schema;
  std::string output;
  std::uint64_t seed = 0;
};

struct PerturbOptions {
  IoOptions io;
  std::string technique;
  bool emit_secret = false;
  // Technique parameters; validated per technique.
  std::string noise_family = "gaussian";
  double noise_param = 0.0;
  double theta = -1.0;
  std::string column;
  std::size_t group_size = 0;
  double sigma = -1.0;
  std::size_t target_dim = 0;
  std::string axis = "column";
  double entry_std = 1.0;
  std::size_t rank = 0;
  std::size_t max_iter = 500;
  double tol = 1e-6;
};

int run_perturb(const PerturbOptions& opt) {
  const std::string technique = canonical_technique(opt.technique);
  const Schema schema = Schema::load(opt.io.schema);
  const Dataset input = load_csv(opt.io.input, schema);
  Rng rng(opt.io.seed);

  json sidecar{{"technique", technique},
               {"seed", opt.io.seed},
               {"parameters", json::object()}};
  json& params = sidecar["parameters"];
  json secret;
  std::optional<Dataset> output;

  if (technique == "noise_addition") {
    if (opt.noise_param <= 0.0)
      throw UsageError("noise_addition requires --noise-param > 0");
    const NoiseSpec noise = make_noise(opt.noise_family, opt.noise_param);
    Matrix block = input.numeric_block();
    json columns = json::array();
    for (std::size_t i = 0; i < schema.size(); ++i) {
      if (schema.column(i).kind != ColumnKind::kNumeric) continue;
      const std::size_t pos = input.block_position(i);
      std::vector<double> col(input.n_records());
      for (std::size_t r = 0; r < col.size(); ++r) col[r] = block(r, pos);
      Rng col_rng = rng.stream("noise/" + schema.column(i).name);
      const auto noisy = add_noise(col, noise, col_rng);
      for (std::size_t r = 0; r < col.size(); ++r) block(r, pos) = noisy[r];
      columns.push_back(schema.column(i).name);
    }
    if (columns.empty())
      throw ValidationError("noise_addition: dataset has no numeric columns");
    output = input.with_numeric_block(std::move(block));
    params = {{"family", noise.family_name()},
              {"param", noise.parameter()},
              {"columns", columns}};
    secret = {{"family", noise.family_name()}, {"param", noise.parameter()}};
  } else if (technique == "randomized_response") {
    if (opt.theta < 0.0)
      throw UsageError("randomized_response requires --theta");
    std::vector<std::string> targets;
    if (!opt.column.empty()) {
      targets.push_back(opt.column);
    } else {
      for (const auto& c : schema.columns())
        if (c.kind == ColumnKind::kBoolean) targets.push_back(c.name);
    }
    if (targets.empty())
      throw ValidationError(
          "randomized_response: no boolean columns to scramble");
    auto categorical = input.categorical_block();
    for (const auto& name : targets) {
      const auto idx = schema.index_of(name);
      if (!idx || schema.column(*idx).kind != ColumnKind::kBoolean)
        throw ValidationError("randomized_response: column \"" + name +
                              "\" is not boolean");
      Rng col_rng = rng.stream("rr/" + name);
      const auto bits =
          randomize_response(input.bool_column(name), opt.theta, col_rng);
      auto& labels = categorical[input.block_position(*idx)];
      for (std::size_t r = 0; r < bits.size(); ++r)
        labels[r] = bits[r] ? "true" : "false";
    }
    output = Dataset(schema, input.numeric_block(), std::move(categorical));
    params = {{"theta", opt.theta}, {"columns", targets}};
    secret = {{"theta", opt.theta}};
  } else if (technique == "condensation") {
    if (opt.group_size == 0)
      throw UsageError("condensation requires --group-size");
    auto [result, groups] = condense(input, opt.group_size, rng);
    output = std::move(result);
    params = {{"group_size", opt.group_size}};
    secret = groups.to_json();
  } else if (technique == "random_rotation") {
    auto [result, rotation] = rotate(input, rng);
    output = std::move(result);
    secret = {{"rotation", matrix_to_json(rotation)}};
  } else if (technique == "geometric_perturbation") {
    if (opt.sigma < 0.0)
      throw UsageError("geometric_perturbation requires --sigma >= 0");
    auto [result, geo] = geometric_perturb(input, opt.sigma, rng);
    output = std::move(result);
    params = {{"sigma", opt.sigma}};
    secret = geo.to_json();
  } else if (technique == "random_projection") {
    if (opt.target_dim == 0)
      throw UsageError("random_projection requires --target-dim");
    ProjectionSpec spec;
    spec.target_dim = opt.target_dim;
    spec.entry_stddev = opt.entry_std;
    if (opt.axis == "column")
      spec.axis = ProjectionAxis::kColumnWise;
    else if (opt.axis == "row")
      spec.axis = ProjectionAxis::kRowWise;
    else
      throw UsageError("--axis must be column or row");
    auto result = random_project(input, spec, rng);
    output = std::move(result.dataset);
    params = {{"target_dim", opt.target_dim},
              {"axis", opt.axis},
              {"entry_std", opt.entry_std}};
    secret = {{"projection", matrix_to_json(result.projection)}};
  } else if (technique == "svd_distortion") {
    if (opt.rank == 0) throw UsageError("svd_distortion requires --rank");
    auto [result, factors] = svd_distort(input, opt.rank);
    output = std::move(result);
    params = {{"rank", opt.rank}};
    sidecar["residual_frobenius"] = factors.residual_frobenius;
    secret = factors.to_json(true);
  } else if (technique == "nmf_distortion") {
    if (opt.rank == 0) throw UsageError("nmf_distortion requires --rank");
    auto [result, factors] =
        nmf_distort(input, opt.rank, opt.max_iter, opt.tol, rng);
    output = std::move(result);
    params = {{"rank", opt.rank},
              {"max_iter", opt.max_iter},
              {"tol", opt.tol}};
    sidecar["residual_frobenius"] = factors.residual_frobenius;
    sidecar["converged"] = factors.converged;
    secret = factors.to_json(true);
  } else {
    throw UsageError("technique \"" + technique +
                     "\" is not a perturbation; use the anonymize command");
  }

  if (opt.emit_secret) sidecar["secret"] = secret;
  atomic_write_csv(*output, opt.io.output);
  atomic_write_json(sidecar, sidecar_path(opt.io.output));
  return 0;
}

struct AnonymizeOptions {
  IoOptions io;
  std::size_t k = 0;
  std::string hierarchies;
  double max_suppression = 0.0;
};

int run_anonymize(const AnonymizeOptions& opt) {
  const Schema schema = Schema::load(opt.io.schema);
  const Dataset input = load_csv(opt.io.input, schema);
  HierarchySet hierarchies;
  if (!opt.hierarchies.empty())
    hierarchies = HierarchySet::load(opt.hierarchies);
  const AnonymizedTable table =
      k_anonymize(input, opt.k, hierarchies, opt.max_suppression);
  const Dataset flat = table.to_dataset();
  atomic_write_csv(flat, opt.io.output);

  json class_sizes = json::array();
  for (const auto& cls : table.equivalence_classes())
    class_sizes.push_back(cls.size());
  const json sidecar{
      {"technique", "k_anonymity"},
      {"seed", opt.io.seed},
      {"parameters",
       {{"k", opt.k}, {"max_suppression_fraction", opt.max_suppression}}},
      {"suppressed_count", table.suppressed_count()},
      {"class_sizes", class_sizes},
      {"anonymized_schema", flat.schema().to_json()}};
  atomic_write_json(sidecar, sidecar_path(opt.io.output));
  return 0;
}

struct ReconstructOptions {
  IoOptions io;
  std::string column;
  std::string noise_family = "gaussian";
  double noise_param = 0.0;
  std::size_t bins = 100;
  double tol = 1e-4;
  std::size_t max_iter = 500;
};

int run_reconstruct(const ReconstructOptions& opt) {
  if (opt.noise_param <= 0.0)
    throw UsageError("reconstruct requires --noise-param > 0");
  if (opt.column.empty()) throw UsageError("reconstruct requires --column");
  const Schema schema = Schema::load(opt.io.schema);
  const Dataset input = load_csv(opt.io.input, schema);
  const NoiseSpec noise = make_noise(opt.noise_family, opt.noise_param);
  const auto values = input.numeric_column(opt.column);
  const DensityEstimate estimate = reconstruct_distribution(
      values, noise, opt.bins, opt.tol, opt.max_iter);
  const json out{{"column", opt.column},
                 {"noise", {{"family", noise.family_name()},
                            {"param", noise.parameter()}}},
                 {"support", {{"lo", estimate.lo()}, {"hi", estimate.hi()}}},
                 {"bin_edges", estimate.bin_edges},
                 {"probabilities", estimate.probabilities},
                 {"converged", estimate.converged},
                 {"iterations", estimate.iterations}};
  emit_json(out, opt.io.output);
  return 0;
}

struct EstimateOptions {
  IoOptions io;
  std::string column;
  double theta = -1.0;
};

int run_estimate(const EstimateOptions& opt) {
  if (opt.theta < 0.0) throw UsageError("estimate requires --theta");
  const Schema schema = Schema::load(opt.io.schema);
  const Dataset input = load_csv(opt.io.input, schema);
  std::string column = opt.column;
  if (column.empty()) {
    for (const auto& c : schema.columns())
      if (c.kind == ColumnKind::kBoolean) {
        if (!column.empty())
          throw UsageError(
              "several boolean columns present; pick one with --column");
        column = c.name;
      }
    if (column.empty())
      throw ValidationError("estimate: no boolean column in the dataset");
  }
  const auto result =
      estimate_true_proportion(input.bool_column(column), opt.theta);
  const json out{{"column", column},
                 {"theta", opt.theta},
                 {"p_hat", result.p_hat},
                 {"standard_error", result.standard_error},
                 {"clamped", result.clamped},
                 {"observed_yes", result.observed_yes},
                 {"n", input.n_records()}};
  emit_json(out, opt.io.output);
  return 0;
}

struct EvaluateCliOptions {
  std::string original;
  std::string modified;
  std::string schema;
  std::string modified_schema;
  std::string technique;
  std::string report;
  std::uint64_t seed = 0;
  std::size_t max_pairs = 500;
  // Negative sentinels: not supplied.
  std::int64_t k = -1;
  std::int64_t l = -1;
  double t = -1.0;
  std::string sensitive;
};

int run_evaluate(const EvaluateCliOptions& opt) {
  const std::string technique = canonical_technique(opt.technique);
  const Schema schema = Schema::load(opt.schema);
  const Schema modified_schema = opt.modified_schema.empty()
                                     ? schema
                                     : Schema::load(opt.modified_schema);
  const Dataset original = load_csv(opt.original, schema);
  const Dataset modified = load_csv(opt.modified, modified_schema);

  EvaluateOptions options;
  options.seed = opt.seed;
  options.max_pairs = opt.max_pairs;
  if (opt.k >= 0) options.k = static_cast<std::size_t>(opt.k);
  if (opt.l >= 0) options.l = static_cast<std::size_t>(opt.l);
  if (opt.t >= 0.0) options.t = opt.t;
  if (!opt.sensitive.empty()) options.sensitive_column = opt.sensitive;

  const EvaluationReport report =
      evaluate_pair(original, modified, technique, options);
  json out = report.to_json();
  out["technique"] = technique;
  emit_json(out, opt.report);
  return 0;
}

// Expands `--config file.json` into ordinary tokens placed right after the
// subcommand, so explicit command-line flags win (TakeLast policy).
std::vector<std::string> expand_config(std::vector<std::string> tokens) {
  std::string config_path;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] == "--config") {
      if (i + 1 >= tokens.size())
        throw UsageError("--config expects a file path");
      config_path = tokens[i + 1];
      tokens.erase(tokens.begin() + static_cast<long>(i),
                   tokens.begin() + static_cast<long>(i) + 2);
      break;
    }
  }
  if (config_path.empty()) return tokens;
  if (tokens.empty()) throw UsageError("--config requires a subcommand");

  std::ifstream in(config_path);
  if (!in) throw ValidationError("cannot open config " + config_path);
  json config;
  try {
    in >> config;
  } catch (const json::exception& e) {
    throw ValidationError("invalid JSON config: " + std::string(e.what()));
  }
  if (!config.is_object())
    throw ValidationError("config must be a JSON object");

  std::vector<std::string> injected;
  for (const auto& [key, value] : config.items()) {
    const std::string flag = "--" + key;
    if (value.is_boolean()) {
      if (value.get<bool>()) injected.push_back(flag);
      continue;
    }
    injected.push_back(flag);
    if (value.is_string())
      injected.push_back(value.get<std::string>());
    else
      injected.push_back(value.dump());
  }
  // Keep the subcommand first; config tokens precede the explicit flags.
  std::vector<std::string> out;
  out.push_back(tokens.front());
  out.insert(out.end(), injected.begin(), injected.end());
  out.insert(out.end(), tokens.begin() + 1, tokens.end());
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"pertubox: data modification toolkit for privacy-preserving "
               "data mining"};
  app.require_subcommand(1);

  PerturbOptions perturb;
  auto* perturb_cmd = app.add_subcommand(
      "perturb", "Apply a perturbation technique to a CSV dataset");
  perturb_cmd->add_option("--technique", perturb.technique,
                          "noise|rr|condense|rotate|geometric|project|svd|nmf "
                          "or a canonical id")
      ->required();
  perturb_cmd->add_option("--input", perturb.io.input, "input CSV")->required();
  perturb_cmd->add_option("--schema", perturb.io.schema, "schema JSON")
      ->required();
  perturb_cmd->add_option("--output", perturb.io.output, "output CSV")
      ->required();
  perturb_cmd->add_option("--seed", perturb.io.seed, "RNG seed (default 0)");
  perturb_cmd->add_flag("--emit-secret", perturb.emit_secret,
                        "include the technique secret in the sidecar");
  perturb_cmd->add_option("--noise-family", perturb.noise_family,
                          "gaussian|uniform");
  perturb_cmd->add_option("--noise-param", perturb.noise_param,
                          "gaussian std or uniform half-width");
  perturb_cmd->add_option("--theta", perturb.theta,
                          "randomized response keep-probability");
  perturb_cmd->add_option("--column", perturb.column,
                          "restrict randomized response to one column");
  perturb_cmd->add_option("--group-size", perturb.group_size,
                          "condensation group size K");
  perturb_cmd->add_option("--sigma", perturb.sigma, "geometric noise std");
  perturb_cmd->add_option("--target-dim", perturb.target_dim,
                          "projection target dimension k");
  perturb_cmd->add_option("--axis", perturb.axis, "column|row projection");
  perturb_cmd->add_option("--entry-std", perturb.entry_std,
                          "projection entry std (default 1)");
  perturb_cmd->add_option("--rank", perturb.rank, "SVD/NMF target rank");
  perturb_cmd->add_option("--max-iter", perturb.max_iter,
                          "NMF iteration budget");
  perturb_cmd->add_option("--tol", perturb.tol, "NMF relative tolerance");

  AnonymizeOptions anonymize;
  auto* anonymize_cmd =
      app.add_subcommand("anonymize", "Enforce k-anonymity by generalization");
  anonymize_cmd->add_option("--input", anonymize.io.input, "input CSV")
      ->required();
  anonymize_cmd->add_option("--schema", anonymize.io.schema, "schema JSON")
      ->required();
  anonymize_cmd->add_option("--output", anonymize.io.output, "output CSV")
      ->required();
  anonymize_cmd->add_option("--k", anonymize.k, "minimum class size")
      ->required();
  anonymize_cmd->add_option("--hierarchies", anonymize.hierarchies,
                            "generalization hierarchies JSON");
  anonymize_cmd->add_option("--max-suppression", anonymize.max_suppression,
                            "suppression budget fraction (default 0)");
  anonymize_cmd->add_option("--seed", anonymize.io.seed,
                            "accepted for uniformity; unused");

  ReconstructOptions reconstruct;
  auto* reconstruct_cmd = app.add_subcommand(
      "reconstruct", "Reconstruct a value density from a noisy column");
  reconstruct_cmd->add_option("--input", reconstruct.io.input, "input CSV")
      ->required();
  reconstruct_cmd->add_option("--schema", reconstruct.io.schema, "schema JSON")
      ->required();
  reconstruct_cmd
      ->add_option("--column", reconstruct.column,
                   "numeric column to reconstruct")
      ->required();
  reconstruct_cmd->add_option("--noise-family", reconstruct.noise_family,
                              "gaussian|uniform");
  reconstruct_cmd
      ->add_option("--noise-param", reconstruct.noise_param,
                   "known noise parameter")
      ->required();
  reconstruct_cmd->add_option("--bins", reconstruct.bins,
                              "histogram bins (default 100)");
  reconstruct_cmd->add_option("--tol", reconstruct.tol,
                              "L1 stopping tolerance (default 1e-4)");
  reconstruct_cmd->add_option("--max-iter", reconstruct.max_iter,
                              "iteration budget (default 500)");
  reconstruct_cmd->add_option("--output", reconstruct.io.output,
                              "density JSON (stdout when absent)");

  EstimateOptions estimate;
  auto* estimate_cmd = app.add_subcommand(
      "estimate", "Estimate the true yes-proportion from scrambled answers");
  estimate_cmd->add_option("--input", estimate.io.input, "input CSV")
      ->required();
  estimate_cmd->add_option("--schema", estimate.io.schema, "schema JSON")
      ->required();
  estimate_cmd->add_option("--column", estimate.column,
                           "boolean column (default: the only one)");
  estimate_cmd
      ->add_option("--theta", estimate.theta,
                   "keep-probability used when scrambling")
      ->required();
  estimate_cmd->add_option("--output", estimate.io.output,
                           "estimate JSON (stdout when absent)");

  EvaluateCliOptions evaluate;
  auto* evaluate_cmd = app.add_subcommand(
      "evaluate", "Score an (original, modified) dataset pair");
  evaluate_cmd->add_option("--original", evaluate.original, "original CSV")
      ->required();
  evaluate_cmd->add_option("--modified", evaluate.modified, "modified CSV")
      ->required();
  evaluate_cmd->add_option("--schema", evaluate.schema, "original schema JSON")
      ->required();
  evaluate_cmd->add_option("--modified-schema", evaluate.modified_schema,
                           "modified schema JSON (defaults to --schema)");
  evaluate_cmd
      ->add_option("--technique", evaluate.technique,
                   "technique that produced the modified dataset")
      ->required();
  evaluate_cmd->add_option("--report", evaluate.report,
                           "report JSON (stdout when absent)");
  evaluate_cmd->add_option("--seed", evaluate.seed,
                           "pair-sampling seed (default 0)");
  evaluate_cmd->add_option("--max-pairs", evaluate.max_pairs,
                           "distance-distortion pair budget (default 500)");
  evaluate_cmd->add_option("--k", evaluate.k, "verify k-anonymity at k");
  evaluate_cmd->add_option("--l", evaluate.l, "verify distinct-l diversity");
  evaluate_cmd->add_option("--t", evaluate.t, "verify t-closeness at t");
  evaluate_cmd->add_option("--sensitive", evaluate.sensitive,
                           "sensitive column for l/t checks");

  std::string registry_output;
  auto* registry_cmd = app.add_subcommand(
      "registry", "Print the technique assessment registry as JSON");
  registry_cmd->add_option("--output", registry_output,
                           "registry JSON (stdout when absent)");

  for (auto* sub : app.get_subcommands({}))
    for (auto* option : sub->get_options())
      option->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::vector<std::string> tokens;
  for (int i = 1; i < argc; ++i) tokens.emplace_back(argv[i]);
  tokens = expand_config(std::move(tokens));
  std::reverse(tokens.begin(), tokens.end());
  try {
    app.parse(tokens);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  }

  if (perturb_cmd->parsed()) return run_perturb(perturb);
  if (anonymize_cmd->parsed()) return run_anonymize(anonymize);
  if (reconstruct_cmd->parsed()) return run_reconstruct(reconstruct);
  if (estimate_cmd->parsed()) return run_estimate(estimate);
  if (evaluate_cmd->parsed()) return run_evaluate(evaluate);
  if (registry_cmd->parsed()) {
    emit_json(registry_to_json(), registry_output);
    return 0;
  }
  throw UsageError("no subcommand given");
}

}  // namespace
}  // namespace pertubox::cli

int main(int argc, char** argv) {
  try {
    return pertubox::cli::run(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const pertubox::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const pertubox::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
