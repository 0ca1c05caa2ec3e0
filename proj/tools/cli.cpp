// Copyright 2026 The foldres Authors
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

#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "foldres/encoding.hpp"
#include "foldres/error.hpp"
#include "foldres/feasibility.hpp"
#include "foldres/instances.hpp"
#include "foldres/oracle.hpp"
#include "foldres/report.hpp"
#include "foldres/table_estimator.hpp"
#include "foldres/turn_estimator.hpp"
#include "json.hpp"

namespace foldres::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json big_to_json(const BigInt& x) {
  if (fits_u64(x)) return static_cast<std::uint64_t>(x);
  return to_string(x);
}

json to_json(const ResourceEstimate& est) {
  json by_order = json::object();
  for (const auto& [m, c] : est.interactions_by_order) by_order[std::to_string(m)] = big_to_json(c);
  return {{"qubits", est.qubits},
          {"k_locality", est.k_locality},
          {"interactions_by_order", by_order},
          {"total_interactions", big_to_json(est.total_interactions)},
          {"two_qubit_gates", big_to_json(est.two_qubit_gates)},
          {"correction_subtracted", big_to_json(est.correction_subtracted)}};
}

json to_json(const TurnResourceBreakdown& est) {
  json classes = json::array();
  for (const auto& cls : est.operator_classes) {
    classes.push_back(
        {{"name", cls.name}, {"count", big_to_json(cls.count)}, {"locality", cls.locality}});
  }
  return {{"conformation_qubits", est.conformation_qubits},
          {"aux_dist_qubits", est.aux_dist_qubits},
          {"aux_pair_qubits", est.aux_pair_qubits},
          {"total_qubits", est.total_qubits},
          {"hback_terms", big_to_json(est.hback_terms)},
          {"hback_locality", est.hback_locality},
          {"operator_classes", classes},
          {"total_interactions", big_to_json(est.total_interactions)},
          {"k_locality", est.k_locality},
          {"two_qubit_gates", big_to_json(est.two_qubit_gates)}};
}

// Fractions are only spelled out while the denominator stays readable.
constexpr std::uint64_t kFractionBitLimit = 1024;

json to_json(const FeasibilityReport& rep) {
  json j = {{"method", std::string(to_string(rep.method))}, {"qubits", rep.qubits}};
  j["feasible_count"] = rep.feasible_count ? big_to_json(*rep.feasible_count) : json(nullptr);
  j["total_count"] = rep.qubits <= kFractionBitLimit ? big_to_json(rep.total_count())
                                                     : json("2^" + std::to_string(rep.qubits));
  j["log2_ratio"] = rep.log2_ratio;
  const auto ratio = rep.ratio();
  j["ratio"] = ratio ? json(*ratio) : json(nullptr);
  const auto frac = rep.qubits <= kFractionBitLimit ? rep.ratio_fraction() : std::nullopt;
  j["ratio_fraction"] = frac ? json(*frac) : json(nullptr);
  return j;
}

// Flags shared by the instance-selecting subcommands.
struct InstanceFlags {
  std::string model = "sidechain";
  std::string encoding;
  unsigned g = 3;
  std::optional<unsigned> n;
  std::optional<std::string> grid;
  std::optional<std::string> confs;
  std::optional<std::uint64_t> seed;
  std::uint64_t conf_min = 2;
  std::uint64_t conf_max = 100;
  std::optional<long long> c1_override;
};

void add_instance_flags(CLI::App& app, InstanceFlags& f, bool encoding_required) {
  app.add_option("--model", f.model,
                 "coord2d | coord3d | turn2d | turn3d | sidechain | sidechain-worst")
      ->capture_default_str();
  auto* enc = app.add_option("--encoding", f.encoding, "unary | binary | bubinary");
  if (encoding_required) enc->required();
  app.add_option("--g", f.g, "BUBinary block size")->capture_default_str();
  app.add_option("--n", f.n, "chain length");
  app.add_option("--grid", f.grid, "lattice grid, e.g. 3x5 or 2x2x3");
  app.add_option("--confs", f.confs, "explicit conformation counts, e.g. 4,7,2");
  app.add_option("--seed", f.seed, "sample a side-chain instance with this seed");
  app.add_option("--conf-min", f.conf_min, "smallest sampled conformation count")
      ->capture_default_str();
  app.add_option("--conf-max", f.conf_max, "largest sampled conformation count")
      ->capture_default_str();
  app.add_option("--c1-override", f.c1_override, "turn-model Binary qubit offset c1");
}

struct ResolvedInstance {
  Model model;
  std::optional<ModelInstance> instance;  // empty for turn models
  unsigned n = 0;
  unsigned dim = 0;
  std::string id;
};

unsigned require_n(const InstanceFlags& f, std::string_view model) {
  if (!f.n) throw UsageError("--model " + std::string(model) + " requires --n");
  return *f.n;
}

ResolvedInstance resolve_instance(const InstanceFlags& f) {
  Model model;
  try {
    model = parse_model(f.model);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const int selectors = int{f.grid.has_value()} + int{f.confs.has_value()} + int{f.seed.has_value()};
  if (selectors > 1) throw UsageError("give exactly one of --grid, --confs, --seed");

  ResolvedInstance r{model, std::nullopt, 0, 0, ""};
  switch (model) {
    case Model::Coord2D:
    case Model::Coord3D: {
      if (!f.grid) throw UsageError("coordinate models need --grid");
      r.dim = model == Model::Coord2D ? 2 : 3;
      r.n = require_n(f, f.model);
      const auto grid = GridSpec::parse(*f.grid);
      r.id = grid.str();
      r.instance = CoordinateLattice{r.dim, grid, r.n};
      break;
    }
    case Model::Turn2D:
    case Model::Turn3D:
      if (selectors) throw UsageError("turn models take only --n");
      r.dim = model == Model::Turn2D ? 2 : 3;
      r.n = require_n(f, f.model);
      r.id = "turn";
      break;
    case Model::SideChain: {
      if (f.confs) {
        auto confs = CardinalityVector::parse(*f.confs);
        r.n = static_cast<unsigned>(confs.size());
        r.id = confs.str();
        r.instance = SideChain{std::move(confs)};
      } else if (f.seed) {
        r.n = require_n(f, f.model);
        auto rng = derive_stream(*f.seed, r.n, 0);
        auto confs = sample_sidechain_instance(r.n, f.conf_min, f.conf_max, rng);
        r.id = "0";
        r.instance = SideChain{std::move(confs)};
      } else {
        throw UsageError("the side-chain model needs --confs or --seed");
      }
      break;
    }
    case Model::SideChainWorst:
      if (selectors) throw UsageError("sidechain-worst takes only --n");
      r.n = require_n(f, f.model);
      r.id = "worst";
      r.instance = SideChain{CardinalityVector(std::vector<std::uint64_t>(r.n, 5))};
      break;
  }
  return r;
}

Encoding parse_encoding_flag(const std::string& name, unsigned g) {
  try {
    return Encoding::parse(name, g);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

int cmd_estimate(const InstanceFlags& f, const std::string& format, std::ostream& out) {
  const auto enc = parse_encoding_flag(f.encoding, f.g);
  const auto inst = resolve_instance(f);
  TurnOptions turn_opts{f.c1_override};

  json doc = {{"model", std::string(to_string(inst.model))},
              {"encoding", std::string(enc.tag())},
              {"g", enc.block_size()},
              {"N", inst.n},
              {"instance_id", inst.id}};
  InstanceMetrics metrics;
  if (inst.instance) {
    const auto confs = cardinality_vector(*inst.instance);
    json c = json::array();
    for (auto ci : confs.entries()) c.push_back(ci);
    doc["cardinality_vector"] = c;
    const auto est = estimate(*inst.instance, enc);
    doc["resources"] = to_json(est);
    FeasibilityReport feas;
    if (const auto* coord = std::get_if<CoordinateLattice>(&*inst.instance)) {
      feas = coordinate_feasible_ratio(coord->grid, coord->n, enc);
      metrics = measure_coordinate(coord->grid, coord->n, enc);
    } else {
      feas = feasible_ratio_formula(confs, enc);
      metrics = measure_sidechain(confs, enc);
    }
    doc["feasibility"] = to_json(feas);
  } else {
    const auto est = turn_estimate(inst.n, inst.dim, enc, turn_opts);
    doc["c1"] = turn_opts.c1_override.value_or(default_c1(inst.dim));
    doc["resources"] = to_json(est);
    doc["feasibility"] = to_json(turn_feasible_ratio(inst.n, inst.dim, enc));
    metrics = measure_turn(inst.n, inst.dim, enc, turn_opts);
  }

  if (format == "json") {
    out << doc.dump(2) << '\n';
    return kSuccess;
  }
  std::vector<SweepRow> rows;
  for (auto metric : all_metrics()) {
    const double v = metrics.get(metric);
    rows.push_back(SweepRow{std::string(to_string(inst.model)), std::string(enc.tag()),
                            enc.block_size(), inst.n, inst.id, std::string(to_string(metric)), v,
                            0.0, v, v, 1});
  }
  write_csv(out, rows);
  return kSuccess;
}

struct SweepFlags {
  std::vector<std::string> models{"all"};
  std::vector<std::string> encodings{"unary", "binary", "bubinary"};
  unsigned g = 3;
  unsigned n_min = 3;
  unsigned n_max = 100;
  double grid_slack = kDefaultGridSlack;
  unsigned min_side = kDefaultMinSide;
  std::uint64_t conf_min = 2;
  std::uint64_t conf_max = 100;
  std::uint64_t samples = 2000;
  std::uint64_t seed = 0;
  std::optional<long long> c1_override;
  std::string out = "-";
  std::string format = "csv";
  unsigned threads = 0;
  bool per_instance = false;
};

int cmd_sweep(const SweepFlags& f, std::ostream& out) {
  SweepConfig cfg;
  for (const auto& m : f.models) {
    if (m == "all") {
      cfg.models.insert(cfg.models.end(), all_models().begin(), all_models().end());
    } else {
      try {
        cfg.models.push_back(parse_model(m));
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
    }
  }
  for (const auto& e : f.encodings) {
    if (e == "all") {
      cfg.encodings.insert(cfg.encodings.end(),
                           {Encoding::unary(), Encoding::binary(),
                            parse_encoding_flag("bubinary", f.g)});
    } else {
      cfg.encodings.push_back(parse_encoding_flag(e, f.g));
    }
  }
  cfg.n_min = f.n_min;
  cfg.n_max = f.n_max;
  cfg.grid_slack = f.grid_slack;
  cfg.min_side = f.min_side;
  cfg.conf_min = f.conf_min;
  cfg.conf_max = f.conf_max;
  cfg.samples = f.samples;
  cfg.seed = f.seed;
  cfg.turn.c1_override = f.c1_override;
  cfg.threads = f.threads;
  cfg.per_instance = f.per_instance;

  const auto rows = run_sweep(cfg);

  std::ostringstream buffer;
  if (f.format == "json") {
    write_json(buffer, rows);
  } else {
    write_csv(buffer, rows);
  }
  if (f.out == "-") {
    out << buffer.str();
    return kSuccess;
  }
  std::ofstream file(f.out, std::ios::binary | std::ios::trunc);
  if (!file) throw DomainError("cannot open '" + f.out + "' for writing");
  file << buffer.str();
  file.flush();
  if (!file) throw DomainError("failed writing '" + f.out + "'");
  return kSuccess;
}

int cmd_oracle_check(const std::string& confs_text, const std::string& encoding, unsigned g,
                     std::uint64_t cap, std::ostream& out) {
  const auto enc = parse_encoding_flag(encoding, g);
  const auto confs = CardinalityVector::parse(confs_text);
  const auto cmp = census_equals_estimate(confs, enc, cap);

  out << "confs " << confs.str() << "  encoding " << enc.tag();
  if (enc.scheme() == Scheme::BlockUnaryBinary) out << " g=" << enc.block_size();
  out << "  qubits " << cmp.census.qubit_count << '\n';
  unsigned top = 0;
  if (!cmp.census.counts_by_order.empty()) top = cmp.census.counts_by_order.rbegin()->first;
  if (!cmp.estimate.empty()) top = std::max(top, cmp.estimate.rbegin()->first);
  for (unsigned m = 1; m <= top; ++m) {
    const auto c = cmp.census.counts_by_order.contains(m) ? cmp.census.counts_by_order.at(m) : 0;
    const BigInt e = cmp.estimate.contains(m) ? cmp.estimate.at(m) : BigInt(0);
    out << "  order " << m << ": census " << c << "  estimate " << e << '\n';
  }
  out << "  total: census " << cmp.census_count << "  estimate " << cmp.estimate_count << '\n';
  out << "  epsilon " << correction_term(confs, enc) << '\n';
  if (enc.scheme() == Scheme::BlockUnaryBinary && enc.block_size() == 1) {
    const bool same = interaction_counts(confs, Encoding::unary()) == cmp.estimate;
    out << "  unary-equivalent: " << (same ? "yes" : "no") << '\n';
  }
  if (cmp.equal) {
    out << "PASS\n";
    return kSuccess;
  }
  const unsigned m = *cmp.first_divergent_order;
  const auto c = cmp.census.counts_by_order.contains(m) ? cmp.census.counts_by_order.at(m) : 0;
  const BigInt e = cmp.estimate.contains(m) ? cmp.estimate.at(m) : BigInt(0);
  out << "FAIL: first divergence at order " << m << " (census " << c << ", estimate " << e
      << ")\n";
  return kOracleDivergence;
}

int cmd_feasible(const InstanceFlags& f, bool exact, std::uint64_t cap, std::ostream& out) {
  const auto enc = parse_encoding_flag(f.encoding, f.g);
  const auto inst = resolve_instance(f);
  FeasibilityReport rep;
  if (!inst.instance) {
    if (exact) {
      rep = feasible_ratio_exact(cardinality_vector(TurnLattice{inst.dim, inst.n}), enc, cap);
    } else {
      rep = turn_feasible_ratio(inst.n, inst.dim, enc);
    }
  } else if (const auto* coord = std::get_if<CoordinateLattice>(&*inst.instance)) {
    if (exact) throw UsageError("--exact applies to side-chain and turn instances");
    rep = coordinate_feasible_ratio(coord->grid, coord->n, enc);
  } else {
    const auto confs = cardinality_vector(*inst.instance);
    rep = exact ? feasible_ratio_exact(confs, enc, cap) : feasible_ratio_formula(confs, enc);
  }
  json doc = {{"model", std::string(to_string(inst.model))},
              {"encoding", std::string(enc.tag())},
              {"g", enc.block_size()},
              {"N", inst.n},
              {"instance_id", inst.id}};
  const json feas = to_json(rep);
  for (const auto& [key, value] : feas.items()) doc[key] = value;
  out << doc.dump(2) << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum resource estimates for coarse-grained protein folding models", "foldres"};
  app.require_subcommand(1);

  InstanceFlags est_flags;
  std::string est_format = "json";
  auto* estimate_cmd = app.add_subcommand("estimate", "resources for a single instance");
  add_instance_flags(*estimate_cmd, est_flags, true);
  estimate_cmd->add_option("--format", est_format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  SweepFlags sweep_flags;
  auto* sweep_cmd = app.add_subcommand("sweep", "figure data over a chain-length range");
  sweep_cmd->add_option("--model", sweep_flags.models, "models, comma separated, or all")
      ->delimiter(',')
      ->capture_default_str();
  sweep_cmd->add_option("--encoding", sweep_flags.encodings, "encodings, comma separated, or all")
      ->delimiter(',')
      ->capture_default_str();
  sweep_cmd->add_option("--g", sweep_flags.g, "BUBinary block size")->capture_default_str();
  sweep_cmd->add_option("--n-min", sweep_flags.n_min)->capture_default_str();
  sweep_cmd->add_option("--n-max", sweep_flags.n_max)->capture_default_str();
  sweep_cmd->add_option("--grid-slack", sweep_flags.grid_slack, "site window [N, slack*N]")
      ->capture_default_str();
  sweep_cmd->add_option("--min-side", sweep_flags.min_side, "smallest grid side")
      ->capture_default_str();
  sweep_cmd->add_option("--conf-min", sweep_flags.conf_min)->capture_default_str();
  sweep_cmd->add_option("--conf-max", sweep_flags.conf_max)->capture_default_str();
  sweep_cmd->add_option("--samples", sweep_flags.samples, "side-chain draws per N")
      ->capture_default_str();
  sweep_cmd->add_option("--seed", sweep_flags.seed)->capture_default_str();
  sweep_cmd->add_option("--c1-override", sweep_flags.c1_override);
  sweep_cmd->add_option("--out", sweep_flags.out, "output path, - for stdout")
      ->capture_default_str();
  sweep_cmd->add_option("--format", sweep_flags.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep_cmd->add_option("--threads", sweep_flags.threads, "0 = all cores")->capture_default_str();
  sweep_cmd->add_flag("--per-instance", sweep_flags.per_instance, "also emit one row per instance");

  std::string oracle_confs;
  std::string oracle_encoding;
  unsigned oracle_g = 3;
  std::uint64_t oracle_cap = kOracleQubitCap;
  auto* oracle_cmd = app.add_subcommand("oracle-check", "compare closed forms with brute force");
  oracle_cmd->add_option("--confs", oracle_confs)->required();
  oracle_cmd->add_option("--encoding", oracle_encoding)->required();
  oracle_cmd->add_option("--g", oracle_g)->capture_default_str();
  oracle_cmd->add_option("--qubit-cap", oracle_cap)->capture_default_str();

  InstanceFlags feas_flags;
  bool feas_exact = false;
  std::uint64_t feas_cap = kDefaultQubitCap;
  auto* feasible_cmd = app.add_subcommand("feasible", "feasible-set ratio");
  add_instance_flags(*feasible_cmd, feas_flags, true);
  feasible_cmd->add_flag("--exact", feas_exact, "enumerate every bitstring");
  feasible_cmd->add_option("--qubit-cap", feas_cap)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*estimate_cmd) return cmd_estimate(est_flags, est_format, out);
    if (*sweep_cmd) return cmd_sweep(sweep_flags, out);
    if (*oracle_cmd) return cmd_oracle_check(oracle_confs, oracle_encoding, oracle_g, oracle_cap, out);
    if (*feasible_cmd) return cmd_feasible(feas_flags, feas_exact, feas_cap, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace foldres::cli
