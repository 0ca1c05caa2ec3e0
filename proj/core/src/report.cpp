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

#include "foldres/report.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "foldres/error.hpp"
#include "foldres/feasibility.hpp"
#include "foldres/table_estimator.hpp"
#include "json.hpp"

namespace foldres {

namespace {

constexpr std::array kModels{Model::Coord2D, Model::Coord3D,   Model::Turn2D,
                             Model::Turn3D,  Model::SideChain, Model::SideChainWorst};
constexpr std::array kMetrics{Metric::Qubits, Metric::Interactions, Metric::TwoQubitGates,
                              Metric::Log2FeasibleRatio};

double to_double(const BigInt& x) { return x.convert_to<double>(); }

// Instances of one (model, N) cell, shared by all encodings.
struct Cell {
  std::vector<std::string> ids;
  // metrics[encoding][instance]
  std::vector<std::vector<InstanceMetrics>> metrics;
};

Cell evaluate_cell(const SweepConfig& cfg, Model model, unsigned n) {
  Cell cell;
  cell.metrics.resize(cfg.encodings.size());
  auto add = [&](std::string id, auto&& measure) {
    cell.ids.push_back(std::move(id));
    for (std::size_t e = 0; e < cfg.encodings.size(); ++e) {
      cell.metrics[e].push_back(measure(cfg.encodings[e]));
    }
  };
  switch (model) {
    case Model::Coord2D:
    case Model::Coord3D: {
      const unsigned dim = model == Model::Coord2D ? 2 : 3;
      for (const auto& grid : enumerate_grids(n, dim, cfg.grid_slack, cfg.min_side)) {
        add(grid.str(), [&](const Encoding& enc) { return measure_coordinate(grid, n, enc); });
      }
      break;
    }
    case Model::Turn2D:
    case Model::Turn3D: {
      const unsigned dim = model == Model::Turn2D ? 2 : 3;
      add("turn", [&](const Encoding& enc) { return measure_turn(n, dim, enc, cfg.turn); });
      break;
    }
    case Model::SideChain:
      for (std::uint64_t s = 0; s < cfg.samples; ++s) {
        auto rng = derive_stream(cfg.seed, n, s);
        const auto confs = sample_sidechain_instance(n, cfg.conf_min, cfg.conf_max, rng);
        add(std::to_string(s), [&](const Encoding& enc) { return measure_sidechain(confs, enc); });
      }
      break;
    case Model::SideChainWorst: {
      const CardinalityVector confs(std::vector<std::uint64_t>(n, 5));
      add("worst", [&](const Encoding& enc) { return measure_sidechain(confs, enc); });
      break;
    }
  }
  return cell;
}

void emit_cell(const SweepConfig& cfg, Model model, unsigned n, std::size_t e, const Cell& cell,
               std::vector<SweepRow>& out) {
  const auto& enc = cfg.encodings[e];
  const auto& per = cell.metrics[e];
  auto row = [&](std::string id, Metric metric, const Summary& s) {
    out.push_back(SweepRow{std::string(to_string(model)), std::string(enc.tag()),
                           enc.block_size(), n, std::move(id), std::string(to_string(metric)),
                           s.mean, s.sd, s.min, s.max, s.samples});
  };
  std::vector<double> values(per.size());
  for (auto metric : kMetrics) {
    std::ranges::transform(per, values.begin(),
                           [metric](const InstanceMetrics& m) { return m.get(metric); });
    row(std::string(kAggregateId), metric, summarize(values));
  }
  if (!cfg.per_instance) return;
  for (std::size_t i = 0; i < per.size(); ++i) {
    for (auto metric : kMetrics) {
      const double v = per[i].get(metric);
      row(cell.ids[i], metric, Summary{v, 0.0, v, v, 1});
    }
  }
}

}  // namespace

std::string_view to_string(Model model) {
  switch (model) {
    case Model::Coord2D:
      return "coord2d";
    case Model::Coord3D:
      return "coord3d";
    case Model::Turn2D:
      return "turn2d";
    case Model::Turn3D:
      return "turn3d";
    case Model::SideChain:
      return "sidechain";
    case Model::SideChainWorst:
      return "sidechain-worst";
  }
  return "unknown";
}

Model parse_model(std::string_view tag) {
  for (auto m : kModels) {
    if (to_string(m) == tag) return m;
  }
  throw DomainError("unknown model '" + std::string(tag) + "'");
}

std::span<const Model> all_models() { return kModels; }

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::Qubits:
      return "qubits";
    case Metric::Interactions:
      return "interactions";
    case Metric::TwoQubitGates:
      return "two_qubit_gates";
    case Metric::Log2FeasibleRatio:
      return "log2_feasible_ratio";
  }
  return "unknown";
}

std::span<const Metric> all_metrics() { return kMetrics; }

Summary summarize(std::span<const double> values) {
  Summary s;
  s.samples = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  s.min = values.front();
  s.max = values.front();
  for (double v : values) {
    sum += v;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  s.mean = std::clamp(sum / static_cast<double>(values.size()), s.min, s.max);
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(sq / static_cast<double>(values.size()));
  }
  return s;
}

double InstanceMetrics::get(Metric metric) const {
  switch (metric) {
    case Metric::Qubits:
      return qubits;
    case Metric::Interactions:
      return interactions;
    case Metric::TwoQubitGates:
      return two_qubit_gates;
    case Metric::Log2FeasibleRatio:
      return log2_feasible_ratio;
  }
  return 0.0;
}

InstanceMetrics measure_coordinate(const GridSpec& grid, unsigned n, const Encoding& enc) {
  const auto est = estimate(CoordinateLattice{grid.dim(), grid, n}, enc);
  return {static_cast<double>(est.qubits), to_double(est.total_interactions),
          to_double(est.two_qubit_gates), coordinate_feasible_ratio(grid, n, enc).log2_ratio};
}

InstanceMetrics measure_turn(unsigned n, unsigned dim, const Encoding& enc,
                             const TurnOptions& opts) {
  const auto est = turn_estimate(n, dim, enc, opts);
  return {static_cast<double>(est.total_qubits), to_double(est.total_interactions),
          to_double(est.two_qubit_gates),
          formula_log2_ratio(cardinality_vector(TurnLattice{dim, n}), enc)};
}

InstanceMetrics measure_sidechain(const CardinalityVector& confs, const Encoding& enc) {
  const auto est = estimate(confs, enc);
  return {static_cast<double>(est.qubits), to_double(est.total_interactions),
          to_double(est.two_qubit_gates), formula_log2_ratio(confs, enc)};
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  if (cfg.models.empty() || cfg.encodings.empty()) {
    throw DomainError("a sweep needs at least one model and one encoding");
  }
  if (cfg.n_min > cfg.n_max) throw DomainError("empty chain-length range");
  if (cfg.grid_slack < 1.0) throw DomainError("grid slack must be >= 1");

  const std::size_t n_count = cfg.n_max - cfg.n_min + 1;
  const std::size_t tasks = cfg.models.size() * n_count;
  std::vector<Cell> cells(tasks);

  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, tasks));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t t = next++; t < tasks; t = next++) {
      try {
        // The slot index, not the worker, fixes the output position.
        cells[t] = evaluate_cell(cfg, cfg.models[t / n_count],
                                 cfg.n_min + static_cast<unsigned>(t % n_count));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<SweepRow> rows;
  for (std::size_t mi = 0; mi < cfg.models.size(); ++mi) {
    for (std::size_t e = 0; e < cfg.encodings.size(); ++e) {
      for (std::size_t k = 0; k < n_count; ++k) {
        emit_cell(cfg, cfg.models[mi], cfg.n_min + static_cast<unsigned>(k), e,
                  cells[mi * n_count + k], rows);
      }
    }
  }
  return rows;
}

std::string format_double(double value) {
  if (value == 0.0) return "0";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string_view csv_header() {
  return "schema_version,model,encoding,g,N,instance_id,metric,mean,sd,min,max,samples";
}

void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << csv_header() << '\n';
  for (const auto& r : rows) {
    std::string line = std::to_string(kSchemaVersion);
    for (const std::string& field :
         {r.model, r.encoding, std::to_string(r.g), std::to_string(r.n), r.instance_id, r.metric,
          format_double(r.mean), format_double(r.sd), format_double(r.min),
          format_double(r.max), std::to_string(r.samples)}) {
      line += ',';
      line += field;
    }
    line += '\n';
    out << line;
  }
}

void write_json(std::ostream& out, std::span<const SweepRow> rows) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    doc.push_back({{"schema_version", kSchemaVersion},
                   {"model", r.model},
                   {"encoding", r.encoding},
                   {"g", r.g},
                   {"N", r.n},
                   {"instance_id", r.instance_id},
                   {"metric", r.metric},
                   {"mean", r.mean},
                   {"sd", r.sd},
                   {"min", r.min},
                   {"max", r.max},
                   {"samples", r.samples}});
  }
  out << doc.dump(2) << '\n';
}

}  // namespace foldres
