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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "foldres/encoding.hpp"
#include "foldres/instances.hpp"
#include "foldres/turn_estimator.hpp"

namespace foldres {

enum class Model { Coord2D, Coord3D, Turn2D, Turn3D, SideChain, SideChainWorst };

/// "coord2d", "coord3d", "turn2d", "turn3d", "sidechain", "sidechain-worst".
std::string_view to_string(Model model);
Model parse_model(std::string_view tag);
std::span<const Model> all_models();

enum class Metric { Qubits, Interactions, TwoQubitGates, Log2FeasibleRatio };

std::string_view to_string(Metric metric);
std::span<const Metric> all_metrics();

/// Row of the versioned CSV/JSON schema.
struct SweepRow {
  std::string model;
  std::string encoding;
  unsigned g = 1;
  unsigned n = 0;
  std::string instance_id;
  std::string metric;
  double mean = 0.0;
  double sd = 0.0;  // population standard deviation
  double min = 0.0;
  double max = 0.0;
  std::uint64_t samples = 0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct Summary {
  double mean = 0.0;
  double sd = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::uint64_t samples = 0;
};

/// Mean, population SD (divisor n), min and max, summed in input order.
Summary summarize(std::span<const double> values);

/// One instance's four metrics for one encoding.
struct InstanceMetrics {
  double qubits = 0.0;
  double interactions = 0.0;
  double two_qubit_gates = 0.0;
  double log2_feasible_ratio = 0.0;

  double get(Metric metric) const;
};

InstanceMetrics measure_coordinate(const GridSpec& grid, unsigned n, const Encoding& enc);
InstanceMetrics measure_turn(unsigned n, unsigned dim, const Encoding& enc,
                             const TurnOptions& opts = {});
InstanceMetrics measure_sidechain(const CardinalityVector& confs, const Encoding& enc);

/// Aggregate rows carry this instance id; per-instance rows use the grid
/// string, the draw index, or "turn" / "worst".
inline constexpr std::string_view kAggregateId = "*";

struct SweepConfig {
  std::vector<Model> models;
  std::vector<Encoding> encodings;
  unsigned n_min = 3;
  unsigned n_max = 100;
  double grid_slack = kDefaultGridSlack;
  unsigned min_side = kDefaultMinSide;
  std::uint64_t conf_min = 2;
  std::uint64_t conf_max = 100;
  std::uint64_t samples = 2000;
  std::uint64_t seed = 0;
  TurnOptions turn;
  unsigned threads = 0;  // 0: hardware concurrency
  bool per_instance = false;
};

/// Runs every (model, N) cell, possibly in parallel, and returns rows ordered
/// by (model, encoding, N, instance, metric) with models and encodings in
/// config order. Output does not depend on the thread count.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

inline constexpr int kSchemaVersion = 1;

/// Shortest decimal that round-trips to the same double; "0" for zeros.
std::string format_double(double value);

std::string_view csv_header();
void write_csv(std::ostream& out, std::span<const SweepRow> rows);
void write_json(std::ostream& out, std::span<const SweepRow> rows);

}  // namespace foldres
