// Copyright 2026 The netfp Authors.
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

#ifndef NETFP_SERIALIZATION_HPP_
#define NETFP_SERIALIZATION_HPP_

#include <string>
#include <variant>

#include "netfp/congestion.hpp"
#include "netfp/experiments.hpp"
#include "netfp/game.hpp"
#include "netfp/linalg.hpp"

// JSON file formats (numbers round-trip losslessly):
//
// Normal-form game:
//   {"format": "netfp-game", "type": "normal",
//    "action_counts": [..],            // per player
//    "utilities": [[..], ..]}          // per player, flat row-major tensor
//
// Congestion-form game:
//   {"format": "netfp-game", "type": "congestion",
//    "num_resources": m,
//    "allow_empty_actions": false,
//    "action_sets": [[[r, ..], ..], ..],     // per player, per action
//    "value_table": [[[v0, v1, .., vn], ..], ..]}  // per player, per resource,
//                                                  // indexed by total load
//
// Scenario:
//   {"format": "netfp-scenario",
//    "uav_positions": [[x, y], ..],
//    "object_positions": [[x, y], ..]}
//
// Weight matrix file (for verification):
//   {"format": "netfp-weights", "type": "ds", "matrix": [[..], ..]}
//   {"format": "netfp-weights", "type": "fp", "matrices": [[[..], ..], ..]}

namespace netfp {

using GameVariant = std::variant<NormalFormGame, CongestionFormGame>;

void save_game(const NormalFormGame& game, const std::string& path);
void save_game(const CongestionFormGame& game, const std::string& path);
GameVariant load_game(const std::string& path);

void save_scenario(const UavScenario& scenario, const std::string& path);
UavScenario load_scenario(const std::string& path);

struct WeightFile {
  std::string type;              // "ds" or "fp"
  std::vector<Matrix> matrices;  // one matrix for "ds", one per source for "fp"
};
WeightFile load_weight_file(const std::string& path);

}  // namespace netfp

#endif  // NETFP_SERIALIZATION_HPP_
