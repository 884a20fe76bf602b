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

#include "netfp/serialization.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace netfp {
namespace {

using nlohmann::json;

json read_json(const std::string& path, const char* expected_format) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j = json::parse(in);
  if (j.value("format", "") != expected_format) {
    throw std::invalid_argument(path + ": expected format \"" +
                                expected_format + "\"");
  }
  return j;
}

void write_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace

void save_game(const NormalFormGame& game, const std::string& path) {
  json j;
  j["format"] = "netfp-game";
  j["type"] = "normal";
  j["action_counts"] = game.action_counts();
  json tensors = json::array();
  for (int i = 0; i < game.num_players(); ++i) tensors.push_back(game.payoff_tensor(i));
  j["utilities"] = std::move(tensors);
  write_json(j, path);
}

void save_game(const CongestionFormGame& game, const std::string& path) {
  json j;
  j["format"] = "netfp-game";
  j["type"] = "congestion";
  j["num_resources"] = game.num_resources();
  j["allow_empty_actions"] = false;
  json actions = json::array();
  json values = json::array();
  for (int i = 0; i < game.num_players(); ++i) {
    json per_player = json::array();
    for (Action a = 0; a < game.num_actions(i); ++a) {
      per_player.push_back(game.action_resources(i, a));
    }
    actions.push_back(std::move(per_player));
    json per_resource = json::array();
    for (int r = 0; r < game.num_resources(); ++r) {
      std::vector<double> column(game.num_players() + 1);
      for (int k = 1; k <= game.num_players(); ++k) {
        column[k] = game.resource_value(i, r, k);
      }
      per_resource.push_back(std::move(column));
    }
    values.push_back(std::move(per_resource));
  }
  j["action_sets"] = std::move(actions);
  j["value_table"] = std::move(values);
  write_json(j, path);
}

GameVariant load_game(const std::string& path) {
  const json j = read_json(path, "netfp-game");
  const std::string type = j.value("type", "");
  if (type == "normal") {
    return NormalFormGame(j.at("action_counts").get<std::vector<int>>(),
                          j.at("utilities").get<std::vector<std::vector<double>>>());
  }
  if (type == "congestion") {
    return CongestionFormGame(
        j.at("num_resources").get<int>(),
        j.at("action_sets").get<std::vector<std::vector<std::vector<int>>>>(),
        j.at("value_table").get<std::vector<std::vector<std::vector<double>>>>(),
        j.value("allow_empty_actions", false));
  }
  throw std::invalid_argument(path + ": unknown game type \"" + type + "\"");
}

void save_scenario(const UavScenario& scenario, const std::string& path) {
  if (scenario.uav_positions.empty()) {
    throw std::invalid_argument("scenario has no geometry to save");
  }
  json j;
  j["format"] = "netfp-scenario";
  j["uav_positions"] = scenario.uav_positions;
  j["object_positions"] = scenario.object_positions;
  write_json(j, path);
}

UavScenario load_scenario(const std::string& path) {
  const json j = read_json(path, "netfp-scenario");
  return make_uav_game(
      j.at("uav_positions").get<std::vector<std::array<double, 2>>>(),
      j.at("object_positions").get<std::vector<std::array<double, 2>>>());
}

namespace {

Matrix matrix_from_json(const json& rows) {
  const int n = static_cast<int>(rows.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw std::invalid_argument("weight matrix must be square");
    }
    for (int k = 0; k < n; ++k) m(i, k) = rows[i][k].get<double>();
  }
  return m;
}

}  // namespace

WeightFile load_weight_file(const std::string& path) {
  const json j = read_json(path, "netfp-weights");
  WeightFile out;
  out.type = j.value("type", "");
  if (out.type == "ds") {
    out.matrices.push_back(matrix_from_json(j.at("matrix")));
  } else if (out.type == "fp") {
    for (const auto& rows : j.at("matrices")) {
      out.matrices.push_back(matrix_from_json(rows));
    }
    if (out.matrices.empty()) {
      throw std::invalid_argument(path + ": no matrices");
    }
    // one matrix per source node, all of matching size
    const int n = out.matrices.front().rows();
    if (static_cast<int>(out.matrices.size()) != n) {
      throw std::invalid_argument(path + ": need exactly one matrix per node");
    }
    for (const auto& m : out.matrices) {
      if (m.rows() != n) {
        throw std::invalid_argument(path + ": matrices disagree on size");
      }
    }
  } else {
    throw std::invalid_argument(path + ": unknown weight type \"" + out.type + "\"");
  }
  return out;
}

}  // namespace netfp
