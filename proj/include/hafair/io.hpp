// Copyright 2026 The hafair Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HAFAIR_IO_HPP_
#define HAFAIR_IO_HPP_

// JSON formats.
//
// Instance:
//   {"n":5,"m":8,
//    "prefs":{"kind":"ordinal","rankings":[[["h5","h2","h4"],["h8"],["h1"]], ...]}
//            | {"kind":"cardinal","values":[[3,0,...], ...]},
//    "axis":["h1",...]}            (axis optional)
// Allocation:
//   {"i1":"h8","i2":"h1",...}
// Agents are named i1..in and houses h1..hm.

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "hafair/core.hpp"

namespace hafair {

using Json = nlohmann::ordered_json;

inline std::string house_name(HouseId h) { return "h" + std::to_string(h + 1); }
inline std::string agent_name(AgentId i) { return "i" + std::to_string(i + 1); }

namespace detail {

inline int parse_index(const std::string& s, char prefix, int limit, const char* what) {
  if (s.size() < 2 || s[0] != prefix) throw ValidationError(std::string("bad ") + what + " name '" + s + "'");
  int v = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') throw ValidationError(std::string("bad ") + what + " name '" + s + "'");
    v = v * 10 + (s[k] - '0');
    if (v > 1000000) throw ValidationError(std::string("bad ") + what + " name '" + s + "'");
  }
  if (v < 1 || v > limit) throw ValidationError(std::string(what) + " '" + s + "' out of range");
  return v - 1;
}

}  // namespace detail

inline HouseId parse_house(const std::string& s, int m) { return detail::parse_index(s, 'h', m, "house"); }
inline AgentId parse_agent(const std::string& s, int n) { return detail::parse_index(s, 'i', n, "agent"); }

inline Json instance_to_json(const Instance& inst) {
  Json j;
  j["n"] = inst.num_agents();
  j["m"] = inst.num_houses();
  Json prefs;
  const auto& p = inst.prefs();
  if (p.is_ordinal()) {
    prefs["kind"] = "ordinal";
    Json rankings = Json::array();
    for (const auto& r : p.rankings()) {
      Json jr = Json::array();
      for (const auto& g : r) {
        Json jg = Json::array();
        for (HouseId h : g) jg.push_back(house_name(h));
        jr.push_back(jg);
      }
      rankings.push_back(jr);
    }
    prefs["rankings"] = rankings;
  } else {
    prefs["kind"] = "cardinal";
    prefs["values"] = p.values();
  }
  j["prefs"] = prefs;
  if (inst.has_axis()) {
    Json axis = Json::array();
    for (HouseId h : inst.axis()) axis.push_back(house_name(h));
    j["axis"] = axis;
  }
  return j;
}

inline Instance instance_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int m = j.at("m").get<int>();
    const auto& prefs = j.at("prefs");
    const auto kind = prefs.at("kind").get<std::string>();
    std::optional<PreferenceProfile> profile;
    if (kind == "ordinal") {
      const auto& rankings = prefs.at("rankings");
      if (!rankings.is_array() || static_cast<int>(rankings.size()) != n)
        throw ValidationError("rankings must list one ranking per agent");
      std::vector<PreferenceProfile::Ranking> rk;
      for (const auto& jr : rankings) {
        PreferenceProfile::Ranking r;
        for (const auto& jg : jr) {
          PreferenceProfile::TieGroup g;
          for (const auto& jh : jg) g.push_back(parse_house(jh.get<std::string>(), m));
          r.push_back(std::move(g));
        }
        rk.push_back(std::move(r));
      }
      profile = PreferenceProfile::ordinal(m, std::move(rk));
    } else if (kind == "cardinal") {
      auto values = prefs.at("values").get<std::vector<std::vector<std::int64_t>>>();
      if (static_cast<int>(values.size()) != n) throw ValidationError("values must list one row per agent");
      for (const auto& row : values)
        if (static_cast<int>(row.size()) != m) throw ValidationError("each value row must have m entries");
      profile = PreferenceProfile::cardinal(std::move(values));
    } else {
      throw ValidationError("unknown preference kind '" + kind + "'");
    }
    std::optional<std::vector<HouseId>> axis;
    if (j.contains("axis")) {
      axis.emplace();
      for (const auto& jh : j.at("axis")) axis->push_back(parse_house(jh.get<std::string>(), m));
    }
    return Instance(std::move(*profile), std::move(axis));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed instance JSON: ") + e.what());
  }
}

inline Json allocation_to_json(const Allocation& a) {
  Json j = Json::object();
  for (AgentId i = 0; i < a.num_agents(); ++i) j[agent_name(i)] = house_name(a[i]);
  return j;
}

inline Allocation allocation_from_json(const Json& j, const Instance& inst) {
  if (!j.is_object()) throw ValidationError("allocation JSON must be an object");
  std::vector<HouseId> houses(inst.num_agents(), kNoHouse);
  try {
    for (const auto& [key, val] : j.items()) {
      const AgentId i = parse_agent(key, inst.num_agents());
      if (houses[i] != kNoHouse) throw ValidationError("agent " + key + " listed twice");
      houses[i] = parse_house(val.get<std::string>(), inst.num_houses());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed allocation JSON: ") + e.what());
  }
  Allocation a(std::move(houses));
  a.validate(inst);
  return a;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline Instance load_instance(const std::string& path) { return instance_from_json(read_json_file(path)); }

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << text;
}

}  // namespace hafair

#endif  // HAFAIR_IO_HPP_
