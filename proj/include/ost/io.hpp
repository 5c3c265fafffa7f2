// Copyright 2026 The OST Authors
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

// JSON documents for instances and solutions.
//
// Instance:  {"nodes": 4, "edges": [[0,1,1.0], ...], "source": 0,
//             "terminals": [{"node": 2, "demand": 0.25}, ...]}
// Solution:  {"algorithm": "ost", "cost": 0.35,
//             "flows": [{"from": 0, "to": 3, "flow": 1.0}, ...],
//             "runtime_ms": 0}
//
// Serialization is canonical: edges as [min, max, weight] sorted by
// (min, max), terminals by node, flows by (from, to). Reals are written in
// shortest round-trip form, so parse(serialize(x)) reproduces every bit.

#ifndef OST_IO_HPP_
#define OST_IO_HPP_

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ost/flow_solution.hpp"
#include "ost/graph.hpp"

namespace ost {

/// Malformed solution document.
class SolutionFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

using Json = nlohmann::ordered_json;

template <typename Error>
void require_fields(const Json& obj, const std::string& path,
                    std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw Error(path + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw Error((path.empty() ? key : path + "." + key) + ": unknown field");
    }
  }
  for (std::string_view key : allowed) {
    if (!obj.contains(std::string(key))) {
      throw Error((path.empty() ? std::string(key) : path + "." + std::string(key)) +
                  ": missing field");
    }
  }
}

template <typename Error>
std::int64_t as_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) throw Error(path + ": expected an integer");
  return v.get<std::int64_t>();
}

template <typename Error>
double as_real(const Json& v, const std::string& path) {
  if (!v.is_number()) throw Error(path + ": expected a number");
  return v.get<double>();
}

template <typename Error>
NodeId as_node(const Json& v, const std::string& path) {
  auto x = as_int<Error>(v, path);
  if (x < 0 || x > std::numeric_limits<NodeId>::max()) throw Error(path + ": node id out of range");
  return static_cast<NodeId>(x);
}

template <typename Error>
Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(std::string("document: malformed: ") + e.what());
  }
}

}  // namespace detail

inline Instance parse_instance(std::string_view text) {
  using detail::Json;
  using E = InstanceError;
  const Json doc = detail::parse_json<E>(text);
  detail::require_fields<E>(doc, "", {"nodes", "edges", "source", "terminals"});

  const auto nodes = detail::as_int<E>(doc["nodes"], "nodes");
  if (nodes <= 0 || nodes > std::numeric_limits<NodeId>::max()) {
    throw E("nodes: must be a positive integer");
  }
  if (!doc["edges"].is_array()) throw E("edges: expected an array");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const Json& e = doc["edges"][i];
    const std::string path = "edges[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 3) throw E(path + ": expected [u, v, weight]");
    edges.push_back({detail::as_node<E>(e[0], path + "[0]"), detail::as_node<E>(e[1], path + "[1]"),
                     detail::as_real<E>(e[2], path + "[2]")});
  }
  Graph graph(static_cast<int>(nodes), std::move(edges));

  const NodeId source = detail::as_node<E>(doc["source"], "source");
  if (!doc["terminals"].is_array()) throw E("terminals: expected an array");
  std::vector<Terminal> terminals;
  for (std::size_t i = 0; i < doc["terminals"].size(); ++i) {
    const Json& t = doc["terminals"][i];
    const std::string path = "terminals[" + std::to_string(i) + "]";
    detail::require_fields<E>(t, path, {"node", "demand"});
    terminals.push_back({detail::as_node<E>(t["node"], path + ".node"),
                         detail::as_real<E>(t["demand"], path + ".demand")});
  }
  return Instance(std::move(graph), source, std::move(terminals));
}

inline std::string serialize_instance(const Instance& inst) {
  using detail::Json;
  std::vector<Edge> edges(inst.graph().edges().begin(), inst.graph().edges().end());
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  Json doc = Json::object();
  doc["nodes"] = inst.graph().node_count();
  Json es = Json::array();
  for (const Edge& e : edges) es.push_back(Json::array({e.u, e.v, e.weight}));
  doc["edges"] = std::move(es);
  doc["source"] = inst.source();
  Json ts = Json::array();
  for (const Terminal& t : inst.terminals()) {
    Json o = Json::object();
    o["node"] = t.node;
    o["demand"] = t.demand;
    ts.push_back(std::move(o));
  }
  doc["terminals"] = std::move(ts);
  return doc.dump(2) + "\n";
}

inline FlowSolution parse_solution(std::string_view text) {
  using detail::Json;
  using E = SolutionFormatError;
  const Json doc = detail::parse_json<E>(text);
  detail::require_fields<E>(doc, "", {"algorithm", "cost", "flows", "runtime_ms"});
  FlowSolution sol;
  if (!doc["algorithm"].is_string()) throw E("algorithm: expected a string");
  sol.algorithm = doc["algorithm"].get<std::string>();
  sol.cost = detail::as_real<E>(doc["cost"], "cost");
  sol.runtime_ms = detail::as_real<E>(doc["runtime_ms"], "runtime_ms");
  if (!doc["flows"].is_array()) throw E("flows: expected an array");
  for (std::size_t i = 0; i < doc["flows"].size(); ++i) {
    const Json& f = doc["flows"][i];
    const std::string path = "flows[" + std::to_string(i) + "]";
    detail::require_fields<E>(f, path, {"from", "to", "flow"});
    DirectedEdge key{detail::as_node<E>(f["from"], path + ".from"),
                     detail::as_node<E>(f["to"], path + ".to")};
    if (!sol.flows.emplace(key, detail::as_real<E>(f["flow"], path + ".flow")).second) {
      throw E(path + ": duplicate flow entry");
    }
  }
  return sol;
}

/// `with_timing` = false writes runtime_ms as 0 so reruns are byte-identical.
inline std::string serialize_solution(const FlowSolution& sol, bool with_timing = false) {
  using detail::Json;
  Json doc = Json::object();
  doc["algorithm"] = sol.algorithm;
  doc["cost"] = sol.cost;
  Json fs = Json::array();
  for (const auto& [e, f] : sol.flows) {
    Json o = Json::object();
    o["from"] = e.from;
    o["to"] = e.to;
    o["flow"] = f;
    fs.push_back(std::move(o));
  }
  doc["flows"] = std::move(fs);
  doc["runtime_ms"] = with_timing ? sol.runtime_ms : 0.0;
  return doc.dump(2) + "\n";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace ost

#endif  // OST_IO_HPP_
