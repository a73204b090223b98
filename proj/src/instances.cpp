// Copyright 2026 The Authors.
//
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

#include "robustcut/instances.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "robustcut/errors.hpp"

namespace robustcut {

using nlohmann::json;

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kMaxCut:
      return "maxcut";
    case ProblemKind::kDiCut:
      return "dicut";
    case ProblemKind::kAllEqual:
      return "allequal";
  }
  return "maxcut";
}

ProblemKind problem_kind_from_string(std::string_view name) {
  if (name == "maxcut") return ProblemKind::kMaxCut;
  if (name == "dicut") return ProblemKind::kDiCut;
  if (name == "allequal") return ProblemKind::kAllEqual;
  throw ParseError("kind: unknown problem kind '" + std::string(name) + "'");
}

Cut::Cut(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_) {
    if (s != 1 && s != -1) throw DomainError("cut entries must be -1 or +1");
  }
}

Cut Cut::flipped() const {
  Cut out = *this;
  for (auto& s : out.signs_) s = -s;
  return out;
}

Instance Instance::maxcut(int n, std::vector<Edge> edges, bool signed_weights) {
  Instance inst;
  inst.kind_ = ProblemKind::kMaxCut;
  inst.n_ = n;
  inst.signed_ = signed_weights;
  for (auto& e : edges) {
    if (e.tail > e.head) std::swap(e.tail, e.head);
  }
  inst.edges_ = std::move(edges);
  inst.validate();
  return inst;
}

Instance Instance::dicut(int n, std::vector<Edge> arcs, bool signed_weights) {
  Instance inst;
  inst.kind_ = ProblemKind::kDiCut;
  inst.n_ = n;
  inst.signed_ = signed_weights;
  inst.edges_ = std::move(arcs);
  inst.validate();
  return inst;
}

Instance Instance::allequal(int n, std::vector<Clause> clauses, bool signed_weights) {
  Instance inst;
  inst.kind_ = ProblemKind::kAllEqual;
  inst.n_ = n;
  inst.signed_ = signed_weights;
  inst.arity_ = clauses.empty() ? 0 : static_cast<int>(clauses.front().literals.size());
  inst.clauses_ = std::move(clauses);
  inst.validate();
  return inst;
}

namespace {

void check_weight(double w, bool allow_signed, const std::string& where) {
  if (!std::isfinite(w)) throw DomainError(where + ": weight is not finite");
  if (!allow_signed && w < 0.0) {
    throw DomainError(where + ": negative weight " + std::to_string(w) +
                      " (set \"signed\": true to allow)");
  }
}

}  // namespace

void Instance::validate() const {
  if (n_ < 1) throw DomainError("n: vertex count must be positive");
  if (kind_ == ProblemKind::kAllEqual) {
    if (!edges_.empty()) throw DomainError("edges: allequal instances take clauses");
    for (std::size_t c = 0; c < clauses_.size(); ++c) {
      const auto where = "clauses[" + std::to_string(c) + "]";
      const auto& clause = clauses_[c];
      if (static_cast<int>(clause.literals.size()) != arity_) {
        throw DomainError(where + ": clause arity differs from " + std::to_string(arity_));
      }
      for (const auto& lit : clause.literals) {
        if (lit.var < 0 || lit.var >= n_) throw DomainError(where + ": literal out of range");
      }
      check_weight(clause.weight, signed_, where);
    }
    if (!clauses_.empty() && arity_ < 2) throw DomainError("clauses: arity must be >= 2");
    return;
  }
  if (!clauses_.empty()) throw DomainError("clauses: only allequal instances take clauses");
  std::set<std::pair<int, int>> seen;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto where = "edges[" + std::to_string(e) + "]";
    const auto& edge = edges_[e];
    if (edge.tail < 0 || edge.tail >= n_ || edge.head < 0 || edge.head >= n_) {
      throw DomainError(where + ": vertex index out of range 1.." + std::to_string(n_));
    }
    if (edge.tail == edge.head) throw DomainError(where + ": self-loop");
    if (!seen.emplace(edge.tail, edge.head).second) throw DomainError(where + ": duplicate edge");
    check_weight(edge.weight, signed_, where);
  }
}

std::size_t Instance::weight_count() const {
  return kind_ == ProblemKind::kAllEqual ? clauses_.size() : edges_.size();
}

WeightAssignment Instance::nominal_weights() const {
  WeightAssignment w;
  w.reserve(weight_count());
  if (kind_ == ProblemKind::kAllEqual) {
    for (const auto& c : clauses_) w.push_back(c.weight);
  } else {
    for (const auto& e : edges_) w.push_back(e.weight);
  }
  return w;
}

namespace {

template <typename T>
T field(const json& j, const char* name) {
  if (!j.contains(name)) throw ParseError(std::string(name) + ": missing field");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string(name) + ": " + e.what());
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("instance: top level must be an object");
  const auto kind = problem_kind_from_string(field<std::string>(j, "kind"));
  const int n = field<int>(j, "n");
  const bool signed_weights = j.value("signed", false);

  if (kind == ProblemKind::kAllEqual) {
    std::vector<Clause> clauses;
    const auto raw = j.contains("clauses") ? j.at("clauses") : json::array();
    if (!raw.is_array()) throw ParseError("clauses: must be an array");
    for (std::size_t c = 0; c < raw.size(); ++c) {
      const auto where = "clauses[" + std::to_string(c) + "]";
      if (!raw[c].is_object()) throw ParseError(where + ": must be an object");
      Clause clause;
      std::vector<int> lits;
      try {
        lits = raw[c].at("literals").get<std::vector<int>>();
        clause.weight = raw[c].value("weight", 1.0);
      } catch (const json::exception& e) {
        throw ParseError(where + ": " + e.what());
      }
      for (int lit : lits) {
        if (lit == 0) throw ParseError(where + ".literals: literal 0 is not allowed");
        clause.literals.push_back({std::abs(lit) - 1, lit < 0});
      }
      clauses.push_back(std::move(clause));
    }
    return Instance::allequal(n, std::move(clauses), signed_weights);
  }

  std::vector<Edge> edges;
  const auto raw = j.contains("edges") ? j.at("edges") : json::array();
  if (!raw.is_array()) throw ParseError("edges: must be an array");
  for (std::size_t e = 0; e < raw.size(); ++e) {
    const auto where = "edges[" + std::to_string(e) + "]";
    const auto& item = raw[e];
    if (!item.is_array() || item.size() < 2 || item.size() > 3) {
      throw ParseError(where + ": expected [i, j] or [i, j, w]");
    }
    try {
      Edge edge;
      edge.tail = item[0].get<int>() - 1;
      edge.head = item[1].get<int>() - 1;
      edge.weight = item.size() == 3 ? item[2].get<double>() : 1.0;
      edges.push_back(edge);
    } catch (const json::exception& ex) {
      throw ParseError(where + ": " + ex.what());
    }
  }
  if (kind == ProblemKind::kDiCut) return Instance::dicut(n, std::move(edges), signed_weights);
  return Instance::maxcut(n, std::move(edges), signed_weights);
}

Instance parse_edge_list(std::string_view text, ProblemKind kind) {
  if (kind == ProblemKind::kAllEqual) throw ParseError("edge list: allequal needs JSON input");
  std::istringstream in{std::string(text)};
  std::string line;
  int n = 0;
  int line_no = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first == "c") continue;
    if (first == "p") {
      std::string format;
      if (!(tokens >> format >> n)) {
        throw ParseError("line " + std::to_string(line_no) + ": bad 'p' header");
      }
      continue;
    }
    if (first == "e" || first == "a") {
      if (!(tokens >> first)) throw ParseError("line " + std::to_string(line_no) + ": missing i");
    }
    Edge edge;
    try {
      std::size_t used = 0;
      edge.tail = std::stoi(first, &used) - 1;
      if (used != first.size()) throw std::invalid_argument(first);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line_no) + ": expected vertex index");
    }
    int head = 0;
    if (!(tokens >> head)) throw ParseError("line " + std::to_string(line_no) + ": missing j");
    edge.head = head - 1;
    if (!(tokens >> edge.weight)) edge.weight = 1.0;
    n = std::max({n, edge.tail + 1, edge.head + 1});
    edges.push_back(edge);
  }
  if (kind == ProblemKind::kDiCut) return Instance::dicut(n, std::move(edges));
  return Instance::maxcut(n, std::move(edges));
}

Instance load_instance(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ParseError("instance: cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_instance(text);
  const bool directed = path.size() >= 6 && path.substr(path.size() - 6) == ".arcs";
  return parse_edge_list(text, directed ? ProblemKind::kDiCut : ProblemKind::kMaxCut);
}

std::string instance_to_json(const Instance& inst) {
  json j;
  j["kind"] = std::string(to_string(inst.kind()));
  j["n"] = inst.n();
  if (inst.signed_weights()) j["signed"] = true;
  if (inst.kind() == ProblemKind::kAllEqual) {
    json clauses = json::array();
    for (const auto& c : inst.clauses()) {
      json lits = json::array();
      for (const auto& l : c.literals) lits.push_back(l.negated ? -(l.var + 1) : l.var + 1);
      clauses.push_back({{"literals", lits}, {"weight", c.weight}});
    }
    j["clauses"] = clauses;
  } else {
    json edges = json::array();
    for (const auto& e : inst.edges()) edges.push_back({e.tail + 1, e.head + 1, e.weight});
    j["edges"] = edges;
  }
  return j.dump(2);
}

namespace {

void check_cut(const Instance& inst, const Cut& y, const WeightAssignment& w) {
  if (static_cast<int>(y.size()) != inst.n()) {
    throw DimensionError("cut has " + std::to_string(y.size()) + " entries, instance has " +
                         std::to_string(inst.n()) + " vertices");
  }
  if (w.size() != inst.weight_count()) {
    throw DimensionError("weight vector has " + std::to_string(w.size()) + " entries, expected " +
                         std::to_string(inst.weight_count()));
  }
}

}  // namespace

double cut_value(const Instance& inst, const Cut& y, const WeightAssignment& w) {
  if (inst.kind() != ProblemKind::kMaxCut) throw DomainError("cut_value needs a maxcut instance");
  check_cut(inst, y, w);
  double total = 0.0;
  const auto& edges = inst.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (y[edges[e].tail] != y[edges[e].head]) total += w[e];
  }
  return total;
}

double dicut_value(const Instance& inst, const Cut& y, const WeightAssignment& w) {
  if (inst.kind() != ProblemKind::kDiCut) throw DomainError("dicut_value needs a dicut instance");
  check_cut(inst, y, w);
  double total = 0.0;
  const auto& arcs = inst.edges();
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (y[arcs[a].tail] == 1 && y[arcs[a].head] == -1) total += w[a];
  }
  return total;
}

bool clause_satisfied(const Clause& clause, const Cut& x) {
  if (clause.literals.empty()) return true;
  const int first = clause.literals.front().sign() * x[clause.literals.front().var];
  return std::all_of(clause.literals.begin(), clause.literals.end(),
                     [&](const Literal& l) { return l.sign() * x[l.var] == first; });
}

double allequal_value(const Instance& inst, const Cut& x, const WeightAssignment& w) {
  if (inst.kind() != ProblemKind::kAllEqual) {
    throw DomainError("allequal_value needs an allequal instance");
  }
  check_cut(inst, x, w);
  double total = 0.0;
  const auto& clauses = inst.clauses();
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    if (clause_satisfied(clauses[c], x)) total += w[c];
  }
  return total;
}

double objective_value(const Instance& inst, const Cut& y, const WeightAssignment& w) {
  switch (inst.kind()) {
    case ProblemKind::kMaxCut:
      return cut_value(inst, y, w);
    case ProblemKind::kDiCut:
      return dicut_value(inst, y, w);
    case ProblemKind::kAllEqual:
      return allequal_value(inst, y, w);
  }
  return 0.0;
}

std::vector<double> cut_coefficients(const Instance& inst, const Cut& y) {
  if (static_cast<int>(y.size()) != inst.n()) throw DimensionError("cut length differs from n");
  std::vector<double> c;
  c.reserve(inst.weight_count());
  switch (inst.kind()) {
    case ProblemKind::kMaxCut:
      for (const auto& e : inst.edges()) c.push_back(2.0 * (1.0 - y[e.tail] * y[e.head]));
      break;
    case ProblemKind::kDiCut:
      for (const auto& a : inst.edges()) {
        c.push_back(y[a.tail] == 1 && y[a.head] == -1 ? 4.0 : 0.0);
      }
      break;
    case ProblemKind::kAllEqual:
      for (const auto& clause : inst.clauses()) c.push_back(clause_satisfied(clause, y) ? 4.0 : 0.0);
      break;
  }
  return c;
}

}  // namespace robustcut
