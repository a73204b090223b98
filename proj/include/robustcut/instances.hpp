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

// Problem instances (Max-Cut, Max-DiCut, Max k-AllEqual), cuts, weight
// vectors, and the exact combinatorial objectives.
//
// Vertices are 0-based in memory and 1-based in files. A weight vector is
// indexed like the instance's edge (maxcut), arc (dicut) or clause (allequal)
// list; every uncertainty set lives in that coordinate space.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace robustcut {

enum class ProblemKind { kMaxCut, kDiCut, kAllEqual };

std::string_view to_string(ProblemKind kind);
ProblemKind problem_kind_from_string(std::string_view name);

/// Undirected edge (tail < head) or directed arc tail -> head.
struct Edge {
  int tail = 0;
  int head = 0;
  double weight = 0.0;
};

struct Literal {
  int var = 0;
  bool negated = false;
  int sign() const { return negated ? -1 : 1; }
};

/// AllEqual clause l_1 == l_2 == ... == l_k.
struct Clause {
  std::vector<Literal> literals;
  double weight = 0.0;
};

/// One weight per edge / arc / clause, in instance order.
using WeightAssignment = std::vector<double>;

/// Sign vector in {-1, +1}^n.
class Cut {
 public:
  Cut() = default;
  explicit Cut(std::vector<int> signs);

  static Cut all_plus(std::size_t n) { return Cut(std::vector<int>(n, 1)); }

  std::size_t size() const { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  const std::vector<int>& signs() const { return signs_; }
  Cut flipped() const;

  friend bool operator==(const Cut&, const Cut&) = default;

 private:
  std::vector<int> signs_;
};

class Instance {
 public:
  static Instance maxcut(int n, std::vector<Edge> edges, bool signed_weights = false);
  static Instance dicut(int n, std::vector<Edge> arcs, bool signed_weights = false);
  static Instance allequal(int n, std::vector<Clause> clauses, bool signed_weights = false);

  ProblemKind kind() const { return kind_; }
  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  /// Clause arity k (allequal only, 0 otherwise).
  int arity() const { return arity_; }
  bool signed_weights() const { return signed_; }

  /// Number of weight coordinates (edges, arcs or clauses).
  std::size_t weight_count() const;
  WeightAssignment nominal_weights() const;
  /// Number of unit vectors in the relaxation: n, or n + 1 for dicut where
  /// column 0 is the reference vector u_0.
  int vector_count() const { return kind_ == ProblemKind::kDiCut ? n_ + 1 : n_; }

 private:
  Instance() = default;
  void validate() const;

  ProblemKind kind_ = ProblemKind::kMaxCut;
  int n_ = 0;
  int arity_ = 0;
  bool signed_ = false;
  std::vector<Edge> edges_;
  std::vector<Clause> clauses_;
};

/// Parses the JSON instance schema.
Instance parse_instance(std::string_view text);

/// Parses plain `i j w` lines (weight optional, `#`/`c` comments, optional
/// DIMACS `p` header giving n and `e`/`a` line prefixes).
Instance parse_edge_list(std::string_view text, ProblemKind kind);

/// Reads a file; JSON when the first non-blank character is '{'.
Instance load_instance(const std::string& path);

/// Canonical JSON text (1-based), round-trips through parse_instance.
std::string instance_to_json(const Instance& inst);

/// 1/2 sum_{i<j} w_ij (1 - y_i y_j).
double cut_value(const Instance& inst, const Cut& y, const WeightAssignment& w);

/// Weight of arcs with y_tail = +1 and y_head = -1.
double dicut_value(const Instance& inst, const Cut& y, const WeightAssignment& w);

bool clause_satisfied(const Clause& clause, const Cut& x);

/// Weighted count of satisfied clauses.
double allequal_value(const Instance& inst, const Cut& x, const WeightAssignment& w);

/// Dispatches on the instance kind.
double objective_value(const Instance& inst, const Cut& y, const WeightAssignment& w);

/// Coefficients c with objective_value(inst, y, w) == c.w / 4 for every w.
///
/// For maxcut c_e = 2 (1 - y_i y_j): the pair (i,j) appears twice in the
/// n^2 vectorization of W, and c_e is the sum of both copies, so c.w / 4 is
/// the flattened (1 - y)^T vec(W) / 4.
std::vector<double> cut_coefficients(const Instance& inst, const Cut& y);

}  // namespace robustcut
