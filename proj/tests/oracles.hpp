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

// Small independent reference routines used to derive expected values.
// They deliberately avoid the library's solvers.

#pragma once

#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace testref {

inline std::string data_path(const std::string& name) {
  const char* dir = std::getenv("ROBUSTCUT_DATA");
  return std::string(dir ? dir : "tests/data") + "/" + name;
}

inline std::string tmp_path(const std::string& name) {
  const char* dir = std::getenv("ROBUSTCUT_TMP");
  return std::string(dir ? dir : "/tmp") + "/" + name;
}

struct Arc {
  int a;
  int b;
  double w;
};

// Max over all 2^n sign vectors of sum_{crossing edges} w.
inline double brute_max_cut(int n, const std::vector<Arc>& edges) {
  double best = 0.0;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    double v = 0.0;
    for (const auto& e : edges) {
      if (((mask >> e.a) & 1U) != ((mask >> e.b) & 1U)) v += e.w;
    }
    best = std::max(best, v);
  }
  return best;
}

// Max over all 2^n assignments of arcs leaving the set {i : bit i set}.
inline double brute_max_dicut(int n, const std::vector<Arc>& arcs) {
  double best = 0.0;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    double v = 0.0;
    for (const auto& e : arcs) {
      if (((mask >> e.a) & 1U) && !((mask >> e.b) & 1U)) v += e.w;
    }
    best = std::max(best, v);
  }
  return best;
}

// Golden-section search for the minimum of a unimodal f on [lo, hi].
inline double golden_min(const std::function<double(double)>& f, double lo, double hi,
                         double* argmin = nullptr) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  for (int i = 0; i < 200; ++i) {
    if (f(c) < f(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - g * (b - a);
    d = a + g * (b - a);
  }
  if (argmin) *argmin = (a + b) / 2.0;
  return f((a + b) / 2.0);
}

}  // namespace testref
