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

#include "robustcut/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "robustcut/errors.hpp"

namespace robustcut {

GramFactor::GramFactor(DenseMatrix columns) : u_(std::move(columns)) {
  for (int i = 0; i < u_.cols(); ++i) {
    const double norm = u_.col(i).norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw NumericError("gram factor column " + std::to_string(i) + " has zero norm");
    }
    u_.col(i) /= norm;
  }
}

GramFactor GramFactor::collapsed(int size, int rank) {
  DenseMatrix u = DenseMatrix::Zero(std::max(rank, 1), size);
  u.row(0).setOnes();
  return GramFactor(std::move(u));
}

LpProblem LpProblem::with_shape(int rows, int cols) {
  LpProblem lp;
  lp.c = Vector::Zero(cols);
  lp.A = DenseMatrix::Zero(rows, cols);
  lp.b = Vector::Zero(rows);
  lp.sense.assign(rows, RowSense::kGreaterEqual);
  lp.lower = Vector::Zero(cols);
  lp.upper = Vector::Constant(cols, kInfinity);
  return lp;
}

namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kCostEps = 1e-11;

// One standard-form column: x_orig[var] += coef * x_std.
struct StdColumn {
  int var;
  double coef;
};

class Tableau {
 public:
  Tableau(DenseMatrix t, std::vector<int> basis) : original_(t), t_(std::move(t)), basis_(std::move(basis)) {}

  int rows() const { return static_cast<int>(t_.rows()); }
  int cols() const { return static_cast<int>(t_.cols()) - 1; }
  double rhs(int i) const { return t_(i, cols()); }
  const std::vector<int>& basis() const { return basis_; }

  /// Runs Bland's rule for the given costs; columns with barred[j] never
  /// enter. Returns false when the problem is unbounded.
  bool optimize(const Vector& cost, const std::vector<bool>& barred, int& iterations) {
    price(cost);
    bool fresh = true;
    int since_refresh = 0;
    const int refresh_every = std::max(kRefreshEvery, rows());
    while (true) {
      if (since_refresh >= refresh_every) {
        refresh(cost);
        since_refresh = 0;
        fresh = true;
      }
      int enter = -1;
      for (int j = 0; j < cols(); ++j) {
        if (!barred[j] && reduced_(j) < -kCostEps) {
          enter = j;
          break;
        }
      }
      if (enter < 0) {
        // Confirm optimality with exact reduced costs before stopping; the
        // tableau is only rebuilt when they disagree.
        if (fresh || exactly_optimal(cost, barred)) return true;
        refresh(cost);
        since_refresh = 0;
        fresh = true;
        continue;
      }
      int leave = -1;
      double best = 0.0;
      for (int i = 0; i < rows(); ++i) {
        const double a = t_(i, enter);
        if (a <= kPivotEps) continue;
        const double ratio = rhs(i) / a;
        if (leave < 0 || ratio < best - 1e-13 ||
            (ratio <= best + 1e-13 && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) {
        if (fresh) return false;
        refresh(cost);
        since_refresh = 0;
        fresh = true;
        continue;
      }
      pivot(leave, enter);
      ++iterations;
      ++since_refresh;
      fresh = false;
    }
  }

  void pivot(int row, int col) {
    t_.row(row) /= t_(row, col);
    for (int i = 0; i < rows(); ++i) {
      if (i == row) continue;
      const double f = t_(i, col);
      if (f != 0.0) t_.row(i) -= f * t_.row(row);
    }
    if (reduced_.size() == cols()) {
      const double f = reduced_(col);
      if (f != 0.0) reduced_ -= f * t_.row(row).head(cols()).transpose();
    }
    basis_[row] = col;
  }

  double entry(int i, int j) const { return t_(i, j); }

 private:
  static constexpr int kRefreshEvery = 50;

  void price(const Vector& cost) {
    reduced_ = cost;
    for (int i = 0; i < rows(); ++i) {
      const double cb = cost(basis_[i]);
      if (cb != 0.0) reduced_ -= cb * t_.row(i).head(cols()).transpose();
    }
  }

  bool exactly_optimal(const Vector& cost, const std::vector<bool>& barred) const {
    DenseMatrix b(rows(), rows());
    Vector cb(rows());
    for (int i = 0; i < rows(); ++i) {
      b.col(i) = original_.col(basis_[i]);
      cb(i) = cost(basis_[i]);
    }
    const Vector y = Eigen::PartialPivLU<DenseMatrix>(b).transpose().solve(cb);
    const Vector reduced = cost - original_.leftCols(cols()).transpose() * y;
    for (int j = 0; j < cols(); ++j) {
      if (!barred[j] && reduced(j) < -kCostEps) return false;
    }
    return true;
  }

  // Rebuilds B^-1 [A | b] from the original rows to shed accumulated error.
  void refresh(const Vector& cost) {
    DenseMatrix b(rows(), rows());
    for (int i = 0; i < rows(); ++i) b.col(i) = original_.col(basis_[i]);
    t_ = Eigen::PartialPivLU<DenseMatrix>(b).solve(original_);
    price(cost);
  }

  DenseMatrix original_;
  DenseMatrix t_;
  std::vector<int> basis_;
  Vector reduced_;
};

}  // namespace

LpSolution simplex_solve(const LpProblem& lp) {
  const int m = lp.rows();
  const int n = lp.cols();
  if (lp.c.size() != n || lp.b.size() != m || static_cast<int>(lp.sense.size()) != m ||
      lp.lower.size() != n || lp.upper.size() != n) {
    throw DimensionError("lp: inconsistent dimensions");
  }

  // Substitute every variable by nonnegative standard-form columns.
  std::vector<StdColumn> columns;
  Vector shift = Vector::Zero(n);
  std::vector<std::pair<int, double>> upper_rows;  // (std column, bound width)
  for (int j = 0; j < n; ++j) {
    const double lo = lp.lower(j);
    const double hi = lp.upper(j);
    if (lo > hi) throw InfeasibleError("lp: variable " + std::to_string(j) + " has lower > upper");
    if (std::isfinite(lo)) {
      shift(j) = lo;
      columns.push_back({j, 1.0});
      if (std::isfinite(hi)) upper_rows.emplace_back(static_cast<int>(columns.size()) - 1, hi - lo);
    } else if (std::isfinite(hi)) {
      shift(j) = hi;
      columns.push_back({j, -1.0});
    } else {
      columns.push_back({j, 1.0});
      columns.push_back({j, -1.0});
    }
  }
  const int n_struct = static_cast<int>(columns.size());
  const int m_total = m + static_cast<int>(upper_rows.size());

  DenseMatrix a_std = DenseMatrix::Zero(m_total, n_struct);
  Vector b_std(m_total);
  std::vector<RowSense> sense(m_total);
  for (int k = 0; k < n_struct; ++k) {
    a_std.block(0, k, m, 1) = columns[k].coef * lp.A.col(columns[k].var);
  }
  b_std.head(m) = lp.b - lp.A * shift;
  for (int i = 0; i < m; ++i) sense[i] = lp.sense[i];
  for (std::size_t r = 0; r < upper_rows.size(); ++r) {
    a_std(m + static_cast<int>(r), upper_rows[r].first) = 1.0;
    b_std(m + static_cast<int>(r)) = upper_rows[r].second;
    sense[m + r] = RowSense::kLessEqual;
  }
  std::vector<double> row_sign(m_total, 1.0);
  for (int i = 0; i < m_total; ++i) {
    if (b_std(i) < 0.0) {
      row_sign[i] = -1.0;
      a_std.row(i) *= -1.0;
      b_std(i) = -b_std(i);
      if (sense[i] == RowSense::kGreaterEqual) {
        sense[i] = RowSense::kLessEqual;
      } else if (sense[i] == RowSense::kLessEqual) {
        sense[i] = RowSense::kGreaterEqual;
      }
    }
  }

  // Slack / surplus / artificial columns; identity_col[i] starts basic.
  int n_slack = 0;
  int n_art = 0;
  for (auto s : sense) {
    if (s != RowSense::kEqual) ++n_slack;
    if (s != RowSense::kLessEqual) ++n_art;
  }
  const int n_cols = n_struct + n_slack + n_art;
  DenseMatrix a_full = DenseMatrix::Zero(m_total, n_cols);
  a_full.leftCols(n_struct) = a_std;
  std::vector<int> identity_col(m_total);
  std::vector<bool> artificial(n_cols, false);
  int next_slack = n_struct;
  int next_art = n_struct + n_slack;
  for (int i = 0; i < m_total; ++i) {
    if (sense[i] == RowSense::kLessEqual) {
      a_full(i, next_slack) = 1.0;
      identity_col[i] = next_slack++;
    } else {
      if (sense[i] == RowSense::kGreaterEqual) a_full(i, next_slack++) = -1.0;
      a_full(i, next_art) = 1.0;
      artificial[next_art] = true;
      identity_col[i] = next_art++;
    }
  }

  DenseMatrix t(m_total, n_cols + 1);
  t.leftCols(n_cols) = a_full;
  t.col(n_cols) = b_std;
  Tableau tableau(std::move(t), identity_col);

  LpSolution sol;
  const std::vector<bool> none_barred(n_cols, false);
  if (n_art > 0) {
    Vector phase1 = Vector::Zero(n_cols);
    for (int j = 0; j < n_cols; ++j) {
      if (artificial[j]) phase1(j) = 1.0;
    }
    tableau.optimize(phase1, none_barred, sol.iterations);
    double infeasibility = 0.0;
    for (int i = 0; i < m_total; ++i) {
      if (artificial[tableau.basis()[i]]) infeasibility += tableau.rhs(i);
    }
    const double scale = 1.0 + b_std.cwiseAbs().maxCoeff();
    if (infeasibility > 1e-9 * scale) {
      throw InfeasibleError("lp: infeasible (phase-one residual " + std::to_string(infeasibility) +
                            ")");
    }
    // Drive zero-level artificials out of the basis where possible.
    for (int i = 0; i < m_total; ++i) {
      if (!artificial[tableau.basis()[i]]) continue;
      for (int j = 0; j < n_cols; ++j) {
        if (!artificial[j] && std::abs(tableau.entry(i, j)) > 1e-9) {
          tableau.pivot(i, j);
          break;
        }
      }
    }
  }

  Vector cost = Vector::Zero(n_cols);
  for (int k = 0; k < n_struct; ++k) cost(k) = columns[k].coef * lp.c(columns[k].var);
  std::vector<bool> barred(artificial);
  if (!tableau.optimize(cost, barred, sol.iterations)) {
    throw UnboundedError("lp: objective unbounded below");
  }

  // Recompute primal and dual from the final basis for accuracy.
  const auto& basis = tableau.basis();
  DenseMatrix basis_matrix(m_total, m_total);
  Vector basis_cost(m_total);
  for (int i = 0; i < m_total; ++i) {
    basis_matrix.col(i) = a_full.col(basis[i]);
    basis_cost(i) = cost(basis[i]);
  }
  Eigen::PartialPivLU<DenseMatrix> lu(basis_matrix);
  Vector x_basic = lu.solve(b_std);
  Vector y_std = lu.transpose().solve(basis_cost);

  Vector x_std = Vector::Zero(n_cols);
  for (int i = 0; i < m_total; ++i) x_std(basis[i]) = std::max(0.0, x_basic(i));
  sol.x = shift;
  for (int k = 0; k < n_struct; ++k) sol.x(columns[k].var) += columns[k].coef * x_std(k);
  sol.value = lp.c.dot(sol.x);
  sol.dual.resize(m);
  for (int i = 0; i < m; ++i) sol.dual(i) = row_sign[i] * y_std(i);
  sol.reduced_costs = lp.c - lp.A.transpose() * sol.dual;
  return sol;
}

double lp_dual_objective(const LpProblem& lp, const LpSolution& sol) {
  double total = lp.b.dot(sol.dual);
  for (int j = 0; j < lp.cols(); ++j) {
    const double r = sol.reduced_costs(j);
    if (r > 0.0 && std::isfinite(lp.lower(j))) {
      total += r * lp.lower(j);
    } else if (r < 0.0 && std::isfinite(lp.upper(j))) {
      total += r * lp.upper(j);
    }
  }
  return total;
}

GramFactor cholesky_gram(const DenseMatrix& y, double tol) {
  const int n = static_cast<int>(y.rows());
  if (y.cols() != n) throw DimensionError("cholesky_gram: matrix is not square");
  if (n == 0) throw DimensionError("cholesky_gram: empty matrix");
  if ((y - y.transpose()).cwiseAbs().maxCoeff() > tol) {
    throw NumericError("cholesky_gram: matrix is not symmetric");
  }
  for (int i = 0; i < n; ++i) {
    if (std::abs(y(i, i) - 1.0) > tol) {
      throw NumericError("cholesky_gram: diagonal entry " + std::to_string(i) + " is " +
                         std::to_string(y(i, i)) + ", expected 1");
    }
  }

  DenseMatrix work = 0.5 * (y + y.transpose());
  DenseMatrix lower = DenseMatrix::Zero(n, n);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;

  int rank = 0;
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i) {
      if (work(i, i) > work(p, p)) p = i;
    }
    if (work(p, p) <= tol) {
      if (work(p, p) < -tol) {
        throw NumericError("cholesky_gram: negative pivot " + std::to_string(work(p, p)) +
                           " at step " + std::to_string(k));
      }
      const double rest = work.bottomRightCorner(n - k, n - k).cwiseAbs().maxCoeff();
      if (rest > 10.0 * tol) {
        throw NumericError("cholesky_gram: matrix is not PSD (remainder " + std::to_string(rest) +
                           " after pivot " + std::to_string(k) + ")");
      }
      break;
    }
    if (p != k) {
      work.row(k).swap(work.row(p));
      work.col(k).swap(work.col(p));
      lower.row(k).swap(lower.row(p));
      std::swap(perm[k], perm[p]);
    }
    const double pivot = std::sqrt(work(k, k));
    lower(k, k) = pivot;
    for (int i = k + 1; i < n; ++i) lower(i, k) = work(i, k) / pivot;
    for (int j = k + 1; j < n; ++j) {
      for (int i = j; i < n; ++i) {
        work(i, j) -= lower(i, k) * lower(j, k);
        work(j, i) = work(i, j);
      }
    }
    ++rank;
  }

  DenseMatrix u(rank, n);
  for (int a = 0; a < n; ++a) u.col(perm[a]) = lower.row(a).head(rank).transpose();
  return GramFactor(std::move(u));
}

DenseMatrix sqrt_psd(const DenseMatrix& q, double tol) {
  if (q.rows() != q.cols()) throw DimensionError("sqrt_psd: matrix is not square");
  if (q.size() == 0) return q;
  const double scale = std::max(1.0, q.cwiseAbs().maxCoeff());
  if ((q - q.transpose()).cwiseAbs().maxCoeff() > tol * scale) {
    throw NumericError("sqrt_psd: matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(0.5 * (q + q.transpose()));
  if (eig.info() != Eigen::Success) throw NumericError("sqrt_psd: eigendecomposition failed");
  Vector values = eig.eigenvalues();
  for (int i = 0; i < values.size(); ++i) {
    if (values(i) < -tol * scale) {
      throw NumericError("sqrt_psd: negative eigenvalue " + std::to_string(values(i)));
    }
    values(i) = std::sqrt(std::max(0.0, values(i)));
  }
  const DenseMatrix& v = eig.eigenvectors();
  DenseMatrix s = v * values.asDiagonal() * v.transpose();
  return 0.5 * (s + s.transpose());
}

}  // namespace robustcut
