#pragma once

// Exact linear programming: two-phase primal simplex with Bland's rule over
// arbitrary-precision rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ldic/error.hpp"
#include "ldic/rational.hpp"

namespace ldic {

using BigRational = boost::multiprecision::cpp_rational;

enum class Sense { LessEq, Equal, GreaterEq };

/// minimise objective . x subject to rows and x >= 0.
struct LinearProgram {
  struct Row {
    std::vector<BigRational> coeffs;
    Sense sense = Sense::LessEq;
    BigRational rhs;
  };
  std::size_t num_vars = 0;
  std::vector<BigRational> objective;
  std::vector<Row> rows;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  BigRational value;
  std::vector<BigRational> x;
};

inline Rational to_rational(const BigRational& v) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(v);
  const cpp_int den = boost::multiprecision::denominator(v);
  const cpp_int lim = std::numeric_limits<std::int64_t>::max();
  if (abs(num) > lim || den > lim) throw Error(Errc::TooLarge, "rational exceeds 64-bit range");
  return Rational(num.convert_to<std::int64_t>(), den.convert_to<std::int64_t>());
}

namespace detail {

class Tableau {
 public:
  Tableau(std::vector<std::vector<BigRational>> a, std::vector<std::size_t> basis, std::size_t cols)
      : a_(std::move(a)), basis_(std::move(basis)), cols_(cols) {}

  /// Installs the reduced-cost row for `cost` (length cols).
  void set_cost(const std::vector<BigRational>& cost) {
    obj_.assign(cols_ + 1, 0);
    for (std::size_t j = 0; j < cols_; ++j) obj_[j] = cost[j];
    for (std::size_t i = 0; i < a_.size(); ++i) {
      const BigRational cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) obj_[j] -= cb * a_[i][j];
    }
  }

  /// Runs to optimality over the columns flagged in `allowed`. Returns false
  /// when the objective is unbounded below.
  bool run(const std::vector<char>& allowed) {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j)
        if (allowed[j] && obj_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == cols_) return true;
      std::size_t leave = a_.size();
      BigRational best;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i][enter] <= 0) continue;
        BigRational ratio = a_[i][cols_] / a_[i][enter];
        if (leave == a_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == a_.size()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const BigRational p = a_[r][c];
    for (auto& v : a_[r]) v /= p;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const BigRational m = a_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) a_[i][j] -= m * a_[r][j];
    }
    if (!obj_.empty() && obj_[c] != 0) {
      const BigRational m = obj_[c];
      for (std::size_t j = 0; j <= cols_; ++j) obj_[j] -= m * a_[r][j];
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  BigRational value() const { return -obj_[cols_]; }
  std::size_t rows() const { return a_.size(); }
  std::size_t basic(std::size_t r) const { return basis_[r]; }
  const BigRational& at(std::size_t r, std::size_t c) const { return a_[r][c]; }
  const BigRational& rhs(std::size_t r) const { return a_[r][cols_]; }

 private:
  std::vector<std::vector<BigRational>> a_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
  std::vector<BigRational> obj_;
};

}  // namespace detail

inline LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  const std::size_t m = lp.rows.size();
  if (lp.objective.size() != n) throw Error(Errc::DimensionMismatch, "objective length != number of variables");

  // Column layout: structural | one slack per inequality | one artificial
  // per row that lacks a ready basic slack.
  std::vector<std::vector<BigRational>> rows(m);
  std::vector<Sense> sense(m);
  std::size_t slacks = 0, artificials = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lp.rows[i];
    if (row.coeffs.size() != n) throw Error(Errc::DimensionMismatch, "constraint length != number of variables");
    rows[i] = row.coeffs;
    rows[i].push_back(row.rhs);
    sense[i] = row.sense;
    if (row.rhs < 0) {
      for (auto& v : rows[i]) v = -v;
      if (sense[i] == Sense::LessEq) sense[i] = Sense::GreaterEq;
      else if (sense[i] == Sense::GreaterEq) sense[i] = Sense::LessEq;
    }
    if (sense[i] != Sense::Equal) ++slacks;
    if (sense[i] != Sense::LessEq) ++artificials;
  }
  const std::size_t cols = n + slacks + artificials;
  std::vector<std::vector<BigRational>> a(m, std::vector<BigRational>(cols + 1, 0));
  std::vector<std::size_t> basis(m);
  std::size_t next_slack = n, next_art = n + slacks;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
    a[i][cols] = rows[i][n];
    if (sense[i] == Sense::LessEq) {
      a[i][next_slack] = 1;
      basis[i] = next_slack++;
    } else {
      if (sense[i] == Sense::GreaterEq) a[i][next_slack++] = -1;
      a[i][next_art] = 1;
      basis[i] = next_art++;
    }
  }

  detail::Tableau t(std::move(a), std::move(basis), cols);
  std::vector<char> all(cols, 1), structural(cols, 1);
  for (std::size_t j = n + slacks; j < cols; ++j) structural[j] = 0;

  if (artificials > 0) {
    std::vector<BigRational> phase1(cols, 0);
    for (std::size_t j = n + slacks; j < cols; ++j) phase1[j] = 1;
    t.set_cost(phase1);
    t.run(all);
    if (t.value() != 0) return {LpStatus::Infeasible, 0, {}};
    // Pivot zero-valued artificials out of the basis; rows where that is
    // impossible are redundant.
    for (std::size_t r = 0; r < t.rows();) {
      if (t.basic(r) < n + slacks) {
        ++r;
        continue;
      }
      std::size_t c = 0;
      while (c < n + slacks && t.at(r, c) == 0) ++c;
      if (c < n + slacks) {
        t.pivot(r, c);
        ++r;
      } else {
        t.drop_row(r);
      }
    }
  }

  std::vector<BigRational> cost(cols, 0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = lp.objective[j];
  t.set_cost(cost);
  if (!t.run(structural)) return {LpStatus::Unbounded, 0, {}};

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.value = t.value();
  sol.x.assign(n, 0);
  for (std::size_t r = 0; r < t.rows(); ++r)
    if (t.basic(r) < n) sol.x[t.basic(r)] = t.rhs(r);
  return sol;
}

}  // namespace ldic
