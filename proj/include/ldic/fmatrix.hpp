#pragma once

// Dense linear algebra over F_q. Rows and columns are 0-based here; the
// index-coding layers above translate from the 1-based labels they expose.
//
// All elimination pivots on the lowest available index, so every output
// (solutions, null-space bases, basis extensions) is deterministic.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ldic/error.hpp"
#include "ldic/gfield.hpp"

namespace ldic {

class FVector {
 public:
  FVector() = default;
  FVector(Field field, std::size_t n) : field_(std::move(field)), v_(n, 0) {}
  FVector(Field field, std::vector<Felt> entries) : field_(std::move(field)), v_(std::move(entries)) {
    for (Felt e : v_)
      if (!field_.contains(e)) throw Error(Errc::InvalidInput, "vector entry outside " + field_.name());
  }

  /// Standard basis vector e_idx (0-based).
  static FVector unit(const Field& field, std::size_t n, std::size_t idx) {
    FVector e(field, n);
    e.v_.at(idx) = 1;
    return e;
  }

  const Field& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return v_.size(); }
  Felt operator[](std::size_t i) const { return v_[i]; }
  Felt& operator[](std::size_t i) { return v_[i]; }
  const std::vector<Felt>& entries() const noexcept { return v_; }

  /// Indices of the nonzero entries, ascending.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (v_[i] != 0) s.push_back(i);
    return s;
  }
  std::size_t weight() const {
    std::size_t w = 0;
    for (Felt e : v_) w += e != 0;
    return w;
  }
  bool is_zero() const {
    for (Felt e : v_)
      if (e) return false;
    return true;
  }

  FVector& operator+=(const FVector& o) {
    check_same(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] = field_.add(v_[i], o.v_[i]);
    return *this;
  }
  FVector& operator-=(const FVector& o) {
    check_same(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] = field_.sub(v_[i], o.v_[i]);
    return *this;
  }
  FVector scaled(Felt a) const {
    FVector r = *this;
    for (Felt& e : r.v_) e = field_.mul(e, a);
    return r;
  }
  friend FVector operator+(FVector a, const FVector& b) { return a += b; }
  friend FVector operator-(FVector a, const FVector& b) { return a -= b; }
  friend bool operator==(const FVector& a, const FVector& b) {
    return a.field_ == b.field_ && a.v_ == b.v_;
  }

  Felt dot(const FVector& o) const {
    check_same(o);
    Felt s = 0;
    for (std::size_t i = 0; i < v_.size(); ++i) s = field_.add(s, field_.mul(v_[i], o.v_[i]));
    return s;
  }

 private:
  void check_same(const FVector& o) const {
    if (o.v_.size() != v_.size()) throw Error(Errc::DimensionMismatch, "vector lengths differ");
    if (!(o.field_ == field_)) throw Error(Errc::MixedFields, "vectors over different fields");
  }

  Field field_;
  std::vector<Felt> v_;
};

class FMatrix {
 public:
  FMatrix() = default;
  FMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  FMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<Felt> row_major)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (data_.size() != rows_ * cols_)
      throw Error(Errc::DimensionMismatch, "entry count " + std::to_string(data_.size()) + " != " +
                                               std::to_string(rows_) + "x" + std::to_string(cols_));
    for (Felt e : data_)
      if (!field_.contains(e)) throw Error(Errc::InvalidInput, "matrix entry outside " + field_.name());
  }

  static FMatrix identity(const Field& field, std::size_t n) {
    FMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Matrix whose columns are `cols`; `rows` is needed when `cols` is empty.
  static FMatrix from_columns(const Field& field, std::size_t rows, std::span<const FVector> cols) {
    FMatrix m(field, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
  }

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Felt>& entries() const noexcept { return data_; }

  Felt operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Felt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  FVector column(std::size_t c) const {
    FVector v(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  FVector row(std::size_t r) const {
    return FVector(field_, std::vector<Felt>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_));
  }
  void set_column(std::size_t c, const FVector& v) {
    if (v.size() != rows_) throw Error(Errc::DimensionMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  FMatrix select_columns(std::span<const std::size_t> idx) const {
    FMatrix m(field_, rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (std::size_t r = 0; r < rows_; ++r) m(r, j) = (*this)(r, idx[j]);
    return m;
  }
  FMatrix select_rows(std::span<const std::size_t> idx) const {
    FMatrix m(field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(idx[i], c);
    return m;
  }

  FMatrix transpose() const {
    FMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  FVector operator*(const FVector& x) const {
    if (x.size() != cols_) throw Error(Errc::DimensionMismatch, "matrix-vector product");
    FVector y(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      Felt s = 0;
      for (std::size_t c = 0; c < cols_; ++c) s = field_.add(s, field_.mul((*this)(r, c), x[c]));
      y[r] = s;
    }
    return y;
  }

  FMatrix operator*(const FMatrix& b) const {
    if (b.rows_ != cols_) throw Error(Errc::DimensionMismatch, "matrix product");
    FMatrix p(field_, rows_, b.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Felt a = (*this)(r, k);
        if (a == 0) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) p(r, c) = field_.add(p(r, c), field_.mul(a, b(k, c)));
      }
    return p;
  }

  friend bool operator==(const FMatrix& a, const FMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Felt> data_;
};

/// Reduced row echelon form plus the pivot column of each nonzero row.
struct Echelon {
  FMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Columns are scanned left to right and the pivot
/// row is the lowest-indexed remaining row with a nonzero entry. Only the
/// first `scan_cols` columns are eligible as pivots (all by default).
inline Echelon row_reduce(FMatrix a, std::optional<std::size_t> scan_cols = std::nullopt) {
  const Field& f = a.field();
  const std::size_t limit = scan_cols.value_or(a.cols());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < limit && row < a.rows(); ++c) {
    std::size_t p = row;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(row, k));
    const Felt s = f.inv(a(row, c));
    for (std::size_t k = 0; k < a.cols(); ++k) a(row, k) = f.mul(a(row, k), s);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, c) == 0) continue;
      const Felt m = a(r, c);
      for (std::size_t k = 0; k < a.cols(); ++k) a(r, k) = f.sub(a(r, k), f.mul(m, a(row, k)));
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

inline std::size_t rank(const FMatrix& a) { return row_reduce(a).pivots.size(); }

inline std::size_t rank(std::span<const FVector> vectors) {
  if (vectors.empty()) return 0;
  return rank(FMatrix::from_columns(vectors.front().field(), vectors.front().size(), vectors));
}

/// Some x with A x = b, or nullopt if the system is inconsistent. Free
/// variables are set to zero.
inline std::optional<FVector> solve(const FMatrix& a, const FVector& b) {
  if (b.size() != a.rows()) throw Error(Errc::DimensionMismatch, "solve: rhs length != rows");
  FMatrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  Echelon e = row_reduce(std::move(aug), a.cols());
  const std::size_t rk = e.pivots.size();
  for (std::size_t r = rk; r < a.rows(); ++r)
    if (e.reduced(r, a.cols()) != 0) return std::nullopt;
  FVector x(a.field(), a.cols());
  for (std::size_t i = 0; i < rk; ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
  return x;
}

/// solve(A, b) for every column b of B with a single elimination.
inline std::vector<std::optional<FVector>> solve_many(const FMatrix& a, const FMatrix& b) {
  if (b.rows() != a.rows()) throw Error(Errc::DimensionMismatch, "solve: rhs length != rows");
  FMatrix aug(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, a.cols() + c) = b(r, c);
  }
  Echelon e = row_reduce(std::move(aug), a.cols());
  const std::size_t rk = e.pivots.size();
  std::vector<std::optional<FVector>> out;
  for (std::size_t t = 0; t < b.cols(); ++t) {
    const std::size_t col = a.cols() + t;
    bool consistent = true;
    for (std::size_t r = rk; r < a.rows() && consistent; ++r) consistent = e.reduced(r, col) == 0;
    if (!consistent) {
      out.emplace_back(std::nullopt);
      continue;
    }
    FVector x(a.field(), a.cols());
    for (std::size_t i = 0; i < rk; ++i) x[e.pivots[i]] = e.reduced(i, col);
    out.emplace_back(std::move(x));
  }
  return out;
}

/// Basis of {x : A x = 0}, one vector per free column in ascending order.
inline std::vector<FVector> null_space_basis(const FMatrix& a) {
  Echelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<FVector> basis;
  const Field& f = a.field();
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    FVector v(f, a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

struct SpanWitness {
  bool member = false;
  std::vector<Felt> coeffs;  ///< target = sum coeffs[k] * vectors[k] when member
};

inline SpanWitness in_span(std::span<const FVector> vectors, const FVector& target) {
  for (const auto& v : vectors)
    if (v.size() != target.size()) throw Error(Errc::DimensionMismatch, "in_span: length mismatch");
  auto a = FMatrix::from_columns(target.field(), target.size(), vectors);
  auto x = solve(a, target);
  if (!x) return {};
  return {true, x->entries()};
}

/// Vectors taken, in order, from `spanning` that extend the linearly
/// independent set `independent` to a basis of span(independent, spanning).
inline std::vector<FVector> extend_basis(std::span<const FVector> independent, std::span<const FVector> spanning) {
  if (rank(independent) != independent.size())
    throw Error(Errc::DependentInput, "extend_basis: input set is linearly dependent");
  std::vector<FVector> current(independent.begin(), independent.end());
  std::vector<FVector> added;
  for (const auto& v : spanning) {
    current.push_back(v);
    if (rank(current) == current.size()) {
      added.push_back(v);
    } else {
      current.pop_back();
    }
  }
  return added;
}

}  // namespace ldic
