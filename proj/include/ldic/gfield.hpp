#pragma once

// Finite fields F_q: prime q below 2^16 (modular arithmetic) and GF(2^k),
// k <= 8 (log/antilog tables). Elements are canonical integers in [0, q).

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ldic/error.hpp"

namespace ldic {

using Felt = std::uint32_t;

enum class FieldKind { Prime, BinaryExtension };

namespace detail {

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline int poly_degree(std::uint32_t p) {
  int d = -1;
  while (p) {
    p >>= 1;
    ++d;
  }
  return d;
}

// Remainder of a(x) / b(x) over GF(2).
inline std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
  const int db = poly_degree(b);
  for (int da = poly_degree(a); da >= db; da = poly_degree(a)) a ^= b << (da - db);
  return a;
}

// Carry-less product of a and b reduced modulo `mod` (degree k).
inline std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t mod, int k) {
  std::uint32_t r = 0;
  while (b) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (1u << k)) a ^= mod;
  }
  return r;
}

}  // namespace detail

/// True iff the GF(2) polynomial encoded by `poly` (bit i = coefficient of x^i)
/// has degree >= 1 and no factor of lower positive degree.
inline bool is_irreducible_gf2(std::uint32_t poly) {
  const int k = detail::poly_degree(poly);
  if (k < 1) return false;
  for (std::uint32_t d = 2; detail::poly_degree(d) <= k / 2; ++d)
    if (detail::poly_mod(poly, d) == 0) return false;
  return true;
}

/// Lexicographically smallest irreducible polynomial of degree k over GF(2).
/// k=2: x^2+x+1 (7), k=3: 11, k=4: 19, k=5: 37, k=6: 67, k=7: 131, k=8: 283.
inline std::uint32_t default_reduction_poly(int k) {
  for (std::uint32_t p = 1u << k; p < (2u << k); ++p)
    if (is_irreducible_gf2(p)) return p;
  throw Error(Errc::NonPrimePower, "no irreducible polynomial of degree " + std::to_string(k));
}

/// Immutable, cheaply copyable handle to a finite field.
class Field {
 public:
  static constexpr std::uint32_t kMaxPrime = 1u << 16;
  static constexpr int kMaxExtensionDegree = 8;

  /// Prime q (< 2^16) or q = 2^k (2 <= k <= 8) with an optional reduction
  /// polynomial; the default polynomial is used when `poly` is empty or 0.
  static Field make(std::uint32_t q, std::optional<std::uint32_t> poly = std::nullopt) {
    auto impl = std::make_shared<Impl>();
    impl->q = q;
    if (detail::is_prime(q) && q < kMaxPrime) {
      if (poly && *poly != 0)
        throw Error(Errc::InvalidInput, "prime field GF(" + std::to_string(q) + ") takes no polynomial");
      impl->kind = FieldKind::Prime;
      impl->characteristic = q;
      return Field(std::move(impl));
    }
    int k = 0;
    while (k <= kMaxExtensionDegree && (1u << k) < q) ++k;
    if (q < 4 || k > kMaxExtensionDegree || (1u << k) != q)
      throw Error(Errc::NonPrimePower, "unsupported field order " + std::to_string(q));

    const std::uint32_t p = (poly && *poly != 0) ? *poly : default_reduction_poly(k);
    if (detail::poly_degree(p) != k)
      throw Error(Errc::ReduciblePoly, "polynomial " + std::to_string(p) + " does not have degree " + std::to_string(k));
    if (!is_irreducible_gf2(p))
      throw Error(Errc::ReduciblePoly, "polynomial " + std::to_string(p) + " factors over GF(2)");

    impl->kind = FieldKind::BinaryExtension;
    impl->characteristic = 2;
    impl->poly = p;
    impl->degree = k;
    impl->build_tables();
    return Field(std::move(impl));
  }

  Field() : Field(make(2)) {}

  std::uint32_t q() const noexcept { return impl_->q; }
  std::uint32_t poly() const noexcept { return impl_->poly; }
  FieldKind kind() const noexcept { return impl_->kind; }
  std::uint32_t characteristic() const noexcept { return impl_->characteristic; }
  bool contains(Felt a) const noexcept { return a < impl_->q; }

  Felt add(Felt a, Felt b) const noexcept {
    if (impl_->kind == FieldKind::BinaryExtension) return a ^ b;
    const Felt s = a + b;
    return s >= impl_->q ? s - impl_->q : s;
  }
  Felt neg(Felt a) const noexcept {
    if (impl_->kind == FieldKind::BinaryExtension || a == 0) return a;
    return impl_->q - a;
  }
  Felt sub(Felt a, Felt b) const noexcept { return add(a, neg(b)); }

  Felt mul(Felt a, Felt b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (impl_->kind == FieldKind::Prime)
      return static_cast<Felt>((static_cast<std::uint64_t>(a) * b) % impl_->q);
    return impl_->exp[impl_->log[a] + impl_->log[b]];
  }

  Felt inv(Felt a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (impl_->kind == FieldKind::BinaryExtension) return impl_->exp[(impl_->q - 1) - impl_->log[a]];
    // Extended Euclid on (a, q).
    std::int64_t t = 0, new_t = 1, r = impl_->q, new_r = a;
    while (new_r != 0) {
      const std::int64_t quot = r / new_r;
      t = std::exchange(new_t, t - quot * new_t);
      r = std::exchange(new_r, r - quot * new_r);
    }
    if (t < 0) t += impl_->q;
    return static_cast<Felt>(t);
  }

  Felt div(Felt a, Felt b) const { return mul(a, inv(b)); }

  Felt pow(Felt a, std::uint64_t e) const noexcept {
    Felt result = 1;
    while (e) {
      if (e & 1u) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  std::string name() const {
    if (impl_->kind == FieldKind::Prime) return "GF(" + std::to_string(impl_->q) + ")";
    return "GF(" + std::to_string(impl_->q) + ",poly=" + std::to_string(impl_->poly) + ")";
  }

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.impl_ == b.impl_ || (a.q() == b.q() && a.poly() == b.poly());
  }

 private:
  struct Impl {
    std::uint32_t q = 2;
    FieldKind kind = FieldKind::Prime;
    std::uint32_t characteristic = 2;
    std::uint32_t poly = 0;
    int degree = 1;
    std::vector<std::uint16_t> log;
    std::vector<Felt> exp;

    void build_tables() {
      // Find a generator of the multiplicative group; the reduction
      // polynomial need not be primitive, so x itself may not be one.
      for (Felt g = 2; g < q; ++g) {
        std::vector<Felt> powers;
        powers.reserve(q - 1);
        Felt v = 1;
        bool full = true;
        for (std::uint32_t i = 0; i < q - 1; ++i) {
          if (i > 0 && v == 1) {
            full = false;
            break;
          }
          powers.push_back(v);
          v = detail::poly_mulmod(v, g, poly, degree);
        }
        if (!full || v != 1) continue;
        exp.assign(2 * (q - 1), 0);
        log.assign(q, 0);
        for (std::uint32_t i = 0; i < q - 1; ++i) {
          exp[i] = exp[i + q - 1] = powers[i];
          log[powers[i]] = static_cast<std::uint16_t>(i);
        }
        return;
      }
    }
  };

  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

enum class ArithOp { Add, Sub, Mul, Neg, Inv };

/// Single-operation entry point. `b` is ignored for unary operations.
inline Felt field_arith(const Field& f, ArithOp op, Felt a, std::optional<Felt> b = std::nullopt) {
  if (!f.contains(a) || (b && !f.contains(*b)))
    throw Error(Errc::InvalidInput, "operand outside " + f.name());
  const bool binary = op == ArithOp::Add || op == ArithOp::Sub || op == ArithOp::Mul;
  if (binary && !b) throw Error(Errc::InvalidInput, "binary operation needs two operands");
  switch (op) {
    case ArithOp::Add: return f.add(a, *b);
    case ArithOp::Sub: return f.sub(a, *b);
    case ArithOp::Mul: return f.mul(a, *b);
    case ArithOp::Neg: return f.neg(a);
    case ArithOp::Inv: return f.inv(a);
  }
  return 0;
}

}  // namespace ldic
