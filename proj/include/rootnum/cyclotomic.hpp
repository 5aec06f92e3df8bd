#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rootnum/errors.hpp"
#include "rootnum/rational.hpp"

namespace rootnum {

/// Polynomial with arbitrary-precision integer coefficients, lowest degree
/// first. The zero polynomial has an empty coefficient vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly one() { return IntPoly({BigInt(1)}); }
  /// X^n - 1
  static IntPoly x_pow_minus_one(long n);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(long i) const {
    return (i >= 0 && i < static_cast<long>(c_.size())) ? c_[i] : BigInt(0);
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.c_ == b.c_;
  }

  /// Exact division by a monic divisor. Returns the quotient when the
  /// remainder is zero, nullopt otherwise. Throws NonMonic on a non-monic
  /// divisor.
  static std::optional<IntPoly> divide_exact(const IntPoly& num,
                                             const IntPoly& den);

  std::string str() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

/// The d-th cyclotomic polynomial, computed exactly and memoized.
IntPoly cyclotomic_poly(long d);

long euler_phi(long n);

/// Factors a monic integer polynomial whose roots are all roots of unity as a
/// product of cyclotomic polynomials. `root_orders` lists the candidate
/// orders. Returns the sorted list of (d, multiplicity) on success, nullopt
/// when p is not such a product.
std::optional<std::vector<std::pair<long, long>>> char_poly_factorization(
    const IntPoly& p, const std::vector<long>& root_orders);

/// An exact element of Q(zeta_m), stored as rational coordinates in the
/// power basis 1, zeta_m, ..., zeta_m^{phi(m)-1} of Q[X]/(Phi_m(X)).
/// Representation in this basis is unique, so equality after merging
/// conductors is coordinate comparison. Immutable.
class CycNum {
 public:
  CycNum() : m_(1), c_{Rat(0)} {}
  static CycNum from_rat(const Rat& r) {
    CycNum z;
    z.c_[0] = r;
    return z;
  }
  static CycNum zero() { return CycNum(); }
  static CycNum one() { return from_rat(Rat(1)); }

  long conductor() const { return m_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  CycNum operator-() const;
  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) {
    return !(a == b);
  }

  CycNum conjugate() const;  // zeta_m -> zeta_m^{-1}
  CycNum scaled(const Rat& r) const;

  /// Embeds into Q(zeta_target), target a multiple of the conductor.
  CycNum embedded(long target) const;

  /// The rational value when the element lies in Q, absent otherwise.
  std::optional<Rat> as_rational() const;
  bool is_zero() const;

  /// Multiplicative order when the element is a root of unity (checked by
  /// repeated multiplication), nullopt otherwise. Intended for tests.
  std::optional<long> root_of_unity_order(long bound = 10000) const;

  std::string str() const;

 private:
  CycNum(long m, std::vector<Rat> c) : m_(m), c_(std::move(c)) {}
  long m_;
  std::vector<Rat> c_;

  friend CycNum zeta(long m, long e);
  friend class ZetaSum;
};

/// zeta_m^e, reduced modulo Phi_m.
CycNum zeta(long m, long e);

/// Integer linear combination of m-th roots of unity, accumulated by
/// exponent. This is the hot-loop representation behind indicator and
/// inner-product sums: per-term work is integer arithmetic, and the exact
/// cyclotomic value is materialized once at the end.
class ZetaSum {
 public:
  explicit ZetaSum(long m);
  long conductor() const { return m_; }

  void add(long long e, long long mult);

  /// Exact value as a CycNum in the power basis.
  CycNum materialize() const;

  /// Exact rational value, computed in the tensor basis over the prime-power
  /// factors of m (no dense power-basis reduction). Returns nullopt when the
  /// value is irrational.
  std::optional<Rat> rational_value() const;

 private:
  long m_;
  std::vector<long long> counts_;
};

}  // namespace rootnum
