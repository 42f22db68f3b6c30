#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycloNumber of order N is stored in the power basis {zeta_N^r : 0 <= r < phi(N)},
// i.e. as a polynomial in zeta_N reduced modulo the N-th cyclotomic polynomial.
// Two numbers of the same order are equal iff their coordinates agree; numbers of
// different orders are compared after lifting both to the lcm of the orders.

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zhat/rational.hpp"

namespace zhat {

std::int64_t euler_phi(std::int64_t n);

/// The root of unity e^{2 pi i a/N}, stored reduced: 0 <= a < N, gcd(a, N) = 1,
/// so N is the exact multiplicative order.
class RationalPhase {
 public:
  RationalPhase() = default;
  RationalPhase(std::int64_t a, std::int64_t n);

  /// The phase e^{2 pi i x}; only x mod 1 matters.
  static RationalPhase from_fraction(const BigRational& x);
  /// Parses "a/N" (N > 0). "0/1" is 1.
  static RationalPhase parse(std::string_view text);

  std::int64_t numerator() const { return a_; }
  std::int64_t order() const { return n_; }
  BigRational fraction() const { return make_rational(a_, n_); }

  /// The phase a*x/N, i.e. this root of unity raised to a rational power under
  /// the convention (e^{2 pi i a/N})^x := e^{2 pi i a x/N}.
  RationalPhase pow(const BigRational& x) const;
  RationalPhase operator*(const RationalPhase& other) const;

  bool operator==(const RationalPhase&) const = default;
  std::string to_string() const;

 private:
  std::int64_t a_ = 0;
  std::int64_t n_ = 1;
};

class CycloNumber {
 public:
  /// Zero, order 1.
  CycloNumber();
  explicit CycloNumber(const BigRational& r);
  explicit CycloNumber(std::int64_t r) : CycloNumber(BigRational(static_cast<long>(r))) {}

  static CycloNumber from_phase(const RationalPhase& phase);
  /// Reduces sum_r coeffs[r] zeta_N^r (r taken mod N) to canonical form.
  static CycloNumber from_group_ring(std::int64_t order, std::vector<BigRational> coeffs);
  /// Builds from canonical coordinates; throws if the length is not phi(order).
  static CycloNumber from_coords(std::int64_t order, std::vector<BigRational> coords);

  std::int64_t order() const { return order_; }
  const std::vector<BigRational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::domain_error unless is_rational().
  BigRational rational_value() const;

  /// Same value expressed in Q(zeta_M); M must be a multiple of order().
  CycloNumber lifted(std::int64_t m) const;

  CycloNumber conj() const;
  /// (z + conj z) / 2.
  CycloNumber real_part() const;

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  CycloNumber& operator*=(const BigRational& c);
  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator*(CycloNumber a, const BigRational& c) { return a *= c; }
  friend CycloNumber operator*(const BigRational& c, CycloNumber a) { return a *= c; }

  bool operator==(const CycloNumber& o) const;

  /// Floating approximation. digits must be in [15, 18]; evaluation runs in long double.
  std::complex<double> to_complex(int digits = 15) const;

  /// Rational values print as "a/b"; otherwise "c0 + c1*zeta_N^1 + ...".
  std::string to_string() const;

 private:
  CycloNumber(std::int64_t order, std::vector<BigRational> coords)
      : order_(order), coords_(std::move(coords)) {}

  std::int64_t order_ = 1;
  std::vector<BigRational> coords_;
};

/// Accumulates sum c_r zeta_N^r in the group ring Q[Z/N] and reduces once on value().
class CycloSum {
 public:
  explicit CycloSum(std::int64_t order);

  std::int64_t order() const { return order_; }
  void add(std::int64_t residue, const BigRational& c);
  /// z.order() must divide order().
  void add(const CycloNumber& z, const BigRational& scale = BigRational(1));
  CycloNumber value() const;

 private:
  std::int64_t order_;
  std::vector<BigRational> coeffs_;
};

}  // namespace zhat
