#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "zhat/cyclotomic.hpp"
#include "zhat/rational.hpp"

namespace zhat {

/// Finitely supported sum c_e t^e, e in Z, c_e rational. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, BigRational>;

  LaurentPoly() = default;
  explicit LaurentPoly(const BigRational& constant);
  static LaurentPoly monomial(std::int64_t exponent, const BigRational& coeff = BigRational(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigRational coefficient(std::int64_t exponent) const;
  /// Requires a non-zero polynomial.
  std::int64_t min_degree() const;
  std::int64_t max_degree() const;

  void add_term(std::int64_t exponent, const BigRational& coeff);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const BigRational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const BigRational& c) { return a *= c; }
  friend LaurentPoly operator*(const BigRational& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  bool operator==(const LaurentPoly&) const = default;

  /// e.g. "1/2*t^-1 + 1/2*t"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  Terms terms_;
};

/// sum c_e zeta^e as an element of Q(zeta_N), N the order of zeta.
CycloNumber laurent_evaluate(const LaurentPoly& p, const RationalPhase& zeta);

/// The operator t d/dt: c_e t^e -> e c_e t^e.
LaurentPoly laurent_t_derivative(const LaurentPoly& p);

}  // namespace zhat
