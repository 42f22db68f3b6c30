#pragma once

// Radial limits at roots of unity through L-values of periodic sequences:
//
//   L(-r, C) = -(M^r / (r+1)) sum_{n=1}^{M} C(n) B_{r+1}(n/M)
//
// for C of period M, and the check that sum C(n) e^{-n^2 t/4p} follows its asymptotic expansion.

#include <cstdint>
#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "zhat/brieskorn.hpp"
#include "zhat/cyclotomic.hpp"

namespace zhat {

/// A sequence on Z with period M, stored as C(1), ..., C(M).
class PeriodicSequence {
 public:
  PeriodicSequence() = default;
  /// values[n - 1] = C(n). All values are lifted to their common order.
  explicit PeriodicSequence(std::vector<CycloNumber> values);

  std::int64_t period() const { return static_cast<std::int64_t>(values_.size()); }
  /// Common cyclotomic order of the values.
  std::int64_t order() const { return order_; }
  const CycloNumber& operator()(std::int64_t n) const;
  const std::vector<CycloNumber>& values() const { return values_; }

  CycloNumber sum() const;
  bool has_mean_zero() const { return sum().is_zero(); }
  /// C(M - n) = -C(n) for all n.
  bool is_antisymmetric() const;

  PeriodicSequence scaled(const BigRational& c) const;
  /// The same sequence viewed with period k*M.
  PeriodicSequence repeated(std::int64_t k) const;

 private:
  std::vector<CycloNumber> values_;
  std::int64_t order_ = 1;
};

/// The period 2pjK, j = ord(zeta), K = ord(xi).
std::int64_t limit_period(const BrieskornData& d, const RationalPhase& zeta, const RationalPhase& xi);

/// C(n) = phi(n; zeta) xi^{n^2/4p}. Throws std::logic_error if C is not antisymmetric with mean zero.
/// periods > 1 builds the sequence over that many copies of the minimal period.
PeriodicSequence build_C(const BrieskornData& d, const RationalPhase& zeta, const RationalPhase& xi,
                         std::int64_t periods = 1);
/// psi(n; zeta) xi^{n^2/4p} and chi(n; zeta) xi^{n^2/4p}, the two periodic pieces of the derivative.
PeriodicSequence build_psi_sequence(const BrieskornData& d, const RationalPhase& zeta, const RationalPhase& xi);
PeriodicSequence build_chi_sequence(const BrieskornData& d, const RationalPhase& zeta, const RationalPhase& xi);

struct LSeriesValue {
  unsigned r = 0;
  CycloNumber value;
};

LSeriesValue l_value(const PeriodicSequence& c, unsigned r);

/// xi^Delta (D - L(0, C)), D = xi^{1/120}(zeta + 1/zeta) for (2,3,5) and 0 otherwise.
CycloNumber radial_limit(const BrieskornData& d, const RationalPhase& zeta, const RationalPhase& xi,
                         std::int64_t periods = 1);

/// Limit of the t-derivative series: xi^Delta (D' - L(-1, Psi) - L(0, X)) with
/// D' = xi^{1/120}(zeta - 1/zeta) for (2,3,5). Throws std::domain_error if Psi has non-zero mean,
/// in which case the series diverges like 1/t.
CycloNumber radial_limit_derivative(const BrieskornData& d, const RationalPhase& zeta, const RationalPhase& xi);

struct RadialComparison {
  CycloNumber exact;
  std::complex<double> exact_value;
  std::complex<double> numeric;
  double difference = 0;
  std::int64_t cutoff = 0;
};

/// The exact limit against the closed-form series summed at q = xi e^{-t}, with enough
/// q-powers that the omitted tail is below 1e-14.
RadialComparison compare_radial_numeric(const BrieskornData& d, const RationalPhase& zeta, const RationalPhase& xi,
                                        double t, bool derivative = false);

/// L(-2r, C) for r = 0..R.
std::vector<LSeriesValue> asymptotic_coeffs(const PeriodicSequence& c, unsigned max_r);

struct AsymptoticRow {
  double t = 0;
  std::complex<double> numeric;
  std::complex<double> expansion;
  std::complex<double> remainder;
};

struct AsymptoticReport {
  unsigned order_r = 0;
  std::vector<AsymptoticRow> rows;
  /// log-ratio of consecutive remainders; fitted_orders[i] compares rows i and i+1.
  std::vector<double> fitted_orders;
  bool below_noise = false;
  bool pass = false;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Compares sum_{n>=1} C(n) e^{-n^2 s}, s = t/(4p), against sum_{r<=R} L(-2r, C)(-s)^r/r!.
/// PASS iff the order fitted on the two smallest t is at least R + 1/2, or every remainder is
/// below the numerical noise floor. Throws std::invalid_argument for t outside (0, 0.5] or R > 6.
AsymptoticReport asymptotic_check(const PeriodicSequence& c, std::int64_t p, unsigned max_r,
                                  std::vector<double> t_grid);
AsymptoticReport asymptotic_check(const BrieskornData& d, const RationalPhase& zeta, const RationalPhase& xi,
                                  unsigned max_r, std::vector<double> t_grid);

}  // namespace zhat
