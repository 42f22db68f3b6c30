#pragma once

// Floating-point evaluation of exact q-series, used only by the verification harnesses.

#include <complex>
#include <cstddef>

#include "zhat/cyclotomic.hpp"
#include "zhat/qseries.hpp"

namespace zhat {

struct NumericValue {
  std::complex<double> value;
  std::size_t terms_used = 0;
  /// max|c_e| * |q|^{E+1} / (1 - |q|) with E the last exponent used: a bound on the omitted
  /// terms whenever the omitted coefficients are no larger than the ones seen.
  double tail_bound = 0;
};

/// sum c_e q^{rho + e} over the first `terms` stored terms (all when terms = 0), with
/// q^rho on the principal branch. Throws std::domain_error unless |q| < 1.
NumericValue numeric_series_eval(const EvaluatedSeries& s, std::complex<double> q, std::size_t terms = 0);

/// The same at q = xi e^{-t}, with xi^x read as the phase a x / K so no branch choice is made.
NumericValue numeric_series_eval(const EvaluatedSeries& s, const RationalPhase& xi, double t, std::size_t terms = 0);

}  // namespace zhat
