#include "zhat/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zhat {

namespace {

template <class PowerFn>
NumericValue sum_terms(const EvaluatedSeries& s, std::size_t terms, long double abs_q, PowerFn&& power) {
  NumericValue out;
  std::complex<long double> acc = 0;
  long double cmax = 0;
  long double last = 0;
  for (const auto& [e, c] : s.terms()) {
    if (terms != 0 && out.terms_used == terms) break;
    const auto z = c.to_complex(18);
    const std::complex<long double> zc(z.real(), z.imag());
    acc += zc * power(s.absolute_exponent(e));
    cmax = std::max(cmax, std::abs(zc));
    last = static_cast<long double>(s.absolute_exponent(e).get_d());
    ++out.terms_used;
  }
  out.value = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  out.tail_bound = static_cast<double>(cmax * std::pow(abs_q, last + 1) / (1 - abs_q));
  return out;
}

}  // namespace

NumericValue numeric_series_eval(const EvaluatedSeries& s, std::complex<double> q, std::size_t terms) {
  const long double r = std::abs(std::complex<long double>(q.real(), q.imag()));
  if (!(r < 1)) throw std::domain_error("numeric evaluation needs |q| < 1");
  if (r == 0) {
    NumericValue out;
    out.value = s.coefficient(BigRational(0)).to_complex();
    out.terms_used = s.terms().size();
    return out;
  }
  const std::complex<long double> log_q = std::log(std::complex<long double>(q.real(), q.imag()));
  return sum_terms(s, terms, r, [&](const BigRational& x) {
    return std::exp(log_q * static_cast<long double>(x.get_d()));
  });
}

NumericValue numeric_series_eval(const EvaluatedSeries& s, const RationalPhase& xi, double t, std::size_t terms) {
  if (!(t > 0)) throw std::domain_error("numeric evaluation needs t > 0 so that |q| < 1");
  const long double pi2 = 2 * std::acos(-1.0L);
  return sum_terms(s, terms, std::exp(-static_cast<long double>(t)), [&](const BigRational& x) {
    // phase a x / K reduced mod 1 exactly before converting
    BigRational ph = xi.fraction() * x;
    ph -= BigRational(floor(ph));
    const long double angle = pi2 * static_cast<long double>(ph.get_d());
    const long double mag = std::exp(-static_cast<long double>(x.get_d()) * t);
    return std::complex<long double>(mag * std::cos(angle), mag * std::sin(angle));
  });
}

}  // namespace zhat
