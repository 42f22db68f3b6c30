#include "zhat/closed_form.hpp"

#include <stdexcept>
#include <string>

namespace zhat {

BigRational closed_form_bound(const BrieskornData& d, std::int64_t cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative, got " + std::to_string(cutoff));
  return d.table_prefactor() + BigRational(static_cast<long>(cutoff));
}

ConstantTerm closed_form_constant(const BrieskornData& d, bool derivative) {
  ConstantTerm c{d.delta + make_rational(1, 120), {}};
  c.q_exponent.canonicalize();
  if (d.is_poincare()) {
    c.coeff = LaurentPoly::monomial(1);
    c.coeff.add_term(-1, BigRational(derivative ? -1 : 1));
  }
  return c;
}

namespace {

template <class PhiFn>
SymbolicSeries assemble(const BrieskornData& d, const BigRational& max_exponent, bool derivative, PhiFn&& phi_fn) {
  SymbolicSeries out(d.table_prefactor(), max_exponent);
  const auto c = closed_form_constant(d, derivative);
  if (!c.coeff.is_zero() && c.q_exponent <= max_exponent) out.add(c.q_exponent, c.coeff);
  // n^2/4p <= max_exponent - Delta
  const BigRational room = (max_exponent - d.delta) * (4 * d.p);
  if (sgn(room) < 0) return out;
  const BigInt nmax = sqrt(floor(room));
  const std::int64_t limit = to_int64(nmax);
  for (std::int64_t n = 1; n <= limit; ++n) {
    const LaurentPoly f = phi_fn(n);
    if (f.is_zero()) continue;
    BigRational e = d.delta + make_rational(n * n, 4 * d.p);
    e.canonicalize();
    if (e > max_exponent) continue;
    out.add(e, -f);
  }
  return out;
}

}  // namespace

SymbolicSeries zhathat_closed_form(const BrieskornData& d, const BigRational& max_exponent) {
  return assemble(d, max_exponent, false, [&](std::int64_t n) { return phi(n, d); });
}

EvaluatedSeries zhathat_closed_form(const BrieskornData& d, const BigRational& max_exponent, const RationalPhase& t) {
  return evaluate(zhathat_closed_form(d, max_exponent), t);
}

SymbolicSeries zhathat_derivative(const BrieskornData& d, const BigRational& max_exponent) {
  return assemble(d, max_exponent, true, [&](std::int64_t n) { return phi_prime(n, d); });
}

EvaluatedSeries zhathat_derivative(const BrieskornData& d, const BigRational& max_exponent, const RationalPhase& t) {
  return evaluate(zhathat_derivative(d, max_exponent), t);
}

EvaluatedSeries zhathat_gppv(const BrieskornData& d, const BigRational& max_exponent) {
  return zhathat_closed_form(d, max_exponent, RationalPhase(0, 1));
}

}  // namespace zhat
