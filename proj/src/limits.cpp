#include "zhat/limits.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "zhat/bernoulli.hpp"
#include "zhat/closed_form.hpp"
#include "zhat/numeric.hpp"

namespace zhat {

PeriodicSequence::PeriodicSequence(std::vector<CycloNumber> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("periodic sequence needs a positive period");
  order_ = 1;
  for (const auto& v : values_) order_ = std::lcm(order_, v.order());
  for (auto& v : values_) v = v.lifted(order_);
}

const CycloNumber& PeriodicSequence::operator()(std::int64_t n) const {
  return values_[static_cast<std::size_t>(mod_floor(n - 1, period()))];
}

CycloNumber PeriodicSequence::sum() const {
  CycloSum acc(order_);
  for (const auto& v : values_) acc.add(v);
  return acc.value();
}

bool PeriodicSequence::is_antisymmetric() const {
  const std::int64_t m = period();
  for (std::int64_t n = 1; n <= m; ++n) {
    if (!((*this)(m - n) == -(*this)(n))) return false;
  }
  return true;
}

PeriodicSequence PeriodicSequence::scaled(const BigRational& c) const {
  std::vector<CycloNumber> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(x * c);
  return PeriodicSequence(std::move(v));
}

PeriodicSequence PeriodicSequence::repeated(std::int64_t k) const {
  if (k <= 0) throw std::invalid_argument("repeat count must be positive");
  std::vector<CycloNumber> v;
  v.reserve(values_.size() * static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) v.insert(v.end(), values_.begin(), values_.end());
  return PeriodicSequence(std::move(v));
}

std::int64_t limit_period(const BrieskornData& d, const RationalPhase& zeta, const RationalPhase& xi) {
  return 2 * d.p * zeta.order() * xi.order();
}

namespace {

// f(n; zeta) xi^{n^2/4p} for n = 1..periods*M, built in the group ring of order lcm(j, 4pK).
template <class Fn>
PeriodicSequence build_sequence(const BrieskornData& d, const RationalPhase& zeta, const RationalPhase& xi,
                                std::int64_t periods, Fn&& f) {
  if (periods <= 0) throw std::invalid_argument("period multiple must be positive");
  const std::int64_t j = zeta.order(), k = xi.order();
  const std::int64_t order = std::lcm(j, 4 * d.p * k);
  const std::int64_t m = limit_period(d, zeta, xi) * periods;
  std::vector<CycloNumber> values;
  values.reserve(static_cast<std::size_t>(m));
  for (std::int64_t n = 1; n <= m; ++n) {
    const LaurentPoly poly = f(n);
    if (poly.is_zero()) {
      values.push_back(CycloNumber(BigRational(0)).lifted(order));
      continue;
    }
    // xi^{n^2/4p} = zeta_{order}^{a n^2 order/(4pK)}
    const BigInt xr = BigInt(static_cast<long>(xi.numerator())) * n * n * (order / (4 * d.p * k));
    const std::int64_t xres = mod_floor(to_int64(xr % order), order);
    std::vector<BigRational> ring(static_cast<std::size_t>(order));
    for (const auto& [e, c] : poly.terms()) {
      const std::int64_t zres = mod_floor(mod_floor(e, j) * zeta.numerator() % j * (order / j), order);
      ring[static_cast<std::size_t>(mod_floor(zres + xres, order))] += c;
    }
    values.push_back(CycloNumber::from_group_ring(order, std::move(ring)));
  }
  return PeriodicSequence(std::move(values));
}

CycloNumber xi_power(const RationalPhase& xi, const BigRational& x) { return CycloNumber::from_phase(xi.pow(x)); }

}  // namespace

PeriodicSequence build_C(const BrieskornData& d, const RationalPhase& zeta, const RationalPhase& xi,
                         std::int64_t periods) {
  auto c = build_sequence(d, zeta, xi, periods, [&](std::int64_t n) { return phi(n, d); });
  if (!c.has_mean_zero()) throw std::logic_error("C(n) does not have mean value zero");
  if (!c.is_antisymmetric()) throw std::logic_error("C(n) is not antisymmetric under n -> M - n");
  return c;
}

PeriodicSequence build_psi_sequence(const BrieskornData& d, const RationalPhase& zeta, const RationalPhase& xi) {
  return build_sequence(d, zeta, xi, 1, [&](std::int64_t n) { return psi(n, d); });
}

PeriodicSequence build_chi_sequence(const BrieskornData& d, const RationalPhase& zeta, const RationalPhase& xi) {
  return build_sequence(d, zeta, xi, 1, [&](std::int64_t n) { return chi_fn(n, d); });
}

LSeriesValue l_value(const PeriodicSequence& c, unsigned r) {
  const std::int64_t m = c.period();
  CycloSum acc(c.order());
  for (std::int64_t n = 1; n <= m; ++n) {
    const auto& v = c(n);
    if (v.is_zero()) continue;
    acc.add(v, bernoulli_poly(r + 1, make_rational(n, m)));
  }
  BigRational scale(1);
  for (unsigned i = 0; i < r; ++i) scale *= static_cast<long>(m);
  scale /= static_cast<long>(r + 1);
  return {r, acc.value() * BigRational(-scale)};
}

CycloNumber radial_limit(const BrieskornData& d, const RationalPhase& zeta, const RationalPhase& xi,
                         std::int64_t periods) {
  CycloNumber inner = -l_value(build_C(d, zeta, xi, periods), 0).value;
  if (d.is_poincare()) {
    const auto z = CycloNumber::from_phase(zeta);
    inner += xi_power(xi, make_rational(1, 120)) * (z + z.conj());
  }
  return xi_power(xi, d.delta) * inner;
}

CycloNumber radial_limit_derivative(const BrieskornData& d, const RationalPhase& zeta, const RationalPhase& xi) {
  const auto psi_seq = build_psi_sequence(d, zeta, xi);
  if (!psi_seq.has_mean_zero()) {
    throw std::domain_error("psi(n; zeta) xi^{n^2/4p} has non-zero mean at zeta = " + zeta.to_string() +
                            ", xi = " + xi.to_string() + "; the derivative series has no finite radial limit");
  }
  CycloNumber inner = -l_value(psi_seq, 1).value - l_value(build_chi_sequence(d, zeta, xi), 0).value;
  if (d.is_poincare()) {
    const auto z = CycloNumber::from_phase(zeta);
    inner += xi_power(xi, make_rational(1, 120)) * (z - z.conj());
  }
  return xi_power(xi, d.delta) * inner;
}

RadialComparison compare_radial_numeric(const BrieskornData& d, const RationalPhase& zeta, const RationalPhase& xi,
                                        double t, bool derivative) {
  if (!(t > 0)) throw std::invalid_argument("t must be positive");
  RadialComparison out;
  out.exact = derivative ? radial_limit_derivative(d, zeta, xi) : radial_limit(d, zeta, xi);
  out.exact_value = out.exact.to_complex();
  // |coefficients| grow at most linearly in n for the derivative, so leave room for that
  out.cutoff = static_cast<std::int64_t>(std::ceil(45.0 / t));
  const BigRational bound = closed_form_bound(d, out.cutoff);
  const auto series = derivative ? zhathat_derivative(d, bound, zeta) : zhathat_closed_form(d, bound, zeta);
  out.numeric = numeric_series_eval(series, xi, t).value;
  out.difference = std::abs(out.numeric - out.exact_value);
  return out;
}

std::vector<LSeriesValue> asymptotic_coeffs(const PeriodicSequence& c, unsigned max_r) {
  std::vector<LSeriesValue> out;
  for (unsigned r = 0; r <= max_r; ++r) {
    auto v = l_value(c, 2 * r);
    v.r = 2 * r;
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

struct Complex {
  Real re = 0, im = 0;
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
  Complex operator*(const Real& s) const { return {re * s, im * s}; }
  Real abs() const { return boost::multiprecision::sqrt(re * re + im * im); }
  std::complex<double> to_double() const { return {static_cast<double>(re), static_cast<double>(im)}; }
};

Real to_real(const BigRational& x) {
  return Real(x.get_num().get_str()) / Real(x.get_den().get_str());
}

Complex to_mp(const CycloNumber& z) {
  Complex out;
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  const auto& cs = z.coords();
  for (std::size_t r = 0; r < cs.size(); ++r) {
    if (sgn(cs[r]) == 0) continue;
    const Real c = to_real(cs[r]);
    const Real angle = two_pi * static_cast<long>(r) / static_cast<long>(z.order());
    out.re += c * boost::multiprecision::cos(angle);
    out.im += c * boost::multiprecision::sin(angle);
  }
  return out;
}

}  // namespace

AsymptoticReport asymptotic_check(const PeriodicSequence& c, std::int64_t p, unsigned max_r,
                                  std::vector<double> t_grid) {
  if (max_r > 6) throw std::invalid_argument("asymptotic order R must be at most 6");
  if (t_grid.size() < 2) throw std::invalid_argument("asymptotic check needs at least two t values");
  for (double t : t_grid) {
    if (!(t > 0 && t <= 0.5)) throw std::invalid_argument("t values must lie in (0, 0.5]");
  }
  std::sort(t_grid.begin(), t_grid.end(), std::greater<>());

  const auto coeffs = asymptotic_coeffs(c, max_r);
  std::vector<Complex> lv;
  for (const auto& v : coeffs) lv.push_back(to_mp(v.value));
  std::vector<Complex> cv;
  Real cmax = 0;
  for (const auto& v : c.values()) {
    cv.push_back(to_mp(v));
    cmax = std::max(cmax, cv.back().abs());
  }

  AsymptoticReport rep;
  rep.order_r = max_r;
  const Real four_p = 4 * p;
  for (double t : t_grid) {
    const Real s = Real(t) / four_p;
    // Gaussian tail below 1e-40 relative to the largest |C(n)|.
    const double nmax_d = std::ceil(std::sqrt(92.2 / static_cast<double>(s)));
    if (nmax_d > 5e7) throw std::invalid_argument("t too small for direct summation; use larger t values");
    const auto nmax = static_cast<std::int64_t>(nmax_d) + 1;
    Complex num;
    for (std::int64_t n = 1; n <= nmax; ++n) {
      const Complex& cn = cv[static_cast<std::size_t>(mod_floor(n - 1, c.period()))];
      if (cn.re == 0 && cn.im == 0) continue;
      num += cn * boost::multiprecision::exp(-Real(n) * Real(n) * s);
    }
    Complex exp_sum;
    Real power = 1;
    for (unsigned r = 0; r <= max_r; ++r) {
      exp_sum += lv[r] * power;
      power *= -s / Real(r + 1);
    }
    rep.rows.push_back({t, num.to_double(), exp_sum.to_double(), (num - exp_sum).to_double()});
  }

  // remainders below this are indistinguishable from cancellation noise at 50 digits
  const double noise = 1e-35 * (1 + static_cast<double>(cmax));
  rep.below_noise = std::all_of(rep.rows.begin(), rep.rows.end(),
                                [&](const AsymptoticRow& r) { return std::abs(r.remainder) <= noise; });
  for (std::size_t i = 0; i + 1 < rep.rows.size(); ++i) {
    const double a = std::abs(rep.rows[i].remainder), b = std::abs(rep.rows[i + 1].remainder);
    rep.fitted_orders.push_back(std::log(a / b) / std::log(rep.rows[i].t / rep.rows[i + 1].t));
  }
  const double finest = rep.fitted_orders.back();
  rep.pass = rep.below_noise || (std::isfinite(finest) && finest >= max_r + 0.5);
  return rep;
}

AsymptoticReport asymptotic_check(const BrieskornData& d, const RationalPhase& zeta, const RationalPhase& xi,
                                  unsigned max_r, std::vector<double> t_grid) {
  return asymptotic_check(build_C(d, zeta, xi), d.p, max_r, std::move(t_grid));
}

nlohmann::json AsymptoticReport::to_json() const {
  auto cplx = [](std::complex<double> z) { return nlohmann::json{{"re", z.real()}, {"im", z.imag()}}; };
  nlohmann::json j;
  j["R"] = order_r;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    j["rows"].push_back({{"t", r.t},
                         {"numeric", cplx(r.numeric)},
                         {"expansion", cplx(r.expansion)},
                         {"remainder", cplx(r.remainder)}});
  }
  j["fitted_orders"] = fitted_orders;
  j["order"] = fitted_orders.empty() ? 0.0 : fitted_orders.back();
  j["below_noise"] = below_noise;
  j["pass"] = pass;
  return j;
}

std::string AsymptoticReport::to_text() const {
  std::ostringstream os;
  os << std::setprecision(6);
  os << "R = " << order_r << "\n";
  for (const auto& r : rows) {
    os << "  t = " << r.t << "  |numeric - expansion| = " << std::abs(r.remainder) << "\n";
  }
  os << "  fitted orders:";
  for (double o : fitted_orders) os << " " << o;
  os << "\n  " << (pass ? "PASS" : "FAIL") << (below_noise ? " (remainders below noise floor)" : "") << "\n";
  return os.str();
}

}  // namespace zhat
