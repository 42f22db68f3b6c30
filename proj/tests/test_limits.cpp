#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <random>

#include "zhat/closed_form.hpp"
#include "zhat/limits.hpp"
#include "zhat/numeric.hpp"

using namespace zhat;

namespace {

BigRational q(std::int64_t a, std::int64_t b = 1) { return make_rational(a, b); }

PeriodicSequence rational_sequence(const std::vector<std::int64_t>& v) {
  std::vector<CycloNumber> c;
  for (auto x : v) c.emplace_back(x);
  return PeriodicSequence(c);
}

double real_of(const CycloNumber& z) { return z.to_complex().real(); }

// sum_{n >= 1} C(n) n^r e^{-n eps} in long double, summed until the factor is negligible.
long double abel_sum(const std::vector<std::int64_t>& c, unsigned r, long double eps) {
  const std::size_t m = c.size();
  long double acc = 0;
  for (std::size_t n = 1;; ++n) {
    const long double w = std::exp(-static_cast<long double>(n) * eps);
    const long double nr = std::pow(static_cast<long double>(n), static_cast<long double>(r));
    if (w * nr < 1e-30L && static_cast<long double>(n) * eps > 10) break;
    acc += c[(n - 1) % m] * nr * w;
  }
  return acc;
}

const std::vector<std::pair<RationalPhase, RationalPhase>> kLimitPairs = {
    {{0, 1}, {0, 1}}, {{0, 1}, {1, 2}}, {{1, 4}, {0, 1}}, {{1, 4}, {1, 2}}, {{1, 3}, {0, 1}}, {{1, 3}, {1, 2}}};

}  // namespace

TEST_CASE("l_value examples") {
  const auto c = rational_sequence({1, -1});
  CHECK(l_value(c, 0).value == CycloNumber(q(1, 2)));
  CHECK(l_value(c, 1).value == CycloNumber(q(1, 4)));
  CHECK(l_value(c, 2).value.is_zero());
  CHECK(l_value(rational_sequence({0, 0, 0}), 3).value.is_zero());
  const auto s = c.scaled(q(3));
  CHECK(l_value(s, 0).value == CycloNumber(q(3, 2)));
  // viewing the sequence with a longer period leaves its L-values unchanged
  for (unsigned r = 0; r < 5; ++r) CHECK(l_value(c.repeated(3), r).value == l_value(c, r).value);
}

TEST_CASE("periodic sequence basics") {
  const auto c = rational_sequence({1, 2, -2, -1, 0});
  CHECK(c.period() == 5);
  CHECK(c(6) == c(1));
  CHECK(c(0) == c(5));
  CHECK(c(-1) == c(4));
  CHECK(c.has_mean_zero());
  CHECK(c.is_antisymmetric());
  CHECK_FALSE(rational_sequence({1, 1, 0}).is_antisymmetric());
  CHECK_FALSE(rational_sequence({1, 1, 0}).has_mean_zero());
}

TEST_CASE("L-values match Abel sums of random antisymmetric sequences") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> period(2, 30), val(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::int64_t m = period(rng);
    std::vector<std::int64_t> v(m, 0);
    for (std::int64_t n = 1; 2 * n < m; ++n) {
      v[n - 1] = val(rng);
      v[m - n - 1] = -v[n - 1];
    }
    const auto c = rational_sequence(v);
    REQUIRE(c.is_antisymmetric());
    for (unsigned r : {0u, 1u}) {
      // Richardson: 2 f(eps/2) - f(eps) removes the first-order term of the expansion
      const long double eps = 1e-3L;
      const long double extrapolated = 2 * abel_sum(v, r, eps / 2) - abel_sum(v, r, eps);
      const double exact = real_of(l_value(c, r).value);
      CHECK(std::fabs(static_cast<double>(extrapolated) - exact) < 1e-4 * (1 + std::fabs(exact)));
    }
  }
}

TEST_CASE("build_C") {
  const auto d = make_brieskorn(2, 3, 5);
  const auto c = build_C(d, RationalPhase(0, 1), RationalPhase(0, 1));
  CHECK(c.period() == 60);
  CHECK(limit_period(d, RationalPhase(1, 3), RationalPhase(1, 2)) == 60 * 3 * 2);
  CHECK(c.has_mean_zero());
  CHECK(c.is_antisymmetric());
  for (std::int64_t n = 1; n <= 60; ++n) CHECK(c(n) == CycloNumber(phi_at_one(n, d)));

  const RationalPhase zeta(1, 4), xi(1, 3);
  const auto c2 = build_C(d, zeta, xi);
  for (std::int64_t n = 1; n <= c2.period(); ++n) {
    const auto expected = laurent_evaluate(phi(n, d), zeta) * CycloNumber::from_phase(xi.pow(q(n * n, 4 * d.p)));
    CHECK(c2(n) == expected);
  }
}

TEST_CASE("radial limits do not depend on the number of periods") {
  for (auto b : {BrieskornTriple{2, 3, 5}, BrieskornTriple{2, 3, 7}}) {
    const auto d = make_brieskorn(b);
    for (const auto& [zeta, xi] : kLimitPairs) CHECK(radial_limit(d, zeta, xi, 2) == radial_limit(d, zeta, xi, 1));
  }
}

TEST_CASE("radial limit at t = i has no D-term") {
  const auto d = make_brieskorn(2, 3, 5);
  for (auto xi : {RationalPhase(0, 1), RationalPhase(1, 2), RationalPhase(1, 5)}) {
    const auto c = build_C(d, RationalPhase(1, 4), xi);
    const auto expected = -(CycloNumber::from_phase(xi.pow(d.delta)) * l_value(c, 0).value);
    CHECK(radial_limit(d, RationalPhase(1, 4), xi) == expected);
  }
}

TEST_CASE("radial limits agree with the series near the root") {
  // The series approaches the limit linearly in t; two radii and Richardson extrapolation
  // remove the linear term.
  for (auto b : {BrieskornTriple{2, 3, 5}, BrieskornTriple{2, 3, 7}}) {
    const auto d = make_brieskorn(b);
    for (const auto& [zeta, xi] : kLimitPairs) {
      const auto a = compare_radial_numeric(d, zeta, xi, 2e-5);
      const auto h = compare_radial_numeric(d, zeta, xi, 1e-5);
      const auto extrapolated = 2.0 * h.numeric - a.numeric;
      INFO(to_string(BigRational(b.b3)) << " zeta " << zeta.to_string() << " xi " << xi.to_string());
      CHECK(std::abs(extrapolated - h.exact_value) < 1e-5);
      CHECK(h.difference < a.difference);
    }
  }
}

TEST_CASE("numeric consistency at t = 1e-3 for (2,3,5), zeta = xi = 1") {
  const auto d = make_brieskorn(2, 3, 5);
  const auto cmp = compare_radial_numeric(d, RationalPhase(0, 1), RationalPhase(0, 1), 1e-3);
  CHECK(cmp.difference <= 1e-2);
  CHECK(cmp.cutoff >= 45000);
}

TEST_CASE("derivative limits") {
  for (auto b : {BrieskornTriple{2, 3, 5}, BrieskornTriple{2, 3, 7}}) {
    const auto d = make_brieskorn(b);
    for (auto zeta : {RationalPhase(0, 1), RationalPhase(1, 2)}) {
      for (auto xi : {RationalPhase(0, 1), RationalPhase(1, 2), RationalPhase(1, 3)}) {
        CHECK(radial_limit_derivative(d, zeta, xi).is_zero());
      }
    }
  }
  const auto d = make_brieskorn(2, 3, 5);
  for (auto xi : {RationalPhase(0, 1), RationalPhase(1, 2)}) {
    CHECK(build_psi_sequence(d, RationalPhase(1, 4), xi).has_mean_zero());
    const auto a = compare_radial_numeric(d, RationalPhase(1, 4), xi, 2e-5, true);
    const auto h = compare_radial_numeric(d, RationalPhase(1, 4), xi, 1e-5, true);
    CHECK(std::abs(2.0 * h.numeric - a.numeric - h.exact_value) < 1e-4);
  }
}

TEST_CASE("asymptotic_check on the zero sequence") {
  const auto rep = asymptotic_check(rational_sequence({0, 0, 0, 0}), 30, 2, {0.2, 0.1, 0.05});
  CHECK(rep.pass);
  CHECK(rep.below_noise);
  for (const auto& row : rep.rows) CHECK(std::abs(row.remainder) == 0.0);
}

TEST_CASE("asymptotic_check input validation") {
  const auto c = rational_sequence({1, -1});
  CHECK_THROWS_AS(asymptotic_check(c, 30, 7, {0.2, 0.1}), std::invalid_argument);
  CHECK_THROWS_AS(asymptotic_check(c, 30, 1, {0.2}), std::invalid_argument);
  CHECK_THROWS_AS(asymptotic_check(c, 30, 1, {0.7, 0.1}), std::invalid_argument);
  CHECK_THROWS_AS(asymptotic_check(c, 30, 1, {0.0, 0.1}), std::invalid_argument);
}

TEST_CASE("asymptotic remainder ratios on the documented grid") {
  const auto d = make_brieskorn(2, 3, 5);
  const auto r0 = asymptotic_check(d, RationalPhase(0, 1), RationalPhase(0, 1), 0, {0.2, 0.1});
  const double ratio0 = std::abs(r0.rows[0].remainder) / std::abs(r0.rows[1].remainder);
  INFO("R = 0 ratio " << ratio0);
  CHECK(std::fabs(ratio0 - 2.0) <= 0.25 * 2.0);
  const auto r3 = asymptotic_check(d, RationalPhase(0, 1), RationalPhase(0, 1), 3, {0.2, 0.1});
  const double ratio3 = std::abs(r3.rows[0].remainder) / std::abs(r3.rows[1].remainder);
  INFO("R = 3 ratio " << ratio3);
  CHECK(std::fabs(ratio3 - 16.0) <= 0.25 * 16.0);
}

TEST_CASE("asymptotic orders on a finer grid") {
  // Closer to t = 0 the fitted order settles at R + 1.
  for (auto b : {BrieskornTriple{2, 3, 5}, BrieskornTriple{2, 3, 7}}) {
    const auto d = make_brieskorn(b);
    for (unsigned r = 0; r <= 2; ++r) {
      const auto rep = asymptotic_check(d, RationalPhase(0, 1), RationalPhase(0, 1), r, {0.004, 0.002, 0.001});
      INFO(rep.to_text());
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("numeric_series_eval") {
  EvaluatedSeries one(q(1), q(1));
  one.add(q(1), CycloNumber(q(3)));
  const auto v = numeric_series_eval(one, std::complex<double>(0.5, 0));
  CHECK(v.value.real() == doctest::Approx(1.5));
  CHECK(v.terms_used == 1);

  EvaluatedSeries geo(q(0), q(39));
  for (int e = 0; e < 40; ++e) geo.add(q(e), CycloNumber(1));
  CHECK(numeric_series_eval(geo, std::complex<double>(0.5, 0)).value.real() == doctest::Approx(2 - std::ldexp(1.0, -39)));
  CHECK(numeric_series_eval(geo, std::complex<double>(0.5, 0), 3).value.real() == doctest::Approx(1.75));
  CHECK_THROWS_AS(numeric_series_eval(geo, std::complex<double>(1.0, 0)), std::domain_error);

  // q = 0.9 on a real series with a half-integral prefactor, against 50-digit arithmetic
  using Big = boost::multiprecision::cpp_bin_float_50;
  const auto d = make_brieskorn(2, 3, 5);
  const auto s = zhathat_gppv(d, closed_form_bound(d, 400));
  Big acc = 0;
  for (const auto& [e, c] : s.terms()) {
    const Big x = Big(s.absolute_exponent(e).get_d());
    acc += Big(c.rational_value().get_d()) * boost::multiprecision::pow(Big("0.9"), x);
  }
  const auto num = numeric_series_eval(s, std::complex<double>(0.9, 0));
  CHECK(std::fabs(num.value.real() - acc.convert_to<double>()) < 1e-12);
  CHECK(std::fabs(num.value.imag()) < 1e-12);

  // the phase form uses the exact branch of xi^{rho}
  const auto byphase = numeric_series_eval(s, RationalPhase(0, 1), -std::log(0.9));
  CHECK(std::abs(byphase.value - num.value) < 1e-12);
}
