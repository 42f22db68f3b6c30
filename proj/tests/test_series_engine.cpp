#include <doctest.h>

#include <map>

#include "golden_rows.hpp"
#include "zhat/closed_form.hpp"
#include "zhat/lattice.hpp"

using namespace zhat;

namespace {

BigRational q(std::int64_t a, std::int64_t b = 1) { return make_rational(a, b); }

// Pascal's triangle, kept apart from the library's binomial.
BigInt pascal(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::vector<BigInt> row{1};
  for (std::int64_t i = 1; i <= n; ++i) {
    std::vector<BigInt> next(i + 1, 1);
    for (std::int64_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

// Average of the expansions of (z - 1/z)^{2-n} around z = infinity and z = 0, n >= 3.
BigRational fhat_oracle(std::int64_t n, std::int64_t r) {
  BigRational out(0);
  // around infinity: sum_k C(n-3+k, k) z^{-(n-2+2k)}
  if (r >= n - 2 && (r - n) % 2 == 0) out += BigRational(pascal(n - 3 + (r - n + 2) / 2, (r - n + 2) / 2));
  // around zero: (-1)^n sum_k C(n-3+k, k) z^{n-2+2k}
  const std::int64_t s = -r;
  if (s >= n - 2 && (s - n) % 2 == 0) {
    BigRational c(pascal(n - 3 + (s - n + 2) / 2, (s - n + 2) / 2));
    out += n % 2 == 0 ? c : BigRational(-c);
  }
  return out / 2;
}

// Fhat for degrees 0, 1, 2 is the finite Laurent polynomial (z - 1/z)^{2-n}, listed by hand.
BigRational fhat_oracle_or_small(std::int64_t n, std::int64_t r) {
  if (n == 0) return r == 0 ? BigRational(-2) : (r == 2 || r == -2) ? BigRational(1) : BigRational(0);
  if (n == 1) return r == 1 ? BigRational(-1) : r == -1 ? BigRational(1) : BigRational(0);
  if (n == 2) return r == 0 ? BigRational(1) : BigRational(0);
  return fhat_oracle(n, r);
}

LaurentPoly half_pair_poly() {
  return LaurentPoly::monomial(1, q(1, 2)) + LaurentPoly::monomial(-1, q(1, 2));
}

golden::Row golden_row(const std::string& file, int index) {
  return golden::read_table(std::string(GOLDEN_DIR) + "/" + file).at(index);
}

// The full series C q^{c} - q^{rho} * body of a printed row, complete through its last term.
EvaluatedSeries series_from_row(const golden::Row& r) {
  EvaluatedSeries s(r.prefactor, r.prefactor + r.last_exponent);
  for (const auto& [e, c] : r.body) s.add(r.prefactor + e, CycloNumber(BigRational(-c)));
  if (r.constant != 0) s.add(r.constant_exponent, CycloNumber(r.constant));
  return s;
}

PlumbingGraph star(std::int64_t centre, std::vector<std::int64_t> leaves) {
  PlumbingGraph g;
  g.weights.push_back(centre);
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    g.weights.push_back(leaves[i]);
    g.edges.emplace_back(0, i + 1);
  }
  return g;
}

// Brute-force lattice sum over a box, using only the exact inverse matrix.
SymbolicSeries brute_force_lattice(const PlumbingGraph& g, const SpincRep& k, const BigRational& bound, int box) {
  const auto m = build_matrix(g);
  const auto inv = det_and_inverse(m).inverse;
  const std::size_t s = g.size();
  std::vector<BigRational> a(s);
  BigRational c0(-static_cast<long>(3 * s));
  for (std::size_t i = 0; i < s; ++i) {
    std::int64_t row = 0;
    for (std::size_t j = 0; j < s; ++j) row += m.entries[i][j];
    a[i] = BigRational(static_cast<long>(k.k[i] - row));
    c0 -= BigRational(static_cast<long>(m.entries[i][i]));
  }
  c0 /= 4;
  // candidate values per vertex: the finite support for degree <= 2, else [-box, box]
  std::vector<std::vector<std::int64_t>> values(s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::int64_t v = -box; v <= box; ++v) {
      if (m.degrees[i] > 2 || fhat_oracle_or_small(m.degrees[i], v) != 0) values[i].push_back(v);
    }
  }
  std::map<BigRational, LaurentPoly> grouped;
  std::vector<std::size_t> idx(s, 0);
  std::vector<std::int64_t> l(s);
  while (true) {
    for (std::size_t i = 0; i < s; ++i) l[i] = values[i][idx[i]];
    BigRational w(1);
    for (std::size_t i = 0; i < s; ++i) w *= fhat_oracle_or_small(m.degrees[i], l[i]);
    bool in_coset = w != 0;
    for (std::size_t i = 0; in_coset && i < s; ++i) {
      BigRational x(0);
      for (std::size_t j = 0; j < s; ++j) x += inv[i][j] * (BigRational(static_cast<long>(l[j])) - a[j]);
      in_coset = is_integer(x / 2);
    }
    if (in_coset) {
      BigRational quad(0);
      std::int64_t lsum = 0;
      for (std::size_t i = 0; i < s; ++i) {
        lsum += l[i];
        for (std::size_t j = 0; j < s; ++j) quad += BigRational(static_cast<long>(l[i] * l[j])) * inv[i][j];
      }
      const BigRational e = c0 - quad / 4;
      REQUIRE(lsum % 2 == 0);
      if (e <= bound) grouped[e].add_term(lsum / 2, w);
    }
    std::size_t i = 0;
    while (i < s && ++idx[i] == values[i].size()) idx[i++] = 0;
    if (i == s) break;
  }
  std::erase_if(grouped, [](const auto& kv) { return kv.second.is_zero(); });
  SymbolicSeries out(grouped.empty() ? bound : grouped.begin()->first, bound);
  for (const auto& [e, c] : grouped) out.add(e, c);
  return out;
}

}  // namespace


TEST_CASE("fhat") {
  CHECK(fhat(3, 1) == q(1, 2));
  CHECK(fhat(3, -1) == q(-1, 2));
  CHECK(fhat(3, 3) == q(1, 2));
  CHECK(fhat(3, 2) == 0);
  CHECK(fhat(4, 2) == q(1, 2));
  CHECK(fhat(4, -2) == q(1, 2));
  CHECK(fhat(4, 4) == 1);
  CHECK(fhat(2, 0) == 1);
  CHECK(fhat(2, 2) == 0);
  CHECK(fhat(1, 1) == -1);
  CHECK(fhat(0, 0) == -2);
  CHECK_THROWS_AS(fhat(-1, 0), std::invalid_argument);
  for (std::int64_t n = 0; n <= 7; ++n) {
    for (std::int64_t r = -25; r <= 25; ++r) CHECK(fhat(n, r) == fhat_oracle_or_small(n, r));
  }
}

TEST_CASE("term_exponents") {
  const auto d = make_brieskorn(2, 3, 5);
  const auto& g = d.tree.graph;
  const auto k = spinc_representatives(build_matrix(g)).front();
  const auto terms = lattice_terms(g, k, q(-3, 2));
  REQUIRE_FALSE(terms.empty());
  for (const auto& term : terms) {
    CHECK(term.q_exponent == q(-3, 2));
    // leaves and centre carry +-1, the degree-2 vertices carry 0
    for (std::size_t i = 0; i < 4; ++i) CHECK((term.l[i] == 1 || term.l[i] == -1));
    for (std::size_t i = 4; i < 8; ++i) CHECK(term.l[i] == 0);
    const auto te = term_exponents(term.l, g, k);
    CHECK(te.q == q(-3, 2));
    CHECK(2 * te.t == term.l[0] + term.l[1] + term.l[2] + term.l[3]);
  }
  std::vector<std::int64_t> bad(8, 0);
  bad[0] = 1;
  CHECK_THROWS_AS(term_exponents(bad, g, k), std::invalid_argument);
}

TEST_CASE("lattice terms respect the bound and are sorted") {
  const auto d = make_brieskorn(2, 3, 7);
  const auto k = spinc_representatives(build_matrix(d.tree.graph)).front();
  const auto bound = closed_form_bound(d, 50);
  const auto terms = lattice_terms(d.tree.graph, k, bound);
  REQUIRE_FALSE(terms.empty());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    CHECK(terms[i].q_exponent <= bound);
    CHECK(terms[i].weight != 0);
    const auto te = term_exponents(terms[i].l, d.tree.graph, k);
    CHECK(te.q == terms[i].q_exponent);
    CHECK(te.t == terms[i].t_exponent);
    std::int64_t sum = 0;
    for (auto x : terms[i].l) sum += x;
    CHECK(2 * terms[i].t_exponent == sum);
    if (i > 0) CHECK(terms[i - 1].q_exponent <= terms[i].q_exponent);
  }
}

TEST_CASE("lattice output does not depend on the thread count") {
  const auto d = make_brieskorn(2, 7, 15);
  const auto k = spinc_representatives(build_matrix(d.tree.graph)).front();
  const auto bound = closed_form_bound(d, 200);
  const auto one = lattice_terms(d.tree.graph, k, bound, 1);
  const auto many = lattice_terms(d.tree.graph, k, bound, 5);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].l == many[i].l);
    CHECK(one[i].q_exponent == many[i].q_exponent);
  }
  CHECK(brieskorn_lattice(d, bound, {false, 1}) == brieskorn_lattice(d, bound, {false, 7}));
}

TEST_CASE("lattice engine reproduces printed rows") {
  const auto d = make_brieskorn(2, 3, 5);
  for (int idx : {0, 3}) {
    const auto row = golden_row("table1.txt", idx);
    const auto expected = series_from_row(row);
    const auto lattice = evaluate(brieskorn_lattice(d, expected.max_exponent()), row.zeta);
    CHECK(lattice.max_exponent() == expected.max_exponent());
    CHECK(series_agree(lattice, expected));
  }
}

TEST_CASE("closed form reproduces the (2,7,15) row at t = -1") {
  const auto d = make_brieskorn(2, 7, 15);
  const auto row = golden_row("table2.txt", 1);
  const auto expected = series_from_row(row);
  CHECK(row.prefactor == d.table_prefactor());
  const auto closed = zhathat_closed_form(d, expected.max_exponent(), row.zeta);
  CHECK(series_agree(closed, expected));
}

TEST_CASE("closed form and lattice agree with symbolic t") {
  for (auto b : {BrieskornTriple{2, 3, 5}, BrieskornTriple{2, 3, 7}, BrieskornTriple{3, 4, 5},
                 BrieskornTriple{2, 7, 15}}) {
    const auto d = make_brieskorn(b);
    const auto bound = closed_form_bound(d, 40);
    const auto closed = zhathat_closed_form(d, bound);
    const auto lattice = brieskorn_lattice(d, bound);
    CHECK(series_agree(closed, lattice));
    CHECK(normalize(closed) == normalize(lattice));
  }
}

TEST_CASE("derivative engines agree") {
  for (auto b : {BrieskornTriple{2, 3, 5}, BrieskornTriple{2, 3, 7}}) {
    const auto d = make_brieskorn(b);
    const auto bound = closed_form_bound(d, 60);
    const auto closed = zhathat_derivative(d, bound);
    CHECK(series_agree(closed, brieskorn_lattice(d, bound, {true, 1})));
    CHECK(series_agree(closed, t_derivative(zhathat_closed_form(d, bound))));
  }
}

TEST_CASE("derivative vanishes at t = 1 and t = -1") {
  const auto d = make_brieskorn(2, 3, 5);
  const auto bound = closed_form_bound(d, 60);
  for (auto z : {RationalPhase(0, 1), RationalPhase(1, 2)}) {
    CHECK(zhathat_derivative(d, bound, z).empty());
    CHECK(evaluate(brieskorn_lattice(d, bound, {true, 1}), z).empty());
  }
  CHECK_FALSE(zhathat_derivative(d, bound, RationalPhase(1, 4)).empty());
}

TEST_CASE("gppv specialisation") {
  for (auto b : {BrieskornTriple{2, 3, 5}, BrieskornTriple{2, 7, 15}}) {
    const auto d = make_brieskorn(b);
    const auto bound = closed_form_bound(d, 100);
    CHECK(zhathat_gppv(d, bound) == zhathat_closed_form(d, bound, RationalPhase(0, 1)));
  }
  const auto d = make_brieskorn(2, 3, 5);
  const auto row = golden_row("table1.txt", 0);
  CHECK(series_agree(zhathat_gppv(d, closed_form_bound(d, 52)), series_from_row(row)));
}

TEST_CASE("closed_form_constant") {
  const auto c = closed_form_constant(make_brieskorn(2, 3, 5));
  CHECK(c.q_exponent == q(-3, 2));
  CHECK(c.coeff == LaurentPoly::monomial(1) + LaurentPoly::monomial(-1));
  const auto cd = closed_form_constant(make_brieskorn(2, 3, 5), true);
  CHECK(cd.coeff == LaurentPoly::monomial(1) - LaurentPoly::monomial(-1));
  CHECK(closed_form_constant(make_brieskorn(2, 3, 7)).coeff.is_zero());
}

TEST_CASE("normalized prefactors") {
  const auto d = make_brieskorn(2, 3, 5);
  const auto s = normalize(zhathat_closed_form(d, closed_form_bound(d, 10)));
  CHECK(s.prefactor() == q(-3, 2));
  CHECK(s.terms().begin()->second == half_pair_poly());
  const auto d2 = make_brieskorn(2, 7, 15);
  const auto s2 = normalize(zhathat_closed_form(d2, closed_form_bound(d2, 10)));
  CHECK(s2.prefactor() == q(13, 2));
}

TEST_CASE("truncation is monotone") {
  const auto d = make_brieskorn(2, 3, 7);
  const auto small = closed_form_bound(d, 30);
  const auto big = closed_form_bound(d, 90);
  CHECK(truncate(zhathat_closed_form(d, big), small) == zhathat_closed_form(d, small));
  CHECK(truncate(brieskorn_lattice(d, big), small) == brieskorn_lattice(d, small));
}

TEST_CASE("lattice sums on a non-unimodular star match brute force") {
  const auto g = star(-2, {-2, -3, -5});
  const auto m = build_matrix(g);
  CHECK(is_negative_definite(m));
  const auto reps = spinc_representatives(m);
  CHECK(BigInt(static_cast<long>(reps.size())) == abs(determinant(m.to_int_matrix())));
  for (const auto& k : reps) {
    const auto bound = lattice_bound(g, k, 12);
    const auto engine = zhathat_lattice(g, k, bound);
    const auto oracle = brute_force_lattice(g, k, bound, 61);
    CHECK(engine.max_exponent() == oracle.max_exponent());
    CHECK(normalize(engine) == normalize(oracle));
    CHECK_FALSE(engine.empty());
    CHECK(engine.prefactor() == lattice_min_exponent(g, k));
  }
}

TEST_CASE("lattice errors") {
  const auto d = make_brieskorn(2, 3, 5);
  const auto k = spinc_representatives(build_matrix(d.tree.graph)).front();
  CHECK_THROWS_AS(lattice_bound(d.tree.graph, k, -1), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_bound(d, -1), std::invalid_argument);
  PlumbingGraph positive{{1}, {}};
  CHECK_THROWS_AS(zhathat_lattice(positive, SpincRep{{1}}, q(10)), std::invalid_argument);
  PlumbingGraph single{{-2}, {}};
  CHECK_THROWS_AS(zhathat_lattice(single, SpincRep{{1}}, q(10)), std::invalid_argument);
  CHECK_THROWS_AS(zhathat_lattice(single, SpincRep{{0, 0}}, q(10)), std::invalid_argument);
}

TEST_CASE("a spin^c class whose lattice sum vanishes") {
  // both vertices of a two-vertex chain have degree 1, so each sum has at most four terms
  PlumbingGraph chain{{-2, -3}, {{0, 1}}};
  std::size_t vanishing = 0;
  for (const auto& k : spinc_representatives(build_matrix(chain))) {
    const auto bound = lattice_bound(chain, k, 3);
    const auto s = zhathat_lattice(chain, k, bound);
    CHECK(normalize(s) == normalize(brute_force_lattice(chain, k, bound, 3)));
    if (s.empty()) {
      ++vanishing;
      CHECK_THROWS_AS(lattice_min_exponent(chain, k), std::domain_error);
    }
  }
  CHECK(vanishing == 1);
}
