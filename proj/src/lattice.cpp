#include "zhat/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

namespace zhat {

BigRational fhat(std::int64_t n, std::int64_t r) {
  if (n < 0) throw std::invalid_argument("fhat: negative degree");
  switch (n) {
    case 0:  // z^2 - 2 + z^{-2}
      if (r == 2 || r == -2) return BigRational(1);
      return r == 0 ? BigRational(-2) : BigRational(0);
    case 1:  // z - z^{-1}
      if (r == 1) return BigRational(-1);
      return r == -1 ? BigRational(1) : BigRational(0);
    case 2:
      return r == 0 ? BigRational(1) : BigRational(0);
    default:
      break;
  }
  const std::int64_t ar = r < 0 ? -r : r;
  if (ar < n - 2 || mod_floor(r - n, 2) != 0) return BigRational(0);
  const int sign = (r < 0 && n % 2 == 1) ? -1 : 1;
  BigRational out(binomial((n + ar) / 2 - 2, n - 3));
  out *= make_rational(sign, 2);
  return out;
}

namespace {

using LD = long double;

// Everything the enumeration needs about (G, k), computed once.
struct Context {
  std::size_t s = 0;
  std::vector<std::int64_t> deg;
  BigInt det;
  IntMatrix adj;
  std::vector<BigInt> a;  // k - Mu
  BigRational c0;         // -(3s + sum m)/4
  BigRational theta;      // (k.u - u^T M u)/2
  std::vector<std::vector<LD>> p;  // -M^{-1}, positive definite
};

Context make_context(const PlumbingGraph& g, const SpincRep& k) {
  const auto m = build_matrix(g);
  if (!is_negative_definite(m)) throw std::invalid_argument("plumbing graph is not negative definite");
  Context c;
  c.s = m.size();
  if (k.k.size() != c.s) throw std::invalid_argument("spin^c vector has wrong length");
  for (std::size_t i = 0; i < c.s; ++i) {
    if (mod_floor(k.k[i] - m.entries[i][i], 2) != 0) {
      throw std::invalid_argument("spin^c vector is not congruent to the weights mod 2");
    }
  }
  c.deg = m.degrees;
  const auto di = det_and_inverse(m);
  c.det = di.det;
  c.adj = di.adjugate;
  c.a.resize(c.s);
  BigInt ku = 0, umu = 0, msum = 0;
  for (std::size_t i = 0; i < c.s; ++i) {
    BigInt row = 0;
    for (std::size_t j = 0; j < c.s; ++j) row += m.entries[i][j];
    c.a[i] = BigInt(static_cast<long>(k.k[i])) - row;
    ku += static_cast<long>(k.k[i]);
    umu += row;
    msum += static_cast<long>(m.entries[i][i]);
  }
  c.c0 = make_rational(-(BigInt(static_cast<long>(3 * c.s)) + msum), BigInt(4));
  c.theta = make_rational(BigInt(ku - umu), BigInt(2));
  c.p.assign(c.s, std::vector<LD>(c.s));
  for (std::size_t i = 0; i < c.s; ++i) {
    for (std::size_t j = 0; j < c.s; ++j) c.p[i][j] = -di.inverse[i][j].get_d();
  }
  return c;
}

bool in_coset(const Context& c, const std::vector<std::int64_t>& l) {
  const BigInt mod = 2 * c.det;
  for (std::size_t i = 0; i < c.s; ++i) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < c.s; ++j) acc += c.adj[i][j] * (BigInt(static_cast<long>(l[j])) - c.a[j]);
    if (acc % mod != 0) return false;
  }
  return true;
}

// c0 - l^T M^{-1} l / 4 = c0 - l^T adj l / (4 det)
BigRational q_exponent(const Context& c, const std::vector<std::int64_t>& l) {
  BigInt quad = 0;
  for (std::size_t i = 0; i < c.s; ++i) {
    if (l[i] == 0) continue;
    BigInt row = 0;
    for (std::size_t j = 0; j < c.s; ++j) row += c.adj[i][j] * static_cast<long>(l[j]);
    quad += row * static_cast<long>(l[i]);
  }
  return c.c0 - make_rational(quad, BigInt(4 * c.det));
}

// Theta_k + <x,u> with l = a + 2Mx, where <x,u> = x^T M u = (l - a).u / 2.
std::int64_t t_exponent(const Context& c, const std::vector<std::int64_t>& l) {
  BigInt diff = 0;
  for (std::size_t i = 0; i < c.s; ++i) diff += BigInt(static_cast<long>(l[i])) - c.a[i];
  const BigRational t = c.theta + make_rational(diff, BigInt(2));
  if (!is_integer(t)) throw std::logic_error("non-integral t exponent");
  return to_int64(t.get_num());
}

// Finite choices at vertices of degree <= 2 (the support of Fhat_0, Fhat_1, Fhat_2).
std::vector<std::int64_t> low_values(std::int64_t d) {
  switch (d) {
    case 0: return {-2, 0, 2};
    case 1: return {-1, 1};
    default: return {0};
  }
}

struct Enumerator {
  const Context& c;
  BigRational bound;
  std::vector<std::size_t> low, high;

  // All integer h (high coordinates) with (h - centre)^T A (h - centre) <= budget, filtered to
  // the support of Fhat at each high vertex; then checked exactly.
  void run_assignment(std::vector<std::int64_t>& l, std::vector<LatticeTerm>& out) const {
    const std::size_t d = high.size();
    const std::size_t s = c.s;
    if (d == 0) {
      emit(l, out);
      return;
    }
    // centre h* = -A^{-1} B L with A = P_HH, B = P_HL
    std::vector<std::vector<LD>> a(d, std::vector<LD>(d));
    std::vector<LD> rhs(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) a[i][j] = c.p[high[i]][high[j]];
      for (auto v : low) rhs[i] -= c.p[high[i]][v] * static_cast<LD>(l[v]);
    }
    const std::vector<LD> centre = solve(a, rhs);
    std::vector<LD> full(s, 0);
    for (auto v : low) full[v] = static_cast<LD>(l[v]);
    for (std::size_t i = 0; i < d; ++i) full[high[i]] = centre[i];
    LD base = 0;
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) base += full[i] * c.p[i][j] * full[j];
    const LD total = 4.0L * static_cast<LD>(BigRational(bound - c.c0).get_d());
    LD budget = total - base;
    const LD slack = 1e-9L * (1 + std::fabs(total) + std::fabs(base));
    if (budget < -slack) return;
    budget += slack;

    // LDL^T in Cohen's form: Q(y) = sum_i q_ii (y_i + sum_{j>i} q_ij y_j)^2
    auto q = a;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        q[j][i] = q[i][j];
        q[i][j] /= q[i][i];
      }
      for (std::size_t k = i + 1; k < d; ++k)
        for (std::size_t m = k; m < d; ++m) q[k][m] -= q[k][i] * q[i][m];
    }
    std::vector<LD> y(d, 0);
    recurse(static_cast<std::ptrdiff_t>(d) - 1, budget, q, centre, y, l, out);
  }

  void recurse(std::ptrdiff_t i, LD budget, const std::vector<std::vector<LD>>& q, const std::vector<LD>& centre,
               std::vector<LD>& y, std::vector<std::int64_t>& l, std::vector<LatticeTerm>& out) const {
    if (i < 0) {
      emit(l, out);
      return;
    }
    const auto ui = static_cast<std::size_t>(i);
    LD shift = 0;
    for (std::size_t j = ui + 1; j < high.size(); ++j) shift += q[ui][j] * y[j];
    const LD radius = std::sqrt(std::max<LD>(budget, 0) / q[ui][ui]) + 1e-6L;
    const LD mid = centre[ui] - shift;
    const auto lo = static_cast<std::int64_t>(std::ceil(mid - radius));
    const auto hi = static_cast<std::int64_t>(std::floor(mid + radius));
    const std::size_t v = high[ui];
    const std::int64_t dv = c.deg[v];
    for (std::int64_t h = lo; h <= hi; ++h) {
      if (mod_floor(h - dv, 2) != 0) continue;
      if ((h < 0 ? -h : h) < dv - 2) continue;
      y[ui] = static_cast<LD>(h) - centre[ui];
      const LD part = q[ui][ui] * (y[ui] + shift) * (y[ui] + shift);
      l[v] = h;
      recurse(i - 1, budget - part + 1e-9L * (1 + budget), q, centre, y, l, out);
    }
    l[v] = 0;
  }

  void emit(const std::vector<std::int64_t>& l, std::vector<LatticeTerm>& out) const {
    BigRational weight(1);
    for (std::size_t i = 0; i < c.s; ++i) {
      weight *= fhat(c.deg[i], l[i]);
      if (sgn(weight) == 0) return;
    }
    if (!in_coset(c, l)) return;
    BigRational e = q_exponent(c, l);
    if (e > bound) return;
    out.push_back({l, weight, std::move(e), t_exponent(c, l)});
  }

  static std::vector<LD> solve(std::vector<std::vector<LD>> a, std::vector<LD> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r < n; ++r)
        if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
      std::swap(a[col], a[piv]);
      std::swap(b[col], b[piv]);
      for (std::size_t r = col + 1; r < n; ++r) {
        const LD f = a[r][col] / a[col][col];
        for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
        b[r] -= f * b[col];
      }
    }
    std::vector<LD> x(n);
    for (std::size_t r = n; r-- > 0;) {
      LD acc = b[r];
      for (std::size_t k = r + 1; k < n; ++k) acc -= a[r][k] * x[k];
      x[r] = acc / a[r][r];
    }
    return x;
  }
};

std::vector<LatticeTerm> enumerate(const Context& c, const BigRational& bound, unsigned threads) {
  Enumerator en{c, bound, {}, {}};
  for (std::size_t i = 0; i < c.s; ++i) (c.deg[i] >= 3 ? en.high : en.low).push_back(i);

  // mixed-radix index over the low-degree choices
  std::vector<std::vector<std::int64_t>> choices;
  std::size_t count = 1;
  for (auto v : en.low) {
    choices.push_back(low_values(c.deg[v]));
    count *= choices.back().size();
  }
  auto assignment = [&](std::size_t idx) {
    std::vector<std::int64_t> l(c.s, 0);
    for (std::size_t i = 0; i < en.low.size(); ++i) {
      l[en.low[i]] = choices[i][idx % choices[i].size()];
      idx /= choices[i].size();
    }
    return l;
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  std::vector<std::vector<LatticeTerm>> parts(threads);
  auto work = [&](unsigned w) {
    for (std::size_t idx = w; idx < count; idx += threads) {
      auto l = assignment(idx);
      en.run_assignment(l, parts[w]);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  std::vector<LatticeTerm> all;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(all));
  std::sort(all.begin(), all.end(), [](const LatticeTerm& x, const LatticeTerm& y) {
    if (x.q_exponent != y.q_exponent) return x.q_exponent < y.q_exponent;
    return x.l < y.l;
  });
  return all;
}

}  // namespace

TermExponents term_exponents(const std::vector<std::int64_t>& l, const PlumbingGraph& g, const SpincRep& k) {
  const auto c = make_context(g, k);
  if (l.size() != c.s) throw std::invalid_argument("lattice vector has wrong length");
  if (!in_coset(c, l)) throw std::invalid_argument("lattice vector is not in a + 2M Z^s");
  return {q_exponent(c, l), t_exponent(c, l)};
}

std::vector<LatticeTerm> lattice_terms(const PlumbingGraph& g, const SpincRep& k, const BigRational& max_exponent,
                                       unsigned threads) {
  return enumerate(make_context(g, k), max_exponent, threads);
}

namespace {

// Lowest exponent with a non-zero weight, or nothing when the sum is identically zero.
// That can only happen when every vertex has degree <= 2, so the support is finite.
std::optional<BigRational> min_exponent(const Context& c) {
  BigRational span(1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const auto terms = enumerate(c, c.c0 + span, 1);
    if (!terms.empty()) return terms.front().q_exponent;
    span *= 2;
  }
  return std::nullopt;
}

}  // namespace

BigRational lattice_min_exponent(const PlumbingGraph& g, const SpincRep& k) {
  const auto e = min_exponent(make_context(g, k));
  if (!e) throw std::domain_error("the lattice sum vanishes for this spin^c structure");
  return *e;
}

BigRational lattice_bound(const PlumbingGraph& g, const SpincRep& k, std::int64_t cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative, got " + std::to_string(cutoff));
  const auto c = make_context(g, k);
  return min_exponent(c).value_or(c.c0) + BigRational(static_cast<long>(cutoff));
}

SymbolicSeries zhathat_lattice(const PlumbingGraph& g, const SpincRep& k, const BigRational& max_exponent,
                               const LatticeOptions& opts) {
  const auto terms = lattice_terms(g, k, max_exponent, opts.threads);
  std::map<BigRational, LaurentPoly> grouped;
  for (const auto& term : terms) {
    BigRational w = term.weight;
    if (opts.derivative) w *= BigRational(static_cast<long>(term.t_exponent));
    grouped[term.q_exponent].add_term(term.t_exponent, w);
  }
  std::erase_if(grouped, [](const auto& kv) { return kv.second.is_zero(); });
  SymbolicSeries out(grouped.empty() ? max_exponent : grouped.begin()->first, max_exponent);
  for (const auto& [e, c] : grouped) out.add(e, c);
  return out;
}

EvaluatedSeries zhathat_lattice(const PlumbingGraph& g, const SpincRep& k, const BigRational& max_exponent,
                                const RationalPhase& t, const LatticeOptions& opts) {
  return evaluate(zhathat_lattice(g, k, max_exponent, opts), t);
}

SymbolicSeries brieskorn_lattice(const BrieskornData& d, const BigRational& max_exponent, const LatticeOptions& opts) {
  const auto reps = spinc_representatives(build_matrix(d.tree.graph));
  return zhathat_lattice(d.tree.graph, reps.front(), max_exponent, opts);
}

}  // namespace zhat
