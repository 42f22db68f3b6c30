#include "zhat/brieskorn.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace zhat {

namespace {

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod_floor(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw std::invalid_argument("inverse_mod: not invertible");
  return mod_floor(old_s, m);
}

// Hirzebruch-Jung expansion b/w = a1 - 1/(a2 - 1/(...)), every a_i >= 2.
std::vector<std::int64_t> negative_continued_fraction(std::int64_t b, std::int64_t w) {
  std::vector<std::int64_t> out;
  while (w > 0) {
    const std::int64_t a = (b + w - 1) / w;
    out.push_back(a);
    const std::int64_t next = a * w - b;
    b = w;
    w = next;
  }
  return out;
}

}  // namespace

BrieskornTriple validate_triple(std::int64_t b1, std::int64_t b2, std::int64_t b3) {
  if (b1 <= 1) throw std::invalid_argument("Brieskorn triple needs b1 > 1, got b1 = " + std::to_string(b1));
  if (!(b1 < b2 && b2 < b3)) {
    throw std::invalid_argument("Brieskorn triple must be strictly increasing, got (" + std::to_string(b1) + ", " +
                                std::to_string(b2) + ", " + std::to_string(b3) + ")");
  }
  const std::array<std::int64_t, 3> b{b1, b2, b3};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (std::gcd(b[i], b[j]) != 1) {
        throw std::invalid_argument("Brieskorn triple is not pairwise coprime: gcd(" + std::to_string(b[i]) + ", " +
                                    std::to_string(b[j]) + ") = " + std::to_string(std::gcd(b[i], b[j])));
      }
    }
  }
  return {b1, b2, b3};
}

Alphas alphas(const BrieskornTriple& b) {
  const std::int64_t p = b.b1 * b.b2 * b.b3;
  const std::int64_t b12 = b.b1 * b.b2, b13 = b.b1 * b.b3, b23 = b.b2 * b.b3;
  return {p, {p - b12 - b13 - b23, p + b12 - b13 - b23, p - b12 + b13 - b23, p + b12 + b13 - b23}};
}

std::int64_t w_class(const BrieskornTriple& b) {
  const auto a = alphas(b);
  const std::int64_t m = 4 * a.p;
  const std::int64_t w = mod_floor(a.alpha[0] * a.alpha[0], m);
  for (int k = 1; k < 4; ++k) {
    if (mod_floor(a.alpha[k] * a.alpha[k], m) != w) {
      throw std::logic_error("alpha_k^2 classes disagree mod 4p");
    }
  }
  return w;
}

BrieskornTree plumbing_tree(const BrieskornTriple& b) {
  const auto bs = b.as_array();
  const std::int64_t p = b.b1 * b.b2 * b.b3;
  // Seifert data: e0 + sum w_i/b_i = -1/p, 0 < w_i < b_i, which forces w_i (p/b_i) = -1 mod b_i.
  std::array<std::int64_t, 3> w{};
  std::int64_t acc = 1;
  for (int i = 0; i < 3; ++i) {
    const std::int64_t q = p / bs[i];
    w[i] = mod_floor(-inverse_mod(q, bs[i]), bs[i]);
    acc += w[i] * q;
  }
  if (acc % p != 0) throw std::logic_error("Seifert invariants do not give a homology sphere");
  const std::int64_t e0 = -acc / p;

  std::array<std::vector<std::int64_t>, 3> legs;
  for (int i = 0; i < 3; ++i) legs[i] = negative_continued_fraction(bs[i], w[i]);

  BrieskornTree tree;
  auto& g = tree.graph;
  // leaves first, then the centre, then interior leg vertices from the centre outwards
  g.weights.resize(4);
  tree.center = 3;
  g.weights[3] = e0;
  for (int i = 0; i < 3; ++i) {
    const auto& leg = legs[i];
    tree.leaves[i] = static_cast<std::size_t>(i);
    g.weights[i] = -leg.back();
    std::size_t prev = tree.center;
    for (std::size_t k = 0; k + 1 < leg.size(); ++k) {
      const std::size_t v = g.weights.size();
      g.weights.push_back(-leg[k]);
      g.edges.emplace_back(prev, v);
      prev = v;
    }
    g.edges.emplace_back(prev, tree.leaves[i]);
  }

  const auto m = build_matrix(g);
  if (!is_negative_definite(m)) throw std::logic_error("Brieskorn plumbing is not negative definite");
  if (abs(determinant(m.to_int_matrix())) != 1) throw std::logic_error("Brieskorn plumbing is not unimodular");
  return tree;
}

BigRational delta(const BrieskornTriple& b, const BrieskornTree& tree) {
  const auto m = build_matrix(tree.graph);
  const auto s = static_cast<std::int64_t>(tree.graph.size());
  BigRational sum(0);
  for (auto leaf : tree.leaves) sum += BigRational(vertex_deleted_h(m, leaf));
  sum -= BigRational(3 * s);
  for (auto wv : tree.graph.weights) sum -= BigRational(static_cast<long>(wv));
  sum -= make_rational(b.b2 * b.b3, b.b1);
  sum -= make_rational(b.b1 * b.b3, b.b2);
  sum -= make_rational(b.b1 * b.b2, b.b3);
  BigRational out = sum / 4;
  out.canonicalize();
  return out;
}

BigRational delta(const BrieskornTriple& b) { return delta(b, plumbing_tree(b)); }

BigRational BrieskornData::table_prefactor() const {
  BigRational r = delta + make_rational(w, 4 * p);
  r.canonicalize();
  return r;
}

BrieskornData make_brieskorn(const BrieskornTriple& b) {
  const auto checked = validate_triple(b.b1, b.b2, b.b3);
  BrieskornData d;
  d.b = checked;
  const auto a = alphas(checked);
  d.p = a.p;
  d.alpha = a.alpha;
  d.w = w_class(checked);
  d.tree = plumbing_tree(checked);
  d.delta = delta(checked, d.tree);
  return d;
}

BrieskornData make_brieskorn(std::int64_t b1, std::int64_t b2, std::int64_t b3) {
  return make_brieskorn(BrieskornTriple{b1, b2, b3});
}

PhiBranch phi_branch(std::int64_t n, const BrieskornData& d) {
  const std::int64_t period = 2 * d.p;
  const std::int64_t r = mod_floor(n, period);
  PhiBranch found;
  for (int k = 1; k <= 4; ++k) {
    for (int sign : {+1, -1}) {
      if (mod_floor(sign * d.alpha[k - 1], period) != r) continue;
      if (found.matched()) {
        throw std::logic_error("phi: n = " + std::to_string(n) + " matches two residue classes");
      }
      found = {k, sign};
    }
  }
  return found;
}

namespace {

struct BranchData {
  PhiBranch branch;
  std::int64_t shifted_alpha = 0;  // alpha_1 + 2p, alpha_2, alpha_3, alpha_4 - 2p
  std::int64_t exponent = 0;       // (-sign n + shifted_alpha) / 2p
};

BranchData branch_data(std::int64_t n, const BrieskornData& d) {
  BranchData bd;
  bd.branch = phi_branch(n, d);
  if (!bd.branch.matched()) return bd;
  const int k = bd.branch.k;
  const std::int64_t a = d.alpha[k - 1];
  bd.shifted_alpha = k == 1 ? a + 2 * d.p : k == 4 ? a - 2 * d.p : a;
  const std::int64_t num = -bd.branch.sign * n + bd.shifted_alpha;
  if (num % (2 * d.p) != 0) throw std::logic_error("phi: non-integral t exponent");
  bd.exponent = num / (2 * d.p);
  return bd;
}

// t^e + t^{-e} (or t^e - t^{-e} when minus) scaled by c.
LaurentPoly symmetric_pair(std::int64_t e, const BigRational& c, bool minus) {
  LaurentPoly out = LaurentPoly::monomial(e, c);
  out.add_term(-e, minus ? BigRational(-c) : c);
  return out;
}

}  // namespace

LaurentPoly phi(std::int64_t n, const BrieskornData& d) {
  const auto bd = branch_data(n, d);
  if (!bd.branch.matched()) return {};
  // k = 1, 4 carry the opposite overall sign from k = 2, 3
  const int k = bd.branch.k;
  const int outer = (k == 1 || k == 4) ? -bd.branch.sign : bd.branch.sign;
  return symmetric_pair(bd.exponent, make_rational(outer, 2), false);
}

BigRational phi_at_one(std::int64_t n, const BrieskornData& d) {
  BigRational s(0);
  const LaurentPoly p = phi(n, d);
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

LaurentPoly phi_prime(std::int64_t n, const BrieskornData& d) { return laurent_t_derivative(phi(n, d)); }

LaurentPoly psi(std::int64_t n, const BrieskornData& d) {
  const auto bd = branch_data(n, d);
  if (!bd.branch.matched()) return {};
  const int k = bd.branch.k;
  const int sign = (k == 2 || k == 3) ? -1 : 1;
  return symmetric_pair(bd.exponent, make_rational(sign, 4 * d.p), true);
}

LaurentPoly chi_fn(std::int64_t n, const BrieskornData& d) {
  const auto bd = branch_data(n, d);
  if (!bd.branch.matched()) return {};
  const int k = bd.branch.k;
  const int sign = (k == 2 || k == 3) ? bd.branch.sign : -bd.branch.sign;
  return symmetric_pair(bd.exponent, make_rational(sign * bd.shifted_alpha, 4 * d.p), true);
}

}  // namespace zhat
