#pragma once

// Brieskorn spheres Sigma(b1, b2, b3): the star-shaped plumbing, the constants p, alpha_k,
// w, Delta, and the closed-form coefficients phi(n; t) with their t-derivative pieces.

#include <array>
#include <cstddef>
#include <cstdint>

#include "zhat/laurent.hpp"
#include "zhat/plumbing.hpp"
#include "zhat/rational.hpp"

namespace zhat {

/// 1 < b1 < b2 < b3, pairwise coprime.
struct BrieskornTriple {
  std::int64_t b1 = 0, b2 = 0, b3 = 0;
  std::array<std::int64_t, 3> as_array() const { return {b1, b2, b3}; }
  bool operator==(const BrieskornTriple&) const = default;
};

/// Throws std::invalid_argument naming the failing pair.
BrieskornTriple validate_triple(std::int64_t b1, std::int64_t b2, std::int64_t b3);

struct Alphas {
  std::int64_t p = 0;
  std::array<std::int64_t, 4> alpha{};
};

/// p = b1 b2 b3 and the four signed combinations of pairwise products.
Alphas alphas(const BrieskornTriple& b);

/// Common class of alpha_k^2 mod 4p, in [0, 4p). Throws std::logic_error if the four disagree.
std::int64_t w_class(const BrieskornTriple& b);

struct BrieskornTree {
  PlumbingGraph graph;
  /// Ends of the three legs (legs ordered as b1, b2, b3).
  std::array<std::size_t, 3> leaves{};
  std::size_t center = 0;
};

/// Star plumbing with vertex order (leaf1, leaf2, leaf3, center, remaining leg vertices).
/// The result is checked to be negative definite and unimodular.
BrieskornTree plumbing_tree(const BrieskornTriple& b);

/// Delta = (sum over leaves of h_i - 3s - sum m_v - b2b3/b1 - b1b3/b2 - b1b2/b3) / 4.
BigRational delta(const BrieskornTriple& b, const BrieskornTree& tree);
BigRational delta(const BrieskornTriple& b);

struct BrieskornData {
  BrieskornTriple b;
  std::int64_t p = 0;
  std::array<std::int64_t, 4> alpha{};
  BigRational delta;
  std::int64_t w = 0;
  BrieskornTree tree;

  bool is_poincare() const { return b == BrieskornTriple{2, 3, 5}; }
  /// Delta + w/4p: the power of q factored out in printed tables.
  BigRational table_prefactor() const;
};

BrieskornData make_brieskorn(const BrieskornTriple& b);
BrieskornData make_brieskorn(std::int64_t b1, std::int64_t b2, std::int64_t b3);

/// Which case of the closed form applies to n: n = sign * alpha_k mod 2p.
struct PhiBranch {
  int k = 0;     // 1..4, or 0 when no case applies
  int sign = 0;  // +1 or -1
  bool matched() const { return k != 0; }
};

/// Throws std::logic_error if n matches two different classes.
PhiBranch phi_branch(std::int64_t n, const BrieskornData& d);

/// phi(n; t); zero when no branch applies (in particular for n = 0).
LaurentPoly phi(std::int64_t n, const BrieskornData& d);
BigRational phi_at_one(std::int64_t n, const BrieskornData& d);

/// t d/dt phi(n; t).
LaurentPoly phi_prime(std::int64_t n, const BrieskornData& d);
/// The n-independent amplitude psi and the remainder chi with n psi + chi = phi'.
LaurentPoly psi(std::int64_t n, const BrieskornData& d);
LaurentPoly chi_fn(std::int64_t n, const BrieskornData& d);

}  // namespace zhat
