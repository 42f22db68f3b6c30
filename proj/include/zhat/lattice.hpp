#pragma once

// The two-variable series of a negative-definite plumbing as a lattice sum:
//
//   sum over l in a + 2M Z^s of  prod_i Fhat_{deg i}(l_i) * q^{c0 - l^T M^{-1} l / 4} * t^{Theta_k + <x,u>}
//
// with a = k - Mu and c0 = -(3s + sum m_v)/4. Only finitely many l contribute below any q bound
// because -M^{-1} is positive definite.

#include <cstdint>
#include <vector>

#include "zhat/brieskorn.hpp"
#include "zhat/cyclotomic.hpp"
#include "zhat/plumbing.hpp"
#include "zhat/qseries.hpp"
#include "zhat/rational.hpp"

namespace zhat {

/// Coefficient of z^{-r} in the symmetric expansion of (z - 1/z)^{2-n}.
BigRational fhat(std::int64_t n, std::int64_t r);

struct TermExponents {
  BigRational q;
  std::int64_t t = 0;
};

/// Exponents of the term at l. Throws std::invalid_argument if l is not in a + 2M Z^s.
TermExponents term_exponents(const std::vector<std::int64_t>& l, const PlumbingGraph& g, const SpincRep& k);

struct LatticeTerm {
  std::vector<std::int64_t> l;
  BigRational weight;
  BigRational q_exponent;
  std::int64_t t_exponent = 0;
};

struct LatticeOptions {
  /// Multiply each term by its t-exponent (the operator t d/dt).
  bool derivative = false;
  /// Worker threads for the enumeration; the result does not depend on this.
  unsigned threads = 1;
};

/// Every term with non-zero weight and q-exponent <= max_exponent, sorted by (q-exponent, l).
/// Throws std::invalid_argument unless the graph is a negative-definite tree.
std::vector<LatticeTerm> lattice_terms(const PlumbingGraph& g, const SpincRep& k, const BigRational& max_exponent,
                                       unsigned threads = 1);

/// Smallest q-exponent among the non-zero terms. Throws std::domain_error if the sum vanishes.
BigRational lattice_min_exponent(const PlumbingGraph& g, const SpincRep& k);

/// lattice_min_exponent + cutoff (c0 + cutoff for a vanishing sum). Throws std::invalid_argument for cutoff < 0.
BigRational lattice_bound(const PlumbingGraph& g, const SpincRep& k, std::int64_t cutoff);

/// The series complete up to q^{max_exponent}, with prefactor at its lowest surviving exponent.
SymbolicSeries zhathat_lattice(const PlumbingGraph& g, const SpincRep& k, const BigRational& max_exponent,
                               const LatticeOptions& opts = {});
EvaluatedSeries zhathat_lattice(const PlumbingGraph& g, const SpincRep& k, const BigRational& max_exponent,
                                const RationalPhase& t, const LatticeOptions& opts = {});

/// The lattice sum on the Brieskorn star tree with its unique spin^c structure.
SymbolicSeries brieskorn_lattice(const BrieskornData& d, const BigRational& max_exponent,
                                 const LatticeOptions& opts = {});

}  // namespace zhat
