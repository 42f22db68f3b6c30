#pragma once

// Rows in the printed-table layout: the constant term kept apart, then the rest with its
// global minus sign and the power q^{Delta + w/4p} factored out, e.g.
//
//   2q^{-3/2} - q^{-3/2}(1 + q + q^3 + ... + q^{52} + ...)

#include <cstdint>
#include <string>
#include <vector>

#include "zhat/brieskorn.hpp"
#include "zhat/cyclotomic.hpp"
#include "zhat/qseries.hpp"

namespace zhat {

enum class Engine { closed, lattice };

struct TableRow {
  RationalPhase zeta;
  /// zeta + 1/zeta for (2,3,5), else 0; sits at q^{Delta + 1/120}.
  CycloNumber constant;
  BigRational constant_exponent;
  /// sum phi(n; zeta) q^{Delta + n^2/4p}, prefactor Delta + w/4p.
  EvaluatedSeries body;
  std::string text;
};

/// The row for t = zeta through q^{Delta + w/4p + cutoff}.
TableRow table_row(const BrieskornData& d, const RationalPhase& zeta, std::int64_t cutoff,
                   Engine engine = Engine::closed, unsigned threads = 1);

/// "<phase>: <row text>" lines, one per zeta.
std::vector<std::string> table_lines(const BrieskornData& d, const std::vector<RationalPhase>& zetas,
                                     std::int64_t cutoff, Engine engine = Engine::closed, unsigned threads = 1);

}  // namespace zhat
