#pragma once

// The Brieskorn closed form q^Delta (C - sum_{n>=1} phi(n;t) q^{n^2/4p}), C = q^{1/120}(t + 1/t)
// for (2,3,5) and 0 otherwise, together with its t-derivative and t = 1 specialisation.

#include <cstdint>

#include "zhat/brieskorn.hpp"
#include "zhat/cyclotomic.hpp"
#include "zhat/qseries.hpp"

namespace zhat {

/// Delta + w/4p + cutoff. Throws std::invalid_argument for cutoff < 0.
BigRational closed_form_bound(const BrieskornData& d, std::int64_t cutoff);

/// Complete up to q^{max_exponent}; prefactor Delta + w/4p.
SymbolicSeries zhathat_closed_form(const BrieskornData& d, const BigRational& max_exponent);
EvaluatedSeries zhathat_closed_form(const BrieskornData& d, const BigRational& max_exponent, const RationalPhase& t);

/// t d/dt of the closed form: phi -> phi', C -> q^{1/120}(t - 1/t).
SymbolicSeries zhathat_derivative(const BrieskornData& d, const BigRational& max_exponent);
EvaluatedSeries zhathat_derivative(const BrieskornData& d, const BigRational& max_exponent, const RationalPhase& t);

/// The t = 1 specialisation.
EvaluatedSeries zhathat_gppv(const BrieskornData& d, const BigRational& max_exponent);

/// The constant C (or C') as a q-exponent and Laurent coefficient; zero polynomial unless (2,3,5).
struct ConstantTerm {
  BigRational q_exponent;
  LaurentPoly coeff;
};
ConstantTerm closed_form_constant(const BrieskornData& d, bool derivative = false);

}  // namespace zhat
