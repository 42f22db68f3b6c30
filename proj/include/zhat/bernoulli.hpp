#pragma once

#include "zhat/rational.hpp"

namespace zhat {

/// Bernoulli number B_k with the B_1 = -1/2 convention. Memoized, thread-safe.
BigRational bernoulli_number(unsigned k);

/// Bernoulli polynomial B_k(x) = sum_j C(k,j) B_j x^(k-j).
BigRational bernoulli_poly(unsigned k, const BigRational& x);

}  // namespace zhat
