#include "zhat/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace zhat {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<BigRational> g_bernoulli{BigRational(1)};

}  // namespace

BigRational bernoulli_number(unsigned k) {
  std::lock_guard lock(g_bernoulli_mutex);
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
  while (g_bernoulli.size() <= k) {
    const auto m = static_cast<std::int64_t>(g_bernoulli.size());
    BigRational acc(0);
    for (std::int64_t j = 0; j < m; ++j) acc += BigRational(binomial(m + 1, j)) * g_bernoulli[j];
    BigRational bm = -acc / BigRational(m + 1);
    bm.canonicalize();
    g_bernoulli.push_back(bm);
  }
  return g_bernoulli[k];
}

BigRational bernoulli_poly(unsigned k, const BigRational& x) {
  // Horner in x over the coefficients C(k,j) B_j of x^(k-j).
  BigRational acc(0);
  for (unsigned j = 0; j <= k; ++j) {
    acc = acc * x + BigRational(binomial(k, j)) * bernoulli_number(j);
  }
  acc.canonicalize();
  return acc;
}

}  // namespace zhat
