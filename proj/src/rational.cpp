#include "zhat/rational.hpp"

#include <stdexcept>

namespace zhat {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigRational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return make_rational(BigInt(s), BigInt(1));
    return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
}

std::string to_string(const BigRational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

BigInt floor(const BigRational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

BigInt ceil(const BigRational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

bool is_integer(const BigRational& r) { return r.get_den() == 1; }

std::int64_t to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
  return z.get_si();
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace zhat
