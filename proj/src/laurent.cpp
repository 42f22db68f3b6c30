#include "zhat/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace zhat {

LaurentPoly::LaurentPoly(const BigRational& constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(std::int64_t exponent, const BigRational& coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

BigRational LaurentPoly::coefficient(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigRational(0) : it->second;
}

std::int64_t LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero Laurent polynomial");
  return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero Laurent polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(std::int64_t exponent, const BigRational& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) return;
  it->second += coeff;
  if (sgn(it->second) == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigRational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const BigRational mag = abs(c);
    if (e == 0) {
      os << zhat::to_string(mag);
      continue;
    }
    if (mag != 1) os << zhat::to_string(mag) << "*";
    os << "t";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

CycloNumber laurent_evaluate(const LaurentPoly& p, const RationalPhase& zeta) {
  const auto n = zeta.order();
  if (n == 1) {
    BigRational s(0);
    for (const auto& [e, c] : p.terms()) s += c;
    return CycloNumber(s);
  }
  CycloSum sum(n);
  for (const auto& [e, c] : p.terms()) sum.add(mod_floor(e * zeta.numerator(), n), c);
  return sum.value();
}

LaurentPoly laurent_t_derivative(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, c * BigRational(static_cast<long>(e)));
  return r;
}

}  // namespace zhat
