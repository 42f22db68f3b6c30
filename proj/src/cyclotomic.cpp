#include "zhat/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace zhat {

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

using IntPoly = std::vector<BigInt>;  // low degree first

IntPoly substitute_power(const IntPoly& f, std::int64_t k) {
  IntPoly g((f.size() - 1) * static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i < f.size(); ++i) g[i * static_cast<std::size_t>(k)] = f[i];
  return g;
}

// Exact quotient f / g for monic g.
IntPoly divide_exact(IntPoly f, const IntPoly& g) {
  const std::size_t dg = g.size() - 1;
  IntPoly q(f.size() - dg);
  for (std::size_t i = f.size(); i-- > dg;) {
    const BigInt c = f[i];
    if (c == 0) continue;
    q[i - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) f[i - dg + j] -= c * g[j];
  }
  for (std::size_t i = 0; i < dg; ++i) {
    if (f[i] != 0) throw std::logic_error("cyclotomic division is not exact");
  }
  return q;
}

struct Cyclotomic {
  std::int64_t degree = 0;
  // Phi_N = x^degree + sum c_j x^j over the listed (j, c_j), c_j != 0, j < degree
  std::vector<std::pair<std::int64_t, BigRational>> tail;
};

IntPoly cyclotomic_dense(std::int64_t n) {
  const auto ps = prime_factors(n);
  IntPoly phi{BigInt(-1), BigInt(1)};  // Phi_1
  std::int64_t rad = 1;
  for (auto p : ps) {
    phi = divide_exact(substitute_power(phi, p), phi);
    rad *= p;
  }
  return substitute_power(phi, n / rad);
}

std::shared_ptr<const Cyclotomic> cyclotomic(std::int64_t n) {
  static std::mutex mutex;
  static std::map<std::int64_t, std::shared_ptr<const Cyclotomic>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto dense = cyclotomic_dense(n);
  auto cyc = std::make_shared<Cyclotomic>();
  cyc->degree = static_cast<std::int64_t>(dense.size()) - 1;
  for (std::int64_t j = 0; j < cyc->degree; ++j) {
    if (dense[j] != 0) cyc->tail.emplace_back(j, BigRational(dense[j]));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(cyc)).first->second;
}

// Reduces v (coefficients of x^i) modulo Phi_n; returns phi(n) coordinates.
std::vector<BigRational> reduce(std::int64_t n, std::vector<BigRational> v) {
  const auto cyc = cyclotomic(n);
  const auto d = cyc->degree;
  if (static_cast<std::int64_t>(v.size()) < d) v.resize(d);
  for (auto i = static_cast<std::int64_t>(v.size()) - 1; i >= d; --i) {
    if (sgn(v[i]) == 0) continue;
    const BigRational c = v[i];
    for (const auto& [j, cj] : cyc->tail) v[i - d + j] -= c * cj;
    v[i] = 0;
  }
  v.resize(d);
  return v;
}

}  // namespace

std::int64_t euler_phi(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("euler_phi of non-positive integer");
  std::int64_t r = n;
  for (auto p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

// ---------------------------------------------------------------- RationalPhase

RationalPhase::RationalPhase(std::int64_t a, std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("root of unity order must be positive");
  a = mod_floor(a, n);
  const std::int64_t g = std::gcd(a, n);
  a_ = a / g;
  n_ = n / g;
}

RationalPhase RationalPhase::from_fraction(const BigRational& x) {
  const BigInt den = x.get_den();
  BigInt num = x.get_num() % den;
  if (num < 0) num += den;
  return RationalPhase(to_int64(num), to_int64(den));
}

RationalPhase RationalPhase::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw std::invalid_argument("root of unity must be written a/N, got '" + std::string(text) + "'");
  }
  try {
    const std::int64_t a = std::stoll(std::string(text.substr(0, slash)));
    const std::int64_t n = std::stoll(std::string(text.substr(slash + 1)));
    return RationalPhase(a, n);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed root of unity '" + std::string(text) + "'");
  }
}

RationalPhase RationalPhase::pow(const BigRational& x) const {
  return from_fraction(BigRational(x * fraction()));
}

RationalPhase RationalPhase::operator*(const RationalPhase& other) const {
  return from_fraction(BigRational(fraction() + other.fraction()));
}

std::string RationalPhase::to_string() const {
  return std::to_string(a_) + "/" + std::to_string(n_);
}

// ---------------------------------------------------------------- CycloNumber

CycloNumber::CycloNumber() : order_(1), coords_{BigRational(0)} {}

CycloNumber::CycloNumber(const BigRational& r) : order_(1), coords_{r} {}

CycloNumber CycloNumber::from_phase(const RationalPhase& phase) {
  const auto n = phase.order();
  std::vector<BigRational> v(n);
  v[phase.numerator()] = 1;
  return CycloNumber(n, reduce(n, std::move(v)));
}

CycloNumber CycloNumber::from_group_ring(std::int64_t order, std::vector<BigRational> coeffs) {
  if (order <= 0) throw std::invalid_argument("cyclotomic order must be positive");
  if (static_cast<std::int64_t>(coeffs.size()) > order) {
    std::vector<BigRational> folded(order);
    for (std::size_t i = 0; i < coeffs.size(); ++i) folded[i % order] += coeffs[i];
    coeffs = std::move(folded);
  }
  return CycloNumber(order, reduce(order, std::move(coeffs)));
}

CycloNumber CycloNumber::from_coords(std::int64_t order, std::vector<BigRational> coords) {
  if (static_cast<std::int64_t>(coords.size()) != euler_phi(order)) {
    throw std::invalid_argument("coordinate vector length differs from phi(order)");
  }
  for (auto& c : coords) c.canonicalize();
  return CycloNumber(order, std::move(coords));
}

bool CycloNumber::is_zero() const {
  for (const auto& c : coords_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (sgn(coords_[i]) != 0) return false;
  }
  return true;
}

BigRational CycloNumber::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number is not rational");
  return coords_[0];
}

CycloNumber CycloNumber::lifted(std::int64_t m) const {
  if (m % order_ != 0) throw std::invalid_argument("lift target is not a multiple of the order");
  if (m == order_) return *this;
  const std::int64_t step = m / order_;
  std::vector<BigRational> v(m);
  for (std::size_t r = 0; r < coords_.size(); ++r) v[r * step] = coords_[r];
  return CycloNumber(m, reduce(m, std::move(v)));
}

CycloNumber CycloNumber::conj() const {
  std::vector<BigRational> v(order_);
  for (std::size_t r = 0; r < coords_.size(); ++r) {
    v[mod_floor(-static_cast<std::int64_t>(r), order_)] += coords_[r];
  }
  return CycloNumber(order_, reduce(order_, std::move(v)));
}

CycloNumber CycloNumber::real_part() const {
  CycloNumber z = *this + conj();
  z *= BigRational(1, 2);
  return z;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber z = *this;
  for (auto& c : z.coords_) c = -c;
  return z;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  if (o.order_ != order_) {
    const auto l = std::lcm(order_, o.order_);
    if (l != order_) *this = lifted(l);
    const CycloNumber ol = o.lifted(l);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += ol.coords_[i];
    return *this;
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) { return *this += -o; }

CycloNumber& CycloNumber::operator*=(const BigRational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  if (o.is_rational()) return *this *= o.coords_[0];
  if (is_rational()) {
    const BigRational c = coords_[0];
    *this = o;
    return *this *= c;
  }
  const auto l = std::lcm(order_, o.order_);
  const CycloNumber a = lifted(l);
  const CycloNumber b = o.lifted(l);
  std::vector<BigRational> prod(2 * a.coords_.size());
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (sgn(a.coords_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coords_.size(); ++j) {
      if (sgn(b.coords_[j]) == 0) continue;
      prod[i + j] += a.coords_[i] * b.coords_[j];
    }
  }
  *this = CycloNumber(l, reduce(l, std::move(prod)));
  return *this;
}

bool CycloNumber::operator==(const CycloNumber& o) const {
  if (order_ == o.order_) return coords_ == o.coords_;
  const auto l = std::lcm(order_, o.order_);
  return lifted(l).coords_ == o.lifted(l).coords_;
}

std::complex<double> CycloNumber::to_complex(int digits) const {
  if (digits < 15 || digits > 18) throw std::invalid_argument("to_complex: digits must be in [15, 18]");
  const long double two_pi = 6.283185307179586476925286766559005768L;
  long double re = 0, im = 0;
  for (std::size_t r = 0; r < coords_.size(); ++r) {
    if (sgn(coords_[r]) == 0) continue;
    const long double c = static_cast<long double>(coords_[r].get_num().get_d()) /
                          static_cast<long double>(coords_[r].get_den().get_d());
    const long double angle = two_pi * static_cast<long double>(r) / static_cast<long double>(order_);
    re += c * std::cos(angle);
    im += c * std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string CycloNumber::to_string() const {
  if (is_rational()) return zhat::to_string(coords_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t r = 0; r < coords_.size(); ++r) {
    const auto& c = coords_[r];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const BigRational mag = abs(c);
    if (r == 0) {
      os << zhat::to_string(mag);
    } else {
      if (mag != 1) os << zhat::to_string(mag) << "*";
      os << "zeta_" << order_ << "^" << r;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- CycloSum

CycloSum::CycloSum(std::int64_t order) : order_(order), coeffs_(order) {
  if (order <= 0) throw std::invalid_argument("cyclotomic order must be positive");
}

void CycloSum::add(std::int64_t residue, const BigRational& c) {
  coeffs_[mod_floor(residue, order_)] += c;
}

void CycloSum::add(const CycloNumber& z, const BigRational& scale) {
  if (order_ % z.order() != 0) throw std::invalid_argument("CycloSum: order does not divide accumulator order");
  const std::int64_t step = order_ / z.order();
  const auto& cs = z.coords();
  for (std::size_t r = 0; r < cs.size(); ++r) {
    if (sgn(cs[r]) != 0) coeffs_[static_cast<std::int64_t>(r) * step] += cs[r] * scale;
  }
}

CycloNumber CycloSum::value() const { return CycloNumber::from_group_ring(order_, coeffs_); }

}  // namespace zhat
