#pragma once

// Sparse q-series q^rho * sum_e c_e q^e with integer e and exact coefficients.
//
// A series records the absolute exponent bound up to which it is complete: every term
// with total exponent rho + e <= max_exponent() is present.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "zhat/cyclotomic.hpp"
#include "zhat/laurent.hpp"
#include "zhat/rational.hpp"

namespace zhat {

template <class Coeff>
class QSeries {
 public:
  using Terms = std::map<std::int64_t, Coeff>;

  QSeries() = default;
  QSeries(BigRational prefactor, BigRational max_exponent)
      : prefactor_(std::move(prefactor)), max_exponent_(std::move(max_exponent)) {}

  const BigRational& prefactor() const { return prefactor_; }
  const BigRational& max_exponent() const { return max_exponent_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Adds c * q^exponent. Throws std::domain_error if exponent - prefactor is not an integer.
  void add(const BigRational& exponent, const Coeff& c) { add_relative(relative(exponent), c); }

  void add_relative(std::int64_t e, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Coeff coefficient(const BigRational& exponent) const {
    BigRational rel = exponent - prefactor_;
    if (!is_integer(rel)) return Coeff();
    auto it = terms_.find(to_int64(rel.get_num()));
    return it == terms_.end() ? Coeff() : it->second;
  }

  BigRational absolute_exponent(std::int64_t e) const {
    BigRational r = prefactor_ + BigRational(static_cast<long>(e));
    return r;
  }

  void set_max_exponent(BigRational m) { max_exponent_ = std::move(m); }

  bool operator==(const QSeries& o) const {
    return prefactor_ == o.prefactor_ && max_exponent_ == o.max_exponent_ && terms_ == o.terms_;
  }

 private:
  std::int64_t relative(const BigRational& exponent) const {
    BigRational rel = exponent - prefactor_;
    if (!is_integer(rel)) {
      throw std::domain_error("q-exponent " + to_string(exponent) + " is not an integer shift of the prefactor " +
                              to_string(prefactor_));
    }
    return to_int64(rel.get_num());
  }

  BigRational prefactor_{0};
  BigRational max_exponent_{0};
  Terms terms_;
};

using SymbolicSeries = QSeries<LaurentPoly>;
using EvaluatedSeries = QSeries<CycloNumber>;

/// Re-expresses the series with prefactor rho; rho must differ from the current one by an integer.
template <class Coeff>
QSeries<Coeff> rebase(const QSeries<Coeff>& s, const BigRational& rho) {
  QSeries<Coeff> out(rho, s.max_exponent());
  for (const auto& [e, c] : s.terms()) out.add(s.absolute_exponent(e), c);
  return out;
}

/// Moves the prefactor to the lowest exponent present, so the first stored term is q^0.
/// The empty series is returned unchanged.
template <class Coeff>
QSeries<Coeff> normalize(const QSeries<Coeff>& s) {
  if (s.empty()) return s;
  return rebase(s, s.absolute_exponent(s.terms().begin()->first));
}

/// Drops terms above the absolute bound and lowers the completeness bound to match.
template <class Coeff>
QSeries<Coeff> truncate(const QSeries<Coeff>& s, const BigRational& max_exponent) {
  QSeries<Coeff> out(s.prefactor(), max_exponent < s.max_exponent() ? max_exponent : s.max_exponent());
  for (const auto& [e, c] : s.terms()) {
    if (s.absolute_exponent(e) <= out.max_exponent()) out.add_relative(e, c);
  }
  return out;
}

/// Truncates both series to the smaller completeness bound and compares them after normalize().
template <class Coeff>
bool series_agree(const QSeries<Coeff>& a, const QSeries<Coeff>& b) {
  const BigRational bound = a.max_exponent() < b.max_exponent() ? a.max_exponent() : b.max_exponent();
  const auto na = normalize(truncate(a, bound));
  const auto nb = normalize(truncate(b, bound));
  return na.terms() == nb.terms() && (na.empty() || na.prefactor() == nb.prefactor());
}

/// Substitutes t = zeta into every coefficient.
EvaluatedSeries evaluate(const SymbolicSeries& s, const RationalPhase& zeta);

/// Applies t d/dt coefficientwise.
SymbolicSeries t_derivative(const SymbolicSeries& s);

/// Multiplies every coefficient by c.
template <class Coeff>
QSeries<Coeff> scale(const QSeries<Coeff>& s, const BigRational& c) {
  QSeries<Coeff> out(s.prefactor(), s.max_exponent());
  for (const auto& [e, x] : s.terms()) out.add_relative(e, x * c);
  return out;
}

// ------------------------------------------------------------------ text and JSON

/// "q", "q^3", "q^{14}", "q^{-3/2}"; empty for exponent 0.
std::string format_q_power(const BigRational& exponent);

/// The bracketed sum "1 + q + q^3 - 1/2 q^{14}" of a series body (without prefactor);
/// "0" when empty.
std::string body_text(const SymbolicSeries& s);
std::string body_text(const EvaluatedSeries& s);

/// "q^{-3/2}(...) + O(q^{...})"; the O-term is the first omitted power.
std::string to_text(const SymbolicSeries& s);
std::string to_text(const EvaluatedSeries& s);

/// {"prefactor": "-3/2", "max_exponent": "...", "terms": [{"exp": 0, "coeff": {"1": "1/2", "-1": "1/2"}}]}
nlohmann::json to_json(const SymbolicSeries& s);
/// Evaluated coefficients carry {"re", "im", "order", "coords"}; "order"/"coords" are exact.
nlohmann::json to_json(const EvaluatedSeries& s);

SymbolicSeries symbolic_series_from_json(const nlohmann::json& j);
EvaluatedSeries evaluated_series_from_json(const nlohmann::json& j);

}  // namespace zhat
