#include "zhat/qseries.hpp"

#include <sstream>
#include <vector>

namespace zhat {

EvaluatedSeries evaluate(const SymbolicSeries& s, const RationalPhase& zeta) {
  EvaluatedSeries out(s.prefactor(), s.max_exponent());
  for (const auto& [e, c] : s.terms()) out.add_relative(e, laurent_evaluate(c, zeta));
  return out;
}

SymbolicSeries t_derivative(const SymbolicSeries& s) {
  SymbolicSeries out(s.prefactor(), s.max_exponent());
  for (const auto& [e, c] : s.terms()) out.add_relative(e, laurent_t_derivative(c));
  return out;
}

std::string format_q_power(const BigRational& exponent) {
  if (sgn(exponent) == 0) return "";
  if (exponent == 1) return "q";
  const std::string e = to_string(exponent);
  if (e.size() == 1) return "q^" + e;
  return "q^{" + e + "}";
}

namespace {

bool rational_coefficient(const LaurentPoly& c, BigRational& out) {
  if (c.terms().size() != 1 || c.terms().begin()->first != 0) return false;
  out = c.terms().begin()->second;
  return true;
}

bool rational_coefficient(const CycloNumber& c, BigRational& out) {
  if (!c.is_rational()) return false;
  out = c.rational_value();
  return true;
}

template <class Coeff>
std::string body(const QSeries<Coeff>& s) {
  if (s.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    const std::string q = format_q_power(BigRational(static_cast<long>(e)));
    BigRational r;
    if (rational_coefficient(c, r)) {
      if (first) os << (sgn(r) < 0 ? "-" : "");
      else os << (sgn(r) < 0 ? " - " : " + ");
      const BigRational mag = abs(r);
      if (q.empty()) os << to_string(mag);
      else if (mag == 1) os << q;
      else os << to_string(mag) << " " << q;
    } else {
      if (!first) os << " + ";
      os << "(" << c.to_string() << ")" << q;
    }
    first = false;
  }
  return os.str();
}

template <class Coeff>
std::string text(const QSeries<Coeff>& s) {
  std::ostringstream os;
  const std::string pre = format_q_power(s.prefactor());
  if (pre.empty()) os << "(" << body(s) << ")";
  else os << pre << "(" << body(s) << ")";
  // first exponent of the form prefactor + integer that lies beyond the completeness bound
  const BigRational next = s.prefactor() + BigRational(floor(s.max_exponent() - s.prefactor()) + 1);
  const std::string big_o = format_q_power(next);
  os << " + O(" << (big_o.empty() ? "1" : big_o) << ")";
  return os.str();
}

nlohmann::json cyclo_to_json(const CycloNumber& c) {
  const auto z = c.to_complex();
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& x : c.coords()) coords.push_back(to_string(x));
  return {{"re", z.real()}, {"im", z.imag()}, {"order", c.order()}, {"coords", coords}};
}

CycloNumber cyclo_from_json(const nlohmann::json& j) {
  if (!j.contains("order") || !j.contains("coords")) {
    throw std::invalid_argument("evaluated coefficient needs exact \"order\" and \"coords\"");
  }
  std::vector<BigRational> coords;
  for (const auto& x : j.at("coords")) coords.push_back(parse_rational(x.get<std::string>()));
  return CycloNumber::from_coords(j.at("order").get<std::int64_t>(), std::move(coords));
}

template <class Coeff, class CoeffToJson>
nlohmann::json series_json(const QSeries<Coeff>& s, CoeffToJson&& coeff_json) {
  nlohmann::json j;
  j["prefactor"] = to_string(s.prefactor());
  j["max_exponent"] = to_string(s.max_exponent());
  j["terms"] = nlohmann::json::array();
  for (const auto& [e, c] : s.terms()) j["terms"].push_back({{"exp", e}, {"coeff", coeff_json(c)}});
  return j;
}

template <class Coeff, class CoeffFromJson>
QSeries<Coeff> series_from_json(const nlohmann::json& j, CoeffFromJson&& coeff_from_json) {
  if (!j.is_object() || !j.contains("prefactor") || !j.contains("terms")) {
    throw std::invalid_argument("series JSON needs \"prefactor\" and \"terms\"");
  }
  const BigRational pre = parse_rational(j.at("prefactor").get<std::string>());
  const BigRational maxe = j.contains("max_exponent") ? parse_rational(j.at("max_exponent").get<std::string>()) : pre;
  QSeries<Coeff> s(pre, maxe);
  for (const auto& t : j.at("terms")) s.add_relative(t.at("exp").get<std::int64_t>(), coeff_from_json(t.at("coeff")));
  return s;
}

}  // namespace

std::string body_text(const SymbolicSeries& s) { return body(s); }
std::string body_text(const EvaluatedSeries& s) { return body(s); }
std::string to_text(const SymbolicSeries& s) { return text(s); }
std::string to_text(const EvaluatedSeries& s) { return text(s); }

nlohmann::json to_json(const SymbolicSeries& s) {
  return series_json(s, [](const LaurentPoly& c) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, x] : c.terms()) j[std::to_string(e)] = to_string(x);
    return j;
  });
}

nlohmann::json to_json(const EvaluatedSeries& s) { return series_json(s, cyclo_to_json); }

SymbolicSeries symbolic_series_from_json(const nlohmann::json& j) {
  return series_from_json<LaurentPoly>(j, [](const nlohmann::json& c) {
    LaurentPoly p;
    for (const auto& [k, v] : c.items()) p.add_term(std::stoll(k), parse_rational(v.get<std::string>()));
    return p;
  });
}

EvaluatedSeries evaluated_series_from_json(const nlohmann::json& j) {
  return series_from_json<CycloNumber>(j, cyclo_from_json);
}

}  // namespace zhat
