#include "zhat/table.hpp"

#include <sstream>

#include "zhat/closed_form.hpp"
#include "zhat/lattice.hpp"

namespace zhat {

namespace {

std::string constant_text(const CycloNumber& c, const BigRational& exponent) {
  const std::string q = format_q_power(exponent);
  if (!c.is_rational()) return "(" + c.to_string() + ")" + q;
  const BigRational r = c.rational_value();
  if (r == 1 && !q.empty()) return q;
  if (r == -1 && !q.empty()) return "-" + q;
  return to_string(r) + q;
}

}  // namespace

TableRow table_row(const BrieskornData& d, const RationalPhase& zeta, std::int64_t cutoff, Engine engine,
                   unsigned threads) {
  const BigRational bound = closed_form_bound(d, cutoff);
  SymbolicSeries full = engine == Engine::closed
                            ? zhathat_closed_form(d, bound)
                            : brieskorn_lattice(d, bound, LatticeOptions{false, threads});
  const auto c = closed_form_constant(d);

  TableRow row;
  row.zeta = zeta;
  row.constant_exponent = c.q_exponent;
  row.constant = laurent_evaluate(c.coeff, zeta);
  // body = C - full, split off the constant term
  SymbolicSeries rest(d.table_prefactor(), full.max_exponent());
  for (const auto& [e, coeff] : full.terms()) rest.add(full.absolute_exponent(e), -coeff);
  if (!c.coeff.is_zero() && c.q_exponent <= bound) rest.add(c.q_exponent, c.coeff);
  row.body = evaluate(rest, zeta);

  std::ostringstream os;
  const std::string pre = format_q_power(d.table_prefactor());
  if (!row.constant.is_zero()) os << constant_text(row.constant, c.q_exponent) << " ";
  os << "-" << (row.constant.is_zero() ? "" : " ") << pre << "(";
  if (!row.body.empty()) os << body_text(row.body) << " + ";
  os << "...)";
  row.text = os.str();
  return row;
}

std::vector<std::string> table_lines(const BrieskornData& d, const std::vector<RationalPhase>& zetas,
                                     std::int64_t cutoff, Engine engine, unsigned threads) {
  std::vector<std::string> out;
  for (const auto& z : zetas) out.push_back(z.to_string() + ": " + table_row(d, z, cutoff, engine, threads).text);
  return out;
}

}  // namespace zhat
