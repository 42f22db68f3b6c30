// zhat: series, radial limits, property suites and printed tables for plumbed 3-manifolds.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "zhat/brieskorn.hpp"
#include "zhat/checks.hpp"
#include "zhat/closed_form.hpp"
#include "zhat/lattice.hpp"
#include "zhat/limits.hpp"
#include "zhat/plumbing.hpp"
#include "zhat/qseries.hpp"
#include "zhat/table.hpp"

namespace {

using namespace zhat;

struct SeriesArgs {
  std::vector<std::int64_t> brieskorn;
  std::string plumbing;
  std::size_t spinc = 0;
  std::int64_t cutoff = 20;
  std::string t = "symbolic";
  std::string engine;
  std::string format = "text";
  bool derivative = false;
  unsigned threads = 1;
};

struct LimitArgs {
  std::vector<std::int64_t> brieskorn;
  std::string zeta = "0/1";
  std::string xi = "0/1";
  bool derivative = false;
  bool verify = false;
  double t = 1e-3;
  std::string format = "text";
};

struct CheckArgs {
  std::string suite;
  std::uint64_t seed = 1;
  std::string format = "text";
};

struct TableArgs {
  std::vector<std::int64_t> brieskorn;
  std::string zetas = "0/1,1/2,1/3,1/4";
  std::int64_t cutoff = 20;
  std::string engine = "closed";
  unsigned threads = 1;
};

BrieskornData brieskorn_from(const std::vector<std::int64_t>& b) {
  return make_brieskorn(validate_triple(b.at(0), b.at(1), b.at(2)));
}

std::string series_text(const SymbolicSeries& s) { return to_text(normalize(s)); }
std::string series_text(const EvaluatedSeries& s) { return to_text(normalize(s)); }

template <class Series>
int emit_series(const Series& s, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(normalize(s)).dump(2) << "\n";
  } else {
    std::cout << series_text(s) << "\n";
  }
  return 0;
}

template <class Series>
int compare_engines(const Series& closed, const Series& lattice) {
  if (series_agree(closed, lattice)) {
    std::cout << "engines agree\n";
    return 0;
  }
  std::cout << "engines disagree\n";
  std::cout << "closed:  " << series_text(closed) << "\n";
  std::cout << "lattice: " << series_text(lattice) << "\n";
  return 1;
}

int run_series(const SeriesArgs& a) {
  const bool symbolic = a.t == "symbolic";
  const RationalPhase zeta = symbolic ? RationalPhase() : RationalPhase::parse(a.t);
  const LatticeOptions opts{a.derivative, a.threads};

  if (!a.plumbing.empty()) {
    if (!a.engine.empty() && a.engine != "lattice") {
      throw std::invalid_argument("--plumbing supports only --engine lattice");
    }
    std::ifstream in(a.plumbing);
    if (!in) throw std::invalid_argument("cannot open " + a.plumbing);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("malformed plumbing JSON: ") + e.what());
    }
    const auto g = graph_from_json(j);
    const auto reps = spinc_representatives(build_matrix(g));
    if (a.spinc >= reps.size()) {
      throw std::invalid_argument("--spinc " + std::to_string(a.spinc) + " out of range (" +
                                  std::to_string(reps.size()) + " structures)");
    }
    const auto& k = reps[a.spinc];
    const auto bound = lattice_bound(g, k, a.cutoff);
    const auto s = zhathat_lattice(g, k, bound, opts);
    return symbolic ? emit_series(s, a.format) : emit_series(evaluate(s, zeta), a.format);
  }

  const auto d = brieskorn_from(a.brieskorn);
  const auto bound = closed_form_bound(d, a.cutoff);
  const std::string engine = a.engine.empty() ? "closed" : a.engine;
  auto closed = [&] { return a.derivative ? zhathat_derivative(d, bound) : zhathat_closed_form(d, bound); };
  auto lattice = [&] { return brieskorn_lattice(d, bound, opts); };
  if (engine == "both") {
    const auto c = closed();
    const auto l = lattice();
    return symbolic ? compare_engines(c, l) : compare_engines(evaluate(c, zeta), evaluate(l, zeta));
  }
  const auto s = engine == "closed" ? closed() : lattice();
  return symbolic ? emit_series(s, a.format) : emit_series(evaluate(s, zeta), a.format);
}

nlohmann::json cyclo_json(const CycloNumber& z) {
  const auto c = z.to_complex();
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& x : z.coords()) coords.push_back(to_string(x));
  return {{"order", z.order()}, {"coords", coords}, {"re", c.real()}, {"im", c.imag()}, {"text", z.to_string()}};
}

int run_limit(const LimitArgs& a) {
  const auto d = brieskorn_from(a.brieskorn);
  const auto zeta = RationalPhase::parse(a.zeta);
  const auto xi = RationalPhase::parse(a.xi);
  const CycloNumber v = a.derivative ? radial_limit_derivative(d, zeta, xi) : radial_limit(d, zeta, xi);
  nlohmann::json j{{"value", cyclo_json(v)}};
  int code = 0;
  if (a.verify) {
    const auto cmp = compare_radial_numeric(d, zeta, xi, a.t, a.derivative);
    const bool ok = cmp.difference <= 1e-2;
    j["numeric"] = {{"t", a.t},
                    {"re", cmp.numeric.real()},
                    {"im", cmp.numeric.imag()},
                    {"difference", cmp.difference},
                    {"pass", ok}};
    code = ok ? 0 : 1;
  }
  if (a.format == "json") {
    std::cout << j.dump(2) << "\n";
    return code;
  }
  const auto c = v.to_complex();
  std::cout << "exact: " << v.to_string() << "\n";
  std::cout << std::setprecision(15) << "approx: " << c.real() << (c.imag() < 0 ? " - " : " + ")
            << std::abs(c.imag()) << "i\n";
  if (a.verify) {
    std::cout << "numeric at t = " << a.t << ": " << j["numeric"]["re"].get<double>() << " + "
              << j["numeric"]["im"].get<double>() << "i, difference " << j["numeric"]["difference"].get<double>()
              << (code == 0 ? " (PASS)" : " (FAIL)") << "\n";
  }
  return code;
}

int run_check(const CheckArgs& a) {
  const auto rep = run_suite(a.suite, a.seed);
  if (a.format == "json") {
    std::cout << rep.to_json().dump(2) << "\n";
  } else {
    std::cout << rep.to_text();
  }
  return rep.pass ? 0 : 1;
}

int run_table(const TableArgs& a) {
  const auto d = brieskorn_from(a.brieskorn);
  std::vector<RationalPhase> zetas;
  std::stringstream ss(a.zetas);
  for (std::string item; std::getline(ss, item, ',');) zetas.push_back(RationalPhase::parse(item));
  if (zetas.empty()) throw std::invalid_argument("--zetas needs at least one phase");
  const Engine engine = a.engine == "lattice" ? Engine::lattice : Engine::closed;
  for (const auto& line : table_lines(d, zetas, a.cutoff, engine, a.threads)) std::cout << line << "\n";
  return 0;
}

void add_brieskorn(CLI::App* cmd, std::vector<std::int64_t>& b, bool required) {
  auto* opt = cmd->add_option("--brieskorn", b, "Brieskorn triple b1 b2 b3")->expected(3);
  if (required) opt->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-variable series invariants of plumbed 3-manifolds"};
  app.require_subcommand(1);

  SeriesArgs sa;
  auto* series = app.add_subcommand("series", "Compute the q-series");
  add_brieskorn(series, sa.brieskorn, false);
  series->add_option("--plumbing", sa.plumbing, "Plumbing graph JSON file");
  series->add_option("--spinc", sa.spinc, "Index of the spin^c representative");
  series->add_option("--cutoff", sa.cutoff, "Number of integer q-powers past the lowest")->check(CLI::NonNegativeNumber);
  series->add_option("--t", sa.t, "Phase a/N for t, or 'symbolic'");
  series->add_option("--engine", sa.engine, "closed, lattice or both")
      ->check(CLI::IsMember({"closed", "lattice", "both"}));
  series->add_option("--format", sa.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  series->add_flag("--derivative", sa.derivative, "Apply t d/dt");
  series->add_option("--threads", sa.threads, "Lattice enumeration threads")->check(CLI::PositiveNumber);

  LimitArgs la;
  auto* limit = app.add_subcommand("limit", "Radial limit at a pair of roots of unity");
  add_brieskorn(limit, la.brieskorn, true);
  limit->add_option("--zeta", la.zeta, "Phase a/j for t");
  limit->add_option("--xi", la.xi, "Phase c/K that q approaches");
  limit->add_flag("--derivative", la.derivative, "Limit of the t-derivative series");
  limit->add_flag("--verify-numeric", la.verify, "Compare with the series summed near the root");
  limit->add_option("--numeric-t", la.t, "Radial distance used by --verify-numeric");
  limit->add_option("--format", la.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Run a property suite");
  check->add_option("--suite", ca.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  check->add_option("--seed", ca.seed, "Random seed");
  check->add_option("--format", ca.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Rows in printed-table layout");
  add_brieskorn(table, ta.brieskorn, true);
  table->add_option("--zetas", ta.zetas, "Comma-separated phases");
  table->add_option("--cutoff", ta.cutoff, "Last q-power shown, relative to the prefactor")
      ->check(CLI::NonNegativeNumber);
  table->add_option("--engine", ta.engine, "closed or lattice")->check(CLI::IsMember({"closed", "lattice"}));
  table->add_option("--threads", ta.threads, "Lattice enumeration threads")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*series) {
      if (sa.brieskorn.empty() == sa.plumbing.empty()) {
        throw std::invalid_argument("give exactly one of --brieskorn and --plumbing");
      }
      return run_series(sa);
    }
    if (*limit) return run_limit(la);
    if (*check) return run_check(ca);
    if (*table) return run_table(ta);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
