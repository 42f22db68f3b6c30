#include "zhat/checks.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "zhat/brieskorn.hpp"
#include "zhat/lattice.hpp"
#include "zhat/limits.hpp"

namespace zhat {

void SuiteReport::expect(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  pass = false;
  failures.push_back(what);
}

nlohmann::json SuiteReport::to_json() const {
  return {{"suite", name}, {"pass", pass}, {"cases", cases}, {"failures", failures}, {"notes", notes}};
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  for (const auto& n : notes) os << n << "\n";
  for (const auto& f : failures) os << "failed: " << f << "\n";
  os << name << ": " << (pass ? "PASS" : "FAIL") << " (" << cases << " cases, " << failures.size()
     << " failures)\n";
  return os.str();
}

std::vector<std::string> suite_names() { return {"alphas", "periodicity", "lemma61", "neumann", "asymptotic"}; }

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "alphas") return check_alphas(seed);
  if (name == "periodicity") return check_periodicity();
  if (name == "lemma61") return check_lemma61();
  if (name == "neumann") return check_neumann();
  if (name == "asymptotic") return check_asymptotic();
  throw std::invalid_argument("unknown suite '" + name + "'");
}

namespace {

std::string triple_label(const BrieskornTriple& b) {
  return "(" + std::to_string(b.b1) + "," + std::to_string(b.b2) + "," + std::to_string(b.b3) + ")";
}

const std::vector<RationalPhase>& lemma_zetas() {
  static const std::vector<RationalPhase> z{{0, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 6}};
  return z;
}

}  // namespace

SuiteReport check_alphas(std::uint64_t seed, int count) {
  SuiteReport rep{"alphas"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(2, 200);
  int done = 0;
  while (done < count) {
    std::int64_t v[3] = {pick(rng), pick(rng), pick(rng)};
    std::sort(v, v + 3);
    if (!(v[0] < v[1] && v[1] < v[2])) continue;
    if (std::gcd(v[0], v[1]) != 1 || std::gcd(v[0], v[2]) != 1 || std::gcd(v[1], v[2]) != 1) continue;
    ++done;
    const BrieskornTriple b{v[0], v[1], v[2]};
    const auto a = alphas(b);
    const std::int64_t m = 4 * a.p;
    bool agree = true;
    for (int k = 1; k < 4; ++k) {
      agree = agree && mod_floor(a.alpha[k] * a.alpha[k] - a.alpha[0] * a.alpha[0], m) == 0;
    }
    rep.expect(agree, "alpha_k^2 classes differ for " + triple_label(b));
    try {
      const auto tree = plumbing_tree(b);
      const auto mat = build_matrix(tree.graph);
      rep.expect(is_negative_definite(mat) && abs(determinant(mat.to_int_matrix())) == 1,
                 "tree not negative definite and unimodular for " + triple_label(b));
    } catch (const std::exception& e) {
      rep.expect(false, "tree construction failed for " + triple_label(b) + ": " + e.what());
    }
  }
  rep.notes.push_back("seed " + std::to_string(seed) + ", " + std::to_string(count) + " triples with b3 <= 200");
  return rep;
}

SuiteReport check_periodicity() {
  SuiteReport rep{"periodicity"};
  for (auto b : {BrieskornTriple{2, 3, 5}, BrieskornTriple{2, 3, 7}}) {
    const auto d = make_brieskorn(b);
    for (const auto& z : lemma_zetas()) {
      const std::int64_t period = 2 * d.p * z.order();
      CycloSum total(z.order());
      bool periodic = true;
      bool odd = true;
      for (std::int64_t n = 1; n <= period; ++n) {
        const auto v = laurent_evaluate(phi(n, d), z);
        total.add(v);
        periodic = periodic && v == laurent_evaluate(phi(n + period, d), z);
        if (z.order() == 1) odd = odd && laurent_evaluate(phi(period - n, d), z) == -v;
      }
      const std::string where = triple_label(b) + " at zeta = " + z.to_string();
      rep.expect(periodic, "phi not 2pj-periodic for " + where);
      rep.expect(total.value().is_zero(), "phi has non-zero mean for " + where);
      if (z.order() == 1) rep.expect(odd, "phi(2p - n; 1) != -phi(n; 1) for " + where);
    }
  }
  return rep;
}

SuiteReport check_lemma61() {
  SuiteReport rep{"lemma61"};
  for (auto b : {BrieskornTriple{2, 3, 5}, BrieskornTriple{2, 3, 7}, BrieskornTriple{2, 7, 15}}) {
    const auto d = make_brieskorn(b);
    for (std::int64_t j = 1; j <= 6; ++j) {
      const std::int64_t mod = 4 * d.p * j;
      bool ok = true;
      for (std::int64_t n = 0; n < 2 * d.p * j; ++n) {
        if (phi(n, d).is_zero()) continue;
        bool found = false;
        for (std::int64_t i = 0; i < j && !found; ++i) found = mod_floor(n * n - d.w - 4 * d.p * i, mod) == 0;
        ok = ok && found;
      }
      rep.expect(ok, "n^2 outside w + 4pi mod 4pj for " + triple_label(b) + ", j = " + std::to_string(j));
    }
  }
  return rep;
}

std::vector<NeumannPair> neumann_pairs() {
  const auto e8 = make_brieskorn(2, 3, 5).tree.graph;
  const auto t237 = make_brieskorn(2, 3, 7).tree.graph;
  // the E8 edge between the centre (3) and its first neighbour, and a leaf of the (2,3,7) star
  const auto& edge = e8.edges.front();
  std::vector<NeumannPair> out;
  out.push_back({"E8 with an edge blown up", e8, blow_up_edge(e8, edge.first, edge.second)});
  out.push_back({"(2,3,7) star with a leaf blown up", t237, blow_up_vertex(t237, 2)});
  out.push_back({"(2,3,7) star with the centre blown up", t237, blow_up_vertex(t237, 3)});
  return out;
}

SuiteReport check_neumann() {
  SuiteReport rep{"neumann"};
  for (const auto& pair : neumann_pairs()) {
    const std::size_t last = pair.after.size() - 1;
    const auto m0 = build_matrix(pair.before), m1 = build_matrix(pair.after);
    // edge order may differ, so compare the matrices
    rep.expect(build_matrix(blow_down(pair.after, last)).entries == m0.entries,
               pair.label + ": blow-down does not invert the blow-up");
    rep.expect(is_negative_definite(m1), pair.label + ": blown-up graph is not negative definite");
    const auto k0 = spinc_representatives(m0).front(), k1 = spinc_representatives(m1).front();
    const auto s0 = zhathat_lattice(pair.before, k0, lattice_bound(pair.before, k0, 40));
    const auto s1 = zhathat_lattice(pair.after, k1, lattice_bound(pair.after, k1, 40));
    rep.expect(series_agree(s0, s1), pair.label + ": series differ");
    rep.notes.push_back(pair.label + ": " + std::to_string(s0.terms().size()) + " q-powers compared");
  }
  return rep;
}

SuiteReport check_asymptotic() {
  SuiteReport rep{"asymptotic"};
  const std::vector<double> grid{0.2, 0.1, 0.05};
  for (auto b : {BrieskornTriple{2, 3, 5}, BrieskornTriple{2, 3, 7}}) {
    const auto d = make_brieskorn(b);
    for (const auto& z : {RationalPhase(0, 1), RationalPhase(1, 4), RationalPhase(1, 3)}) {
      for (const auto& x : {RationalPhase(0, 1), RationalPhase(1, 2)}) {
        const auto c = build_C(d, z, x);
        for (unsigned r = 0; r <= 3; ++r) {
          const auto a = asymptotic_check(c, d.p, r, grid);
          std::ostringstream label;
          label << triple_label(b) << " zeta = " << z.to_string() << " xi = " << x.to_string() << " R = " << r
                << ": fitted order " << (a.fitted_orders.empty() ? 0.0 : a.fitted_orders.back())
                << (a.below_noise ? " (below noise)" : "");
          rep.notes.push_back(label.str());
          rep.expect(a.pass, label.str());
        }
      }
    }
  }
  return rep;
}

}  // namespace zhat
