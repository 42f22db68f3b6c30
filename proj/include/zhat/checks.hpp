#pragma once

// Named property suites behind `check --suite ...`. Each is deterministic for a fixed seed.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "zhat/plumbing.hpp"

namespace zhat {

struct SuiteReport {
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what);
  nlohmann::json to_json() const;
  std::string to_text() const;
};

std::vector<std::string> suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, std::uint64_t seed = 1);

/// Four alpha classes mod 4p agree, and the star tree is negative definite and unimodular,
/// on `count` random pairwise coprime triples with b3 <= 200.
SuiteReport check_alphas(std::uint64_t seed, int count = 100);
/// phi(.; zeta) is 2pj-periodic with exact mean zero for zeta of order 1, 2, 3, 4, 6.
SuiteReport check_periodicity();
/// n^2 = w + 4pi mod 4pj for some 0 <= i < j whenever phi(n) != 0, j <= 6.
SuiteReport check_lemma61();
/// Lattice series before and after a blow-up agree (symbolic t, cutoff 40).
SuiteReport check_neumann();
/// Remainder order of the asymptotic expansion for (2,3,5) and (2,3,7), R = 0..3,
/// t in {0.2, 0.1, 0.05}.
SuiteReport check_asymptotic();

struct NeumannPair {
  std::string label;
  PlumbingGraph before;
  PlumbingGraph after;  // before with one (-1)-vertex blown up; blow_down(after, last) == before
};
std::vector<NeumannPair> neumann_pairs();

}  // namespace zhat
