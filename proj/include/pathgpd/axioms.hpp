#pragma once

#include <string>
#include <vector>

#include "pathgpd/core.hpp"

// Randomized suite for the path-category structure: path-object invariants,
// pullback stability of trivial fibrations, sections, 2-out-of-6, and the
// homotopy congruence laws, over seeded corpora.

namespace pathgpd {

struct AxiomSuiteReport {
  unsigned seed = 0;
  int runs = 0;
  int failures = 0;
  std::vector<std::string> failure_details; // at most one line per failing run
  bool pass() const { return failures == 0; }
};

AxiomSuiteReport run_axiom_suite(unsigned seed, int runs, int max_objects = 4, int max_hom = 4);

} // namespace pathgpd
