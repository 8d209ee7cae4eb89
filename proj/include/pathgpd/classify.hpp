#pragma once

#include "pathgpd/core.hpp"

// Map classification with re-checkable certificates: isofibrations, weak
// equivalences, trivial fibrations, cofibrations, hPropositions and
// monomorphisms, per the groupoid characterizations.

namespace pathgpd {

/// A chosen lift for an isofibration: object x and codomain morphism starting
/// at f(x) paired with the domain morphism covering it.
struct LiftWitness {
  int object;
  int codomain_morphism;
  int lift;
};

struct ClassificationCertificate {
  std::string property;
  bool verdict = false;
  // Class-specific positive witness data (may be empty for properties whose
  // check is a direct scan).
  std::vector<LiftWitness> lifts;                     // isofibration
  std::vector<std::pair<int, int>> ess_surj_witness;  // codomain object -> (object, iso)
  // Negative witness: a concrete counterexample, phrased per property.
  std::string counterexample;
  std::vector<int> offending; // raw ids backing the counterexample
  bool precondition_failed = false;
  std::string precondition_detail;
};

// every isomorphism f(x) -> b' lifts against f
ClassificationCertificate is_isofibration(const GroupoidMap& f);
// full, faithful and essentially surjective
ClassificationCertificate is_equivalence(const GroupoidMap& f);
ClassificationCertificate is_trivial_fibration(const GroupoidMap& f);
// injective on objects
ClassificationCertificate is_cofibration(const GroupoidMap& f);
// full and faithful isofibration; precondition: f an isofibration
ClassificationCertificate is_hproposition(const GroupoidMap& f);
// injective on objects and morphisms
ClassificationCertificate is_monomorphism(const GroupoidMap& f);

ClassificationCertificate classify(const GroupoidMap& f, const std::string& cls);

// Re-checks a positive certificate against the map it was issued for.
bool recheck_certificate(const GroupoidMap& f, const ClassificationCertificate& cert);

/// Functorial section of a trivial fibration, constructed from the lift and
/// fullness data; verified before returning.
GroupoidMap section_of_trivial_fibration(const GroupoidMap& f);

/// 2-out-of-6 report for a composable chain A -> B -> C -> D.
struct TwoOutOfSixReport {
  bool hypothesis_met = false; // g∘f and h∘g are weak equivalences
  bool f_we = false, g_we = false, h_we = false, hgf_we = false;
  bool all_pass() const { return hypothesis_met && f_we && g_we && h_we && hgf_we; }
};

TwoOutOfSixReport check_two_out_of_six(const GroupoidMap& f, const GroupoidMap& g,
                                       const GroupoidMap& h);

} // namespace pathgpd
