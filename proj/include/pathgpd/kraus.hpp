#pragma once

#include <stdexcept>

#include "pathgpd/classify.hpp"
#include "pathgpd/univalence.hpp"

// Homogeneity and the monomorphism pipeline: homogeneous structure on A,
// transfer along a smallness witness, and the certificate that cofibrations
// out of homogeneous domains are monomorphisms.

namespace pathgpd {

/// Product bookkeeping for A² and A³ = (A×A)×A with the standard
/// projections and the two diagonal-like sections of q01.
struct TripleProduct {
  GroupoidPtr a;
  ProductData p2; // A×A
  ProductData p3; // (A×A)×A
  GroupoidMap pi0, pi1; // A² -> A
  GroupoidMap q01;      // A³ -> A²
  GroupoidMap q2;       // A³ -> A (third coordinate)
  GroupoidMap s0, s1;   // A² -> A³, ⟨id, π₀⟩ and ⟨id, π₁⟩
};

TripleProduct triple_product(const GroupoidPtr& a);

/// e : A³ -> A³, an equivalence strictly over A², whose action on the third
/// coordinate swaps the roles of the two sections up to homotopy.
struct HomogeneityWitness {
  TripleProduct tp;
  GroupoidMap e;
  NaturalIso section_homotopy; // q2∘e∘s0 ⇒ q2∘s1
};

std::vector<Violation> validate_homogeneity_witness(const HomogeneityWitness& hw);

/// θ(g, h, k) = (g, h, h g⁻¹ k) on B(G³) for abelian G; the sections agree
/// strictly, so the section homotopy is the identity.
HomogeneityWitness abelian_theta(const FiniteGroup& grp);

/// Exhaustive search: equivalences of A³ over A² first, then the section
/// homotopy.
Search<HomogeneityWitness> search_homogeneity(const GroupoidPtr& a, long long cap = kDefaultCap);

/// A homotopy ι∘π₀ ⇒ ι∘π₁ on A×A: the two ways of naming a point of A in
/// the universe agree.
struct UHomogeneityWitness {
  NaturalIso homotopy;
  ProductData p2;
  GroupoidMap iota; // A -> 𝒰̇
};

std::vector<Violation> validate_u_homogeneity_witness(const UHomogeneityWitness& w);

enum class UHomogenizeStatus { Ok, NoWeakUnivalence, CapExceeded };

struct UHomogenizeResult {
  UHomogenizeStatus status = UHomogenizeStatus::NoWeakUnivalence;
  std::optional<UHomogeneityWitness> witness;
  // when absent, the instance the universe fails weak univalence on
  std::optional<UnivalenceInstance> refuting_instance;
  long long nodes = 0;
};

/// Transfers a homogeneity witness along a smallness witness (terminal base)
/// by pasting the weak-univalence homotopy of the instance given by e with
/// the section homotopy.
UHomogenizeResult u_homogenize(const HomogeneityWitness& hw, const SmallnessWitness& sw,
                               const Universe& u, long long cap = kDefaultCap);

/// Thrown when a completed pipeline contradicts the independent check; with
/// genuine inputs this never fires, and the hypothetical-witness report
/// relies on catching it.
struct PipelineInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

struct MonoCertificate {
  GroupoidMap m;    // the cofibration A -> B
  GroupoidMap j;    // realigned classifier B -> 𝒰̇ with j∘m = ι
  GroupoidMap iota; // A -> 𝒰̇
  GroupoidMap s;    // the section B -> A used
  NaturalIso realign_witness; // ι∘s ⇒ j
  ClassificationCertificate iota_monic;
  ClassificationCertificate m_monic; // independent verdict
};

/// The pipeline: whisker the homogeneity homotopy with ⟨id, s∘m⟩, realign
/// against ι, and certify. Throws on precondition failure and on internal
/// inconsistency (the independent mono check disagreeing).
MonoCertificate kraus_main(const UHomogeneityWitness& uhw, const SmallnessWitness& sw,
                           const GroupoidMap& m, const GroupoidMap& s,
                           long long cap = kDefaultCap);

struct TruncationMonoReport {
  int group_order = 0;
  bool monic = false;
  bool expected = false; // trivial group
  std::string counterexample; // collapsing pair for nontrivial groups
  bool matches() const { return monic == expected; }
};

/// Truncates B(G) -> 1 and classifies the first factor.
TruncationMonoReport truncation_mono_check(const FiniteGroup& grp);

struct NonSmallnessReport {
  enum class Branch { RefutingInstance, Contradiction };
  Branch branch = Branch::RefutingInstance;
  // RefutingInstance: the instance on which weak univalence fails
  std::optional<UnivalenceInstance> refuting_instance;
  // Contradiction: the pipeline conclusion vs the direct truncation check
  bool pipeline_concludes_monic = false;
  TruncationMonoReport truncation;
  std::string pipeline_outcome;
  bool contradiction = false;
};

/// Refutes "the candidate universe is univalent and contains B(G)" for
/// nontrivial abelian G. Normally exhibits the failing weak-univalence
/// instance; a caller-injected (hypothetical) homogeneity witness forces the
/// contradiction branch instead.
NonSmallnessReport abelian_nonsmallness_report(
    const FiniteGroup& grp, const Universe& candidate, const SmallnessWitness& sw,
    const std::optional<UHomogeneityWitness>& injected = std::nullopt,
    long long cap = kDefaultCap);

} // namespace pathgpd
