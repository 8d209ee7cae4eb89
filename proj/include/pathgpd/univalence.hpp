#pragma once

#include "pathgpd/constructions.hpp"
#include "pathgpd/search.hpp"

// Univalence instances over a universe: smallness witnesses, coherent
// homotopy pairs, weak witnesses, and the complete-group construction.

namespace pathgpd {

/// Exhibits a map (square.left : A -> C) as a pullback of the universe
/// projection along square.bottom : C -> 𝒰. square.top is the map A -> 𝒰̇.
struct SmallnessWitness {
  PullbackSquare square;
  std::optional<GroupoidMap> iota; // the top map, kept when C is terminal
};

/// Searches for a point 1 -> 𝒰 whose fibre is isomorphic to `a` and returns
/// the resulting square with apex literally `a`. Absence is a legitimate
/// result (not every groupoid is a fibre of every universe).
std::optional<SmallnessWitness> smallness_witness(const GroupoidPtr& a, const Universe& u);

/// Two small fibrations over a common base C together with an equivalence
/// e : A -> B over C (strict triangle wb.left ∘ e = wa.left).
struct UnivalenceInstance {
  Universe universe;
  SmallnessWitness wa; // A, classifying map f = wa.square.bottom, top i
  SmallnessWitness wb; // B, classifying map g = wb.square.bottom, top j
  GroupoidMap e;       // A -> B

  const GroupoidMap& f() const { return wa.square.bottom; }
  const GroupoidMap& g() const { return wb.square.bottom; }
  const GroupoidMap& i() const { return wa.square.top; }
  const GroupoidMap& j() const { return wb.square.top; }
};

std::vector<Violation> validate_instance(const UnivalenceInstance& inst);

/// The two coherent homotopies: C -> P𝒰 from f to g and A -> P𝒰̇ from i to
/// j∘e, commuting strictly over the path-object comparison map.
struct CoherentHomotopyPair {
  GroupoidMap base_homotopy;  // C -> P𝒰
  GroupoidMap total_homotopy; // A -> P𝒰̇
};

// Re-validates boundary equalities and the strict coherence square.
std::vector<Violation> validate_coherent_pair(const UnivalenceInstance& inst,
                                              const CoherentHomotopyPair& pair);

/// Exhaustive search for a coherent pair, iterating base homotopies in
/// canonical order and solving for the total homotopy under the coherence
/// constraint. The universe's coherent path data is built on demand.
Search<CoherentHomotopyPair> check_univalence_instance(const UnivalenceInstance& inst,
                                                       long long cap = kDefaultCap);

/// Direct search for a homotopy j∘e ⇒ i (the base homotopy forgotten).
Search<NaturalIso> weak_univalence_witness(const UnivalenceInstance& inst,
                                           long long cap = kDefaultCap);

struct CompleteGroupReport {
  std::vector<int> centre;
  int automorphism_count = 0;
  int inner_count = 0;
  bool verdict = false; // trivial centre and Aut = Inn
};

CompleteGroupReport is_complete_group(const FiniteGroup& grp);

/// For a complete group G and an equivalence theta of C × BG over C, solves
/// θ(1_a, g) = h_a⁻¹ g h_a at each object and assembles the verified
/// homotopy h : π₁∘θ ⇒ π₁. Throws if G is not complete.
NaturalIso complete_group_univalence(const FiniteGroup& grp, const GroupoidPtr& c,
                                     const GroupoidMap& theta);

/// All univalence instances over c: classifying maps C -> 𝒰 paired with the
/// equivalences over C between their pullbacks. Deterministic order.
Search<std::vector<UnivalenceInstance>> enumerate_equivalences_over(const GroupoidPtr& c,
                                                                    const Universe& u,
                                                                    long long cap = kDefaultCap);

} // namespace pathgpd
