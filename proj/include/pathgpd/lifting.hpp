#pragma once

#include "pathgpd/constructions.hpp"
#include "pathgpd/search.hpp"

// Lifting problems against trivial fibrations and strictification of
// homotopy-commuting triangles (realignment).

namespace pathgpd {

/// A lifting square
///
///        top
///     A ----> X
///   m |       | f
///     v       v
///     B ----> Y
///       bottom
///
/// asking for a diagonal filler d : B -> X with d∘m = top and f∘d = bottom.
struct LiftingProblem {
  GroupoidMap m;      // left leg (typically a cofibration)
  GroupoidMap f;      // right leg (typically a trivial fibration)
  GroupoidMap top;    // A -> X
  GroupoidMap bottom; // B -> Y

  std::vector<Violation> validate() const;
};

/// First filler in canonical order; Absent when no filler exists,
/// CapExceeded when the node bound was hit before the search finished.
Search<GroupoidMap> solve_lifting(const LiftingProblem& p, long long cap = kDefaultCap);

/// Result of replacing g by a homotopic g′ with g′∘m = f strictly.
struct Realignment {
  GroupoidMap g_prime;
  NaturalIso witness; // g ⇒ g′
  GroupoidMap filler; // the diagonal j : B -> PC used in the construction
};

/// Given a cofibration m : A -> B, maps f : A -> C, g : B -> C and a
/// homotopy h : g∘m ⇒ f, produces g′ ∼ g with g′∘m = f strictly by lifting
/// against the path-object fibration p0 : PC -> C.
Search<Realignment> realign(const GroupoidMap& m, const GroupoidMap& f, const GroupoidMap& g,
                            const NaturalIso& h, long long cap = kDefaultCap);

} // namespace pathgpd
