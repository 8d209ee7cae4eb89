#pragma once

#include <functional>
#include <span>

#include "pathgpd/core.hpp"

// Bounded exhaustive searches over functors and homotopies. All searches
// iterate in canonical order (objects, then morphisms, candidates by id), so
// every "first found" result is deterministic.

namespace pathgpd {

enum class SearchStatus { Found, Absent, CapExceeded };

template <typename T>
struct Search {
  SearchStatus status = SearchStatus::Absent;
  std::optional<T> value;
  long long nodes = 0; // search nodes visited (bound diagnostics)

  bool found() const { return status == SearchStatus::Found; }
  bool capped() const { return status == SearchStatus::CapExceeded; }
};

inline constexpr long long kDefaultCap = 50'000'000;

/// Strict equation post ∘ u = target constraining a searched functor u.
struct StrictEquation {
  const GroupoidMap* post;   // cod(u) -> Z
  const GroupoidMap* target; // dom(u) -> Z
};

/// Partial assignment forcing u on part of its domain; -1 entries are free.
struct PartialFunctor {
  std::vector<int> object_map;
  std::vector<int> morphism_map;
};

// Merges the requirement u ∘ via = value into `forced`; returns false on an
// inconsistency (in which case no functor satisfies the requirement).
bool force_composite(PartialFunctor& forced, const GroupoidMap& via, const GroupoidMap& value);

/// Enumerates functors dom -> cod satisfying all equations and the forced
/// partial assignment, in canonical order. `visit` returns false to stop
/// early (status stays Found via the wrapper functions). `cap` bounds the
/// number of search nodes.
SearchStatus for_each_functor(const GroupoidPtr& dom, const GroupoidPtr& cod,
                              std::span<const StrictEquation> eqs, const PartialFunctor& forced,
                              long long cap, long long& nodes,
                              const std::function<bool(const GroupoidMap&)>& visit);

// First functor satisfying the constraints, or Absent / CapExceeded.
Search<GroupoidMap> find_functor(const GroupoidPtr& dom, const GroupoidPtr& cod,
                                 std::span<const StrictEquation> eqs, const PartialFunctor& forced,
                                 long long cap = kDefaultCap);

/// Every functor a -> b in canonical order; `cap` bounds the number of
/// functors emitted (CapExceeded when the stream is truncated).
Search<std::vector<GroupoidMap>> enumerate_functors(const GroupoidPtr& a, const GroupoidPtr& b,
                                                    long long cap);

// ---------------------------------------------------------------------------
// Homotopy search

/// First natural isomorphism f ⇒ g, searched by choosing a component at the
/// root of each connected component of the domain and propagating along a
/// spanning forest; complete for finite inputs.
Search<NaturalIso> find_natural_iso(const GroupoidMap& f, const GroupoidMap& g,
                                    long long cap = kDefaultCap);

/// All natural isomorphisms f ⇒ g, canonical order.
std::vector<NaturalIso> all_natural_isos(const GroupoidMap& f, const GroupoidMap& g);

} // namespace pathgpd
