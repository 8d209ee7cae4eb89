#pragma once

#include <random>

#include "pathgpd/core.hpp"

// Seeded generators for the randomized suites: structured groupoids built
// from group components, functors between them, inflations (equivalences and
// trivial fibrations with the same total), and homotopy twists. All draws go
// through the fixed mt19937 engine so runs are reproducible by seed.

namespace pathgpd {

/// A groupoid assembled from connected components, each a "chaotic" groupoid
/// on a small group: morphisms are triples (i, j, g) composing by
/// (j, k, h)∘(i, j, g) = (i, k, h·g).
struct CorpusGroupoid {
  GroupoidPtr g;
  std::vector<FiniteGroup> groups;          // per component
  std::vector<std::vector<int>> objects_in; // per component, ascending
  std::vector<int> comp_of_obj;
  std::vector<int> comp_offset; // first morphism id of each component

  int mor(int i, int j, int gelem) const;
  // (i, j, g) of a morphism id
  std::tuple<int, int, int> split(int m) const;
};

/// Up to `max_objects` objects split into components whose groups have order
/// at most `max_hom` (drawn from 1, Z/2, Z/3, Z/4, Z/2×Z/2).
CorpusGroupoid random_groupoid(std::mt19937& rng, int max_objects = 4, int max_hom = 4);

/// Random functor a -> b: per component a target component, a group
/// homomorphism, an object assignment and conjugating twists.
GroupoidMap random_functor(std::mt19937& rng, const CorpusGroupoid& a, const CorpusGroupoid& b);

/// Duplicates objects of `a` (each into 1 or 2 copies) keeping all hom-sets;
/// the projection is a trivial fibration, the first-copy inclusion is both a
/// cofibration and an equivalence.
struct InflationData {
  GroupoidPtr total;
  GroupoidMap projection; // total -> a, trivial fibration
  GroupoidMap inclusion;  // a -> total, injective on objects
};

InflationData random_inflation(std::mt19937& rng, const GroupoidPtr& a);

/// A homotopy from f to a conjugated copy of f (random component at each
/// object); the target functor is read off the components.
NaturalIso random_twist(std::mt19937& rng, const GroupoidMap& f);

} // namespace pathgpd
