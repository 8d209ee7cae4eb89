#pragma once

#include "pathgpd/core.hpp"

// Limits, path objects, factorizations, truncations and universe builders:
// the path-category structure carried by finite groupoids.

namespace pathgpd {

/// A commuting square
///
///        top
///   apex ----> X
///    |         | right
///    v  left   v
///    Y ------> Z
///       bottom
///
/// with a probe-based universal-property certificate.
struct PullbackSquare {
  GroupoidPtr apex;
  GroupoidMap top, left;    // from the apex
  GroupoidMap right, bottom; // into the cospan corner
  bool certified = false;

  // apex bookkeeping: apex object i is the pair (object_pairs[i]) in (X, Y)
  std::vector<std::pair<int, int>> object_pairs;
  std::vector<std::pair<int, int>> morphism_pairs;

  std::optional<int> apex_obj(int x, int y) const;
  std::optional<int> apex_mor(int mx, int my) const;
};

/// Strict pullback of an isofibration `f` (= right) along `g` (= bottom).
/// Throws if `f` is not an isofibration or the codomains differ.
PullbackSquare pullback(const GroupoidMap& f, const GroupoidMap& g);

/// Universal-property check by enumeration over a probe catalog (terminal,
/// interval, discrete(2), deloopings of small cyclic groups): every cone
/// factors uniquely through the apex.
bool verify_pullback_square(const PullbackSquare& sq, int max_cyclic = 4);

/// Induced map into the apex from a cone (u into X, v into Y) with
/// right∘u = bottom∘v.
GroupoidMap pullback_pairing(const PullbackSquare& sq, const GroupoidMap& u, const GroupoidMap& v);

/// Path object PB: the arrow groupoid of the base. Object i of `total` is
/// morphism i of `base`; a morphism φ -> ψ is the pair (a, c) with
/// c∘φ = ψ∘a, stored by its `a`-component (c is determined).
struct PathObjectData {
  GroupoidPtr base, total;
  GroupoidMap r;      // base -> total, x ↦ id_x
  GroupoidMap p0, p1; // total -> base, source / target

  // morphism index of the arrow-groupoid morphism (phi -> psi, a-component)
  int total_mor(int phi, int psi, int a) const;
  int a_component(int m) const;
  int c_component(int m) const;

  std::vector<int> mor_phi, mor_psi, mor_a, mor_c;
  std::vector<std::vector<int>> index_; // (phi, psi) -> a -> morphism id
};

PathObjectData path_object(const GroupoidPtr& b);

// Converts a homotopy in natural-iso form into the A -> PB functor form.
GroupoidMap natiso_to_path_functor(const NaturalIso& h, const PathObjectData& pb);
// And back: boundary functors are p0∘H and p1∘H.
NaturalIso path_functor_to_natiso(const GroupoidMap& H, const PathObjectData& pb);

/// Factorization of f as a weak equivalence followed by an isofibration via
/// the mapping path groupoid: objects (x, β : f(x) -> y).
struct Factorization {
  GroupoidMap original;
  GroupoidPtr middle;
  GroupoidMap we_part;  // X -> middle
  GroupoidMap fib_part; // middle -> Y

  std::vector<std::pair<int, int>> objects; // (x, β)
  std::optional<int> middle_obj(int x, int beta) const;
  // morphism (x,β) -> (x',β') indexed by its u-component
  std::optional<int> middle_mor(int o1, int o2, int u) const;
  std::vector<int> mor_u, mor_v, mor_src, mor_dst;
};

Factorization factor_we_fib(const GroupoidMap& f);

/// Propositional truncation of an isofibration f : A -> B: bijective on
/// objects (i) followed by full-and-faithful (f_prime).
struct Truncation {
  GroupoidPtr truncated;
  GroupoidMap i;       // A -> truncated
  GroupoidMap f_prime; // truncated -> B
};

Truncation truncate(const GroupoidMap& f);

/// Coherent path-object bundle on a universe (the commuting rectangle with
/// its canonical comparison fibration).
struct CoherentPathData {
  PathObjectData base_path;     // P𝒰
  GroupoidPtr total_path;       // P𝒰̇
  GroupoidMap r_total;          // 𝒰̇ -> P𝒰̇
  GroupoidMap p0_total, p1_total; // P𝒰̇ -> 𝒰̇
  GroupoidMap to_base_path;     // P𝒰̇ -> P𝒰 (fibration)
  GroupoidMap canonical;        // P𝒰̇ -> P𝒰 ×_{𝒰×𝒰} 𝒰̇×𝒰̇ (fibration)
  PullbackSquare q_square;      // the pullback defining the comparison corner
  Factorization factorization;  // retains index bookkeeping for P𝒰̇
};

struct Universe {
  GroupoidPtr total; // 𝒰̇
  GroupoidPtr base;  // 𝒰
  GroupoidMap projection;
  std::string description;
  std::shared_ptr<const CoherentPathData> coherent; // populated on demand
};

/// Builds the coherent path object for `u` (projection must be an
/// isofibration) and returns the universe with `coherent` populated.
Universe coherent_path_object(const Universe& u);

/// Universe of canonical finite sets {0..k-1}, k ≤ n, with bijections;
/// total part is pointed sets with point-preserving bijections.
Universe finset_universe(int n);
/// 𝒰 = 1, 𝒰̇ = BG.
Universe delooping_universe(const FiniteGroup& grp);

} // namespace pathgpd
