#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

// Finite groupoids, groups, functors and natural isomorphisms with exact
// table-based representations. All values are immutable after construction;
// every operation is a pure function.

namespace pathgpd {

struct MorphismData {
  int src = -1;
  int dst = -1;
};

/// A finite groupoid given by explicit tables. Objects and morphisms are
/// indexed 0..n-1 in their input order; that order is the canonical order
/// used by every enumeration and search in the library.
///
/// Composition is stored sparsely: for morphisms g, f with src(g) == dst(f),
/// the composite g∘f is found in compose_rows[g] at the position of f within
/// the in-list of src(g). This keeps large constructed groupoids (arrow
/// groupoids of universes and the like) affordable.
class FiniteGroupoid {
public:
  FiniteGroupoid() = default;

  // Raw data; treat as read-only once finalize() has run.
  std::vector<std::string> object_names;   // optional, autogenerated if empty
  std::vector<std::string> morphism_names; // optional
  std::vector<MorphismData> morphisms;
  std::vector<int> identity; // object -> morphism id
  std::vector<int> inverse;  // morphism id -> morphism id

  // Builds hom tables and the sparse composition index from `dense_compose`
  // entries fed through set_composite(). Must be called exactly once.
  void finalize();

  void reserve_composites();
  void set_composite(int g, int f, int gf);

  int num_objects() const { return static_cast<int>(identity.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms.size()); }
  int src(int m) const { return morphisms[m].src; }
  int dst(int m) const { return morphisms[m].dst; }
  int id_of(int obj) const { return identity[obj]; }
  int inv(int m) const { return inverse[m]; }
  bool is_identity(int m) const { return identity[morphisms[m].src] == m && morphisms[m].src == morphisms[m].dst; }

  bool composable(int g, int f) const { return src(g) == dst(f); }
  // g∘f; requires composable(g, f).
  int compose(int g, int f) const;

  const std::vector<int>& hom(int a, int b) const;
  const std::vector<int>& morphisms_from(int a) const { return out_of_[a]; }
  const std::vector<int>& morphisms_into(int b) const { return into_[b]; }

  std::string object_name(int o) const;
  std::string morphism_name(int m) const;
  std::optional<int> object_index(const std::string& name) const;
  std::optional<int> morphism_index(const std::string& name) const;

  bool structurally_equal(const FiniteGroupoid& other) const;

private:
  std::vector<std::vector<int>> hom_table_; // (a*n + b) -> sorted morphism ids
  std::vector<std::vector<int>> out_of_, into_;
  std::vector<int> pos_in_into_;            // morphism -> position within into_[dst]
  std::vector<std::vector<int>> compose_rows_;
  bool finalized_ = false;
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

inline bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b) {
  return a == b || (a && b && a->structurally_equal(*b));
}

/// One law violation (or structural defect) found by a validator.
struct Violation {
  std::string law;    // e.g. "associativity", "inverse-law", "structure"
  std::string detail; // names the witnessing ids
};

// Exhaustive check of all groupoid laws. Structural defects (dangling ids,
// missing composites for composable pairs) are reported with law
// "structure", distinct from genuine law violations.
std::vector<Violation> validate_groupoid(const FiniteGroupoid& g);

/// A functor between finite groupoids.
struct GroupoidMap {
  GroupoidPtr dom, cod;
  std::vector<int> object_map;
  std::vector<int> morphism_map;

  int obj(int o) const { return object_map[o]; }
  int mor(int m) const { return morphism_map[m]; }
};

std::vector<Violation> validate_map(const GroupoidMap& f);

GroupoidMap identity_map(const GroupoidPtr& g);
// (g∘f)(x) = g(f(x)); requires codomain(f) = domain(g) (structurally).
GroupoidMap compose_maps(const GroupoidMap& g, const GroupoidMap& f);
bool maps_equal(const GroupoidMap& f, const GroupoidMap& g);
bool parallel(const GroupoidMap& f, const GroupoidMap& g);

/// A natural isomorphism between parallel functors; the groupoid form of a
/// homotopy from `source` to `target`.
struct NaturalIso {
  GroupoidMap source, target;
  std::vector<int> components; // object of dom -> morphism of cod
};

std::vector<Violation> validate_natural_iso(const NaturalIso& h);

NaturalIso identity_iso(const GroupoidMap& f);
NaturalIso iso_inverse(const NaturalIso& h);
// Vertical composition: b : G ⇒ H after a : F ⇒ G gives F ⇒ H.
NaturalIso vcompose(const NaturalIso& b, const NaturalIso& a);
// Precomposition with k : X → dom: components at x are h at k(x).
NaturalIso whisker_pre(const NaturalIso& h, const GroupoidMap& k);
// Postcomposition with k : cod → Y: components are k of h's components.
NaturalIso whisker_post(const GroupoidMap& k, const NaturalIso& h);

// ---------------------------------------------------------------------------
// Finite groups and deloopings

struct FiniteGroup {
  std::vector<std::string> element_names;
  std::vector<std::vector<int>> table; // table[a][b] = a*b
  int identity = 0;
  std::vector<int> inverse;

  int order() const { return static_cast<int>(table.size()); }
  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverse[a]; }
  std::string element_name(int e) const;
};

std::vector<Violation> validate_group(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);
std::vector<int> centre(const FiniteGroup& g);

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup symmetric_group(int n); // intended for small n
FiniteGroup dihedral_group(int n);  // order 2n
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
std::optional<FiniteGroup> group_by_name(const std::string& name);

// All homomorphisms g -> h as element maps, in canonical order.
std::vector<std::vector<int>> all_homomorphisms(const FiniteGroup& g, const FiniteGroup& h);
// All automorphisms of g (bijective homomorphisms).
std::vector<std::vector<int>> all_automorphisms(const FiniteGroup& g);

// The one-object groupoid BG.
GroupoidPtr delooping(const FiniteGroup& grp);
// Functor BG -> BH from a homomorphism (map-lifting companion; deloopings
// must have been produced from the matching groups).
GroupoidMap delooping_map(const std::vector<int>& hom, const GroupoidPtr& bdom, const GroupoidPtr& bcod);

// ---------------------------------------------------------------------------
// Standard objects

GroupoidPtr terminal_groupoid();
GroupoidPtr interval_groupoid(); // free-standing isomorphism: 2 objects, 4 morphisms
GroupoidPtr discrete_groupoid(int n);
GroupoidPtr indiscrete_groupoid(int n); // exactly one morphism between each ordered pair

struct CatalogEntry {
  std::string name;
  GroupoidPtr groupoid;
};
std::vector<CatalogEntry> standard_objects();

// The unique map into the terminal groupoid.
GroupoidMap to_terminal(const GroupoidPtr& g);
// The functor 1 -> g picking an object.
GroupoidMap point_map(const GroupoidPtr& g, int obj);

// ---------------------------------------------------------------------------
// Binary products

/// Product groupoid together with index bookkeeping. Object (a, b) has index
/// a * nb + b; morphism (f, g) has index f * nmb + g.
struct ProductData {
  GroupoidPtr groupoid;
  GroupoidPtr left, right;
  GroupoidMap proj0, proj1;

  int pair_obj(int a, int b) const;
  int pair_mor(int f, int g) const;
  std::pair<int, int> split_obj(int o) const;
  std::pair<int, int> split_mor(int m) const;
};

ProductData product(const GroupoidPtr& a, const GroupoidPtr& b);
// ⟨f, g⟩ : X -> a×b for parallel-domained f : X -> a, g : X -> b.
GroupoidMap pairing(const ProductData& prod, const GroupoidMap& f, const GroupoidMap& g);

} // namespace pathgpd
