#include "pathgpd/core.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace pathgpd {

// ---------------------------------------------------------------------------
// FiniteGroupoid

void FiniteGroupoid::reserve_composites() {
  const int n = num_objects();
  out_of_.assign(n, {});
  into_.assign(n, {});
  pos_in_into_.assign(num_morphisms(), -1);
  for (int m = 0; m < num_morphisms(); ++m) {
    out_of_[morphisms[m].src].push_back(m);
    pos_in_into_[m] = static_cast<int>(into_[morphisms[m].dst].size());
    into_[morphisms[m].dst].push_back(m);
  }
  compose_rows_.assign(num_morphisms(), {});
  for (int g = 0; g < num_morphisms(); ++g)
    compose_rows_[g].assign(into_[morphisms[g].src].size(), -1);
}

void FiniteGroupoid::set_composite(int g, int f, int gf) {
  compose_rows_[g][pos_in_into_[f]] = gf;
}

void FiniteGroupoid::finalize() {
  if (finalized_) throw std::logic_error("FiniteGroupoid::finalize called twice");
  const int n = num_objects();
  if (static_cast<int>(out_of_.size()) != n) reserve_composites();
  hom_table_.assign(static_cast<size_t>(n) * n, {});
  for (int m = 0; m < num_morphisms(); ++m)
    hom_table_[static_cast<size_t>(morphisms[m].src) * n + morphisms[m].dst].push_back(m);
  finalized_ = true;
}

int FiniteGroupoid::compose(int g, int f) const {
  return compose_rows_[g][pos_in_into_[f]];
}

const std::vector<int>& FiniteGroupoid::hom(int a, int b) const {
  return hom_table_[static_cast<size_t>(a) * num_objects() + b];
}

std::string FiniteGroupoid::object_name(int o) const {
  if (o < static_cast<int>(object_names.size()) && !object_names[o].empty()) return object_names[o];
  return "x" + std::to_string(o);
}

std::string FiniteGroupoid::morphism_name(int m) const {
  if (m < static_cast<int>(morphism_names.size()) && !morphism_names[m].empty()) return morphism_names[m];
  return "m" + std::to_string(m);
}

std::optional<int> FiniteGroupoid::object_index(const std::string& name) const {
  for (int o = 0; o < num_objects(); ++o)
    if (object_name(o) == name) return o;
  return std::nullopt;
}

std::optional<int> FiniteGroupoid::morphism_index(const std::string& name) const {
  for (int m = 0; m < num_morphisms(); ++m)
    if (morphism_name(m) == name) return m;
  return std::nullopt;
}

bool FiniteGroupoid::structurally_equal(const FiniteGroupoid& other) const {
  if (num_objects() != other.num_objects() || num_morphisms() != other.num_morphisms()) return false;
  for (int m = 0; m < num_morphisms(); ++m)
    if (morphisms[m].src != other.morphisms[m].src || morphisms[m].dst != other.morphisms[m].dst)
      return false;
  if (identity != other.identity || inverse != other.inverse) return false;
  for (int g = 0; g < num_morphisms(); ++g)
    for (int f : into_[morphisms[g].src])
      if (compose(g, f) != other.compose(g, f)) return false;
  return true;
}

std::vector<Violation> validate_groupoid(const FiniteGroupoid& g) {
  std::vector<Violation> out;
  const int n = g.num_objects(), m = g.num_morphisms();
  auto bad_obj = [&](int o) { return o < 0 || o >= n; };
  auto bad_mor = [&](int x) { return x < 0 || x >= m; };

  for (int i = 0; i < m; ++i)
    if (bad_obj(g.morphisms[i].src) || bad_obj(g.morphisms[i].dst))
      out.push_back({"structure", "morphism " + g.morphism_name(i) + " has a dangling endpoint"});
  for (int o = 0; o < n; ++o) {
    if (bad_mor(g.id_of(o))) {
      out.push_back({"structure", "identity of " + g.object_name(o) + " is not a morphism"});
    } else if (g.src(g.id_of(o)) != o || g.dst(g.id_of(o)) != o) {
      out.push_back({"structure", "identity of " + g.object_name(o) + " is not an endomorphism of it"});
    }
  }
  if (static_cast<int>(g.inverse.size()) != m)
    out.push_back({"structure", "inverse table size mismatch"});
  if (!out.empty()) return out; // endpoint data unusable; stop here

  for (int gg = 0; gg < m; ++gg)
    for (int f : g.morphisms_into(g.src(gg))) {
      int c = g.compose(gg, f);
      if (bad_mor(c)) {
        out.push_back({"structure", "missing composite " + g.morphism_name(gg) + "∘" + g.morphism_name(f)});
      } else if (g.src(c) != g.src(f) || g.dst(c) != g.dst(gg)) {
        out.push_back({"endpoints", "composite " + g.morphism_name(gg) + "∘" + g.morphism_name(f) +
                                        " has wrong endpoints"});
      }
    }
  if (!out.empty()) return out;

  for (int f = 0; f < m; ++f) {
    if (g.compose(f, g.id_of(g.src(f))) != f || g.compose(g.id_of(g.dst(f)), f) != f)
      out.push_back({"identity", "identity law fails at " + g.morphism_name(f)});
    int fi = g.inv(f);
    if (g.src(fi) != g.dst(f) || g.dst(fi) != g.src(f)) {
      out.push_back({"endpoints", "inverse of " + g.morphism_name(f) + " has wrong endpoints"});
      continue;
    }
    if (g.compose(f, fi) != g.id_of(g.dst(f)) || g.compose(fi, f) != g.id_of(g.src(f)))
      out.push_back({"inverse-law", "inverse law fails at " + g.morphism_name(f)});
  }

  for (int h = 0; h < m; ++h)
    for (int gg : g.morphisms_into(g.src(h)))
      for (int f : g.morphisms_into(g.src(gg)))
        if (g.compose(g.compose(h, gg), f) != g.compose(h, g.compose(gg, f)))
          out.push_back({"associativity", "associativity fails at (" + g.morphism_name(h) + ", " +
                                              g.morphism_name(gg) + ", " + g.morphism_name(f) + ")"});
  return out;
}

// ---------------------------------------------------------------------------
// GroupoidMap

std::vector<Violation> validate_map(const GroupoidMap& f) {
  std::vector<Violation> out;
  const auto& d = *f.dom;
  const auto& c = *f.cod;
  if (static_cast<int>(f.object_map.size()) != d.num_objects() ||
      static_cast<int>(f.morphism_map.size()) != d.num_morphisms()) {
    out.push_back({"structure", "map table sizes do not match the domain"});
    return out;
  }
  for (int o = 0; o < d.num_objects(); ++o)
    if (f.obj(o) < 0 || f.obj(o) >= c.num_objects()) {
      out.push_back({"structure", "object image out of range at " + d.object_name(o)});
      return out;
    }
  for (int m = 0; m < d.num_morphisms(); ++m) {
    if (f.mor(m) < 0 || f.mor(m) >= c.num_morphisms()) {
      out.push_back({"structure", "morphism image out of range at " + d.morphism_name(m)});
      return out;
    }
    if (c.src(f.mor(m)) != f.obj(d.src(m)) || c.dst(f.mor(m)) != f.obj(d.dst(m)))
      out.push_back({"endpoints", "source/target not preserved at " + d.morphism_name(m)});
  }
  if (!out.empty()) return out;
  for (int o = 0; o < d.num_objects(); ++o)
    if (f.mor(d.id_of(o)) != c.id_of(f.obj(o)))
      out.push_back({"identity", "identity not preserved at " + d.object_name(o)});
  for (int g = 0; g < d.num_morphisms(); ++g)
    for (int h : d.morphisms_into(d.src(g)))
      if (f.mor(d.compose(g, h)) != c.compose(f.mor(g), f.mor(h)))
        out.push_back({"composition", "composition not preserved at (" + d.morphism_name(g) + ", " +
                                          d.morphism_name(h) + ")"});
  return out;
}

GroupoidMap identity_map(const GroupoidPtr& g) {
  GroupoidMap f;
  f.dom = f.cod = g;
  f.object_map.resize(g->num_objects());
  f.morphism_map.resize(g->num_morphisms());
  std::iota(f.object_map.begin(), f.object_map.end(), 0);
  std::iota(f.morphism_map.begin(), f.morphism_map.end(), 0);
  return f;
}

GroupoidMap compose_maps(const GroupoidMap& g, const GroupoidMap& f) {
  if (!same_groupoid(f.cod, g.dom))
    throw std::invalid_argument("compose_maps: codomain/domain mismatch");
  GroupoidMap r;
  r.dom = f.dom;
  r.cod = g.cod;
  r.object_map.reserve(f.object_map.size());
  r.morphism_map.reserve(f.morphism_map.size());
  for (int o : f.object_map) r.object_map.push_back(g.obj(o));
  for (int m : f.morphism_map) r.morphism_map.push_back(g.mor(m));
  return r;
}

bool maps_equal(const GroupoidMap& f, const GroupoidMap& g) {
  return same_groupoid(f.dom, g.dom) && same_groupoid(f.cod, g.cod) &&
         f.object_map == g.object_map && f.morphism_map == g.morphism_map;
}

bool parallel(const GroupoidMap& f, const GroupoidMap& g) {
  return same_groupoid(f.dom, g.dom) && same_groupoid(f.cod, g.cod);
}

// ---------------------------------------------------------------------------
// NaturalIso

std::vector<Violation> validate_natural_iso(const NaturalIso& h) {
  std::vector<Violation> out;
  if (!parallel(h.source, h.target)) {
    out.push_back({"structure", "source and target functors are not parallel"});
    return out;
  }
  const auto& d = *h.source.dom;
  const auto& c = *h.source.cod;
  if (static_cast<int>(h.components.size()) != d.num_objects()) {
    out.push_back({"structure", "component table size mismatch"});
    return out;
  }
  for (int a = 0; a < d.num_objects(); ++a) {
    int comp = h.components[a];
    if (comp < 0 || comp >= c.num_morphisms() || c.src(comp) != h.source.obj(a) ||
        c.dst(comp) != h.target.obj(a)) {
      out.push_back({"endpoints", "component at " + d.object_name(a) + " has wrong endpoints"});
      return out;
    }
  }
  for (int u = 0; u < d.num_morphisms(); ++u) {
    int a = d.src(u), b = d.dst(u);
    if (c.compose(h.components[b], h.source.mor(u)) != c.compose(h.target.mor(u), h.components[a]))
      out.push_back({"naturality", "naturality square fails at " + d.morphism_name(u)});
  }
  return out;
}

NaturalIso identity_iso(const GroupoidMap& f) {
  NaturalIso h;
  h.source = h.target = f;
  h.components.reserve(f.object_map.size());
  for (int o : f.object_map) h.components.push_back(f.cod->id_of(o));
  return h;
}

NaturalIso iso_inverse(const NaturalIso& h) {
  NaturalIso r;
  r.source = h.target;
  r.target = h.source;
  r.components.reserve(h.components.size());
  for (int c : h.components) r.components.push_back(h.source.cod->inv(c));
  return r;
}

NaturalIso vcompose(const NaturalIso& b, const NaturalIso& a) {
  if (!maps_equal(a.target, b.source))
    throw std::invalid_argument("vcompose: boundary functors do not match");
  NaturalIso r;
  r.source = a.source;
  r.target = b.target;
  r.components.reserve(a.components.size());
  for (size_t i = 0; i < a.components.size(); ++i)
    r.components.push_back(a.source.cod->compose(b.components[i], a.components[i]));
  return r;
}

NaturalIso whisker_pre(const NaturalIso& h, const GroupoidMap& k) {
  NaturalIso r;
  r.source = compose_maps(h.source, k);
  r.target = compose_maps(h.target, k);
  r.components.reserve(k.object_map.size());
  for (int o : k.object_map) r.components.push_back(h.components[o]);
  return r;
}

NaturalIso whisker_post(const GroupoidMap& k, const NaturalIso& h) {
  NaturalIso r;
  r.source = compose_maps(k, h.source);
  r.target = compose_maps(k, h.target);
  r.components.reserve(h.components.size());
  for (int c : h.components) r.components.push_back(k.mor(c));
  return r;
}

// ---------------------------------------------------------------------------
// FiniteGroup

std::string FiniteGroup::element_name(int e) const {
  if (e < static_cast<int>(element_names.size()) && !element_names[e].empty()) return element_names[e];
  return "g" + std::to_string(e);
}

std::vector<Violation> validate_group(const FiniteGroup& g) {
  std::vector<Violation> out;
  const int n = g.order();
  if (g.identity < 0 || g.identity >= n || static_cast<int>(g.inverse.size()) != n) {
    out.push_back({"structure", "identity or inverse table malformed"});
    return out;
  }
  for (const auto& row : g.table)
    if (static_cast<int>(row.size()) != n) {
      out.push_back({"structure", "multiplication table not square"});
      return out;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) < 0 || g.mul(a, b) >= n) {
        out.push_back({"structure", "product out of range"});
        return out;
      }
  for (int a = 0; a < n; ++a) {
    if (g.mul(a, g.identity) != a || g.mul(g.identity, a) != a)
      out.push_back({"identity", "identity law fails at " + g.element_name(a)});
    if (g.mul(a, g.inv(a)) != g.identity || g.mul(g.inv(a), a) != g.identity)
      out.push_back({"inverse-law", "inverse law fails at " + g.element_name(a)});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          out.push_back({"associativity", "associativity fails at (" + g.element_name(a) + ", " +
                                              g.element_name(b) + ", " + g.element_name(c) + ")"});
  return out;
}

bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

std::vector<int> centre(const FiniteGroup& g) {
  std::vector<int> z;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

FiniteGroup trivial_group() { return cyclic_group(1); }

FiniteGroup cyclic_group(int n) {
  if (n <= 0) throw std::invalid_argument("cyclic_group: order must be positive");
  FiniteGroup g;
  g.table.assign(n, std::vector<int>(n));
  g.inverse.resize(n);
  for (int a = 0; a < n; ++a) {
    g.element_names.push_back(std::to_string(a));
    g.inverse[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  }
  g.identity = 0;
  return g;
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string perm_name(const std::vector<int>& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

} // namespace

FiniteGroup symmetric_group(int n) {
  auto perms = all_permutations(n);
  const int order = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < order; ++i) index[perms[i]] = i;
  FiniteGroup g;
  g.table.assign(order, std::vector<int>(order));
  g.inverse.resize(order);
  for (int a = 0; a < order; ++a) {
    g.element_names.push_back(perm_name(perms[a]));
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perms[a][i]] = i;
    g.inverse[a] = index[inv];
    for (int b = 0; b < order; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]]; // a after b
      g.table[a][b] = index[c];
    }
  }
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 0);
  g.identity = index[e];
  return g;
}

FiniteGroup dihedral_group(int n) {
  // elements (r, s) = rotation r composed with s reflections, s in {0,1}
  const int order = 2 * n;
  auto idx = [n](int r, int s) { return s * n + ((r % n) + n) % n; };
  FiniteGroup g;
  g.table.assign(order, std::vector<int>(order));
  g.inverse.resize(order);
  for (int s = 0; s < 2; ++s)
    for (int r = 0; r < n; ++r) {
      int a = idx(r, s);
      g.element_names.resize(order);
      g.element_names[a] = (s ? "sr" : "r") + std::to_string(r);
      g.inverse[a] = s ? a : idx(-r, 0);
      for (int t = 0; t < 2; ++t)
        for (int q = 0; q < n; ++q) {
          // (r, s) * (q, t): reflections conjugate rotations to inverses
          int rr = s == 0 ? r + q : r - q;
          g.table[a][idx(q, t)] = idx(rr, s ^ t);
        }
    }
  g.identity = idx(0, 0);
  return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  FiniteGroup g;
  g.table.assign(na * nb, std::vector<int>(na * nb));
  g.inverse.resize(na * nb);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) {
      int i = x * nb + y;
      g.element_names.push_back("(" + a.element_name(x) + "," + b.element_name(y) + ")");
      g.inverse[i] = a.inv(x) * nb + b.inv(y);
      for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v) g.table[i][u * nb + v] = a.mul(x, u) * nb + b.mul(y, v);
    }
  g.identity = a.identity * nb + b.identity;
  return g;
}

std::optional<FiniteGroup> group_by_name(const std::string& name) {
  if (name == "1" || name == "trivial") return trivial_group();
  if (name == "S3") return symmetric_group(3);
  if (name == "S4") return symmetric_group(4);
  if (name == "D4") return dihedral_group(4);
  if (name == "D3") return dihedral_group(3);
  if (name == "V4" || name == "Z2xZ2") return direct_product(cyclic_group(2), cyclic_group(2));
  if (name.size() > 1 && name[0] == 'Z') {
    try {
      int n = std::stoi(name.substr(1));
      if (n >= 1 && n <= 64) return cyclic_group(n);
    } catch (...) {
    }
  }
  return std::nullopt;
}

std::vector<std::vector<int>> all_homomorphisms(const FiniteGroup& g, const FiniteGroup& h) {
  const int n = g.order();
  std::vector<std::vector<int>> out;
  std::vector<int> map(n, -1);
  map[g.identity] = h.identity;
  // backtracking over non-identity elements in order
  std::vector<int> free_elems;
  for (int i = 0; i < n; ++i)
    if (i != g.identity) free_elems.push_back(i);
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == free_elems.size()) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (h.mul(map[a], map[b]) != map[g.mul(a, b)]) return;
      out.push_back(map);
      return;
    }
    int e = free_elems[k];
    for (int img = 0; img < h.order(); ++img) {
      map[e] = img;
      bool ok = true;
      // partial check against already-assigned elements
      for (int a = 0; a < n && ok; ++a) {
        if (map[a] < 0) continue;
        if (map[g.mul(e, a)] >= 0 && h.mul(img, map[a]) != map[g.mul(e, a)]) ok = false;
        if (ok && map[g.mul(a, e)] >= 0 && h.mul(map[a], img) != map[g.mul(a, e)]) ok = false;
      }
      if (ok) rec(k + 1);
      map[e] = -1;
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<int>> all_automorphisms(const FiniteGroup& g) {
  std::vector<std::vector<int>> out;
  for (const auto& h : all_homomorphisms(g, g)) {
    std::vector<bool> seen(g.order(), false);
    bool bij = true;
    for (int x : h) {
      if (seen[x]) {
        bij = false;
        break;
      }
      seen[x] = true;
    }
    if (bij) out.push_back(h);
  }
  return out;
}

GroupoidPtr delooping(const FiniteGroup& grp) {
  auto g = std::make_shared<FiniteGroupoid>();
  g->object_names = {"*"};
  g->identity = {grp.identity};
  const int n = grp.order();
  g->morphisms.assign(n, {0, 0});
  g->inverse = grp.inverse;
  for (int i = 0; i < n; ++i) g->morphism_names.push_back(grp.element_name(i));
  g->reserve_composites();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g->set_composite(a, b, grp.mul(a, b));
  g->finalize();
  return g;
}

GroupoidMap delooping_map(const std::vector<int>& hom, const GroupoidPtr& bdom, const GroupoidPtr& bcod) {
  GroupoidMap f;
  f.dom = bdom;
  f.cod = bcod;
  f.object_map = {0};
  f.morphism_map = hom;
  return f;
}

// ---------------------------------------------------------------------------
// Standard objects

GroupoidPtr terminal_groupoid() { return discrete_groupoid(1); }

GroupoidPtr discrete_groupoid(int n) {
  auto g = std::make_shared<FiniteGroupoid>();
  for (int i = 0; i < n; ++i) {
    g->object_names.push_back(std::to_string(i));
    g->morphism_names.push_back("id" + std::to_string(i));
    g->morphisms.push_back({i, i});
    g->identity.push_back(i);
    g->inverse.push_back(i);
  }
  g->reserve_composites();
  for (int i = 0; i < n; ++i) g->set_composite(i, i, i);
  g->finalize();
  return g;
}

GroupoidPtr interval_groupoid() { return indiscrete_groupoid(2); }

GroupoidPtr indiscrete_groupoid(int n) {
  auto g = std::make_shared<FiniteGroupoid>();
  auto midx = [n](int a, int b) { return a * n + b; }; // the unique morphism a -> b
  for (int a = 0; a < n; ++a) {
    g->object_names.push_back(std::to_string(a));
    g->identity.push_back(midx(a, a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      g->morphisms.push_back({a, b});
      g->morphism_names.push_back("u" + std::to_string(a) + std::to_string(b));
      g->inverse.push_back(midx(b, a));
    }
  g->reserve_composites();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) g->set_composite(midx(b, c), midx(a, b), midx(a, c));
  g->finalize();
  return g;
}

std::vector<CatalogEntry> standard_objects() {
  std::vector<CatalogEntry> cat;
  cat.push_back({"terminal", terminal_groupoid()});
  cat.push_back({"interval", interval_groupoid()});
  cat.push_back({"discrete2", discrete_groupoid(2)});
  cat.push_back({"discrete3", discrete_groupoid(3)});
  cat.push_back({"BZ2", delooping(cyclic_group(2))});
  cat.push_back({"BZ3", delooping(cyclic_group(3))});
  cat.push_back({"BS3", delooping(symmetric_group(3))});
  return cat;
}

GroupoidMap to_terminal(const GroupoidPtr& g) {
  GroupoidMap f;
  f.dom = g;
  f.cod = terminal_groupoid();
  f.object_map.assign(g->num_objects(), 0);
  f.morphism_map.assign(g->num_morphisms(), 0);
  return f;
}

GroupoidMap point_map(const GroupoidPtr& g, int obj) {
  GroupoidMap f;
  f.dom = terminal_groupoid();
  f.cod = g;
  f.object_map = {obj};
  f.morphism_map = {g->id_of(obj)};
  return f;
}

// ---------------------------------------------------------------------------
// Products

int ProductData::pair_obj(int a, int b) const { return a * right->num_objects() + b; }
int ProductData::pair_mor(int f, int g) const { return f * right->num_morphisms() + g; }
std::pair<int, int> ProductData::split_obj(int o) const {
  int nb = right->num_objects();
  return {o / nb, o % nb};
}
std::pair<int, int> ProductData::split_mor(int m) const {
  int nmb = right->num_morphisms();
  return {m / nmb, m % nmb};
}

ProductData product(const GroupoidPtr& a, const GroupoidPtr& b) {
  auto g = std::make_shared<FiniteGroupoid>();
  const int na = a->num_objects(), nb = b->num_objects();
  const int ma = a->num_morphisms(), mb = b->num_morphisms();
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) {
      g->object_names.push_back("(" + a->object_name(x) + "," + b->object_name(y) + ")");
      g->identity.push_back(a->id_of(x) * mb + b->id_of(y));
    }
  g->morphisms.resize(static_cast<size_t>(ma) * mb);
  g->inverse.resize(static_cast<size_t>(ma) * mb);
  for (int f = 0; f < ma; ++f)
    for (int h = 0; h < mb; ++h) {
      int i = f * mb + h;
      g->morphisms[i] = {a->src(f) * nb + b->src(h), a->dst(f) * nb + b->dst(h)};
      g->inverse[i] = a->inv(f) * mb + b->inv(h);
    }
  g->reserve_composites();
  for (int f = 0; f < ma; ++f)
    for (int h = 0; h < mb; ++h) {
      int gmor = f * mb + h;
      for (int f2 : a->morphisms_into(a->src(f)))
        for (int h2 : b->morphisms_into(b->src(h)))
          g->set_composite(gmor, f2 * mb + h2, a->compose(f, f2) * mb + b->compose(h, h2));
    }
  g->finalize();

  ProductData pd;
  pd.groupoid = g;
  pd.left = a;
  pd.right = b;
  pd.proj0.dom = pd.proj1.dom = g;
  pd.proj0.cod = a;
  pd.proj1.cod = b;
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) {
      pd.proj0.object_map.push_back(x);
      pd.proj1.object_map.push_back(y);
    }
  for (int f = 0; f < ma; ++f)
    for (int h = 0; h < mb; ++h) {
      pd.proj0.morphism_map.push_back(f);
      pd.proj1.morphism_map.push_back(h);
    }
  return pd;
}

GroupoidMap pairing(const ProductData& prod, const GroupoidMap& f, const GroupoidMap& g) {
  if (!same_groupoid(f.dom, g.dom)) throw std::invalid_argument("pairing: domains differ");
  if (!same_groupoid(f.cod, prod.left) || !same_groupoid(g.cod, prod.right))
    throw std::invalid_argument("pairing: codomains do not match the product factors");
  GroupoidMap r;
  r.dom = f.dom;
  r.cod = prod.groupoid;
  for (size_t o = 0; o < f.object_map.size(); ++o)
    r.object_map.push_back(prod.pair_obj(f.object_map[o], g.object_map[o]));
  for (size_t m = 0; m < f.morphism_map.size(); ++m)
    r.morphism_map.push_back(prod.pair_mor(f.morphism_map[m], g.morphism_map[m]));
  return r;
}

} // namespace pathgpd
