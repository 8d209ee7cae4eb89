#include "pathgpd/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathgpd {

bool force_composite(PartialFunctor& forced, const GroupoidMap& via, const GroupoidMap& value) {
  for (size_t x = 0; x < via.object_map.size(); ++x) {
    int slot = via.object_map[x];
    if (forced.object_map[slot] >= 0 && forced.object_map[slot] != value.object_map[x]) return false;
    forced.object_map[slot] = value.object_map[x];
  }
  for (size_t m = 0; m < via.morphism_map.size(); ++m) {
    int slot = via.morphism_map[m];
    if (forced.morphism_map[slot] >= 0 && forced.morphism_map[slot] != value.morphism_map[m]) return false;
    forced.morphism_map[slot] = value.morphism_map[m];
  }
  return true;
}

namespace {

struct Triple {
  int f, g, h; // h = g∘f in the domain
};

// Composition triples of `d` bucketed by the largest morphism id involved,
// so each triple is checked exactly once, as soon as it is fully assigned.
std::vector<std::vector<Triple>> triples_by_max(const FiniteGroupoid& d) {
  std::vector<std::vector<Triple>> buckets(d.num_morphisms());
  for (int g = 0; g < d.num_morphisms(); ++g)
    for (int f : d.morphisms_into(d.src(g))) {
      int h = d.compose(g, f);
      buckets[std::max({f, g, h})].push_back({f, g, h});
    }
  return buckets;
}

} // namespace

SearchStatus for_each_functor(const GroupoidPtr& dom, const GroupoidPtr& cod,
                              std::span<const StrictEquation> eqs, const PartialFunctor& forced,
                              long long cap, long long& nodes,
                              const std::function<bool(const GroupoidMap&)>& visit) {
  const FiniteGroupoid& d = *dom;
  const FiniteGroupoid& c = *cod;
  const int no = d.num_objects(), nm = d.num_morphisms();

  GroupoidMap u;
  u.dom = dom;
  u.cod = cod;
  u.object_map.assign(no, -1);
  u.morphism_map.assign(nm, -1);

  auto buckets = triples_by_max(d);
  bool capped = false, stopped = false;

  auto obj_ok = [&](int x, int cand) {
    if (forced.object_map.size() && forced.object_map[x] >= 0 && forced.object_map[x] != cand)
      return false;
    for (const auto& eq : eqs)
      if (eq.post->obj(cand) != eq.target->obj(x)) return false;
    return true;
  };
  auto mor_ok = [&](int m, int cand) {
    if (c.src(cand) != u.obj(d.src(m)) || c.dst(cand) != u.obj(d.dst(m))) return false;
    if (forced.morphism_map.size() && forced.morphism_map[m] >= 0 && forced.morphism_map[m] != cand)
      return false;
    if (d.is_identity(m) && !c.is_identity(cand)) return false;
    for (const auto& eq : eqs)
      if (eq.post->mor(cand) != eq.target->mor(m)) return false;
    // inverse consistency with an earlier assignment
    int mi = d.inv(m);
    if (mi < m && u.morphism_map[mi] >= 0 && c.inv(cand) != u.morphism_map[mi]) return false;
    // composition triples fully assigned once m gets its image
    u.morphism_map[m] = cand;
    bool ok = true;
    for (const auto& t : buckets[m]) {
      int imf = u.morphism_map[t.f], img = u.morphism_map[t.g], imh = u.morphism_map[t.h];
      if (imf < 0 || img < 0 || imh < 0) continue;
      if (c.compose(img, imf) != imh) {
        ok = false;
        break;
      }
    }
    u.morphism_map[m] = -1;
    return ok;
  };

  std::function<bool(int)> rec_mor = [&](int m) -> bool {
    if (m == nm) return visit(u);
    if (++nodes > cap) {
      capped = true;
      return false;
    }
    if (d.is_identity(m)) {
      int cand = c.id_of(u.obj(d.src(m)));
      if (!mor_ok(m, cand)) return true;
      u.morphism_map[m] = cand;
      bool cont = rec_mor(m + 1);
      u.morphism_map[m] = -1;
      return cont;
    }
    for (int cand : c.hom(u.obj(d.src(m)), u.obj(d.dst(m)))) {
      if (!mor_ok(m, cand)) continue;
      u.morphism_map[m] = cand;
      bool cont = rec_mor(m + 1);
      u.morphism_map[m] = -1;
      if (!cont) return false;
    }
    return true;
  };

  std::function<bool(int)> rec_obj = [&](int x) -> bool {
    if (x == no) return rec_mor(0);
    if (++nodes > cap) {
      capped = true;
      return false;
    }
    for (int cand = 0; cand < c.num_objects(); ++cand) {
      if (!obj_ok(x, cand)) continue;
      u.object_map[x] = cand;
      bool cont = rec_obj(x + 1);
      u.object_map[x] = -1;
      if (!cont) return false;
    }
    return true;
  };

  // degenerate domains: a groupoid with no objects has exactly one functor out
  if (no == 0) {
    stopped = !visit(u);
    (void)stopped;
    return SearchStatus::Found;
  }

  bool completed = rec_obj(0);
  if (capped) return SearchStatus::CapExceeded;
  return completed ? SearchStatus::Absent : SearchStatus::Found; // Found = visitor stopped the walk
}

Search<GroupoidMap> find_functor(const GroupoidPtr& dom, const GroupoidPtr& cod,
                                 std::span<const StrictEquation> eqs, const PartialFunctor& forced,
                                 long long cap) {
  Search<GroupoidMap> result;
  auto status = for_each_functor(dom, cod, eqs, forced, cap, result.nodes,
                                 [&](const GroupoidMap& u) {
                                   result.value = u;
                                   return false;
                                 });
  result.status = result.value ? SearchStatus::Found : status;
  return result;
}

Search<std::vector<GroupoidMap>> enumerate_functors(const GroupoidPtr& a, const GroupoidPtr& b,
                                                    long long cap) {
  Search<std::vector<GroupoidMap>> result;
  result.value.emplace();
  PartialFunctor none;
  long long emitted = 0;
  bool truncated = false;
  auto status = for_each_functor(a, b, {}, none, kDefaultCap, result.nodes,
                                 [&](const GroupoidMap& u) {
                                   if (emitted >= cap) {
                                     truncated = true;
                                     return false;
                                   }
                                   result.value->push_back(u);
                                   ++emitted;
                                   return true;
                                 });
  if (truncated || status == SearchStatus::CapExceeded)
    result.status = SearchStatus::CapExceeded;
  else
    result.status = SearchStatus::Found;
  return result;
}

// ---------------------------------------------------------------------------
// Natural isomorphism search

namespace {

struct Forest {
  std::vector<int> order;       // objects in BFS discovery order
  std::vector<int> parent_edge; // morphism used to reach the object, -1 for roots
  std::vector<bool> edge_forward; // true: edge src -> object, false: reversed
  std::vector<int> parent;      // parent object, -1 for roots
};

Forest spanning_forest(const FiniteGroupoid& d) {
  const int n = d.num_objects();
  Forest fo;
  fo.parent_edge.assign(n, -1);
  fo.edge_forward.assign(n, true);
  fo.parent.assign(n, -1);
  std::vector<bool> seen(n, false);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    fo.order.push_back(root);
    size_t head = fo.order.size() - 1;
    while (head < fo.order.size()) {
      int a = fo.order[head++];
      for (int m : d.morphisms_from(a)) {
        int b = d.dst(m);
        if (!seen[b]) {
          seen[b] = true;
          fo.parent[b] = a;
          fo.parent_edge[b] = m;
          fo.edge_forward[b] = true;
          fo.order.push_back(b);
        }
      }
      for (int m : d.morphisms_into(a)) {
        int b = d.src(m);
        if (!seen[b]) {
          seen[b] = true;
          fo.parent[b] = a;
          fo.parent_edge[b] = m;
          fo.edge_forward[b] = false;
          fo.order.push_back(b);
        }
      }
    }
  }
  return fo;
}

} // namespace

namespace {

SearchStatus natiso_walk(const GroupoidMap& f, const GroupoidMap& g, long long cap, long long& nodes,
                         const std::function<bool(const NaturalIso&)>& visit) {
  if (!parallel(f, g)) throw std::invalid_argument("natural iso search: functors not parallel");
  const FiniteGroupoid& d = *f.dom;
  const FiniteGroupoid& c = *f.cod;
  auto fo = spanning_forest(d);

  NaturalIso h;
  h.source = f;
  h.target = g;
  h.components.assign(d.num_objects(), -1);

  auto verify_all = [&]() {
    for (int u = 0; u < d.num_morphisms(); ++u) {
      int a = d.src(u), b = d.dst(u);
      if (c.compose(h.components[b], f.mor(u)) != c.compose(g.mor(u), h.components[a])) return false;
    }
    return true;
  };

  bool capped = false;
  std::function<bool(size_t)> rec = [&](size_t k) -> bool {
    if (k == fo.order.size()) {
      if (!verify_all()) return true;
      return visit(h);
    }
    if (++nodes > cap) {
      capped = true;
      return false;
    }
    int x = fo.order[k];
    if (fo.parent[x] < 0) {
      for (int cand : c.hom(f.obj(x), g.obj(x))) {
        h.components[x] = cand;
        if (!rec(k + 1)) return false;
        h.components[x] = -1;
      }
      return true;
    }
    // component forced by naturality along the tree edge
    int p = fo.parent[x], e = fo.parent_edge[x];
    int comp;
    if (fo.edge_forward[x]) // e : p -> x, comp_x = G(e)∘comp_p∘F(e)^-1
      comp = c.compose(c.compose(g.mor(e), h.components[p]), c.inv(f.mor(e)));
    else // e : x -> p, comp_x = G(e)^-1∘comp_p∘F(e)
      comp = c.compose(c.compose(c.inv(g.mor(e)), h.components[p]), f.mor(e));
    h.components[x] = comp;
    bool cont = rec(k + 1);
    h.components[x] = -1;
    return cont;
  };

  bool completed = rec(0);
  if (capped) return SearchStatus::CapExceeded;
  return completed ? SearchStatus::Absent : SearchStatus::Found;
}

} // namespace

Search<NaturalIso> find_natural_iso(const GroupoidMap& f, const GroupoidMap& g, long long cap) {
  Search<NaturalIso> result;
  auto status = natiso_walk(f, g, cap, result.nodes, [&](const NaturalIso& h) {
    result.value = h;
    return false;
  });
  result.status = result.value ? SearchStatus::Found : status;
  return result;
}

std::vector<NaturalIso> all_natural_isos(const GroupoidMap& f, const GroupoidMap& g) {
  std::vector<NaturalIso> out;
  long long nodes = 0;
  natiso_walk(f, g, kDefaultCap, nodes, [&](const NaturalIso& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

} // namespace pathgpd
