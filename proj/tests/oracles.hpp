#pragma once

#include <algorithm>
#include <vector>

#include "pathgpd/core.hpp"
#include "pathgpd/lifting.hpp"

// Brute-force reference implementations used to cross-check the constrained
// search engine. Deliberately naive: full cartesian enumeration with post-hoc
// law checks, no pruning, no sharing with the library's search code. Only
// ever run on tiny inputs.

namespace oracles {

using namespace pathgpd;

// every functor a -> b, by odometer over object maps and then over all
// hom-compatible morphism assignments
inline std::vector<GroupoidMap> naive_functors(const GroupoidPtr& a, const GroupoidPtr& b) {
  std::vector<GroupoidMap> out;
  const int no = a->num_objects(), nm = a->num_morphisms();
  if (no > 0 && b->num_objects() == 0) return out;

  std::vector<int> omap(no, 0);
  while (true) {
    std::vector<std::vector<int>> cand(nm);
    bool feasible = true;
    for (int m = 0; m < nm && feasible; ++m) {
      cand[m] = b->hom(omap[a->src(m)], omap[a->dst(m)]);
      feasible = !cand[m].empty();
    }
    if (feasible) {
      std::vector<int> pick(nm, 0);
      while (true) {
        GroupoidMap f;
        f.dom = a;
        f.cod = b;
        f.object_map = omap;
        f.morphism_map.resize(nm);
        for (int m = 0; m < nm; ++m) f.morphism_map[m] = cand[m][pick[m]];
        if (validate_map(f).empty()) out.push_back(std::move(f));

        int i = 0;
        for (; i < nm; ++i) {
          if (++pick[i] < static_cast<int>(cand[i].size())) break;
          pick[i] = 0;
        }
        if (i == nm) break;
      }
    }

    int i = 0;
    for (; i < no; ++i) {
      if (++omap[i] < b->num_objects()) break;
      omap[i] = 0;
    }
    if (i == no) break;
  }
  return out;
}

// every natural isomorphism f => g, by odometer over per-object components
inline std::vector<std::vector<int>> naive_natural_isos(const GroupoidMap& f,
                                                        const GroupoidMap& g) {
  std::vector<std::vector<int>> out;
  if (!parallel(f, g)) return out;
  const auto& cod = *f.cod;
  const int no = f.dom->num_objects(), nm = f.dom->num_morphisms();

  std::vector<std::vector<int>> cand(no);
  for (int a = 0; a < no; ++a) {
    cand[a] = cod.hom(f.obj(a), g.obj(a));
    if (cand[a].empty()) return out;
  }
  std::vector<int> pick(no, 0);
  while (true) {
    std::vector<int> comp(no);
    for (int a = 0; a < no; ++a) comp[a] = cand[a][pick[a]];
    bool natural = true;
    for (int m = 0; m < nm && natural; ++m)
      natural = cod.compose(comp[f.dom->dst(m)], f.mor(m)) ==
                cod.compose(g.mor(m), comp[f.dom->src(m)]);
    if (natural) out.push_back(std::move(comp));

    int i = 0;
    for (; i < no; ++i) {
      if (++pick[i] < static_cast<int>(cand[i].size())) break;
      pick[i] = 0;
    }
    if (i == no || no == 0) break;
  }
  return out;
}

inline std::vector<GroupoidMap> naive_fillers(const LiftingProblem& p) {
  std::vector<GroupoidMap> out;
  for (const auto& d : naive_functors(p.bottom.dom, p.top.cod))
    if (maps_equal(compose_maps(d, p.m), p.top) && maps_equal(compose_maps(p.f, d), p.bottom))
      out.push_back(d);
  return out;
}

// does m have the left lifting property against every map in `fibs`,
// checked square by square with naive enumeration throughout
inline bool naive_llp(const GroupoidMap& m, const std::vector<GroupoidMap>& fibs) {
  for (const auto& f : fibs) {
    auto tops = naive_functors(m.dom, f.dom);
    auto bottoms = naive_functors(m.cod, f.cod);
    auto fillers = naive_functors(m.cod, f.dom);
    for (const auto& top : tops) {
      auto ft = compose_maps(f, top);
      for (const auto& bottom : bottoms) {
        if (!maps_equal(ft, compose_maps(bottom, m))) continue;
        bool lifted = false;
        for (const auto& d : fillers)
          if (maps_equal(compose_maps(d, m), top) &&
              maps_equal(compose_maps(f, d), bottom)) {
            lifted = true;
            break;
          }
        if (!lifted) return false;
      }
    }
  }
  return true;
}

} // namespace oracles
