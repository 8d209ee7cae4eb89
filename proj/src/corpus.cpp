#include "pathgpd/corpus.hpp"

#include <stdexcept>

namespace pathgpd {

namespace {

int draw(std::mt19937& rng, int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); }

int obj_pos(const CorpusGroupoid& cg, int obj) {
  const auto& objs = cg.objects_in[cg.comp_of_obj[obj]];
  for (size_t p = 0; p < objs.size(); ++p)
    if (objs[p] == obj) return static_cast<int>(p);
  throw std::logic_error("corpus: object not in its component");
}

} // namespace

int CorpusGroupoid::mor(int i, int j, int gelem) const {
  int c = comp_of_obj[i];
  if (comp_of_obj[j] != c) throw std::invalid_argument("corpus: objects in different components");
  int k = static_cast<int>(objects_in[c].size());
  int ord = groups[c].order();
  return comp_offset[c] + (obj_pos(*this, i) * k + obj_pos(*this, j)) * ord + gelem;
}

std::tuple<int, int, int> CorpusGroupoid::split(int m) const {
  int c = 0;
  while (c + 1 < static_cast<int>(comp_offset.size()) && comp_offset[c + 1] <= m) ++c;
  int k = static_cast<int>(objects_in[c].size());
  int ord = groups[c].order();
  int rel = m - comp_offset[c];
  return {objects_in[c][rel / ord / k], objects_in[c][(rel / ord) % k], rel % ord};
}

CorpusGroupoid random_groupoid(std::mt19937& rng, int max_objects, int max_hom) {
  static const char* pool[] = {"1", "Z2", "Z3", "Z4", "V4"};
  CorpusGroupoid cg;
  auto g = std::make_shared<FiniteGroupoid>();
  int remaining = 1 + draw(rng, max_objects); // total object count
  int next_obj = 0;
  while (remaining > 0) {
    int size = 1 + draw(rng, remaining);
    remaining -= size;
    FiniteGroup grp;
    for (;;) {
      grp = *group_by_name(pool[draw(rng, 5)]);
      if (grp.order() <= max_hom) break;
    }
    int c = static_cast<int>(cg.groups.size());
    cg.comp_offset.push_back(g->num_morphisms());
    cg.objects_in.emplace_back();
    for (int t = 0; t < size; ++t) {
      cg.objects_in[c].push_back(next_obj);
      cg.comp_of_obj.push_back(c);
      g->object_names.push_back("o" + std::to_string(next_obj));
      ++next_obj;
    }
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j)
        for (int e = 0; e < grp.order(); ++e)
          g->morphisms.push_back({cg.objects_in[c][i], cg.objects_in[c][j]});
    cg.groups.push_back(std::move(grp));
  }
  g->identity.resize(next_obj);
  g->inverse.resize(g->num_morphisms());
  cg.g = g; // mor() needs the bookkeeping, not the finalized tables
  for (int o = 0; o < next_obj; ++o)
    g->identity[o] = cg.mor(o, o, cg.groups[cg.comp_of_obj[o]].identity);
  for (int m = 0; m < g->num_morphisms(); ++m) {
    auto [i, j, e] = cg.split(m);
    g->inverse[m] = cg.mor(j, i, cg.groups[cg.comp_of_obj[i]].inv(e));
  }
  g->reserve_composites();
  for (int m = 0; m < g->num_morphisms(); ++m) {
    auto [i, j, e] = cg.split(m);
    const auto& grp = cg.groups[cg.comp_of_obj[i]];
    for (int m2 : g->morphisms_into(i)) {
      auto [i0, j0, e0] = cg.split(m2);
      g->set_composite(m, m2, cg.mor(i0, j, grp.mul(e, e0)));
    }
  }
  g->finalize();
  return cg;
}

GroupoidMap random_functor(std::mt19937& rng, const CorpusGroupoid& a, const CorpusGroupoid& b) {
  GroupoidMap f;
  f.dom = a.g;
  f.cod = b.g;
  f.object_map.assign(a.g->num_objects(), -1);
  f.morphism_map.assign(a.g->num_morphisms(), -1);

  const int nca = static_cast<int>(a.groups.size());
  std::vector<int> target(nca), hom_pick(nca);
  std::vector<std::vector<int>> hom(nca), twist(nca);
  for (int c = 0; c < nca; ++c) {
    target[c] = draw(rng, static_cast<int>(b.groups.size()));
    auto homs = all_homomorphisms(a.groups[c], b.groups[target[c]]);
    hom[c] = homs[draw(rng, static_cast<int>(homs.size()))];
    for (int o : a.objects_in[c]) {
      (void)o;
      twist[c].push_back(draw(rng, b.groups[target[c]].order()));
    }
    for (int o : a.objects_in[c]) {
      int tgt_obj = b.objects_in[target[c]][draw(rng, static_cast<int>(b.objects_in[target[c]].size()))];
      f.object_map[o] = tgt_obj;
    }
  }
  for (int m = 0; m < a.g->num_morphisms(); ++m) {
    auto [i, j, e] = a.split(m);
    int c = a.comp_of_obj[i];
    const auto& bg = b.groups[target[c]];
    int ti = twist[c][obj_pos(a, i)];
    int tj = twist[c][obj_pos(a, j)];
    int val = bg.mul(bg.mul(tj, hom[c][e]), bg.inv(ti));
    f.morphism_map[m] = b.mor(f.object_map[i], f.object_map[j], val);
  }
  return f;
}

InflationData random_inflation(std::mt19937& rng, const GroupoidPtr& a) {
  InflationData out;
  const int n = a->num_objects();
  std::vector<int> copies(n);
  for (int x = 0; x < n; ++x) copies[x] = 1 + draw(rng, 2);

  auto total = std::make_shared<FiniteGroupoid>();
  std::vector<std::pair<int, int>> objs; // (base object, copy)
  std::vector<int> first_copy(n);
  for (int x = 0; x < n; ++x) {
    first_copy[x] = static_cast<int>(objs.size());
    for (int c = 0; c < copies[x]; ++c) {
      objs.emplace_back(x, c);
      total->object_names.push_back(a->object_name(x) + "#" + std::to_string(c));
    }
  }
  const int N = static_cast<int>(objs.size());
  // morphism per (source copy, target copy, base morphism)
  std::vector<int> first_mor(static_cast<size_t>(N) * N, -1);
  std::vector<int> base_of;
  std::vector<std::pair<int, int>> ends;
  for (int o1 = 0; o1 < N; ++o1)
    for (int o2 = 0; o2 < N; ++o2) {
      first_mor[static_cast<size_t>(o1) * N + o2] = static_cast<int>(base_of.size());
      for (int u : a->hom(objs[o1].first, objs[o2].first)) {
        base_of.push_back(u);
        ends.emplace_back(o1, o2);
        total->morphisms.push_back({o1, o2});
      }
    }
  auto lookup = [&](int o1, int o2, int u) {
    const auto& hom = a->hom(objs[o1].first, objs[o2].first);
    int p = 0;
    while (hom[p] != u) ++p;
    return first_mor[static_cast<size_t>(o1) * N + o2] + p;
  };
  total->identity.resize(N);
  for (int o = 0; o < N; ++o) total->identity[o] = lookup(o, o, a->id_of(objs[o].first));
  total->inverse.resize(base_of.size());
  for (size_t m = 0; m < base_of.size(); ++m)
    total->inverse[m] = lookup(ends[m].second, ends[m].first, a->inv(base_of[m]));
  total->reserve_composites();
  for (size_t m = 0; m < base_of.size(); ++m)
    for (int m2 : total->morphisms_into(ends[m].first))
      total->set_composite(static_cast<int>(m), m2,
                           lookup(ends[m2].first, ends[m].second, a->compose(base_of[m], base_of[m2])));
  total->finalize();

  out.total = total;
  out.projection.dom = total;
  out.projection.cod = a;
  for (auto [x, c] : objs) {
    (void)c;
    out.projection.object_map.push_back(x);
  }
  out.projection.morphism_map = base_of;

  out.inclusion.dom = a;
  out.inclusion.cod = total;
  for (int x = 0; x < n; ++x) out.inclusion.object_map.push_back(first_copy[x]);
  for (int u = 0; u < a->num_morphisms(); ++u)
    out.inclusion.morphism_map.push_back(lookup(first_copy[a->src(u)], first_copy[a->dst(u)], u));
  return out;
}

NaturalIso random_twist(std::mt19937& rng, const GroupoidMap& f) {
  NaturalIso h;
  h.source = f;
  h.target.dom = f.dom;
  h.target.cod = f.cod;
  h.target.object_map.resize(f.object_map.size());
  h.target.morphism_map.resize(f.morphism_map.size());
  for (size_t x = 0; x < f.object_map.size(); ++x) {
    const auto& out = f.cod->morphisms_from(f.object_map[x]);
    int comp = out[draw(rng, static_cast<int>(out.size()))];
    h.components.push_back(comp);
    h.target.object_map[x] = f.cod->dst(comp);
  }
  for (size_t m = 0; m < f.morphism_map.size(); ++m) {
    int s = f.dom->src(static_cast<int>(m)), d = f.dom->dst(static_cast<int>(m));
    h.target.morphism_map[m] =
        f.cod->compose(f.cod->compose(h.components[d], f.morphism_map[m]), f.cod->inv(h.components[s]));
  }
  return h;
}

} // namespace pathgpd
