#include "pathgpd/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "pathgpd/classify.hpp"
#include "pathgpd/search.hpp"

namespace pathgpd {

namespace {

long long pack(int a, int b) { return static_cast<long long>(a) << 32 | static_cast<unsigned>(b); }

} // namespace

// ---------------------------------------------------------------------------
// Pullbacks

std::optional<int> PullbackSquare::apex_obj(int x, int y) const {
  for (size_t i = 0; i < object_pairs.size(); ++i)
    if (object_pairs[i] == std::make_pair(x, y)) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> PullbackSquare::apex_mor(int mx, int my) const {
  for (size_t i = 0; i < morphism_pairs.size(); ++i)
    if (morphism_pairs[i] == std::make_pair(mx, my)) return static_cast<int>(i);
  return std::nullopt;
}

PullbackSquare pullback(const GroupoidMap& f, const GroupoidMap& g) {
  if (!same_groupoid(f.cod, g.cod)) throw std::invalid_argument("pullback: cospan codomains differ");
  auto fib = is_isofibration(f);
  if (!fib.verdict)
    throw std::invalid_argument("pullback: right map is not an isofibration (" + fib.counterexample +
                                ")");
  const auto& X = *f.dom;
  const auto& Y = *g.dom;

  PullbackSquare sq;
  sq.right = f;
  sq.bottom = g;
  auto apex = std::make_shared<FiniteGroupoid>();

  std::unordered_map<long long, int> obj_index, mor_index;
  for (int x = 0; x < X.num_objects(); ++x)
    for (int y = 0; y < Y.num_objects(); ++y)
      if (f.obj(x) == g.obj(y)) {
        obj_index[pack(x, y)] = static_cast<int>(sq.object_pairs.size());
        sq.object_pairs.emplace_back(x, y);
        apex->object_names.push_back("(" + X.object_name(x) + "," + Y.object_name(y) + ")");
      }
  for (int mx = 0; mx < X.num_morphisms(); ++mx)
    for (int my = 0; my < Y.num_morphisms(); ++my)
      if (f.mor(mx) == g.mor(my)) {
        mor_index[pack(mx, my)] = static_cast<int>(sq.morphism_pairs.size());
        sq.morphism_pairs.emplace_back(mx, my);
        apex->morphisms.push_back(
            {obj_index.at(pack(X.src(mx), Y.src(my))), obj_index.at(pack(X.dst(mx), Y.dst(my)))});
      }
  apex->identity.resize(sq.object_pairs.size());
  for (size_t i = 0; i < sq.object_pairs.size(); ++i)
    apex->identity[i] = mor_index.at(pack(X.id_of(sq.object_pairs[i].first), Y.id_of(sq.object_pairs[i].second)));
  apex->inverse.resize(sq.morphism_pairs.size());
  for (size_t i = 0; i < sq.morphism_pairs.size(); ++i)
    apex->inverse[i] = mor_index.at(pack(X.inv(sq.morphism_pairs[i].first), Y.inv(sq.morphism_pairs[i].second)));
  apex->reserve_composites();
  for (size_t i = 0; i < sq.morphism_pairs.size(); ++i) {
    auto [gx, gy] = sq.morphism_pairs[i];
    for (int j : apex->morphisms_into(apex->src(static_cast<int>(i)))) {
      auto [fx, fy] = sq.morphism_pairs[j];
      apex->set_composite(static_cast<int>(i), j, mor_index.at(pack(X.compose(gx, fx), Y.compose(gy, fy))));
    }
  }
  apex->finalize();
  sq.apex = apex;

  sq.top.dom = sq.left.dom = apex;
  sq.top.cod = f.dom;
  sq.left.cod = g.dom;
  for (auto [x, y] : sq.object_pairs) {
    sq.top.object_map.push_back(x);
    sq.left.object_map.push_back(y);
  }
  for (auto [mx, my] : sq.morphism_pairs) {
    sq.top.morphism_map.push_back(mx);
    sq.left.morphism_map.push_back(my);
  }
  sq.certified = verify_pullback_square(sq, 3);
  if (!sq.certified) throw std::logic_error("pullback: universal property check failed (unreachable)");
  return sq;
}

bool verify_pullback_square(const PullbackSquare& sq, int max_cyclic) {
  // strict commutativity
  if (!maps_equal(compose_maps(sq.right, sq.top), compose_maps(sq.bottom, sq.left))) return false;

  std::vector<GroupoidPtr> probes = {terminal_groupoid(), interval_groupoid(), discrete_groupoid(2)};
  for (int k = 2; k <= max_cyclic; ++k) probes.push_back(delooping(cyclic_group(k)));

  for (const auto& probe : probes) {
    auto us = enumerate_functors(probe, sq.top.cod, 1'000'000);
    auto vs = enumerate_functors(probe, sq.left.cod, 1'000'000);
    if (us.capped() || vs.capped()) return false;
    for (const auto& u : *us.value) {
      auto ru = compose_maps(sq.right, u);
      for (const auto& v : *vs.value) {
        if (!maps_equal(ru, compose_maps(sq.bottom, v))) continue;
        // cone: must factor uniquely through the apex
        int count = 0;
        PartialFunctor none;
        StrictEquation eqs[2] = {{&sq.top, &u}, {&sq.left, &v}};
        long long nodes = 0;
        for_each_functor(probe, sq.apex, eqs, none, kDefaultCap, nodes, [&](const GroupoidMap&) {
          ++count;
          return count < 2;
        });
        if (count != 1) return false;
      }
    }
  }
  return true;
}

GroupoidMap pullback_pairing(const PullbackSquare& sq, const GroupoidMap& u, const GroupoidMap& v) {
  if (!maps_equal(compose_maps(sq.right, u), compose_maps(sq.bottom, v)))
    throw std::invalid_argument("pullback_pairing: not a cone");
  GroupoidMap w;
  w.dom = u.dom;
  w.cod = sq.apex;
  std::unordered_map<long long, int> obj_index, mor_index;
  for (size_t i = 0; i < sq.object_pairs.size(); ++i)
    obj_index[pack(sq.object_pairs[i].first, sq.object_pairs[i].second)] = static_cast<int>(i);
  for (size_t i = 0; i < sq.morphism_pairs.size(); ++i)
    mor_index[pack(sq.morphism_pairs[i].first, sq.morphism_pairs[i].second)] = static_cast<int>(i);
  for (size_t o = 0; o < u.object_map.size(); ++o)
    w.object_map.push_back(obj_index.at(pack(u.object_map[o], v.object_map[o])));
  for (size_t m = 0; m < u.morphism_map.size(); ++m)
    w.morphism_map.push_back(mor_index.at(pack(u.morphism_map[m], v.morphism_map[m])));
  return w;
}

// ---------------------------------------------------------------------------
// Path objects

int PathObjectData::total_mor(int phi, int psi, int a) const {
  const auto& hom = base->hom(base->src(phi), base->src(psi));
  auto it = std::lower_bound(hom.begin(), hom.end(), a);
  if (it == hom.end() || *it != a) throw std::invalid_argument("total_mor: bad a-component");
  return index_[static_cast<size_t>(phi) * base->num_morphisms() + psi][it - hom.begin()];
}

int PathObjectData::a_component(int m) const { return mor_a[m]; }
int PathObjectData::c_component(int m) const { return mor_c[m]; }

namespace {

void verify_path_object(const PathObjectData& pb) {
  auto idb = identity_map(pb.base);
  if (!maps_equal(compose_maps(pb.p0, pb.r), idb) || !maps_equal(compose_maps(pb.p1, pb.r), idb))
    throw std::logic_error("path object: boundary laws fail");
  if (!is_equivalence(pb.r).verdict) throw std::logic_error("path object: r is not an equivalence");
  auto bb = product(pb.base, pb.base);
  if (!is_isofibration(pairing(bb, pb.p0, pb.p1)).verdict)
    throw std::logic_error("path object: <p0,p1> is not an isofibration");
}

} // namespace

PathObjectData path_object(const GroupoidPtr& b) {
  PathObjectData pb;
  pb.base = b;
  const int M = b->num_morphisms();
  auto total = std::make_shared<FiniteGroupoid>();
  total->object_names.reserve(M);
  for (int phi = 0; phi < M; ++phi) total->object_names.push_back(b->morphism_name(phi));

  pb.index_.assign(static_cast<size_t>(M) * M, {});
  for (int phi = 0; phi < M; ++phi)
    for (int psi = 0; psi < M; ++psi) {
      const auto& hom = b->hom(b->src(phi), b->src(psi));
      auto& slot = pb.index_[static_cast<size_t>(phi) * M + psi];
      slot.reserve(hom.size());
      for (int a : hom) {
        int c = b->compose(b->compose(psi, a), b->inv(phi));
        slot.push_back(static_cast<int>(pb.mor_phi.size()));
        pb.mor_phi.push_back(phi);
        pb.mor_psi.push_back(psi);
        pb.mor_a.push_back(a);
        pb.mor_c.push_back(c);
        total->morphisms.push_back({phi, psi});
      }
    }
  total->identity.resize(M);
  for (int phi = 0; phi < M; ++phi)
    total->identity[phi] = pb.total_mor(phi, phi, b->id_of(b->src(phi)));
  total->inverse.resize(pb.mor_phi.size());
  for (size_t m = 0; m < pb.mor_phi.size(); ++m)
    total->inverse[m] = pb.total_mor(pb.mor_psi[m], pb.mor_phi[m], b->inv(pb.mor_a[m]));
  total->reserve_composites();
  for (size_t m = 0; m < pb.mor_phi.size(); ++m)
    for (int m2 : total->morphisms_into(pb.mor_phi[m]))
      total->set_composite(static_cast<int>(m), m2,
                           pb.total_mor(pb.mor_phi[m2], pb.mor_psi[m],
                                            b->compose(pb.mor_a[m], pb.mor_a[m2])));
  total->finalize();
  pb.total = total;

  pb.r.dom = b;
  pb.r.cod = total;
  for (int x = 0; x < b->num_objects(); ++x) pb.r.object_map.push_back(b->id_of(x));
  for (int u = 0; u < M; ++u)
    pb.r.morphism_map.push_back(pb.total_mor(b->id_of(b->src(u)), b->id_of(b->dst(u)), u));

  pb.p0.dom = pb.p1.dom = total;
  pb.p0.cod = pb.p1.cod = b;
  for (int phi = 0; phi < M; ++phi) {
    pb.p0.object_map.push_back(b->src(phi));
    pb.p1.object_map.push_back(b->dst(phi));
  }
  for (size_t m = 0; m < pb.mor_phi.size(); ++m) {
    pb.p0.morphism_map.push_back(pb.mor_a[m]);
    pb.p1.morphism_map.push_back(pb.mor_c[m]);
  }
  verify_path_object(pb);
  return pb;
}

GroupoidMap natiso_to_path_functor(const NaturalIso& h, const PathObjectData& pb) {
  if (!same_groupoid(h.source.cod, pb.base))
    throw std::invalid_argument("natiso_to_path_functor: codomain mismatch");
  auto bad = validate_natural_iso(h);
  if (!bad.empty())
    throw std::invalid_argument("natiso_to_path_functor: invalid homotopy (" + bad.front().law + ": " +
                                bad.front().detail + ")");
  GroupoidMap H;
  H.dom = h.source.dom;
  H.cod = pb.total;
  H.object_map = h.components;
  const auto& d = *h.source.dom;
  for (int u = 0; u < d.num_morphisms(); ++u)
    H.morphism_map.push_back(
        pb.total_mor(h.components[d.src(u)], h.components[d.dst(u)], h.source.mor(u)));
  return H;
}

NaturalIso path_functor_to_natiso(const GroupoidMap& H, const PathObjectData& pb) {
  NaturalIso h;
  h.source = compose_maps(pb.p0, H);
  h.target = compose_maps(pb.p1, H);
  h.components = H.object_map;
  return h;
}

// ---------------------------------------------------------------------------
// Mapping path factorization

std::optional<int> Factorization::middle_obj(int x, int beta) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == std::make_pair(x, beta)) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> Factorization::middle_mor(int o1, int o2, int u) const {
  const auto& d = *original.dom;
  const auto& hom = d.hom(objects[o1].first, objects[o2].first);
  auto it = std::lower_bound(hom.begin(), hom.end(), u);
  if (it == hom.end() || *it != u) return std::nullopt;
  for (size_t m = 0; m < mor_u.size(); ++m)
    if (mor_src[m] == o1 && mor_dst[m] == o2 && mor_u[m] == u) return static_cast<int>(m);
  return std::nullopt;
}

Factorization factor_we_fib(const GroupoidMap& f) {
  const auto& X = *f.dom;
  const auto& Y = *f.cod;
  Factorization fac;
  fac.original = f;

  std::unordered_map<long long, int> obj_index;
  auto middle = std::make_shared<FiniteGroupoid>();
  for (int x = 0; x < X.num_objects(); ++x)
    for (int beta : Y.morphisms_from(f.obj(x))) {
      obj_index[pack(x, beta)] = static_cast<int>(fac.objects.size());
      fac.objects.emplace_back(x, beta);
      middle->object_names.push_back("(" + X.object_name(x) + "," + Y.morphism_name(beta) + ")");
    }
  const int NO = static_cast<int>(fac.objects.size());

  // morphism (o1 -> o2) per u in hom(x1, x2); v-component determined
  std::vector<std::vector<int>> mor_lookup(static_cast<size_t>(NO) * NO);
  for (int o1 = 0; o1 < NO; ++o1)
    for (int o2 = 0; o2 < NO; ++o2) {
      auto [x1, b1] = fac.objects[o1];
      auto [x2, b2] = fac.objects[o2];
      const auto& hom = X.hom(x1, x2);
      auto& slot = mor_lookup[static_cast<size_t>(o1) * NO + o2];
      slot.reserve(hom.size());
      for (int u : hom) {
        int v = Y.compose(Y.compose(b2, f.mor(u)), Y.inv(b1));
        slot.push_back(static_cast<int>(fac.mor_u.size()));
        fac.mor_u.push_back(u);
        fac.mor_v.push_back(v);
        fac.mor_src.push_back(o1);
        fac.mor_dst.push_back(o2);
        middle->morphisms.push_back({o1, o2});
      }
    }
  auto lookup = [&](int o1, int o2, int u) {
    auto [x1, b1] = fac.objects[o1];
    auto [x2, b2] = fac.objects[o2];
    const auto& hom = X.hom(x1, x2);
    auto it = std::lower_bound(hom.begin(), hom.end(), u);
    return mor_lookup[static_cast<size_t>(o1) * NO + o2][it - hom.begin()];
  };

  middle->identity.resize(NO);
  for (int o = 0; o < NO; ++o) middle->identity[o] = lookup(o, o, X.id_of(fac.objects[o].first));
  middle->inverse.resize(fac.mor_u.size());
  for (size_t m = 0; m < fac.mor_u.size(); ++m)
    middle->inverse[m] = lookup(fac.mor_dst[m], fac.mor_src[m], X.inv(fac.mor_u[m]));
  middle->reserve_composites();
  for (size_t m = 0; m < fac.mor_u.size(); ++m)
    for (int m2 : middle->morphisms_into(fac.mor_src[m]))
      middle->set_composite(static_cast<int>(m), m2,
                           lookup(fac.mor_src[m2], fac.mor_dst[m], X.compose(fac.mor_u[m], fac.mor_u[m2])));
  middle->finalize();
  fac.middle = middle;

  fac.we_part.dom = f.dom;
  fac.we_part.cod = middle;
  for (int x = 0; x < X.num_objects(); ++x)
    fac.we_part.object_map.push_back(obj_index.at(pack(x, Y.id_of(f.obj(x)))));
  for (int u = 0; u < X.num_morphisms(); ++u)
    fac.we_part.morphism_map.push_back(
        lookup(fac.we_part.obj(X.src(u)), fac.we_part.obj(X.dst(u)), u));

  fac.fib_part.dom = middle;
  fac.fib_part.cod = f.cod;
  for (auto [x, beta] : fac.objects) fac.fib_part.object_map.push_back(Y.dst(beta));
  for (size_t m = 0; m < fac.mor_u.size(); ++m) fac.fib_part.morphism_map.push_back(fac.mor_v[m]);

  if (!maps_equal(compose_maps(fac.fib_part, fac.we_part), f))
    throw std::logic_error("factor_we_fib: factorization is not strict (unreachable)");
  if (!is_equivalence(fac.we_part).verdict)
    throw std::logic_error("factor_we_fib: we_part not an equivalence (unreachable)");
  if (!is_isofibration(fac.fib_part).verdict)
    throw std::logic_error("factor_we_fib: fib_part not an isofibration (unreachable)");
  return fac;
}

// ---------------------------------------------------------------------------
// Truncation

Truncation truncate(const GroupoidMap& f) {
  auto fib = is_isofibration(f);
  if (!fib.verdict)
    throw std::invalid_argument("truncate: map is not an isofibration (" + fib.counterexample + ")");
  const auto& A = *f.dom;
  const auto& B = *f.cod;
  const int n = A.num_objects();

  Truncation tr;
  auto t = std::make_shared<FiniteGroupoid>();
  for (int a = 0; a < n; ++a) t->object_names.push_back(A.object_name(a));
  // morphism (a, a', m) for m in hom_B(f a, f a'); lookup aligned with hom order
  std::vector<int> first_index(static_cast<size_t>(n) * n, -1);
  std::vector<int> t_a, t_a2, t_m;
  for (int a = 0; a < n; ++a)
    for (int a2 = 0; a2 < n; ++a2) {
      first_index[static_cast<size_t>(a) * n + a2] = static_cast<int>(t_m.size());
      for (int m : B.hom(f.obj(a), f.obj(a2))) {
        t_a.push_back(a);
        t_a2.push_back(a2);
        t_m.push_back(m);
        t->morphisms.push_back({a, a2});
      }
    }
  auto lookup = [&](int a, int a2, int m) {
    const auto& hom = B.hom(f.obj(a), f.obj(a2));
    auto it = std::lower_bound(hom.begin(), hom.end(), m);
    return first_index[static_cast<size_t>(a) * n + a2] + static_cast<int>(it - hom.begin());
  };
  t->identity.resize(n);
  for (int a = 0; a < n; ++a) t->identity[a] = lookup(a, a, B.id_of(f.obj(a)));
  t->inverse.resize(t_m.size());
  for (size_t i = 0; i < t_m.size(); ++i) t->inverse[i] = lookup(t_a2[i], t_a[i], B.inv(t_m[i]));
  t->reserve_composites();
  for (size_t i = 0; i < t_m.size(); ++i)
    for (int j : t->morphisms_into(t_a[i]))
      t->set_composite(static_cast<int>(i), j, lookup(t_a[j], t_a2[i], B.compose(t_m[i], t_m[j])));
  t->finalize();
  tr.truncated = t;

  tr.i.dom = f.dom;
  tr.i.cod = t;
  for (int a = 0; a < n; ++a) tr.i.object_map.push_back(a);
  for (int u = 0; u < A.num_morphisms(); ++u)
    tr.i.morphism_map.push_back(lookup(A.src(u), A.dst(u), f.mor(u)));

  tr.f_prime.dom = t;
  tr.f_prime.cod = f.cod;
  tr.f_prime.object_map = f.object_map;
  for (size_t i = 0; i < t_m.size(); ++i) tr.f_prime.morphism_map.push_back(t_m[i]);

  if (!maps_equal(compose_maps(tr.f_prime, tr.i), f))
    throw std::logic_error("truncate: factorization not strict (unreachable)");
  return tr;
}

// ---------------------------------------------------------------------------
// Universes

Universe finset_universe(int n) {
  if (n < 0) throw std::invalid_argument("finset_universe: negative bound");
  // base: one object per cardinality k <= n, morphisms = permutations (lex order)
  std::vector<std::vector<std::vector<int>>> perms(n + 1);
  for (int k = 0; k <= n; ++k) {
    std::vector<int> p(k);
    for (int i = 0; i < k; ++i) p[i] = i;
    do {
      perms[k].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  auto base = std::make_shared<FiniteGroupoid>();
  std::vector<int> offset(n + 2, 0);
  for (int k = 0; k <= n; ++k) {
    base->object_names.push_back("set" + std::to_string(k));
    offset[k + 1] = offset[k] + static_cast<int>(perms[k].size());
    for (size_t i = 0; i < perms[k].size(); ++i) base->morphisms.push_back({k, k});
  }
  auto perm_index = [&](int k, const std::vector<int>& p) {
    for (size_t i = 0; i < perms[k].size(); ++i)
      if (perms[k][i] == p) return offset[k] + static_cast<int>(i);
    throw std::logic_error("perm_index");
  };
  base->identity.resize(n + 1);
  base->inverse.resize(base->morphisms.size());
  for (int k = 0; k <= n; ++k) {
    std::vector<int> e(k);
    for (int i = 0; i < k; ++i) e[i] = i;
    base->identity[k] = perm_index(k, e);
    for (size_t i = 0; i < perms[k].size(); ++i) {
      std::vector<int> inv(k);
      for (int j = 0; j < k; ++j) inv[perms[k][i][j]] = j;
      base->inverse[offset[k] + static_cast<int>(i)] = perm_index(k, inv);
    }
  }
  base->reserve_composites();
  for (int k = 0; k <= n; ++k)
    for (size_t i = 0; i < perms[k].size(); ++i)
      for (size_t j = 0; j < perms[k].size(); ++j) {
        std::vector<int> c(k);
        for (int t = 0; t < k; ++t) c[t] = perms[k][i][perms[k][j][t]];
        base->set_composite(offset[k] + static_cast<int>(i), offset[k] + static_cast<int>(j),
                            perm_index(k, c));
      }
  base->finalize();

  // total: pointed sets (k, x); morphisms are point-preserving bijections
  auto total = std::make_shared<FiniteGroupoid>();
  std::vector<std::pair<int, int>> points; // (k, x)
  std::unordered_map<long long, int> pobj;
  for (int k = 1; k <= n; ++k)
    for (int x = 0; x < k; ++x) {
      pobj[pack(k, x)] = static_cast<int>(points.size());
      points.emplace_back(k, x);
      total->object_names.push_back("(set" + std::to_string(k) + "," + std::to_string(x) + ")");
    }
  std::vector<std::pair<int, int>> tmors; // (source object index, base morphism id)
  std::unordered_map<long long, int> tmor_index;
  GroupoidMap proj;
  proj.dom = total;
  proj.cod = base;
  for (size_t o = 0; o < points.size(); ++o) {
    auto [k, x] = points[o];
    proj.object_map.push_back(k);
    for (size_t i = 0; i < perms[k].size(); ++i) {
      int bm = offset[k] + static_cast<int>(i);
      tmor_index[pack(static_cast<int>(o), bm)] = static_cast<int>(tmors.size());
      tmors.emplace_back(static_cast<int>(o), bm);
      total->morphisms.push_back({static_cast<int>(o), pobj.at(pack(k, perms[k][i][x]))});
      proj.morphism_map.push_back(bm);
    }
  }
  total->identity.resize(points.size());
  total->inverse.resize(tmors.size());
  for (size_t o = 0; o < points.size(); ++o)
    total->identity[o] = tmor_index.at(pack(static_cast<int>(o), base->id_of(points[o].first)));
  for (size_t m = 0; m < tmors.size(); ++m) {
    auto [o, bm] = tmors[m];
    int o2 = total->dst(static_cast<int>(m));
    total->inverse[m] = tmor_index.at(pack(o2, base->inv(bm)));
  }
  total->reserve_composites();
  for (size_t m = 0; m < tmors.size(); ++m) {
    auto [o, bm] = tmors[m];
    for (int m2 : total->morphisms_into(o)) {
      auto [o2, bm2] = tmors[m2];
      total->set_composite(static_cast<int>(m), m2, tmor_index.at(pack(o2, base->compose(bm, bm2))));
    }
  }
  total->finalize();

  Universe u;
  u.total = total;
  u.base = base;
  u.projection = proj;
  u.description = "finset:" + std::to_string(n);
  if (!is_isofibration(u.projection).verdict)
    throw std::logic_error("finset_universe: projection not an isofibration (unreachable)");
  return u;
}

Universe delooping_universe(const FiniteGroup& grp) {
  Universe u;
  u.total = delooping(grp);
  u.base = terminal_groupoid();
  u.projection = to_terminal(u.total);
  u.description = "delooping";
  return u;
}

Universe coherent_path_object(const Universe& u) {
  auto fib = is_isofibration(u.projection);
  if (!fib.verdict)
    throw std::invalid_argument("coherent_path_object: projection is not an isofibration");

  auto data = std::make_shared<CoherentPathData>();
  data->base_path = path_object(u.base);
  auto D = product(u.total, u.total);
  auto BB = product(u.base, u.base);
  auto projproj =
      pairing(BB, compose_maps(u.projection, D.proj0), compose_maps(u.projection, D.proj1));
  auto boundary = pairing(BB, data->base_path.p0, data->base_path.p1);
  data->q_square = pullback(projproj, boundary);

  // canonical map 𝒰̇ -> P𝒰 ×_{𝒰×𝒰} 𝒰̇×𝒰̇
  auto diag = pairing(D, identity_map(u.total), identity_map(u.total));
  auto refl = compose_maps(data->base_path.r, u.projection);
  auto canon = pullback_pairing(data->q_square, diag, refl);

  data->factorization = factor_we_fib(canon);
  data->total_path = data->factorization.middle;
  data->r_total = data->factorization.we_part;
  data->canonical = data->factorization.fib_part;
  data->to_base_path = compose_maps(data->q_square.left, data->canonical);
  data->p0_total = compose_maps(compose_maps(D.proj0, data->q_square.top), data->canonical);
  data->p1_total = compose_maps(compose_maps(D.proj1, data->q_square.top), data->canonical);

  // Lemma invariants: commuting rectangle and fibration conditions
  auto idt = identity_map(u.total);
  if (!maps_equal(compose_maps(data->p0_total, data->r_total), idt) ||
      !maps_equal(compose_maps(data->p1_total, data->r_total), idt))
    throw std::logic_error("coherent path object: boundary laws fail");
  if (!maps_equal(compose_maps(data->to_base_path, data->r_total),
                  compose_maps(data->base_path.r, u.projection)))
    throw std::logic_error("coherent path object: left rectangle does not commute");
  if (!maps_equal(compose_maps(data->base_path.p0, data->to_base_path),
                  compose_maps(u.projection, data->p0_total)) ||
      !maps_equal(compose_maps(data->base_path.p1, data->to_base_path),
                  compose_maps(u.projection, data->p1_total)))
    throw std::logic_error("coherent path object: right rectangle does not commute");
  if (!is_isofibration(data->to_base_path).verdict)
    throw std::logic_error("coherent path object: map to P𝒰 is not a fibration");

  Universe out = u;
  out.coherent = data;
  return out;
}

} // namespace pathgpd
