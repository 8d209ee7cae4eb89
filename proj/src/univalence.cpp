#include "pathgpd/univalence.hpp"

#include <set>
#include <stdexcept>

#include "pathgpd/classify.hpp"

namespace pathgpd {

namespace {

bool is_isomorphism(const GroupoidMap& f) {
  if (f.dom->num_objects() != f.cod->num_objects()) return false;
  if (f.dom->num_morphisms() != f.cod->num_morphisms()) return false;
  std::vector<bool> seen(f.object_map.size(), false);
  for (int x : f.object_map) {
    if (seen[x]) return false;
    seen[x] = true;
  }
  std::vector<bool> mseen(f.morphism_map.size(), false);
  for (int m : f.morphism_map) {
    if (mseen[m]) return false;
    mseen[m] = true;
  }
  return true;
}

// first isomorphism a -> b in canonical order
std::optional<GroupoidMap> find_iso(const GroupoidPtr& a, const GroupoidPtr& b) {
  std::optional<GroupoidMap> out;
  PartialFunctor none;
  long long nodes = 0;
  for_each_functor(a, b, {}, none, kDefaultCap, nodes, [&](const GroupoidMap& u) {
    if (is_isomorphism(u)) {
      out = u;
      return false;
    }
    return true;
  });
  return out;
}

} // namespace

std::optional<SmallnessWitness> smallness_witness(const GroupoidPtr& a, const Universe& u) {
  for (int c = 0; c < u.base->num_objects(); ++c) {
    auto pt = point_map(u.base, c);
    auto fibre = pullback(u.projection, pt);
    if (fibre.apex->num_objects() != a->num_objects() ||
        fibre.apex->num_morphisms() != a->num_morphisms())
      continue;
    auto phi = find_iso(a, fibre.apex);
    if (!phi) continue;

    SmallnessWitness w;
    w.square.right = u.projection;
    w.square.bottom = pt;
    w.square.apex = a;
    w.square.top = compose_maps(fibre.top, *phi);
    w.square.left = to_terminal(a);
    for (int x = 0; x < a->num_objects(); ++x)
      w.square.object_pairs.emplace_back(w.square.top.obj(x), 0);
    for (int m = 0; m < a->num_morphisms(); ++m)
      w.square.morphism_pairs.emplace_back(w.square.top.mor(m), 0);
    w.square.certified = verify_pullback_square(w.square, 3);
    if (!w.square.certified) throw std::logic_error("smallness_witness: bad square (unreachable)");
    if (!is_monomorphism(w.square.top).verdict)
      throw std::logic_error("smallness_witness: fibre inclusion not monic (unreachable)");
    w.iota = w.square.top;
    return w;
  }
  return std::nullopt;
}

std::vector<Violation> validate_instance(const UnivalenceInstance& inst) {
  std::vector<Violation> out;
  auto sq_check = [&](const SmallnessWitness& w, const char* name) {
    if (!w.square.certified) out.push_back({"certificate", std::string(name) + ": square not certified"});
    if (!maps_equal(compose_maps(w.square.right, w.square.top),
                    compose_maps(w.square.bottom, w.square.left)))
      out.push_back({"commutativity", std::string(name) + ": square does not commute"});
    if (!same_groupoid(w.square.right.dom, inst.universe.total) ||
        !same_groupoid(w.square.right.cod, inst.universe.base))
      out.push_back({"boundary", std::string(name) + ": right leg is not the universe projection"});
  };
  sq_check(inst.wa, "wa");
  sq_check(inst.wb, "wb");
  if (!same_groupoid(inst.wa.square.bottom.dom, inst.wb.square.bottom.dom))
    out.push_back({"boundary", "classifying maps have different bases"});
  if (!out.empty()) return out;
  if (!maps_equal(compose_maps(inst.wb.square.left, inst.e), inst.wa.square.left))
    out.push_back({"triangle", "e is not over the base: left(wb)∘e != left(wa)"});
  auto we = is_equivalence(inst.e);
  if (!we.verdict) out.push_back({"equivalence", "e is not an equivalence: " + we.counterexample});
  return out;
}

std::vector<Violation> validate_coherent_pair(const UnivalenceInstance& inst,
                                              const CoherentHomotopyPair& pair) {
  std::vector<Violation> out;
  auto u = inst.universe.coherent ? inst.universe : coherent_path_object(inst.universe);
  const auto& cp = *u.coherent;
  auto je = compose_maps(inst.j(), inst.e);
  if (!maps_equal(compose_maps(cp.base_path.p0, pair.base_homotopy), inst.f()))
    out.push_back({"boundary", "base homotopy does not start at f"});
  if (!maps_equal(compose_maps(cp.base_path.p1, pair.base_homotopy), inst.g()))
    out.push_back({"boundary", "base homotopy does not end at g"});
  if (!maps_equal(compose_maps(cp.p0_total, pair.total_homotopy), inst.i()))
    out.push_back({"boundary", "total homotopy does not start at i"});
  if (!maps_equal(compose_maps(cp.p1_total, pair.total_homotopy), je))
    out.push_back({"boundary", "total homotopy does not end at j∘e"});
  if (!maps_equal(compose_maps(cp.to_base_path, pair.total_homotopy),
                  compose_maps(pair.base_homotopy, inst.wa.square.left)))
    out.push_back({"coherence", "square over the base path object does not commute"});
  return out;
}

Search<CoherentHomotopyPair> check_univalence_instance(const UnivalenceInstance& inst,
                                                       long long cap) {
  auto bad = validate_instance(inst);
  if (!bad.empty())
    throw std::invalid_argument("check_univalence_instance: invalid instance (" + bad.front().law +
                                ": " + bad.front().detail + ")");
  auto u = inst.universe.coherent ? inst.universe : coherent_path_object(inst.universe);
  const auto& cp = *u.coherent;
  auto je = compose_maps(inst.j(), inst.e);

  Search<CoherentHomotopyPair> result;
  for (const auto& hb : all_natural_isos(inst.f(), inst.g())) {
    auto H_base = natiso_to_path_functor(hb, cp.base_path);
    auto over = compose_maps(H_base, inst.wa.square.left);
    // boundaries project to f∘left and g∘left, so the total homotopy runs i ⇒ j∘e
    StrictEquation eqs[3] = {
        {&cp.p0_total, &inst.i()}, {&cp.p1_total, &je}, {&cp.to_base_path, &over}};
    PartialFunctor none;
    auto sub = find_functor(inst.e.dom, cp.total_path, eqs, none, cap);
    result.nodes += sub.nodes;
    if (sub.capped()) {
      result.status = SearchStatus::CapExceeded;
      return result;
    }
    if (sub.found()) {
      CoherentHomotopyPair pair{H_base, *sub.value};
      auto check = validate_coherent_pair(inst, pair);
      if (!check.empty())
        throw std::logic_error("check_univalence_instance: found pair fails validation (" +
                               check.front().detail + ")");
      result.status = SearchStatus::Found;
      result.value = std::move(pair);
      return result;
    }
  }
  result.status = SearchStatus::Absent;
  return result;
}

Search<NaturalIso> weak_univalence_witness(const UnivalenceInstance& inst, long long cap) {
  auto bad = validate_instance(inst);
  if (!bad.empty())
    throw std::invalid_argument("weak_univalence_witness: invalid instance (" + bad.front().law +
                                ": " + bad.front().detail + ")");
  return find_natural_iso(compose_maps(inst.j(), inst.e), inst.i(), cap);
}

CompleteGroupReport is_complete_group(const FiniteGroup& grp) {
  CompleteGroupReport rep;
  rep.centre = centre(grp);
  rep.automorphism_count = static_cast<int>(all_automorphisms(grp).size());
  std::set<std::vector<int>> inner;
  for (int h = 0; h < grp.order(); ++h) {
    std::vector<int> conj(grp.order());
    for (int g = 0; g < grp.order(); ++g) conj[g] = grp.mul(grp.mul(grp.inv(h), g), h);
    inner.insert(std::move(conj));
  }
  rep.inner_count = static_cast<int>(inner.size());
  rep.verdict = rep.centre.size() == 1 && rep.automorphism_count == rep.inner_count;
  return rep;
}

NaturalIso complete_group_univalence(const FiniteGroup& grp, const GroupoidPtr& c,
                                     const GroupoidMap& theta) {
  auto rep = is_complete_group(grp);
  if (!rep.verdict)
    throw std::invalid_argument("complete_group_univalence: group is not complete");
  auto prod = product(c, delooping(grp));
  if (!same_groupoid(theta.dom, prod.groupoid) || !same_groupoid(theta.cod, prod.groupoid))
    throw std::invalid_argument("complete_group_univalence: theta is not an endomap of C × BG");
  if (!maps_equal(compose_maps(prod.proj0, theta), prod.proj0))
    throw std::invalid_argument("complete_group_univalence: theta is not over C");
  auto we = is_equivalence(theta);
  if (!we.verdict)
    throw std::invalid_argument("complete_group_univalence: theta is not an equivalence (" +
                                we.counterexample + ")");

  // θ(p, g) = (p, θ₂(p, g))
  auto theta2 = [&](int p, int g) { return prod.split_mor(theta.mor(prod.pair_mor(p, g))).second; };

  const int n = c->num_objects();
  std::vector<int> h(n, -1);
  for (int a = 0; a < n; ++a) {
    int ida = c->id_of(a);
    for (int cand = 0; cand < grp.order() && h[a] < 0; ++cand) {
      bool ok = true;
      for (int g = 0; g < grp.order() && ok; ++g)
        ok = theta2(ida, g) == grp.mul(grp.mul(grp.inv(cand), g), cand);
      if (ok) h[a] = cand;
    }
    if (h[a] < 0)
      throw std::logic_error("complete_group_univalence: θ(1_a, -) is not inner (unreachable)");
  }
  // the centre argument: h is constant along every path in the base
  for (int p = 0; p < c->num_morphisms(); ++p)
    if (grp.mul(h[c->dst(p)], theta2(p, grp.identity)) != h[c->src(p)])
      throw std::logic_error("complete_group_univalence: transport law fails (unreachable)");

  NaturalIso out;
  out.source = compose_maps(prod.proj1, theta);
  out.target = prod.proj1;
  out.components.resize(prod.groupoid->num_objects());
  for (int a = 0; a < n; ++a) out.components[prod.pair_obj(a, 0)] = h[a];
  auto bad = validate_natural_iso(out);
  if (!bad.empty())
    throw std::logic_error("complete_group_univalence: assembled homotopy invalid (" +
                           bad.front().detail + ")");
  return out;
}

Search<std::vector<UnivalenceInstance>> enumerate_equivalences_over(const GroupoidPtr& c,
                                                                    const Universe& u,
                                                                    long long cap) {
  Search<std::vector<UnivalenceInstance>> result;
  result.value.emplace();
  auto chis = enumerate_functors(c, u.base, cap);
  bool capped = chis.capped();

  std::vector<SmallnessWitness> ws;
  bool c_terminal = same_groupoid(c, terminal_groupoid());
  for (const auto& chi : *chis.value) {
    SmallnessWitness w;
    w.square = pullback(u.projection, chi);
    if (c_terminal) w.iota = w.square.top;
    ws.push_back(std::move(w));
  }

  for (const auto& w1 : ws)
    for (const auto& w2 : ws) {
      StrictEquation eqs[1] = {{&w2.square.left, &w1.square.left}};
      PartialFunctor none;
      long long nodes = 0;
      auto status = for_each_functor(
          w1.square.apex, w2.square.apex, eqs, none, cap, nodes, [&](const GroupoidMap& e) {
            if (!is_equivalence(e).verdict) return true;
            if (static_cast<long long>(result.value->size()) >= cap) {
              capped = true;
              return false;
            }
            UnivalenceInstance inst;
            inst.universe = u;
            inst.wa = w1;
            inst.wb = w2;
            inst.e = e;
            result.value->push_back(std::move(inst));
            return true;
          });
      result.nodes += nodes;
      if (status == SearchStatus::CapExceeded) capped = true;
    }
  result.status = capped ? SearchStatus::CapExceeded : SearchStatus::Found;
  return result;
}

} // namespace pathgpd
