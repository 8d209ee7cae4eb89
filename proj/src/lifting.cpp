#include "pathgpd/lifting.hpp"

#include <stdexcept>

#include "pathgpd/classify.hpp"

namespace pathgpd {

std::vector<Violation> LiftingProblem::validate() const {
  std::vector<Violation> out;
  auto check = [&](const GroupoidMap& u, const char* name) {
    for (auto& v : pathgpd::validate_map(u)) out.push_back({v.law, std::string(name) + ": " + v.detail});
  };
  check(m, "m");
  check(f, "f");
  check(top, "top");
  check(bottom, "bottom");
  if (!out.empty()) return out;
  if (!same_groupoid(m.dom, top.dom)) out.push_back({"boundary", "dom(m) != dom(top)"});
  if (!same_groupoid(m.cod, bottom.dom)) out.push_back({"boundary", "cod(m) != dom(bottom)"});
  if (!same_groupoid(top.cod, f.dom)) out.push_back({"boundary", "cod(top) != dom(f)"});
  if (!same_groupoid(f.cod, bottom.cod)) out.push_back({"boundary", "cod(f) != cod(bottom)"});
  if (!out.empty()) return out;
  if (!maps_equal(compose_maps(f, top), compose_maps(bottom, m)))
    out.push_back({"commutativity", "f∘top != bottom∘m"});
  return out;
}

Search<GroupoidMap> solve_lifting(const LiftingProblem& p, long long cap) {
  auto bad = p.validate();
  if (!bad.empty())
    throw std::invalid_argument("solve_lifting: invalid square (" + bad.front().law + ": " +
                                bad.front().detail + ")");
  PartialFunctor forced;
  forced.object_map.assign(p.m.cod->num_objects(), -1);
  forced.morphism_map.assign(p.m.cod->num_morphisms(), -1);
  if (!force_composite(forced, p.m, p.top)) return {};
  StrictEquation eqs[1] = {{&p.f, &p.bottom}};
  return find_functor(p.m.cod, p.f.dom, eqs, forced, cap);
}

Search<Realignment> realign(const GroupoidMap& m, const GroupoidMap& f, const GroupoidMap& g,
                            const NaturalIso& h, long long cap) {
  auto cof = is_cofibration(m);
  if (!cof.verdict) throw std::invalid_argument("realign: m is not a cofibration (" + cof.counterexample + ")");
  if (!maps_equal(h.source, compose_maps(g, m)) || !maps_equal(h.target, f))
    throw std::invalid_argument("realign: homotopy does not run from g∘m to f");
  auto bad = validate_natural_iso(h);
  if (!bad.empty())
    throw std::invalid_argument("realign: invalid homotopy (" + bad.front().law + ": " +
                                bad.front().detail + ")");

  auto pb = path_object(g.cod);
  auto H = natiso_to_path_functor(h, pb); // p0∘H = g∘m, p1∘H = f

  LiftingProblem square;
  square.m = m;
  square.f = pb.p0; // trivial fibration
  square.top = H;
  square.bottom = g;
  auto lift = solve_lifting(square, cap);

  Search<Realignment> result;
  result.status = lift.status;
  result.nodes = lift.nodes;
  if (!lift.found()) return result;

  Realignment r;
  r.filler = *lift.value;
  auto w = path_functor_to_natiso(r.filler, pb); // g ⇒ p1∘j
  r.g_prime = w.target;
  r.witness = w;
  if (!maps_equal(compose_maps(r.g_prime, m), f))
    throw std::logic_error("realign: strictification law fails (unreachable)");
  result.value = std::move(r);
  return result;
}

} // namespace pathgpd
