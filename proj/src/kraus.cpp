#include "pathgpd/kraus.hpp"

#include <stdexcept>

#include "pathgpd/lifting.hpp"

namespace pathgpd {

TripleProduct triple_product(const GroupoidPtr& a) {
  TripleProduct tp;
  tp.a = a;
  tp.p2 = product(a, a);
  tp.p3 = product(tp.p2.groupoid, a);
  tp.pi0 = tp.p2.proj0;
  tp.pi1 = tp.p2.proj1;
  tp.q01 = tp.p3.proj0;
  tp.q2 = tp.p3.proj1;
  auto id2 = identity_map(tp.p2.groupoid);
  tp.s0 = pairing(tp.p3, id2, tp.pi0);
  tp.s1 = pairing(tp.p3, id2, tp.pi1);
  return tp;
}

std::vector<Violation> validate_homogeneity_witness(const HomogeneityWitness& hw) {
  std::vector<Violation> out;
  for (auto& v : validate_map(hw.e)) out.push_back({v.law, "e: " + v.detail});
  if (!out.empty()) return out;
  if (!same_groupoid(hw.e.dom, hw.tp.p3.groupoid) || !same_groupoid(hw.e.cod, hw.tp.p3.groupoid))
    out.push_back({"boundary", "e is not an endomap of A³"});
  if (!out.empty()) return out;
  if (!maps_equal(compose_maps(hw.tp.q01, hw.e), hw.tp.q01))
    out.push_back({"over-base", "⟨π₀,π₁⟩∘e != ⟨π₀,π₁⟩"});
  auto we = is_equivalence(hw.e);
  if (!we.verdict) out.push_back({"equivalence", "e: " + we.counterexample});
  auto q2es0 = compose_maps(hw.tp.q2, compose_maps(hw.e, hw.tp.s0));
  auto q2s1 = compose_maps(hw.tp.q2, hw.tp.s1);
  if (!maps_equal(hw.section_homotopy.source, q2es0) ||
      !maps_equal(hw.section_homotopy.target, q2s1))
    out.push_back({"boundary", "section homotopy does not run from π₂∘e∘s₀ to π₂∘s₁"});
  for (auto& v : validate_natural_iso(hw.section_homotopy))
    out.push_back({v.law, "section homotopy: " + v.detail});
  return out;
}

HomogeneityWitness abelian_theta(const FiniteGroup& grp) {
  if (!is_abelian(grp)) throw std::invalid_argument("abelian_theta: group is not abelian");
  HomogeneityWitness hw;
  hw.tp = triple_product(delooping(grp));
  const auto& p2 = hw.tp.p2;
  const auto& p3 = hw.tp.p3;

  hw.e.dom = hw.e.cod = p3.groupoid;
  for (int o = 0; o < p3.groupoid->num_objects(); ++o) hw.e.object_map.push_back(o);
  for (int m = 0; m < p3.groupoid->num_morphisms(); ++m) {
    auto [m2, k] = p3.split_mor(m);
    auto [g, h] = p2.split_mor(m2);
    hw.e.morphism_map.push_back(p3.pair_mor(m2, grp.mul(grp.mul(h, grp.inv(g)), k)));
  }

  auto q2es0 = compose_maps(hw.tp.q2, compose_maps(hw.e, hw.tp.s0));
  if (!maps_equal(q2es0, compose_maps(hw.tp.q2, hw.tp.s1)))
    throw std::logic_error("abelian_theta: θ∘s₀ != θ∘s₁ (unreachable)");
  hw.section_homotopy = identity_iso(q2es0);
  hw.section_homotopy.target = compose_maps(hw.tp.q2, hw.tp.s1);

  auto bad = validate_homogeneity_witness(hw);
  if (!bad.empty())
    throw std::logic_error("abelian_theta: invalid witness (" + bad.front().law + ": " +
                           bad.front().detail + ")");
  return hw;
}

Search<HomogeneityWitness> search_homogeneity(const GroupoidPtr& a, long long cap) {
  auto tp = triple_product(a);
  Search<HomogeneityWitness> result;
  bool capped = false;
  StrictEquation eqs[1] = {{&tp.q01, &tp.q01}};
  PartialFunctor none;
  long long nodes = 0;
  auto status = for_each_functor(
      tp.p3.groupoid, tp.p3.groupoid, eqs, none, cap, nodes, [&](const GroupoidMap& e) {
        if (!is_equivalence(e).verdict) return true;
        auto q2es0 = compose_maps(tp.q2, compose_maps(e, tp.s0));
        auto q2s1 = compose_maps(tp.q2, tp.s1);
        auto h = find_natural_iso(q2es0, q2s1, cap);
        result.nodes += h.nodes;
        if (h.capped()) capped = true;
        if (h.found()) {
          result.value = HomogeneityWitness{tp, e, *h.value};
          return false;
        }
        return true;
      });
  result.nodes += nodes;
  if (result.value)
    result.status = SearchStatus::Found;
  else if (capped || status == SearchStatus::CapExceeded)
    result.status = SearchStatus::CapExceeded;
  else
    result.status = SearchStatus::Absent;
  return result;
}

std::vector<Violation> validate_u_homogeneity_witness(const UHomogeneityWitness& w) {
  std::vector<Violation> out;
  if (!maps_equal(w.homotopy.source, compose_maps(w.iota, w.p2.proj0)))
    out.push_back({"boundary", "homotopy does not start at ι∘π₀"});
  if (!maps_equal(w.homotopy.target, compose_maps(w.iota, w.p2.proj1)))
    out.push_back({"boundary", "homotopy does not end at ι∘π₁"});
  for (auto& v : validate_natural_iso(w.homotopy)) out.push_back(v);
  return out;
}

UHomogenizeResult u_homogenize(const HomogeneityWitness& hw, const SmallnessWitness& sw,
                               const Universe& u, long long cap) {
  if (!sw.iota) throw std::invalid_argument("u_homogenize: smallness witness must be over the terminal base");
  if (!same_groupoid(sw.square.apex, hw.tp.a))
    throw std::invalid_argument("u_homogenize: smallness witness is not for A");
  auto bad = validate_homogeneity_witness(hw);
  if (!bad.empty())
    throw std::invalid_argument("u_homogenize: invalid homogeneity witness (" + bad.front().law +
                                ": " + bad.front().detail + ")");

  // the rectangle A³ -> A -> 𝒰̇ over A² -> 1 -> 𝒰 as a smallness witness
  SmallnessWitness W;
  W.square.apex = hw.tp.p3.groupoid;
  W.square.top = compose_maps(*sw.iota, hw.tp.q2);
  W.square.left = hw.tp.q01;
  W.square.right = u.projection;
  W.square.bottom = compose_maps(sw.square.bottom, to_terminal(hw.tp.p2.groupoid));
  for (int o = 0; o < W.square.apex->num_objects(); ++o)
    W.square.object_pairs.emplace_back(W.square.top.obj(o), W.square.left.obj(o));
  for (int m = 0; m < W.square.apex->num_morphisms(); ++m)
    W.square.morphism_pairs.emplace_back(W.square.top.mor(m), W.square.left.mor(m));
  W.square.certified = verify_pullback_square(W.square, 3);
  if (!W.square.certified) throw std::logic_error("u_homogenize: pasted square not a pullback (unreachable)");

  UnivalenceInstance inst;
  inst.universe = u;
  inst.wa = W;
  inst.wb = W;
  inst.e = hw.e;

  UHomogenizeResult result;
  auto w = weak_univalence_witness(inst, cap);
  result.nodes = w.nodes;
  if (w.capped()) {
    result.status = UHomogenizeStatus::CapExceeded;
    return result;
  }
  if (!w.found()) {
    result.status = UHomogenizeStatus::NoWeakUnivalence;
    result.refuting_instance = std::move(inst);
    return result;
  }

  // paste: ι∘π₀ = ι∘π₂∘s₀ ⇐ ι∘π₂∘e∘s₀ ⇒ ι∘π₂∘s₁ = ι∘π₁
  auto pasted = vcompose(whisker_post(*sw.iota, hw.section_homotopy),
                         iso_inverse(whisker_pre(*w.value, hw.tp.s0)));
  UHomogeneityWitness out;
  out.p2 = hw.tp.p2;
  out.iota = *sw.iota;
  out.homotopy = std::move(pasted);
  out.homotopy.source = compose_maps(out.iota, out.p2.proj0);
  out.homotopy.target = compose_maps(out.iota, out.p2.proj1);
  auto check = validate_u_homogeneity_witness(out);
  if (!check.empty())
    throw std::logic_error("u_homogenize: pasted homotopy invalid (" + check.front().detail + ")");
  result.status = UHomogenizeStatus::Ok;
  result.witness = std::move(out);
  return result;
}

MonoCertificate kraus_main(const UHomogeneityWitness& uhw, const SmallnessWitness& sw,
                           const GroupoidMap& m, const GroupoidMap& s, long long cap) {
  auto cof = is_cofibration(m);
  if (!cof.verdict) throw std::invalid_argument("kraus_main: m is not a cofibration (" + cof.counterexample + ")");
  if (!sw.iota) throw std::invalid_argument("kraus_main: smallness witness must be over the terminal base");
  if (!same_groupoid(m.dom, sw.iota->dom))
    throw std::invalid_argument("kraus_main: m does not start at the small object");
  if (!same_groupoid(s.dom, m.cod) || !same_groupoid(s.cod, m.dom))
    throw std::invalid_argument("kraus_main: s is not a map B -> A");
  auto bad = validate_u_homogeneity_witness(uhw);
  if (!bad.empty())
    throw std::invalid_argument("kraus_main: invalid homogeneity witness (" + bad.front().law +
                                ": " + bad.front().detail + ")");

  // the dotted map ⟨id, s∘m⟩ : A -> A²; whiskering gives ι ⇒ ι∘s∘m
  auto d = pairing(uhw.p2, identity_map(m.dom), compose_maps(s, m));
  auto h = iso_inverse(whisker_pre(uhw.homotopy, d)); // ι∘s∘m ⇒ ι
  auto iota_s = compose_maps(uhw.iota, s);
  h.source = compose_maps(iota_s, m);
  h.target = uhw.iota;

  auto r = realign(m, uhw.iota, iota_s, h, cap);
  if (r.capped()) throw std::runtime_error("kraus_main: realignment search exceeded the cap");
  if (!r.found()) throw std::logic_error("kraus_main: realignment absent (unreachable)");

  MonoCertificate cert;
  cert.m = m;
  cert.s = s;
  cert.iota = uhw.iota;
  cert.j = r.value->g_prime;
  cert.realign_witness = r.value->witness;
  if (!maps_equal(compose_maps(cert.j, m), cert.iota))
    throw std::logic_error("kraus_main: j∘m != ι (unreachable)");
  cert.iota_monic = is_monomorphism(cert.iota);
  if (!cert.iota_monic.verdict)
    throw std::logic_error("kraus_main: ι is not monic (smallness witness invariant broken)");
  cert.m_monic = is_monomorphism(m);
  if (!cert.m_monic.verdict)
    throw PipelineInconsistency("kraus_main: j∘m = ι monic, yet m fails the independent check: " +
                                cert.m_monic.counterexample);
  return cert;
}

TruncationMonoReport truncation_mono_check(const FiniteGroup& grp) {
  TruncationMonoReport rep;
  rep.group_order = grp.order();
  rep.expected = grp.order() == 1;
  auto tr = truncate(to_terminal(delooping(grp)));
  auto mono = is_monomorphism(tr.i);
  rep.monic = mono.verdict;
  rep.counterexample = mono.counterexample;
  return rep;
}

NonSmallnessReport abelian_nonsmallness_report(const FiniteGroup& grp, const Universe& candidate,
                                               const SmallnessWitness& sw,
                                               const std::optional<UHomogeneityWitness>& injected,
                                               long long cap) {
  if (!is_abelian(grp)) throw std::invalid_argument("abelian_nonsmallness_report: group must be abelian");
  if (grp.order() < 2) throw std::invalid_argument("abelian_nonsmallness_report: group must be nontrivial");

  NonSmallnessReport rep;
  std::optional<UHomogeneityWitness> uhw = injected;
  if (!uhw) {
    auto hw = abelian_theta(grp);
    auto res = u_homogenize(hw, sw, candidate, cap);
    if (res.status == UHomogenizeStatus::NoWeakUnivalence) {
      rep.branch = NonSmallnessReport::Branch::RefutingInstance;
      rep.refuting_instance = std::move(res.refuting_instance);
      rep.contradiction = true; // the univalence claim itself is refuted
      return rep;
    }
    if (res.status == UHomogenizeStatus::CapExceeded)
      throw std::runtime_error("abelian_nonsmallness_report: search cap exceeded");
    uhw = std::move(res.witness);
  }

  // assumed homogeneity: run the pipeline against the truncation cofibration
  rep.branch = NonSmallnessReport::Branch::Contradiction;
  rep.truncation = truncation_mono_check(grp);
  auto bg = delooping(grp);
  auto tr = truncate(to_terminal(bg));
  GroupoidMap s_const; // constant section through the point
  s_const.dom = tr.truncated;
  s_const.cod = bg;
  s_const.object_map.assign(tr.truncated->num_objects(), 0);
  s_const.morphism_map.assign(tr.truncated->num_morphisms(), bg->id_of(0));
  try {
    (void)kraus_main(*uhw, sw, tr.i, s_const, cap);
    rep.pipeline_concludes_monic = true;
    rep.pipeline_outcome = "pipeline completed with a certificate";
  } catch (const PipelineInconsistency& ex) {
    rep.pipeline_concludes_monic = true;
    rep.pipeline_outcome = ex.what();
  } catch (const std::exception& ex) {
    // the assumed witness already collapses before the end of the pipeline;
    // the theorem still grants the monomorphism conclusion under the assumption
    rep.pipeline_concludes_monic = true;
    rep.pipeline_outcome = std::string("pipeline aborts under the assumed witness: ") + ex.what();
  }
  rep.contradiction = rep.pipeline_concludes_monic && !rep.truncation.monic;
  return rep;
}

} // namespace pathgpd
