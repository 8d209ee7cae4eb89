#include "pathgpd/classify.hpp"

#include <stdexcept>

namespace pathgpd {

ClassificationCertificate is_isofibration(const GroupoidMap& f) {
  ClassificationCertificate cert;
  cert.property = "isofibration";
  const auto& d = *f.dom;
  const auto& c = *f.cod;
  for (int x = 0; x < d.num_objects(); ++x) {
    for (int m : c.morphisms_from(f.obj(x))) {
      int lift = -1;
      for (int u : d.morphisms_from(x))
        if (f.mor(u) == m) {
          lift = u;
          break;
        }
      if (lift < 0) {
        cert.verdict = false;
        cert.offending = {x, m};
        cert.counterexample = "no lift of " + c.morphism_name(m) + " at object " + d.object_name(x);
        return cert;
      }
      cert.lifts.push_back({x, m, lift});
    }
  }
  cert.verdict = true;
  return cert;
}

ClassificationCertificate is_equivalence(const GroupoidMap& f) {
  ClassificationCertificate cert;
  cert.property = "weak-equivalence";
  const auto& d = *f.dom;
  const auto& c = *f.cod;
  // faithful
  for (int a = 0; a < d.num_objects(); ++a)
    for (int b = 0; b < d.num_objects(); ++b) {
      const auto& hom = d.hom(a, b);
      for (size_t i = 0; i < hom.size(); ++i)
        for (size_t j = i + 1; j < hom.size(); ++j)
          if (f.mor(hom[i]) == f.mor(hom[j])) {
            cert.verdict = false;
            cert.offending = {hom[i], hom[j]};
            cert.counterexample = "not faithful: " + d.morphism_name(hom[i]) + " and " +
                                  d.morphism_name(hom[j]) + " have the same image";
            return cert;
          }
    }
  // full
  for (int a = 0; a < d.num_objects(); ++a)
    for (int b = 0; b < d.num_objects(); ++b)
      for (int m : c.hom(f.obj(a), f.obj(b))) {
        bool hit = false;
        for (int u : d.hom(a, b))
          if (f.mor(u) == m) {
            hit = true;
            break;
          }
        if (!hit) {
          cert.verdict = false;
          cert.offending = {a, b, m};
          cert.counterexample = "not full: " + c.morphism_name(m) + " has no preimage in hom(" +
                                d.object_name(a) + ", " + d.object_name(b) + ")";
          return cert;
        }
      }
  // essentially surjective
  for (int y = 0; y < c.num_objects(); ++y) {
    bool hit = false;
    for (int a = 0; a < d.num_objects() && !hit; ++a)
      for (int iso : c.hom(f.obj(a), y)) {
        cert.ess_surj_witness.emplace_back(a, iso);
        hit = true;
        break;
      }
    if (!hit) {
      cert.verdict = false;
      cert.offending = {y};
      cert.counterexample = "not essentially surjective: object " + c.object_name(y) + " is missed";
      return cert;
    }
  }
  cert.verdict = true;
  return cert;
}

ClassificationCertificate is_trivial_fibration(const GroupoidMap& f) {
  ClassificationCertificate cert;
  cert.property = "trivial-fibration";
  auto fib = is_isofibration(f);
  if (!fib.verdict) {
    cert.verdict = false;
    cert.offending = fib.offending;
    cert.counterexample = "not an isofibration: " + fib.counterexample;
    return cert;
  }
  auto we = is_equivalence(f);
  if (!we.verdict) {
    cert.verdict = false;
    cert.offending = we.offending;
    cert.counterexample = "not a weak equivalence: " + we.counterexample;
    return cert;
  }
  cert.verdict = true;
  cert.lifts = std::move(fib.lifts);
  cert.ess_surj_witness = std::move(we.ess_surj_witness);
  return cert;
}

ClassificationCertificate is_cofibration(const GroupoidMap& f) {
  ClassificationCertificate cert;
  cert.property = "cofibration";
  const auto& d = *f.dom;
  for (int a = 0; a < d.num_objects(); ++a)
    for (int b = a + 1; b < d.num_objects(); ++b)
      if (f.obj(a) == f.obj(b)) {
        cert.verdict = false;
        cert.offending = {a, b};
        cert.counterexample = "not injective on objects: " + d.object_name(a) + " and " +
                              d.object_name(b) + " collapse";
        return cert;
      }
  cert.verdict = true;
  return cert;
}

ClassificationCertificate is_hproposition(const GroupoidMap& f) {
  ClassificationCertificate cert;
  cert.property = "hproposition";
  auto fib = is_isofibration(f);
  if (!fib.verdict) {
    cert.precondition_failed = true;
    cert.precondition_detail = "hProposition requires an isofibration: " + fib.counterexample;
    return cert;
  }
  const auto& d = *f.dom;
  // full and faithful
  for (int a = 0; a < d.num_objects(); ++a)
    for (int b = 0; b < d.num_objects(); ++b) {
      const auto& hom = d.hom(a, b);
      for (size_t i = 0; i < hom.size(); ++i)
        for (size_t j = i + 1; j < hom.size(); ++j)
          if (f.mor(hom[i]) == f.mor(hom[j])) {
            cert.verdict = false;
            cert.offending = {hom[i], hom[j]};
            cert.counterexample = "not faithful at " + d.morphism_name(hom[i]) + ", " +
                                  d.morphism_name(hom[j]);
            return cert;
          }
      for (int m : f.cod->hom(f.obj(a), f.obj(b))) {
        bool hit = false;
        for (int u : hom)
          if (f.mor(u) == m) {
            hit = true;
            break;
          }
        if (!hit) {
          cert.verdict = false;
          cert.offending = {a, b, m};
          cert.counterexample = "not full: " + f.cod->morphism_name(m) + " has no preimage";
          return cert;
        }
      }
    }
  cert.verdict = true;
  return cert;
}

ClassificationCertificate is_monomorphism(const GroupoidMap& f) {
  ClassificationCertificate cert;
  cert.property = "monomorphism";
  const auto& d = *f.dom;
  for (int a = 0; a < d.num_objects(); ++a)
    for (int b = a + 1; b < d.num_objects(); ++b)
      if (f.obj(a) == f.obj(b)) {
        cert.verdict = false;
        cert.offending = {a, b};
        cert.counterexample = "objects " + d.object_name(a) + " and " + d.object_name(b) + " collapse";
        return cert;
      }
  for (int m = 0; m < d.num_morphisms(); ++m)
    for (int m2 = m + 1; m2 < d.num_morphisms(); ++m2)
      if (f.mor(m) == f.mor(m2)) {
        cert.verdict = false;
        cert.offending = {m, m2};
        cert.counterexample =
            "morphisms " + d.morphism_name(m) + " and " + d.morphism_name(m2) + " collapse";
        return cert;
      }
  cert.verdict = true;
  return cert;
}

ClassificationCertificate classify(const GroupoidMap& f, const std::string& cls) {
  if (cls == "fib") return is_isofibration(f);
  if (cls == "we") return is_equivalence(f);
  if (cls == "trivfib") return is_trivial_fibration(f);
  if (cls == "cof") return is_cofibration(f);
  if (cls == "hprop") return is_hproposition(f);
  if (cls == "mono") return is_monomorphism(f);
  throw std::invalid_argument("unknown class: " + cls);
}

bool recheck_certificate(const GroupoidMap& f, const ClassificationCertificate& cert) {
  if (!cert.verdict) return false;
  for (const auto& w : cert.lifts) {
    if (f.dom->src(w.lift) != w.object) return false;
    if (f.mor(w.lift) != w.codomain_morphism) return false;
  }
  for (size_t y = 0; y < cert.ess_surj_witness.size(); ++y) {
    auto [a, iso] = cert.ess_surj_witness[y];
    if (f.cod->src(iso) != f.obj(a)) return false;
    if (f.cod->dst(iso) != static_cast<int>(y)) return false;
  }
  return true;
}

GroupoidMap section_of_trivial_fibration(const GroupoidMap& f) {
  auto cert = is_trivial_fibration(f);
  if (!cert.verdict)
    throw std::invalid_argument("section_of_trivial_fibration: not a trivial fibration (" +
                                cert.counterexample + ")");
  const auto& d = *f.dom;
  const auto& c = *f.cod;
  GroupoidMap s;
  s.dom = f.cod;
  s.cod = f.dom;
  s.object_map.assign(c.num_objects(), -1);
  s.morphism_map.assign(c.num_morphisms(), -1);
  // strict preimage of each object: ess. surjectivity + iso lifting
  for (int y = 0; y < c.num_objects(); ++y) {
    int pick = -1;
    for (int a = 0; a < d.num_objects() && pick < 0; ++a)
      if (f.obj(a) == y) pick = a;
    if (pick < 0) {
      // lift an iso f(a) -> y to land strictly over y
      auto [a, iso] = cert.ess_surj_witness[y];
      for (int u : d.morphisms_from(a))
        if (f.mor(u) == iso) {
          pick = d.dst(u);
          break;
        }
    }
    if (pick < 0) throw std::logic_error("section construction failed (unreachable)");
    s.object_map[y] = pick;
  }
  // unique preimage of each morphism between the chosen objects (fullness +
  // faithfulness)
  for (int v = 0; v < c.num_morphisms(); ++v) {
    int a = s.object_map[c.src(v)], b = s.object_map[c.dst(v)];
    for (int u : d.hom(a, b))
      if (f.mor(u) == v) {
        s.morphism_map[v] = u;
        break;
      }
    if (s.morphism_map[v] < 0) throw std::logic_error("section construction failed (unreachable)");
  }
  if (!validate_map(s).empty()) throw std::logic_error("section is not a functor (unreachable)");
  if (!maps_equal(compose_maps(f, s), identity_map(f.cod)))
    throw std::logic_error("section law fails (unreachable)");
  return s;
}

TwoOutOfSixReport check_two_out_of_six(const GroupoidMap& f, const GroupoidMap& g,
                                       const GroupoidMap& h) {
  if (!same_groupoid(f.cod, g.dom) || !same_groupoid(g.cod, h.dom))
    throw std::invalid_argument("check_two_out_of_six: chain not composable");
  TwoOutOfSixReport r;
  auto gf = compose_maps(g, f);
  auto hg = compose_maps(h, g);
  r.hypothesis_met = is_equivalence(gf).verdict && is_equivalence(hg).verdict;
  if (!r.hypothesis_met) return r;
  r.f_we = is_equivalence(f).verdict;
  r.g_we = is_equivalence(g).verdict;
  r.h_we = is_equivalence(h).verdict;
  r.hgf_we = is_equivalence(compose_maps(h, gf)).verdict;
  return r;
}

} // namespace pathgpd
