// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Everything here is exact and deterministic; no tolerances, no timing.

#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "pathgpd/axioms.hpp"
#include "pathgpd/corpus.hpp"
#include "pathgpd/kraus.hpp"

using namespace pathgpd;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  std::printf("%s: %s%s\n", ok ? "PASS" : "FAIL", name.c_str(), note.c_str());
  if (!ok) ++failures;
}

bool truncation_monicity() {
  const FiniteGroup groups[] = {cyclic_group(1), cyclic_group(2),  cyclic_group(3),
                                cyclic_group(4), *group_by_name("V4"), symmetric_group(3),
                                dihedral_group(4)};
  for (const auto& g : groups) {
    auto rep = truncation_mono_check(g);
    if (!rep.matches() || rep.monic != (g.order() == 1)) return false;
  }
  return true;
}

bool abelian_homogeneity() {
  const FiniteGroup groups[] = {
      cyclic_group(1),       cyclic_group(2),
      cyclic_group(3),       cyclic_group(4),
      *group_by_name("V4"),  cyclic_group(5),
      cyclic_group(6),       cyclic_group(7),
      cyclic_group(8),       direct_product(cyclic_group(2), cyclic_group(4)),
      direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2)))};
  for (const auto& g : groups) {
    auto hw = abelian_theta(g);
    if (!validate_homogeneity_witness(hw).empty()) return false;
    if (!is_equivalence(hw.e).verdict) return false;
  }
  return true;
}

bool complete_group_instances() {
  auto rep = is_complete_group(symmetric_group(3));
  if (!rep.verdict || rep.automorphism_count != 6) return false;

  auto u = coherent_path_object(delooping_universe(symmetric_group(3)));
  const GroupoidPtr bases[] = {terminal_groupoid(), discrete_groupoid(2), interval_groupoid(),
                               delooping(cyclic_group(2))};
  for (const auto& c : bases) {
    auto insts = enumerate_equivalences_over(c, u);
    if (!insts.found() || insts.value->empty()) return false;
    for (const auto& inst : *insts.value) {
      auto pair = check_univalence_instance(inst);
      if (!pair.found()) return false;
      if (!validate_coherent_pair(inst, *pair.value).empty()) return false;
    }
  }
  return true;
}

bool twist_refutation() {
  auto u = delooping_universe(cyclic_group(2));
  auto bz2 = delooping(cyclic_group(2));
  auto insts = enumerate_equivalences_over(bz2, u);
  if (!insts.found()) return false;
  // locate the twist e(c, x) = (c, c + x): the non-identity equivalence
  const UnivalenceInstance* twist = nullptr;
  for (const auto& inst : *insts.value)
    if (!maps_equal(inst.e, identity_map(inst.e.dom))) twist = &inst;
  if (!twist) return false;
  auto w = weak_univalence_witness(*twist);
  return w.status == SearchStatus::Absent; // exhaustive, not capped
}

bool pipeline_end_to_end() {
  auto d2 = discrete_groupoid(2);
  auto i = interval_groupoid();
  auto u = finset_universe(2);
  auto sw = smallness_witness(d2, u);
  if (!sw) return false;
  auto hw = search_homogeneity(d2);
  if (!hw.found()) return false;
  auto uh = u_homogenize(*hw.value, *sw, u);
  if (uh.status != UHomogenizeStatus::Ok) return false;

  GroupoidMap m{d2, i, {0, 1}, {i->id_of(0), i->id_of(1)}};
  GroupoidMap s;
  s.dom = i;
  s.cod = d2;
  s.object_map = {0, 0};
  s.morphism_map.assign(i->num_morphisms(), d2->id_of(0));

  auto cert = kraus_main(*uh.witness, *sw, m, s);
  return maps_equal(compose_maps(cert.j, cert.m), cert.iota) && cert.m_monic.verdict &&
         is_monomorphism(m).verdict;
}

bool axiom_suite() {
  auto rep = run_axiom_suite(0, 200, 4, 4);
  return rep.pass() && rep.runs == 200;
}

bool oracle_agreement() {
  std::mt19937 rng(5);
  // homotopy search vs cartesian enumeration on the full-size corpus
  for (int run = 0; run < 20; ++run) {
    auto a = random_groupoid(rng, 4, 4);
    auto b = random_groupoid(rng, 4, 4);
    auto f = random_functor(rng, a, b);
    auto g = random_functor(rng, a, b);
    auto naive = oracles::naive_natural_isos(f, g);
    auto engine = all_natural_isos(f, g);
    std::vector<std::vector<int>> ec;
    for (auto& n : engine) ec.push_back(n.components);
    std::sort(naive.begin(), naive.end());
    std::sort(ec.begin(), ec.end());
    if (naive != ec) return false;
    if ((find_natural_iso(f, g).found()) != !naive.empty()) return false;
  }
  // lifting vs naive fillers; naive functor enumeration needs tiny hom-sets
  for (int run = 0; run < 10; ++run) {
    auto c = random_groupoid(rng, 2, 2);
    auto infl = random_inflation(rng, c.g);
    int x0 = 0;
    while (infl.projection.obj(x0) != 0) ++x0;
    LiftingProblem p;
    p.m = point_map(c.g, 0);
    p.f = infl.projection;
    p.top = point_map(infl.total, x0);
    p.bottom = identity_map(c.g);
    auto naive = oracles::naive_fillers(p);
    auto res = solve_lifting(p);
    if (res.capped() || res.found() != !naive.empty()) return false;
  }
  // cofibration vs brute-force left lifting property
  auto d2 = discrete_groupoid(2);
  auto i = interval_groupoid();
  auto i2 = indiscrete_groupoid(2);
  auto cc = random_groupoid(rng, 2, 2);
  auto infl = random_inflation(rng, cc.g);
  std::vector<GroupoidMap> fibs = {to_terminal(i2), path_object(i).p0, infl.projection};
  std::vector<GroupoidMap> maps = {
      point_map(i, 0),
      GroupoidMap{d2, i, {0, 1}, {i->id_of(0), i->id_of(1)}},
      to_terminal(delooping(cyclic_group(2))),
      to_terminal(d2),
      to_terminal(i2),
      infl.inclusion};
  for (const auto& m : maps)
    if (is_cofibration(m).verdict != oracles::naive_llp(m, fibs)) return false;
  return true;
}

bool realignment_sweep() {
  std::mt19937 rng(9);
  for (int run = 0; run < 50; ++run) {
    auto a = random_groupoid(rng, 3, 4);
    auto b = random_groupoid(rng, 3, 4);
    auto infl = random_inflation(rng, a.g);
    auto g0 = random_functor(rng, a, b);
    auto g = compose_maps(g0, infl.projection); // total -> b
    auto m = infl.inclusion;                    // cofibration a -> total
    auto h = random_twist(rng, compose_maps(g, m));
    const auto& f = h.target;

    auto res = realign(m, f, g, h);
    if (!res.found()) return false;
    const auto& r = *res.value;
    if (!maps_equal(compose_maps(r.g_prime, m), f)) return false;
    if (!validate_natural_iso(r.witness).empty()) return false;
    if (!maps_equal(r.witness.source, g) || !maps_equal(r.witness.target, r.g_prime))
      return false;
  }
  return true;
}

} // namespace

int main() {
  criterion("truncation is monic exactly for the trivial group", truncation_monicity);
  criterion("abelian groups of order <= 8 are homogeneous", abelian_homogeneity);
  criterion("all instances over small bases of the S3 universe are coherent", complete_group_instances);
  criterion("the twist over BZ2 has no weak witness in the bare Z2 universe", twist_refutation);
  criterion("the pipeline certifies the discrete(2) -> interval cofibration", pipeline_end_to_end);
  criterion("randomized axiom suite, 200 runs, zero failures", axiom_suite);
  criterion("search engine agrees with naive oracles", oracle_agreement);
  criterion("realignment strictifies 50 seeded quadruples", realignment_sweep);
  return failures == 0 ? 0 : 1;
}
