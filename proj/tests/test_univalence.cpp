#include <doctest.h>

#include "pathgpd/classify.hpp"
#include "pathgpd/univalence.hpp"

using namespace pathgpd;

TEST_CASE("smallness of a two-element discrete groupoid in the finite-set universe") {
  auto d2 = discrete_groupoid(2);
  auto u = finset_universe(2);
  auto sw = smallness_witness(d2, u);
  REQUIRE(sw);
  CHECK(sw->square.certified);
  CHECK(sw->square.apex->num_objects() == 2); // the apex is d2 itself
  REQUIRE(sw->iota);
  // total objects: ({0},0) then ({0,1},0), ({0,1},1)
  CHECK(sw->iota->obj(0) == 1);
  CHECK(sw->iota->obj(1) == 2);
  CHECK(is_monomorphism(*sw->iota).verdict);
}

TEST_CASE("smallness of a delooping in its own universe") {
  auto grp = symmetric_group(3);
  auto u = delooping_universe(grp);
  auto sw = smallness_witness(delooping(grp), u);
  REQUIRE(sw);
  REQUIRE(sw->iota);
  CHECK(sw->iota->morphism_map.size() == 6);
  CHECK(is_monomorphism(*sw->iota).verdict);
}

TEST_CASE("fibres of the finite-set universe are discrete") {
  // no delooping of a nontrivial group occurs as a fibre
  auto bz2 = delooping(cyclic_group(2));
  CHECK(!smallness_witness(bz2, finset_universe(3)));
}

TEST_CASE("complete groups") {
  auto s3 = is_complete_group(symmetric_group(3));
  CHECK(s3.verdict);
  CHECK(s3.automorphism_count == 6);
  CHECK(s3.inner_count == 6);
  CHECK(s3.centre.size() == 1);

  CHECK(!is_complete_group(cyclic_group(3)).verdict);
  CHECK(!is_complete_group(*group_by_name("V4")).verdict);
  CHECK(!is_complete_group(dihedral_group(4)).verdict);
  CHECK(is_complete_group(cyclic_group(1)).verdict);

  // |Inn| = |G| / |Z(G)|
  for (const auto& g : {symmetric_group(3), dihedral_group(4), cyclic_group(4)}) {
    auto rep = is_complete_group(g);
    CHECK(rep.inner_count * static_cast<int>(rep.centre.size()) == g.order());
  }
}

namespace {

// conjugation of C × BG over C, componentwise by h[component of the object]
GroupoidMap conjugation_over(const ProductData& prod, const FiniteGroup& grp,
                             const std::vector<int>& h) {
  GroupoidMap theta;
  theta.dom = prod.groupoid;
  theta.cod = prod.groupoid;
  theta.object_map.resize(prod.groupoid->num_objects());
  for (int o = 0; o < prod.groupoid->num_objects(); ++o) theta.object_map[o] = o;
  theta.morphism_map.resize(prod.groupoid->num_morphisms());
  for (int m = 0; m < prod.groupoid->num_morphisms(); ++m) {
    auto [mc, g] = prod.split_mor(m);
    int hc = h[prod.split_obj(prod.groupoid->src(m)).first];
    theta.morphism_map[m] = prod.pair_mor(mc, grp.mul(grp.mul(grp.inv(hc), g), hc));
  }
  return theta;
}

} // namespace

TEST_CASE("complete-group equivalences over a base are conjugations") {
  const auto& grp = symmetric_group(3);
  auto bs3 = delooping(grp);

  SUBCASE("terminal base") {
    auto prod = product(terminal_groupoid(), bs3);
    for (int h = 0; h < grp.order(); ++h) {
      auto theta = conjugation_over(prod, grp, {h});
      REQUIRE(validate_map(theta).empty());
      auto n = complete_group_univalence(grp, terminal_groupoid(), theta);
      CHECK(validate_natural_iso(n).empty());
      REQUIRE(n.components.size() == 1);
      CHECK(n.components[0] == h); // unique because the centre is trivial
    }
  }

  SUBCASE("two-component base, independent conjugators") {
    auto d2 = discrete_groupoid(2);
    auto prod = product(d2, bs3);
    auto theta = conjugation_over(prod, grp, {2, 4});
    REQUIRE(validate_map(theta).empty());
    auto n = complete_group_univalence(grp, d2, theta);
    CHECK(validate_natural_iso(n).empty());
    REQUIRE(n.components.size() == 2);
    CHECK(n.components[0] == 2);
    CHECK(n.components[1] == 4);
  }
}

TEST_CASE("complete-group construction rejects incomplete groups") {
  const auto& z3 = cyclic_group(3);
  auto prod = product(terminal_groupoid(), delooping(z3));
  auto theta = identity_map(prod.groupoid);
  CHECK_THROWS_AS(complete_group_univalence(z3, terminal_groupoid(), theta),
                  std::invalid_argument);
}

TEST_CASE("instances over a point of a complete-group universe all check out") {
  auto u = coherent_path_object(delooping_universe(symmetric_group(3)));
  auto res = enumerate_equivalences_over(terminal_groupoid(), u);
  REQUIRE(res.found());
  CHECK(res.value->size() == 6); // one per automorphism of S3
  for (const auto& inst : *res.value) {
    REQUIRE(validate_instance(inst).empty());
    auto pair = check_univalence_instance(inst);
    REQUIRE(pair.found());
    CHECK(validate_coherent_pair(inst, *pair.value).empty());
    // a coherent pair always restricts to a weak witness
    CHECK(weak_univalence_witness(inst).found());
  }
}

TEST_CASE("instances over a point of the finite-set universe") {
  auto u = coherent_path_object(finset_universe(2));
  auto res = enumerate_equivalences_over(terminal_groupoid(), u);
  REQUIRE(res.found());
  // fibres 0, 1, 2: one self-equivalence each for 0 and 1, two for 2
  CHECK(res.value->size() == 4);
  for (const auto& inst : *res.value) {
    auto pair = check_univalence_instance(inst);
    CHECK(pair.found());
  }
}

TEST_CASE("the empty fibre counts as an instance") {
  auto u = finset_universe(1);
  auto res = enumerate_equivalences_over(terminal_groupoid(), u);
  REQUIRE(res.found());
  CHECK(res.value->size() == 2); // empty-to-empty and point-to-point
}

TEST_CASE("the bare delooping universe is not weakly univalent") {
  auto u = coherent_path_object(delooping_universe(cyclic_group(2)));
  auto bz2 = delooping(cyclic_group(2));
  auto res = enumerate_equivalences_over(bz2, u);
  REQUIRE(res.found());
  REQUIRE(res.value->size() == 2); // identity and the twist over BZ2
  int weak_ok = 0, coherent_ok = 0;
  for (const auto& inst : *res.value) {
    if (weak_univalence_witness(inst).found()) ++weak_ok;
    if (check_univalence_instance(inst).found()) ++coherent_ok;
  }
  CHECK(weak_ok == 1);     // only the identity instance
  CHECK(coherent_ok == 1);
}

TEST_CASE("coherent pairs pass revalidation and reject tampering") {
  auto u = coherent_path_object(delooping_universe(symmetric_group(3)));
  auto res = enumerate_equivalences_over(terminal_groupoid(), u);
  REQUIRE(res.found());
  const auto& inst = res.value->front();
  auto pair = check_univalence_instance(inst);
  REQUIRE(pair.found());
  auto broken = *pair.value;
  REQUIRE(!broken.total_homotopy.morphism_map.empty());
  broken.total_homotopy.morphism_map[0] =
      (broken.total_homotopy.morphism_map[0] + 1) %
      broken.total_homotopy.cod->num_morphisms();
  CHECK(!validate_coherent_pair(inst, broken).empty());
}

TEST_CASE("bounded univalence sweep over small finite-set universes") {
  // every instance over a small base of finset(n) admits a coherent pair
  std::vector<GroupoidPtr> bases = {terminal_groupoid(), discrete_groupoid(2),
                                    interval_groupoid()};
  for (int n = 1; n <= 2; ++n) {
    auto u = coherent_path_object(finset_universe(n));
    for (const auto& c : bases) {
      auto res = enumerate_equivalences_over(c, u);
      REQUIRE(res.found());
      for (const auto& inst : *res.value) {
        CAPTURE(n);
        CHECK(check_univalence_instance(inst).found());
      }
    }
  }
}
