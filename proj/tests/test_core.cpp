#include <doctest.h>

#include "pathgpd/core.hpp"

using namespace pathgpd;

TEST_CASE("standard groupoids satisfy the laws") {
  for (const auto& entry : standard_objects()) {
    CAPTURE(entry.name);
    CHECK(validate_groupoid(*entry.groupoid).empty());
  }
  CHECK(validate_groupoid(*indiscrete_groupoid(3)).empty());
}

TEST_CASE("standard groupoid sizes") {
  CHECK(terminal_groupoid()->num_objects() == 1);
  CHECK(terminal_groupoid()->num_morphisms() == 1);
  CHECK(interval_groupoid()->num_objects() == 2);
  CHECK(interval_groupoid()->num_morphisms() == 4);
  CHECK(discrete_groupoid(3)->num_morphisms() == 3);
  CHECK(indiscrete_groupoid(3)->num_morphisms() == 9);
}

TEST_CASE("corrupting an inverse is caught") {
  auto bz2 = delooping(cyclic_group(2));
  FiniteGroupoid bad = *bz2;
  bad.inverse[1] = 0; // the nonidentity element now claims the identity as inverse
  auto vs = validate_groupoid(bad);
  REQUIRE(!vs.empty());
  bool has_inverse_law = false;
  for (const auto& v : vs) has_inverse_law |= v.law == "inverse-law";
  CHECK(has_inverse_law);
}

TEST_CASE("group catalog") {
  CHECK(symmetric_group(3).order() == 6);
  CHECK(dihedral_group(4).order() == 8);
  CHECK(validate_group(symmetric_group(4)).empty());
  CHECK(validate_group(dihedral_group(4)).empty());
  CHECK(is_abelian(cyclic_group(4)));
  CHECK(!is_abelian(symmetric_group(3)));
  CHECK(centre(symmetric_group(3)).size() == 1);
  CHECK(centre(dihedral_group(4)).size() == 2);
  auto v4 = group_by_name("V4");
  REQUIRE(v4);
  CHECK(v4->order() == 4);
  CHECK(is_abelian(*v4));
}

TEST_CASE("automorphism counts") {
  CHECK(all_automorphisms(symmetric_group(3)).size() == 6);
  CHECK(all_automorphisms(cyclic_group(4)).size() == 2);
  CHECK(all_automorphisms(*group_by_name("V4")).size() == 6);
  CHECK(all_homomorphisms(cyclic_group(2), cyclic_group(4)).size() == 2);
  CHECK(all_homomorphisms(cyclic_group(3), cyclic_group(2)).size() == 1);
}

TEST_CASE("functor composition and identity") {
  auto bz4 = delooping(cyclic_group(4));
  auto bz2 = delooping(cyclic_group(2));
  auto homs = all_homomorphisms(cyclic_group(4), cyclic_group(2));
  REQUIRE(homs.size() == 2);
  auto f = delooping_map(homs[1], bz4, bz2); // the surjection
  CHECK(validate_map(f).empty());
  auto idm = identity_map(bz2);
  CHECK(maps_equal(compose_maps(idm, f), f));
  CHECK(parallel(f, delooping_map(homs[0], bz4, bz2)));
}

TEST_CASE("natural isomorphism calculus on a delooping") {
  auto bs3 = delooping(symmetric_group(3));
  auto idm = identity_map(bs3);
  // conjugation by each element is naturally isomorphic to the identity
  for (int h = 0; h < 6; ++h) {
    NaturalIso n;
    n.source = idm;
    n.target = idm;
    n.components = {h};
    // components must conjugate: target(g) = h g h^-1; build target accordingly
    const auto& grp = symmetric_group(3);
    GroupoidMap conj = idm;
    for (int g = 0; g < 6; ++g)
      conj.morphism_map[g] = grp.mul(grp.mul(h, g), grp.inv(h));
    n.target = conj;
    CHECK(validate_natural_iso(n).empty());
    auto inv = iso_inverse(n);
    CHECK(validate_natural_iso(inv).empty());
    auto round = vcompose(inv, n);
    CHECK(validate_natural_iso(round).empty());
    CHECK(maps_equal(round.source, round.target));
  }
}

TEST_CASE("whiskering preserves naturality") {
  auto bz2 = delooping(cyclic_group(2));
  auto i2 = indiscrete_groupoid(2);
  GroupoidMap f; // constant at object 0 of the indiscrete groupoid
  f.dom = bz2;
  f.cod = i2;
  f.object_map = {0};
  f.morphism_map = {i2->id_of(0), i2->id_of(0)};
  REQUIRE(validate_map(f).empty());
  NaturalIso n;
  n.source = f;
  n.target = f;
  n.target.object_map = {1};
  // component: the unique morphism 0 -> 1
  int comp = i2->hom(0, 1)[0];
  n.components = {comp};
  for (int m = 0; m < 2; ++m)
    n.target.morphism_map[m] = i2->compose(i2->compose(comp, f.mor(m)), i2->inv(comp));
  REQUIRE(validate_natural_iso(n).empty());
  auto pre = whisker_pre(n, identity_map(bz2));
  CHECK(validate_natural_iso(pre).empty());
  auto post = whisker_post(identity_map(i2), n);
  CHECK(validate_natural_iso(post).empty());
}

TEST_CASE("binary products") {
  auto p = product(interval_groupoid(), delooping(cyclic_group(2)));
  CHECK(p.groupoid->num_objects() == 2);
  CHECK(p.groupoid->num_morphisms() == 8);
  CHECK(validate_groupoid(*p.groupoid).empty());
  CHECK(validate_map(p.proj0).empty());
  CHECK(validate_map(p.proj1).empty());
  auto diag = pairing(p, p.proj0, p.proj1);
  CHECK(maps_equal(diag, identity_map(p.groupoid)));
}
