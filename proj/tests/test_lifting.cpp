#include <doctest.h>

#include "pathgpd/classify.hpp"
#include "pathgpd/lifting.hpp"

using namespace pathgpd;

TEST_CASE("lifting against a trivial fibration") {
  auto d2 = discrete_groupoid(2);
  auto i = interval_groupoid();
  auto i2 = indiscrete_groupoid(2);
  auto t = terminal_groupoid();

  LiftingProblem p;
  p.m = GroupoidMap{d2, i, {0, 1}, {i->id_of(0), i->id_of(1)}};
  p.f = to_terminal(i2);
  p.top = GroupoidMap{d2, i2, {0, 1}, {i2->id_of(0), i2->id_of(1)}};
  p.bottom = to_terminal(i);
  REQUIRE(p.validate().empty());
  REQUIRE(is_cofibration(p.m).verdict);
  REQUIRE(is_trivial_fibration(p.f).verdict);

  auto res = solve_lifting(p);
  REQUIRE(res.found());
  const auto& d = *res.value;
  CHECK(validate_map(d).empty());
  CHECK(maps_equal(compose_maps(d, p.m), p.top));
  CHECK(maps_equal(compose_maps(p.f, d), p.bottom));
  (void)t;
}

TEST_CASE("absence is certified") {
  auto bz2 = delooping(cyclic_group(2));
  auto t = terminal_groupoid();
  LiftingProblem p;
  p.m = point_map(bz2, 0); // terminal -> BZ2
  p.f = point_map(bz2, 0);
  p.top = identity_map(t);
  p.bottom = identity_map(bz2);
  REQUIRE(p.validate().empty());
  auto res = solve_lifting(p);
  CHECK(res.status == SearchStatus::Absent); // nothing retracts BZ2 onto a point
}

TEST_CASE("cap exhaustion is reported as such") {
  auto i2 = indiscrete_groupoid(2);
  LiftingProblem p;
  p.m = point_map(i2, 0);
  p.f = to_terminal(i2);
  p.top = point_map(i2, 0);
  p.bottom = to_terminal(i2);
  REQUIRE(p.validate().empty());
  auto res = solve_lifting(p, 1);
  CHECK(res.capped());
}

TEST_CASE("invalid squares are rejected") {
  auto d2 = discrete_groupoid(2);
  auto i = interval_groupoid();
  LiftingProblem p;
  p.m = GroupoidMap{d2, i, {0, 1}, {i->id_of(0), i->id_of(1)}};
  p.f = identity_map(i);
  p.top = GroupoidMap{d2, i, {0, 0}, {i->id_of(0), i->id_of(0)}};
  p.bottom = identity_map(i); // f∘top != bottom∘m
  CHECK_THROWS_AS(solve_lifting(p), std::invalid_argument);
}

TEST_CASE("realignment strictifies a homotopy-commuting triangle") {
  auto t = terminal_groupoid();
  auto i = interval_groupoid();
  auto c = indiscrete_groupoid(2);

  auto m = point_map(i, 0); // cofibration 1 -> I
  GroupoidMap g; // constant at object 0 of C
  g.dom = i;
  g.cod = c;
  g.object_map = {0, 0};
  g.morphism_map.assign(i->num_morphisms(), c->id_of(0));
  GroupoidMap f = point_map(c, 1); // 1 -> C at the other object
  NaturalIso h;
  h.source = compose_maps(g, m);
  h.target = f;
  h.components = {c->hom(0, 1)[0]};
  REQUIRE(validate_natural_iso(h).empty());

  auto res = realign(m, f, g, h);
  REQUIRE(res.found());
  const auto& r = *res.value;
  CHECK(maps_equal(compose_maps(r.g_prime, m), f));      // strict now
  CHECK(validate_natural_iso(r.witness).empty());        // g ⇒ g'
  CHECK(maps_equal(r.witness.source, g));
  CHECK(maps_equal(r.witness.target, r.g_prime));
  (void)t;
}

TEST_CASE("realignment needs a cofibration") {
  auto d2 = discrete_groupoid(2);
  auto t = terminal_groupoid();
  auto m = to_terminal(d2); // not injective on objects
  auto f = identity_map(t);
  auto g = identity_map(t);
  NaturalIso h = identity_iso(compose_maps(g, m));
  h.target = compose_maps(g, m);
  CHECK_THROWS_AS(realign(m, compose_maps(g, m), g, h), std::invalid_argument);
}
