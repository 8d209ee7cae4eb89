#include <doctest.h>

#include <cstdio>

#include "pathgpd/io.hpp"

using namespace pathgpd;

TEST_CASE("groupoid round trip") {
  for (const auto& g : {delooping(symmetric_group(3)), interval_groupoid(),
                        indiscrete_groupoid(3), discrete_groupoid(2)}) {
    auto j = groupoid_to_json(*g);
    CHECK(j["format"] == "groupoid/1");
    auto back = groupoid_from_json(j);
    CHECK(validate_groupoid(*back).empty());
    CHECK(groupoid_to_json(*back) == j); // byte-identical re-serialization
  }
}

TEST_CASE("functor round trip with inline domains") {
  auto bz4 = delooping(cyclic_group(4));
  auto bz2 = delooping(cyclic_group(2));
  auto f = delooping_map(all_homomorphisms(cyclic_group(4), cyclic_group(2))[1], bz4, bz2);
  auto j = map_to_json(f);
  CHECK(j["format"] == "functor/1");
  auto back = map_from_json(j);
  CHECK(validate_map(back).empty());
  CHECK(maps_equal(back, f));
}

TEST_CASE("group round trip") {
  for (const auto& g : {symmetric_group(3), dihedral_group(4), cyclic_group(5)}) {
    auto j = group_to_json(g);
    auto back = group_from_json(j);
    CHECK(validate_group(back).empty());
    CHECK(back.order() == g.order());
    CHECK(back.table == g.table);
  }
}

TEST_CASE("lifting square round trip") {
  auto d2 = discrete_groupoid(2);
  auto i = interval_groupoid();
  LiftingProblem p;
  p.m = GroupoidMap{d2, i, {0, 1}, {i->id_of(0), i->id_of(1)}};
  p.f = to_terminal(indiscrete_groupoid(2));
  p.top = GroupoidMap{d2, indiscrete_groupoid(2), {0, 1},
                      {indiscrete_groupoid(2)->id_of(0), indiscrete_groupoid(2)->id_of(1)}};
  p.bottom = to_terminal(i);
  REQUIRE(p.validate().empty());
  auto j = square_to_json(p);
  CHECK(j["format"] == "square/1");
  auto back = square_from_json(j);
  CHECK(back.validate().empty());
  CHECK(maps_equal(back.m, p.m));
  CHECK(maps_equal(back.f, p.f));
  CHECK(maps_equal(back.top, p.top));
  CHECK(maps_equal(back.bottom, p.bottom));
}

TEST_CASE("homotopy serialization") {
  auto bz2 = delooping(cyclic_group(2));
  auto n = identity_iso(identity_map(bz2));
  auto j = natiso_to_json(n);
  CHECK(j["format"] == "homotopy/1");
  CHECK(j["components"].size() == 1);
}

TEST_CASE("structural errors are caught at parse time") {
  auto good = groupoid_to_json(*delooping(cyclic_group(2)));

  SUBCASE("wrong format tag") {
    auto j = good;
    j["format"] = "groupoid/9";
    CHECK_THROWS_AS(groupoid_from_json(j), ParseError);
  }
  SUBCASE("dangling source id") {
    auto j = good;
    j["morphisms"][1]["src"] = 7;
    CHECK_THROWS_AS(groupoid_from_json(j), ParseError);
  }
  SUBCASE("non-composable compose entry") {
    // morphism 2 of the interval goes 0 -> 1, so [2, 2, x] is ill-typed
    auto j = groupoid_to_json(*interval_groupoid());
    j["compose"].push_back({2, 2, 0});
    CHECK_THROWS_AS(groupoid_from_json(j), ParseError);
  }
  SUBCASE("missing composite") {
    auto j = good;
    j["compose"].erase(j["compose"].begin());
    CHECK_THROWS_AS(groupoid_from_json(j), ParseError);
  }
  SUBCASE("missing field") {
    auto j = good;
    j.erase("inverse");
    CHECK_THROWS_AS(groupoid_from_json(j), ParseError);
  }
}

TEST_CASE("functor files can violate the laws without violating the format") {
  auto bz4 = delooping(cyclic_group(4));
  GroupoidMap f = identity_map(bz4);
  f.morphism_map[1] = 2; // breaks composition preservation only
  auto j = map_to_json(f);
  auto back = map_from_json(j); // parses fine
  CHECK(!validate_map(back).empty()); // but fails validation
}

TEST_CASE("file round trip through disk") {
  auto j = groupoid_to_json(*interval_groupoid());
  const std::string path = "io_roundtrip_tmp.json";
  write_json_file(path, j);
  auto back = load_json_file(path);
  CHECK(back == j);
  std::remove(path.c_str());
}
