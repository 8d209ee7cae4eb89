#include "pathgpd/axioms.hpp"

#include <random>

#include "pathgpd/classify.hpp"
#include "pathgpd/constructions.hpp"
#include "pathgpd/corpus.hpp"

namespace pathgpd {

namespace {

struct RunFailure {
  std::string detail;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw RunFailure{what};
}

void one_run(std::mt19937& rng, int max_objects, int max_hom) {
  auto A = random_groupoid(rng, max_objects, max_hom);
  auto B = random_groupoid(rng, max_objects, max_hom);
  require(validate_groupoid(*A.g).empty(), "generated groupoid fails its own laws");
  auto f = random_functor(rng, A, B);
  require(validate_map(f).empty(), "generated functor fails functoriality");

  // path object of B: construction self-verifies r, boundaries and <p0,p1>;
  // the single boundaries must moreover be trivial fibrations
  auto pb = path_object(B.g);
  require(is_trivial_fibration(pb.p0).verdict, "p0 of a path object is not a trivial fibration");
  require(is_trivial_fibration(pb.p1).verdict, "p1 of a path object is not a trivial fibration");

  // trivial fibrations: inflation projection, its section, pullback stability
  auto infl = random_inflation(rng, A.g);
  require(is_trivial_fibration(infl.projection).verdict,
          "inflation projection is not a trivial fibration");
  auto s = section_of_trivial_fibration(infl.projection); // self-verifying
  require(maps_equal(compose_maps(infl.projection, s), identity_map(A.g)),
          "section law fails");
  auto C = random_groupoid(rng, max_objects, max_hom);
  auto g_to_a = random_functor(rng, C, A);
  auto sq = pullback(infl.projection, g_to_a);
  require(is_trivial_fibration(sq.left).verdict,
          "pullback of a trivial fibration is not a trivial fibration");
  require(sq.certified, "pullback certificate missing");

  // 2-out-of-6 on an equivalence chain built from inflations
  auto infl2 = random_inflation(rng, A.g);
  auto r6 = check_two_out_of_six(infl.inclusion, infl.projection, infl2.inclusion);
  require(r6.hypothesis_met, "2-out-of-6 hypothesis fails on an equivalence chain");
  require(r6.all_pass(), "2-out-of-6 conclusion fails");
  // and on a random chain, the conclusions must follow whenever the
  // hypothesis happens to hold
  auto D = random_groupoid(rng, max_objects, max_hom);
  auto c1 = random_functor(rng, A, B);
  auto c2 = random_functor(rng, B, C);
  auto c3 = random_functor(rng, C, D);
  auto r6b = check_two_out_of_six(c1, c2, c3);
  if (r6b.hypothesis_met) require(r6b.all_pass(), "2-out-of-6 fails on a random chain");

  // homotopy: equivalence relation and congruence
  auto h1 = random_twist(rng, f); // f ⇒ g
  require(validate_natural_iso(h1).empty(), "generated homotopy is not natural");
  require(validate_natural_iso(identity_iso(f)).empty(), "reflexivity fails");
  require(validate_natural_iso(iso_inverse(h1)).empty(), "symmetry fails");
  auto h2 = random_twist(rng, h1.target); // g ⇒ k
  auto h12 = vcompose(h2, h1);
  require(validate_natural_iso(h12).empty(), "transitivity fails");
  require(maps_equal(h12.source, f) && maps_equal(h12.target, h2.target),
          "transitivity boundaries are wrong");
  auto Z = random_groupoid(rng, max_objects, max_hom);
  auto e_pre = random_functor(rng, Z, A);
  require(validate_natural_iso(whisker_pre(h1, e_pre)).empty(),
          "precomposition does not preserve homotopy");
  auto W = random_groupoid(rng, max_objects, max_hom);
  auto k_post = random_functor(rng, B, W);
  require(validate_natural_iso(whisker_post(k_post, h1)).empty(),
          "postcomposition does not preserve homotopy");
}

} // namespace

AxiomSuiteReport run_axiom_suite(unsigned seed, int runs, int max_objects, int max_hom) {
  AxiomSuiteReport rep;
  rep.seed = seed;
  rep.runs = runs;
  std::mt19937 rng(seed);
  for (int i = 0; i < runs; ++i) {
    try {
      one_run(rng, max_objects, max_hom);
    } catch (const RunFailure& fail) {
      ++rep.failures;
      rep.failure_details.push_back("run " + std::to_string(i) + ": " + fail.detail);
    } catch (const std::exception& ex) {
      ++rep.failures;
      rep.failure_details.push_back("run " + std::to_string(i) + ": exception: " + ex.what());
    }
  }
  return rep;
}

} // namespace pathgpd
