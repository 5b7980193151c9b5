#include <doctest.h>

#include "fixtures.hpp"
#include "predraw/matroid.hpp"
#include "predraw/rng.hpp"

using namespace predraw;
namespace fix = predraw::testfix;

namespace {

bool violates_counting(const IncidenceGeometry& g,
                       const std::vector<IncidencePair>& subset) {
  const InducedCounts c = induced_counts(g, subset);
  return c.incidences > c.hyperplanes + g.d() * c.points - g.d();
}

}  // namespace

TEST_CASE("the 7-point geometry is a basis") {
  MatroidReport r = is_independent(fix::nf7());
  CHECK(r.independent);
  CHECK(r.basis);
  CHECK(r.method == MatroidMethod::deterministic);
  CHECK(r.generic_rank == 18);
  CHECK_FALSE(r.violating_subset.has_value());

  MatroidOptions randomized;
  randomized.deterministic_threshold = 0;
  MatroidReport rr = is_independent(fix::nf7(), randomized);
  CHECK(rr.method == MatroidMethod::randomized);
  CHECK(rr.independent == r.independent);
  CHECK(rr.basis == r.basis);
}

TEST_CASE("the Fano plane is dependent with the full set violating") {
  IncidenceGeometry g = fix::fano();
  MatroidReport r = is_independent(g);
  CHECK_FALSE(r.independent);
  CHECK_FALSE(r.basis);
  REQUIRE(r.violating_subset.has_value());
  CHECK(r.violating_subset->size() == 21);  // all of I
  CHECK(violates_counting(g, *r.violating_subset));

  MatroidOptions randomized;
  randomized.deterministic_threshold = 0;
  MatroidReport rr = is_independent(g, randomized);
  CHECK_FALSE(rr.independent);
  REQUIRE(rr.violating_subset.has_value());
  CHECK(violates_counting(g, *rr.violating_subset));
}

TEST_CASE("empty incidence set is independent but not a basis") {
  IncidenceGeometry g(2, {"p0"}, {"h0"}, {});
  MatroidReport r = is_independent(g);
  CHECK(r.independent);
  CHECK_FALSE(r.basis);
}

TEST_CASE("triangle counts below the basis line") {
  IncidenceGeometry g = fix::triangle();
  MatroidReport r = is_independent(g);
  CHECK(r.independent);
  CHECK_FALSE(r.basis);  // 6 < 3 + 6 - 2
}

TEST_CASE("basis status across the corpus") {
  CHECK(is_basis(fix::g1()));
  CHECK(is_basis(fix::dg4()));
  CHECK(is_basis(fix::nf7()));
  CHECK(is_basis(fix::pappus_sub()));  // 24 = 8 + 18 - 2
  CHECK_FALSE(is_basis(fix::pappus_full()));
  CHECK_FALSE(is_basis(fix::fano()));
}

TEST_CASE("full Pappus is dependent; the randomized method certifies it") {
  IncidenceGeometry g = fix::pappus_full();
  MatroidReport r = is_independent(g);  // |I| = 27 > 24
  CHECK(r.method == MatroidMethod::randomized);
  CHECK_FALSE(r.independent);
  CHECK(r.generic_rank == 25);  // |H| + 2|P| - 2
  REQUIRE(r.violating_subset.has_value());
  CHECK(violates_counting(g, *r.violating_subset));
}

TEST_CASE("generic corank examples") {
  CHECK(generic_corank(fix::nf7(), 0) == 2);
  CHECK(generic_corank(fix::g1(), 0) == 2);  // 3 columns, rank 1
  CHECK(generic_corank(fix::pappus_sub(), 0) == 2);
  CHECK(generic_corank(fix::pappus_full(), 0) == 2);
}

TEST_CASE("deterministic and randomized methods agree on small fixtures") {
  MatroidOptions randomized;
  randomized.deterministic_threshold = 0;
  for (const auto& g : {fix::g1(), fix::dg4(), fix::triangle(), fix::nf7(),
                        fix::fano(), fix::pappus_sub()}) {
    MatroidReport det = is_independent(g);
    MatroidReport rnd = is_independent(g, randomized);
    CHECK(det.independent == rnd.independent);
    CHECK(det.basis == rnd.basis);
  }
}

TEST_CASE("independence is monotone under incidence deletion") {
  SeededRng rng(31);
  for (const auto& g : {fix::nf7(), fix::pappus_sub()}) {
    REQUIRE(is_independent(g).independent);
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<IncidencePair> kept;
      for (const auto& inc : g.incidences())
        if (rng.uniform(0, 4) > 0) kept.push_back(inc);
      IncidenceGeometry sub(g.d(), g.points(), g.hyperplanes(), kept);
      CHECK(is_independent(sub).independent);
    }
  }
}
