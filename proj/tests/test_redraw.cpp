#include <doctest.h>

#include "fixtures.hpp"
#include "predraw/purecond.hpp"
#include "predraw/redraw.hpp"

using namespace predraw;
namespace fix = predraw::testfix;

TEST_CASE("medial normals admit exactly the scaled centroid redrawing") {
  IncidenceGeometry g = fix::nf7();
  const NormalAssignment normals = fix::medial_normals();
  RedrawingReport report = redrawing_space(g, normals, "p6");
  REQUIRE(report.kernel_dimension == 1);
  REQUIRE(report.redrawings.size() == 1);
  CHECK(report.classifications[0] == RealizationClass::proper);

  // Normalize the kernel vector so x(p2) = (2, 0), then compare with the
  // exact medial realization (p6 already sits at the origin).
  const Realization& v = report.redrawings[0];
  const Rational vx = v.coords.coords.at("p2")[0];
  REQUIRE(vx != 0);
  const Rational lambda = Rational(2) / vx;
  CHECK(v.coords.coords.at("p2")[1] * lambda == 0);

  auto [na, reference] = normals_from_points(g, fix::medial_coords());
  REQUIRE(na.entries == normals.entries);
  for (const auto& p : g.points()) {
    for (int k = 0; k < 2; ++k)
      CHECK(v.coords.coords.at(p)[k] * lambda ==
            reference.coords.coords.at(p)[k]);
  }
  for (const auto& h : g.hyperplanes())
    CHECK(v.offsets.at(h) * lambda == reference.offsets.at(h));
}

TEST_CASE("generic normals leave only the pinned-out translations") {
  RedrawingReport report =
      redrawing_space(fix::nf7(), fix::nf7_generic_normals(), "p0");
  CHECK(report.kernel_dimension == 0);
  CHECK(report.redrawings.empty());
}

TEST_CASE("parallel shared hyperplanes force an improper redrawing") {
  IncidenceGeometry g = fix::dg4();
  NormalAssignment na;
  na.entries["h0"] = {Rational(1), Rational(1)};
  na.entries["h3"] = {Rational(2), Rational(2)};
  na.entries["h1"] = {Rational(1), Rational(0)};
  na.entries["h2"] = {Rational(0), Rational(1)};
  RedrawingReport report = redrawing_space(g, na, "p0");
  REQUIRE(report.kernel_dimension == 1);
  CHECK(report.classifications[0] == RealizationClass::improper);
}

TEST_CASE("classify_realization on the canonical cases") {
  IncidenceGeometry g = fix::nf7();
  const NormalAssignment normals = fix::medial_normals();

  Realization origin;
  for (const auto& p : g.points())
    origin.coords.coords[p] = {Rational(0), Rational(0)};
  for (const auto& h : g.hyperplanes()) origin.offsets[h] = 0;
  CHECK(classify_realization(g, normals, origin) ==
        RealizationClass::trivial);

  auto [na, medial] = normals_from_points(g, fix::medial_coords());
  CHECK(classify_realization(g, normals, medial) == RealizationClass::proper);

  Realization broken = medial;
  broken.offsets["h0"] += 1;
  CHECK_THROWS_AS(classify_realization(g, normals, broken), ValidationError);
}

TEST_CASE("the coincident Pappus-sub realization is improper") {
  IncidenceGeometry g = fix::pappus_sub();
  auto [na, degenerate] =
      normals_from_points(g, fix::pappus_sub_degenerate_coords());
  // h1 and h3 coincide here, so the block bracket [h1 h3] vanishes.
  PureCondition pc = pure_condition(g);
  CHECK(evaluate(pc, na) == 0);
  CHECK(classify_realization(g, na, degenerate) ==
        RealizationClass::improper);
}

TEST_CASE("a vanishing diagonal bracket yields only improper redrawings") {
  // Normals with [h1 h5] = 0 but otherwise generic: the shared point p4
  // forces h1 and h5 to coincide in any nontrivial redrawing.
  IncidenceGeometry g = fix::nf7();
  NormalAssignment na;
  na.entries["h0"] = {Rational(1), Rational(1)};
  na.entries["h1"] = {Rational(1), Rational(2)};
  na.entries["h2"] = {Rational(1), Rational(3)};
  na.entries["h3"] = {Rational(1), Rational(4)};
  na.entries["h4"] = {Rational(1), Rational(5)};
  na.entries["h5"] = {Rational(2), Rational(4)};  // parallel to h1
  PureCondition pc = pure_condition(g);
  REQUIRE(evaluate(pc, na) == 0);
  RedrawingReport report = redrawing_space(g, na, "p0");
  REQUIRE(report.kernel_dimension >= 1);
  for (const auto& cls : report.classifications)
    CHECK(cls == RealizationClass::improper);
}

TEST_CASE("translating an unpinned redrawing stays in the kernel") {
  IncidenceGeometry g = fix::nf7();
  const NormalAssignment normals = fix::medial_normals();
  NumericRedrawMatrix unpinned = build_matrix(g, normals);
  auto basis = kernel_basis(unpinned.mat);
  REQUIRE(!basis.empty());
  for (int k = 0; k < 2; ++k) {
    RatVec t = RatVec::Zero(unpinned.mat.cols());
    for (int h = 0; h < g.num_hyperplanes(); ++h)
      t(h) = -normals.entries.at(g.hyperplanes()[h])[k];
    for (int p = 0; p < g.num_points(); ++p)
      t(g.num_hyperplanes() + 2 * p + k) = 1;
    CHECK((unpinned.mat * (basis[0] + t)).isZero(0));
  }
}

TEST_CASE("overconstrained analysis of the full Pappus configuration") {
  IncidenceGeometry g = fix::pappus_full();

  SeededRng rng(99);
  NormalAssignment random_na = random_normal_assignment(g, rng);
  OverconstrainedReport infeasible =
      overconstrained_report(g, random_na, "p0", false, 99);
  CHECK(infeasible.full_column_rank == 27);
  CHECK(infeasible.pinned_rank == 27);
  CHECK_FALSE(infeasible.feasible);

  OverconstrainedReport feasible = overconstrained_report(
      g, fix::pappus_feasible_normals(), "p0", false, 0);
  CHECK(feasible.pinned_rank <= 26);
  CHECK(feasible.feasible);
}

TEST_CASE("minor census matches the expected count") {
  IncidenceGeometry g = fix::pappus_full();
  SeededRng rng(5);
  NormalAssignment na = random_normal_assignment(g, rng);
  OverconstrainedReport report =
      overconstrained_report(g, na, "p0", true, 12345);
  REQUIRE(report.minors.has_value());
  CHECK(report.minors->total == 406);
  CHECK(report.minors->nonzero_at_given == 324);
  CHECK(report.minors->nonzero_at_random == 324);

  // All maximal minors vanish at feasible normals.
  OverconstrainedReport at_feasible = overconstrained_report(
      g, fix::pappus_feasible_normals(), "p0", true, 1);
  REQUIRE(at_feasible.minors.has_value());
  CHECK(at_feasible.minors->nonzero_at_given == 0);
}

TEST_CASE("overconstrained_report rejects basis geometries") {
  CHECK_THROWS_AS(overconstrained_report(fix::nf7(), fix::medial_normals(),
                                         "p0", false, 0),
                  ValidationError);
}
