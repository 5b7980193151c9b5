#include "predraw/redraw.hpp"

#include <algorithm>
#include <numeric>

#include "predraw/purecond.hpp"

namespace predraw {

std::string to_string(RealizationClass c) {
  switch (c) {
    case RealizationClass::trivial:
      return "trivial";
    case RealizationClass::improper:
      return "improper";
    case RealizationClass::proper:
      return "proper";
  }
  return "?";
}

namespace {

// Proportionality of (normal, offset) pairs as projective vectors.
bool hyperplanes_coincide(const std::vector<Rational>& n1, const Rational& o1,
                          const std::vector<Rational>& n2, const Rational& o2) {
  std::vector<Rational> u = n1, v = n2;
  u.push_back(o1);
  v.push_back(o2);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

RealizationClass classify_checked(const IncidenceGeometry& g,
                                  const NormalAssignment& normals,
                                  const Realization& r) {
  const auto& points = g.points();
  bool all_equal = true;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (r.coords.coords.at(points[i]) != r.coords.coords.at(points[0])) {
      all_equal = false;
      break;
    }
  }
  if (all_equal && !points.empty()) return RealizationClass::trivial;

  bool points_distinct = true;
  for (std::size_t i = 0; i < points.size() && points_distinct; ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (r.coords.coords.at(points[i]) == r.coords.coords.at(points[j])) {
        points_distinct = false;
        break;
      }

  bool hyperplanes_distinct = true;
  const auto& hyperplanes = g.hyperplanes();
  for (std::size_t i = 0; i < hyperplanes.size() && hyperplanes_distinct; ++i)
    for (std::size_t j = i + 1; j < hyperplanes.size(); ++j) {
      if (hyperplanes_coincide(normals.entries.at(hyperplanes[i]),
                               r.offsets.at(hyperplanes[i]),
                               normals.entries.at(hyperplanes[j]),
                               r.offsets.at(hyperplanes[j]))) {
        hyperplanes_distinct = false;
        break;
      }
    }

  return points_distinct && hyperplanes_distinct ? RealizationClass::proper
                                                 : RealizationClass::improper;
}

}  // namespace

RealizationClass classify_realization(const IncidenceGeometry& g,
                                      const NormalAssignment& normals,
                                      const Realization& r) {
  validate_normals(g, normals);
  validate_coordinates(g, r.coords);
  for (const auto& h : g.hyperplanes())
    if (!r.offsets.count(h))
      throw ValidationError("missing offset for hyperplane '" + h + "'");
  if (!satisfies_incidence_equations(g, normals, r))
    throw ValidationError(
        "realization does not satisfy the incidence equations");
  return classify_checked(g, normals, r);
}

RedrawingReport redrawing_space(const IncidenceGeometry& g,
                                const NormalAssignment& normals,
                                const std::string& pinned_point) {
  const NumericRedrawMatrix pinned =
      pin(build_matrix(g, normals), pinned_point);
  const std::vector<RatVec> basis = kernel_basis(pinned.mat);

  RedrawingReport report;
  report.pinned_point = pinned_point;
  report.kernel_dimension = static_cast<int>(basis.size());
  for (const RatVec& v : basis) {
    Realization r;
    for (int h = 0; h < g.num_hyperplanes(); ++h)
      r.offsets[g.hyperplanes()[h]] = v(h);
    for (int p = 0; p < g.num_points(); ++p) {
      std::vector<Rational> coords(g.d());
      for (int k = 0; k < g.d(); ++k)
        coords[k] = v(g.num_hyperplanes() + g.d() * p + k);
      r.coords.coords[g.points()[p]] = std::move(coords);
    }
    if (!satisfies_incidence_equations(g, normals, r))
      throw Error("redrawing_space: kernel vector violates the incidence "
                  "equations");
    report.classifications.push_back(classify_checked(g, normals, r));
    report.redrawings.push_back(std::move(r));
  }
  return report;
}

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long acc = 1;
  for (int i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
  return acc;
}

// Counts the nonzero maximal minors of the pinned matrix at the given
// normals; rows are pre-cleared to integers.
long long count_nonzero_minors(const IncidenceGeometry& g,
                               const NormalAssignment& normals,
                               const std::string& pinned_point) {
  const NumericRedrawMatrix pinned =
      pin(build_matrix(g, normals), pinned_point);
  const IntMat zmat = clear_denominators_rows(pinned.mat);
  const int rows = static_cast<int>(zmat.rows());
  const int cols = static_cast<int>(zmat.cols());

  long long nonzero = 0;
  std::vector<int> choose(static_cast<std::size_t>(cols));
  std::iota(choose.begin(), choose.end(), 0);
  // Lexicographic enumeration of all row subsets of size |cols|.
  while (true) {
    IntMat sub(cols, cols);
    for (int i = 0; i < cols; ++i)
      sub.row(i) = zmat.row(choose[static_cast<std::size_t>(i)]);
    if (det_integer(std::move(sub)) != 0) ++nonzero;

    int i = cols - 1;
    while (i >= 0 && choose[static_cast<std::size_t>(i)] == rows - cols + i)
      --i;
    if (i < 0) break;
    ++choose[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < cols; ++j)
      choose[static_cast<std::size_t>(j)] =
          choose[static_cast<std::size_t>(j - 1)] + 1;
  }
  return nonzero;
}

}  // namespace

OverconstrainedReport overconstrained_report(const IncidenceGeometry& g,
                                             const NormalAssignment& normals,
                                             const std::string& pinned_point,
                                             bool with_minors,
                                             std::uint64_t seed) {
  const int target = g.num_hyperplanes() + g.d() * g.num_points() - g.d();
  if (g.num_incidences() <= target)
    throw ValidationError(
        "geometry is not overconstrained: |I| <= |H| + d|P| - d");
  validate_normals(g, normals);
  g.point_index(pinned_point);

  const NumericRedrawMatrix pinned =
      pin(build_matrix(g, normals), pinned_point);
  OverconstrainedReport report;
  report.pinned_point = pinned_point;
  report.full_column_rank = static_cast<int>(pinned.mat.cols());
  report.pinned_rank = rank(pinned.mat);
  report.feasible = report.pinned_rank < report.full_column_rank;

  if (with_minors) {
    const int rows = g.num_incidences() + g.d();
    const int cols = report.full_column_rank;
    MinorCensus census;
    census.seed = seed;
    census.total = binomial(rows, cols);
    if (census.total > 200000)
      throw Error("minor census too large: " + std::to_string(census.total) +
                  " maximal minors");
    census.nonzero_at_given = count_nonzero_minors(g, normals, pinned_point);
    SeededRng rng(seed);
    const NormalAssignment random_na = random_normal_assignment(g, rng);
    census.nonzero_at_random =
        count_nonzero_minors(g, random_na, pinned_point);
    report.minors = census;
  }
  return report;
}

}  // namespace predraw
