#include "predraw/purecond.hpp"

#include <algorithm>

namespace predraw {

namespace {

template <typename Scalar>
RedrawMatrixT<Scalar> build_skeleton(const IncidenceGeometry& g) {
  RedrawMatrixT<Scalar> m;
  m.d = g.d();
  m.points = g.points();
  m.hyperplanes = g.hyperplanes();
  const Index rows = g.num_incidences();
  const Index cols = g.num_hyperplanes() + g.d() * g.num_points();
  m.mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m.mat(r, c) = Scalar(0);
  for (const auto& [p, h] : g.incidences())
    m.row_labels.push_back("(" + p + "," + h + ")");
  for (const auto& h : g.hyperplanes()) m.col_labels.push_back("y(" + h + ")");
  for (const auto& p : g.points())
    for (int k = 1; k <= g.d(); ++k)
      m.col_labels.push_back("x(" + p + "," + std::to_string(k) + ")");
  return m;
}

}  // namespace

NumericRedrawMatrix build_matrix(const IncidenceGeometry& g,
                                 const NormalAssignment& normals) {
  validate_normals(g, normals);
  NumericRedrawMatrix m = build_skeleton<Rational>(g);
  Index row = 0;
  for (const auto& [pi, hi] : g.incidence_indices()) {
    m.mat(row, hi) = 1;
    const auto& n = normals.entries.at(g.hyperplanes()[hi]);
    for (int k = 0; k < g.d(); ++k)
      m.mat(row, g.num_hyperplanes() + g.d() * pi + k) = n[k];
    ++row;
  }
  return m;
}

SymbolicRedrawMatrix build_symbolic_matrix(const IncidenceGeometry& g) {
  SymbolicRedrawMatrix m = build_skeleton<Polynomial>(g);
  Index row = 0;
  for (const auto& [pi, hi] : g.incidence_indices()) {
    m.mat(row, hi) = Polynomial(1);
    for (int k = 0; k < g.d(); ++k)
      m.mat(row, g.num_hyperplanes() + g.d() * pi + k) =
          Polynomial::variable(normal_variable_index(hi, k, g.d()));
    ++row;
  }
  return m;
}

template <typename Scalar>
RedrawMatrixT<Scalar> pin(const RedrawMatrixT<Scalar>& m,
                          const std::string& point) {
  if (m.pinned_point)
    throw ValidationError("matrix is already pinned at '" + *m.pinned_point +
                          "'");
  const auto it = std::find(m.points.begin(), m.points.end(), point);
  if (it == m.points.end())
    throw ValidationError("unknown pinned point '" + point + "'");
  const int pi = static_cast<int>(it - m.points.begin());

  RedrawMatrixT<Scalar> out = m;
  const Index old_rows = m.mat.rows();
  out.mat.conservativeResize(old_rows + m.d, Eigen::NoChange);
  for (int k = 0; k < m.d; ++k) {
    const Index r = old_rows + k;
    for (Index c = 0; c < out.mat.cols(); ++c) out.mat(r, c) = Scalar(0);
    out.mat(r, static_cast<Index>(m.hyperplanes.size()) + m.d * pi + k) =
        Scalar(1);
    out.row_labels.push_back("pin(" + point + "," + std::to_string(k + 1) +
                             ")");
  }
  out.pinned_point = point;
  return out;
}

template RedrawMatrixT<Rational> pin(const RedrawMatrixT<Rational>&,
                                     const std::string&);
template RedrawMatrixT<Polynomial> pin(const RedrawMatrixT<Polynomial>&,
                                       const std::string&);

std::string PureCondition::to_text() const {
  return polynomial.to_string(normal_variable_namer(hyperplanes, d));
}

namespace {

MatroidReport require_basis(const IncidenceGeometry& g,
                            const MatroidOptions& opts) {
  MatroidReport report = is_independent(g, opts);
  if (!report.basis)
    throw NotBasisError(
        "geometry is not a basis of the d-plane matroid; the pinned matrix "
        "is not square",
        report);
  return report;
}

Polynomial pinned_symbolic_det(const IncidenceGeometry& g,
                               const std::string& point) {
  SymbolicRedrawMatrix m = pin(build_symbolic_matrix(g), point);
  return det_polynomial(m.mat);
}

}  // namespace

PureCondition pure_condition(const IncidenceGeometry& g,
                             const std::optional<std::string>& pin_point,
                             const MatroidOptions& opts) {
  require_basis(g, opts);
  const std::string point = pin_point.value_or(g.points().front());
  g.point_index(point);  // throws on unknown
  Polynomial det = pinned_symbolic_det(g, point);
  if (det.is_zero())
    throw Error("pure condition: pinned determinant vanished for a basis");
  auto [canonical, factor] = poly_canonicalize(det);

  PureCondition pc;
  pc.polynomial = std::move(canonical);
  pc.d = g.d();
  pc.hyperplanes = g.hyperplanes();
  pc.fingerprint = geometry_fingerprint(g);

  const int expected_degree = g.d() * (g.num_points() - 1);
  if (pc.polynomial.total_degree() != expected_degree &&
      !(pc.polynomial.is_constant() && expected_degree == 0))
    throw Error("pure condition: degree differs from d(|P|-1)");
  // One entry per point column: every monomial carries degree |P|-1 in
  // each coordinate row. (Individual variables may still appear squared
  // when a hyperplane passes through several points.)
  for (const auto& [mono, coeff] : pc.polynomial.terms()) {
    std::vector<int> row_degree(static_cast<std::size_t>(g.d()), 0);
    for (const auto& [var, exp] : mono.factors())
      row_degree[static_cast<std::size_t>(var % g.d())] += exp;
    for (int k = 0; k < g.d(); ++k)
      if (row_degree[static_cast<std::size_t>(k)] != g.num_points() - 1)
        throw Error("pure condition: monomial row degrees differ from |P|-1");
  }
  return pc;
}

Rational evaluate(const PureCondition& pc, const NormalAssignment& normals) {
  std::vector<Rational> values(pc.hyperplanes.size() *
                               static_cast<std::size_t>(pc.d));
  for (std::size_t h = 0; h < pc.hyperplanes.size(); ++h) {
    auto it = normals.entries.find(pc.hyperplanes[h]);
    if (it == normals.entries.end())
      throw ValidationError("missing normal for hyperplane '" +
                            pc.hyperplanes[h] + "'");
    if (static_cast<int>(it->second.size()) != pc.d)
      throw ValidationError("normal of '" + pc.hyperplanes[h] +
                            "' has wrong dimension");
    for (int k = 0; k < pc.d; ++k)
      values[normal_variable_index(static_cast<int>(h), k, pc.d)] =
          it->second[k];
  }
  return pc.polynomial.evaluate(values);
}

PinInvarianceReport pin_invariance_check(const IncidenceGeometry& g,
                                         const MatroidOptions& opts) {
  require_basis(g, opts);
  PinInvarianceReport report;
  report.all_equal = true;
  Rational first_factor;
  for (std::size_t i = 0; i < g.points().size(); ++i) {
    const std::string& point = g.points()[i];
    Polynomial det = pinned_symbolic_det(g, point);
    auto [canonical, factor] = poly_canonicalize(det);
    if (i == 0) {
      report.canonical = canonical;
      first_factor = factor;
      report.lambda.push_back({point, Rational(1)});
    } else {
      if (!(canonical == report.canonical)) report.all_equal = false;
      // det_p = factor * canonical, so det_p = (factor / first) * det_first.
      report.lambda.push_back({point, factor / first_factor});
    }
  }
  return report;
}

NormalAssignment random_normal_assignment(const IncidenceGeometry& g,
                                          SeededRng& rng) {
  NormalAssignment na;
  for (const auto& h : g.hyperplanes()) {
    std::vector<Rational> vec(g.d());
    bool all_zero = true;
    do {
      all_zero = true;
      for (auto& v : vec) {
        v = random_rational(rng);
        if (v != 0) all_zero = false;
      }
    } while (all_zero);
    na.entries[h] = vec;
  }
  return na;
}

SlInvarianceReport sl_invariance_check(const IncidenceGeometry& g, int trials,
                                       std::uint64_t seed,
                                       const MatroidOptions& opts) {
  require_basis(g, opts);
  SlInvarianceReport report;
  report.trials = trials;
  report.seed = seed;
  report.dets_equal = true;
  report.kernel_dims_equal = true;

  SeededRng rng(seed);
  const std::string pin_point = g.points().front();
  for (int t = 0; t < trials; ++t) {
    NormalAssignment na = random_normal_assignment(g, rng);
    const RatMat s = normal_matrix(g, na);
    const IntMat a = random_unimodular(g.d(), rng.next());
    RatMat as(s.rows(), s.cols());
    for (Index i = 0; i < s.rows(); ++i)
      for (Index j = 0; j < s.cols(); ++j) {
        Rational acc(0);
        for (Index k = 0; k < s.rows(); ++k)
          acc += Rational(a(i, k)) * s(k, j);
        as(i, j) = acc;
      }
    const NormalAssignment transformed = assignment_from_matrix(g, as);

    const NumericRedrawMatrix pinned_s = pin(build_matrix(g, na), pin_point);
    const NumericRedrawMatrix pinned_as =
        pin(build_matrix(g, transformed), pin_point);
    if (det_rational(pinned_s.mat) != det_rational(pinned_as.mat))
      report.dets_equal = false;

    const NumericRedrawMatrix unpinned_s = build_matrix(g, na);
    const NumericRedrawMatrix unpinned_as = build_matrix(g, transformed);
    const int dim_s = static_cast<int>(kernel_basis(unpinned_s.mat).size());
    const int dim_as = static_cast<int>(kernel_basis(unpinned_as.mat).size());
    if (dim_s != dim_as) report.kernel_dims_equal = false;
  }
  return report;
}

RankPinReport rank_pin_invariance_check(const IncidenceGeometry& g,
                                        int assignments, std::uint64_t seed) {
  RankPinReport report;
  report.assignments = assignments;
  report.seed = seed;
  report.all_equal = true;
  SeededRng rng(seed);
  for (int t = 0; t < assignments; ++t) {
    NormalAssignment na = random_normal_assignment(g, rng);
    const NumericRedrawMatrix base = build_matrix(g, na);
    int first_rank = -1;
    for (const auto& point : g.points()) {
      const NumericRedrawMatrix pinned = pin(base, point);
      const int r = rank(pinned.mat);
      if (first_rank < 0)
        first_rank = r;
      else if (r != first_rank)
        report.all_equal = false;
    }
  }
  return report;
}

}  // namespace predraw
