#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "predraw/geometry.hpp"
#include "predraw/matroid.hpp"
#include "predraw/polynomial.hpp"
#include "predraw/rng.hpp"

namespace predraw {

// The parallel-redrawing matrix. One row per incidence (p, h): a unit in
// the offset column of h and the normal of h in the d columns of p.
// Pinning appends d unit rows that fix one point at the origin.
// Column layout: the |H| offset columns in hyperplane order, then d
// columns per point in point order.
template <typename Scalar>
struct RedrawMatrixT {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> mat;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::string> points;       // geometry point order
  std::vector<std::string> hyperplanes;  // geometry hyperplane order
  int d = 0;
  std::optional<std::string> pinned_point;
};

using NumericRedrawMatrix = RedrawMatrixT<Rational>;
using SymbolicRedrawMatrix = RedrawMatrixT<Polynomial>;

NumericRedrawMatrix build_matrix(const IncidenceGeometry& g,
                                 const NormalAssignment& normals);
SymbolicRedrawMatrix build_symbolic_matrix(const IncidenceGeometry& g);

// Appends the d pin rows for point p. Throws on unknown point or if the
// matrix is already pinned.
template <typename Scalar>
RedrawMatrixT<Scalar> pin(const RedrawMatrixT<Scalar>& m,
                          const std::string& point);

// Canonical pure condition: the determinant of the pinned symbolic
// matrix, reduced to its primitive part with positive leading
// coefficient. Independent of the pinned point.
struct PureCondition {
  Polynomial polynomial;
  int d = 0;
  std::vector<std::string> hyperplanes;
  std::string fingerprint;

  int degree() const { return std::max(polynomial.total_degree(), 0); }
  std::string to_text() const;
};

// Throws NotBasisError when g is not a basis of the d-plane matroid.
PureCondition pure_condition(const IncidenceGeometry& g,
                             const std::optional<std::string>& pin_point = {},
                             const MatroidOptions& opts = {});

// Exact value of the canonical pure condition at concrete normals.
Rational evaluate(const PureCondition& pc, const NormalAssignment& normals);

// Determinant of the pinned symbolic matrix for every choice of pinned
// point; all canonical forms must coincide, and lambda records the scalar
// relating each raw determinant to the first point's.
struct PinInvarianceReport {
  bool all_equal = false;
  Polynomial canonical;
  std::vector<std::pair<std::string, Rational>> lambda;
};
PinInvarianceReport pin_invariance_check(const IncidenceGeometry& g,
                                         const MatroidOptions& opts = {});

// Seeded trials of det M^p(S) = det M^p(AS) for unimodular A, plus
// preservation of the unpinned kernel dimension under S -> AS.
struct SlInvarianceReport {
  int trials = 0;
  bool dets_equal = false;
  bool kernel_dims_equal = false;
  std::uint64_t seed = 0;
};
SlInvarianceReport sl_invariance_check(const IncidenceGeometry& g, int trials,
                                       std::uint64_t seed,
                                       const MatroidOptions& opts = {});

// Rank of the pinned numeric matrix across all pinned points, for a
// batch of seeded random normal assignments.
struct RankPinReport {
  int assignments = 0;
  bool all_equal = false;
  std::uint64_t seed = 0;
};
RankPinReport rank_pin_invariance_check(const IncidenceGeometry& g,
                                        int assignments, std::uint64_t seed);

// Random exact normal assignment with small entries (property checks).
NormalAssignment random_normal_assignment(const IncidenceGeometry& g,
                                          SeededRng& rng);

}  // namespace predraw
