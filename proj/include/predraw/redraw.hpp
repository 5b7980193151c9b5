#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "predraw/geometry.hpp"

namespace predraw {

enum class RealizationClass { trivial, improper, proper };

std::string to_string(RealizationClass c);

// Kernel of the pinned numeric redrawing matrix, converted to
// realizations with the pinned point at the origin.
struct RedrawingReport {
  std::string pinned_point;
  int kernel_dimension = 0;
  std::vector<Realization> redrawings;
  std::vector<RealizationClass> classifications;
};

RedrawingReport redrawing_space(const IncidenceGeometry& g,
                                const NormalAssignment& normals,
                                const std::string& pinned_point);

// trivial: all points share one position. proper: points pairwise
// distinct and no two hyperplanes coincide, where hyperplanes coincide
// exactly when their (normal, offset) pairs are proportional. Throws
// when r does not satisfy the incidence equations for the normals.
RealizationClass classify_realization(const IncidenceGeometry& g,
                                      const NormalAssignment& normals,
                                      const Realization& r);

struct MinorCensus {
  long long total = 0;
  long long nonzero_at_given = 0;
  long long nonzero_at_random = 0;
  std::uint64_t seed = 0;
};

// Rank analysis of the pinned matrix for overconstrained geometries
// (|I| > |H| + d|P| - d). feasible means the pinned kernel is nonzero.
// The optional census evaluates every maximal minor at the given normals
// and at one seeded random assignment.
struct OverconstrainedReport {
  std::string pinned_point;
  int pinned_rank = 0;
  int full_column_rank = 0;  // |H| + d|P|
  bool feasible = false;
  std::optional<MinorCensus> minors;
};

OverconstrainedReport overconstrained_report(const IncidenceGeometry& g,
                                             const NormalAssignment& normals,
                                             const std::string& pinned_point,
                                             bool with_minors,
                                             std::uint64_t seed);

}  // namespace predraw
