#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "predraw/linalg.hpp"
#include "predraw/rational.hpp"

namespace predraw {

using IncidencePair = std::pair<std::string, std::string>;  // (point, hyperplane)

// Combinatorial incidence geometry: points, hyperplanes and the incidence
// relation between them, together with the ambient dimension. Labels are
// opaque strings; all internal indices follow input order, which fixes
// the row and column order of every matrix built downstream.
class IncidenceGeometry {
 public:
  IncidenceGeometry(int d, std::vector<std::string> points,
                    std::vector<std::string> hyperplanes,
                    std::vector<IncidencePair> incidences);

  int d() const { return d_; }
  const std::vector<std::string>& points() const { return points_; }
  const std::vector<std::string>& hyperplanes() const { return hyperplanes_; }
  const std::vector<IncidencePair>& incidences() const { return incidences_; }
  // Incidences as (point index, hyperplane index).
  const std::vector<std::pair<int, int>>& incidence_indices() const {
    return incidence_indices_;
  }

  int num_points() const { return static_cast<int>(points_.size()); }
  int num_hyperplanes() const { return static_cast<int>(hyperplanes_.size()); }
  int num_incidences() const { return static_cast<int>(incidences_.size()); }

  int point_index(const std::string& label) const;       // throws if unknown
  int hyperplane_index(const std::string& label) const;  // throws if unknown

  bool operator==(const IncidenceGeometry& rhs) const {
    return d_ == rhs.d_ && points_ == rhs.points_ &&
           hyperplanes_ == rhs.hyperplanes_ && incidences_ == rhs.incidences_;
  }

 private:
  int d_;
  std::vector<std::string> points_;
  std::vector<std::string> hyperplanes_;
  std::vector<IncidencePair> incidences_;
  std::vector<std::pair<int, int>> incidence_indices_;
  std::map<std::string, int> point_index_;
  std::map<std::string, int> hyperplane_index_;
};

// One normal vector per hyperplane (the columns of the matrix S).
struct NormalAssignment {
  std::map<std::string, std::vector<Rational>> entries;
};

struct PointConfiguration {
  std::map<std::string, std::vector<Rational>> coords;
};

// Point coordinates plus hyperplane offsets; together with a
// NormalAssignment this satisfies n(h).x(p) + offset(h) = 0 on every
// incidence.
struct Realization {
  PointConfiguration coords;
  std::map<std::string, Rational> offsets;
};

struct GeometryDocument {
  IncidenceGeometry geometry;
  std::optional<NormalAssignment> normals;
  std::optional<PointConfiguration> coordinates;
};

// --- document I/O -----------------------------------------------------

IncidenceGeometry parse_geometry(const std::string& text);
GeometryDocument parse_geometry_document(const std::string& text);
// Parses a file holding just {"normals": {...}}.
NormalAssignment parse_normals_document(const std::string& text,
                                        const IncidenceGeometry& g);

std::string serialize_geometry(const IncidenceGeometry& g);
std::string serialize_document(const GeometryDocument& doc);

// --- operations --------------------------------------------------------

struct InducedCounts {
  int incidences = 0;
  int points = 0;
  int hyperplanes = 0;
  bool operator==(const InducedCounts&) const = default;
};

// Cardinalities (|I''|, |P(I'')|, |H(I'')|) of a subset of incidences
// and its projections. Throws if the subset is not contained in g.
InducedCounts induced_counts(const IncidenceGeometry& g,
                             const std::vector<IncidencePair>& subset);

// For d = 2: recovers the hyperplane normals and offsets from exact point
// coordinates, canonicalizing each normal to a primitive integer vector
// with positive leading entry. Throws when a hyperplane has fewer than
// two distinct incident points or when its incident points are not
// collinear.
std::pair<NormalAssignment, Realization> normals_from_points(
    const IncidenceGeometry& g, const PointConfiguration& coords);

// --- helpers shared by downstream modules ------------------------------

void validate_normals(const IncidenceGeometry& g, const NormalAssignment& na);
void validate_coordinates(const IncidenceGeometry& g,
                          const PointConfiguration& pc);

// d x |H| matrix of normals in geometry column order.
RatMat normal_matrix(const IncidenceGeometry& g, const NormalAssignment& na);
NormalAssignment assignment_from_matrix(const IncidenceGeometry& g,
                                        const RatMat& s);

// Exact check of the incidence equations for every incidence of g.
bool satisfies_incidence_equations(const IncidenceGeometry& g,
                                   const NormalAssignment& normals,
                                   const Realization& r);

// FNV-1a hash of the canonical serialization, as fixed-width hex.
std::string geometry_fingerprint(const IncidenceGeometry& g);

}  // namespace predraw
