#pragma once

#include <string>

#include "predraw/geometry.hpp"

namespace predraw::testfix {

std::string fixture_path(const std::string& name);
std::string read_fixture(const std::string& name);
GeometryDocument load_document(const std::string& name);
IncidenceGeometry load_geometry(const std::string& name);
NormalAssignment load_normals(const std::string& name,
                              const IncidenceGeometry& g);

IncidenceGeometry g1();
IncidenceGeometry dg4();
IncidenceGeometry nf7();
IncidenceGeometry pappus_sub();
IncidenceGeometry pappus_full();
IncidenceGeometry fano();
IncidenceGeometry triangle();

// Exact medial-triangle realization of nf7 and its canonical normals.
PointConfiguration medial_coords();
NormalAssignment medial_normals();
// n(h_i) = (1, i+1): the pure condition does not vanish here.
NormalAssignment nf7_generic_normals();

// Exact rational Pappus realization and the normals it induces.
PointConfiguration pappus_exact_coords();
NormalAssignment pappus_feasible_normals();

// Coincident-point realization of the Pappus sub-geometry ([h1 h3] = 0).
PointConfiguration pappus_sub_degenerate_coords();

// Bracket expressions for the two golden pure conditions. The
// Pappus-sub expression is commonly written with ambiguous block
// signs; the resolved variant below (third summand negated) is the
// one proportional to the actual determinant, verified against the
// numeric pinned determinant and the exact realization.
extern const char* kGoldenBracketNf7;
extern const char* kGoldenBracketPappusSub;
extern const char* kGoldenBracketPappusSubAsPrinted;

}  // namespace predraw::testfix
