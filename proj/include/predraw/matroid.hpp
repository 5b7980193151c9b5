#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "predraw/geometry.hpp"

namespace predraw {

enum class MatroidMethod { deterministic, randomized };

struct MatroidReport {
  bool independent = false;
  bool basis = false;
  // Present exactly when independent is false; satisfies
  // |I''| > |H(I'')| + d|P(I'')| - d on its own projections.
  std::optional<std::vector<IncidencePair>> violating_subset;
  int generic_rank = 0;
  MatroidMethod method = MatroidMethod::deterministic;
};

struct MatroidOptions {
  // Above this incidence count the counting check switches to randomized
  // finite-field rank evaluation.
  int deterministic_threshold = 24;
  std::uint64_t seed = 0;
  int repetitions = 3;
  std::uint64_t prime = kDefaultPrime;
};

// Independence in the d-plane matroid on the incidence set: every
// nonempty subset I'' must satisfy |I''| <= |H(I'')| + d|P(I'')| - d.
// The deterministic method scans closed incidence sets between subset
// pairs (P', H'); the randomized one evaluates the rank of the redrawing
// matrix at uniform random normals over F_p.
MatroidReport is_independent(const IncidenceGeometry& g,
                             const MatroidOptions& opts = {});

// Independent and |I| = |H| + d|P| - d.
bool is_basis(const IncidenceGeometry& g, const MatroidOptions& opts = {});

// Columns of the redrawing matrix minus its rank at random F_p normals
// (maximum rank over opts.repetitions draws). Equals d for a basis.
int generic_corank(const IncidenceGeometry& g, std::uint64_t seed = 0,
                   const MatroidOptions& opts = {});

// Raised when an operation that needs a basis of the d-plane matroid is
// given something else; carries the matroid analysis.
struct NotBasisError : ValidationError {
  NotBasisError(const std::string& msg, MatroidReport r)
      : ValidationError(msg), report(std::move(r)) {}
  MatroidReport report;
};

}  // namespace predraw
