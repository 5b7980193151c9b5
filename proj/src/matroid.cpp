#include "predraw/matroid.hpp"

#include <algorithm>
#include <bit>

#include "predraw/rng.hpp"

namespace predraw {

namespace {

// Redrawing matrix over F_p at the given normal matrix (entries in [0,p)).
FpMat incidence_matrix_mod_p(const IncidenceGeometry& g,
                             const std::vector<std::vector<std::uint64_t>>& s) {
  const int d = g.d();
  const Index rows = g.num_incidences();
  const Index cols = g.num_hyperplanes() + d * g.num_points();
  FpMat m = FpMat::Zero(rows, cols);
  Index row = 0;
  for (const auto& [pi, hi] : g.incidence_indices()) {
    m(row, hi) = 1;
    for (int k = 0; k < d; ++k)
      m(row, g.num_hyperplanes() + d * pi + k) = s[hi][k];
    ++row;
  }
  return m;
}

std::vector<std::vector<std::uint64_t>> random_fp_normals(
    const IncidenceGeometry& g, SeededRng& rng, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> s(g.num_hyperplanes());
  for (auto& vec : s) {
    vec.resize(g.d());
    bool all_zero = true;
    do {
      for (auto& v : vec) {
        v = static_cast<std::uint64_t>(
            rng.uniform(0, static_cast<std::int64_t>(p - 1)));
        if (v != 0) all_zero = false;
      }
    } while (all_zero);
  }
  return s;
}

int randomized_generic_rank(const IncidenceGeometry& g,
                            const MatroidOptions& opts) {
  SeededRng rng(opts.seed);
  int best = 0;
  for (int rep = 0; rep < std::max(1, opts.repetitions); ++rep) {
    auto s = random_fp_normals(g, rng, opts.prime);
    best = std::max(best, rank_mod_p(incidence_matrix_mod_p(g, s), opts.prime));
  }
  return best;
}

bool rows_dependent(const FpMat& m, const std::vector<Index>& rows,
                    std::uint64_t p) {
  FpMat sub(static_cast<Index>(rows.size()), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    sub.row(static_cast<Index>(i)) = m.row(rows[i]);
  return rank_mod_p(std::move(sub), p) < static_cast<int>(rows.size());
}

// Greedy single-pass reduction of a dependent row set to a minimal one.
std::vector<Index> extract_circuit(const FpMat& m, std::uint64_t p) {
  std::vector<Index> rows(static_cast<std::size_t>(m.rows()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    rows[i] = static_cast<Index>(i);
  for (Index r = 0; r < m.rows(); ++r) {
    std::vector<Index> trial;
    trial.reserve(rows.size());
    for (Index keep : rows)
      if (keep != r) trial.push_back(keep);
    if (trial.size() < rows.size() && rows_dependent(m, trial, p))
      rows = std::move(trial);
  }
  return rows;
}

bool counting_condition_violated(const IncidenceGeometry& g,
                                 const std::vector<IncidencePair>& subset) {
  const InducedCounts c = induced_counts(g, subset);
  return c.incidences > c.hyperplanes + g.d() * c.points - g.d();
}

MatroidReport deterministic_check(const IncidenceGeometry& g) {
  MatroidReport report;
  report.method = MatroidMethod::deterministic;

  // Only points and hyperplanes that carry incidences matter.
  std::vector<int> used_points;
  std::vector<bool> point_used(static_cast<std::size_t>(g.num_points()), false);
  for (const auto& [pi, hi] : g.incidence_indices())
    point_used[static_cast<std::size_t>(pi)] = true;
  for (int p = 0; p < g.num_points(); ++p)
    if (point_used[static_cast<std::size_t>(p)]) used_points.push_back(p);
  const int np = static_cast<int>(used_points.size());

  // Per hyperplane, bitmask of its incident points over used_points.
  std::vector<std::uint64_t> hmask(static_cast<std::size_t>(g.num_hyperplanes()),
                                   0);
  std::vector<int> pos(static_cast<std::size_t>(g.num_points()), -1);
  for (int i = 0; i < np; ++i) pos[static_cast<std::size_t>(used_points[i])] = i;
  for (const auto& [pi, hi] : g.incidence_indices())
    hmask[static_cast<std::size_t>(hi)] |=
        std::uint64_t(1) << pos[static_cast<std::size_t>(pi)];

  // A violating subset exists iff a closed set I'' = I cap (P' x H')
  // violates the count; over all H' the margin is maximized by taking
  // every hyperplane meeting P', so only P' needs enumerating.
  const int d = g.d();
  std::uint64_t best_mask = 0;
  int best_size = -1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << np); ++mask) {
    int margin = 0;
    int count = 0;
    for (std::uint64_t hm : hmask) {
      const int c = std::popcount(hm & mask);
      if (c >= 1) {
        count += c;
        margin += c - 1;
      }
    }
    if (count >= 1 && margin > d * (std::popcount(mask) - 1) &&
        count > best_size) {
      best_size = count;
      best_mask = mask;
    }
  }

  if (best_size < 0) {
    report.independent = true;
    return report;
  }
  report.independent = false;
  std::vector<IncidencePair> subset;
  for (std::size_t i = 0; i < g.incidences().size(); ++i) {
    const int pi = g.incidence_indices()[i].first;
    if (best_mask & (std::uint64_t(1) << pos[static_cast<std::size_t>(pi)]))
      subset.push_back(g.incidences()[i]);
  }
  if (!counting_condition_violated(g, subset))
    throw Error("matroid check: inconsistent violating subset");
  report.violating_subset = std::move(subset);
  return report;
}

MatroidReport randomized_check(const IncidenceGeometry& g,
                               const MatroidOptions& opts) {
  MatroidReport report;
  report.method = MatroidMethod::randomized;
  SeededRng rng(opts.seed);
  FpMat last;
  int best = 0;
  for (int rep = 0; rep < std::max(1, opts.repetitions); ++rep) {
    auto s = random_fp_normals(g, rng, opts.prime);
    FpMat m = incidence_matrix_mod_p(g, s);
    best = std::max(best, rank_mod_p(m, opts.prime));
    last = std::move(m);
    if (best == g.num_incidences()) {
      report.independent = true;
      return report;
    }
  }
  report.independent = false;
  // The support of a minimal dependency is a circuit with overwhelming
  // probability; its counting condition is verified exactly.
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<Index> circuit = extract_circuit(last, opts.prime);
    std::vector<IncidencePair> subset;
    for (Index r : circuit)
      subset.push_back(g.incidences()[static_cast<std::size_t>(r)]);
    if (counting_condition_violated(g, subset)) {
      report.violating_subset = std::move(subset);
      return report;
    }
    auto s = random_fp_normals(g, rng, opts.prime);
    last = incidence_matrix_mod_p(g, s);
  }
  throw Error("randomized matroid check failed to certify a violating subset");
}

}  // namespace

MatroidReport is_independent(const IncidenceGeometry& g,
                             const MatroidOptions& opts) {
  MatroidReport report = g.num_incidences() <= opts.deterministic_threshold
                             ? deterministic_check(g)
                             : randomized_check(g, opts);
  report.generic_rank = randomized_generic_rank(g, opts);
  report.basis =
      report.independent &&
      g.num_incidences() ==
          g.num_hyperplanes() + g.d() * g.num_points() - g.d();
  return report;
}

bool is_basis(const IncidenceGeometry& g, const MatroidOptions& opts) {
  return is_independent(g, opts).basis;
}

int generic_corank(const IncidenceGeometry& g, std::uint64_t seed,
                   const MatroidOptions& opts) {
  MatroidOptions local = opts;
  local.seed = seed;
  const int cols = g.num_hyperplanes() + g.d() * g.num_points();
  return cols - randomized_generic_rank(g, local);
}

}  // namespace predraw
