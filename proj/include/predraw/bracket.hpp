#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "predraw/geometry.hpp"
#include "predraw/matroid.hpp"
#include "predraw/polynomial.hpp"

namespace predraw {

// [h_{i1} ... h_{id}]: hyperplane indices, strictly increasing.
struct Bracket {
  std::vector<int> columns;
  auto operator<=>(const Bracket&) const = default;
};

// A product of brackets, kept sorted.
struct BracketMonomial {
  std::vector<Bracket> brackets;

  void normalize() { std::sort(brackets.begin(), brackets.end()); }
  bool operator==(const BracketMonomial&) const = default;
  bool operator<(const BracketMonomial& rhs) const {
    if (brackets.size() != rhs.brackets.size())
      return brackets.size() < rhs.brackets.size();
    return brackets < rhs.brackets;
  }
};

// Integer-coefficient polynomial in brackets.
class BracketPolynomial {
 public:
  using TermMap = std::map<BracketMonomial, Int>;

  explicit BracketPolynomial(int d = 2) : d_(d) {}

  int d() const { return d_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const BracketMonomial& m, const Int& coeff);
  BracketPolynomial operator+(const BracketPolynomial& rhs) const;
  BracketPolynomial operator-(const BracketPolynomial& rhs) const;
  BracketPolynomial operator*(const BracketPolynomial& rhs) const;
  BracketPolynomial times(const Int& scalar) const;

  bool operator==(const BracketPolynomial&) const = default;

 private:
  int d_;
  TermMap terms_;
};

// Sorts the labels into a bracket plus permutation sign; nullopt when a
// label repeats (zero bracket). Throws on unknown labels or wrong arity.
std::optional<std::pair<Bracket, int>> normalize_bracket(
    const std::vector<std::string>& labels, const IncidenceGeometry& g);
std::optional<std::pair<Bracket, int>> normalize_bracket_indices(
    std::vector<int> columns, int d);

// The bracket as the d x d minor of the symbolic normal matrix.
Polynomial expand_bracket(const Bracket& b, int d);
Polynomial expand(const BracketPolynomial& bp);

// Raised when subduction cannot match a leading term against a product
// of bracket leading terms: the polynomial is not SL-invariant.
struct SubductionError : Error {
  explicit SubductionError(const std::string& msg) : Error(msg) {}
};

// Rewrites an SL-invariant polynomial as a bracket polynomial by
// subduction against the brackets (leading-term matching with the sorted
// row pairing) and, for d = 2, straightens the result into the standard
// monomial basis. Guaranteed for d = 2; for d >= 3 it may throw
// SubductionError even on invariants and the output is not straightened.
BracketPolynomial bracketize(const Polynomial& p, int d);

// Normal form under [i l][j k] = [i k][j l] - [i j][k l], i<j<k<l (d=2).
BracketPolynomial straighten(const BracketPolynomial& bp);

// Structural reduction of the pinned symbolic matrix for d = 2:
// clears the offset columns with the first incidence row of each
// hyperplane, consumes the pin rows, then peels every point whose two
// columns meet exactly two remaining rows as a 2x2 diagonal bracket
// block. det(pinned) = sign * prod(expand(diagonal)) * det(residual).
struct BlockReduceResult {
  std::vector<Bracket> diagonal_brackets;
  PolyMat residual;
  std::vector<std::string> residual_row_labels;
  std::vector<std::string> residual_col_labels;
  int sign = 1;
};
BlockReduceResult block_reduce(const IncidenceGeometry& g,
                               const std::string& pinned_point,
                               const MatroidOptions& opts = {});

// Text form: "[h0 h3]" for brackets; sums of products with integer
// coefficients for polynomials, e.g. "[h0 h2][h1 h3] - 2[h0 h1][h2 h3]".
std::string to_string(const Bracket& b,
                      const std::vector<std::string>& hyperplane_labels);
std::string to_string(const BracketPolynomial& bp,
                      const std::vector<std::string>& hyperplane_labels);

// Parses sums, products, integer coefficients and parentheses over
// brackets written with the geometry's hyperplane labels.
BracketPolynomial parse_bracket_polynomial(const std::string& text,
                                           const IncidenceGeometry& g);

}  // namespace predraw
