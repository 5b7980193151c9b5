#include "predraw/bracket.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "predraw/purecond.hpp"

namespace predraw {

void BracketPolynomial::add_term(const BracketMonomial& m, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BracketPolynomial BracketPolynomial::operator+(
    const BracketPolynomial& rhs) const {
  BracketPolynomial out(*this);
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

BracketPolynomial BracketPolynomial::operator-(
    const BracketPolynomial& rhs) const {
  BracketPolynomial out(*this);
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
  return out;
}

BracketPolynomial BracketPolynomial::operator*(
    const BracketPolynomial& rhs) const {
  BracketPolynomial out(d_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) {
      BracketMonomial m = ma;
      m.brackets.insert(m.brackets.end(), mb.brackets.begin(),
                        mb.brackets.end());
      m.normalize();
      out.add_term(m, ca * cb);
    }
  return out;
}

BracketPolynomial BracketPolynomial::times(const Int& scalar) const {
  BracketPolynomial out(d_);
  if (scalar == 0) return out;
  for (const auto& [m, c] : terms_) out.add_term(m, c * scalar);
  return out;
}

std::optional<std::pair<Bracket, int>> normalize_bracket_indices(
    std::vector<int> columns, int d) {
  if (static_cast<int>(columns.size()) != d)
    throw ValidationError("bracket must name exactly " + std::to_string(d) +
                          " hyperplanes");
  // Insertion sort, counting transpositions for the permutation sign.
  int sign = 1;
  for (std::size_t i = 1; i < columns.size(); ++i) {
    for (std::size_t j = i; j > 0 && columns[j - 1] > columns[j]; --j) {
      std::swap(columns[j - 1], columns[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < columns.size(); ++i)
    if (columns[i - 1] == columns[i]) return std::nullopt;
  return std::make_pair(Bracket{std::move(columns)}, sign);
}

std::optional<std::pair<Bracket, int>> normalize_bracket(
    const std::vector<std::string>& labels, const IncidenceGeometry& g) {
  std::vector<int> cols;
  cols.reserve(labels.size());
  for (const auto& label : labels) cols.push_back(g.hyperplane_index(label));
  return normalize_bracket_indices(std::move(cols), g.d());
}

Polynomial expand_bracket(const Bracket& b, int d) {
  if (static_cast<int>(b.columns.size()) != d)
    throw ValidationError("bracket arity does not match dimension");
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial acc;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    Monomial m;
    for (int row = 0; row < d; ++row)
      m = m * Monomial::variable(
                  normal_variable_index(b.columns[static_cast<std::size_t>(
                                            perm[static_cast<std::size_t>(row)])],
                                        row, d));
    acc.add_term(m, inversions % 2 == 0 ? Int(1) : Int(-1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

Polynomial expand(const BracketPolynomial& bp) {
  Polynomial acc;
  std::map<Bracket, Polynomial> cache;
  for (const auto& [m, c] : bp.terms()) {
    Polynomial prod(1);
    for (const Bracket& b : m.brackets) {
      auto it = cache.find(b);
      if (it == cache.end())
        it = cache.emplace(b, expand_bracket(b, bp.d())).first;
      prod *= it->second;
    }
    acc += prod.times(c);
  }
  return acc;
}

namespace {

// The sorted row pairing: monomial vars split by row, each row sorted;
// the t-th bracket takes the t-th entry of every row. Succeeds exactly
// when every bracket column is strictly increasing.
std::optional<BracketMonomial> match_leading_monomial(const Monomial& m,
                                                      int d) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(d));
  for (const auto& [var, exp] : m.factors()) {
    const int h = var / d;
    const int r = var % d;
    for (int i = 0; i < exp; ++i)
      rows[static_cast<std::size_t>(r)].push_back(h);
  }
  const std::size_t s = rows[0].size();
  for (const auto& row : rows)
    if (row.size() != s) return std::nullopt;
  // Rows come out sorted because monomial factors are var-ordered.
  BracketMonomial out;
  for (std::size_t t = 0; t < s; ++t) {
    Bracket b;
    b.columns.reserve(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) {
      const int h = rows[static_cast<std::size_t>(r)][t];
      if (r > 0 && h <= b.columns.back()) return std::nullopt;
      b.columns.push_back(h);
    }
    out.brackets.push_back(std::move(b));
  }
  out.normalize();
  return out;
}

}  // namespace

BracketPolynomial bracketize(const Polynomial& p, int d) {
  BracketPolynomial result(d);
  std::map<Bracket, Polynomial> cache;
  Polynomial rem = p;
  Monomial prev_lead;
  bool have_prev = false;
  while (!rem.is_zero()) {
    const Monomial lead = rem.leading_monomial();
    if (have_prev && grlex_compare(lead, prev_lead) >= 0)
      throw Error("subduction failed to make progress");
    prev_lead = lead;
    have_prev = true;

    auto matched = match_leading_monomial(lead, d);
    if (!matched)
      throw SubductionError(
          "leading term matches no product of bracket leading terms; "
          "polynomial is not SL-invariant");
    const Int coeff = rem.leading_coefficient();
    Polynomial prod(1);
    for (const Bracket& b : matched->brackets) {
      auto it = cache.find(b);
      if (it == cache.end()) it = cache.emplace(b, expand_bracket(b, d)).first;
      prod *= it->second;
    }
    rem -= prod.times(coeff);
    result.add_term(*matched, coeff);
  }
  if (d == 2) result = straighten(result);
  return result;
}

BracketPolynomial straighten(const BracketPolynomial& bp) {
  if (bp.d() != 2)
    throw ValidationError("straightening is implemented for d = 2 only");
  BracketPolynomial work = bp;
  for (long guard = 0; guard < 1000000; ++guard) {
    bool rewritten = false;
    for (const auto& [mono, coeff] : work.terms()) {
      // Brackets are sorted by (first, second); a violation is a pair
      // whose second entries are out of order.
      for (std::size_t i = 0; i < mono.brackets.size() && !rewritten; ++i) {
        for (std::size_t j = i + 1; j < mono.brackets.size() && !rewritten;
             ++j) {
          const int a1 = mono.brackets[i].columns[0];
          const int b1 = mono.brackets[i].columns[1];
          const int a2 = mono.brackets[j].columns[0];
          const int b2 = mono.brackets[j].columns[1];
          if (!(a1 < a2 && b1 > b2)) continue;
          // a1 < a2 < b2 < b1: [a1 b1][a2 b2] =
          //   [a1 b2][a2 b1] - [a1 a2][b2 b1].
          BracketMonomial rest;
          for (std::size_t t = 0; t < mono.brackets.size(); ++t)
            if (t != i && t != j) rest.brackets.push_back(mono.brackets[t]);
          BracketMonomial first = rest;
          first.brackets.push_back(Bracket{{a1, b2}});
          first.brackets.push_back(Bracket{{a2, b1}});
          first.normalize();
          BracketMonomial second = rest;
          second.brackets.push_back(Bracket{{a1, a2}});
          second.brackets.push_back(Bracket{{b2, b1}});
          second.normalize();
          const Int c = coeff;
          work.add_term(mono, -c);
          work.add_term(first, c);
          work.add_term(second, -c);
          rewritten = true;
        }
      }
      if (rewritten) break;
    }
    if (!rewritten) return work;
  }
  throw Error("straightening did not terminate");
}

BlockReduceResult block_reduce(const IncidenceGeometry& g,
                               const std::string& pinned_point,
                               const MatroidOptions& opts) {
  if (g.d() != 2)
    throw ValidationError("block_reduce is implemented for d = 2 only");
  {
    MatroidReport report = is_independent(g, opts);
    if (!report.basis)
      throw NotBasisError("block_reduce requires a basis of the 2-plane "
                          "matroid",
                          report);
  }
  const int pin_idx = g.point_index(pinned_point);

  SymbolicRedrawMatrix pinned = pin(build_symbolic_matrix(g), pinned_point);
  PolyMat& w = pinned.mat;

  // Subtract each hyperplane's first incidence row from its others, so
  // every offset column carries a single unit.
  std::vector<Index> first_row(static_cast<std::size_t>(g.num_hyperplanes()),
                               -1);
  for (Index r = 0; r < g.num_incidences(); ++r) {
    const int hi = g.incidence_indices()[static_cast<std::size_t>(r)].second;
    if (first_row[static_cast<std::size_t>(hi)] < 0) {
      first_row[static_cast<std::size_t>(hi)] = r;
    } else {
      const Index pivot = first_row[static_cast<std::size_t>(hi)];
      for (Index c = 0; c < w.cols(); ++c) w(r, c) -= w(pivot, c);
    }
  }

  std::vector<Index> rows(static_cast<std::size_t>(w.rows()));
  std::vector<Index> cols(static_cast<std::size_t>(w.cols()));
  std::iota(rows.begin(), rows.end(), Index(0));
  std::iota(cols.begin(), cols.end(), Index(0));
  int sign = 1;

  auto remove_at = [&](Index row, Index col) {
    const auto ri = std::find(rows.begin(), rows.end(), row) - rows.begin();
    const auto ci = std::find(cols.begin(), cols.end(), col) - cols.begin();
    if ((ri + ci) % 2 != 0) sign = -sign;
    rows.erase(rows.begin() + ri);
    cols.erase(cols.begin() + ci);
  };

  // Offset columns against their pivot rows, then pin rows against the
  // pinned point's columns.
  for (int h = 0; h < g.num_hyperplanes(); ++h)
    remove_at(first_row[static_cast<std::size_t>(h)], h);
  for (int k = 0; k < g.d(); ++k)
    remove_at(g.num_incidences() + k,
              g.num_hyperplanes() + g.d() * pin_idx + k);

  BlockReduceResult result;

  // Peel 2x2 diagonal blocks: points whose two columns meet exactly two
  // remaining rows.
  bool peeled = true;
  while (peeled) {
    peeled = false;
    for (int q = 0; q < g.num_points() && !peeled; ++q) {
      if (q == pin_idx) continue;
      const Index c1 = g.num_hyperplanes() + 2 * q;
      const Index c2 = c1 + 1;
      if (std::find(cols.begin(), cols.end(), c1) == cols.end()) continue;
      std::vector<Index> touching;
      for (Index r : rows)
        if (!w(r, c1).is_zero() || !w(r, c2).is_zero()) touching.push_back(r);
      if (touching.size() != 2) continue;

      const Index r1 = touching[0], r2 = touching[1];
      Polynomial det2 = w(r1, c1) * w(r2, c2) - w(r1, c2) * w(r2, c1);
      if (det2.is_zero())
        throw Error("block_reduce: singular 2x2 block for a basis");
      auto [prim, factor] = poly_canonicalize(det2);
      if (factor != 1 && factor != -1)
        throw Error("block_reduce: 2x2 block content is not a unit");

      std::vector<int> hs;
      for (int var : det2.variables()) {
        const int h = var / 2;
        if (hs.empty() || hs.back() != h) hs.push_back(h);
      }
      if (hs.size() != 2)
        throw Error("block_reduce: 2x2 block does not involve two "
                    "hyperplanes");
      const Bracket bracket{{hs[0], hs[1]}};
      if (!(prim == expand_bracket(bracket, 2)))
        throw Error("block_reduce: 2x2 block is not a bracket");

      const auto i1 = std::find(rows.begin(), rows.end(), r1) - rows.begin();
      const auto i2 = std::find(rows.begin(), rows.end(), r2) - rows.begin();
      const auto j1 = std::find(cols.begin(), cols.end(), c1) - cols.begin();
      const auto j2 = std::find(cols.begin(), cols.end(), c2) - cols.begin();
      if ((i1 + i2 + j1 + j2) % 2 != 0) sign = -sign;
      if (factor == -1) sign = -sign;

      result.diagonal_brackets.push_back(bracket);
      rows.erase(std::remove(rows.begin(), rows.end(), r1), rows.end());
      rows.erase(std::remove(rows.begin(), rows.end(), r2), rows.end());
      cols.erase(std::remove(cols.begin(), cols.end(), c1), cols.end());
      cols.erase(std::remove(cols.begin(), cols.end(), c2), cols.end());
      peeled = true;
    }
  }

  result.sign = sign;
  result.residual = PolyMat(static_cast<Index>(rows.size()),
                            static_cast<Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j)
      result.residual(static_cast<Index>(i), static_cast<Index>(j)) =
          w(rows[i], cols[j]);
    result.residual_row_labels.push_back(
        pinned.row_labels[static_cast<std::size_t>(rows[i])]);
  }
  for (Index c : cols)
    result.residual_col_labels.push_back(
        pinned.col_labels[static_cast<std::size_t>(c)]);
  return result;
}

std::string to_string(const Bracket& b,
                      const std::vector<std::string>& hyperplane_labels) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < b.columns.size(); ++i) {
    if (i > 0) os << " ";
    os << hyperplane_labels[static_cast<std::size_t>(b.columns[i])];
  }
  os << "]";
  return os.str();
}

std::string to_string(const BracketPolynomial& bp,
                      const std::vector<std::string>& hyperplane_labels) {
  if (bp.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = bp.terms().rbegin(); it != bp.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    Int mag = abs(c);
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (mag != 1 || m.brackets.empty()) os << mag.get_str();
    for (const Bracket& b : m.brackets) os << to_string(b, hyperplane_labels);
  }
  return os.str();
}

namespace {

class BracketParser {
 public:
  BracketParser(const std::string& text, const IncidenceGeometry& g)
      : text_(text), g_(g) {}

  BracketPolynomial parse() {
    BracketPolynomial result = parse_expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input in bracket expression");
    return result;
  }

 private:
  BracketPolynomial parse_expr() {
    BracketPolynomial acc(g_.d());
    bool negative = false;
    skip_ws();
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    acc = parse_term();
    if (negative) acc = acc.times(-1);
    while (true) {
      skip_ws();
      const char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        BracketPolynomial term = parse_term();
        acc = (c == '+') ? acc + term : acc - term;
      } else {
        return acc;
      }
    }
  }

  BracketPolynomial parse_term() {
    BracketPolynomial acc(g_.d());
    BracketMonomial one;
    acc.add_term(one, 1);
    bool any = false;
    while (true) {
      skip_ws();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
        acc = acc.times(Int(text_.substr(start, pos_ - start)));
        any = true;
      } else if (c == '[') {
        acc = acc * parse_bracket();
        any = true;
      } else if (c == '(') {
        ++pos_;
        BracketPolynomial inner = parse_expr();
        skip_ws();
        if (peek() != ')') throw ParseError("expected ')'");
        ++pos_;
        acc = acc * inner;
        any = true;
      } else if (c == '*') {
        ++pos_;
      } else {
        if (!any) throw ParseError("expected a bracket term");
        return acc;
      }
    }
  }

  BracketPolynomial parse_bracket() {
    ++pos_;  // consume '['
    std::vector<std::string> labels;
    while (true) {
      skip_ws();
      if (peek() == ']') {
        ++pos_;
        break;
      }
      if (peek() == '\0') throw ParseError("unterminated bracket");
      std::size_t start = pos_;
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(
                                        text_[pos_])) &&
             text_[pos_] != ']')
        ++pos_;
      labels.push_back(text_.substr(start, pos_ - start));
    }
    BracketPolynomial out(g_.d());
    auto normalized = normalize_bracket(labels, g_);
    if (normalized) {
      BracketMonomial m;
      m.brackets.push_back(normalized->first);
      out.add_term(m, Int(normalized->second));
    }
    return out;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  const std::string& text_;
  const IncidenceGeometry& g_;
  std::size_t pos_ = 0;
};

}  // namespace

BracketPolynomial parse_bracket_polynomial(const std::string& text,
                                           const IncidenceGeometry& g) {
  return BracketParser(text, g).parse();
}

}  // namespace predraw
