#include "predraw/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "predraw/errors.hpp"

namespace predraw {

namespace {

// Reduced row echelon form in place; returns the pivot column of each
// pivot row. Pivot choice: first row with a nonzero entry in the column.
std::vector<Index> rref_in_place(RatMat& m) {
  std::vector<Index> pivot_cols;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Rational inv = Rational(1) / m(row, col);
    for (Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (Index c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) acc = mulmod(acc, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return acc;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  return powmod(a, p - 2, p);
}

}  // namespace

int rank(const RatMat& m) {
  RatMat work = m;
  return static_cast<int>(rref_in_place(work).size());
}

std::vector<RatVec> kernel_basis(const RatMat& m) {
  RatMat work = m;
  const std::vector<Index> pivot_cols = rref_in_place(work);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<RatVec> basis;
  for (Index free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    RatVec v = RatVec::Zero(m.cols());
    v(free_col) = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
      v(pivot_cols[i]) = -work(static_cast<Index>(i), free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational det_rational(const RatMat& m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  if (m.rows() == 0) return Rational(1);
  Int scale(1);
  RatMat work = m;
  for (Index r = 0; r < work.rows(); ++r) {
    Int lcm_den(1);
    for (Index c = 0; c < work.cols(); ++c)
      lcm_den = lcm(lcm_den, work(r, c).get_den());
    if (lcm_den != 1) {
      for (Index c = 0; c < work.cols(); ++c)
        work(r, c) *= Rational(lcm_den);
      scale *= lcm_den;
    }
  }
  IntMat zmat(work.rows(), work.cols());
  for (Index r = 0; r < work.rows(); ++r)
    for (Index c = 0; c < work.cols(); ++c) zmat(r, c) = work(r, c).get_num();
  return make_rational(det_integer(std::move(zmat)), scale);
}

Int det_integer(IntMat m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  const Index n = m.rows();
  if (n == 0) return 1;
  Int prev(1);
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index pivot = -1;
      for (Index r = k; r < n && pivot < 0; ++r)
        for (Index c = k; c < n && pivot < 0; ++c)
          if (m(r, c) != 0) {
            if (r != k) {
              m.row(r).swap(m.row(k));
              sign = -sign;
            }
            if (c != k) {
              m.col(c).swap(m.col(k));
              sign = -sign;
            }
            pivot = r;
          }
      if (pivot < 0) return 0;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

namespace {

struct ActiveView {
  std::vector<Index> rows, cols;
};

Index position_of(const std::vector<Index>& v, Index value) {
  return static_cast<Index>(
      std::find(v.begin(), v.end(), value) - v.begin());
}

Polynomial det_cofactor(const PolyMat& m, const std::vector<Index>& rows,
                        const std::vector<Index>& cols) {
  const std::size_t n = rows.size();
  if (n == 0) return Polynomial(1);
  if (n == 1) return m(rows[0], cols[0]);
  Polynomial acc;
  std::vector<Index> sub_rows(rows.begin() + 1, rows.end());
  int sign = 1;
  for (std::size_t j = 0; j < n; ++j) {
    const Polynomial& entry = m(rows[0], cols[j]);
    if (!entry.is_zero()) {
      std::vector<Index> sub_cols;
      sub_cols.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) sub_cols.push_back(cols[c]);
      Polynomial minor = det_cofactor(m, sub_rows, sub_cols);
      minor *= entry;
      if (sign < 0) minor = -minor;
      acc += minor;
    }
    sign = -sign;
  }
  return acc;
}

Polynomial det_bareiss_poly(PolyMat m) {
  const Index n = m.rows();
  if (n == 0) return Polynomial(1);
  Polynomial prev(1);
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    // Full pivoting; favor the sparsest pivot polynomial.
    Index pr = -1, pc = -1;
    std::size_t best_terms = 0;
    int best_deg = 0;
    for (Index r = k; r < n; ++r) {
      for (Index c = k; c < n; ++c) {
        const Polynomial& e = m(r, c);
        if (e.is_zero()) continue;
        const std::size_t t = e.term_count();
        const int deg = e.total_degree();
        if (pr < 0 || t < best_terms ||
            (t == best_terms && deg < best_deg)) {
          pr = r;
          pc = c;
          best_terms = t;
          best_deg = deg;
        }
      }
    }
    if (pr < 0) return Polynomial();
    if (pr != k) {
      m.row(pr).swap(m.row(k));
      sign = -sign;
    }
    if (pc != k) {
      m.col(pc).swap(m.col(k));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j)
        m(i, j) =
            (m(k, k) * m(i, j) - m(i, k) * m(k, j)).exact_div(prev);
    prev = m(k, k);
  }
  Polynomial det = m(n - 1, n - 1);
  return sign > 0 ? det : -det;
}

}  // namespace

Polynomial det_polynomial(const PolyMat& m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  const Index n = m.rows();
  PolyMat work = m;
  ActiveView active;
  active.rows.resize(static_cast<std::size_t>(n));
  active.cols.resize(static_cast<std::size_t>(n));
  std::iota(active.rows.begin(), active.rows.end(), Index(0));
  std::iota(active.cols.begin(), active.cols.end(), Index(0));

  int sign = 1;
  Polynomial factor(1);

  auto expand_at = [&](Index r, Index c) {
    const Index ri = position_of(active.rows, r);
    const Index ci = position_of(active.cols, c);
    if ((ri + ci) % 2 != 0) sign = -sign;
    factor *= work(r, c);
    active.rows.erase(active.rows.begin() + ri);
    active.cols.erase(active.cols.begin() + ci);
  };

  bool progress = true;
  while (progress && !active.rows.empty()) {
    progress = false;
    // Lone-entry columns, then lone-entry rows.
    for (Index c : active.cols) {
      Index nz_row = -1;
      int count = 0;
      for (Index r : active.rows) {
        if (!work(r, c).is_zero()) {
          ++count;
          nz_row = r;
          if (count > 1) break;
        }
      }
      if (count == 0) return Polynomial();
      if (count == 1) {
        expand_at(nz_row, c);
        progress = true;
        break;
      }
    }
    if (progress) continue;
    for (Index r : active.rows) {
      Index nz_col = -1;
      int count = 0;
      for (Index c : active.cols) {
        if (!work(r, c).is_zero()) {
          ++count;
          nz_col = c;
          if (count > 1) break;
        }
      }
      if (count == 0) return Polynomial();
      if (count == 1) {
        expand_at(r, nz_col);
        progress = true;
        break;
      }
    }
    if (progress) continue;
    // A column whose nonzero entries are all one constant: subtract the
    // first such row from the others to isolate a lone unit.
    for (Index c : active.cols) {
      Index first_row = -1;
      bool uniform = true;
      Polynomial value;
      for (Index r : active.rows) {
        const Polynomial& e = work(r, c);
        if (e.is_zero()) continue;
        if (!e.is_constant()) {
          uniform = false;
          break;
        }
        if (first_row < 0) {
          first_row = r;
          value = e;
        } else if (!(e == value)) {
          uniform = false;
          break;
        }
      }
      if (!uniform || first_row < 0) continue;
      bool subtracted = false;
      for (Index r : active.rows) {
        if (r == first_row || work(r, c).is_zero()) continue;
        for (Index cc : active.cols)
          work(r, cc) -= work(first_row, cc);
        subtracted = true;
      }
      if (subtracted) {
        progress = true;
        break;
      }
    }
  }

  Polynomial residual_det(1);
  const std::size_t k = active.rows.size();
  if (k > 0) {
    if (k < 4) {
      residual_det = det_cofactor(work, active.rows, active.cols);
    } else {
      PolyMat block(static_cast<Index>(k), static_cast<Index>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          block(static_cast<Index>(i), static_cast<Index>(j)) =
              work(active.rows[i], active.cols[j]);
      residual_det = det_bareiss_poly(std::move(block));
    }
  }
  Polynomial det = factor * residual_det;
  return sign > 0 ? det : -det;
}

int rank_mod_p(FpMat m, std::uint64_t p) {
  if (!is_prime_u64(p)) throw ValidationError("modulus is not prime");
  const Index rows = m.rows(), cols = m.cols();
  int r = 0;
  for (Index col = 0; col < cols && r < rows; ++col) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i) {
      if (m(i, col) % p != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const std::uint64_t inv = invmod(m(r, col) % p, p);
    for (Index c = col; c < cols; ++c) m(r, c) = mulmod(m(r, c) % p, inv, p);
    for (Index i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::uint64_t f = m(i, col) % p;
      if (f == 0) continue;
      for (Index c = col; c < cols; ++c) {
        const std::uint64_t sub = mulmod(f, m(r, c), p);
        m(i, c) = (m(i, c) % p + p - sub) % p;
      }
    }
    ++r;
  }
  return r;
}

IntMat clear_denominators_rows(const RatMat& m) {
  IntMat out(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r) {
    Int lcm_den(1);
    for (Index c = 0; c < m.cols(); ++c)
      lcm_den = lcm(lcm_den, m(r, c).get_den());
    for (Index c = 0; c < m.cols(); ++c) {
      Rational scaled = m(r, c) * Rational(lcm_den);
      out(r, c) = scaled.get_num();
    }
  }
  return out;
}

FpMat reduce_mod_p(const IntMat& m, std::uint64_t p) {
  FpMat out(m.rows(), m.cols());
  const Int prime(static_cast<unsigned long>(p));
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) {
      Int v = m(r, c) % prime;
      if (v < 0) v += prime;
      out(r, c) = v.get_ui();
    }
  return out;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                          19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                          19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace predraw
