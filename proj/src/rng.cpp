#include "predraw/rng.hpp"

#include "predraw/errors.hpp"

namespace predraw {

std::int64_t SeededRng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error("uniform: empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(next());  // full width
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % range);
}

Rational random_rational(SeededRng& rng) {
  const long num = static_cast<long>(rng.uniform(-99, 99));
  const long den = static_cast<long>(rng.uniform(1, 99));
  return make_rational(Int(num), Int(den));
}

IntMat random_unimodular(int d, std::uint64_t seed) {
  if (d < 1) throw Error("random_unimodular: dimension must be positive");
  IntMat m = IntMat::Identity(d, d);
  if (d == 1) return m;
  SeededRng rng(seed);
  const int ops = static_cast<int>(rng.uniform(3, 6));
  for (int t = 0; t < ops; ++t) {
    const int i = static_cast<int>(rng.uniform(0, d - 1));
    int j = static_cast<int>(rng.uniform(0, d - 2));
    if (j >= i) ++j;
    if (rng.uniform(0, 3) == 0) {
      // Swap rows i and j and negate one of them: determinant +1.
      m.row(i).swap(m.row(j));
      for (int col = 0; col < d; ++col) m(i, col) = -m(i, col);
    } else {
      const Int c(static_cast<long>(rng.uniform(-5, 5)));
      for (int col = 0; col < d; ++col) m(i, col) += c * m(j, col);
    }
  }
  if (det_integer(m) != 1)
    throw Error("random_unimodular: generator produced det != 1");
  return m;
}

}  // namespace predraw
