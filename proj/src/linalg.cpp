// Exact roots and characteristic polynomials.
#include "ht/linalg.h"

namespace ht {

std::optional<Integer> integer_root(const Integer& x, int k) {
  if (k < 1) return std::nullopt;
  if (x < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = integer_root(-x, k);
    if (!r) return std::nullopt;
    return Integer(-*r);
  }
  if (x < 2) return x;
  // Bisection on [0, 2^(bits/k + 1)].
  std::size_t bits = boost::multiprecision::msb(x) + 1;
  Integer lo = 0, hi = Integer(1) << (bits / k + 1);
  while (lo < hi) {
    Integer mid = (lo + hi + 1) / 2;
    if (boost::multiprecision::pow(mid, k) <= x)
      lo = mid;
    else
      hi = mid - 1;
  }
  if (boost::multiprecision::pow(lo, k) == x) return lo;
  return std::nullopt;
}

std::optional<Rational> rational_root(const Rational& x, int k) {
  auto n = integer_root(boost::multiprecision::numerator(x), k);
  auto d = integer_root(boost::multiprecision::denominator(x), k);
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

// Faddeev-LeVerrier over Q.
std::vector<Rational> char_poly(const Mat<Rational>& a) {
  std::size_t n = a.size();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  Mat<Rational> m(n, std::vector<Rational>(n, Rational(0)));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    Mat<Rational> mk = matmul(a, m);
    for (std::size_t i = 0; i < n; ++i) mk[i][i] += c[n - k + 1];
    Mat<Rational> am = matmul(a, mk);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
    m = std::move(mk);
  }
  return c;
}

}  // namespace ht
