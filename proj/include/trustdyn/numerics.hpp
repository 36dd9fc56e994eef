#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>

namespace trustdyn {

// x^n for integer n >= 0 by iterated multiplication. Exponents here never
// exceed N - 1, and avoiding transcendental pow keeps results bit-identical
// across platforms and identical to the running-power chains in the sums.
inline double pow_int(double x, int n) {
  double acc = 1.0;
  for (int k = 0; k < n; ++k) acc *= x;
  return acc;
}

// Sum_{k=0}^{m-1} z^k: the geometric-sum form of (1 - z^m)/(1 - z),
// finite and continuous at z = 1.
inline double geom_sum(double z, int m) {
  double s = 0.0, p = 1.0;
  for (int k = 0; k < m; ++k) {
    s += p;
    p *= z;
  }
  return s;
}

// d/dz of geom_sum: Sum_{k=1}^{m-1} k z^{k-1}.
inline double geom_sum_deriv(double z, int m) {
  double s = 0.0, p = 1.0;
  for (int k = 1; k < m; ++k) {
    s += k * p;
    p *= z;
  }
  return s;
}

// Sum_{k=0}^{m-1} a^{m-1-k} b^k: the divided-difference form of
// (a^m - b^m)/(a - b), finite at a = b. Horner-style recurrence.
inline double divided_difference(double a, double b, int m) {
  double s = 0.0, bp = 1.0;
  for (int k = 0; k < m; ++k) {
    s = a * s + bp;
    bp *= b;
  }
  return s;
}

// d/db of b * divided_difference(a, b, m): Sum_{k=0}^{m-1} (k+1) a^{m-1-k} b^k.
inline double divided_difference_b_deriv(double a, double b, int m) {
  double s = 0.0, bp = 1.0;
  for (int k = 0; k < m; ++k) {
    s = a * s + (k + 1) * bp;
    bp *= b;
  }
  return s;
}

// |a - b| measured against max(1, |a|, |b|).
inline bool rel_close(double a, double b, double tol) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= tol * scale;
}

// Bisection for fn with a sign change between lo and hi. Converges to `tol`
// absolute interval width within `max_iter` halvings; callers guarantee the
// sign change (all roots in this library come from proven-monotone functions).
inline double bisect(const std::function<double(double)>& fn, double lo, double hi,
                     double tol = 1e-12, int max_iter = 200) {
  double flo = fn(lo);
  if (flo == 0.0) return lo;
  if (fn(hi) == 0.0) return hi;
  const bool lo_neg = flo < 0.0;
  for (int it = 0; it < max_iter && (hi - lo) > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = fn(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == lo_neg)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

struct Matrix2 {
  double a11 = 0, a12 = 0, a21 = 0, a22 = 0;
};

// Eigenvalues of a real 2x2 matrix from trace and determinant, ordered by
// ascending real part (equal real parts: ascending imaginary part).
inline std::array<std::complex<double>, 2> eigenvalues(const Matrix2& m) {
  const double half_tr = 0.5 * (m.a11 + m.a22);
  const double det = m.a11 * m.a22 - m.a12 * m.a21;
  const double disc = half_tr * half_tr - det;
  if (disc >= 0.0) {
    const double root = std::sqrt(disc);
    return {std::complex<double>(half_tr - root, 0.0),
            std::complex<double>(half_tr + root, 0.0)};
  }
  const double root = std::sqrt(-disc);
  return {std::complex<double>(half_tr, -root),
          std::complex<double>(half_tr, root)};
}

}  // namespace trustdyn
