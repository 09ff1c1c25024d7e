#ifndef LAPSPEC_EIGENSOLVER_HPP
#define LAPSPEC_EIGENSOLVER_HPP

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "lapspec/types.hpp"

namespace lapspec {

// Full eigendecomposition of a real symmetric matrix: ascending eigenvalues
// paired with orthonormal eigenvector columns.
template <class Scalar>
struct SpectrumT {
  VectorX<Scalar> eigenvalues;
  MatrixX<Scalar> eigenvectors;

  Index size() const { return eigenvalues.size(); }
  Scalar component(Index vertex, Index k) const { return eigenvectors(vertex, k); }
};

using Spectrum = SpectrumT<double>;

namespace detail {

// Householder reduction of a symmetric matrix to tridiagonal form (classic
// tred2 scheme). On return z holds the accumulated orthogonal transform and
// (diag, sub) the tridiagonal; sub(0) is unused.
template <class Scalar>
void tridiagonalize(MatrixX<Scalar>& z, VectorX<Scalar>& d, VectorX<Scalar>& e) {
  const Index n = z.rows();
  for (Index i = n - 1; i >= 1; --i) {
    const Index l = i - 1;
    Scalar h = 0;
    if (l > 0) {
      Scalar scale = 0;
      for (Index k = 0; k <= l; ++k) scale += std::abs(z(i, k));
      if (scale == Scalar(0)) {
        e(i) = z(i, l);
      } else {
        for (Index k = 0; k <= l; ++k) {
          z(i, k) /= scale;
          h += z(i, k) * z(i, k);
        }
        Scalar f = z(i, l);
        Scalar g = f >= 0 ? -std::sqrt(h) : std::sqrt(h);
        e(i) = scale * g;
        h -= f * g;
        z(i, l) = f - g;
        f = 0;
        for (Index j = 0; j <= l; ++j) {
          z(j, i) = z(i, j) / h;  // stash u/H for the accumulation pass
          g = 0;
          for (Index k = 0; k <= j; ++k) g += z(j, k) * z(i, k);
          for (Index k = j + 1; k <= l; ++k) g += z(k, j) * z(i, k);
          e(j) = g / h;
          f += e(j) * z(i, j);
        }
        const Scalar hh = f / (h + h);
        for (Index j = 0; j <= l; ++j) {
          f = z(i, j);
          e(j) = g = e(j) - hh * f;
          for (Index k = 0; k <= j; ++k) z(j, k) -= f * e(k) + g * z(i, k);
        }
      }
    } else {
      e(i) = z(i, l);
    }
    d(i) = h;
  }
  d(0) = 0;
  e(0) = 0;
  for (Index i = 0; i < n; ++i) {
    const Index l = i - 1;
    if (d(i) != Scalar(0)) {
      for (Index j = 0; j <= l; ++j) {
        Scalar g = 0;
        for (Index k = 0; k <= l; ++k) g += z(i, k) * z(k, j);
        for (Index k = 0; k <= l; ++k) z(k, j) -= g * z(k, i);
      }
    }
    d(i) = z(i, i);
    z(i, i) = 1;
    for (Index j = 0; j <= l; ++j) z(j, i) = z(i, j) = 0;
  }
}

// QL iteration with implicit Wilkinson shifts on the tridiagonal (d, e),
// rotations accumulated into z. `budget` caps the total number of implicit
// steps across all eigenvalues.
template <class Scalar>
void ql_implicit_shift(VectorX<Scalar>& d, VectorX<Scalar>& e, MatrixX<Scalar>& z, long budget) {
  const Index n = d.size();
  if (n <= 1) return;
  for (Index i = 1; i < n; ++i) e(i - 1) = e(i);
  e(n - 1) = 0;
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  long steps = 0;
  for (Index l = 0; l < n; ++l) {
    Index m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const Scalar dd = std::abs(d(m)) + std::abs(d(m + 1));
        if (std::abs(e(m)) <= eps * dd) break;
      }
      if (m != l) {
        if (++steps > budget) {
          throw std::runtime_error("eig_symmetric: no convergence after " + std::to_string(budget) +
                                   " implicit steps on a " + std::to_string(n) + "x" + std::to_string(n) +
                                   " matrix (residual off-diagonal " + std::to_string(std::abs(e(l))) + ")");
        }
        Scalar g = (d(l + 1) - d(l)) / (2 * e(l));
        Scalar r = std::hypot(g, Scalar(1));
        g = d(m) - d(l) + e(l) / (g + std::copysign(r, g));
        Scalar s = 1, c = 1, p = 0;
        bool underflow = false;
        for (Index i = m - 1; i >= l; --i) {
          Scalar f = s * e(i);
          const Scalar b = c * e(i);
          r = std::hypot(f, g);
          e(i + 1) = r;
          if (r == Scalar(0)) {
            d(i + 1) -= p;
            e(m) = 0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d(i + 1) - p;
          r = (d(i) - g) * s + 2 * c * b;
          p = s * r;
          d(i + 1) = g + p;
          g = c * r - b;
          for (Index k = 0; k < n; ++k) {
            f = z(k, i + 1);
            z(k, i + 1) = s * z(k, i) + c * f;
            z(k, i) = c * z(k, i) - s * f;
          }
        }
        if (underflow) continue;
        d(l) -= p;
        e(l) = g;
        e(m) = 0;
      }
    } while (m != l);
  }
}

}  // namespace detail

// Iteration budget per spec: 50*n implicit steps before declaring failure.
inline constexpr long kEigIterationsPerDim = 50;

// Dense symmetric eigendecomposition, self-contained (Householder
// tridiagonalization followed by implicit-shift QL). Deterministic for a
// fixed input; ties in the ascending sort keep the iteration's output order,
// and each eigenvector's largest-magnitude component is made positive.
template <class Scalar>
SpectrumT<Scalar> eig_symmetric(const MatrixX<Scalar>& a) {
  const Index n = a.rows();
  if (n < 1 || a.cols() != n) throw std::invalid_argument("eig_symmetric: matrix must be square and non-empty");
  const Scalar scale = std::max(Scalar(1), a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > Scalar(1e-12) * scale)
    throw std::invalid_argument("eig_symmetric: matrix is not symmetric");

  MatrixX<Scalar> z = a;
  VectorX<Scalar> d(n), e(n);
  detail::tridiagonalize(z, d, e);
  detail::ql_implicit_shift(d, e, z, kEigIterationsPerDim * static_cast<long>(n));

  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index(0));
  std::stable_sort(order.begin(), order.end(), [&](Index i, Index j) { return d(i) < d(j); });

  SpectrumT<Scalar> s;
  s.eigenvalues.resize(n);
  s.eigenvectors.resize(n, n);
  for (Index k = 0; k < n; ++k) {
    s.eigenvalues(k) = d(order[k]);
    s.eigenvectors.col(k) = z.col(order[k]);
    Index arg = 0;
    s.eigenvectors.col(k).cwiseAbs().maxCoeff(&arg);
    if (s.eigenvectors(arg, k) < 0) s.eigenvectors.col(k) = -s.eigenvectors.col(k);
  }
  return s;
}

// Row disk of a symmetric matrix: center a_ii, radius sum_{j != i} |a_ij|.
// For a Laplacian row both equal the vertex degree.
struct GerschgorinDisk {
  int vertex;
  double center;
  double radius;

  bool contains(double x, double tol = 0.0) const { return std::abs(x - center) <= radius + tol; }
};

inline std::vector<GerschgorinDisk> gerschgorin_disks(const Matrix& a) {
  const Index n = a.rows();
  std::vector<GerschgorinDisk> disks;
  disks.reserve(n);
  for (Index i = 0; i < n; ++i) {
    const double radius = a.row(i).cwiseAbs().sum() - std::abs(a(i, i));
    disks.push_back({static_cast<int>(i), a(i, i), radius});
  }
  return disks;
}

}  // namespace lapspec

#endif
