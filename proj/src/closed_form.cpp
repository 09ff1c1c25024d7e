#include "lapspec/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lapspec {

Spectrum path_spectrum_closed_form(int n) {
  if (n < 1) throw std::invalid_argument("path_spectrum_closed_form: n must be >= 1");
  constexpr double pi = std::numbers::pi;
  Spectrum s;
  s.eigenvalues.resize(n);
  s.eigenvectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    const double sk = std::sin(pi * k / (2.0 * n));
    s.eigenvalues(k) = 4.0 * sk * sk;
    for (int j = 0; j < n; ++j) s.eigenvectors(j, k) = std::cos(pi * k * (j + 0.5) / n);
    s.eigenvectors.col(k).normalize();
  }
  return s;
}

Spectrum lattice_spectrum_closed_form(int n, int d, Index max_size) {
  if (n < 1 || d < 1) throw std::invalid_argument("lattice_spectrum_closed_form: n and d must be >= 1");
  double size_check = 1;
  for (int i = 0; i < d; ++i) size_check *= n;
  if (size_check > static_cast<double>(max_size))
    throw std::invalid_argument("lattice_spectrum_closed_form: n^d = " + std::to_string(size_check) +
                                " exceeds the cap " + std::to_string(max_size));
  const Index total = static_cast<Index>(size_check);
  constexpr double pi = std::numbers::pi;

  // Per-axis eigenvalue terms and cosine factors.
  Matrix sin2(n, 1), cosines(n, n);  // cosines(x, j) = cos(j pi (x+1/2) / n)
  for (int j = 0; j < n; ++j) {
    const double sj = std::sin(j * pi / (2.0 * n));
    sin2(j, 0) = sj * sj;
    for (int x = 0; x < n; ++x) cosines(x, j) = std::cos(j * pi * (x + 0.5) / n);
  }

  std::vector<std::vector<int>> tuples(total, std::vector<int>(d, 0));
  Vector lambdas(total);
  std::vector<int> tup(d, 0);
  for (Index rank = 0; rank < total; ++rank) {
    double lam = 0;
    for (int i = 0; i < d; ++i) lam += sin2(tup[i], 0);
    lambdas(rank) = 4.0 * lam;
    tuples[rank] = tup;
    for (int i = d - 1; i >= 0; --i) {
      if (++tup[i] < n) break;
      tup[i] = 0;
    }
  }

  std::vector<Index> order(total);
  std::iota(order.begin(), order.end(), Index(0));
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return lambdas(a) < lambdas(b); });

  Spectrum s;
  s.eigenvalues.resize(total);
  s.eigenvectors.resize(total, total);
  std::vector<int> coord(d, 0);
  for (Index k = 0; k < total; ++k) {
    const auto& js = tuples[order[k]];
    s.eigenvalues(k) = lambdas(order[k]);
    std::fill(coord.begin(), coord.end(), 0);
    for (Index v = 0; v < total; ++v) {
      double value = 1.0;
      for (int i = 0; i < d; ++i) value *= cosines(coord[i], js[i]);
      s.eigenvectors(v, k) = value;
      for (int i = d - 1; i >= 0; --i) {
        if (++coord[i] < n) break;
        coord[i] = 0;
      }
    }
    s.eigenvectors.col(k).normalize();
  }
  return s;
}

}  // namespace lapspec
