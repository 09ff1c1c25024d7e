#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lapspec/closed_form.hpp"
#include "lapspec/generators.hpp"

using namespace lapspec;

TEST_CASE("path closed form, n = 4") {
  const Spectrum s = path_spectrum_closed_form(4);
  // 4 sin^2(pi k / 8): 0, 2 - sqrt(2), 2, 2 + sqrt(2)
  CHECK(s.eigenvalues(0) == 0.0);
  CHECK(std::abs(s.eigenvalues(1) - (2.0 - std::sqrt(2.0))) <= 1e-15);
  CHECK(std::abs(s.eigenvalues(2) - 2.0) <= 1e-15);
  CHECK(std::abs(s.eigenvalues(3) - (2.0 + std::sqrt(2.0))) <= 1e-15);
}

TEST_CASE("path lambda_max stays below 4 for every n") {
  for (int n : {1, 2, 3, 10, 50, 200}) {
    const Spectrum s = path_spectrum_closed_form(n);
    CHECK(s.eigenvalues(n - 1) < 4.0);
    for (Index k = 0; k + 1 < n; ++k) CHECK(s.eigenvalues(k) < s.eigenvalues(k + 1));
  }
}

TEST_CASE("closed form matches the numeric solver (oracle agreement)") {
  for (int n = 1; n <= 50; ++n) {
    const Spectrum numeric = eig_symmetric<double>(laplacian(path(n)));
    const Spectrum exact = path_spectrum_closed_form(n);
    CHECK((numeric.eigenvalues - exact.eigenvalues).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("closed-form eigenvectors satisfy the eigen-equation and are orthonormal") {
  const int n = 12;
  const Matrix L = laplacian(path(n));
  const Spectrum s = path_spectrum_closed_form(n);
  for (Index k = 0; k < n; ++k)
    CHECK((L * s.eigenvectors.col(k) - s.eigenvalues(k) * s.eigenvectors.col(k)).norm() <= 1e-12);
  CHECK((s.eigenvectors.transpose() * s.eigenvectors - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("lattice closed form reduces to the path for d = 1") {
  const Spectrum a = lattice_spectrum_closed_form(9, 1);
  const Spectrum b = path_spectrum_closed_form(9);
  CHECK((a.eigenvalues - b.eigenvalues).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("lattice closed form matches the numeric solver on P_3 x P_3") {
  const Matrix L = laplacian(lattice(3, 2));
  const Spectrum numeric = eig_symmetric<double>(L);
  const Spectrum exact = lattice_spectrum_closed_form(3, 2);
  CHECK((numeric.eigenvalues - exact.eigenvalues).cwiseAbs().maxCoeff() <= 1e-9);
  // vertex ordering matches cartesian_product: the eigen-equation must hold
  for (Index k = 0; k < exact.size(); ++k)
    CHECK((L * exact.eigenvectors.col(k) - exact.eigenvalues(k) * exact.eigenvectors.col(k)).norm() <= 1e-12);
  CHECK((exact.eigenvectors.transpose() * exact.eigenvectors - Matrix::Identity(9, 9)).cwiseAbs().maxCoeff() <=
        1e-12);
}

TEST_CASE("3-cube spectrum has eigenvalue 4 with multiplicity 3") {
  const Spectrum s = lattice_spectrum_closed_form(2, 3);
  REQUIRE(s.size() == 8);
  const int mult = static_cast<int>(std::count_if(s.eigenvalues.data(), s.eigenvalues.data() + 8,
                                                  [](double v) { return std::abs(v - 4.0) <= 4e-8; }));
  CHECK(mult == 3);
  // cross-check against the numeric solver on the product graph
  const Spectrum numeric = eig_symmetric<double>(laplacian(lattice(2, 3)));
  CHECK((numeric.eigenvalues - s.eigenvalues).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("lattice size cap") {
  CHECK_THROWS_AS(lattice_spectrum_closed_form(100, 4), std::invalid_argument);
  CHECK_THROWS_AS(lattice_spectrum_closed_form(0, 2), std::invalid_argument);
}
