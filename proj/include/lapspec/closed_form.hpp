#ifndef LAPSPEC_CLOSED_FORM_HPP
#define LAPSPEC_CLOSED_FORM_HPP

#include "lapspec/eigensolver.hpp"

namespace lapspec {

// Exact path spectrum: lambda_k = 4 sin^2(pi k / 2n) with DCT-II eigenvectors
// phi_{j,k} = cos(pi k (j + 1/2) / n), unit-normalized. Ascending in k.
Spectrum path_spectrum_closed_form(int n);

// Exact spectrum of the d-fold Cartesian product of P_n with itself:
// lambda_{j1..jd} = 4 sum_i sin^2(j_i pi / 2n), product-cosine eigenvectors.
// Vertex order is row-major (first coordinate most significant), matching
// lattice()/cartesian_product(). Sorted ascending, ties in tuple-rank order.
Spectrum lattice_spectrum_closed_form(int n, int d, Index max_size = Index(1) << 20);

}  // namespace lapspec

#endif
