#ifndef LAPSPEC_TYPES_HPP
#define LAPSPEC_TYPES_HPP

#include <Eigen/Dense>

namespace lapspec {

using Index = Eigen::Index;

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<double>;
using Vector = VectorX<double>;

namespace detail {
inline double& eq_tolerance_storage() {
  static double tol = 1e-8;
  return tol;
}
}  // namespace detail

// Relative equality tolerance for eigenvalue comparisons:
// a == b  iff  |a - b| <= eq_tolerance() * max(1, |a|).
// The default 1e-8 is authoritative; the CLI honors LAPSPEC_TOL at startup.
inline double eq_tolerance() { return detail::eq_tolerance_storage(); }
inline void set_eq_tolerance(double tol) { detail::eq_tolerance_storage() = tol; }

inline bool eigenvalues_equal(double a, double b) {
  return std::abs(a - b) <= eq_tolerance() * std::max(1.0, std::abs(a));
}

inline constexpr double kResidualTol = 1e-8;       // ||L*phi - lambda*phi||
inline constexpr double kOrthogonalityTol = 1e-8;  // |phi_i . phi_k|, i != k
inline constexpr double kUnitNormTol = 1e-10;      // | ||phi|| - 1 |
inline constexpr double kPsdTol = 1e-9;            // lambda_0 >= -kPsdTol
inline constexpr double kDecaySlack = 1e-10;       // decay-ratio slack
inline constexpr double kZeroBranchTol = 1e-10;    // all-zero branch threshold
inline constexpr double kBoundSlack = 1e-9;        // BoundCheck: lhs <= rhs + slack
inline constexpr double kPerturbationSlack = 1e-12;
inline constexpr double kLatticeSumTol = 1e-12;    // sine-sum counting tolerance

}  // namespace lapspec

#endif
