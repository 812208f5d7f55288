#pragma once

// Numeric thresholds used across the library. All geometric quantities are
// dimensionless (curvature -1 normalization), so these are absolute unless
// noted otherwise.
namespace cxhyp::tol {

inline constexpr double alg = 1e-9;     // algebraic identities on 3x3 arithmetic
inline constexpr double null = 1e-9;    // null-vector classification, relative to |v|^2
inline constexpr double unit = 1e-9;    // boundary-sphere membership
inline constexpr double cls = 1e-9;     // N-trichotomy band around 1
inline constexpr double geo = 1e-8;     // geometric incidence decisions
inline constexpr double cert = 1e-9;    // certificate inequalities
inline constexpr double pivot = 1e-12;  // Gram-Schmidt pivot under the indefinite form
inline constexpr double reunit = 1e-10; // J-unitarity residual that triggers re-projection

} // namespace cxhyp::tol
