#pragma once

/**
 * @file sup.hpp
 * @brief Suprema of Gaussian polynomials over R^n.
 *
 * For n = 1 the supremum is certified by branch and bound. Candidate
 * maximizers come from the roots of the derivative of the objective
 * (bracketed on a probe grid and refined by bisection). Each cell
 * [c - r, c + r] of [-R, R] is then bounded with a second-order Taylor form
 *     |g(x)| <= |g(c)| + |g'(c)| r + (1/2) M2 r^2,   M2 = |g''(c)| + B3 r,
 * where B3 bounds |g'''| on the cell through Taylor-shifted polynomial
 * coefficients and the Gaussian factor's largest value on the cell. Where g
 * keeps its sign and is concave on the cell, the vertex bound
 * g(c) + g'(c)^2 / (2 |U|), with U an upper bound of g'' there, is used too.
 * Cells whose bound cannot beat the best value by more than the tolerance
 * are discarded. R is chosen
 * so that the Gaussian envelope beyond it is below 1e-15 times the
 * magnitude found on a probe grid, and past the point where that envelope
 * decreases.
 *
 * Complex functions are handled through |f|^2 = (Re f)^2 + (Im f)^2.
 *
 * For n >= 2 the result is an approximation: a tensor probe grid followed by
 * pattern-search refinement from the best grid points. The tolerance field
 * then reports the final pattern-search resolution, not a certificate.
 */

#include "fsem/gauss_poly.hpp"

#include <cstddef>

namespace fsem {

/// Relative accuracy targeted by the one-dimensional branch and bound.
inline constexpr double kSupRelTolerance = 1e-12;
/// Envelope threshold (relative to the probe magnitude) defining the search radius.
inline constexpr double kSupTailThreshold = 1e-15;

struct SupResult {
    double value = 0;       ///< best value found (a lower bound on the supremum)
    double tolerance = 0;   ///< supremum <= value + tolerance (certified when certified is true)
    bool certified = false; ///< true for the one-dimensional branch and bound
    double radius = 0;      ///< search radius R
    std::size_t cells = 0;  ///< cells examined (grid points for n >= 2)
};

/// sup over x of |f(x)|.
SupResult gp_sup_abs_report(const GaussPolyFn& f);
double gp_sup_abs(const GaussPolyFn& f);

/// sup over x of f(x) for a real-valued f (signed, so it may be negative
/// only in the limit; the supremum of a Schwartz function is at least 0).
/// Throws std::invalid_argument if f has a nonzero imaginary part.
SupResult gp_sup_real_report(const GaussPolyFn& f);

}  // namespace fsem
