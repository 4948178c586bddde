#ifndef OCORR_SIGN_SCAN_HPP
#define OCORR_SIGN_SCAN_HPP

#include <functional>
#include <string>
#include <vector>

#include "ocorr/rational.hpp"

namespace ocorr {

/// An interval with exact signs at its endpoints.
struct Bracket {
    Rational lo, hi;
    int sign_lo = 0, sign_hi = 0;
};

struct RootLoc {
    Rational point;     // exact root, or midpoint of the final bracket
    Rational width;     // 0 for exact roots
    bool exact = false; // the evaluator returned exactly 0 here
    Bracket bracket;    // final bracket (endpoints equal for exact roots)
};

struct SignScan {
    std::vector<RootLoc> roots;           // strictly increasing
    std::vector<std::string> warnings;    // e.g. grid possibly too coarse
};

/// Scans the half-open interval (lo, hi] on a uniform grid of
/// `grid_points` points, brackets each sign change and refines it by
/// bisection to width <= tol. Signs are exact, so a bracketed root is
/// guaranteed. A sign change spanning an even number of roots inside
/// one grid cell is invisible; adjacent-cell roots trigger a warning
/// suggesting a finer grid.
SignScan find_sign_changes(const std::function<int(const Rational&)>& sign_of,
                           const Rational& lo, const Rational& hi, int grid_points,
                           const Rational& tol);

/// Convenience overload for a full evaluator (sign taken of the value).
SignScan find_sign_changes(const std::function<Rational(const Rational&)>& f, const Rational& lo,
                           const Rational& hi, int grid_points, const Rational& tol);

}  // namespace ocorr

#endif
