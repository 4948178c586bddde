#include "ocorr/sign_scan.hpp"

#include "ocorr/error.hpp"

namespace ocorr {

namespace {

RootLoc refine(const std::function<int(const Rational&)>& sign_of, Rational lo, Rational hi,
               int s_lo, int s_hi, const Rational& tol) {
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        int s = sign_of(mid);
        if (s == 0) {
            RootLoc r;
            r.point = mid;
            r.width = 0;
            r.exact = true;
            r.bracket = {mid, mid, 0, 0};
            return r;
        }
        if (s == s_lo)
            lo = mid;
        else
            hi = mid;
    }
    RootLoc r;
    r.point = (lo + hi) / 2;
    r.width = hi - lo;
    r.exact = false;
    r.bracket = {lo, hi, s_lo, s_hi};
    return r;
}

}  // namespace

SignScan find_sign_changes(const std::function<int(const Rational&)>& sign_of, const Rational& lo,
                           const Rational& hi, int grid_points, const Rational& tol) {
    if (grid_points < 2) throw DomainError("find_sign_changes: grid_points must be >= 2");
    if (!(lo < hi)) throw DomainError("find_sign_changes: empty interval");
    if (sgn(tol) <= 0) throw DomainError("find_sign_changes: tol must be > 0");

    SignScan out;
    Rational step = (hi - lo) / grid_points;
    std::vector<long> root_cells;

    Rational x_prev = lo + step;
    int s_prev = sign_of(x_prev);
    if (s_prev == 0) {
        RootLoc r;
        r.point = x_prev;
        r.width = 0;
        r.exact = true;
        r.bracket = {x_prev, x_prev, 0, 0};
        out.roots.push_back(r);
        root_cells.push_back(1);
    }
    for (int i = 2; i <= grid_points; ++i) {
        Rational x = lo + step * i;
        int s = sign_of(x);
        if (s == 0) {
            RootLoc r;
            r.point = x;
            r.width = 0;
            r.exact = true;
            r.bracket = {x, x, 0, 0};
            out.roots.push_back(r);
            root_cells.push_back(i);
        } else if (s_prev != 0 && s != s_prev) {
            out.roots.push_back(refine(sign_of, x_prev, x, s_prev, s, tol));
            root_cells.push_back(i);
        }
        x_prev = x;
        s_prev = s;
    }

    for (size_t i = 1; i < root_cells.size(); ++i) {
        if (root_cells[i] - root_cells[i - 1] <= 1) {
            out.warnings.push_back(
                "roots found in adjacent grid cells; multiple roots per cell cannot be "
                "detected -- raise grid_points to be safe");
            break;
        }
    }
    return out;
}

SignScan find_sign_changes(const std::function<Rational(const Rational&)>& f, const Rational& lo,
                           const Rational& hi, int grid_points, const Rational& tol) {
    return find_sign_changes([&f](const Rational& x) { return sign(f(x)); }, lo, hi, grid_points,
                             tol);
}

}  // namespace ocorr
