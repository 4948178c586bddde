#ifndef OCORR_GNP_EXACT_HPP
#define OCORR_GNP_EXACT_HPP

#include <memory>
#include <string>

#include "ocorr/cluster_engine.hpp"
#include "ocorr/poly.hpp"
#include "ocorr/sign_scan.hpp"

namespace ocorr {

enum class Model { gnp, gnm };
enum class Provenance { exact, asymptotic, monte_carlo };

struct CovarianceReport {
    int n = 0;
    Model model = Model::gnp;
    Rational param;      // p for gnp, m (as an integer rational) for gnm
    Rational not_reach;  // P(a -/-> s) = P(s -/-> b)
    Rational joint;      // P(a -/-> s, s -/-> b)
    Rational cov;        // joint - not_reach^2
    Rational relcov;     // cov / joint
    Provenance provenance = Provenance::exact;
    double stderr_cov = 0.0;  // Monte Carlo runs only
};

/// Default size guards; heavy computations need an explicit override.
struct Guards {
    static constexpr int symbolic_n_max = 40;
    static constexpr int numeric_n_max = 400;
};

/// Symbolic backend: full polynomials in p for every n up to n_max.
/// One table build serves all n <= n_max.
class GnpSymbolic {
public:
    explicit GnpSymbolic(int n_max, bool override_guard = false, int threads = 0,
                         Progress progress = nullptr);

    int n_max() const { return eng_.n_max(); }

    PolyP d_full(int k) const { return eng_.dd(k).to_polyp(); }
    PolyP d(int n, int k) const { return eng_.d(n, k).to_polyp(); }
    PolyP cluster_pair(int n, int k, int m, int r) const { return eng_.M(n, k, m, r).to_polyp(); }

    /// f_n(p) = P(s -/-> b) for two marked vertices.
    PolyP not_reach_poly(int n) { return eng_.f(n).to_polyp(); }
    /// g_n(p) = P(a -/-> s, s -/-> b) for three marked vertices.
    PolyP joint_poly(int n) { return eng_.g(n).to_polyp(); }
    /// g_n - f_n^2.
    PolyP cov_poly(int n) { return cov_w(n).to_polyp(); }

    CovarianceReport report(int n, const Rational& p);

    /// All sign changes of p -> cov(n,p) on (0,1], bisected to width <= tol.
    SignScan critical_ps(int n, const Rational& tol, int grid_points = 2048);

    /// Internal integer-coefficient forms, exposed for fast exact sign work.
    const WPoly& f_w(int n) { return eng_.f(n); }
    const WPoly& g_w(int n) { return eng_.g(n); }
    const WPoly& cov_w(int n);

private:
    ClusterEngine<PolyRing> eng_;
    std::map<int, WPoly> cov_cache_;
};

/// Exact-rational backend at a fixed p = a/b. Values are internally
/// integers scaled by (2b)^N(n); everything returned is a canonical
/// Rational. This is the reference numeric path (no rounding anywhere).
class GnpNumeric {
public:
    GnpNumeric(const Rational& p, int n_max, bool override_guard = false, int threads = 0,
               Progress progress = nullptr);

    int n_max() const { return eng_.n_max(); }
    const Rational& p() const { return eng_.ring().p(); }

    Rational d_full(int k) const;
    Rational d(int n, int k) const;
    Rational cluster_pair(int n, int k, int m, int r) const;
    Rational not_reach(int n);
    Rational joint(int n);

    CovarianceReport report(int n);

private:
    ClusterEngine<ScaledIntRing> eng_;
};

/// High-precision floating-point backend (speed over exactness); the
/// exact backends remain the reference.
class GnpFloat {
public:
    GnpFloat(const Rational& p, int n_max, mpfr_prec_t prec_bits = 2560,
             bool override_guard = false, int threads = 0, Progress progress = nullptr);

    int n_max() const { return eng_.n_max(); }

    Real not_reach(int n) { return eng_.f(n); }
    Real joint(int n) { return eng_.g(n); }
    Real cov(int n);
    Real relcov(int n);

private:
    ClusterEngine<FloatRing> eng_;
};

}  // namespace ocorr

#endif
