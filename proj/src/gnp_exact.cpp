#include "ocorr/gnp_exact.hpp"

namespace ocorr {

namespace {

void check_guard(int n_max, int guard, bool override_guard, const char* which) {
    if (n_max > guard && !override_guard)
        throw DomainError(std::string(which) + " backend refuses n_max > " +
                          std::to_string(guard) + " without an explicit override");
}

}  // namespace

GnpSymbolic::GnpSymbolic(int n_max, bool override_guard, int threads, Progress progress)
    : eng_((check_guard(n_max, Guards::symbolic_n_max, override_guard, "symbolic"), PolyRing()),
           n_max, threads, std::move(progress)) {}

const WPoly& GnpSymbolic::cov_w(int n) {
    auto it = cov_cache_.find(n);
    if (it != cov_cache_.end()) return it->second;
    const WPoly& fw = eng_.f(n);
    WPoly cov = eng_.g(n) - fw * fw;
    return cov_cache_.emplace(n, std::move(cov)).first->second;
}

CovarianceReport GnpSymbolic::report(int n, const Rational& p) {
    if (sgn(p) < 0 || p > 1) throw DomainError("report: p must be in [0,1]");
    CovarianceReport r;
    r.n = n;
    r.model = Model::gnp;
    r.param = p;
    r.not_reach = eng_.f(n).eval(p);
    r.joint = eng_.g(n).eval(p);
    r.cov = r.joint - r.not_reach * r.not_reach;
    if (sgn(r.joint) == 0) throw DomainError("report: relative covariance undefined (joint = 0)");
    r.relcov = r.cov / r.joint;
    r.provenance = Provenance::exact;
    return r;
}

SignScan GnpSymbolic::critical_ps(int n, const Rational& tol, int grid_points) {
    const WPoly& cov = cov_w(n);
    return find_sign_changes(
        [&cov](const Rational& p) { return cov.sign_at(p); }, Rational(0), Rational(1),
        grid_points, tol);
}

GnpNumeric::GnpNumeric(const Rational& p, int n_max, bool override_guard, int threads,
                       Progress progress)
    : eng_((check_guard(n_max, Guards::numeric_n_max, override_guard, "numeric"),
            ScaledIntRing(p)),
           n_max, threads, std::move(progress)) {}

Rational GnpNumeric::d_full(int k) const {
    return eng_.ring().to_rational(eng_.dd(k), ClusterEngine<ScaledIntRing>::pairs(k));
}

Rational GnpNumeric::d(int n, int k) const {
    return eng_.ring().to_rational(eng_.d(n, k), ClusterEngine<ScaledIntRing>::pairs(n));
}

Rational GnpNumeric::cluster_pair(int n, int k, int m, int r) const {
    return eng_.ring().to_rational(eng_.M(n, k, m, r), ClusterEngine<ScaledIntRing>::pairs(n));
}

Rational GnpNumeric::not_reach(int n) {
    return eng_.ring().to_rational(eng_.f(n), ClusterEngine<ScaledIntRing>::pairs(n));
}

Rational GnpNumeric::joint(int n) {
    return eng_.ring().to_rational(eng_.g(n), ClusterEngine<ScaledIntRing>::pairs(n));
}

CovarianceReport GnpNumeric::report(int n) {
    CovarianceReport r;
    r.n = n;
    r.model = Model::gnp;
    r.param = p();
    r.not_reach = not_reach(n);
    r.joint = joint(n);
    r.cov = r.joint - r.not_reach * r.not_reach;
    if (sgn(r.joint) == 0) throw DomainError("report: relative covariance undefined (joint = 0)");
    r.relcov = r.cov / r.joint;
    r.provenance = Provenance::exact;
    return r;
}

GnpFloat::GnpFloat(const Rational& p, int n_max, mpfr_prec_t prec_bits, bool override_guard,
                   int threads, Progress progress)
    : eng_((check_guard(n_max, Guards::numeric_n_max, override_guard, "float"),
            FloatRing(p, prec_bits)),
           n_max, threads, std::move(progress)) {}

Real GnpFloat::cov(int n) {
    Real f = eng_.f(n);
    return eng_.g(n) - f * f;
}

Real GnpFloat::relcov(int n) { return cov(n) / eng_.g(n); }

}  // namespace ocorr
