#ifndef OCORR_CLUSTER_ENGINE_HPP
#define OCORR_CLUSTER_ENGINE_HPP

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "ocorr/binomial.hpp"
#include "ocorr/error.hpp"
#include "ocorr/parallel.hpp"
#include "ocorr/rings.hpp"

namespace ocorr {

using Progress = std::function<void(const char* phase, long done, long total)>;

/// Cluster-size recursions for randomly oriented G(n,p), over an
/// abstract ring (symbolic polynomials, exact scaled integers at fixed
/// p, or high-precision floats).
///
/// Notation: y = 1-p/2, q = 1-p, N(x) = C(x,2). The engine stores
///   dd[k]      = P(out-cluster of s is a fixed k-set, on k vertices),
///   ext[t][u], strong[t]  -- see below,
/// and derives everything else.
///
/// The joint table M(n,k,m,0) = P(out-cluster = X, in-cluster = Y) with
/// |X| = k, |Y| = m, |X cap Y| = t = k+m-n obeys a recursion (peeling one
/// in-cluster vertex) that, for a fixed overlap t, is linear in the
/// previous values with the family index k entering only through a factor
/// y^(j(k-t)). Writing u = m-t, induction on u gives the product form
///
///   M(n,k,m,0) = y^((k-t)(m-t)) * ext[t][k-t] * ext[t][m-t] * strong[t],
///
/// where ext[t][u] satisfies the same one-dimensional recursion with the
/// y^(j(k-t)) factor dropped (ext[t][0] = 1), and strong[t] = M(t,t,t,0)
/// is the probability that the orientation on t vertices is strongly
/// connected. strong[t] itself follows from summing the product form over
/// all in-clusters inside a full out-cluster:
///   dd[t] = sum_m C(t-1,m-1) ext[m][t-m] strong[m].
/// This collapses the joint table to O(n^2) stored values and O(n^3)
/// ring operations, which is what makes n = 300 at fixed p tractable.
/// The product form is validated in the tests against the literal
/// recursion and against exhaustive 3^N enumeration.
template <class Ring>
class ClusterEngine {
public:
    using V = typename Ring::Value;

    ClusterEngine(Ring ring, int n_max, int threads = 0, Progress progress = nullptr)
        : ring_(std::move(ring)), n_(n_max), threads_(threads), progress_(std::move(progress)) {
        if (n_ < 1) throw DomainError("ClusterEngine: n_max must be >= 1");
        build();
    }

    int n_max() const { return n_; }
    const Ring& ring() const { return ring_; }

    /// N(x) = x(x-1)/2, the number of vertex pairs.
    static long pairs(long x) { return x * (x - 1) / 2; }

    /// d_p(k,k); ring scale exponent N(k).
    const V& dd(int k) const {
        check_range(k, 1, n_, "dd: k");
        return dd_[k];
    }

    /// Extension factors ext[t][u] (scale N(t+u) - N(t)).
    const V& ext(int t, int u) const {
        check_range(t, 1, n_, "ext: t");
        check_range(u, 0, n_ - t, "ext: u");
        return ext_[t][u];
    }

    /// strong[t] = M(t,t,t,0) (scale N(t)).
    const V& strong(int t) const {
        check_range(t, 1, n_, "strong: t");
        return strong_[t];
    }

    /// d_p(n,k) = d_p(k,k) y^(k(n-k)); scale N(n).
    V d(int n, int k) const {
        check_range(n, 1, n_, "d: n");
        check_range(k, 1, n, "d: k");
        V v = ring_.mul(dd_[k], ring_.ypow((long)k * (n - k)));
        return pad_mul(std::move(v), pairs(n - k));
    }

    /// M_p(n,k,m,r); scale N(n). Validates k+m > n-r >= k,m; k,m >= 1; r >= 0.
    V M(int n, int k, int m, int r) const {
        check_range(n, 1, n_, "M: n");
        if (k < 1 || m < 1 || r < 0 || k + m <= n - r || n - r < k || n - r < m)
            throw DomainError("M: index tuple violates k+m > n-r >= k,m; k,m >= 1; r >= 0");
        int j = k + m - (n - r);  // overlap |X cap Y|
        return m_term(n, j, k, m);
    }

    /// f_n = P(s does not reach b); scale N(n). Cached per n.
    const V& f(int n) {
        check_range(n, 2, n_, "f: n");
        auto it = f_cache_.find(n);
        if (it != f_cache_.end()) return it->second;
        V acc = ring_.zero();
        for (int k = 1; k <= n - 1; ++k) {
            V term = ring_.mul_int(dd_[k], binom_(n - 2, k - 1));
            term = ring_.mul(term, ring_.ypow((long)k * (n - k)));
            term = pad_mul(std::move(term), pairs(n - k));
            ring_.add_assign(acc, term);
        }
        return f_cache_.emplace(n, std::move(acc)).first->second;
    }

    /// g_n = P(a does not reach s and s does not reach b); scale N(n).
    const V& g(int n) {
        check_range(n, 3, n_, "g: n");
        auto it = g_cache_.find(n);
        if (it != g_cache_.end()) return it->second;

        std::vector<V> contrib((size_t)n - 1, ring_.zero());
        std::atomic<long> done{0};
        parallel_for(n - 2, threads_, [&](long idx) {
            int j = (int)idx + 1;
            V acc = ring_.zero();
            for (int k = j; k <= n - 1; ++k) {
                int m_hi = std::min(n - k + j, n);
                for (int m = std::max(k, j); m <= m_hi; ++m) {
                    long weight = (long)(n - k - 1) * (n - m - 1) + n - j - 1;
                    if (m == n || weight == 0) continue;  // zero-weight corner terms
                    Int coef = multinomial4(j - 1, m - j, k - j, n - k - m + j) * weight;
                    if (m > k) coef *= 2;  // M is symmetric in (k,m)
                    V term = m_term(n, j, k, m);
                    term = ring_.mul_int(term, coef);
                    ring_.add_assign(acc, term);
                }
            }
            contrib[j] = std::move(acc);
            report("g-gather", ++done, n - 2);
        });
        V acc = ring_.zero();
        for (int j = 1; j <= n - 2; ++j) ring_.add_assign(acc, contrib[j]);
        ring_.div_exact_ui(acc, (unsigned long)(n - 1) * (n - 2));
        return g_cache_.emplace(n, std::move(acc)).first->second;
    }

private:
    void check_range(int v, int lo, int hi, const char* what) const {
        if (v < lo || v > hi)
            throw DomainError(std::string(what) + " out of range [" + std::to_string(lo) + "," +
                              std::to_string(hi) + "]: " + std::to_string(v));
    }

    void report(const char* phase, long done, long total) const {
        if (progress_) progress_(phase, done, total);
    }

    V pad_mul(V v, long e) const {
        if (e > 0 && !ring_.trivial_pad()) v = ring_.mul(v, ring_.pad(e));
        return v;
    }

    /// One gathered M value: overlap class j at level n with cluster
    /// sizes (k,m), r = n-k-m+j outside vertices; scale N(n).
    V m_term(int n, int j, int k, int m) const {
        long r = (long)n - k - m + j;
        V v = ring_.ypow((long)(k - j) * (m - j));
        if (r > 0) {
            v = ring_.mul(v, ring_.qpow(r * j));
            long ye = r * ((long)k + m - 2 * j);
            if (ye > 0) v = ring_.mul(v, ring_.ypow(ye));
            v = pad_mul(std::move(v), pairs(r));
        }
        v = ring_.mul(v, strong_[j]);
        v = ring_.mul(v, ext_[j][k - j]);
        v = ring_.mul(v, ext_[j][m - j]);
        return v;
    }

    void build() {
        binom_.extend(n_ + 1);
        long pow_max = (long)n_ * n_ / 4 + n_ + 1;
        std::vector<long> pad_exps;
        for (int v = 0; v <= n_; ++v) {
            pad_exps.push_back(v);
            pad_exps.push_back(pairs(v));
        }
        ring_.reserve(pow_max, pow_max, pad_exps);

        // d_p(k,k), bottom-up: d(k,k) = 1 - sum_i C(k-1,i-1) d(i,i) y^(i(k-i)).
        dd_.assign(n_ + 1, ring_.zero());
        dd_[1] = ring_.one();
        for (int k = 2; k <= n_; ++k) {
            V acc = pad_one(pairs(k));
            for (int i = 1; i <= k - 1; ++i) {
                V term = ring_.mul_int(dd_[i], binom_(k - 1, i - 1));
                term = ring_.mul(term, ring_.ypow((long)i * (k - i)));
                term = pad_mul(std::move(term), pairs(k - i));
                ring_.sub_assign(acc, term);
            }
            dd_[k] = std::move(acc);
            report("d-table", k, n_);
        }

        // Extension factors, one independent chain per overlap class t:
        //   ext[t][u] = sum_j C(u-1,j-1) dd[j] q^((j-1)t) y^((j-1)(u-j))
        //               * (y^t - y^(u-j) q^t) * ext[t][u-j].
        ext_.assign(n_ + 1, {});
        std::atomic<long> classes_done{0};
        parallel_for(n_, threads_, [&](long idx) {
            int t = (int)idx + 1;
            int umax = n_ - t;
            std::vector<V> w((size_t)umax + (size_t)1, ring_.zero());
            for (int v = 0; v <= umax; ++v) {
                // W[v] = y^t - y^v q^t, carried at scale t+v.
                V hi = pad_mul(ring_.ypow(t), v);
                V lo = ring_.mul(ring_.ypow(v), ring_.qpow(t));
                ring_.sub_assign(hi, lo);
                w[v] = std::move(hi);
            }
            auto& chain = ext_[t];
            chain.assign((size_t)umax + (size_t)1, ring_.zero());
            chain[0] = ring_.one();
            for (int u = 1; u <= umax; ++u) {
                V acc = ring_.zero();
                for (int j = 1; j <= u; ++j) {
                    V term = ring_.mul_int(dd_[j], binom_(u - 1, j - 1));
                    long qe = (long)(j - 1) * t;
                    if (qe > 0) term = ring_.mul(term, ring_.qpow(qe));
                    long ye = (long)(j - 1) * (u - j);
                    if (ye > 0) term = ring_.mul(term, ring_.ypow(ye));
                    term = ring_.mul(term, w[u - j]);
                    if (u - j > 0) term = ring_.mul(term, chain[u - j]);
                    ring_.add_assign(acc, term);
                }
                chain[u] = std::move(acc);
            }
            report("overlap-classes", ++classes_done, n_);
        });

        // strong[t] from the full-out-cluster marginal:
        //   dd[t] = sum_m C(t-1,m-1) ext[m][t-m] strong[m].
        strong_.assign(n_ + 1, ring_.zero());
        strong_[1] = ring_.one();
        for (int t = 2; t <= n_; ++t) {
            V acc = dd_[t];
            for (int m = 1; m <= t - 1; ++m) {
                V term = ring_.mul(ext_[m][t - m], strong_[m]);
                term = ring_.mul_int(term, binom_(t - 1, m - 1));
                ring_.sub_assign(acc, term);
            }
            strong_[t] = std::move(acc);
        }
        report("strong", n_, n_);
    }

    V pad_one(long e) const {
        if (ring_.trivial_pad()) return ring_.one();
        V v = ring_.one();
        return ring_.mul(v, ring_.pad(e));
    }

    Ring ring_;
    int n_;
    int threads_;
    Progress progress_;
    BinomTable binom_;
    std::vector<V> dd_;
    std::vector<std::vector<V>> ext_;
    std::vector<V> strong_;
    std::map<int, V> f_cache_, g_cache_;
};

}  // namespace ocorr

#endif
