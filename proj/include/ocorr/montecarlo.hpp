#ifndef OCORR_MONTECARLO_HPP
#define OCORR_MONTECARLO_HPP

#include <cstdint>
#include <string>

#include "ocorr/gnp_exact.hpp"
#include "ocorr/oriented_graph.hpp"
#include "ocorr/philox.hpp"

namespace ocorr {

/// The three marked vertices in every sampler and oracle.
inline constexpr int kS = 0, kA = 1, kB = 2;

struct SimParams {
    Model model = Model::gnp;
    Rational p;   // gnp
    long m = 0;   // gnm
};

/// Seeded estimate with exact integer counts behind the decimals.
/// Identical (seed, trials) give bit-identical results regardless of
/// thread count: trials are split into fixed blocks, block b drawing
/// from RNG stream b, and counts merge by integer addition.
struct SimResult {
    int n = 0;
    Model model = Model::gnp;
    Rational param;
    long long trials = 0;
    uint64_t seed = 0;
    long long stream_blocks = 0;
    bool quenched = false;

    long long n_a = 0, n_b = 0, n_ab = 0;  // indicator counts (first orientation)
    long long n_prod = 0;                  // quenched: count of 1_A(O1) 1_B(O2)
    long long n_d2 = 0;                    // quenched: trials where the two differ

    double p_a() const { return (double)n_a / trials; }
    double p_b() const { return (double)n_b / trials; }
    double p_ab() const { return (double)n_ab / trials; }

    /// Annealed: p_ab - p_a p_b. Quenched: mean of 1_A(O1)1_B(O1) - 1_A(O1)1_B(O2),
    /// an unbiased estimate of E[Cov(A,B|G)].
    double cov() const;

    /// Exact rational forms of the estimates.
    Rational p_a_exact() const { return Rational(n_a, trials); }
    Rational p_ab_exact() const { return Rational(n_ab, trials); }
    Rational cov_exact() const;

    double se_a() const;
    /// Delta-method standard error of the covariance estimate.
    double se_cov() const;
    /// Leave-one-out jackknife standard error (validation fallback).
    double se_cov_jackknife() const;

    std::string to_json(int digits = 9) const;
};

/// One sampled orientation. gnp: each pair present independently with
/// probability p, then uniformly oriented; gnm: uniform m-subset of the
/// pairs, then uniform orientations.
void sample_oriented(OrientedGraph& g, const SimParams& params, Philox& rng);

SimResult estimate_annealed(int n, const SimParams& params, long long trials, uint64_t seed,
                            int threads = 0);

/// Quenched estimator: per sampled graph draw two independent
/// orientations; 1_A(O1)1_B(O1) estimates E[P(A cap B | G)] and
/// 1_A(O1)1_B(O2) estimates E[P(A|G) P(B|G)].
SimResult estimate_quenched(int n, const SimParams& params, long long graph_trials, uint64_t seed,
                            int threads = 0);

}  // namespace ocorr

#endif
