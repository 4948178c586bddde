#include "ocorr/montecarlo.hpp"

#include <cmath>
#include <json.hpp>

#include "ocorr/parallel.hpp"

namespace ocorr {

namespace {

constexpr long long kBlock = 1 << 16;

// floor(p * 2^64); p = 1 is handled by the caller.
uint64_t presence_threshold(const Rational& p) {
    Int t = (p.get_num() << 64) / p.get_den();
    uint64_t lo = mpz_get_ui(t.get_mpz_t());
    if (mpz_sizeinbase(t.get_mpz_t(), 2) > 64) return ~uint64_t(0);
    return lo;
}

uint64_t uniform_below(Philox& rng, uint64_t range) {
    uint64_t lim = ~uint64_t(0) - ~uint64_t(0) % range;
    uint64_t r;
    do {
        r = rng.next_u64();
    } while (r >= lim);
    return r % range;
}

struct EdgeList {
    std::vector<std::pair<int, int>> pairs;  // lexicographic (i<j)
    explicit EdgeList(int n) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
};

struct Sampler {
    const SimParams& params;
    EdgeList edges;
    uint64_t thr;
    bool always, never;
    std::vector<int> perm;         // for gnm subset draws
    std::vector<int> present;      // indices of present edges

    Sampler(int n, const SimParams& p) : params(p), edges(n) {
        if (p.model == Model::gnp) {
            if (sgn(p.p) < 0 || p.p > 1) throw DomainError("sample: p must be in [0,1]");
            always = p.p == 1;
            never = sgn(p.p) == 0;
            thr = (always || never) ? 0 : presence_threshold(p.p);
        } else {
            if (p.m < 0 || p.m > (long)edges.pairs.size())
                throw DomainError("sample: m out of range");
            always = never = false;
            thr = 0;
            perm.resize(edges.pairs.size());
        }
    }

    // Chooses the present edge set for one trial.
    void draw_present(Philox& rng) {
        present.clear();
        if (params.model == Model::gnp) {
            if (never) return;
            for (int e = 0; e < (int)edges.pairs.size(); ++e) {
                if (always || rng.next_u64() < thr) present.push_back(e);
            }
        } else {
            for (int i = 0; i < (int)perm.size(); ++i) perm[i] = i;
            for (long i = 0; i < params.m; ++i) {
                long j = i + (long)uniform_below(rng, perm.size() - i);
                std::swap(perm[i], perm[j]);
                present.push_back(perm[i]);
            }
        }
    }

    void orient(OrientedGraph& g, Philox& rng) const {
        g.clear();
        for (int e : present) {
            auto [i, j] = edges.pairs[e];
            if (rng.next_u32() & 1)
                g.add_edge(i, j);
            else
                g.add_edge(j, i);
        }
    }
};

struct Counts {
    long long a = 0, b = 0, ab = 0, prod = 0, d2 = 0;
    void operator+=(const Counts& o) {
        a += o.a;
        b += o.b;
        ab += o.ab;
        prod += o.prod;
        d2 += o.d2;
    }
};

template <class PerTrial>
SimResult run_blocks(int n, const SimParams& params, long long trials, uint64_t seed, int threads,
                     bool quenched, PerTrial per_trial) {
    if (n < 3) throw DomainError("estimate: need n >= 3 (vertices s,a,b distinct)");
    if (n > 64) throw DomainError("estimate: samplers support n <= 64");
    if (trials < 1) throw DomainError("estimate: trials must be >= 1");
    long long blocks = (trials + kBlock - 1) / kBlock;
    std::vector<Counts> per_block(blocks);
    parallel_for(blocks, threads, [&](long b) {
        long long lo = b * kBlock, hi = std::min<long long>(trials, lo + kBlock);
        Philox rng(seed, (uint64_t)b);
        Sampler sampler(n, params);
        OrientedGraph g1(n), g2(n);
        Counts c;
        for (long long t = lo; t < hi; ++t) per_trial(sampler, rng, g1, g2, c);
        per_block[b] = c;
    });
    Counts total;
    for (const auto& c : per_block) total += c;

    SimResult r;
    r.n = n;
    r.model = params.model;
    r.param = params.model == Model::gnp ? params.p : Rational((long)params.m);
    r.trials = trials;
    r.seed = seed;
    r.stream_blocks = blocks;
    r.quenched = quenched;
    r.n_a = total.a;
    r.n_b = total.b;
    r.n_ab = total.ab;
    r.n_prod = total.prod;
    r.n_d2 = total.d2;
    return r;
}

}  // namespace

void sample_oriented(OrientedGraph& g, const SimParams& params, Philox& rng) {
    Sampler sampler(g.n(), params);
    sampler.draw_present(rng);
    sampler.orient(g, rng);
}

SimResult estimate_annealed(int n, const SimParams& params, long long trials, uint64_t seed,
                            int threads) {
    return run_blocks(n, params, trials, seed, threads, false,
                      [](Sampler& sampler, Philox& rng, OrientedGraph& g, OrientedGraph&,
                         Counts& c) {
                          sampler.draw_present(rng);
                          sampler.orient(g, rng);
                          bool a = !g.reaches(kA, kS);
                          bool b = !g.reaches(kS, kB);
                          c.a += a;
                          c.b += b;
                          c.ab += a && b;
                      });
}

SimResult estimate_quenched(int n, const SimParams& params, long long graph_trials, uint64_t seed,
                            int threads) {
    return run_blocks(n, params, graph_trials, seed, threads, true,
                      [](Sampler& sampler, Philox& rng, OrientedGraph& g1, OrientedGraph& g2,
                         Counts& c) {
                          sampler.draw_present(rng);
                          sampler.orient(g1, rng);
                          sampler.orient(g2, rng);
                          bool a1 = !g1.reaches(kA, kS);
                          bool b1 = !g1.reaches(kS, kB);
                          bool b2 = !g2.reaches(kS, kB);
                          int x = a1 && b1, y = a1 && b2;
                          c.a += a1;
                          c.b += b1;
                          c.ab += x;
                          c.prod += y;
                          c.d2 += x != y;
                      });
}

double SimResult::cov() const {
    if (quenched) return (double)(n_ab - n_prod) / trials;
    return p_ab() - p_a() * p_b();
}

Rational SimResult::cov_exact() const {
    Rational t((long)trials);
    if (quenched) return Rational(n_ab - n_prod, trials);
    return Rational(n_ab, trials) - Rational(n_a, trials) * Rational(n_b, trials);
}

double SimResult::se_a() const {
    double pa = p_a();
    return std::sqrt(pa * (1 - pa) / trials);
}

double SimResult::se_cov() const {
    double t = (double)trials;
    if (quenched) {
        // d = x - y has d^2 = [x != y]; se of mean(d).
        double mean_d = (double)(n_ab - n_prod) / t;
        double var_d = (double)n_d2 / t - mean_d * mean_d;
        return std::sqrt(std::max(0.0, var_d) / t);
    }
    // Influence function of p_ab - p_a p_b.
    double pa = p_a(), pb = p_b(), pab = p_ab();
    double p11 = pab, p10 = pa - pab, p01 = pb - pab;
    double h11 = 1 - pa - pb, h10 = -pb, h01 = -pa;
    double eh = p11 * h11 + p10 * h10 + p01 * h01;
    double eh2 = p11 * h11 * h11 + p10 * h10 * h10 + p01 * h01 * h01;
    return std::sqrt(std::max(0.0, eh2 - eh * eh) / t);
}

double SimResult::se_cov_jackknife() const {
    double t = (double)trials;
    auto theta_without = [&](long long da, long long db, long long dab) {
        double tt = t - 1;
        return (n_ab - dab) / tt - (n_a - da) / tt * ((n_b - db) / tt);
    };
    long long c11, c10, c01, c00;
    double th11, th10, th01, th00;
    if (quenched) {
        // Cells of d = x - y: +1, -1, 0.
        c11 = (n_d2 + (n_ab - n_prod)) / 2;  // d = +1
        c10 = n_d2 - c11;                    // d = -1
        c01 = 0;
        c00 = trials - n_d2;
        double s = (double)(n_ab - n_prod);
        th11 = (s - 1) / (t - 1);
        th10 = (s + 1) / (t - 1);
        th01 = 0;
        th00 = s / (t - 1);
    } else {
        c11 = n_ab;
        c10 = n_a - n_ab;
        c01 = n_b - n_ab;
        c00 = trials - n_a - n_b + n_ab;
        th11 = theta_without(1, 1, 1);
        th10 = theta_without(1, 0, 0);
        th01 = theta_without(0, 1, 0);
        th00 = theta_without(0, 0, 0);
    }
    double mean =
        (c11 * th11 + c10 * th10 + c01 * th01 + c00 * th00) / t;
    auto sq = [&](double v) { return (v - mean) * (v - mean); };
    double ssq = c11 * sq(th11) + c10 * sq(th10) + c01 * sq(th01) + c00 * sq(th00);
    return std::sqrt((t - 1) / t * ssq);
}

std::string SimResult::to_json(int digits) const {
    nlohmann::json j;
    j["n"] = n;
    j["model"] = model == Model::gnp ? "gnp" : "gnm";
    j["param"] = to_fraction_string(param);
    j["trials"] = trials;
    j["seed"] = seed;
    j["stream_blocks"] = stream_blocks;
    j["quenched"] = quenched;
    j["counts"] = {{"a", n_a}, {"b", n_b}, {"ab", n_ab}, {"prod", n_prod}, {"d2", n_d2}};
    j["p_a"] = to_decimal_string(p_a_exact(), digits);
    j["p_ab"] = to_decimal_string(p_ab_exact(), digits);
    j["cov"] = to_decimal_string(cov_exact(), digits);
    j["se_cov"] = se_cov();
    j["se_a"] = se_a();
    return j.dump(2);
}

}  // namespace ocorr
