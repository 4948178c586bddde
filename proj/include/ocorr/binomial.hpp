#ifndef OCORR_BINOMIAL_HPP
#define OCORR_BINOMIAL_HPP

#include <vector>

#include "ocorr/rational.hpp"

namespace ocorr {

/// Memoized Pascal triangle. Rows are built once (extend is not
/// thread-safe); lookups after that are read-only and shareable.
class BinomTable {
public:
    BinomTable() = default;
    explicit BinomTable(int n_max) { extend(n_max); }

    void extend(int n_max);

    /// C(n,k); 0 when k < 0 or k > n. Extends the table if needed.
    const Int& operator()(long n, long k);

    int rows() const { return (int)rows_.size() - 1; }

private:
    std::vector<std::vector<Int>> rows_;
    Int zero_{0};
};

/// One-off exact binomial via GMP (no table).
Int binomial(unsigned long n, unsigned long k);

/// (a+b+c+d)! / (a! b! c! d!), all parts >= 0.
Int multinomial4(long a, long b, long c, long d);

}  // namespace ocorr

#endif
