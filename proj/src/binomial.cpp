#include "ocorr/binomial.hpp"

namespace ocorr {

void BinomTable::extend(int n_max) {
    if (n_max < 0) return;
    int start = (int)rows_.size();
    if (start > n_max) return;
    rows_.resize(n_max + 1);
    for (int n = start; n <= n_max; ++n) {
        auto& row = rows_[n];
        row.resize(n + 1);
        row[0] = 1;
        row[n] = 1;
        for (int k = 1; k < n; ++k) row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    }
}

const Int& BinomTable::operator()(long n, long k) {
    if (n < 0 || k < 0 || k > n) return zero_;
    if (n >= (long)rows_.size()) extend((int)n);
    return rows_[n][k];
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    if (k > n) return r;  // 0
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int multinomial4(long a, long b, long c, long d) {
    if (a < 0 || b < 0 || c < 0 || d < 0) return Int(0);
    unsigned long n = (unsigned long)(a + b + c + d);
    Int r = binomial(n, (unsigned long)a);
    r *= binomial((unsigned long)(b + c + d), (unsigned long)b);
    r *= binomial((unsigned long)(c + d), (unsigned long)c);
    return r;
}

}  // namespace ocorr
