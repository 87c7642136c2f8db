#include "shadowkit/binomial.hpp"

#include <array>

namespace shadowkit {

namespace {

// C(130,65) is the largest central coefficient below 2^127.
constexpr int kTableRows = 131;

using Row = std::array<ExactInt::rep, kTableRows>;

const std::array<Row, kTableRows>& pascal_table() {
    static const auto table = [] {
        std::array<Row, kTableRows> t{};
        for (int n = 0; n < kTableRows; ++n) {
            t[n][0] = 1;
            for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
        }
        return t;
    }();
    return table;
}

// C(n,k) for n >= k >= 0 by exact multiply-then-divide; each partial product is C(n,i).
ExactInt binom_nonneg(std::int64_t n, std::int64_t k) {
    if (k > n - k) k = n - k;
    if (n < kTableRows) return ExactInt::from_rep(pascal_table()[n][k]);
    ExactInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        const ExactInt g = gcd(r, i);
        r /= g;
        ExactInt factor = ExactInt(n - i + 1) / (ExactInt(i) / g);
        r *= factor;
    }
    return r;
}

}  // namespace

ExactInt binom(std::int64_t n, std::int64_t k, BinomialConvention conv) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n >= 0) return n < k ? ExactInt(0) : binom_nonneg(n, k);
    if (conv == BinomialConvention::strict) return 0;
    // C(n,k) = (-1)^k C(k-n-1, k) for n < 0.
    ExactInt upper = ExactInt(k) - n - 1;
    const ExactInt magnitude = binom_nonneg(upper.to_int64(), k);
    return (k % 2 == 0) ? magnitude : -magnitude;
}

}  // namespace shadowkit
