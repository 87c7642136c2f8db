#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "shadowkit/binomial.hpp"
#include "shadowkit/exact_int.hpp"
#include "shadowkit/seq.hpp"

namespace shadowkit {

// Lattice point (upper, lower) standing for C(upper, lower).
struct LatticePoint {
    std::int64_t upper = 0;
    std::int64_t lower = 0;

    auto operator<=>(const LatticePoint&) const = default;
};

// Formal integer combination of binomial coefficients. Zero coefficients are never stored;
// terms iterate in (upper, lower) lexicographic order.
class BinomialSum {
public:
    using Terms = std::map<LatticePoint, ExactInt>;

    BinomialSum() = default;

    void add(std::int64_t upper, std::int64_t lower, const ExactInt& coeff = 1);
    void add(const LatticePoint& p, const ExactInt& coeff = 1) { add(p.upper, p.lower, coeff); }

    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] ExactInt coefficient(const LatticePoint& p) const;

    [[nodiscard]] ExactInt eval(BinomialConvention conv = BinomialConvention::generalized) const;

    BinomialSum& operator+=(const BinomialSum& o);
    BinomialSum& operator-=(const BinomialSum& o);
    friend BinomialSum operator+(BinomialSum a, const BinomialSum& b) { return a += b; }
    friend BinomialSum operator-(BinomialSum a, const BinomialSum& b) { return a -= b; }

    bool operator==(const BinomialSum&) const = default;

private:
    Terms terms_;
};

// Shifts every term (upper, lower) to (upper + r, lower + slide).
BinomialSum translate(const BinomialSum& s, std::int64_t r, std::int64_t slide);

// Rewrites every term down to the minimum upper index with Pascal's rule and cancels.
// Two sums are translation-equivalent exactly when their normal forms coincide.
BinomialSum normal_form(const BinomialSum& s);

// True iff s vanishes under every translation.
bool is_invariantly_zero(const BinomialSum& s);

// Grid bounds for the empirical invariance check.
inline constexpr std::int64_t kGridLow = -4;
inline constexpr std::int64_t kGridHigh = 8;

// True iff eval(translate(s, r, t)) == 0 for every (r, t) in [lo, hi]^2.
bool vanishes_on_grid(const BinomialSum& s, std::int64_t lo = kGridLow, std::int64_t hi = kGridHigh);

// Sum over i of C(s_i, level - i).
BinomialSum expand(const Seq& s, std::int64_t level);

std::string to_string(const BinomialSum& s);

// Parses sums such as "C(1,0) - C(0,0) - 3*C(0,-1)".
BinomialSum parse_binomial_sum(std::string_view text);

}  // namespace shadowkit
