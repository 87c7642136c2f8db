#include "shadowkit/seq.hpp"

#include <algorithm>

#include "shadowkit/errors.hpp"

namespace shadowkit {

namespace {

bool binom_at_most(std::int64_t x, std::int64_t level, const ExactInt& bound) {
    try {
        return binom(x, level) <= bound;
    } catch (const OverflowError&) {
        return false;
    }
}

// Largest x >= level with C(x, level) <= bound, given bound >= 1.
std::int64_t largest_upper(std::int64_t level, const ExactInt& bound) {
    std::int64_t lo = level;
    std::int64_t step = 1;
    while (binom_at_most(lo + step, level, bound)) {
        lo += step;
        step *= 2;
    }
    std::int64_t hi = lo + step;  // C(hi, level) > bound
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (binom_at_most(mid, level, bound)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

}  // namespace

ExactInt seq_value(const Seq& s, std::int64_t level, BinomialConvention conv) {
    ExactInt total;
    std::int64_t lower = level;
    for (const std::int64_t a : s.terms()) total += binom(a, lower--, conv);
    return total;
}

ExactInt seq_shift(const Seq& s, std::int64_t i, std::int64_t j, std::int64_t level, BinomialConvention conv) {
    ExactInt total;
    std::int64_t lower = level - j;
    for (const std::int64_t a : s.terms()) total += binom(a - i, lower--, conv);
    return total;
}

Seq decompose(const ExactInt& m, std::int64_t k) {
    if (m < 0) throw PreconditionError("decompose requires m >= 0");
    if (k < 1) throw PreconditionError("decompose requires k >= 1");
    Seq out;
    ExactInt rest = m;
    for (std::int64_t level = k; level >= 1 && rest > 0; --level) {
        const std::int64_t a = largest_upper(level, rest);
        out.push_back(a);
        rest -= binom(a, level);
    }
    return out;
}

std::strong_ordering lex_cmp(const Seq& a, const Seq& b) {
    const auto x = a.terms();
    const auto y = b.terms();
    const std::size_t common = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (x[i] != y[i]) return x[i] <=> y[i];
    }
    return x.size() <=> y.size();
}

Seq seq_minus(const Seq& s, std::int64_t d) {
    std::vector<std::int64_t> out(s.terms().begin(), s.terms().end());
    for (auto& v : out) v -= d;
    return Seq(std::move(out));
}

bool is_strictly_decreasing(const Seq& s) {
    const auto t = s.terms();
    return std::adjacent_find(t.begin(), t.end(), [](auto x, auto y) { return x <= y; }) == t.end();
}

bool is_nonneg(const Seq& s) {
    const auto t = s.terms();
    return std::all_of(t.begin(), t.end(), [](auto v) { return v >= 0; });
}

bool is_k_binomial(const Seq& s, std::int64_t k) {
    if (s.empty()) return true;
    const auto t = static_cast<std::int64_t>(s.length()) - 1;
    return is_strictly_decreasing(s) && t + 1 <= k && k - t >= 1 && s.back() >= k - t;
}

Seq seq_max(const Seq& a, const Seq& b) {
    const Seq& longer = a.length() >= b.length() ? a : b;
    const Seq& shorter = a.length() >= b.length() ? b : a;
    std::vector<std::int64_t> out(longer.terms().begin(), longer.terms().end());
    for (std::size_t i = 0; i < shorter.length(); ++i) out[i] = std::max(out[i], shorter[i]);
    return Seq(std::move(out));
}

Seq seq_min(const Seq& a, const Seq& b) {
    const Seq& longer = a.length() >= b.length() ? a : b;
    const Seq& shorter = a.length() >= b.length() ? b : a;
    std::vector<std::int64_t> out(shorter.terms().begin(), shorter.terms().end());
    for (std::size_t i = 0; i < shorter.length(); ++i) out[i] = std::min(out[i], longer[i]);
    return Seq(std::move(out));
}

std::string to_string(const Seq& s) {
    std::string out = "(";
    bool first = true;
    for (const auto v : s.terms()) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + ")";
}

}  // namespace shadowkit
