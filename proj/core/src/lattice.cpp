#include "shadowkit/lattice.hpp"

#include <algorithm>

#include "shadowkit/errors.hpp"

namespace shadowkit {

Wall::Wall(std::vector<std::int64_t> heights, std::int64_t level) : heights_(std::move(heights)), level_(level) {
    if (!std::is_sorted(heights_.rbegin(), heights_.rend())) {
        throw PreconditionError("wall heights must be nonincreasing");
    }
    if (!heights_.empty() && heights_.back() < 0) throw PreconditionError("wall heights must be nonnegative");
    if (!heights_.empty() && static_cast<std::int64_t>(heights_.size()) - 1 > level_) {
        throw PreconditionError("wall has more columns than its level allows");
    }
}

BinomialSum wall_expand(const Wall& w) {
    BinomialSum out;
    std::int64_t diagonal = w.level();
    for (const auto x : w.heights()) out.add(x + diagonal--, x);
    return out;
}

BinomialSum rubble_expand(const Rubble& r) {
    BinomialSum out;
    for (const auto x : r.uppers) out.add(x, 0);
    return out;
}

BinomialSum pavement_expand(const Pavement& p) {
    BinomialSum out;
    for (const auto i : p.indices) out.add(i - 1, i);
    return out;
}

bool dominates(const Wall& w, const Seq& b, std::int64_t k) {
    if (b.empty()) return true;
    const auto t = static_cast<std::int64_t>(b.length()) - 1;
    if (b.front() - k > w.level()) return false;
    const auto& hs = w.heights();
    for (std::size_t i = 0; i < hs.size(); ++i) {
        const std::int64_t j = k - hs[i];
        if (j < 0 || j > t) continue;
        if (b[static_cast<std::size_t>(j)] >= hs[i] + w.level() - static_cast<std::int64_t>(i)) return false;
    }
    return hs.empty() || hs.front() <= k;
}

std::string to_string(const Wall& w) {
    return "Wall(" + to_string(Seq(w.heights())) + "," + std::to_string(w.level()) + ")";
}

}  // namespace shadowkit
