#pragma once

#include <cstdint>
#include <vector>

#include "shadowkit/binomial_sum.hpp"
#include "shadowkit/seq.hpp"

namespace shadowkit {

// Nonincreasing heights w_0 >= ... >= w_h >= 0 at level ell >= h.
// Expands to the sum over i of C(w_i + ell - i, w_i): one term on each diagonal ell - h .. ell.
class Wall {
public:
    Wall() = default;
    // Throws PreconditionError unless the heights are nonincreasing, nonnegative and fit the level.
    Wall(std::vector<std::int64_t> heights, std::int64_t level);

    [[nodiscard]] const std::vector<std::int64_t>& heights() const noexcept { return heights_; }
    [[nodiscard]] std::int64_t level() const noexcept { return level_; }
    [[nodiscard]] bool empty() const noexcept { return heights_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return heights_.size(); }

    bool operator==(const Wall&) const = default;

private:
    std::vector<std::int64_t> heights_;
    std::int64_t level_ = 0;
};

// Terms C(x, 0) for each stored upper index x.
struct Rubble {
    std::vector<std::int64_t> uppers;
    bool operator==(const Rubble&) const = default;
};

// Terms C(i - 1, i) for each stored i >= 1.
struct Pavement {
    std::vector<std::int64_t> indices;
    bool operator==(const Pavement&) const = default;
};

BinomialSum wall_expand(const Wall& w);
BinomialSum rubble_expand(const Rubble& r);
BinomialSum pavement_expand(const Pavement& p);

// Domination of a strictly decreasing sequence b (read at level k) by a wall:
// b_0 - k <= level; for every height w_i = k - j with j <= t, b_j < w_i + level - i; w_0 <= k.
bool dominates(const Wall& w, const Seq& b, std::int64_t k);

std::string to_string(const Wall& w);

}  // namespace shadowkit
