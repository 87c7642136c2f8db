#include "shadowkit/reduction.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <random>
#include <stdexcept>

#include "shadowkit/errors.hpp"

namespace shadowkit {

namespace {

// Lattice point in (column, diagonal) coordinates; stands for C(column + diagonal, column).
struct Cell {
    std::int64_t column = 0;
    std::int64_t diagonal = 0;
};

ExactInt cell_value(const Cell& p) { return binom(p.column + p.diagonal, p.column); }

std::vector<Cell> seq_cells(const Seq& s, std::int64_t k) {
    std::vector<Cell> out;
    std::int64_t column = k;
    for (const auto a : s.terms()) {
        out.push_back({column, a - column});
        --column;
    }
    return out;
}

Seq cells_seq(const std::vector<Cell>& cells) {
    std::vector<std::int64_t> out;
    out.reserve(cells.size());
    for (const auto& p : cells) out.push_back(p.column + p.diagonal);
    return Seq(std::move(out));
}

[[noreturn]] void broken(const char* what) {
    throw std::logic_error(std::string("reduction invariant broken: ") + what);
}

class Reducer {
public:
    Reducer(const Wall& w, const Seq& b, const Seq& c, std::int64_t k)
        : k_(k), level_(w.level()), upper_(seq_cells(b, k)), lower_(seq_cells(c, k)) {
        std::int64_t diagonal = w.level();
        for (const auto x : w.heights()) wall_.push_back({x, diagonal--});
    }

    ReductionOutcome run() {
        ExactInt measure = total_value();
        while (true) {
            while (!wall_.empty() && wall_.back().column == 0) {
                out_.rubble.uppers.push_back(wall_.back().diagonal);
                wall_.pop_back();
            }
            if (wall_.empty() || upper_.empty()) break;
            const Cell tail = upper_.back();
            const std::int64_t top = wall_.front().diagonal;
            const std::int64_t low = wall_.back().diagonal;
            if (tail.diagonal > top) broken("sequence rose above the wall");
            if (tail.diagonal >= low) {
                hit_wall(static_cast<std::size_t>(top - tail.diagonal));
            } else {
                pass_below();
            }
            rebalance();
            const ExactInt next = total_value();
            if (next >= measure) throw ConvergenceError("reduction step did not decrease the sequence value");
            measure = next;
        }
        std::vector<std::int64_t> heights;
        for (const auto& p : wall_) heights.push_back(p.column);
        out_.wall_out = Wall(std::move(heights), level_);
        out_.b_out = cells_seq(upper_);
        out_.c_out = cells_seq(lower_);
        return std::move(out_);
    }

private:
    ExactInt total_value() const {
        ExactInt v;
        for (const auto& p : upper_) v += cell_value(p);
        for (const auto& p : lower_) v += cell_value(p);
        return v;
    }

    void collide(const Cell& p) { out_.shared.add(p.column + p.diagonal, p.column); }

    // Points of diagonal -1 are zero-valued pavement; everything else rejoins b.
    void deposit(const Cell& p) {
        if (p.diagonal == -1) {
            out_.pavement.indices.push_back(p.column);
        } else {
            upper_.push_back(p);
        }
    }

    void hit_wall(std::size_t first) {
        out_.trace.push_back(ReductionCase::hits_wall);
        Cell cur = upper_.back();
        upper_.pop_back();
        if (wall_[first].column >= cur.column) broken("wall point not left of the sequence tail");
        for (std::size_t m = first; m < wall_.size(); ++m) {
            const Cell target = wall_[m];
            if (cur.diagonal != target.diagonal || cur.column <= target.column) broken("misaligned wall hit");
            // Pascal expansion of cur along the diagonal below, then the wall point absorbs the remainder.
            std::vector<Cell> row;
            for (std::int64_t x = cur.column; x > target.column; --x) row.push_back({x, target.diagonal - 1});
            collide(target);
            if (m + 1 < wall_.size()) {
                cur = row.back();
                row.pop_back();
            }
            for (const auto& p : row) deposit(p);
        }
        wall_.resize(first);
    }

    void pass_below() {
        const Cell tail = upper_.back();
        const Cell wall_tail = wall_.back();
        std::vector<Cell> chain;
        if (wall_tail.column >= tail.column) {
            out_.trace.push_back(wall_tail.column == tail.column ? ReductionCase::same_column
                                                                 : ReductionCase::wall_right_of_tail);
            const auto start = static_cast<std::size_t>(k_ - wall_tail.column);
            if (start >= upper_.size()) broken("wall tail column has no sequence point");
            chain.assign(upper_.begin() + static_cast<std::ptrdiff_t>(start), upper_.end());
            upper_.resize(start);
        } else {
            out_.trace.push_back(ReductionCase::extend_leftwards);
            upper_.pop_back();
            for (std::int64_t x = tail.column; x > wall_tail.column; --x) deposit({x, tail.diagonal - 1});
            chain.push_back({wall_tail.column, tail.diagonal});
        }
        for (const auto& q : chain) {
            const Cell last = wall_.back();
            if (q.column != last.column || q.diagonal >= last.diagonal) broken("chain point off the wall column");
            wall_.pop_back();
            for (std::int64_t d = last.diagonal; d > q.diagonal; --d) wall_.push_back({last.column - 1, d});
            collide(q);
        }
    }

    // Per column, b keeps the higher point and c the lower.
    void rebalance() {
        std::vector<Cell> hi;
        std::vector<Cell> lo;
        const std::size_t n = std::max(upper_.size(), lower_.size());
        for (std::size_t i = 0; i < n; ++i) {
            const bool has_u = i < upper_.size();
            const bool has_l = i < lower_.size();
            if (has_u && has_l) {
                const auto [a, b] = std::minmax(upper_[i], lower_[i],
                                                [](const Cell& x, const Cell& y) { return x.diagonal < y.diagonal; });
                hi.push_back(b);
                lo.push_back(a);
            } else {
                hi.push_back(has_u ? upper_[i] : lower_[i]);
            }
        }
        upper_ = std::move(hi);
        lower_ = std::move(lo);
    }

    std::int64_t k_;
    std::int64_t level_;
    std::vector<Cell> wall_;
    std::vector<Cell> upper_;
    std::vector<Cell> lower_;
    ReductionOutcome out_;
};

void require_reducible(const Wall& w, const Seq& b, const Seq& c, std::int64_t k) {
    if (k < 1) throw PreconditionError("reduction requires k >= 1");
    if (w.empty()) throw PreconditionError("reduction requires a nonempty wall");
    if (w.heights().back() < 1) throw PreconditionError("reduction requires the last wall height to be >= 1");
    if (b.empty()) throw PreconditionError("reduction requires nonempty b");
    if (!is_k_binomial(b, k) || !is_k_binomial(c, k)) {
        throw PreconditionError("reduction requires k-binomial b and c");
    }
    if (seq_max(b, c) != b || seq_min(b, c) != c) {
        throw PreconditionError("reduction requires b = max{b,c} and c = min{b,c}");
    }
    if (!dominates(w, b, k) || !dominates(w, c, k)) {
        throw PreconditionError("reduction requires the wall to dominate b and c");
    }
}

// Strictly decreasing sequence of the given length from [floor, top], uniformly over subsets.
Seq random_decreasing(std::mt19937_64& rng, std::size_t length, std::int64_t floor, std::int64_t top) {
    std::vector<std::int64_t> pool;
    for (std::int64_t v = floor; v <= top; ++v) pool.push_back(v);
    std::vector<std::int64_t> pick;
    std::ranges::sample(pool, std::back_inserter(pick), static_cast<std::ptrdiff_t>(length), rng);
    std::ranges::sort(pick, std::greater<>());
    return Seq(std::move(pick));
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

bool is_reducible(const Wall& w, const Seq& b, const Seq& c, std::int64_t k) {
    try {
        require_reducible(w, b, c, k);
        return true;
    } catch (const PreconditionError&) {
        return false;
    }
}

std::vector<ReductionInstance> sample_reduction_instances(std::size_t count, std::uint64_t seed, std::int64_t kmax,
                                                          std::int64_t bmax) {
    if (kmax < 1 || bmax < 1) throw PreconditionError("sampling requires kmax >= 1 and bmax >= 1");
    std::mt19937_64 rng(seed);
    std::vector<ReductionInstance> out;
    constexpr std::uint64_t kMaxAttempts = 10'000'000;
    for (std::uint64_t attempt = 0; out.size() < count; ++attempt) {
        if (attempt == kMaxAttempts) throw ConvergenceError("reduction sampling found too few valid instances");
        const std::int64_t k = uniform(rng, 1, kmax);
        auto random_cascade = [&](std::size_t length) {
            // The last of `length` terms must be at least k - length + 1.
            const std::int64_t floor = k - static_cast<std::int64_t>(length) + 1;
            if (length == 0 || floor + static_cast<std::int64_t>(length) - 1 > bmax) return Seq{};
            return random_decreasing(rng, length, floor, bmax);
        };
        const Seq first = random_cascade(static_cast<std::size_t>(uniform(rng, 1, k)));
        const Seq second = random_cascade(static_cast<std::size_t>(uniform(rng, 0, k)));
        const Seq b = seq_max(first, second);
        const Seq c = seq_min(first, second);
        if (b.empty()) continue;
        const std::int64_t level = uniform(rng, std::max<std::int64_t>(0, b.front() - k), std::max<std::int64_t>(0, b.front() - k) + 3);
        const auto height_count = uniform(rng, 1, std::min<std::int64_t>(level + 1, k + 1));
        std::vector<std::int64_t> heights;
        for (std::int64_t i = 0; i < height_count; ++i) heights.push_back(uniform(rng, 1, k));
        std::ranges::sort(heights, std::greater<>());
        Wall wall(std::move(heights), level);
        if (is_reducible(wall, b, c, k)) out.push_back({std::move(wall), b, c, k});
    }
    return out;
}

std::string_view to_string(ReductionCase c) {
    switch (c) {
        case ReductionCase::hits_wall: return "hits_wall";
        case ReductionCase::wall_right_of_tail: return "wall_right_of_tail";
        case ReductionCase::same_column: return "same_column";
        case ReductionCase::extend_leftwards: return "extend_leftwards";
    }
    return "unknown";
}

ReductionOutcome recursive_reduce(const Wall& w, const Seq& b, const Seq& c, std::int64_t k) {
    require_reducible(w, b, c, k);
    return Reducer(w, b, c, k).run();
}

BinomialSum sequence_identity_difference(const Seq& b, const Seq& c, std::int64_t k, const ReductionOutcome& out) {
    BinomialSum d = expand(b, k) + expand(c, k);
    d -= expand(out.b_out, k);
    d -= expand(out.c_out, k);
    d -= pavement_expand(out.pavement);
    d -= out.shared;
    return d;
}

BinomialSum wall_identity_difference(const Wall& w, const ReductionOutcome& out) {
    BinomialSum d = wall_expand(w);
    d -= wall_expand(out.wall_out);
    d -= rubble_expand(out.rubble);
    d -= out.shared;
    return d;
}

ReductionCheck verify_reduction(const Wall& w, const Seq& b, const Seq& c, std::int64_t k,
                                const ReductionOutcome& out) {
    ReductionCheck check;
    check.sequence_identity = is_invariantly_zero(sequence_identity_difference(b, c, k, out));
    check.wall_identity = is_invariantly_zero(wall_identity_difference(w, out));
    check.terminal = out.wall_out.empty() || (out.b_out.empty() && out.c_out.empty());
    return check;
}

}  // namespace shadowkit
