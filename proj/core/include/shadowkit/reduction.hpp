#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "shadowkit/binomial_sum.hpp"
#include "shadowkit/lattice.hpp"
#include "shadowkit/seq.hpp"

namespace shadowkit {

// Which geometric situation a reduction step resolved.
enum class ReductionCase {
    hits_wall,          // the last b point lies on a diagonal the wall occupies
    wall_right_of_tail, // below the wall, wall tail column right of the last b point
    same_column,        // below the wall, wall tail in the same column
    extend_leftwards,   // below the wall, wall tail column left of the last b point
};

std::string_view to_string(ReductionCase c);

struct ReductionOutcome {
    Wall wall_out;
    Seq b_out;
    Seq c_out;
    Rubble rubble;
    Pavement pavement;
    BinomialSum shared;
    std::vector<ReductionCase> trace;
};

// Rewrites (w, b, c) until the wall is spent or b and c are, keeping
//   b + c  ~  b' + c' + pavement + shared   and   w  ~  w' + rubble + shared
// translation invariant. b and c are k-binomial with b the componentwise max and c the min,
// both dominated by the nonempty wall whose last height is at least 1.
ReductionOutcome recursive_reduce(const Wall& w, const Seq& b, const Seq& c, std::int64_t k);

struct ReductionCheck {
    bool sequence_identity = false;
    bool wall_identity = false;
    bool terminal = false;
    [[nodiscard]] bool ok() const noexcept { return sequence_identity && wall_identity && terminal; }
};

// The two identity differences, each of which should be invariantly zero.
BinomialSum sequence_identity_difference(const Seq& b, const Seq& c, std::int64_t k, const ReductionOutcome& out);
BinomialSum wall_identity_difference(const Wall& w, const ReductionOutcome& out);

// Whether (w, b, c, k) meets every precondition of recursive_reduce.
bool is_reducible(const Wall& w, const Seq& b, const Seq& c, std::int64_t k);

struct ReductionInstance {
    Wall wall;
    Seq b;
    Seq c;
    std::int64_t k = 0;
};

// Reproducible valid instances by rejection sampling: k in [1, kmax], b_0 <= bmax.
std::vector<ReductionInstance> sample_reduction_instances(std::size_t count, std::uint64_t seed,
                                                          std::int64_t kmax = 4, std::int64_t bmax = 9);

ReductionCheck verify_reduction(const Wall& w, const Seq& b, const Seq& c, std::int64_t k,
                                const ReductionOutcome& out);

}  // namespace shadowkit
