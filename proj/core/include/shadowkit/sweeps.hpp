#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shadowkit/exact_int.hpp"
#include "shadowkit/search.hpp"

namespace shadowkit {

// Exhaustive audit of every nonempty subfamily of the k-layer on [n], each relabeled onto its support.
struct FamilySweepReport {
    int n = 0;
    int k = 0;
    std::uint64_t families = 0;
    std::uint64_t extremal = 0;
    std::uint64_t verdict_mismatches = 0;     // characterization verdict differs from extremality
    std::uint64_t witness_unsound = 0;        // some single element certifies a nonextremal family
    std::uint64_t chain_failures = 0;         // extremal family failing the iterated shadow check
    std::uint64_t shadow_not_extremal = 0;    // extremal family whose shadow is not extremal
    std::uint64_t split_bound_failures = 0;   // |shadow S| < |shadow deletion| + |shadow link| for some x
    std::uint64_t min_degree_checked = 0;
    std::uint64_t min_degree_failures = 0;
    std::vector<std::string> examples;        // first few failures, human readable

    [[nodiscard]] bool clean() const noexcept {
        return verdict_mismatches == 0 && witness_unsound == 0 && chain_failures == 0 && shadow_not_extremal == 0 &&
               split_bound_failures == 0 && min_degree_failures == 0;
    }
};

// Requires k >= 2 and C(n,k) <= 24.
FamilySweepReport sweep_all_families(int n, int k, unsigned threads = 1);

struct UniquenessRow {
    std::int64_t m = 0;
    std::size_t classes = 0;
    bool predicate = false;
    [[nodiscard]] bool agrees() const noexcept { return (classes == 1) == predicate; }
};

// Isomorphism classes of extremal families against the uniqueness predicate, for every 1 <= m <= C(n,k).
std::vector<UniquenessRow> uniqueness_table(int n, int k, EnumerationMethod method, const SearchOptions& opts = {});

}  // namespace shadowkit
