#pragma once

#include <cstdint>
#include <vector>

#include "shadowkit/exact_int.hpp"
#include "shadowkit/family.hpp"

namespace shadowkit {

struct SearchOptions {
    std::uint64_t node_budget = 2'000'000'000;  // search-tree nodes before BudgetExceeded
    unsigned threads = 1;                       // results never depend on this
};

// Minimum shadow size over all m-subsets of the k-subsets of [n], by pruned exhaustive search.
ExactInt brute_force_min_shadow(int n, int k, const ExactInt& m, const SearchOptions& opts = {});

enum class EnumerationMethod { exhaustive, recursive };

// All extremal m-families of k-subsets of [n], sorted. With up_to_iso, one canonical form per class.
// Exhaustive needs C(n,k) <= 24; recursive needs n <= 10 and builds families element by element
// from the branch conditions of the characterization.
std::vector<KFamily> enumerate_extremal(int n, int k, const ExactInt& m, bool up_to_iso,
                                        EnumerationMethod method, const SearchOptions& opts = {});

}  // namespace shadowkit
