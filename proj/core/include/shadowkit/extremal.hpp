#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shadowkit/exact_int.hpp"
#include "shadowkit/family.hpp"
#include "shadowkit/seq.hpp"

namespace shadowkit {

// Lower bound on the size of the steps-fold shadow of any m-family of k-sets:
// the cascade of m read at level k - steps. steps = 0 returns m.
ExactInt kk_bound(const ExactInt& m, std::int64_t k, std::int64_t steps = 1);

// Shadow size meets the bound. Throws PreconditionError on an empty family or k = 0.
bool is_extremal(const KFamily& s);

// Every iterated shadow meets its bound, for 1 <= steps <= k - 1. Requires an extremal family.
bool shadow_chain_check(const KFamily& s);

enum class Branch {
    strict,    // deletion strictly above the threshold
    equality,  // deletion exactly at the threshold
    below,     // deletion under the threshold
};

std::string_view to_string(Branch b);

// Decomposition of S around one element x.
struct ElementReport {
    int element = 0;
    ExactInt deletion_size;  // |S| - |S(x)|
    ExactInt link_size;      // |S(x)|
    ExactInt threshold;      // cascade of |S| shifted down by one, read at level k
    Seq deletion_cascade;    // cascade of |S| - |S(x)| at level k
    Seq link_cascade;        // cascade of |S(x)| at level k - 1
    Branch branch = Branch::below;
    bool inclusion = false;           // link inside the shadow of the deletion
    bool deletion_extremal = false;   // an empty deletion counts as not extremal
    bool link_extremal = false;
    bool numerical_equality = false;  // cascade of |S| at k-1 splits as deletion at k-1 plus link at k-2
    bool reverse_inclusion = false;   // shadow of the deletion inside the link
    bool satisfied = false;           // the clause set of the branch taken holds
};

struct CharacterizationReport {
    Seq cascade;  // cascade of |S| at level k
    std::vector<ElementReport> elements;
    bool verdict = false;  // every element satisfies its branch
};

// Evaluates one element without requiring full support. Requires a nonempty family with k >= 2.
ElementReport evaluate_element(const KFamily& s, int x);

// Requires a nonempty family with k >= 2 whose support is exactly [n].
CharacterizationReport characterize(const KFamily& s);

// Extremality certified by the branch conditions at a single element.
bool certify_by_witness(const KFamily& s, int x);

// With x of minimum degree, the cascade of |S| - d(x) is nonempty and lex-at-least the cascade of |S| minus one.
// Requires |S| > 1, n > k > 1 and full support.
bool min_degree_bound_check(const KFamily& s);

// The colex segment is the only extremal family up to isomorphism: cascade shorter than k,
// or m one less than C(n', k) for some k < n' <= n.
bool uniqueness_predicate(std::int64_t n, std::int64_t k, const ExactInt& m);

}  // namespace shadowkit
