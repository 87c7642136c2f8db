#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "shadowkit/exact_int.hpp"
#include "shadowkit/seq.hpp"

namespace shadowkit {

struct InequalityRow {
    std::int64_t step = 0;
    ExactInt lhs;
    ExactInt rhs;
    [[nodiscard]] bool holds() const { return lhs <= rhs; }
    [[nodiscard]] bool tight() const { return lhs == rhs; }
};

// Hypotheses and conclusions of the split inequality for a triple (a, b, c) at level k.
// Rows compare the cascade of a against b plus c, each lowered by `step` levels.
struct AbcReport {
    bool value_split = false;     // value(a,k) = value(b,k) + value(c,k-1)
    bool b_nonempty = false;
    bool lex_condition = false;   // b >= a - 1 in lex order; vacuous for empty b
    bool nonnegative = false;     // b and c strictly decreasing with nonnegative terms
    bool lower_bounds = false;    // b_j >= k-j-1 and c_j >= k-j-2
    std::vector<InequalityRow> rows;  // steps 0..k
    bool equality_at_one = false;
    bool equality_propagates = false;  // tight at step 1 implies tight at every step >= 1

    [[nodiscard]] bool hypotheses_hold() const {
        return value_split && b_nonempty && lex_condition && nonnegative;
    }
    [[nodiscard]] bool inequalities_hold() const;
    // Steps whose row fails.
    [[nodiscard]] std::vector<std::int64_t> failing_steps() const;
};

// Classifies any triple; inputs that violate hypotheses are reported, not rejected.
// Requires a to be the cascade of a positive integer at level k.
AbcReport check_abc(const Seq& a, const Seq& b, const Seq& c, std::int64_t k);

// General split value(a,k) = value(b,k1) + value(c,k2).
struct AbckReport {
    bool value_split = false;
    bool nonnegative = false;
    bool lower_bounds = false;  // b_j >= k1-j-1 and c_j >= k2-j-1
    InequalityRow first;        // value at k-1 against b at k1-1 plus c at k2-1
    InequalityRow shifted;      // the same with every term lowered by one
    std::vector<InequalityRow> diagonal;  // steps 0..k, all of a, b, c lowered by the step in both indices
};

// Requires k1, k2 >= k, or (k1, k2) = (k, k-1) with b nonempty and b >= a - 1 in lex order.
AbckReport check_abck(const Seq& a, const Seq& b, const Seq& c, std::int64_t k, std::int64_t k1, std::int64_t k2);

using Split = std::pair<Seq, Seq>;

// Every (b, c) with equality at steps 0 and 1, from the closed-form families.
// Requires a to be a cascade at level k with fewer than k terms. Sorted and deduplicated.
std::vector<Split> equality_splits(const Seq& a, std::int64_t k);

// The same set found by exhaustive search over nonnegative strictly decreasing (b, c) with
// the lower bounds, b nonempty and lex-at-least a - 1, b of length <= k and c of length <= k - 1.
std::vector<Split> exhaustive_equality_splits(const Seq& a, std::int64_t k);

// Cascades at level k with leading term at most max_top.
std::vector<Seq> cascades_up_to(std::int64_t k, std::int64_t max_top);

// Strictly decreasing nonnegative sequences of length at most max_len, entries in [0, max_entry],
// term j at least floor_at(j).
std::vector<Seq> decreasing_sequences(std::int64_t max_entry, std::size_t max_len,
                                      const std::function<std::int64_t(std::size_t)>& floor_at);

struct SweepSummary {
    std::uint64_t triples = 0;
    std::uint64_t violations = 0;
    std::uint64_t propagation_checked = 0;
    std::uint64_t propagation_failures = 0;
    std::vector<std::string> examples;  // first few failures, human readable
};

// Exhaustive check of the split inequality over every valid triple with k in [1, kmax] and a_0 <= amax.
SweepSummary sweep_lemma_abc(std::int64_t kmax, std::int64_t amax, unsigned threads = 1);

// Exhaustive check of the general split with k1, k2 in [k, k + extra].
SweepSummary sweep_lemma_abck(std::int64_t kmax, std::int64_t amax, std::int64_t extra = 1, unsigned threads = 1);

struct SplitsSummary {
    std::uint64_t cascades = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t extra_exhaustive = 0;  // found by search but not by the formula
    std::uint64_t missing_exhaustive = 0;  // produced by the formula but not found by search
    std::vector<std::string> examples;
};

SplitsSummary sweep_splits(std::int64_t kmax, std::int64_t amax);

struct ConjecturePoint {
    double x = 0;
    double y = 0;
    double z = 0;
    double slack = 0;
};

struct ConjectureReport {
    std::int64_t k = 0;
    std::uint64_t points = 0;
    double min_slack = 0;
    ConjecturePoint worst;
};

// Real binomial x(x-1)...(x-j+1)/j!.
double real_binom(double x, std::int64_t j);

// For each x, samples y in [max(x-1, k-1), x] and solves for z >= k-2 with
// C(x,k) = C(y,k) + C(z,k-1); records the slack C(y,k-1) + C(z,k-2) - C(x,k-1).
ConjectureReport conjecture_scan(std::int64_t k, const std::vector<double>& xs, std::size_t y_samples = 200);

}  // namespace shadowkit
