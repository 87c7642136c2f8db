#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "shadowkit/exact_int.hpp"

namespace shadowkit {

// Subset of [64]; element x (1-based) is bit x - 1. Numeric order on masks is colex order.
using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;

Mask mask_of(std::initializer_list<int> elements);
Mask mask_of(std::span<const int> elements);
std::vector<int> elements_of(Mask set);
inline int set_size(Mask set) noexcept { return __builtin_popcountll(set); }
inline Mask element_bit(int x) noexcept { return Mask{1} << (x - 1); }
// Mask of [1, n].
inline Mask ground_mask(int n) noexcept { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Family of distinct k-subsets of [n], stored in colex order.
class KFamily {
public:
    KFamily() = default;
    // Sorts and deduplicates; throws PreconditionError on a set of the wrong size or outside [n].
    KFamily(int n, int k, std::vector<Mask> sets);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int k() const noexcept { return k_; }
    [[nodiscard]] std::span<const Mask> sets() const noexcept { return sets_; }
    [[nodiscard]] std::size_t size() const noexcept { return sets_.size(); }
    [[nodiscard]] bool empty() const noexcept { return sets_.empty(); }
    [[nodiscard]] bool contains(Mask set) const;
    [[nodiscard]] Mask support() const noexcept;
    [[nodiscard]] bool has_full_support() const noexcept { return support() == ground_mask(n_); }

    bool operator==(const KFamily&) const = default;

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<Mask> sets_;
};

// All k-subsets of [n].
KFamily full_layer(int n, int k);

KFamily shadow(const KFamily& s);
KFamily iterated_shadow(const KFamily& s, int steps);
KFamily upper_shadow(const KFamily& s, int steps);

// Members containing x, with x removed.
KFamily link(const KFamily& s, int x);
// Members avoiding x.
KFamily delete_star(const KFamily& s, int x);
std::size_t degree(const KFamily& s, int x);
// Element of smallest positive degree; ties go to the smallest label.
int min_degree_element(const KFamily& s);

// 0-based colex position of a set among sets of its size.
ExactInt colex_rank(Mask set);
Mask colex_unrank(const ExactInt& rank, int k);
// First m k-subsets of [n] in colex order.
KFamily initial_segment(int n, int k, const ExactInt& m);

// Pairwise unions; every union must have the same size.
KFamily join(const KFamily& a, const KFamily& b);

// Relabels the support onto [s] in increasing order. Returns the family on ground [s]
// and the original label of each new element.
struct Compacted {
    KFamily family;
    std::vector<int> labels;
};
Compacted compact_support(const KFamily& s);

std::string to_string(const KFamily& s);

}  // namespace shadowkit
