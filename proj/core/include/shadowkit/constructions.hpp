#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "shadowkit/exact_int.hpp"
#include "shadowkit/extremal.hpp"
#include "shadowkit/family.hpp"
#include "shadowkit/seq.hpp"

namespace shadowkit {

// k-subsets of [n] containing none of the listed pairs, minus an optional deletion family.
struct ForbiddenPairSpec {
    int n = 0;
    int k = 0;
    std::vector<std::pair<int, int>> pairs;
    std::optional<KFamily> deletion;
};

// All pairs inside [m].
std::vector<std::pair<int, int>> pairs_within(int m);

// Materializes the family; n <= 64. The deletion must avoid every element of a forbidden pair.
KFamily forbidden_pair_family(const ForbiddenPairSpec& spec);

// Size of the family of k-subsets of [n] with at most one element in [m].
ExactInt pair_free_count(std::int64_t n, std::int64_t k, std::int64_t m);

// A count together with its cascade at a stated level.
struct Counted {
    ExactInt value;
    Seq cascade;
};

struct PartArithmetic {
    Counted link;             // |S(x)|, cascade at k-1
    Counted link_shadow;      // |shadow of S(x) minus x|, cascade at k-2
    Counted deletion;         // |S minus S(x)|, cascade at k
    Counted deletion_shadow;  // cascade at k-1
    bool link_extremal = false;
    bool deletion_extremal = false;
    Branch branch = Branch::below;
    bool numerical_equality = false;
};

// Cardinalities for the pair-free family on [n] = [m] plus t blocks of k, with an r-regular
// deletion on [n] minus [m]. Computed from closed forms, valid for any n.
struct ForbiddenPairArithmetic {
    std::int64_t n = 0, k = 0, m = 0, t = 0, r = 0;
    Counted full;         // the pair-free family, cascade at k
    Counted full_shadow;  // cascade at k-1
    bool full_extremal = false;
    ExactInt deleted;     // t * r
    Counted reduced;      // after deletion, cascade at k
    Counted reduced_shadow;
    bool reduced_extremal = false;
    PartArithmetic outside;  // element outside [m]
    PartArithmetic inside;   // element inside [m]
};

// Requires k >= 2, m >= 2, t >= r >= 1.
ForbiddenPairArithmetic forbidden_pair_cardinalities(std::int64_t k, std::int64_t m, std::int64_t t, std::int64_t r);

// r rounds of block partitions of the cycle on [ground], round j offset by j. Every element lies
// in exactly r members. Requires k | ground, 1 <= r <= k and r <= ground / k, and r = 1 when ground = k.
KFamily regular_family(int ground, int k, int r);

// Moves every element up by `offset` onto ground [n].
KFamily shift_family(const KFamily& f, int offset, int n);

// The pair-free family with pairs in [m], blocks t, and an r-regular deletion outside [m].
KFamily forbidden_pair_instance(int k, int m, int t, int r);

// Variant b adds a full (k-1)-layer joined with a fresh element; variant c adds a nonextremal
// family inside the shadow joined with n+1.
enum class Example32Variant { b, c };

// Ground [2n] for variant b, [n+1] for variant c. Requires k >= 3, k < n <= 20.
KFamily example_32_family(int n, int k, Example32Variant variant);
// Ground [2n+1]; the added segment lives on [n+2, 2n]. Requires k >= 3, k < n, 2n+1 <= 64.
KFamily example_33_family(int n, int k);
// Element at which each example is examined.
int example_32_element(int n, Example32Variant variant);
int example_33_element(int n);

// Nonextremal (k-1)-family of the requested size inside the shadow of `host`; throws if none found nearby.
KFamily nonextremal_inside_shadow(const KFamily& host, const ExactInt& size);

enum class PerturbationStatus {
    constructed,      // swapped set lies outside the segment
    collision,        // swapped set already belongs to the segment
    outside_ground,   // swapped set needs an element beyond n
};

std::string_view to_string(PerturbationStatus s);

struct PerturbationResult {
    PerturbationStatus status = PerturbationStatus::collision;
    std::size_t pivot = 0;  // smallest index r with a_r - (k - r) = a_{k-1} - 1
    Mask removed = 0;
    Mask added = 0;
    std::optional<KFamily> family;  // set when constructed
    bool extremal = false;
    bool same_shadow = false;
    std::optional<bool> isomorphic_to_segment;  // unset when the support is too large to test
};

// Swaps the last set of the colex segment for a shifted set with the same shadow contribution.
// Requires a cascade of length k with pivot r > 0.
PerturbationResult perturbed_colex(int n, int k, const ExactInt& m);

}  // namespace shadowkit
