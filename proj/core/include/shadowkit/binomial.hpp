#pragma once

#include <cstdint>

#include "shadowkit/exact_int.hpp"

namespace shadowkit {

// How C(n,k) behaves for negative n.
enum class BinomialConvention {
    generalized,  // falling factorial n(n-1)...(n-k+1)/k!, nonzero for n < 0
    strict,       // zero whenever n < k, including every n < 0
};

// C(n,k): 0 for k < 0, 1 for k = 0, otherwise per the convention.
// Throws OverflowError if the value leaves the 128-bit range.
ExactInt binom(std::int64_t n, std::int64_t k, BinomialConvention conv = BinomialConvention::generalized);

}  // namespace shadowkit
