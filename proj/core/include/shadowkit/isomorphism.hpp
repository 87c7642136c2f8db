#pragma once

#include "shadowkit/family.hpp"

namespace shadowkit {

// Largest support handled by the exact permutation search.
inline constexpr int kMaxIsoSupport = 10;

// Lex-least image of s over relabelings that place the support on [s] by nonincreasing degree.
// Two families on the same ground set are isomorphic iff their canonical forms coincide.
// Throws PreconditionError when the support exceeds kMaxIsoSupport.
KFamily canonical_form(const KFamily& s);

bool are_isomorphic(const KFamily& a, const KFamily& b);

}  // namespace shadowkit
