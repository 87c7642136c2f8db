#include "shadowkit/isomorphism.hpp"

#include <algorithm>
#include <array>

#include "shadowkit/errors.hpp"

namespace shadowkit {

namespace {

// Advances the block-wise permutation odometer; false once every block has wrapped.
bool next_blockwise(std::vector<int>& order, const std::vector<std::size_t>& block_starts) {
    for (std::size_t b = block_starts.size() - 1; b + 1 > 0; --b) {
        const auto first = order.begin() + static_cast<std::ptrdiff_t>(block_starts[b]);
        const auto last = b + 1 < block_starts.size() ? order.begin() + static_cast<std::ptrdiff_t>(block_starts[b + 1])
                                                       : order.end();
        if (std::next_permutation(first, last)) return true;
    }
    return false;
}

std::vector<std::size_t> degree_multiset(const KFamily& s) {
    std::vector<std::size_t> out;
    for (const int x : elements_of(s.support())) out.push_back(degree(s, x));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

KFamily canonical_form(const KFamily& s) {
    const std::vector<int> support = elements_of(s.support());
    if (static_cast<int>(support.size()) > kMaxIsoSupport) {
        throw PreconditionError("isomorphism search supports at most 10 elements in the support");
    }
    if (support.empty()) return s;

    std::array<std::size_t, kMaxGround + 1> deg{};
    for (const Mask set : s.sets()) {
        for (const int x : elements_of(set)) ++deg[static_cast<std::size_t>(x)];
    }
    std::vector<int> order = support;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)]; });
    std::vector<std::size_t> block_starts;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i == 0 || deg[static_cast<std::size_t>(order[i])] != deg[static_cast<std::size_t>(order[i - 1])]) {
            block_starts.push_back(i);
        }
    }
    for (std::size_t b = 0; b < block_starts.size(); ++b) {
        const auto first = order.begin() + static_cast<std::ptrdiff_t>(block_starts[b]);
        const auto last = b + 1 < block_starts.size() ? order.begin() + static_cast<std::ptrdiff_t>(block_starts[b + 1])
                                                       : order.end();
        std::sort(first, last);
    }

    // Each block starts sorted so next_permutation visits all of its orderings.
    std::vector<Mask> best;
    std::vector<Mask> image(s.size());
    std::array<Mask, kMaxGround + 1> bit_for{};
    do {
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            bit_for[static_cast<std::size_t>(order[pos])] = element_bit(static_cast<int>(pos) + 1);
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
            Mask m = 0;
            for (Mask rest = s.sets()[i]; rest != 0; rest &= rest - 1) {
                m |= bit_for[static_cast<std::size_t>(__builtin_ctzll(rest) + 1)];
            }
            image[i] = m;
        }
        std::sort(image.begin(), image.end());
        if (best.empty() || image < best) best = image;
    } while (next_blockwise(order, block_starts));
    return KFamily(s.n(), s.k(), std::move(best));
}

bool are_isomorphic(const KFamily& a, const KFamily& b) {
    if (a.n() != b.n() || a.k() != b.k() || a.size() != b.size()) return false;
    if (degree_multiset(a) != degree_multiset(b)) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace shadowkit
