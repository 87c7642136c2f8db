#pragma once

// Deliberately naive reference implementations. They share no code with the library and
// favour obviousness over speed, so agreement with them is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Int = __int128;
using Set = std::vector<int>;  // ascending elements
using Family = std::set<Set>;

// Falling factorial n(n-1)...(n-k+1)/k!, exact for the small arguments used in tests.
inline Int binom(std::int64_t n, std::int64_t k) {
    if (k < 0) return 0;
    Int num = 1;
    Int den = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

// C(n,k) with the convention that it vanishes for n < k, via Pascal's triangle.
inline Int pascal(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    static std::map<std::pair<std::int64_t, std::int64_t>, Int> memo;
    if (k == 0 || k == n) return 1;
    const auto key = std::make_pair(n, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const Int v = pascal(n - 1, k) + pascal(n - 1, k - 1);
    memo.emplace(key, v);
    return v;
}

inline Int seq_value(const std::vector<std::int64_t>& s, std::int64_t level) {
    Int total = 0;
    for (std::size_t i = 0; i < s.size(); ++i) total += binom(s[i], level - static_cast<std::int64_t>(i));
    return total;
}

// Every k-binomial sequence (strictly decreasing, a_t >= k - t >= 1) with entries <= top whose value is m.
inline std::vector<std::vector<std::int64_t>> all_decompositions(std::int64_t m, std::int64_t k, std::int64_t top) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur;
    std::function<void(std::int64_t)> grow = [&](std::int64_t below) {
        if (!cur.empty()) {
            const auto t = static_cast<std::int64_t>(cur.size()) - 1;
            if (cur.back() >= k - t && k - t >= 1 && seq_value(cur, k) == m) out.push_back(cur);
        }
        if (static_cast<std::int64_t>(cur.size()) == k) return;
        for (std::int64_t v = 0; v < below; ++v) {
            cur.push_back(v);
            // Every term is nonnegative and grows with v, so an overshoot ends this branch.
            const bool over = seq_value(cur, k) > m;
            if (!over) grow(v);
            cur.pop_back();
            if (over) break;
        }
    };
    if (m == 0) out.emplace_back();
    grow(top + 1);
    return out;
}

inline Family layer(int n, int k) {
    Family out;
    std::vector<int> pick(static_cast<std::size_t>(n), 0);
    std::fill(pick.end() - k, pick.end(), 1);
    do {
        Set s;
        for (int i = 0; i < n; ++i) {
            if (pick[static_cast<std::size_t>(i)]) s.push_back(i + 1);
        }
        out.insert(s);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

inline Family shadow(const Family& f) {
    Family out;
    for (const auto& s : f) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            Set t = s;
            t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
            out.insert(t);
        }
    }
    return out;
}

inline Family link(const Family& f, int x) {
    Family out;
    for (const auto& s : f) {
        if (std::find(s.begin(), s.end(), x) != s.end()) {
            Set t;
            std::copy_if(s.begin(), s.end(), std::back_inserter(t), [x](int e) { return e != x; });
            out.insert(t);
        }
    }
    return out;
}

inline Family deletion(const Family& f, int x) {
    Family out;
    for (const auto& s : f) {
        if (std::find(s.begin(), s.end(), x) == s.end()) out.insert(s);
    }
    return out;
}

// Colex by the textbook definition: the largest element of the symmetric difference lies in y.
inline bool colex_less(const Set& x, const Set& y) {
    Set diff;
    std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(diff));
    return !diff.empty() && std::binary_search(y.begin(), y.end(), diff.back());
}

inline std::vector<Set> colex_sorted(const Family& f) {
    std::vector<Set> v(f.begin(), f.end());
    std::sort(v.begin(), v.end(), colex_less);
    return v;
}

inline Family colex_prefix(int n, int k, std::size_t m) {
    const auto v = colex_sorted(layer(n, k));
    return Family(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m));
}

// Smallest shadow over every m-subfamily of the layer, by plain enumeration.
inline std::size_t min_shadow(int n, int k, std::size_t m) {
    const auto sets = colex_sorted(layer(n, k));
    std::vector<int> pick(sets.size(), 0);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(m), pick.end(), 1);
    std::size_t best = SIZE_MAX;
    do {
        Family f;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (pick[i]) f.insert(sets[i]);
        }
        best = std::min(best, shadow(f).size());
    } while (std::next_permutation(pick.begin(), pick.end()));
    return best;
}

// Isomorphism by trying every permutation of [n].
inline bool isomorphic(const Family& a, const Family& b, int n) {
    if (a.size() != b.size()) return false;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        Family image;
        for (const auto& s : a) {
            Set t;
            for (int e : s) t.push_back(perm[static_cast<std::size_t>(e - 1)]);
            std::sort(t.begin(), t.end());
            image.insert(t);
        }
        if (image == b) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace oracle
