#include "shadowkit/family.hpp"

#include <algorithm>

#include "shadowkit/binomial.hpp"
#include "shadowkit/errors.hpp"

namespace shadowkit {

namespace {

void require_element(int n, int x) {
    if (x < 1 || x > n) throw PreconditionError("element " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
}

// Next mask with the same popcount (Gosper's hack); requires set != 0.
Mask next_same_size(Mask set) {
    const Mask low = set & (~set + 1);
    const Mask ripple = set + low;
    return ripple | (((set ^ ripple) >> 2) / low);
}

void sort_unique(std::vector<Mask>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Mask mask_of(std::initializer_list<int> elements) {
    return mask_of(std::span<const int>(elements.begin(), elements.size()));
}

Mask mask_of(std::span<const int> elements) {
    Mask out = 0;
    for (const int x : elements) {
        require_element(kMaxGround, x);
        out |= element_bit(x);
    }
    return out;
}

std::vector<int> elements_of(Mask set) {
    std::vector<int> out;
    while (set != 0) {
        out.push_back(__builtin_ctzll(set) + 1);
        set &= set - 1;
    }
    return out;
}

KFamily::KFamily(int n, int k, std::vector<Mask> sets) : n_(n), k_(k), sets_(std::move(sets)) {
    if (n < 0 || n > kMaxGround) throw PreconditionError("ground size must lie in [0,64]");
    if (k < 0 || k > n) throw PreconditionError("set size must lie in [0,n]");
    const Mask ground = ground_mask(n);
    for (const Mask s : sets_) {
        if ((s & ~ground) != 0) throw PreconditionError("set has an element outside [n]");
        if (set_size(s) != k) throw PreconditionError("set has the wrong size");
    }
    sort_unique(sets_);
}

bool KFamily::contains(Mask set) const { return std::binary_search(sets_.begin(), sets_.end(), set); }

Mask KFamily::support() const noexcept {
    Mask out = 0;
    for (const Mask s : sets_) out |= s;
    return out;
}

KFamily full_layer(int n, int k) {
    if (n < 0 || n > kMaxGround || k < 0 || k > n) throw PreconditionError("full layer out of range");
    return initial_segment(n, k, binom(n, k));
}

KFamily shadow(const KFamily& s) {
    if (s.k() < 1) throw PreconditionError("shadow requires k >= 1");
    std::vector<Mask> out;
    out.reserve(s.size() * static_cast<std::size_t>(s.k()));
    for (const Mask set : s.sets()) {
        for (Mask rest = set; rest != 0; rest &= rest - 1) out.push_back(set & ~(rest & (~rest + 1)));
    }
    return KFamily(s.n(), s.k() - 1, std::move(out));
}

KFamily iterated_shadow(const KFamily& s, int steps) {
    if (steps < 0 || steps > s.k()) throw PreconditionError("shadow iteration count out of range");
    KFamily out = s;
    for (int i = 0; i < steps; ++i) out = shadow(out);
    return out;
}

KFamily upper_shadow(const KFamily& s, int steps) {
    if (steps < 0 || s.k() + steps > s.n()) throw PreconditionError("upper shadow out of range");
    const Mask ground = ground_mask(s.n());
    std::vector<Mask> cur(s.sets().begin(), s.sets().end());
    for (int i = 0; i < steps; ++i) {
        std::vector<Mask> next;
        for (const Mask set : cur) {
            for (Mask free = ground & ~set; free != 0; free &= free - 1) next.push_back(set | (free & (~free + 1)));
        }
        sort_unique(next);
        cur = std::move(next);
    }
    return KFamily(s.n(), s.k() + steps, std::move(cur));
}

KFamily link(const KFamily& s, int x) {
    require_element(s.n(), x);
    if (s.k() < 1) throw PreconditionError("link requires k >= 1");
    const Mask bit = element_bit(x);
    std::vector<Mask> out;
    for (const Mask set : s.sets()) {
        if (set & bit) out.push_back(set & ~bit);
    }
    return KFamily(s.n(), s.k() - 1, std::move(out));
}

KFamily delete_star(const KFamily& s, int x) {
    require_element(s.n(), x);
    const Mask bit = element_bit(x);
    std::vector<Mask> out;
    for (const Mask set : s.sets()) {
        if (!(set & bit)) out.push_back(set);
    }
    return KFamily(s.n(), s.k(), std::move(out));
}

std::size_t degree(const KFamily& s, int x) {
    require_element(s.n(), x);
    const Mask bit = element_bit(x);
    return static_cast<std::size_t>(std::count_if(s.sets().begin(), s.sets().end(), [bit](Mask m) { return (m & bit) != 0; }));
}

int min_degree_element(const KFamily& s) {
    const Mask supp = s.support();
    if (supp == 0) throw PreconditionError("minimum degree needs a nonempty support");
    int best = 0;
    std::size_t best_degree = 0;
    for (const int x : elements_of(supp)) {
        const std::size_t d = degree(s, x);
        if (best == 0 || d < best_degree) {
            best = x;
            best_degree = d;
        }
    }
    return best;
}

ExactInt colex_rank(Mask set) {
    ExactInt rank;
    std::int64_t i = 1;
    for (const int x : elements_of(set)) rank += binom(x - 1, i++);
    return rank;
}

Mask colex_unrank(const ExactInt& rank, int k) {
    if (k < 0 || k > kMaxGround) throw PreconditionError("set size out of range");
    if (rank < 0) throw PreconditionError("colex rank must be nonnegative");
    ExactInt rest = rank;
    Mask out = 0;
    for (int i = k; i >= 1; --i) {
        // Largest y with C(y, i) <= rest; the i-th smallest element is y + 1.
        int y = i - 1;
        while (y + 1 < kMaxGround && binom(y + 1, i) <= rest) ++y;
        rest -= binom(y, i);
        out |= element_bit(y + 1);
    }
    if (rest != 0) throw PreconditionError("colex rank exceeds the 64-element ground set");
    return out;
}

KFamily initial_segment(int n, int k, const ExactInt& m) {
    if (n < 0 || n > kMaxGround || k < 0 || k > n) throw PreconditionError("initial segment out of range");
    if (m < 0 || m > binom(n, k)) throw PreconditionError("initial segment length exceeds C(n,k)");
    const std::int64_t count = m.to_int64();
    if (count > (std::int64_t{1} << 26)) throw PreconditionError("initial segment too large to materialize");
    std::vector<Mask> out;
    out.reserve(static_cast<std::size_t>(count));
    if (k == 0) {
        if (count == 1) out.push_back(0);
        return KFamily(n, 0, std::move(out));
    }
    Mask s = ground_mask(k);
    for (std::int64_t i = 0; i < count; ++i) {
        out.push_back(s);
        if (i + 1 < count) s = next_same_size(s);
    }
    return KFamily(n, k, std::move(out));
}

KFamily join(const KFamily& a, const KFamily& b) {
    std::vector<Mask> out;
    int size = -1;
    for (const Mask x : a.sets()) {
        for (const Mask y : b.sets()) {
            const Mask u = x | y;
            if (size < 0) size = set_size(u);
            if (set_size(u) != size) throw PreconditionError("join produced sets of different sizes");
            out.push_back(u);
        }
    }
    const int n = std::max(a.n(), b.n());
    return KFamily(n, size < 0 ? std::min(n, a.k() + b.k()) : size, std::move(out));
}

Compacted compact_support(const KFamily& s) {
    const std::vector<int> labels = elements_of(s.support());
    std::vector<int> relabel(static_cast<std::size_t>(s.n()) + 1, 0);
    for (std::size_t i = 0; i < labels.size(); ++i) relabel[static_cast<std::size_t>(labels[i])] = static_cast<int>(i) + 1;
    std::vector<Mask> out;
    out.reserve(s.size());
    for (const Mask set : s.sets()) {
        Mask image = 0;
        for (const int x : elements_of(set)) image |= element_bit(relabel[static_cast<std::size_t>(x)]);
        out.push_back(image);
    }
    const int ground = static_cast<int>(labels.size());
    return {KFamily(ground, std::min(s.k(), ground), std::move(out)), labels};
}

std::string to_string(const KFamily& s) {
    std::string out = "{";
    bool first_set = true;
    for (const Mask set : s.sets()) {
        if (!first_set) out += ",";
        out += "{";
        bool first = true;
        for (const int x : elements_of(set)) {
            if (!first) out += ",";
            out += std::to_string(x);
            first = false;
        }
        out += "}";
        first_set = false;
    }
    return out + "}";
}

}  // namespace shadowkit
