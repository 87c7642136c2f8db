#include "shadowkit/constructions.hpp"

#include <algorithm>
#include <set>

#include "shadowkit/binomial.hpp"
#include "shadowkit/errors.hpp"
#include "shadowkit/isomorphism.hpp"

namespace shadowkit {

namespace {

Counted counted(const ExactInt& value, std::int64_t level) {
    return {value, level >= 1 ? decompose(value, level) : Seq{}};
}

// Extremality decided from a size and a shadow size; level-1 families are extremal iff nonempty.
bool meets_bound(const ExactInt& size, const ExactInt& shadow_size, std::int64_t level) {
    if (size <= 0) return false;
    return shadow_size == kk_bound(size, level, 1);
}

PartArithmetic part(const ExactInt& total, std::int64_t k, const ExactInt& link_size, const ExactInt& link_shadow,
                    const ExactInt& deletion_size, const ExactInt& deletion_shadow) {
    PartArithmetic p;
    p.link = counted(link_size, k - 1);
    p.link_shadow = counted(link_shadow, k - 2);
    p.deletion = counted(deletion_size, k);
    p.deletion_shadow = counted(deletion_shadow, k - 1);
    p.link_extremal = meets_bound(link_size, link_shadow, k - 1);
    p.deletion_extremal = meets_bound(deletion_size, deletion_shadow, k);
    const Seq cascade = decompose(total, k);
    const ExactInt threshold = seq_value(seq_minus(cascade, 1), k);
    p.branch = deletion_size > threshold    ? Branch::strict
               : deletion_size == threshold ? Branch::equality
                                            : Branch::below;
    p.numerical_equality = seq_value(cascade, k - 1) ==
                           seq_value(p.deletion.cascade, k - 1) + seq_value(p.link.cascade, k - 2);
    return p;
}

// Every set of f with x added, on ground [n].
KFamily adjoin(const KFamily& f, int x, int n) {
    std::vector<Mask> sets;
    sets.reserve(f.size());
    for (Mask s : f.sets()) sets.push_back(s | element_bit(x));
    return KFamily(n, f.k() + 1, std::move(sets));
}

KFamily unite(int n, int k, std::initializer_list<const KFamily*> parts) {
    std::vector<Mask> sets;
    for (const KFamily* p : parts) sets.insert(sets.end(), p->sets().begin(), p->sets().end());
    return KFamily(n, k, std::move(sets));
}

void require_example_range(int n, int k, int ground) {
    if (k < 3) throw PreconditionError("example families require k >= 3");
    if (n <= k) throw PreconditionError("example families require n > k");
    if (ground > kMaxGround) throw PreconditionError("example family ground set exceeds 64 elements");
}

}  // namespace

std::vector<std::pair<int, int>> pairs_within(int m) {
    if (m < 0) throw PreconditionError("pairs_within requires m >= 0");
    std::vector<std::pair<int, int>> pairs;
    for (int j = 2; j <= m; ++j) {
        for (int i = 1; i < j; ++i) pairs.emplace_back(i, j);
    }
    return pairs;
}

KFamily forbidden_pair_family(const ForbiddenPairSpec& spec) {
    if (spec.n < 0 || spec.n > kMaxGround) throw PreconditionError("forbidden-pair family requires 0 <= n <= 64");
    if (spec.k < 0 || spec.k > spec.n) throw PreconditionError("forbidden-pair family requires 0 <= k <= n");
    std::set<std::pair<int, int>> seen;
    std::vector<Mask> pair_masks;
    Mask pair_support = 0;
    for (auto [i, j] : spec.pairs) {
        if (i > j) std::swap(i, j);
        if (i < 1 || j > spec.n || i == j) throw PreconditionError("forbidden pair must be a 2-subset of [n]");
        if (!seen.emplace(i, j).second) throw PreconditionError("forbidden pairs must be distinct");
        pair_masks.push_back(element_bit(i) | element_bit(j));
        pair_support |= pair_masks.back();
    }
    const KFamily layer = full_layer(spec.n, spec.k);
    std::vector<Mask> kept;
    for (Mask s : layer.sets()) {
        const bool hit = std::ranges::any_of(pair_masks, [s](Mask p) { return (s & p) == p; });
        if (!hit) kept.push_back(s);
    }
    if (spec.deletion) {
        const KFamily& del = *spec.deletion;
        if (del.k() != spec.k || del.n() > spec.n) throw PreconditionError("deletion must be a k-family on [n]");
        for (Mask s : del.sets()) {
            if (s & pair_support) throw PreconditionError("deletion must avoid the support of the forbidden pairs");
        }
        std::erase_if(kept, [&del](Mask s) { return del.contains(s); });
    }
    return KFamily(spec.n, spec.k, std::move(kept));
}

ExactInt pair_free_count(std::int64_t n, std::int64_t k, std::int64_t m) {
    if (n < 0 || k < 0 || m < 0 || m > n) throw PreconditionError("pair-free count requires 0 <= m <= n and k >= 0");
    return binom(n - m, k) + ExactInt(m) * binom(n - m, k - 1);
}

ForbiddenPairArithmetic forbidden_pair_cardinalities(std::int64_t k, std::int64_t m, std::int64_t t, std::int64_t r) {
    if (k < 3) throw PreconditionError("forbidden-pair cardinalities require k >= 3");
    if (m < 2) throw PreconditionError("forbidden-pair cardinalities require m >= 2");
    if (r < 1 || t < r) throw PreconditionError("forbidden-pair cardinalities require t >= r >= 1");
    ForbiddenPairArithmetic a;
    a.k = k;
    a.m = m;
    a.t = t;
    a.r = r;
    a.n = (ExactInt(m) + ExactInt(t) * ExactInt(k)).to_int64();
    const std::int64_t n = a.n;

    a.full = counted(pair_free_count(n, k, m), k);
    a.full_shadow = counted(pair_free_count(n, k - 1, m), k - 1);
    a.full_extremal = meets_bound(a.full.value, a.full_shadow.value, k);
    a.deleted = ExactInt(t) * ExactInt(r);
    a.reduced = counted(a.full.value - a.deleted, k);
    a.reduced_shadow = a.full_shadow;
    a.reduced_extremal = meets_bound(a.reduced.value, a.reduced_shadow.value, k);

    // Outside [m]: x lies in r deleted sets.
    a.outside = part(a.reduced.value, k, pair_free_count(n - 1, k - 1, m) - ExactInt(r), pair_free_count(n - 1, k - 2, m),
                     pair_free_count(n - 1, k, m) - (a.deleted - ExactInt(r)), pair_free_count(n - 1, k - 1, m));
    // Inside [m]: the link is every (k-1)-subset of the complement of [m].
    a.inside = part(a.reduced.value, k, binom(n - m, k - 1), binom(n - m, k - 2),
                    pair_free_count(n - 1, k, m - 1) - a.deleted, pair_free_count(n - 1, k - 1, m - 1));
    return a;
}

KFamily regular_family(int ground, int k, int r) {
    if (ground < 1 || ground > kMaxGround) throw PreconditionError("regular family requires 1 <= ground <= 64");
    if (k < 1 || ground % k != 0) throw PreconditionError("regular family requires k to divide the ground size");
    const int blocks = ground / k;
    if (r < 1 || r > k || r > blocks) throw PreconditionError("regular family requires 1 <= r <= min(k, ground / k)");
    if (ground == k && r != 1) throw PreconditionError("regular family on a single block requires r = 1");
    std::vector<Mask> sets;
    for (int round = 0; round < r; ++round) {
        for (int b = 0; b < blocks; ++b) {
            Mask s = 0;
            for (int e = 0; e < k; ++e) s |= element_bit((round + b * k + e) % ground + 1);
            sets.push_back(s);
        }
    }
    KFamily f(ground, k, std::move(sets));
    if (f.size() != static_cast<std::size_t>(r * blocks)) throw std::logic_error("regular family produced repeated sets");
    return f;
}

KFamily shift_family(const KFamily& f, int offset, int n) {
    if (offset < 0 || f.n() + offset > n) throw PreconditionError("shifted family must fit in [n]");
    std::vector<Mask> sets;
    sets.reserve(f.size());
    for (Mask s : f.sets()) sets.push_back(s << offset);
    return KFamily(n, f.k(), std::move(sets));
}

KFamily forbidden_pair_instance(int k, int m, int t, int r) {
    if (k < 1 || m < 0 || t < 1) throw PreconditionError("forbidden-pair instance requires k, t >= 1 and m >= 0");
    const long long n = static_cast<long long>(m) + static_cast<long long>(t) * k;
    if (n > kMaxGround) throw PreconditionError("forbidden-pair instance requires m + t*k <= 64");
    const int ground = t * k;
    return forbidden_pair_family({static_cast<int>(n), k, pairs_within(m),
                                  shift_family(regular_family(ground, k, r), m, static_cast<int>(n))});
}

KFamily nonextremal_inside_shadow(const KFamily& host, const ExactInt& size) {
    if (host.k() < 2) throw PreconditionError("nonextremal subfamily requires k >= 2");
    const KFamily pool = shadow(host);
    if (size < 1 || size >= ExactInt(pool.size()))
        throw PreconditionError("nonextremal subfamily size must be positive and below the shadow size");
    const auto count = static_cast<std::size_t>(size.to_int64());
    const auto sets = pool.sets();
    for (std::size_t pos = count; pos-- > 0;) {
        for (std::size_t repl = count; repl < sets.size(); ++repl) {
            std::vector<Mask> trial(sets.begin(), sets.begin() + static_cast<std::ptrdiff_t>(count));
            trial[pos] = sets[repl];
            KFamily candidate(pool.n(), pool.k(), std::move(trial));
            if (!is_extremal(candidate)) return candidate;
        }
    }
    throw PreconditionError("no nonextremal subfamily found among single swaps of the colex segment");
}

KFamily example_32_family(int n, int k, Example32Variant variant) {
    if (n > 20) throw PreconditionError("independence example requires n <= 20");
    if (variant == Example32Variant::b) {
        const int ground = 2 * n;
        require_example_range(n, k, ground);
        const KFamily base = initial_segment(ground, k, binom(n - 1, k));
        const KFamily block = shift_family(full_layer(n - 2, k - 1), n, ground);
        const KFamily tail = initial_segment(ground, k - 1, binom(n - 2, k - 2));
        const KFamily upper = adjoin(block, ground, ground);
        const KFamily lower = adjoin(tail, n, ground);
        return unite(ground, k, {&base, &upper, &lower});
    }
    const int ground = n + 1;
    require_example_range(n, k, ground);
    const KFamily base = initial_segment(ground, k, binom(n - 1, k) + binom(n - 2, k - 1));
    const KFamily extra = adjoin(nonextremal_inside_shadow(base, binom(n - 2, k - 2)), n + 1, ground);
    return unite(ground, k, {&base, &extra});
}

KFamily example_33_family(int n, int k) {
    const int ground = 2 * n + 1;
    require_example_range(n, k, ground);
    const KFamily base = initial_segment(ground, k, binom(n - 1, k) + binom(n - 2, k - 1));
    const KFamily segment = shift_family(initial_segment(n - 1, k - 1, binom(n - 2, k - 2)), n + 1, ground);
    const KFamily extra = adjoin(segment, ground, ground);
    return unite(ground, k, {&base, &extra});
}

int example_32_element(int n, Example32Variant variant) { return variant == Example32Variant::b ? n : n + 1; }

int example_33_element(int n) { return 2 * n + 1; }

std::string_view to_string(PerturbationStatus s) {
    switch (s) {
        case PerturbationStatus::constructed: return "constructed";
        case PerturbationStatus::collision: return "collision";
        case PerturbationStatus::outside_ground: return "outside_ground";
    }
    return "unknown";
}

PerturbationResult perturbed_colex(int n, int k, const ExactInt& m) {
    if (k < 1 || n < k || n > kMaxGround) throw PreconditionError("perturbation requires 1 <= k <= n <= 64");
    if (m < 1 || m > binom(n, k)) throw PreconditionError("perturbation requires 1 <= m <= C(n,k)");
    const Seq a = decompose(m, k);
    const auto len = static_cast<std::int64_t>(a.length());
    if (len != k) throw PreconditionError("perturbation requires a cascade of length k");
    const std::int64_t diagonal = a.back() - 1;
    std::size_t pivot = 0;
    while (a[pivot] - (k - static_cast<std::int64_t>(pivot)) != diagonal) ++pivot;
    if (pivot == 0) throw PreconditionError("perturbation requires pivot r > 0, i.e. m is not C(n',k) - 1");

    // Last member of the segment.
    Mask last = element_bit(static_cast<int>(a.back()));
    for (std::size_t i = 0; i + 1 < a.length(); ++i) last |= element_bit(static_cast<int>(a[i]) + 1);
    const auto top = static_cast<int>(a.back()) + 1;
    const int dropped = pivot + 1 < a.length() ? static_cast<int>(a[pivot]) + 1 : static_cast<int>(a.back());
    const Mask swapped = (last & ~element_bit(dropped)) | element_bit(top);

    PerturbationResult result;
    result.pivot = pivot;
    result.removed = last;
    result.added = swapped;
    const KFamily segment = initial_segment(n, k, m);
    if (segment.contains(swapped)) {
        result.status = PerturbationStatus::collision;
        return result;
    }
    if (top > n) {
        result.status = PerturbationStatus::outside_ground;
        return result;
    }
    std::vector<Mask> sets(segment.sets().begin(), segment.sets().end());
    std::ranges::replace(sets, last, swapped);
    KFamily family(n, k, std::move(sets));
    result.status = PerturbationStatus::constructed;
    result.extremal = is_extremal(family);
    result.same_shadow = shadow(family) == shadow(segment);
    if (set_size(family.support() | segment.support()) <= kMaxIsoSupport)
        result.isomorphic_to_segment = are_isomorphic(family, segment);
    result.family = std::move(family);
    return result;
}

}  // namespace shadowkit
