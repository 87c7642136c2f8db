#include "shadowkit/search.hpp"

#include <algorithm>
#include <atomic>
#include <iterator>
#include <map>
#include <tuple>

#include "shadowkit/binomial.hpp"
#include "shadowkit/errors.hpp"
#include "parallel.hpp"
#include "shadowkit/extremal.hpp"
#include "shadowkit/isomorphism.hpp"

namespace shadowkit {

namespace {

using SetList = std::vector<Mask>;

// The k-layer in colex order, each set pointing at the indices of its (k-1)-subsets.
struct Layer {
    std::vector<Mask> sets;
    std::vector<std::uint32_t> children;  // k entries per set
    std::size_t shadow_layer_size = 0;
    int k = 0;

    Layer(int n, int k_) : k(k_) {
        const KFamily top = full_layer(n, k);
        const KFamily below = full_layer(n, k - 1);
        sets.assign(top.sets().begin(), top.sets().end());
        shadow_layer_size = below.size();
        children.reserve(sets.size() * static_cast<std::size_t>(k));
        for (const Mask s : sets) {
            for (Mask rest = s; rest != 0; rest &= rest - 1) {
                const Mask child = s & ~(rest & (~rest + 1));
                const auto it = std::lower_bound(below.sets().begin(), below.sets().end(), child);
                children.push_back(static_cast<std::uint32_t>(it - below.sets().begin()));
            }
        }
    }
};

class BudgetCounter {
public:
    explicit BudgetCounter(std::uint64_t budget) : budget_(budget) {}
    void charge(std::uint64_t nodes) {
        if (used_.fetch_add(nodes, std::memory_order_relaxed) + nodes > budget_) {
            throw BudgetExceeded("search exceeded its node budget of " + std::to_string(budget_));
        }
    }

private:
    std::uint64_t budget_;
    std::atomic<std::uint64_t> used_{0};
};

// Depth-first walk over increasing index tuples with a reference-counted shadow.
// Branches whose shadow exceeds limit() are cut; complete tuples go to on_leaf.
template <typename Limit, typename Leaf>
class ComboWalker {
public:
    ComboWalker(const Layer& layer, std::size_t m, BudgetCounter& budget, Limit limit, Leaf on_leaf)
        : layer_(layer), m_(m), budget_(budget), limit_(limit), on_leaf_(on_leaf),
          counts_(layer.shadow_layer_size, 0) {
        chosen_.reserve(m);
    }

    void run_from(std::size_t first) {
        if (add(first) <= limit_()) descend(first + 1);
        remove(first);
        flush();
    }

private:
    std::size_t add(std::size_t i) {
        chosen_.push_back(i);
        const auto* c = &layer_.children[i * static_cast<std::size_t>(layer_.k)];
        for (int j = 0; j < layer_.k; ++j) {
            if (counts_[c[j]]++ == 0) ++shadow_;
        }
        if (++pending_ >= 4096) flush();
        return shadow_;
    }

    void remove(std::size_t i) {
        const auto* c = &layer_.children[i * static_cast<std::size_t>(layer_.k)];
        for (int j = 0; j < layer_.k; ++j) {
            if (--counts_[c[j]] == 0) --shadow_;
        }
        chosen_.pop_back();
    }

    void descend(std::size_t start) {
        if (chosen_.size() == m_) {
            on_leaf_(chosen_, shadow_);
            return;
        }
        const std::size_t need = m_ - chosen_.size();
        for (std::size_t i = start; i + need <= layer_.sets.size(); ++i) {
            if (add(i) <= limit_()) descend(i + 1);
            remove(i);
        }
    }

    void flush() {
        budget_.charge(pending_);
        pending_ = 0;
    }

    const Layer& layer_;
    std::size_t m_;
    BudgetCounter& budget_;
    Limit limit_;
    Leaf on_leaf_;
    std::vector<std::uint32_t> counts_;
    std::vector<std::size_t> chosen_;
    std::size_t shadow_ = 0;
    std::uint64_t pending_ = 0;
};

void require_layer(int n, int k, const ExactInt& m) {
    if (n < 1 || n > kMaxGround || k < 1 || k > n) throw PreconditionError("search requires 1 <= k <= n <= 64");
    if (m < 0 || m > binom(n, k)) throw PreconditionError("search requires 0 <= m <= C(n,k)");
}

std::vector<SetList> exhaustive_extremal(int n, int k, std::size_t m, const SearchOptions& opts) {
    const Layer layer(n, k);
    const auto bound = static_cast<std::size_t>(kk_bound(ExactInt(m), k, 1).to_int64());
    BudgetCounter budget(opts.node_budget);
    const std::size_t firsts = layer.sets.size() - m + 1;
    std::vector<std::vector<SetList>> per_first(firsts);
    detail::parallel_for(firsts, opts.threads, [&](std::size_t first) {
        auto& out = per_first[first];
        ComboWalker walker(
            layer, m, budget, [bound] { return bound; },
            [&](const std::vector<std::size_t>& chosen, std::size_t shadow_size) {
                if (shadow_size != bound) return;
                SetList sets;
                for (const auto i : chosen) sets.push_back(layer.sets[i]);
                out.push_back(std::move(sets));
            });
        walker.run_from(first);
    });
    std::vector<SetList> all;
    for (auto& part : per_first) std::move(part.begin(), part.end(), std::back_inserter(all));
    return all;
}

// Extremal families assembled from extremal deletions and links at the largest element.
class RecursiveEnumerator {
public:
    explicit RecursiveEnumerator(const SearchOptions& opts) : budget_(opts.node_budget) {}

    const std::vector<SetList>& extremal(int n, int k, std::int64_t m) {
        const auto key = std::make_tuple(n, k, m);
        if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::vector<SetList> out = build(n, k, m);
        std::sort(out.begin(), out.end());
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    std::vector<SetList> build(int n, int k, std::int64_t m) {
        std::vector<SetList> out;
        if (m == 0) {
            out.emplace_back();
            return out;
        }
        if (n < k || binom(n, k) < m) return out;
        if (k == 1) {
            const KFamily layer = full_layer(n, 1);
            const SetList singles(layer.sets().begin(), layer.sets().end());
            for_each_subset(singles, static_cast<std::size_t>(m), [&](SetList s) { out.push_back(std::move(s)); });
            return out;
        }
        out = extremal(n - 1, k, m);
        const Mask top = element_bit(n);
        const Seq cascade = decompose(m, k);
        const ExactInt threshold = seq_value(seq_minus(cascade, 1), k);
        const std::int64_t max_link = std::min(m, binom(n - 1, k - 1).to_int64());
        for (std::int64_t d = 1; d <= max_link; ++d) {
            const std::int64_t rest = m - d;
            if (ExactInt(rest) < threshold) continue;
            auto emit = [&](const SetList& deletion, const SetList& lk) {
                SetList s = deletion;
                for (const Mask x : lk) s.push_back(x | top);
                budget_.charge(1);
                out.push_back(std::move(s));
            };
            if (ExactInt(rest) > threshold) {
                const bool split = seq_value(cascade, k - 1) ==
                                   seq_value(decompose(rest, k), k - 1) + seq_value(decompose(d, k - 1), k - 2);
                if (!split) continue;
                const auto& deletions = extremal(n - 1, k, rest);
                const auto& links = extremal(n - 1, k - 1, d);
                for (const auto& deletion : deletions) {
                    const KFamily below = shadow(KFamily(n - 1, k, deletion));
                    for (const auto& lk : links) {
                        if (std::includes(below.sets().begin(), below.sets().end(), lk.begin(), lk.end())) {
                            emit(deletion, lk);
                        }
                    }
                }
            } else {
                const KFamily layer = n - 1 >= k ? full_layer(n - 1, k) : KFamily(n - 1, 0, {});
                for (const auto& lk : extremal(n - 1, k - 1, d)) {
                    SetList candidates;
                    for (const Mask x : layer.sets()) {
                        bool inside = true;
                        for (Mask r = x; r != 0 && inside; r &= r - 1) {
                            inside = std::binary_search(lk.begin(), lk.end(), x & ~(r & (~r + 1)));
                        }
                        if (inside) candidates.push_back(x);
                    }
                    for_each_subset(candidates, static_cast<std::size_t>(rest),
                                    [&](const SetList& deletion) { emit(deletion, lk); });
                }
            }
        }
        return out;
    }

    template <typename Fn>
    static void for_each_subset(const SetList& pool, std::size_t size, Fn fn) {
        if (size > pool.size()) return;
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            SetList pick;
            pick.reserve(size);
            for (const auto i : idx) pick.push_back(pool[i]);
            fn(std::move(pick));
            std::size_t pos = size;
            while (pos > 0 && idx[pos - 1] == pool.size() - size + pos - 1) --pos;
            if (pos == 0) return;
            ++idx[pos - 1];
            for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    BudgetCounter budget_;
    std::map<std::tuple<int, int, std::int64_t>, std::vector<SetList>> memo_;
};

}  // namespace

ExactInt brute_force_min_shadow(int n, int k, const ExactInt& m, const SearchOptions& opts) {
    require_layer(n, k, m);
    const auto count = static_cast<std::size_t>(m.to_int64());
    if (count == 0) return 0;
    const Layer layer(n, k);
    BudgetCounter budget(opts.node_budget);
    std::atomic<std::size_t> best{layer.shadow_layer_size};
    // A strictly smaller shadow is the only thing worth reaching.
    const std::size_t firsts = layer.sets.size() - count + 1;
    detail::parallel_for(firsts, opts.threads, [&](std::size_t first) {
        ComboWalker walker(
            layer, count, budget, [&best] { return best.load(std::memory_order_relaxed) - 1; },
            [&best](const std::vector<std::size_t>&, std::size_t shadow_size) {
                std::size_t cur = best.load();
                while (shadow_size < cur && !best.compare_exchange_weak(cur, shadow_size)) {
                }
            });
        walker.run_from(first);
    });
    // The full layer's shadow is always reachable, so best was met or beaten.
    return ExactInt(best.load());
}

std::vector<KFamily> enumerate_extremal(int n, int k, const ExactInt& m, bool up_to_iso, EnumerationMethod method,
                                        const SearchOptions& opts) {
    if (m <= 0) throw PreconditionError("enumeration requires m >= 1");
    std::vector<SetList> raw;
    if (method == EnumerationMethod::exhaustive) {
        require_layer(n, k, m);
        if (binom(n, k) > 24) throw PreconditionError("exhaustive enumeration supports C(n,k) <= 24");
        raw = exhaustive_extremal(n, k, static_cast<std::size_t>(m.to_int64()), opts);
    } else {
        if (n < 1 || n > 10 || k < 1 || k > n) throw PreconditionError("recursive enumeration requires 1 <= k <= n <= 10");
        if (m > binom(n, k)) throw PreconditionError("enumeration requires m <= C(n,k)");
        RecursiveEnumerator gen(opts);
        raw = gen.extremal(n, k, m.to_int64());
    }
    std::vector<KFamily> out;
    out.reserve(raw.size());
    for (auto& sets : raw) {
        KFamily f(n, k, std::move(sets));
        out.push_back(up_to_iso ? canonical_form(f) : std::move(f));
    }
    auto by_sets = [](const KFamily& a, const KFamily& b) {
        return std::lexicographical_compare(a.sets().begin(), a.sets().end(), b.sets().begin(), b.sets().end());
    };
    std::sort(out.begin(), out.end(), by_sets);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace shadowkit
