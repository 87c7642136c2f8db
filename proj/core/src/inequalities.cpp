#include "shadowkit/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "shadowkit/binomial.hpp"
#include "shadowkit/errors.hpp"
#include "parallel.hpp"

namespace shadowkit {

namespace {

constexpr std::size_t kMaxExamples = 8;

bool meets_floor(const Seq& s, std::int64_t top_level) {
    for (std::size_t j = 0; j < s.length(); ++j) {
        if (s[j] < top_level - static_cast<std::int64_t>(j) - 1) return false;
    }
    return true;
}

void require_cascade(const Seq& a, std::int64_t k) {
    if (k < 1) throw PreconditionError("level must be >= 1");
    if (a.empty() || !is_k_binomial(a, k)) throw PreconditionError("a must be the cascade of a positive integer at level k");
}

bool split_less(const Split& x, const Split& y) {
    const auto first = lex_cmp(x.first, y.first);
    if (first != 0) return first < 0;
    return lex_cmp(x.second, y.second) < 0;
}

void sort_splits(std::vector<Split>& v) {
    std::sort(v.begin(), v.end(), split_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Largest x with C(x, level) <= bound, for level >= 1 and bound >= 0.
std::int64_t top_for(std::int64_t level, const ExactInt& bound) {
    std::int64_t x = level - 1;
    while (binom(x + 1, level) <= bound) ++x;
    return x;
}

// Entry cap for a sequence read at `level` whose value is at most bound.
// A level-0 leading term is worth 1 for every entry, so the cap there is arbitrary.
std::int64_t entry_cap(std::int64_t level, const ExactInt& bound, std::int64_t fallback) {
    return level >= 1 ? top_for(level, bound) : fallback;
}

Seq concat(const Seq& head, std::span<const std::int64_t> tail) {
    std::vector<std::int64_t> out(head.terms().begin(), head.terms().end());
    out.insert(out.end(), tail.begin(), tail.end());
    return Seq(std::move(out));
}

void note(std::vector<std::string>& examples, std::string text) {
    if (examples.size() < kMaxExamples) examples.push_back(std::move(text));
}

void merge_summary(SweepSummary& into, SweepSummary&& part) {
    into.triples += part.triples;
    into.violations += part.violations;
    into.propagation_checked += part.propagation_checked;
    into.propagation_failures += part.propagation_failures;
    for (auto& e : part.examples) note(into.examples, std::move(e));
}

std::string describe(const Seq& a, const Seq& b, const Seq& c, std::int64_t k) {
    return "k=" + std::to_string(k) + " a=" + to_string(a) + " b=" + to_string(b) + " c=" + to_string(c);
}

}  // namespace

bool AbcReport::inequalities_hold() const {
    return std::all_of(rows.begin(), rows.end(), [](const InequalityRow& r) { return r.holds(); });
}

std::vector<std::int64_t> AbcReport::failing_steps() const {
    std::vector<std::int64_t> out;
    for (const auto& r : rows) {
        if (!r.holds()) out.push_back(r.step);
    }
    return out;
}

AbcReport check_abc(const Seq& a, const Seq& b, const Seq& c, std::int64_t k) {
    require_cascade(a, k);
    AbcReport r;
    r.value_split = seq_value(a, k) == seq_value(b, k) + seq_value(c, k - 1);
    r.b_nonempty = !b.empty();
    r.lex_condition = b.empty() || lex_cmp(b, seq_minus(a, 1)) >= 0;
    r.nonnegative = is_strictly_decreasing(b) && is_strictly_decreasing(c) && is_nonneg(b) && is_nonneg(c);
    r.lower_bounds = meets_floor(b, k) && meets_floor(c, k - 1);
    for (std::int64_t i = 0; i <= k; ++i) {
        r.rows.push_back({i, seq_value(a, k - i), seq_value(b, k - i) + seq_value(c, k - i - 1)});
    }
    r.equality_at_one = r.rows[1].tight();
    r.equality_propagates =
        !r.equality_at_one || std::all_of(r.rows.begin() + 1, r.rows.end(), [](const InequalityRow& x) { return x.tight(); });
    return r;
}

AbckReport check_abck(const Seq& a, const Seq& b, const Seq& c, std::int64_t k, std::int64_t k1, std::int64_t k2) {
    require_cascade(a, k);
    const bool general = k1 >= k && k2 >= k;
    const bool paired = k1 == k && k2 == k - 1 && k >= 2 && !b.empty() && lex_cmp(b, seq_minus(a, 1)) >= 0;
    if (!general && !paired) {
        throw PreconditionError("split levels need k1, k2 >= k, or (k, k-1) with nonempty b >= a - 1");
    }
    AbckReport r;
    r.value_split = seq_value(a, k) == seq_value(b, k1) + seq_value(c, k2);
    r.nonnegative = is_strictly_decreasing(b) && is_strictly_decreasing(c) && is_nonneg(b) && is_nonneg(c);
    r.lower_bounds = meets_floor(b, k1) && meets_floor(c, k2);
    r.first = {1, seq_value(a, k - 1), seq_value(b, k1 - 1) + seq_value(c, k2 - 1)};
    r.shifted = {1, seq_shift(a, 1, 1, k), seq_shift(b, 1, 1, k1) + seq_shift(c, 1, 1, k2)};
    for (std::int64_t i = 0; i <= k; ++i) {
        r.diagonal.push_back({i, seq_shift(a, i, i, k), seq_shift(b, i, i, k1) + seq_shift(c, i, i, k2)});
    }
    return r;
}

std::vector<Split> equality_splits(const Seq& a, std::int64_t k) {
    require_cascade(a, k);
    if (static_cast<std::int64_t>(a.length()) >= k) throw PreconditionError("equality splits need fewer than k terms");
    const auto terms = a.terms();
    const std::size_t t = terms.size() - 1;
    const Seq lowered = seq_minus(a, 1);
    std::vector<Split> out{{lowered, lowered}};
    for (std::size_t i = 0; i <= t; ++i) {
        if (i > 0 && !(terms[i - 1] - 1 > terms[i])) continue;
        const Seq prefix(std::vector<std::int64_t>(lowered.terms().begin(), lowered.terms().begin() + static_cast<std::ptrdiff_t>(i)));
        out.emplace_back(concat(prefix, terms.subspan(i, 1)), concat(prefix, terms.subspan(i + 1)));
        out.emplace_back(concat(prefix, terms.subspan(i)), prefix);
    }
    sort_splits(out);
    return out;
}

std::vector<Seq> decreasing_sequences(std::int64_t max_entry, std::size_t max_len,
                                      const std::function<std::int64_t(std::size_t)>& floor_at) {
    std::vector<Seq> out;
    std::vector<std::int64_t> cur;
    auto rec = [&](auto&& self, std::int64_t below) -> void {
        out.emplace_back(cur);
        if (cur.size() == max_len) return;
        const std::int64_t lo = std::max<std::int64_t>(0, floor_at(cur.size()));
        for (std::int64_t v = below - 1; v >= lo; --v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, max_entry + 1);
    return out;
}

std::vector<Seq> cascades_up_to(std::int64_t k, std::int64_t max_top) {
    std::vector<Seq> out;
    for (auto& s : decreasing_sequences(max_top, static_cast<std::size_t>(k),
                                        [k](std::size_t j) { return k - static_cast<std::int64_t>(j); })) {
        if (!s.empty() && is_k_binomial(s, k)) out.push_back(std::move(s));
    }
    return out;
}

std::vector<Split> exhaustive_equality_splits(const Seq& a, std::int64_t k) {
    require_cascade(a, k);
    if (k < 2) throw PreconditionError("equality splits need k >= 2");
    const ExactInt m = seq_value(a, k);
    const ExactInt m_below = seq_value(a, k - 1);
    const Seq lowered = seq_minus(a, 1);
    const auto bs = decreasing_sequences(top_for(k, m), static_cast<std::size_t>(k),
                                         [k](std::size_t j) { return k - static_cast<std::int64_t>(j) - 1; });
    const auto cs = decreasing_sequences(top_for(k - 1, m), static_cast<std::size_t>(k - 1),
                                         [k](std::size_t j) { return k - static_cast<std::int64_t>(j) - 2; });
    std::map<std::pair<ExactInt, ExactInt>, std::vector<const Seq*>> by_value;
    for (const auto& c : cs) by_value[{seq_value(c, k - 1), seq_value(c, k - 2)}].push_back(&c);
    std::vector<Split> out;
    for (const auto& b : bs) {
        if (b.empty() || lex_cmp(b, lowered) < 0) continue;
        const ExactInt vb = seq_value(b, k);
        if (vb > m) continue;
        const auto it = by_value.find({m - vb, m_below - seq_value(b, k - 1)});
        if (it == by_value.end()) continue;
        for (const Seq* c : it->second) out.emplace_back(b, *c);
    }
    sort_splits(out);
    return out;
}

SweepSummary sweep_lemma_abc(std::int64_t kmax, std::int64_t amax, unsigned threads) {
    if (kmax < 1 || amax < 1) throw PreconditionError("sweep bounds must be positive");
    struct Job {
        std::int64_t k;
        Seq a;
    };
    std::vector<Job> jobs;
    for (std::int64_t k = 1; k <= kmax; ++k) {
        for (auto& a : cascades_up_to(k, amax)) jobs.push_back({k, std::move(a)});
    }
    std::vector<SweepSummary> parts(jobs.size());
    detail::parallel_for(jobs.size(), threads, [&](std::size_t idx) {
        const auto& [k, a] = jobs[idx];
        SweepSummary& s = parts[idx];
        const ExactInt m = seq_value(a, k);
        const Seq lowered = seq_minus(a, 1);
        // Terms past index k of b, or past k - 1 of c, vanish at every level examined.
        const auto bs = decreasing_sequences(top_for(k, m), static_cast<std::size_t>(k + 1), [](std::size_t) { return 0; });
        const auto cs = decreasing_sequences(entry_cap(k - 1, m, amax + 1), static_cast<std::size_t>(k),
                                             [](std::size_t) { return 0; });
        std::map<ExactInt, std::vector<const Seq*>> by_value;
        for (const auto& c : cs) by_value[seq_value(c, k - 1)].push_back(&c);
        for (const auto& b : bs) {
            if (b.empty() || lex_cmp(b, lowered) < 0) continue;
            const ExactInt vb = seq_value(b, k);
            if (vb > m) continue;
            const auto it = by_value.find(m - vb);
            if (it == by_value.end()) continue;
            for (const Seq* c : it->second) {
                const AbcReport r = check_abc(a, b, *c, k);
                ++s.triples;
                if (!r.inequalities_hold()) {
                    ++s.violations;
                    note(s.examples, "inequality fails: " + describe(a, b, *c, k));
                }
                if (r.lower_bounds && r.equality_at_one) {
                    ++s.propagation_checked;
                    if (!r.equality_propagates) {
                        ++s.propagation_failures;
                        note(s.examples, "equality does not propagate: " + describe(a, b, *c, k));
                    }
                }
            }
        }
    });
    SweepSummary total;
    for (auto& p : parts) merge_summary(total, std::move(p));
    return total;
}

SweepSummary sweep_lemma_abck(std::int64_t kmax, std::int64_t amax, std::int64_t extra, unsigned threads) {
    if (kmax < 1 || amax < 1 || extra < 0) throw PreconditionError("sweep bounds must be positive");
    struct Job {
        std::int64_t k, k1, k2;
        Seq a;
    };
    std::vector<Job> jobs;
    for (std::int64_t k = 1; k <= kmax; ++k) {
        for (const auto& a : cascades_up_to(k, amax)) {
            if (k >= 2) jobs.push_back({k, k, k - 1, a});
            for (std::int64_t k1 = k; k1 <= k + extra; ++k1) {
                for (std::int64_t k2 = k; k2 <= k + extra; ++k2) jobs.push_back({k, k1, k2, a});
            }
        }
    }
    std::vector<SweepSummary> parts(jobs.size());
    detail::parallel_for(jobs.size(), threads, [&](std::size_t idx) {
        const auto& [k, k1, k2, a] = jobs[idx];
        SweepSummary& s = parts[idx];
        const ExactInt m = seq_value(a, k);
        const bool paired = k2 == k - 1;
        const Seq lowered = seq_minus(a, 1);
        const auto bs = decreasing_sequences(top_for(k1, m), static_cast<std::size_t>(k1 + 1),
                                             [k1](std::size_t j) { return k1 - static_cast<std::int64_t>(j) - 1; });
        const auto cs = decreasing_sequences(entry_cap(k2, m, amax + 1), static_cast<std::size_t>(k2 + 1),
                                             [k2](std::size_t j) { return k2 - static_cast<std::int64_t>(j) - 1; });
        std::map<ExactInt, std::vector<const Seq*>> by_value;
        for (const auto& c : cs) by_value[seq_value(c, k2)].push_back(&c);
        for (const auto& b : bs) {
            if (paired && (b.empty() || lex_cmp(b, lowered) < 0)) continue;
            const ExactInt vb = seq_value(b, k1);
            if (vb > m) continue;
            const auto it = by_value.find(m - vb);
            if (it == by_value.end()) continue;
            for (const Seq* c : it->second) {
                const AbckReport r = check_abck(a, b, *c, k, k1, k2);
                ++s.triples;
                bool ok = r.first.holds() && r.shifted.holds();
                if (paired) {
                    ok = ok && std::all_of(r.diagonal.begin() + 1, r.diagonal.end(),
                                           [](const InequalityRow& row) { return row.holds(); });
                }
                if (!ok) {
                    ++s.violations;
                    note(s.examples, "k1=" + std::to_string(k1) + " k2=" + std::to_string(k2) + " " + describe(a, b, *c, k));
                }
            }
        }
    });
    SweepSummary total;
    for (auto& p : parts) merge_summary(total, std::move(p));
    return total;
}

SplitsSummary sweep_splits(std::int64_t kmax, std::int64_t amax) {
    SplitsSummary s;
    for (std::int64_t k = 2; k <= kmax; ++k) {
        for (const auto& a : cascades_up_to(k, amax)) {
            if (static_cast<std::int64_t>(a.length()) >= k) continue;
            ++s.cascades;
            const auto formula = equality_splits(a, k);
            const auto search = exhaustive_equality_splits(a, k);
            std::vector<Split> extra;
            std::vector<Split> missing;
            std::set_difference(search.begin(), search.end(), formula.begin(), formula.end(), std::back_inserter(extra),
                                split_less);
            std::set_difference(formula.begin(), formula.end(), search.begin(), search.end(), std::back_inserter(missing),
                                split_less);
            if (extra.empty() && missing.empty()) continue;
            ++s.mismatches;
            s.extra_exhaustive += extra.size();
            s.missing_exhaustive += missing.size();
            for (const auto& [b, c] : extra) note(s.examples, "extra " + describe(a, b, c, k));
            for (const auto& [b, c] : missing) note(s.examples, "missing " + describe(a, b, c, k));
        }
    }
    return s;
}

double real_binom(double x, std::int64_t j) {
    if (j < 0) return 0.0;
    double r = 1.0;
    for (std::int64_t i = 0; i < j; ++i) r *= (x - static_cast<double>(i)) / static_cast<double>(i + 1);
    return r;
}

ConjectureReport conjecture_scan(std::int64_t k, const std::vector<double>& xs, std::size_t y_samples) {
    if (k < 2) throw PreconditionError("conjecture scan requires k >= 2");
    if (y_samples < 1) throw PreconditionError("conjecture scan needs at least one y sample");
    const auto kd = static_cast<double>(k);
    // Smallest z >= k - 2 with C(z, k-1) = target; C(., k-1) increases on [k-2, inf).
    auto solve_z = [&](double target) {
        double lo = kd - 2.0;
        double hi = std::max(lo + 1.0, 1.0);
        for (int grow = 0; real_binom(hi, k - 1) < target; ++grow) {
            if (grow > 200) throw ConvergenceError("could not bracket z");
            hi *= 2.0;
        }
        for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
            const double mid = 0.5 * (lo + hi);
            (real_binom(mid, k - 1) < target ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };
    ConjectureReport report;
    report.k = k;
    report.min_slack = INFINITY;
    for (const double x : xs) {
        if (x < kd) throw PreconditionError("conjecture scan requires x >= k");
        const double y_lo = std::max(x - 1.0, kd - 1.0);
        for (std::size_t s = 0; s <= y_samples; ++s) {
            const double y = y_lo + (x - y_lo) * static_cast<double>(s) / static_cast<double>(y_samples);
            const double z = solve_z(real_binom(x, k) - real_binom(y, k));
            const double slack = real_binom(y, k - 1) + real_binom(z, k - 2) - real_binom(x, k - 1);
            ++report.points;
            if (slack < report.min_slack) {
                report.min_slack = slack;
                report.worst = {x, y, z, slack};
            }
        }
    }
    return report;
}

}  // namespace shadowkit
