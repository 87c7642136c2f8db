#include "shadowkit/extremal.hpp"

#include <algorithm>

#include "shadowkit/binomial.hpp"
#include "shadowkit/errors.hpp"

namespace shadowkit {

namespace {

bool extremal_or_false(const KFamily& s) { return !s.empty() && is_extremal(s); }

bool is_subfamily(const KFamily& inner, const KFamily& outer) {
    return std::includes(outer.sets().begin(), outer.sets().end(), inner.sets().begin(), inner.sets().end());
}

void require_characterizable(const KFamily& s) {
    if (s.empty()) throw PreconditionError("characterization requires a nonempty family");
    if (s.k() < 2) throw PreconditionError("characterization requires k >= 2");
}

}  // namespace

ExactInt kk_bound(const ExactInt& m, std::int64_t k, std::int64_t steps) {
    if (m < 0) throw PreconditionError("bound requires m >= 0");
    if (k < 1) throw PreconditionError("bound requires k >= 1");
    if (steps < 0 || steps > k) throw PreconditionError("bound requires 0 <= steps <= k");
    if (steps == 0) return m;
    return seq_value(decompose(m, k), k - steps);
}

bool is_extremal(const KFamily& s) {
    if (s.empty()) throw PreconditionError("extremality is undefined for the empty family");
    if (s.k() < 1) throw PreconditionError("extremality requires k >= 1");
    return ExactInt(shadow(s).size()) == kk_bound(ExactInt(s.size()), s.k(), 1);
}

bool shadow_chain_check(const KFamily& s) {
    if (!is_extremal(s)) throw PreconditionError("shadow chain check requires an extremal family");
    const Seq cascade = decompose(ExactInt(s.size()), s.k());
    KFamily cur = s;
    for (int steps = 1; steps <= s.k() - 1; ++steps) {
        cur = shadow(cur);
        if (ExactInt(cur.size()) != seq_value(cascade, s.k() - steps)) return false;
    }
    return true;
}

std::string_view to_string(Branch b) {
    switch (b) {
        case Branch::strict: return "strict";
        case Branch::equality: return "equality";
        case Branch::below: return "below";
    }
    return "unknown";
}

ElementReport evaluate_element(const KFamily& s, int x) {
    require_characterizable(s);
    const std::int64_t k = s.k();
    const Seq cascade = decompose(ExactInt(s.size()), k);
    const KFamily deletion = delete_star(s, x);
    const KFamily lk = link(s, x);

    ElementReport r;
    r.element = x;
    r.deletion_size = ExactInt(deletion.size());
    r.link_size = ExactInt(lk.size());
    r.threshold = seq_value(seq_minus(cascade, 1), k);
    r.deletion_cascade = decompose(r.deletion_size, k);
    r.link_cascade = decompose(r.link_size, k - 1);
    r.branch = r.deletion_size > r.threshold    ? Branch::strict
               : r.deletion_size == r.threshold ? Branch::equality
                                                : Branch::below;

    const KFamily deletion_shadow = shadow(deletion);
    r.inclusion = is_subfamily(lk, deletion_shadow);
    r.reverse_inclusion = is_subfamily(deletion_shadow, lk);
    r.deletion_extremal = extremal_or_false(deletion);
    r.link_extremal = extremal_or_false(lk);
    r.numerical_equality =
        seq_value(cascade, k - 1) == seq_value(r.deletion_cascade, k - 1) + seq_value(r.link_cascade, k - 2);

    switch (r.branch) {
        case Branch::strict:
            r.satisfied = r.inclusion && r.deletion_extremal && r.link_extremal && r.numerical_equality;
            break;
        case Branch::equality:
            r.satisfied = r.reverse_inclusion && r.link_extremal;
            break;
        case Branch::below:
            r.satisfied = false;
            break;
    }
    return r;
}

CharacterizationReport characterize(const KFamily& s) {
    require_characterizable(s);
    if (!s.has_full_support()) throw PreconditionError("characterization requires support equal to [n]");
    CharacterizationReport report;
    report.cascade = decompose(ExactInt(s.size()), s.k());
    report.verdict = true;
    for (int x = 1; x <= s.n(); ++x) {
        report.elements.push_back(evaluate_element(s, x));
        report.verdict = report.verdict && report.elements.back().satisfied;
    }
    return report;
}

bool certify_by_witness(const KFamily& s, int x) {
    require_characterizable(s);
    if (!s.has_full_support()) throw PreconditionError("characterization requires support equal to [n]");
    return evaluate_element(s, x).satisfied;
}

bool min_degree_bound_check(const KFamily& s) {
    if (s.size() < 2) throw PreconditionError("minimum-degree check requires |S| > 1");
    if (!(s.n() > s.k() && s.k() > 1)) throw PreconditionError("minimum-degree check requires n > k > 1");
    if (!s.has_full_support()) throw PreconditionError("minimum-degree check requires support equal to [n]");
    const int x = min_degree_element(s);
    const Seq cascade = decompose(ExactInt(s.size()), s.k());
    const Seq rest = decompose(ExactInt(s.size() - degree(s, x)), s.k());
    return !rest.empty() && lex_cmp(rest, seq_minus(cascade, 1)) >= 0;
}

bool uniqueness_predicate(std::int64_t n, std::int64_t k, const ExactInt& m) {
    if (k < 1 || n < k) throw PreconditionError("uniqueness predicate requires n >= k >= 1");
    if (m <= 0 || m > binom(n, k)) throw PreconditionError("uniqueness predicate requires 0 < m <= C(n,k)");
    if (static_cast<std::int64_t>(decompose(m, k).length()) < k) return true;
    for (std::int64_t top = k + 1; top <= n; ++top) {
        if (m == binom(top, k) - 1) return true;
    }
    return false;
}

}  // namespace shadowkit
