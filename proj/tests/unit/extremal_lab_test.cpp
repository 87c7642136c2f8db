#include <doctest.h>

#include <map>

#include "bridge.hpp"
#include "doctest_printers.hpp"
#include "oracle.hpp"
#include "shadowkit/binomial.hpp"
#include "shadowkit/errors.hpp"
#include "shadowkit/extremal.hpp"
#include "shadowkit/family.hpp"
#include "shadowkit/isomorphism.hpp"
#include "shadowkit/search.hpp"
#include "shadowkit/sweeps.hpp"

using namespace shadowkit;

namespace {

std::vector<Mask> layer_sets(int n, int k) {
    const KFamily layer = full_layer(n, k);
    return {layer.sets().begin(), layer.sets().end()};
}

KFamily fam(int n, int k, std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<Mask> masks;
    for (const auto& s : sets) masks.push_back(mask_of(s));
    return {n, k, std::move(masks)};
}

KFamily two_forbidden_pairs() {
    std::vector<Mask> keep;
    for (const Mask s : layer_sets(6, 3)) {
        const bool a = (s & mask_of({1, 2})) == mask_of({1, 2});
        const bool b = (s & mask_of({3, 4})) == mask_of({3, 4});
        if (!a && !b) keep.push_back(s);
    }
    return {6, 3, keep};
}

}  // namespace

TEST_SUITE("extremal_lab") {

TEST_CASE("shadow bound examples") {
    CHECK(kk_bound(11, 3, 1) == 12);
    CHECK(kk_bound(14, 4, 1) == 20);
    CHECK(kk_bound(14, 4, 0) == 14);
    CHECK(kk_bound(0, 3, 1) == 0);
    for (int n = 3; n <= 12; ++n) {
        for (int k = 2; k < n; ++k) REQUIRE(kk_bound(binom(n, k), k, 1) == binom(n, k - 1));
    }
    CHECK_THROWS_AS(kk_bound(5, 3, 4), PreconditionError);
    CHECK_THROWS_AS(kk_bound(-1, 3, 1), PreconditionError);
}

TEST_CASE("extremality examples") {
    CHECK(is_extremal(initial_segment(6, 3, 12)));
    CHECK(shadow(two_forbidden_pairs()).size() == 13);
    CHECK(is_extremal(two_forbidden_pairs()));
    CHECK_FALSE(is_extremal(fam(6, 3, {{1, 2, 3}, {4, 5, 6}})));
    CHECK(kk_bound(2, 3, 1) == 5);
    CHECK_THROWS_AS((void)is_extremal(KFamily(6, 3, {})), PreconditionError);
}

TEST_CASE("shadow chain") {
    CHECK(shadow_chain_check(fam(4, 4, {{1, 2, 3, 4}})));
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= 4 && k <= n; ++k) {
            const std::int64_t top = binom(n, k).to_int64();
            for (std::int64_t m = 1; m <= top; ++m) REQUIRE(shadow_chain_check(initial_segment(n, k, m)));
        }
    }
    CHECK_THROWS_AS((void)shadow_chain_check(fam(6, 3, {{1, 2, 3}, {4, 5, 6}})), PreconditionError);
}

TEST_CASE("characterization of the colex segment") {
    const KFamily seg = initial_segment(6, 3, 12);
    const CharacterizationReport report = characterize(seg);
    CHECK(report.verdict);
    CHECK(report.cascade == Seq{5, 2, 1});
    REQUIRE(report.elements.size() == 6);
    const ElementReport& last = report.elements[5];
    CHECK(last.element == 6);
    CHECK(last.branch == Branch::strict);
    CHECK(last.deletion_size == 10);
    CHECK(last.threshold == 4);
    CHECK(last.deletion_cascade == Seq{5});
    CHECK(last.link_cascade == Seq{2, 1});
    CHECK(last.satisfied);
    CHECK(certify_by_witness(seg, 6));
}

TEST_CASE("characterization of the two-forbidden-pairs family") {
    const CharacterizationReport report = characterize(two_forbidden_pairs());
    CHECK(report.verdict);
    for (const auto& e : report.elements) CHECK(e.satisfied);
}

TEST_CASE("characterization preconditions") {
    CHECK_THROWS_AS(characterize(fam(7, 3, {{1, 2, 3}, {4, 5, 6}})), PreconditionError);
    CHECK_THROWS_AS(characterize(KFamily(3, 3, {})), PreconditionError);
    CHECK_THROWS_AS(characterize(fam(3, 1, {{1}, {2}, {3}})), PreconditionError);
    // Single elements may be probed without full support.
    CHECK_NOTHROW(evaluate_element(fam(7, 3, {{1, 2, 3}, {4, 5, 6}}), 7));
}

TEST_CASE("minimum degree bound") {
    const KFamily seg = initial_segment(6, 3, 12);
    CHECK(min_degree_bound_check(seg));
    CHECK(decompose(12 - 2, 3) == Seq{5});
    CHECK(lex_cmp(Seq{5}, seq_minus(Seq{5, 2, 1}, 1)) == std::strong_ordering::greater);
    const KFamily layer = full_layer(5, 3);
    CHECK(min_degree_bound_check(layer));
    CHECK(decompose(10 - 6, 3) == Seq{4});
    CHECK(lex_cmp(Seq{4}, seq_minus(Seq{5}, 1)) == std::strong_ordering::equal);
    CHECK_THROWS_AS((void)min_degree_bound_check(fam(3, 3, {{1, 2, 3}})), PreconditionError);
}

TEST_CASE("brute-force minimum shadow examples") {
    CHECK(brute_force_min_shadow(5, 3, 4) == 6);
    CHECK(brute_force_min_shadow(6, 3, 12) == 13);
    for (int n = 3; n <= 6; ++n) {
        for (int k = 2; k < n; ++k) CHECK(brute_force_min_shadow(n, k, binom(n, k)) == binom(n, k - 1));
    }
    SearchOptions tight;
    tight.node_budget = 10;
    CHECK_THROWS_AS(brute_force_min_shadow(6, 3, 10, tight), BudgetExceeded);
}

TEST_CASE("brute force and the bound agree with plain enumeration") {
    for (int n = 2; n <= 6; ++n) {
        for (int k = 1; k < n; ++k) {
            const auto layer = static_cast<std::size_t>(binom(n, k).to_int64());
            if (layer > 15) continue;
            for (std::size_t m = 1; m <= layer; ++m) {
                const ExactInt expected = static_cast<std::int64_t>(oracle::min_shadow(n, k, m));
                const ExactInt count = static_cast<std::int64_t>(m);
                REQUIRE(brute_force_min_shadow(n, k, count) == expected);
                REQUIRE(kk_bound(count, k, 1) == expected);
            }
        }
    }
}

TEST_CASE("characterization agrees with extremality on five points") {
    const auto sets = layer_sets(5, 3);
    std::map<std::size_t, std::size_t> min_shadow;
    for (std::size_t m = 1; m <= sets.size(); ++m) min_shadow[m] = oracle::min_shadow(5, 3, m);
    std::size_t extremal = 0;
    for (std::uint32_t sel = 1; sel < (1U << sets.size()); ++sel) {
        std::vector<Mask> chosen;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if ((sel >> i) & 1U) chosen.push_back(sets[i]);
        }
        const KFamily f(5, 3, chosen);
        const bool expected = oracle::shadow(bridge::to_oracle(f)).size() == min_shadow[f.size()];
        extremal += expected ? 1 : 0;
        REQUIRE(is_extremal(f) == expected);
        const KFamily compact = compact_support(f).family;
        const CharacterizationReport report = characterize(compact);
        REQUIRE(report.verdict == expected);
        if (!expected) {
            for (int x = 1; x <= compact.n(); ++x) REQUIRE_FALSE(certify_by_witness(compact, x));
        }
    }
    CHECK(extremal > 0);
}

TEST_CASE("exhaustive family sweeps are clean") {
    const FamilySweepReport small = sweep_all_families(5, 3);
    CHECK(small.families == 1023);
    CHECK(small.clean());
    CHECK(small.min_degree_checked > 0);
    const FamilySweepReport pairs = sweep_all_families(5, 2, 2);
    CHECK(pairs.families == 1023);
    CHECK(pairs.clean());
    CHECK_THROWS_AS(sweep_all_families(7, 3), PreconditionError);
}

TEST_CASE("uniqueness predicate") {
    CHECK(uniqueness_predicate(6, 3, 10));
    CHECK(uniqueness_predicate(6, 3, 19));
    CHECK_FALSE(uniqueness_predicate(6, 3, 12));
    CHECK(uniqueness_predicate(6, 3, 9));
    CHECK_THROWS_AS((void)uniqueness_predicate(6, 3, 21), PreconditionError);
}

TEST_CASE("extremal enumeration examples") {
    const auto nineteen = enumerate_extremal(6, 3, 19, false, EnumerationMethod::exhaustive);
    CHECK(nineteen.size() == 20);
    for (const auto& f : nineteen) CHECK(are_isomorphic(f, nineteen.front()));
    CHECK(enumerate_extremal(6, 3, 19, true, EnumerationMethod::exhaustive).size() == 1);
    CHECK(enumerate_extremal(6, 3, 10, true, EnumerationMethod::exhaustive).size() == 1);
    const auto twelve = enumerate_extremal(6, 3, 12, true, EnumerationMethod::exhaustive);
    CHECK(twelve.size() == 5);
    bool has_pairs = false;
    bool has_segment = false;
    for (const auto& f : twelve) {
        has_pairs = has_pairs || are_isomorphic(f, two_forbidden_pairs());
        has_segment = has_segment || are_isomorphic(f, initial_segment(6, 3, 12));
    }
    CHECK(has_pairs);
    CHECK(has_segment);
}

TEST_CASE("enumeration methods agree") {
    for (int n = 4; n <= 6; ++n) {
        for (int k = 2; k <= 3 && k < n; ++k) {
            const std::int64_t top = binom(n, k).to_int64();
            for (std::int64_t m = 1; m <= top; ++m) {
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(m);
                const auto ex = enumerate_extremal(n, k, m, false, EnumerationMethod::exhaustive);
                const auto rec = enumerate_extremal(n, k, m, false, EnumerationMethod::recursive);
                REQUIRE(ex == rec);
                for (const auto& f : ex) REQUIRE(is_extremal(f));
            }
        }
    }
    SearchOptions threaded;
    threaded.threads = 3;
    CHECK(enumerate_extremal(6, 3, 12, true, EnumerationMethod::exhaustive, threaded) ==
          enumerate_extremal(6, 3, 12, true, EnumerationMethod::exhaustive));
}

TEST_CASE("uniqueness table at the desk scale") {
    const std::vector<std::size_t> classes{1, 1, 1, 1, 1, 2, 1, 2, 1, 1, 1, 5, 1, 8, 2, 1, 7, 3, 1, 1};
    const auto rows = uniqueness_table(6, 3, EnumerationMethod::recursive);
    REQUIRE(rows.size() == 20);
    for (const auto& row : rows) {
        CAPTURE(row.m);
        CHECK(row.classes == classes[static_cast<std::size_t>(row.m - 1)]);
        CHECK(row.agrees());
    }
}

}  // TEST_SUITE
