#include <doctest.h>

#include "doctest_printers.hpp"
#include "oracle.hpp"
#include "bridge.hpp"
#include "shadowkit/binomial.hpp"
#include "shadowkit/errors.hpp"
#include "shadowkit/exact_int.hpp"
#include "shadowkit/seq.hpp"

using namespace shadowkit;

TEST_SUITE("exact_arith") {

TEST_CASE("checked integer arithmetic") {
    const ExactInt big = ExactInt::parse("170141183460469231731687303715884105727");
    CHECK(big.to_string() == "170141183460469231731687303715884105727");
    CHECK_THROWS_AS(big + 1, OverflowError);
    CHECK_THROWS_AS(big * 2, OverflowError);
    CHECK_THROWS_AS(-big - 2, OverflowError);
    CHECK((-big - 1).to_string() == "-170141183460469231731687303715884105728");
    CHECK(ExactInt::parse("-42") == -42);
    CHECK(ExactInt::parse("+7") == 7);
    CHECK_THROWS_AS(ExactInt::parse("12x"), PreconditionError);
    CHECK_THROWS_AS(ExactInt::parse(""), PreconditionError);
    CHECK_THROWS_AS(ExactInt::parse("999999999999999999999999999999999999999999"), OverflowError);
    CHECK_THROWS_AS(ExactInt(1) / 0, PreconditionError);
    CHECK(ExactInt(-7) / 2 == -3);
    CHECK(gcd(ExactInt(12), ExactInt(-18)) == 6);
    CHECK(ExactInt(5).fits_int64());
    CHECK_FALSE(big.fits_int64());
    CHECK_THROWS_AS((void)big.to_int64(), OverflowError);
}

TEST_CASE("binomial coefficients") {
    CHECK(binom(5, 3) == 10);
    CHECK(binom(5, 3) == binom(5, 2));
    CHECK(binom(-10, 1) == -10);
    CHECK(binom(-10, 2) == 55);
    CHECK(binom(3, -1) == 0);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(-3, 0) == 1);
    CHECK(binom(2, 5) == 0);
    CHECK(binom(-10, 2, BinomialConvention::strict) == 0);
    CHECK(binom(120, 4) == 8214570);
    CHECK_THROWS_AS(binom(300, 150), OverflowError);
}

TEST_CASE("binomials agree with the falling-factorial oracle and Pascal's rule") {
    for (std::int64_t n = -20; n <= 40; ++n) {
        for (std::int64_t k = -2; k <= 12; ++k) {
            REQUIRE(binom(n, k) == bridge::exact(oracle::binom(n, k)));
        }
    }
    for (std::int64_t n = -20; n <= 120; ++n) {
        for (std::int64_t k = -2; k <= 12; ++k) {
            if (k == 0) continue;  // C(n,0) = 1 is a convention, not a Pascal step
            REQUIRE(binom(n, k) == binom(n - 1, k) + binom(n - 1, k - 1));
        }
    }
    for (std::int64_t n = 0; n <= 60; ++n) {
        for (std::int64_t k = 0; k <= n; ++k) REQUIRE(binom(n, k) == bridge::exact(oracle::pascal(n, k)));
    }
}

TEST_CASE("sequence values") {
    CHECK(seq_value(Seq{4, 2}, 3) == 5);
    CHECK(seq_value(Seq{3, 2, -10}, 3) == -8);
    CHECK(seq_value(Seq{-10, -42}, 2) == 13);
    CHECK(seq_value(Seq{}, 7) == 0);
    CHECK(seq_shift(Seq{5, 2}, 1, 0, 3) == 4);
    CHECK(seq_shift(Seq{5, 4, 3, 2}, 1, 1, 4) == 10);
    for (const Seq& s : {Seq{7, 4, 1}, Seq{5}, Seq{}, Seq{9, 8, 2, 1}}) {
        CHECK(seq_shift(s, 0, 0, 4) == seq_value(s, 4));
    }
}

TEST_CASE("cascade decomposition examples") {
    CHECK(decompose(10, 3) == Seq{5});
    CHECK(decompose(14, 4) == Seq{5, 4, 3, 2});
    CHECK(decompose(11, 3) == Seq{5, 2});
    CHECK(decompose(0, 3).empty());
    CHECK(decompose(12, 3) == Seq{5, 2, 1});
    CHECK_THROWS_AS(decompose(-1, 3), PreconditionError);
    CHECK_THROWS_AS(decompose(5, 0), PreconditionError);
}

TEST_CASE("decompose inverts seq_value and yields a k-binomial sequence") {
    for (std::int64_t k = 1; k <= 8; ++k) {
        for (std::int64_t m = 0; m <= 1'000'000; ++m) {
            const Seq s = decompose(m, k);
            if (seq_value(s, k) != m || !is_k_binomial(s, k)) {
                FAIL("decompose(" << m << "," << k << ") = " << to_string(s));
            }
        }
    }
}

TEST_CASE("decomposition is unique against exhaustive search") {
    for (std::int64_t k = 1; k <= 5; ++k) {
        for (std::int64_t m = 0; m <= 200; ++m) {
            const auto all = oracle::all_decompositions(m, k, 200 + k);
            REQUIRE(all.size() == 1);
            CHECK(decompose(m, k) == Seq(all.front()));
        }
    }
}

TEST_CASE("decompose preserves order") {
    for (std::int64_t k = 1; k <= 5; ++k) {
        Seq prev = decompose(0, k);
        for (std::int64_t m = 1; m <= 2000; ++m) {
            const Seq cur = decompose(m, k);
            REQUIRE(lex_cmp(prev, cur) == std::strong_ordering::less);
            prev = cur;
        }
    }
}

TEST_CASE("lex order") {
    CHECK(lex_cmp(Seq{5, 3}, Seq{5, 2, 1}) == std::strong_ordering::greater);
    CHECK(lex_cmp(Seq{4, 1}, Seq{4, 1, 0}) == std::strong_ordering::less);
    CHECK(lex_cmp(Seq{}, Seq{0}) == std::strong_ordering::less);
    CHECK(lex_cmp(Seq{3, 2}, Seq{3, 2}) == std::strong_ordering::equal);
}

TEST_CASE("seq_minus and the Pascal split of a cascade") {
    CHECK(seq_minus(Seq{5, 2, 1}, 1) == Seq{4, 1, 0});
    CHECK(seq_minus(Seq{}, 3).empty());
    const Seq a{5, 3};
    const Seq lowered = seq_minus(a, 1);
    CHECK(seq_value(a, 3) == 13);
    CHECK(seq_value(lowered, 3) == 5);
    CHECK(seq_value(lowered, 2) == 8);
    CHECK(seq_value(lowered, 3) + seq_value(lowered, 2) == seq_value(a, 3));
}

TEST_CASE("sequence predicates") {
    CHECK(is_strictly_decreasing(Seq{5, 3, 1}));
    CHECK_FALSE(is_strictly_decreasing(Seq{5, 5}));
    CHECK(is_nonneg(Seq{2, 0}));
    CHECK_FALSE(is_nonneg(Seq{2, -1}));
    CHECK(is_k_binomial(Seq{}, 3));
    CHECK(is_k_binomial(Seq{5, 2, 1}, 3));
    CHECK_FALSE(is_k_binomial(Seq{5, 2, 0}, 3));
    CHECK_FALSE(is_k_binomial(Seq{5, 4, 3, 2}, 3));
    CHECK(seq_max(Seq{5, 1}, Seq{4, 3, 2}) == Seq{5, 3, 2});
    CHECK(seq_min(Seq{5, 1}, Seq{4, 3, 2}) == Seq{4, 1});
}

TEST_CASE("re-decomposing a lower level keeps the next level, plain and shifted") {
    for (std::int64_t k = 2; k <= 6; ++k) {
        for (std::int64_t top = k; top <= 12; ++top) {
            for (std::int64_t m = binom(top, k).to_int64(); m < binom(top + 1, k).to_int64(); ++m) {
                const Seq b = decompose(m, k);
                for (std::int64_t i = 1; i < k; ++i) {
                    const Seq plain = decompose(seq_value(b, k - i), k - i);
                    REQUIRE(seq_value(plain, k - i - 1) == seq_value(b, k - i - 1));
                    const Seq shifted = decompose(seq_shift(b, i, i, k), k - i);
                    REQUIRE(seq_shift(shifted, 1, 1, k - i) == seq_shift(b, i + 1, i + 1, k));
                }
            }
        }
    }
}

}  // TEST_SUITE
