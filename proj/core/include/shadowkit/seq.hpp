#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "shadowkit/binomial.hpp"
#include "shadowkit/exact_int.hpp"

namespace shadowkit {

// Finite integer sequence (a_0, ..., a_t). The level at which it is read as
// a binomial sum is supplied by each evaluation call.
class Seq {
public:
    Seq() = default;
    Seq(std::initializer_list<std::int64_t> terms) : terms_(terms) {}
    explicit Seq(std::vector<std::int64_t> terms) : terms_(std::move(terms)) {}

    [[nodiscard]] std::span<const std::int64_t> terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t length() const noexcept { return terms_.size(); }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::int64_t operator[](std::size_t i) const { return terms_.at(i); }
    [[nodiscard]] std::int64_t front() const { return terms_.at(0); }
    [[nodiscard]] std::int64_t back() const { return terms_.at(terms_.size() - 1); }

    void push_back(std::int64_t v) { terms_.push_back(v); }
    void pop_back() { terms_.pop_back(); }

    bool operator==(const Seq&) const = default;

private:
    std::vector<std::int64_t> terms_;
};

// Sum over i of C(s_i, level - i).
ExactInt seq_value(const Seq& s, std::int64_t level,
                   BinomialConvention conv = BinomialConvention::generalized);

// Sum over r of C(s_r - i, level - j - r).
ExactInt seq_shift(const Seq& s, std::int64_t i, std::int64_t j, std::int64_t level,
                   BinomialConvention conv = BinomialConvention::generalized);

// Greedy cascade: the unique k-binomial decomposition of m. Requires m >= 0, k >= 1.
Seq decompose(const ExactInt& m, std::int64_t k);

// Element-wise order; a strict prefix is smaller than its extension.
std::strong_ordering lex_cmp(const Seq& a, const Seq& b);

// Every term decreased by d.
Seq seq_minus(const Seq& s, std::int64_t d);

bool is_strictly_decreasing(const Seq& s);
bool is_nonneg(const Seq& s);
// Strictly decreasing, length <= k, last term a_t >= k - t >= 1. The empty sequence qualifies.
bool is_k_binomial(const Seq& s, std::int64_t k);

// Componentwise maximum and minimum of two sequences. The longer tail joins the maximum.
Seq seq_max(const Seq& a, const Seq& b);
Seq seq_min(const Seq& a, const Seq& b);

std::string to_string(const Seq& s);

}  // namespace shadowkit
