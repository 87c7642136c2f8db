#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "shadowkit/errors.hpp"

namespace shadowkit {

// Signed 128-bit integer whose arithmetic throws OverflowError instead of wrapping.
class ExactInt {
public:
    using rep = __int128;

    constexpr ExactInt() noexcept = default;

    template <std::integral T>
    constexpr ExactInt(T v) noexcept : v_(static_cast<rep>(v)) {}

    static constexpr ExactInt from_rep(rep v) noexcept {
        ExactInt r;
        r.v_ = v;
        return r;
    }

    // Parses an optionally signed decimal literal.
    static ExactInt parse(std::string_view text);

    [[nodiscard]] constexpr rep raw() const noexcept { return v_; }
    [[nodiscard]] bool fits_int64() const noexcept;
    [[nodiscard]] std::int64_t to_int64() const;
    [[nodiscard]] double to_double() const noexcept { return static_cast<double>(v_); }
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] constexpr int sign() const noexcept { return (v_ > 0) - (v_ < 0); }

    ExactInt& operator+=(const ExactInt& o) {
        if (__builtin_add_overflow(v_, o.v_, &v_)) throw OverflowError("ExactInt addition overflow");
        return *this;
    }
    ExactInt& operator-=(const ExactInt& o) {
        if (__builtin_sub_overflow(v_, o.v_, &v_)) throw OverflowError("ExactInt subtraction overflow");
        return *this;
    }
    ExactInt& operator*=(const ExactInt& o) {
        if (__builtin_mul_overflow(v_, o.v_, &v_)) throw OverflowError("ExactInt multiplication overflow");
        return *this;
    }
    // Truncating division.
    ExactInt& operator/=(const ExactInt& o);
    ExactInt& operator%=(const ExactInt& o);

    friend ExactInt operator+(ExactInt a, const ExactInt& b) { return a += b; }
    friend ExactInt operator-(ExactInt a, const ExactInt& b) { return a -= b; }
    friend ExactInt operator*(ExactInt a, const ExactInt& b) { return a *= b; }
    friend ExactInt operator/(ExactInt a, const ExactInt& b) { return a /= b; }
    friend ExactInt operator%(ExactInt a, const ExactInt& b) { return a %= b; }
    ExactInt operator-() const { return ExactInt{} - *this; }

    friend constexpr bool operator==(const ExactInt& a, const ExactInt& b) noexcept { return a.v_ == b.v_; }
    friend constexpr std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) noexcept {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    rep v_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ExactInt& x);

ExactInt gcd(ExactInt a, ExactInt b);
ExactInt abs(const ExactInt& x);

}  // namespace shadowkit
