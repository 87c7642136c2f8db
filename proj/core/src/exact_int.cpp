#include "shadowkit/exact_int.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace shadowkit {

namespace {

constexpr ExactInt::rep kMin = static_cast<ExactInt::rep>(static_cast<unsigned __int128>(1) << 127);

}  // namespace

ExactInt ExactInt::parse(std::string_view text) {
    if (text.empty()) throw PreconditionError("empty integer literal");
    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) throw PreconditionError("integer literal has no digits");
    ExactInt value;
    for (; pos < text.size(); ++pos) {
        const char ch = text[pos];
        if (ch < '0' || ch > '9') throw PreconditionError("invalid integer literal: " + std::string(text));
        value *= 10;
        value = negative ? value - (ch - '0') : value + (ch - '0');
    }
    return value;
}

bool ExactInt::fits_int64() const noexcept {
    return v_ >= std::numeric_limits<std::int64_t>::min() && v_ <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t ExactInt::to_int64() const {
    if (!fits_int64()) throw OverflowError("value does not fit in 64 bits: " + to_string());
    return static_cast<std::int64_t>(v_);
}

std::string ExactInt::to_string() const {
    if (v_ == 0) return "0";
    std::string digits;
    rep v = v_;
    const bool negative = v < 0;
    while (v != 0) {
        int d = static_cast<int>(v % 10);
        if (d < 0) d = -d;
        digits.push_back(static_cast<char>('0' + d));
        v /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

ExactInt& ExactInt::operator/=(const ExactInt& o) {
    if (o.v_ == 0) throw PreconditionError("division by zero");
    if (v_ == kMin && o.v_ == -1) throw OverflowError("ExactInt division overflow");
    v_ /= o.v_;
    return *this;
}

ExactInt& ExactInt::operator%=(const ExactInt& o) {
    if (o.v_ == 0) throw PreconditionError("division by zero");
    if (o.v_ == -1) {
        v_ = 0;
        return *this;
    }
    v_ %= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactInt& x) { return os << x.to_string(); }

ExactInt abs(const ExactInt& x) { return x.sign() < 0 ? -x : x; }

ExactInt gcd(ExactInt a, ExactInt b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        ExactInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

}  // namespace shadowkit
