#include "shadowkit/binomial_sum.hpp"

#include <cctype>
#include <vector>

#include "shadowkit/errors.hpp"

namespace shadowkit {

void BinomialSum::add(std::int64_t upper, std::int64_t lower, const ExactInt& coeff) {
    if (coeff == 0) return;
    const LatticePoint key{upper, lower};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

ExactInt BinomialSum::coefficient(const LatticePoint& p) const {
    const auto it = terms_.find(p);
    return it == terms_.end() ? ExactInt(0) : it->second;
}

ExactInt BinomialSum::eval(BinomialConvention conv) const {
    ExactInt total;
    for (const auto& [p, c] : terms_) total += c * binom(p.upper, p.lower, conv);
    return total;
}

BinomialSum& BinomialSum::operator+=(const BinomialSum& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

BinomialSum& BinomialSum::operator-=(const BinomialSum& o) {
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
}

BinomialSum translate(const BinomialSum& s, std::int64_t r, std::int64_t slide) {
    BinomialSum out;
    for (const auto& [p, c] : s.terms()) out.add(p.upper + r, p.lower + slide, c);
    return out;
}

BinomialSum normal_form(const BinomialSum& s) {
    if (s.empty()) return s;
    const std::int64_t floor = s.terms().begin()->first.upper;
    BinomialSum work = s;
    while (work.terms().rbegin()->first.upper > floor) {
        const std::int64_t top = work.terms().rbegin()->first.upper;
        std::vector<std::pair<LatticePoint, ExactInt>> level;
        for (auto it = work.terms().lower_bound({top, INT64_MIN}); it != work.terms().end(); ++it) {
            level.emplace_back(it->first, it->second);
        }
        for (const auto& [p, c] : level) {
            work.add(p, -c);
            work.add(p.upper - 1, p.lower, c);
            work.add(p.upper - 1, p.lower - 1, c);
        }
        if (work.empty()) break;
    }
    return work;
}

bool is_invariantly_zero(const BinomialSum& s) { return normal_form(s).empty(); }

bool vanishes_on_grid(const BinomialSum& s, std::int64_t lo, std::int64_t hi) {
    for (std::int64_t r = lo; r <= hi; ++r) {
        for (std::int64_t t = lo; t <= hi; ++t) {
            if (translate(s, r, t).eval() != 0) return false;
        }
    }
    return true;
}

BinomialSum expand(const Seq& s, std::int64_t level) {
    BinomialSum out;
    std::int64_t lower = level;
    for (const auto a : s.terms()) out.add(a, lower--);
    return out;
}

std::string to_string(const BinomialSum& s) {
    if (s.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : s.terms()) {
        ExactInt mag = c;
        if (c < 0) {
            out += first ? "-" : " - ";
            mag = -c;
        } else if (!first) {
            out += " + ";
        }
        if (mag != 1) out += mag.to_string() + "*";
        out += "C(" + std::to_string(p.upper) + "," + std::to_string(p.lower) + ")";
        first = false;
    }
    return out;
}

namespace {

class SumParser {
public:
    explicit SumParser(std::string_view text) : text_(text) {}

    BinomialSum parse() {
        BinomialSum out;
        skip_space();
        if (at_end()) throw PreconditionError("empty binomial sum");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = take() == '-' ? -1 : 1;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            ExactInt coeff = 1;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff = integer();
                skip_space();
                expect('*');
                skip_space();
            }
            expect('C');
            skip_space();
            expect('(');
            const ExactInt upper = signed_integer();
            skip_space();
            expect(',');
            const ExactInt lower = signed_integer();
            skip_space();
            expect(')');
            skip_space();
            out.add(upper.to_int64(), lower.to_int64(), sign < 0 ? -coeff : coeff);
            first = false;
        }
        return out;
    }

private:
    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char take() { return text_[pos_++]; }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw PreconditionError("cannot parse binomial sum at offset " + std::to_string(pos_) + ": " + what);
    }
    void expect(char ch) {
        if (peek() != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }
    ExactInt integer() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return ExactInt::parse(text_.substr(start, pos_ - start));
    }
    ExactInt signed_integer() {
        skip_space();
        bool negative = false;
        if (peek() == '-' || peek() == '+') negative = take() == '-';
        skip_space();
        const ExactInt v = integer();
        return negative ? -v : v;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

BinomialSum parse_binomial_sum(std::string_view text) { return SumParser(text).parse(); }

}  // namespace shadowkit
