#pragma once

// Text input: polynomials such as "2*x*y^2 - z^3" and rational numbers.
//
//   poly   := [sign] term { sign term }
//   term   := [rational] ['*'] { var ['^' posint] ['*'] }
//   var    := x | y | z | x<index>          (x, y, z alias x1, x2, x3)
//
// Whitespace is insignificant; U+2212 is accepted as a minus sign.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"
#include "wpoly.hpp"

namespace ktjurina {

namespace detail {

class PolyLexer {
public:
    explicit PolyLexer(std::string_view s) : s_(s) {}

    std::size_t pos() const noexcept { return pos_; }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    // '+' -> +1, '-' or U+2212 -> -1, otherwise 0.
    int accept_sign() {
        skip_ws();
        if (accept('+')) return 1;
        if (accept('-')) return -1;
        if (s_.substr(pos_, 3) == "\xE2\x88\x92") {
            pos_ += 3;
            return -1;
        }
        return 0;
    }

    std::optional<Integer> accept_digits() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) return std::nullopt;
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    // Returns the zero-based variable index.
    std::optional<std::size_t> accept_variable() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_]))) return std::nullopt;
        const std::size_t start = pos_;
        const char c = s_[pos_++];
        if (c == 'y') return 1;
        if (c == 'z') return 2;
        if (c != 'x') throw parse_error("unknown identifier '" + std::string(1, c) + "'", start);
        std::size_t digits = pos_;
        while (digits < s_.size() && std::isdigit(static_cast<unsigned char>(s_[digits]))) ++digits;
        if (digits == pos_) return 0;
        const auto index = std::stoul(std::string(s_.substr(pos_, digits - pos_)));
        if (index == 0) throw parse_error("variable indices start at x1", start);
        pos_ = digits;
        return index - 1;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

// Parses a polynomial. The arity is the largest variable index used, or
// min_nvars when that is larger.
inline WPolynomial parse_polynomial(std::string_view text, std::size_t min_nvars = 0) {
    detail::PolyLexer lex(text);
    if (lex.at_end()) throw parse_error("empty input", lex.pos());

    struct RawTerm {
        Rational coeff;
        std::vector<unsigned> exps;
    };
    std::vector<RawTerm> raw;
    std::size_t nvars = min_nvars;

    int sign = lex.accept_sign();
    if (sign == 0) sign = 1;
    while (true) {
        const std::size_t term_start = lex.pos();
        RawTerm t{Rational(sign), {}};
        bool has_content = false;
        if (auto num = lex.accept_digits()) {
            Integer den = 1;
            if (lex.accept('/')) {
                const std::size_t at = lex.pos();
                auto d = lex.accept_digits();
                if (!d || *d == 0) throw parse_error("expected a nonzero denominator", at);
                den = *d;
            }
            t.coeff *= Rational(*num, den);
            has_content = true;
            lex.accept('*');
        }
        while (true) {
            auto v = lex.accept_variable();
            if (!v) break;
            has_content = true;
            unsigned e = 1;
            lex.skip_ws();
            const std::size_t caret = lex.pos();
            if (lex.accept('^')) {
                auto digits = lex.accept_digits();
                if (!digits || *digits == 0) throw parse_error("exponent must be a positive integer", caret);
                e = static_cast<unsigned>(*digits);
            }
            if (t.exps.size() <= *v) t.exps.resize(*v + 1, 0);
            t.exps[*v] += e;
            nvars = std::max(nvars, *v + 1);
            if (!lex.accept('*')) continue;
            if (lex.at_end()) throw parse_error("dangling '*'", lex.pos());
        }
        if (!has_content) throw parse_error("expected a term", term_start);
        raw.push_back(std::move(t));
        if (lex.at_end()) break;
        const std::size_t op_at = lex.pos();
        sign = lex.accept_sign();
        if (sign == 0) throw parse_error("unexpected character '" + std::string(1, lex.peek()) + "'", op_at);
        if (lex.at_end()) throw parse_error("expected a term after sign", lex.pos());
    }

    if (nvars == 0) nvars = 1;
    WPolynomial f(nvars);
    for (auto& t : raw) {
        t.exps.resize(nvars, 0);
        f.add_term(Monomial(std::move(t.exps)), t.coeff);
    }
    return f;
}

// "3", "-2", "3/2"
inline Rational parse_rational(std::string_view text) {
    detail::PolyLexer lex(text);
    int sign = lex.accept_sign();
    if (sign == 0) sign = 1;
    auto num = lex.accept_digits();
    if (!num) throw parse_error("expected a number", lex.pos());
    Integer den = 1;
    if (lex.accept('/')) {
        const std::size_t at = lex.pos();
        auto d = lex.accept_digits();
        if (!d || *d == 0) throw parse_error("expected a nonzero denominator", at);
        den = *d;
    }
    if (!lex.at_end()) throw parse_error("trailing characters", lex.pos());
    return Rational(*num * sign, den);
}

// Comma-separated rationals.
inline std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        try {
            out.push_back(parse_rational(piece));
        } catch (const parse_error& e) {
            throw parse_error("bad list entry '" + std::string(piece) + "'", start + e.offset());
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace ktjurina
