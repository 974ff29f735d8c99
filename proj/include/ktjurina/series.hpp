#pragma once

// Rational generating functions in one variable t, and the Hilbert-Poincare
// series sum_k mu_k t^k and sum_k tau_k t^k assembled from their ingredients.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "invariants.hpp"
#include "linalg.hpp"
#include "wpoly.hpp"

namespace ktjurina {

// Dense integer polynomial in t, coefficients from t^0 upwards, no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<std::int64_t> coeffs) {
        for (auto c : coeffs) coeffs_.emplace_back(c);
        trim();
    }
    explicit IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPoly constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }
    // c * t^e
    static IntPoly monomial(std::size_t e, const Integer& c = 1) {
        std::vector<Integer> v(e + 1);
        v[e] = c;
        return IntPoly(std::move(v));
    }
    // (1 - t)^e
    static IntPoly one_minus_t_pow(std::size_t e) {
        IntPoly r = constant(1);
        for (std::size_t i = 0; i < e; ++i) r = r * IntPoly{1, -1};
        return r;
    }

    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    Integer operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

    Integer at(const Integer& t) const {
        Integer r = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * t + *it;
        return r;
    }

    Integer content() const {
        Integer g = 0;
        for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
        return g;
    }

    IntPoly operator+(const IntPoly& o) const {
        std::vector<Integer> r(std::max(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] + o[i];
        return IntPoly(std::move(r));
    }
    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    IntPoly operator-(const IntPoly& o) const { return *this + (-o); }
    IntPoly operator*(const IntPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<Integer> r(coeffs_.size() + o.coeffs_.size() - 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
        return IntPoly(std::move(r));
    }
    IntPoly operator*(const Integer& s) const {
        IntPoly r = *this;
        for (auto& c : r.coeffs_) c *= s;
        r.trim();
        return r;
    }
    // Exact division of every coefficient.
    IntPoly divided_by(const Integer& s) const {
        IntPoly r = *this;
        for (auto& c : r.coeffs_) c /= s;
        return r;
    }

    // Quotient and remainder by a divisor with leading coefficient +-1.
    std::pair<IntPoly, IntPoly> divmod(const IntPoly& d) const {
        if (d.is_zero()) throw error("polynomial division by zero");
        const Integer lead = d.coeffs_.back();
        if (lead != 1 && lead != -1) throw error("polynomial division needs a unit leading coefficient");
        std::vector<Integer> rem = coeffs_;
        if (rem.size() < d.coeffs_.size()) return {IntPoly{}, *this};
        std::vector<Integer> quo(rem.size() - d.coeffs_.size() + 1);
        for (std::size_t i = quo.size(); i-- > 0;) {
            const Integer q = rem[i + d.coeffs_.size() - 1] * lead;
            quo[i] = q;
            for (std::size_t j = 0; j < d.coeffs_.size(); ++j) rem[i + j] -= q * d.coeffs_[j];
        }
        return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
    }

    bool operator==(const IntPoly&) const = default;

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Integer& c = coeffs_[i];
            if (c == 0) continue;
            Integer mag = abs(c);
            if (first)
                os << (c < 0 ? "-" : "");
            else
                os << (c < 0 ? " - " : " + ");
            first = false;
            if (mag != 1 || i == 0) os << mag << (i ? "*" : "");
            if (i == 1) os << "t";
            if (i > 1) os << "t^" << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

/*
 * numerator / denominator, both integer polynomials in t. Equality is the
 * polynomial identity n1 * d2 == n2 * d1, never a comparison of truncations.
 */
class RationalFunctionSeries {
public:
    RationalFunctionSeries() : num_(), den_(IntPoly::constant(1)) {}
    RationalFunctionSeries(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw error("zero denominator");
    }
    static RationalFunctionSeries polynomial(IntPoly p) { return {std::move(p), IntPoly::constant(1)}; }

    const IntPoly& numerator() const noexcept { return num_; }
    const IntPoly& denominator() const noexcept { return den_; }

    RationalFunctionSeries operator+(const RationalFunctionSeries& o) const {
        if (den_ == o.den_) return RationalFunctionSeries(num_ + o.num_, den_).normalized();
        return RationalFunctionSeries(num_ * o.den_ + o.num_ * den_, den_ * o.den_).normalized();
    }
    RationalFunctionSeries operator-() const { return {-num_, den_}; }
    RationalFunctionSeries operator-(const RationalFunctionSeries& o) const { return *this + (-o); }
    RationalFunctionSeries operator*(const RationalFunctionSeries& o) const {
        return RationalFunctionSeries(num_ * o.num_, den_ * o.den_).normalized();
    }

    bool operator==(const RationalFunctionSeries& o) const { return num_ * o.den_ == o.num_ * den_; }

    // Divides out the common integer content; the sign is carried by the numerator.
    RationalFunctionSeries normalized() const {
        Integer g = boost::multiprecision::gcd(num_.content(), den_.content());
        IntPoly n = num_, d = den_;
        if (g > 1) {
            n = n.divided_by(g);
            d = d.divided_by(g);
        }
        if (d[0] < 0 || (d[0] == 0 && d.coefficients().back() < 0)) {
            n = -n;
            d = -d;
        }
        return {std::move(n), std::move(d)};
    }

    // Value at t = 1 after cancelling common factors (1 - t); nullopt for a pole.
    std::optional<Rational> value_at_one() const {
        IntPoly n = num_, d = den_;
        const IntPoly t_minus_1{-1, 1};
        while (d.at(1) == 0) {
            if (n.at(1) != 0) return std::nullopt;
            n = n.divmod(t_minus_1).first;
            d = d.divmod(t_minus_1).first;
        }
        Integer top = n.at(1), bottom = d.at(1);
        // cpp_rational rejects a negative denominator
        if (bottom < 0) {
            top = -top;
            bottom = -bottom;
        }
        return Rational(top, bottom);
    }

    std::string to_string() const { return "(" + num_.to_string() + ") / (" + den_.to_string() + ")"; }

private:
    IntPoly num_;
    IntPoly den_;
};

// Coefficients of t^0..t^K of the power-series expansion.
inline std::vector<Integer> expand(const RationalFunctionSeries& s, std::size_t K) {
    const Integer d0 = s.denominator()[0];
    if (d0 == 0) throw error("not expandable at t = 0: denominator vanishes there");
    std::vector<Integer> out(K + 1);
    for (std::size_t k = 0; k <= K; ++k) {
        Integer acc = s.numerator()[k];
        const std::size_t top = std::min<std::size_t>(k, static_cast<std::size_t>(std::max<std::int64_t>(0, s.denominator().degree())));
        for (std::size_t j = 1; j <= top; ++j) acc -= s.denominator()[j] * out[k - j];
        if (acc % d0 != 0) throw error("series expansion is not integral at t^" + std::to_string(k));
        out[k] = acc / d0;
    }
    return out;
}

struct HilbertPoincarePair {
    RationalFunctionSeries milnor;   // sum mu_k t^k
    RationalFunctionSeries tjurina;  // sum tau_k t^k
};

// Singularity-specific data of the general formula: gap numbers L_1 < ... < L_G,
// the series Z_inf(t) and one series H_L(t) per gap number.
struct GapData {
    std::vector<std::int64_t> gap_numbers;
    RationalFunctionSeries z_inf;
    std::vector<RationalFunctionSeries> h_series;
};

struct TheoremCIngredients {
    std::size_t n = 0;
    Integer mu0;
    std::vector<unsigned> mij_list; // m_{i,j} for i < j
    GapData gaps;

    void validate() const {
        if (n == 0) throw error("ingredients need at least one variable");
        if (mij_list.size() != n * (n - 1) / 2) throw error("m_{i,j} list must have n(n-1)/2 entries");
        for (std::size_t i = 0; i < gaps.gap_numbers.size(); ++i) {
            if (gaps.gap_numbers[i] < 1) throw error("gap numbers must be positive");
            if (i && gaps.gap_numbers[i] <= gaps.gap_numbers[i - 1])
                throw error("gap numbers must be strictly increasing");
        }
        if (gaps.h_series.size() != gaps.gap_numbers.size())
            throw error("one H series is required per gap number");
    }
};

// The parts of the ingredients fixed by n, mu0 and the multiplicities of the partials.
inline TheoremCIngredients weight_ingredients(const WPolynomial& f, const WeightSystem& ws) {
    ClosedFormContext ctx(f, ws);
    TheoremCIngredients ing;
    ing.n = ctx.n;
    ing.mu0 = ctx.mu0;
    for (std::size_t i = 0; i < ctx.n; ++i)
        for (std::size_t j = i + 1; j < ctx.n; ++j) ing.mij_list.push_back(ctx.mult.mij[i][j]);
    return ing;
}

/*
 * M(t) = t (n - sum t^{m_ij}) / (1-t)^{n+1} + (mu0 + Z_inf(t) t) / (1-t)
 *        + sum_i (t - t^{L_i + 1}) / (1-t) * H_{L_i}(t)
 * A(t) is the same with n - t - sum t^{m_ij} in the first numerator.
 */
inline HilbertPoincarePair assemble_theorem_c(const TheoremCIngredients& ing) {
    ing.validate();
    const IntPoly t = IntPoly::monomial(1);
    IntPoly lead = IntPoly::constant(static_cast<std::int64_t>(ing.n));
    for (auto m : ing.mij_list) lead = lead - IntPoly::monomial(m);
    const IntPoly outer_den = IntPoly::one_minus_t_pow(ing.n + 1);
    const IntPoly one_minus_t = IntPoly::one_minus_t_pow(1);

    RationalFunctionSeries tail = RationalFunctionSeries(IntPoly::constant(ing.mu0), one_minus_t) +
                                  ing.gaps.z_inf * RationalFunctionSeries(t, one_minus_t);
    for (std::size_t i = 0; i < ing.gaps.gap_numbers.size(); ++i) {
        const auto L = static_cast<std::size_t>(ing.gaps.gap_numbers[i]);
        tail = tail + RationalFunctionSeries(t - IntPoly::monomial(L + 1), one_minus_t) * ing.gaps.h_series[i];
    }
    return {RationalFunctionSeries(t * lead, outer_den) + tail,
            RationalFunctionSeries(t * (lead - t), outer_den) + tail};
}

// Transcribed gap data, keyed by the canonical polynomial string.
using GapTable = std::map<std::string, GapData>;

inline TheoremCIngredients extract_ingredients(const WPolynomial& f, const WeightSystem& ws,
                                               const GapTable& table) {
    auto ing = weight_ingredients(f, ws);
    auto it = table.find(f.to_string());
    if (it == table.end())
        throw ingredient_unavailable("ingredient extraction unavailable for " + f.to_string() +
                                     ": no gap data (gap numbers, Z_inf, H_L) supplied");
    ing.gaps = it->second;
    ing.validate();
    return ing;
}

// A three-variable family with its correction series L_i(t).
struct FamilyData3 {
    int family_id = 0;
    WPolynomial representative;
    RationalFunctionSeries l_series;
};

// M = mu0/(1-t) + (3t + t L(t))/(1-t)^4, A = mu0/(1-t) + (3t - t^2 + t L(t))/(1-t)^4.
inline HilbertPoincarePair assemble_theorem_d(const FamilyData3& fd, const Integer& mu0) {
    if (fd.representative.nvars() != 3) throw error("family representatives have three variables");
    const RationalFunctionSeries base(IntPoly::constant(mu0), IntPoly::one_minus_t_pow(1));
    const IntPoly den4 = IntPoly::one_minus_t_pow(4);
    const RationalFunctionSeries t_l = RationalFunctionSeries::polynomial(IntPoly::monomial(1)) * fd.l_series;
    const RationalFunctionSeries quarter = t_l * RationalFunctionSeries(IntPoly::constant(1), den4);
    return {base + RationalFunctionSeries(IntPoly{0, 3}, den4) + quarter,
            base + RationalFunctionSeries(IntPoly{0, 3, -1}, den4) + quarter};
}

struct VerificationReport {
    bool pass = true;
    std::optional<std::size_t> first_mismatch;
    Integer expected; // oracle value at the mismatch
    Integer actual;   // series/closed-form value at the mismatch

    std::string to_string() const {
        if (pass) return "pass";
        std::ostringstream os;
        os << "fail at index " << *first_mismatch << " (oracle " << expected << ", got " << actual << ")";
        return os.str();
    }
};

inline VerificationReport verify_sequence(const std::vector<Integer>& values,
                                          const std::function<Integer(std::size_t)>& oracle) {
    VerificationReport r;
    for (std::size_t k = 0; k < values.size(); ++k) {
        Integer want = oracle(k);
        if (want != values[k]) {
            r.pass = false;
            r.first_mismatch = k;
            r.expected = std::move(want);
            r.actual = values[k];
            return r;
        }
    }
    return r;
}

inline VerificationReport verify_against_oracle(const RationalFunctionSeries& series,
                                                const std::function<Integer(std::size_t)>& oracle,
                                                std::size_t K) {
    return verify_sequence(expand(series, K), oracle);
}

} // namespace ktjurina
