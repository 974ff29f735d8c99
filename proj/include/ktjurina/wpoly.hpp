#pragma once

// Sparse multivariate polynomials with exact rational coefficients, weight
// systems, and the weighted-degree data of a weighted homogeneous germ.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"

namespace ktjurina {

struct Monomial {
    std::vector<unsigned> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<unsigned> e) : exponents(std::move(e)) {}

    static Monomial one(std::size_t n) { return Monomial(std::vector<unsigned>(n, 0)); }
    static Monomial variable(std::size_t n, std::size_t i) {
        auto m = one(n);
        m.exponents.at(i) = 1;
        return m;
    }

    std::size_t arity() const noexcept { return exponents.size(); }

    unsigned total_degree() const {
        return std::accumulate(exponents.begin(), exponents.end(), 0u);
    }

    Monomial operator*(const Monomial& o) const {
        if (arity() != o.arity()) throw arity_mismatch("monomial arity mismatch");
        Monomial r = *this;
        for (std::size_t i = 0; i < arity(); ++i) r.exponents[i] += o.exponents[i];
        return r;
    }

    // Plain lexicographic comparison of exponent tuples; x^2 > y^3.
    auto operator<=>(const Monomial&) const = default;
};

/*
 * Positive integer weights (w_1..w_n) with total weight W, stored in the
 * unique coprime normalization: gcd(w_1, ..., w_n, W) = 1.
 */
class WeightSystem {
public:
    WeightSystem() = default;

    WeightSystem(std::vector<std::int64_t> weights, std::int64_t total)
        : weights_(std::move(weights)), total_(total) {
        if (weights_.empty()) throw inadmissible_weights("weight system needs at least one variable");
        for (auto w : weights_)
            if (w < 1) throw inadmissible_weights("weights must be positive");
        if (total_ < 1) throw inadmissible_weights("total weight must be positive");
        std::int64_t g = total_;
        for (auto w : weights_) g = std::gcd(g, w);
        for (auto& w : weights_) w /= g;
        total_ /= g;
        if (total_ < wmax()) throw inadmissible_weights("total weight is below the largest weight");
    }

    // Clears denominators, then normalizes.
    static WeightSystem from_rationals(const std::vector<Rational>& weights, const Rational& total) {
        Integer lcm = denominator(total);
        for (const auto& w : weights) lcm = boost::multiprecision::lcm(lcm, denominator(w));
        std::vector<Integer> scaled;
        for (const auto& w : weights) scaled.push_back(numerator(w) * (lcm / denominator(w)));
        Integer t = numerator(total) * (lcm / denominator(total));
        Integer g = t;
        for (const auto& s : scaled) g = boost::multiprecision::gcd(g, s);
        if (g == 0) throw inadmissible_weights("weights must be positive");
        std::vector<std::int64_t> out;
        for (const auto& s : scaled) out.push_back(static_cast<std::int64_t>(s / g));
        return WeightSystem(std::move(out), static_cast<std::int64_t>(t / g));
    }

    std::size_t size() const noexcept { return weights_.size(); }
    const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
    std::int64_t weight(std::size_t i) const { return weights_.at(i); }
    std::int64_t total() const noexcept { return total_; }
    std::int64_t wmax() const { return *std::max_element(weights_.begin(), weights_.end()); }

    bool operator==(const WeightSystem&) const = default;

    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < weights_.size(); ++i) os << (i ? "," : "") << weights_[i];
        os << ';' << total_ << ')';
        return os.str();
    }

private:
    std::vector<std::int64_t> weights_;
    std::int64_t total_ = 0;
};

inline std::int64_t wdeg(const Monomial& m, const WeightSystem& ws) {
    if (m.arity() != ws.size()) throw arity_mismatch("monomial arity differs from weight system");
    std::int64_t d = 0;
    for (std::size_t i = 0; i < m.arity(); ++i) d += ws.weight(i) * static_cast<std::int64_t>(m.exponents[i]);
    return d;
}

class WPolynomial {
public:
    // Descending lexicographic order, so x^2 prints before y^3.
    using Terms = std::map<Monomial, Rational, std::greater<>>;

    WPolynomial() = default;
    explicit WPolynomial(std::size_t nvars) : nvars_(nvars) {}

    static WPolynomial constant(std::size_t nvars, const Rational& c) {
        WPolynomial p(nvars);
        p.add_term(Monomial::one(nvars), c);
        return p;
    }
    static WPolynomial variable(std::size_t nvars, std::size_t i) {
        WPolynomial p(nvars);
        p.add_term(Monomial::variable(nvars, i), 1);
        return p;
    }

    std::size_t nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c) {
        if (m.arity() != nvars_) throw arity_mismatch("term arity differs from polynomial");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    WPolynomial operator+(const WPolynomial& o) const {
        check_arity(o);
        WPolynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    WPolynomial operator-() const {
        WPolynomial r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    WPolynomial operator-(const WPolynomial& o) const { return *this + (-o); }
    WPolynomial operator*(const WPolynomial& o) const {
        check_arity(o);
        WPolynomial r(nvars_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
        return r;
    }
    WPolynomial operator*(const Rational& s) const {
        WPolynomial r(nvars_);
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }
    WPolynomial operator*(const Monomial& mono) const {
        WPolynomial r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m * mono, c);
        return r;
    }

    bool operator==(const WPolynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    // Lowest total degree of a term (the order at the origin).
    unsigned order() const {
        if (is_zero()) throw error("order of the zero polynomial");
        unsigned best = terms_.begin()->first.total_degree();
        for (const auto& [m, c] : terms_) best = std::min(best, m.total_degree());
        return best;
    }

    // Same polynomial scaled to coprime integer coefficients (positive leading term).
    std::vector<std::pair<Monomial, Integer>> primitive_integer_terms() const {
        Integer lcm = 1;
        for (const auto& [m, c] : terms_) lcm = boost::multiprecision::lcm(lcm, denominator(c));
        std::vector<std::pair<Monomial, Integer>> out;
        Integer g = 0;
        for (const auto& [m, c] : terms_) {
            Integer v = numerator(c) * (lcm / denominator(c));
            g = boost::multiprecision::gcd(g, v);
            out.emplace_back(m, std::move(v));
        }
        if (g > 1)
            for (auto& t : out) t.second /= g;
        return out;
    }

    std::string to_string() const;

private:
    void check_arity(const WPolynomial& o) const {
        if (nvars_ != o.nvars_) throw arity_mismatch("polynomial arity mismatch");
    }

    std::size_t nvars_ = 0;
    Terms terms_;
};

inline std::string variable_name(std::size_t n, std::size_t i) {
    if (n <= 3) return std::string(1, "xyz"[i]);
    return "x" + std::to_string(i + 1);
}

inline std::string WPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit_mono = m.total_degree() == 0;
        bool need_star = false;
        if (mag != 1 || unit_mono) {
            os << mag;
            need_star = true;
        }
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m.exponents[i] == 0) continue;
            if (need_star) os << '*';
            os << variable_name(nvars_, i);
            if (m.exponents[i] > 1) os << '^' << m.exponents[i];
            need_star = true;
        }
    }
    return os.str();
}

// d f / d x_i, with i zero-based.
inline WPolynomial partial(const WPolynomial& f, std::size_t i) {
    if (i >= f.nvars()) throw error("variable index " + std::to_string(i) + " out of range");
    WPolynomial r(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        if (m.exponents[i] == 0) continue;
        Monomial d = m;
        --d.exponents[i];
        r.add_term(d, c * m.exponents[i]);
    }
    return r;
}

inline std::vector<WPolynomial> gradient(const WPolynomial& f) {
    std::vector<WPolynomial> g;
    for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(partial(f, i));
    return g;
}

// Weighted degree of a polynomial that is homogeneous for ws.
inline std::optional<std::int64_t> homogeneous_degree(const WPolynomial& f, const WeightSystem& ws) {
    if (f.is_zero()) return std::nullopt;
    const std::int64_t d = wdeg(f.terms().begin()->first, ws);
    for (const auto& [m, c] : f.terms())
        if (wdeg(m, ws) != d) return std::nullopt;
    return d;
}

inline bool is_weighted_homogeneous(const WPolynomial& f, const WeightSystem& ws) {
    if (f.is_zero()) throw error("weighted homogeneity of the zero polynomial");
    if (f.nvars() != ws.size()) throw arity_mismatch("polynomial arity differs from weight system");
    auto d = homogeneous_degree(f, ws);
    return d && *d == ws.total();
}

// Euler identity: sum_i w_i x_i f_i == W f.
inline bool euler_check(const WPolynomial& f, const WeightSystem& ws) {
    if (f.is_zero()) throw error("Euler identity of the zero polynomial");
    if (f.nvars() != ws.size()) throw arity_mismatch("polynomial arity differs from weight system");
    WPolynomial lhs(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i)
        lhs = lhs + partial(f, i) * Monomial::variable(f.nvars(), i) * Rational(ws.weight(i));
    return lhs == f * Rational(ws.total());
}

struct WeightInference {
    enum class Status { ok, no_positive_solution, underdetermined };
    Status status = Status::no_positive_solution;
    std::optional<WeightSystem> weights;
    std::string reason;

    explicit operator bool() const noexcept { return weights.has_value(); }
};

/*
 * Solves sum_i w_i e_i = W over every exponent tuple e of f. A result is
 * returned only when the solution space is a single ray with all coordinates
 * positive.
 */
inline WeightInference infer_weights(const WPolynomial& f) {
    if (f.is_zero()) throw error("cannot infer weights of the zero polynomial");
    const std::size_t n = f.nvars();
    Matrix<Rational> sys(0, n + 1);
    for (const auto& [m, c] : f.terms()) {
        std::vector<Rational> row;
        for (auto e : m.exponents) row.emplace_back(e);
        row.emplace_back(-1);
        sys.push_row(row);
    }
    auto basis = null_space(sys);
    WeightInference out;
    if (basis.empty()) {
        out.reason = "only the zero solution";
        return out;
    }
    if (basis.size() > 1) {
        out.status = WeightInference::Status::underdetermined;
        out.reason = "underdetermined: solution space has dimension " + std::to_string(basis.size());
        return out;
    }
    auto v = basis.front();
    if (v.back() < 0)
        for (auto& x : v) x = -x;
    for (const auto& x : v) {
        if (x <= 0) {
            out.reason = "no positive solution";
            return out;
        }
    }
    out.status = WeightInference::Status::ok;
    out.weights = WeightSystem::from_rationals(std::vector<Rational>(v.begin(), v.end() - 1), v.back());
    return out;
}

struct MultiplicityData {
    unsigned m0 = 0;
    std::vector<unsigned> mi;
    std::vector<std::vector<unsigned>> mij;
    std::size_t c = 0;
    std::int64_t wmax = 0;
};

inline MultiplicityData multiplicities(const WPolynomial& f, const WeightSystem& ws) {
    if (f.is_zero()) throw error("multiplicities of the zero polynomial");
    if (f.nvars() != ws.size()) throw arity_mismatch("polynomial arity differs from weight system");
    MultiplicityData d;
    d.m0 = f.order();
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        auto fi = partial(f, i);
        if (fi.is_zero())
            throw degenerate_variable("degenerate variable: d f / d " + variable_name(f.nvars(), i) +
                                      " vanishes identically");
        d.mi.push_back(fi.order());
    }
    const std::size_t n = f.nvars();
    d.mij.assign(n, std::vector<unsigned>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d.mij[i][j] = std::min(d.mi[i], d.mi[j]);
    d.wmax = ws.wmax();
    d.c = static_cast<std::size_t>(std::count(ws.weights().begin(), ws.weights().end(), d.wmax));
    return d;
}

} // namespace ktjurina
