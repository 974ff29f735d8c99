#pragma once

// Closed forms that depend only on the weights and multiplicities of f.

#include <cstddef>
#include <cstdint>
#include <string>

#include "error.hpp"
#include "linalg.hpp"
#include "wpoly.hpp"

namespace ktjurina {

// binom(a, b) with the convention binom(a, b) = 0 for a < b or a < 0.
inline Integer binom(std::int64_t a, std::int64_t b) {
    if (b < 0 || a < 0 || a < b) return 0;
    if (b > a - b) b = a - b;
    Integer r = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;
    }
    return r;
}

// prod_i (W / w_i - 1), required to be a nonnegative integer.
inline Integer milnor_orlik(const WeightSystem& ws) {
    Rational p = 1;
    for (auto w : ws.weights()) p *= Rational(ws.total(), w) - 1;
    if (p < 0 || denominator(p) != 1)
        throw inadmissible_weights("inadmissible weight system " + ws.to_string() +
                                   ": Milnor-Orlik product is not a nonnegative integer");
    return numerator(p);
}

struct ClosedFormContext {
    std::size_t n = 0;
    WeightSystem ws;
    MultiplicityData mult;
    Integer mu0;

    ClosedFormContext(const WPolynomial& f, const WeightSystem& weights)
        : n(f.nvars()), ws(weights), mult(multiplicities(f, weights)), mu0(milnor_orlik(weights)) {}
};

inline void require_theorem_b_range(const ClosedFormContext& ctx, std::int64_t k) {
    if (k < 0 || k > static_cast<std::int64_t>(ctx.mult.m0))
        throw out_of_validity_range("formula out of validity range: k = " + std::to_string(k) +
                                    " exceeds multiplicity " + std::to_string(ctx.mult.m0));
}

// mu_k for 0 <= k <= m0.
inline Integer theorem_b_mu(const ClosedFormContext& ctx, std::int64_t k) {
    require_theorem_b_range(ctx, k);
    const auto n = static_cast<std::int64_t>(ctx.n);
    Integer mu = ctx.mu0 + n * binom(k - 1 + n, n);
    if (k == static_cast<std::int64_t>(ctx.mult.m0)) {
        const auto c = static_cast<std::int64_t>(ctx.mult.c);
        mu -= c * (2 * n - c - 1) / 2;
    }
    return mu;
}

// tau_k for 0 <= k <= m0.
inline Integer theorem_b_tau(const ClosedFormContext& ctx, std::int64_t k) {
    const auto n = static_cast<std::int64_t>(ctx.n);
    return theorem_b_mu(ctx, k) - binom(k - 2 + n, n);
}

// dim O/(f, m^k) for f of order m0: monomials of degree < k minus the
// multiples f * g with ord g < k - m0.
inline Integer jet_dim_closed(std::size_t n, unsigned m0, std::int64_t k) {
    if (k < 0) throw error("negative jet order");
    const auto nn = static_cast<std::int64_t>(n);
    return binom(nn + k - 1, nn) - binom(nn + k - 1 - static_cast<std::int64_t>(m0), nn);
}

} // namespace ktjurina
