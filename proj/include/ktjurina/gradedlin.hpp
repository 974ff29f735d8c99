#pragma once

/*
 * Exact dimensions of graded quotients O/I for ideals I generated by
 * weighted homogeneous polynomials, one weighted degree at a time.
 *
 * A generator g with minimum cofactor degree k contributes the span of
 * x^b * g over all monomials x^b of total degree >= k, i.e. the ideal m^k g.
 * For each weighted degree d the ideal's piece I_d is the row space of those
 * products landing in degree d, written in the monomial basis of O_d, and
 * dim (O/I)_d = N_d - rank. Ranks are computed by fraction-free elimination.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "invariants.hpp"
#include "linalg.hpp"
#include "wpoly.hpp"

namespace ktjurina {

namespace detail {

inline void enumerate_wdegree(const WeightSystem& ws, std::size_t var, std::int64_t remaining,
                              std::vector<unsigned>& current, std::vector<Monomial>& out) {
    const std::size_t n = ws.size();
    if (var + 1 == n) {
        if (remaining % ws.weight(var) == 0) {
            current[var] = static_cast<unsigned>(remaining / ws.weight(var));
            out.emplace_back(current);
        }
        return;
    }
    for (std::int64_t e = remaining / ws.weight(var); e >= 0; --e) {
        current[var] = static_cast<unsigned>(e);
        enumerate_wdegree(ws, var + 1, remaining - e * ws.weight(var), current, out);
    }
    current[var] = 0;
}

} // namespace detail

// All monomials of weighted degree d, in descending lexicographic order.
inline std::vector<Monomial> monomials_of_wdegree(const WeightSystem& ws, std::int64_t d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    std::vector<unsigned> current(ws.size(), 0);
    detail::enumerate_wdegree(ws, 0, d, current, out);
    return out;
}

struct ConstrainedGenerator {
    WPolynomial g;
    unsigned min_cofactor_degree = 0;
};

class GradedGeneratorSet {
public:
    GradedGeneratorSet(WeightSystem ws, std::vector<ConstrainedGenerator> gens)
        : ws_(std::move(ws)), gens_(std::move(gens)) {
        for (const auto& cg : gens_) {
            if (cg.g.nvars() != ws_.size()) throw arity_mismatch("generator arity differs from weight system");
            auto d = homogeneous_degree(cg.g, ws_);
            if (!d)
                throw not_weighted_homogeneous("generator " + cg.g.to_string() +
                                               " is not weighted homogeneous for " + ws_.to_string());
            degrees_.push_back(*d);
            integer_terms_.push_back(cg.g.primitive_integer_terms());
        }
    }

    const WeightSystem& weights() const noexcept { return ws_; }
    const std::vector<ConstrainedGenerator>& generators() const noexcept { return gens_; }
    std::int64_t generator_degree(std::size_t i) const { return degrees_.at(i); }
    const std::vector<std::pair<Monomial, Integer>>& integer_terms(std::size_t i) const {
        return integer_terms_.at(i);
    }

private:
    WeightSystem ws_;
    std::vector<ConstrainedGenerator> gens_;
    std::vector<std::int64_t> degrees_;
    std::vector<std::vector<std::pair<Monomial, Integer>>> integer_terms_;
};

struct PieceDimension {
    std::size_t ambient = 0; // N_d
    std::size_t rank = 0;    // r_d
    bool full() const noexcept { return rank == ambient; }
    std::size_t quotient() const noexcept { return ambient - rank; }
    bool operator==(const PieceDimension&) const = default;
};

// Rows x^b * g spanning I_d, as an integer matrix over the degree-d monomials.
inline Matrix<Integer> ideal_piece_matrix(const GradedGeneratorSet& gs, std::int64_t d,
                                          const std::vector<Monomial>& basis) {
    std::map<Monomial, std::size_t> column;
    for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);
    Matrix<Integer> m(0, basis.size());
    for (std::size_t gi = 0; gi < gs.generators().size(); ++gi) {
        const auto& cg = gs.generators()[gi];
        for (const auto& beta : monomials_of_wdegree(gs.weights(), d - gs.generator_degree(gi))) {
            if (beta.total_degree() < cg.min_cofactor_degree) continue;
            std::vector<Integer> row(basis.size());
            for (const auto& [mono, c] : gs.integer_terms(gi)) row[column.at(mono * beta)] = c;
            m.push_row(row);
        }
    }
    return m;
}

inline PieceDimension piece_dimension(const GradedGeneratorSet& gs, std::int64_t d) {
    const auto basis = monomials_of_wdegree(gs.weights(), d);
    if (basis.empty()) return {};
    auto m = ideal_piece_matrix(gs, d, basis);
    if (m.rows() == 0) return {basis.size(), 0};
    return {basis.size(), rank_sparse(m)};
}

struct DegreeProfile {
    std::map<std::int64_t, PieceDimension> per_degree;
    std::size_t total = 0;

    // (d, dim (O/I)_d) for the nonzero pieces.
    std::vector<std::pair<std::int64_t, std::size_t>> hilbert_function() const {
        std::vector<std::pair<std::int64_t, std::size_t>> out;
        for (const auto& [d, p] : per_degree)
            if (p.quotient() > 0) out.emplace_back(d, p.quotient());
        return out;
    }
};

struct QuotientOptions {
    std::size_t threads = 1;
    // Stop once wmax consecutive pieces are full; every later piece is then
    // full as well, since each monomial is a variable times a monomial
    // from the preceding wmax degrees.
    bool early_exit = true;
};

/*
 * dim O/I summed over weighted degrees. Pieces past hard_bound must be full;
 * a deficient piece there means the quotient is infinite or the bound is too
 * small, and dimension_not_finite is thrown. Degrees are evaluated in
 * batches of `threads` and folded in ascending order, so the result does not
 * depend on the thread count.
 */
inline DegreeProfile quotient_dimension(const GradedGeneratorSet& gs, std::int64_t hard_bound,
                                        const QuotientOptions& opts = {}) {
    if (hard_bound < 0) throw error("negative degree bound");
    const std::int64_t window = gs.weights().wmax();
    const std::int64_t last = hard_bound + window;
    const std::size_t batch = std::max<std::size_t>(1, opts.threads);

    DegreeProfile profile;
    std::int64_t consecutive_full = 0;
    for (std::int64_t start = 0; start <= last; start += static_cast<std::int64_t>(batch)) {
        const std::int64_t stop = std::min<std::int64_t>(last, start + static_cast<std::int64_t>(batch) - 1);
        std::vector<PieceDimension> pieces;
        if (batch == 1) {
            pieces.push_back(piece_dimension(gs, start));
        } else {
            std::vector<std::future<PieceDimension>> jobs;
            for (std::int64_t d = start; d <= stop; ++d)
                jobs.push_back(std::async(std::launch::async, [&gs, d] { return piece_dimension(gs, d); }));
            for (auto& j : jobs) pieces.push_back(j.get());
        }
        for (std::int64_t d = start; d <= stop; ++d) {
            const auto& p = pieces[static_cast<std::size_t>(d - start)];
            if (d > hard_bound) {
                if (!p.full())
                    throw dimension_not_finite("dimension not finite within bound " + std::to_string(hard_bound) +
                                               ": piece of weighted degree " + std::to_string(d) +
                                               " is still deficient");
                continue;
            }
            profile.per_degree.emplace(d, p);
            profile.total += p.quotient();
            consecutive_full = p.full() ? consecutive_full + 1 : 0;
            if (opts.early_exit && consecutive_full >= window) return profile;
        }
    }
    return profile;
}

// Generators for the standard ideals attached to f.
inline GradedGeneratorSet tjurina_ideal(const WPolynomial& f, const WeightSystem& ws, unsigned k) {
    std::vector<ConstrainedGenerator> gens{{f, 0}};
    for (auto& fi : gradient(f)) gens.push_back({std::move(fi), k});
    return {ws, std::move(gens)};
}

inline GradedGeneratorSet milnor_ideal(const WPolynomial& f, const WeightSystem& ws, unsigned k) {
    std::vector<ConstrainedGenerator> gens;
    for (auto& fi : gradient(f)) gens.push_back({std::move(fi), k});
    return {ws, std::move(gens)};
}

// (f, m^k); m^k is encoded as the variables with cofactor degree >= k - 1.
inline GradedGeneratorSet jet_ideal(const WPolynomial& f, const WeightSystem& ws, unsigned k) {
    const std::size_t n = f.nvars();
    if (k == 0) return {ws, {{WPolynomial::constant(n, 1), 0}}};
    std::vector<ConstrainedGenerator> gens{{f, 0}};
    for (std::size_t i = 0; i < n; ++i) gens.push_back({WPolynomial::variable(n, i), k - 1});
    return {ws, std::move(gens)};
}

struct OracleOptions {
    QuotientOptions quotient;
    // Overrides the a priori bound (mu0 + k) * wmax when set.
    std::optional<std::int64_t> hard_bound;
};

namespace detail {

inline void require_oracle_input(const WPolynomial& f, const WeightSystem& ws) {
    if (f.is_zero()) throw error("the zero polynomial has no singularity invariants");
    if (!is_weighted_homogeneous(f, ws))
        throw not_weighted_homogeneous(f.to_string() + " is not weighted homogeneous of type " + ws.to_string());
    multiplicities(f, ws); // rejects degenerate variables
}

} // namespace detail

// m^(mu0 + k) lies in m^k J(f), so no monomial past this weighted degree survives.
inline std::int64_t default_hard_bound(const WeightSystem& ws, unsigned k) {
    return (static_cast<std::int64_t>(milnor_orlik(ws)) + static_cast<std::int64_t>(k)) * ws.wmax();
}

inline std::int64_t oracle_bound(const WeightSystem& ws, unsigned k, const OracleOptions& opts) {
    return opts.hard_bound ? *opts.hard_bound : default_hard_bound(ws, k);
}

// dim O/(f, m^k J(f))
inline std::size_t tau_oracle(const WPolynomial& f, const WeightSystem& ws, unsigned k,
                              const OracleOptions& opts = {}) {
    detail::require_oracle_input(f, ws);
    return quotient_dimension(tjurina_ideal(f, ws, k), oracle_bound(ws, k, opts), opts.quotient).total;
}

// dim O/(m^k J(f))
inline std::size_t mu_oracle(const WPolynomial& f, const WeightSystem& ws, unsigned k,
                             const OracleOptions& opts = {}) {
    detail::require_oracle_input(f, ws);
    return quotient_dimension(milnor_ideal(f, ws, k), oracle_bound(ws, k, opts), opts.quotient).total;
}

// dim O/(f, m^k)
inline std::size_t jet_oracle(const WPolynomial& f, const WeightSystem& ws, unsigned k,
                              const OracleOptions& opts = {}) {
    detail::require_oracle_input(f, ws);
    return quotient_dimension(jet_ideal(f, ws, k), oracle_bound(ws, k, opts), opts.quotient).total;
}

// Weighted-degree Hilbert function of the Milnor algebra O/J(f).
inline std::vector<std::pair<std::int64_t, std::size_t>> milnor_hilbert_profile(const WPolynomial& f,
                                                                               const WeightSystem& ws,
                                                                               const OracleOptions& opts = {}) {
    detail::require_oracle_input(f, ws);
    return quotient_dimension(milnor_ideal(f, ws, 0), oracle_bound(ws, 0, opts), opts.quotient).hilbert_function();
}

// dim T Def_k = dim A_k(f) - dim O/(f, m^k), both from the oracle.
inline std::size_t tangent_dim(const WPolynomial& f, const WeightSystem& ws, unsigned k,
                               const OracleOptions& opts = {}) {
    return tau_oracle(f, ws, k, opts) - jet_oracle(f, ws, k, opts);
}

} // namespace ktjurina
