#pragma once

// Test-only reference computations that share no code path with the
// library's graded oracle: quotient dimensions are computed in O/m^N by
// total degree (no weights), with plain Gauss-Jordan elimination over Q.

#include <cstddef>
#include <map>
#include <vector>

#include <ktjurina/linalg.hpp>
#include <ktjurina/wpoly.hpp>

namespace ktjurina::reference {

// Every exponent tuple of total degree < N.
inline std::vector<std::vector<unsigned>> monomials_below(std::size_t n, unsigned N) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> e(n, 0);
    // odometer over [0, N)^n, keeping total degree < N
    while (true) {
        unsigned total = 0;
        for (auto x : e) total += x;
        if (total < N) out.push_back(e);
        std::size_t i = 0;
        while (i < n && ++e[i] == N) e[i++] = 0;
        if (i == n) break;
    }
    return out;
}

inline std::size_t gauss_rank(std::vector<std::vector<Rational>> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][c] == 0) continue;
            const Rational factor = rows[i][c] / rows[rank][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

struct TruncatedGenerator {
    WPolynomial g;
    unsigned min_cofactor_degree = 0;
};

/*
 * dim of O / (I + m^N) where I is spanned by x^b g with |b| >= min degree.
 * Equals dim O/I once m^N lies in I.
 */
inline std::size_t truncated_quotient_dim(const std::vector<TruncatedGenerator>& gens, std::size_t n, unsigned N) {
    const auto basis = monomials_below(n, N);
    std::map<std::vector<unsigned>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    std::vector<std::vector<Rational>> rows;
    for (const auto& tg : gens) {
        for (const auto& b : basis) {
            unsigned bt = 0;
            for (auto x : b) bt += x;
            if (bt < tg.min_cofactor_degree) continue;
            std::vector<Rational> row(basis.size(), Rational(0));
            bool any = false;
            for (const auto& [m, c] : tg.g.terms()) {
                std::vector<unsigned> p = m.exponents;
                unsigned total = 0;
                for (std::size_t i = 0; i < n; ++i) total += (p[i] += b[i]);
                if (total >= N) continue;
                row[index.at(p)] = c;
                any = true;
            }
            if (any) rows.push_back(std::move(row));
        }
    }
    return basis.size() - gauss_rank(std::move(rows));
}

inline std::size_t truncated_mu(const WPolynomial& f, unsigned k, unsigned N) {
    std::vector<TruncatedGenerator> gens;
    for (std::size_t i = 0; i < f.nvars(); ++i) gens.push_back({partial(f, i), k});
    return truncated_quotient_dim(gens, f.nvars(), N);
}

inline std::size_t truncated_tau(const WPolynomial& f, unsigned k, unsigned N) {
    std::vector<TruncatedGenerator> gens{{f, 0}};
    for (std::size_t i = 0; i < f.nvars(); ++i) gens.push_back({partial(f, i), k});
    return truncated_quotient_dim(gens, f.nvars(), N);
}

} // namespace ktjurina::reference
