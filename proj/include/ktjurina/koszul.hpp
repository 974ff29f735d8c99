#pragma once

/*
 * Graded Koszul complex K(f_1, ..., f_n) over O, split into weighted-degree
 * pieces.
 *
 *   0 -> F_n -> ... -> F_1 -> F_0 = O -> 0,
 *   d(e_I) = sum_j (-1)^(j-1) f_{i_j} e_{I \ i_j}
 *
 * The basis element e_I of F_p sits in degree sum_{i in I} deg f_i, so every
 * differential preserves weighted degree. H_0 is the Milnor algebra; higher
 * homology vanishes exactly when the partials form a regular sequence.
 * The boundary/homology routines take the complex's modules and maps as data,
 * so other complexes with the same shape can reuse them.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "gradedlin.hpp"
#include "linalg.hpp"
#include "series.hpp"
#include "wpoly.hpp"

namespace ktjurina {

struct GradedFreeModule {
    std::vector<std::int64_t> generator_shifts;

    std::size_t piece_dimension(const WeightSystem& ws, std::int64_t d) const {
        std::size_t dim = 0;
        for (auto s : generator_shifts) dim += monomials_of_wdegree(ws, d - s).size();
        return dim;
    }
};

class KoszulComplex {
public:
    KoszulComplex(WeightSystem ws, std::vector<WPolynomial> partials)
        : ws_(std::move(ws)), partials_(std::move(partials)) {
        const std::size_t n = partials_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (partials_[i].is_zero())
                throw degenerate_variable("degenerate variable: partial " + std::to_string(i + 1) + " is zero");
            auto d = homogeneous_degree(partials_[i], ws_);
            if (!d) throw not_weighted_homogeneous("partial " + partials_[i].to_string() + " is not homogeneous");
            degrees_.push_back(*d);
            for (const auto& [m, c] : partials_[i].terms())
                scale_ = boost::multiprecision::lcm(scale_, boost::multiprecision::denominator(c));
        }
        subsets_.resize(n + 1);
        modules_.resize(n + 1);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) s.push_back(i);
            const std::size_t p = s.size();
            subsets_[p].push_back(std::move(s));
        }
        for (std::size_t p = 0; p <= n; ++p) {
            std::sort(subsets_[p].begin(), subsets_[p].end());
            for (const auto& s : subsets_[p]) {
                std::int64_t shift = 0;
                for (auto i : s) shift += degrees_[i];
                modules_[p].generator_shifts.push_back(shift);
            }
        }
    }

    std::size_t n() const noexcept { return partials_.size(); }
    const WeightSystem& weights() const noexcept { return ws_; }
    const std::vector<WPolynomial>& partials() const noexcept { return partials_; }
    const GradedFreeModule& module(std::size_t p) const { return modules_.at(p); }
    // Index sets of the basis e_I of F_p, lexicographically sorted.
    const std::vector<std::vector<std::size_t>>& basis_subsets(std::size_t p) const { return subsets_.at(p); }

    // Basis of (F_p)_d as (subset index, monomial) pairs.
    std::vector<std::pair<std::size_t, Monomial>> piece_basis(std::size_t p, std::int64_t d) const {
        std::vector<std::pair<std::size_t, Monomial>> out;
        if (p > n()) return out;
        for (std::size_t s = 0; s < subsets_[p].size(); ++s)
            for (auto& m : monomials_of_wdegree(ws_, d - modules_[p].generator_shifts[s])) out.emplace_back(s, std::move(m));
        return out;
    }

    /*
     * Matrix of d_p : (F_p)_d -> (F_{p-1})_d acting on row vectors: row r is the
     * image of the r-th basis element of (F_p)_d. Empty for p = 0 or p > n.
     */
    Matrix<Integer> boundary(std::size_t p, std::int64_t d) const {
        if (p == 0 || p > n()) return Matrix<Integer>(piece_basis(p, d).size(), p == 0 ? 0 : piece_basis(p - 1, d).size());
        const auto src = piece_basis(p, d);
        const auto dst = piece_basis(p - 1, d);
        std::map<std::pair<std::size_t, Monomial>, std::size_t> column;
        for (std::size_t i = 0; i < dst.size(); ++i) column.emplace(dst[i], i);
        std::map<std::vector<std::size_t>, std::size_t> face_index;
        for (std::size_t s = 0; s < subsets_[p - 1].size(); ++s) face_index.emplace(subsets_[p - 1][s], s);

        Matrix<Integer> m(src.size(), dst.size());
        for (std::size_t r = 0; r < src.size(); ++r) {
            const auto& [s, alpha] = src[r];
            const auto& subset = subsets_[p][s];
            for (std::size_t j = 0; j < subset.size(); ++j) {
                std::vector<std::size_t> face = subset;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
                const std::size_t fs = face_index.at(face);
                const Integer sign = (j % 2 == 0) ? 1 : -1;
                for (const auto& [mono, c] : partials_[subset[j]].terms()) {
                    m(r, column.at({fs, alpha * mono})) += sign * boost::multiprecision::numerator(c) *
                                                          (scale_ / boost::multiprecision::denominator(c));
                }
            }
        }
        return m;
    }

    std::size_t boundary_rank(std::size_t p, std::int64_t d) const {
        if (p == 0 || p > n()) return 0;
        auto m = boundary(p, d);
        if (m.rows() == 0 || m.cols() == 0) return 0;
        return rank_sparse(m);
    }

    // dim ker(d_p)_d - dim im(d_{p+1})_d
    std::size_t homology_rank(std::size_t p, std::int64_t d) const {
        if (p > n()) throw error("homological index out of range");
        const std::size_t dim = module(p).piece_dimension(ws_, d);
        return dim - boundary_rank(p, d) - boundary_rank(p + 1, d);
    }

    // d_p o d_{p+1} == 0 on the degree-d piece, checked exactly.
    bool boundary_squares_to_zero(std::size_t p, std::int64_t d) const {
        if (p == 0 || p >= n()) return true;
        const auto outer = boundary(p + 1, d);
        const auto inner = boundary(p, d);
        std::vector<std::vector<std::size_t>> support(inner.rows());
        for (std::size_t j = 0; j < inner.rows(); ++j)
            for (std::size_t k = 0; k < inner.cols(); ++k)
                if (inner(j, k) != 0) support[j].push_back(k);
        for (std::size_t i = 0; i < outer.rows(); ++i) {
            std::map<std::size_t, Integer> acc;
            for (std::size_t j = 0; j < outer.cols(); ++j) {
                if (outer(i, j) == 0) continue;
                for (auto k : support[j]) acc[k] += outer(i, j) * inner(j, k);
            }
            for (const auto& [k, v] : acc)
                if (v != 0) return false;
        }
        return true;
    }

private:
    WeightSystem ws_;
    std::vector<WPolynomial> partials_;
    std::vector<std::int64_t> degrees_;
    std::vector<std::vector<std::vector<std::size_t>>> subsets_;
    std::vector<GradedFreeModule> modules_;
    // Common denominator of the partials' coefficients; boundaries are scaled by it.
    Integer scale_ = 1;
};

inline KoszulComplex build_koszul(const WPolynomial& f, const WeightSystem& ws) {
    if (f.nvars() != ws.size()) throw arity_mismatch("polynomial arity differs from weight system");
    return KoszulComplex(ws, gradient(f));
}

// prod_i (1 - t^(W - w_i)) / (1 - t^(w_i)), the Hilbert series of O/J(f).
inline RationalFunctionSeries hilbert_from_euler(const WeightSystem& ws) {
    IntPoly num = IntPoly::constant(1), den = IntPoly::constant(1);
    for (auto w : ws.weights()) {
        num = num * (IntPoly::constant(1) - IntPoly::monomial(static_cast<std::size_t>(ws.total() - w)));
        den = den * (IntPoly::constant(1) - IntPoly::monomial(static_cast<std::size_t>(w)));
    }
    return {num, den};
}

inline RationalFunctionSeries hilbert_from_euler(const WPolynomial& f, const WeightSystem& ws) {
    if (!is_weighted_homogeneous(f, ws))
        throw not_weighted_homogeneous(f.to_string() + " is not weighted homogeneous of type " + ws.to_string());
    return hilbert_from_euler(ws);
}

// The quotient as a polynomial; fails if the denominator does not divide.
inline IntPoly hilbert_polynomial(const RationalFunctionSeries& s) {
    auto [q, r] = s.numerator().divmod(s.denominator());
    if (!r.is_zero()) throw error("Hilbert series is not a polynomial");
    return q;
}

struct HomologyRow {
    std::int64_t degree = 0;
    std::vector<std::size_t> ranks; // H_0 .. H_n
};

inline std::vector<HomologyRow> homology_table(const KoszulComplex& kc, std::int64_t bound) {
    std::vector<HomologyRow> rows;
    for (std::int64_t d = 0; d <= bound; ++d) {
        HomologyRow r{d, {}};
        for (std::size_t p = 0; p <= kc.n(); ++p) r.ranks.push_back(kc.homology_rank(p, d));
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace ktjurina
