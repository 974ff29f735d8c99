#pragma once

// Exact linear algebra over Z and Q: fraction-free and sparse ranks, rank
// modulo a word-sized prime, and rational null spaces.

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ktjurina {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    // Appends a row; the span must have cols() entries.
    void push_row(const std::vector<T>& row) {
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/*
 * Rank of an integer matrix by Bareiss fraction-free elimination.
 *
 * Every intermediate entry is a minor of the input, so the division by the
 * previous pivot is exact and no rationals are ever formed. Columns without a
 * pivot are skipped; this keeps the minor interpretation intact.
 */
inline std::size_t rank_fraction_free(Matrix<Integer> m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        // Prefer the pivot with the fewest bits to slow coefficient growth.
        std::size_t pivot = rows;
        for (std::size_t i = rank; i < rows; ++i) {
            if (m(i, c) == 0) continue;
            if (pivot == rows || boost::multiprecision::msb(abs(m(i, c))) <
                                     boost::multiprecision::msb(abs(m(pivot, c))))
                pivot = i;
        }
        if (pivot == rows) continue;
        m.swap_rows(rank, pivot);
        const Integer p = m(rank, c);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const Integer lead = m(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = p * m(i, j);
                if (lead != 0) v -= lead * m(rank, j);
                if (prev != 1) v /= prev;
                m(i, j) = std::move(v);
            }
            m(i, c) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

// Nonzero entries of one row, ordered by column.
using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

namespace detail {

inline void divide_by_content(SparseRow& r) {
    Integer g = 0;
    for (const auto& [c, v] : r) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& [c, v] : r) v /= g;
}

// a r - b p with a, b chosen to cancel the common leading entry.
inline SparseRow cancel_leading(const SparseRow& r, const SparseRow& p) {
    const Integer g = boost::multiprecision::gcd(r.front().second, p.front().second);
    const Integer a = p.front().second / g, b = r.front().second / g;
    SparseRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 1, j = 1;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, a * r[i].second);
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -b * p[j].second);
            ++j;
        } else {
            Integer v = a * r[i].second - b * p[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    divide_by_content(out);
    return out;
}

} // namespace detail

/*
 * Rank over Q of sparse integer rows by incremental echelon reduction.
 * Each row is reduced against the pivot rows by leading column; rows are kept
 * primitive, and the shorter of two rows sharing a leading column becomes the
 * pivot.
 */
inline std::size_t rank_sparse(std::vector<SparseRow> rows) {
    std::map<std::size_t, SparseRow> pivots;
    for (auto& r : rows) {
        detail::divide_by_content(r);
        while (!r.empty()) {
            auto it = pivots.find(r.front().first);
            if (it == pivots.end()) {
                pivots.emplace(r.front().first, std::move(r));
                break;
            }
            if (r.size() < it->second.size()) std::swap(r, it->second);
            r = detail::cancel_leading(r, it->second);
        }
    }
    return pivots.size();
}

inline std::size_t rank_sparse(const Matrix<Integer>& m) {
    std::vector<SparseRow> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) rows[i].emplace_back(j, m(i, j));
    return rank_sparse(std::move(rows));
}

inline constexpr std::uint64_t default_prime = 2305843009213693951ULL; // 2^61 - 1

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t reduce(const Integer& v, std::uint64_t p) {
    Integer r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
}

} // namespace detail

// Rank of the reduction mod p. Never exceeds the rank over Q.
inline std::size_t rank_mod_prime(const Matrix<Integer>& in, std::uint64_t p = default_prime) {
    const std::size_t rows = in.rows();
    const std::size_t cols = in.cols();
    std::vector<std::uint64_t> m(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i * cols + j] = detail::reduce(in(i, j), p);
    auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return m[i * cols + j]; };

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && at(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(at(rank, j), at(pivot, j));
        const std::uint64_t inv = detail::powmod(at(rank, c), p - 2, p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (at(i, c) == 0) continue;
            const std::uint64_t factor = detail::mulmod(at(i, c), inv, p);
            for (std::size_t j = c; j < cols; ++j) {
                const std::uint64_t sub = detail::mulmod(factor, at(rank, j), p);
                at(i, j) = at(i, j) >= sub ? at(i, j) - sub : at(i, j) + p - sub;
            }
        }
        ++rank;
    }
    return rank;
}

// Basis of {v : m v = 0} over Q, from the reduced row echelon form.
inline std::vector<std::vector<Rational>> null_space(Matrix<Rational> m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        m.swap_rows(r, pivot);
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace ktjurina
