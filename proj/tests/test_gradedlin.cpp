#include <gtest/gtest.h>

#include <algorithm>

#include <ktjurina/corpus.hpp>
#include <ktjurina/gradedlin.hpp>
#include <ktjurina/parse.hpp>

#include "independent_oracle.hpp"

using namespace ktjurina;

namespace {

WPolynomial P(const char* s, std::size_t n = 0) { return parse_polynomial(s, n); }

const WeightSystem A2({3, 2}, 6);

struct Corpus {
    std::string name;
    WPolynomial f;
    WeightSystem ws;
};

std::vector<Corpus> corpus() {
    std::vector<Corpus> out;
    for (const auto& e : standard_corpus()) {
        auto f = parse_polynomial(e.polynomial);
        out.push_back({e.polynomial, f, *infer_weights(f).weights});
    }
    return out;
}

} // namespace

TEST(MonomialsOfWdegree, Examples) {
    EXPECT_EQ(monomials_of_wdegree(A2, 6), (std::vector<Monomial>{Monomial({2, 0}), Monomial({0, 3})}));
    EXPECT_EQ(monomials_of_wdegree(WeightSystem({1, 1}, 2), 2),
              (std::vector<Monomial>{Monomial({2, 0}), Monomial({1, 1}), Monomial({0, 2})}));
    EXPECT_TRUE(monomials_of_wdegree(A2, 1).empty());
    EXPECT_TRUE(monomials_of_wdegree(A2, -1).empty());
}

TEST(MonomialsOfWdegree, CompleteAndDuplicateFree) {
    const WeightSystem ws({5, 3, 2}, 30);
    for (std::int64_t d = 0; d <= 40; ++d) {
        const auto ms = monomials_of_wdegree(ws, d);
        std::size_t brute = 0;
        for (unsigned a = 0; 5 * a <= d; ++a)
            for (unsigned b = 0; 5 * a + 3 * b <= d; ++b)
                if ((d - 5 * a - 3 * b) % 2 == 0) ++brute;
        EXPECT_EQ(ms.size(), brute) << d;
        EXPECT_TRUE(std::is_sorted(ms.rbegin(), ms.rend()));
        EXPECT_EQ(std::adjacent_find(ms.begin(), ms.end()), ms.end());
        for (const auto& m : ms) EXPECT_EQ(wdeg(m, ws), d);
    }
}

TEST(PieceDimension, Examples) {
    const GradedGeneratorSet gs(A2, {{P("2*x", 2), 1}, {P("3*y^2", 2), 1}});
    EXPECT_EQ(piece_dimension(gs, 6), (PieceDimension{2, 2}));
    EXPECT_EQ(piece_dimension(gs, 4), (PieceDimension{1, 0}));
    EXPECT_EQ(piece_dimension(gs, 1), (PieceDimension{0, 0}));
}

TEST(GradedGeneratorSet, RejectsInhomogeneousGenerator) {
    EXPECT_THROW(GradedGeneratorSet(A2, {{P("x + y"), 0}}), not_weighted_homogeneous);
}

TEST(QuotientDimension, Examples) {
    // m J(f) = (x^2, xy, y^3): classes 1, x, y, y^2
    EXPECT_EQ(quotient_dimension(milnor_ideal(P("x^2+y^3"), A2, 1), 20).total, 4u);
    // (f, J(f)): Milnor-Orlik (6/3 - 1)(6/2 - 1) = 2
    EXPECT_EQ(quotient_dimension(tjurina_ideal(P("x^2+y^3"), A2, 0), 20).total, 2u);
    const GradedGeneratorSet unit(A2, {{WPolynomial::constant(2, 1), 0}});
    EXPECT_EQ(quotient_dimension(unit, 10).total, 0u);
}

TEST(QuotientDimension, NonIsolatedIsRejected) {
    const auto f = P("x^2*y^2");
    const WeightSystem ws({1, 1}, 4);
    EXPECT_THROW(mu_oracle(f, ws, 0), dimension_not_finite);
    EXPECT_THROW(tau_oracle(f, ws, 1), dimension_not_finite);
    // an explicit bound that is too small is reported the same way
    EXPECT_THROW(mu_oracle(P("x^2+y^3"), A2, 3, {{}, 2}), dimension_not_finite);
}

TEST(Oracles, SpotValues) {
    const auto f = P("x^2+y^3");
    EXPECT_EQ(mu_oracle(f, A2, 1), 4u);
    EXPECT_EQ(tau_oracle(f, A2, 2), 6u);
    EXPECT_EQ(tau_oracle(f, A2, 3), 8u);
    EXPECT_EQ(jet_oracle(P("x^2+y^2"), WeightSystem({1, 1}, 2), 3), 5u);
    EXPECT_EQ(jet_oracle(P("x^2+y^2"), WeightSystem({1, 1}, 2), 0), 0u);
    EXPECT_THROW(tau_oracle(f, WeightSystem({1, 1}, 2), 0), not_weighted_homogeneous);
}

TEST(Oracles, TangentDim) {
    EXPECT_EQ(tangent_dim(P("x^2+y^2"), WeightSystem({1, 1}, 2), 2), 2u);
    EXPECT_EQ(tangent_dim(P("x^2+y^3"), A2, 2), 3u);
    EXPECT_EQ(tangent_dim(P("x^2+y^2"), WeightSystem({1, 1}, 2), 0), 1u);
}

// Values frozen from the test-only truncated computation (total degree,
// Gauss-Jordan over Q), which shares no code with the graded oracle.
TEST(Oracles, AgreeWithTruncatedComputation) {
    struct Case {
        const char* f;
        unsigned k;
        std::size_t mu, tau;
    };
    const std::vector<Case> frozen{
        {"x^3+y^3+z^3", 2, 20, 19}, {"x^3+y^3+z^3", 3, 35, 31}, {"x^2*y+y^3", 0, 4, 4},
        {"x^2*y+y^3", 1, 6, 6},     {"x^2*y+y^3", 2, 10, 9},     {"x^2*y+y^3", 3, 15, 12},
        {"x^2*y+y^3", 4, 21, 15},   {"x^2+y^4", 2, 8, 7},        {"x^2+y^4", 3, 12, 9},
    };
    for (const auto& c : frozen) {
        const auto f = P(c.f);
        const auto ws = *infer_weights(f).weights;
        EXPECT_EQ(mu_oracle(f, ws, c.k), c.mu) << c.f << " k=" << c.k;
        EXPECT_EQ(tau_oracle(f, ws, c.k), c.tau) << c.f << " k=" << c.k;
    }
    // and live, on a few small cases
    for (const char* s : {"x^2+y^3", "x^2+y^4", "x^2*y+y^3"}) {
        const auto f = P(s);
        const auto ws = *infer_weights(f).weights;
        for (unsigned k = 0; k <= 4; ++k) {
            EXPECT_EQ(mu_oracle(f, ws, k), reference::truncated_mu(f, k, k + 8)) << s << " k=" << k;
            EXPECT_EQ(tau_oracle(f, ws, k), reference::truncated_tau(f, k, k + 8)) << s << " k=" << k;
        }
    }
}

TEST(MilnorHilbertProfile, Examples) {
    using HF = std::vector<std::pair<std::int64_t, std::size_t>>;
    EXPECT_EQ(milnor_hilbert_profile(P("x^2+y^3"), A2), (HF{{0, 1}, {2, 1}}));
    EXPECT_EQ(milnor_hilbert_profile(P("x^3+y^3+z^3"), WeightSystem({1, 1, 1}, 3)), (HF{{0, 1}, {1, 3}, {2, 3}, {3, 1}}));
    EXPECT_EQ(milnor_hilbert_profile(P("x^2+y^2"), WeightSystem({1, 1}, 2)), (HF{{0, 1}}));
}

TEST(OracleProperty, MonotoneAndTauBelowMu) {
    for (const auto& c : corpus()) {
        std::size_t prev_mu = 0, prev_tau = 0;
        for (unsigned k = 0; k <= 12; ++k) {
            const auto mu = mu_oracle(c.f, c.ws, k);
            const auto tau = tau_oracle(c.f, c.ws, k);
            EXPECT_LE(tau, mu) << c.name << " k=" << k;
            EXPECT_GE(mu, prev_mu) << c.name << " k=" << k;
            EXPECT_GE(tau, prev_tau) << c.name << " k=" << k;
            if (k == 0) EXPECT_EQ(tau, mu) << c.name;
            prev_mu = mu;
            prev_tau = tau;
        }
    }
}

TEST(OracleProperty, EarlyExitMatchesFullScan) {
    for (const auto& c : corpus()) {
        for (unsigned k : {0u, 1u, 3u, 6u}) {
            const auto bound = default_hard_bound(c.ws, k);
            for (const auto& gs : {milnor_ideal(c.f, c.ws, k), tjurina_ideal(c.f, c.ws, k), jet_ideal(c.f, c.ws, k)}) {
                const auto fast = quotient_dimension(gs, bound, {1, true});
                const auto full = quotient_dimension(gs, bound, {1, false});
                EXPECT_EQ(fast.total, full.total) << c.name << " k=" << k;
            }
        }
    }
}

TEST(OracleProperty, IndependentOfThreadsAndGeneratorOrder) {
    for (const auto& c : corpus()) {
        const unsigned k = 3;
        auto gs = tjurina_ideal(c.f, c.ws, k);
        auto gens = gs.generators();
        std::reverse(gens.begin(), gens.end());
        const GradedGeneratorSet reversed(c.ws, gens);
        const auto bound = default_hard_bound(c.ws, k);
        const auto serial = quotient_dimension(gs, bound, {1, true});
        const auto parallel = quotient_dimension(gs, bound, {4, true});
        const auto swapped = quotient_dimension(reversed, bound, {3, true});
        EXPECT_EQ(serial.total, parallel.total) << c.name;
        EXPECT_EQ(serial.per_degree, parallel.per_degree) << c.name;
        EXPECT_EQ(serial.total, swapped.total) << c.name;
    }
}
