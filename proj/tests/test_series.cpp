#include <gtest/gtest.h>

#include <random>

#include <ktjurina/corpus.hpp>
#include <ktjurina/gradedlin.hpp>
#include <ktjurina/parse.hpp>
#include <ktjurina/series.hpp>

using namespace ktjurina;

namespace {

using Coeffs = std::vector<Integer>;

Coeffs C(std::initializer_list<long> v) {
    Coeffs out;
    for (auto x : v) out.emplace_back(x);
    return out;
}

RationalFunctionSeries over_one_minus_t(IntPoly num, std::size_t power) {
    return {std::move(num), IntPoly::one_minus_t_pow(power)};
}

std::pair<WPolynomial, WeightSystem> poly(const char* s) {
    auto f = parse_polynomial(s);
    return {f, *infer_weights(f).weights};
}

} // namespace

TEST(Expand, Examples) {
    EXPECT_EQ(expand(over_one_minus_t(IntPoly::monomial(2), 4), 5), C({0, 0, 1, 4, 10, 20}));
    EXPECT_EQ(expand(RationalFunctionSeries(IntPoly{1, 0, 0, 0, -1}, IntPoly{1, 0, -1}), 4), C({1, 0, 1, 0, 0}));
    EXPECT_EQ(expand(over_one_minus_t(IntPoly{2}, 1), 3), C({2, 2, 2, 2}));
    EXPECT_THROW(expand(RationalFunctionSeries(IntPoly{1}, IntPoly{0, 1}), 2), error);
}

TEST(RationalFunctionSeries, EqualityIsCrossMultiplied) {
    const RationalFunctionSeries a(IntPoly{1, 1}, IntPoly{1, 0, -1}); // (1+t)/(1-t^2)
    const RationalFunctionSeries b(IntPoly{1}, IntPoly{1, -1});       // 1/(1-t)
    EXPECT_EQ(a, b);
    EXPECT_FALSE(a == RationalFunctionSeries(IntPoly{1}, IntPoly{1, 1}));
}

TEST(RationalFunctionSeries, ValueAtOne) {
    EXPECT_FALSE(RationalFunctionSeries(IntPoly{1}, IntPoly{1, -1}).value_at_one());
    EXPECT_EQ(*RationalFunctionSeries(IntPoly{1, 0, -1}, IntPoly{1, -1}).value_at_one(), 2);
    EXPECT_EQ(*RationalFunctionSeries(IntPoly{3}, IntPoly{-2}).value_at_one(), Rational(-3, 2));
}

// Expansion commutes with + and * up to truncation, on random series with
// denominators that are products of (1 - t^a).
TEST(ExpandProperty, RingHomomorphism) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-4, 4), deg(0, 5), pw(1, 3);
    auto random_series = [&] {
        std::vector<Integer> num(deg(rng) + 1);
        for (auto& c : num) c = coef(rng);
        IntPoly den = IntPoly::constant(1);
        for (int i = pw(rng); i > 0; --i) den = den * (IntPoly::constant(1) - IntPoly::monomial(pw(rng)));
        return RationalFunctionSeries(IntPoly(num), den);
    };
    const std::size_t K = 15;
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_series(), b = random_series();
        const auto ea = expand(a, K), eb = expand(b, K), sum = expand(a + b, K), prod = expand(a * b, K);
        for (std::size_t k = 0; k <= K; ++k) {
            EXPECT_EQ(sum[k], ea[k] + eb[k]);
            Integer cauchy = 0;
            for (std::size_t j = 0; j <= k; ++j) cauchy += ea[j] * eb[k - j];
            EXPECT_EQ(prod[k], cauchy);
        }
    }
}

TEST(AssembleTheoremC, DifferenceIdentityForArbitraryIngredients) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (std::size_t n = 2; n <= 4; ++n) {
        TheoremCIngredients ing;
        ing.n = n;
        ing.mu0 = 17;
        for (std::size_t i = 0; i < n * (n - 1) / 2; ++i) ing.mij_list.push_back(1 + i % 3);
        ing.gaps.gap_numbers = {2, 5};
        ing.gaps.z_inf = RationalFunctionSeries(IntPoly{coef(rng), coef(rng)}, IntPoly::one_minus_t_pow(2));
        ing.gaps.h_series = {RationalFunctionSeries(IntPoly{coef(rng), 1}, IntPoly{1}),
                             RationalFunctionSeries(IntPoly{coef(rng)}, IntPoly::one_minus_t_pow(1))};
        const auto s = assemble_theorem_c(ing);
        const RationalFunctionSeries shift(IntPoly::monomial(2), IntPoly::one_minus_t_pow(n + 1));
        EXPECT_EQ(s.tjurina, s.milnor - shift);
        EXPECT_EQ(expand(s.milnor, 0), Coeffs{17});
        EXPECT_EQ(expand(s.tjurina, 0), Coeffs{17});
    }
}

TEST(AssembleTheoremC, ValidatesIngredients) {
    TheoremCIngredients ing;
    ing.n = 2;
    ing.mu0 = 2;
    ing.mij_list = {1};
    ing.gaps.gap_numbers = {3, 2};
    ing.gaps.h_series = {RationalFunctionSeries(), RationalFunctionSeries()};
    EXPECT_THROW(assemble_theorem_c(ing), error);
    ing.gaps.gap_numbers = {2};
    EXPECT_THROW(assemble_theorem_c(ing), error);
}

// For these inputs the part of the formula fixed by n, mu0 and m_{i,j}
// (Z_inf = 0, no gap numbers) already reproduces the oracle profiles.
TEST(AssembleTheoremC, WeightPartReproducesOracleOnSmallCases) {
    {
        auto [f, ws] = poly("x^2+y^3");
        const auto s = assemble_theorem_c(weight_ingredients(f, ws));
        EXPECT_EQ(expand(s.milnor, 3), C({2, 4, 7, 11}));
        EXPECT_EQ(expand(s.tjurina, 3), C({2, 4, 6, 8}));
        EXPECT_TRUE(verify_against_oracle(s.milnor, [&](std::size_t k) { return Integer(mu_oracle(f, ws, k)); }, 3).pass);
    }
    {
        auto [f, ws] = poly("x^3+y^3+z^3");
        EXPECT_EQ(expand(assemble_theorem_c(weight_ingredients(f, ws)).milnor, 1), C({8, 11}));
    }
    {
        auto [f, ws] = poly("x^2+y^2");
        EXPECT_EQ(expand(assemble_theorem_c(weight_ingredients(f, ws)).tjurina, 2), C({1, 3, 5}));
    }
}

TEST(ExtractIngredients, NeedsGapData) {
    auto [f, ws] = poly("x^2+y^3");
    EXPECT_THROW(extract_ingredients(f, ws, {}), ingredient_unavailable);

    GapTable table;
    table[f.to_string()] = GapData{};
    const auto ing = extract_ingredients(f, ws, table);
    EXPECT_EQ(ing.n, 2u);
    EXPECT_EQ(ing.mu0, 2);
    EXPECT_EQ(ing.mij_list, (std::vector<unsigned>{1}));

    table[f.to_string()] = GapData{{4, 1}, {}, {{}, {}}};
    EXPECT_THROW(extract_ingredients(f, ws, table), error);
}

TEST(AssembleTheoremD, Structure) {
    auto [f, ws] = poly("x^3+y^3+z^3");
    // any L with zero constant term leaves mu_1 = mu0 + 3
    for (const auto& L : {RationalFunctionSeries(), RationalFunctionSeries(IntPoly{0, -3, 2}, IntPoly{1, -1})}) {
        const auto s = assemble_theorem_d({1, f, L}, 8);
        EXPECT_EQ(expand(s.milnor, 1), C({8, 11}));
        EXPECT_EQ(expand(s.tjurina, 0), C({8}));
        EXPECT_EQ(s.tjurina, s.milnor - RationalFunctionSeries(IntPoly::monomial(2), IntPoly::one_minus_t_pow(4)));
    }
    EXPECT_THROW(assemble_theorem_d({1, parse_polynomial("x^2+y^3"), {}}, 2), error);
}

TEST(VerifyAgainstOracle, PassAndFail) {
    auto [f, ws] = poly("x^2+y^3");
    const ClosedFormContext ctx(f, ws);
    auto mu = [&](std::size_t k) { return Integer(mu_oracle(f, ws, static_cast<unsigned>(k))); };

    std::vector<Integer> closed;
    for (unsigned k = 0; k <= ctx.mult.m0; ++k) closed.push_back(theorem_b_mu(ctx, k));
    EXPECT_TRUE(verify_sequence(closed, mu).pass);

    const auto good = assemble_theorem_c(weight_ingredients(f, ws)).milnor;
    const RationalFunctionSeries perturbed(good.numerator() + IntPoly::monomial(1), good.denominator());
    const auto bad = verify_against_oracle(perturbed, mu, 3);
    EXPECT_FALSE(bad.pass);
    EXPECT_EQ(*bad.first_mismatch, 1u);

    const auto constant = verify_against_oracle(over_one_minus_t(IntPoly{2}, 1), mu, 2);
    EXPECT_FALSE(constant.pass);
    EXPECT_EQ(*constant.first_mismatch, 1u);
    EXPECT_EQ(constant.expected, 4);
    EXPECT_EQ(constant.actual, 2);
}

// mu_k - tau_k = binom(k - 2 + n, n), measured with the oracle.
TEST(SeriesProperty, DifferenceLawOnCorpus) {
    for (const auto& e : standard_corpus()) {
        auto [f, ws] = poly(e.polynomial.c_str());
        const auto n = static_cast<std::int64_t>(f.nvars());
        for (unsigned k = 0; k <= 12; ++k)
            EXPECT_EQ(Integer(mu_oracle(f, ws, k)) - Integer(tau_oracle(f, ws, k)), binom(static_cast<std::int64_t>(k) - 2 + n, n))
                << e.polynomial << " k=" << k;
    }
}
