#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bcr/char_sums.hpp"
#include "bcr/corpus.hpp"

using namespace bcr;

namespace {

// Sequence Tr(sum_i gamma_i alpha^{e_i k}) computed term by term.
BitVector trace_form_sequence(const FieldContext& ctx, const std::vector<std::int64_t>& exps, const std::vector<FieldElement>& gammas,
                              std::size_t len) {
    BitVector out(len);
    for (std::size_t k = 0; k < len; ++k) {
        FieldElement v{};
        for (std::size_t i = 0; i < exps.size(); ++i)
            v = FieldContext::add(v, ctx.mul(gammas[i], ctx.alpha_pow(exps[i] * static_cast<std::int64_t>(k))));
        out[k] = static_cast<std::uint8_t>(ctx.trace(v));
    }
    return out;
}

}  // namespace

TEST(CharSums, LinearTraceSums) {
    for (int m = 2; m <= 10; ++m) {
        const auto ctx = default_field(m);
        const FieldPolynomial x{{0}, {1}};
        EXPECT_EQ(char_sum(*ctx, x, SumDomain::all), 0);
        EXPECT_EQ(char_sum(*ctx, x, SumDomain::nonzero), -1);
        LaurentExponentForm f;
        f.positive.push_back({{1}, 1});
        EXPECT_EQ(char_sum(*ctx, f, SumDomain::nonzero), -1);
    }
}

TEST(CharSums, LaurentEvaluation) {
    const auto ctx = default_field(5);
    LaurentExponentForm f;
    f.positive.push_back({ctx->alpha_pow(3), 3});
    f.negative.push_back({ctx->alpha_pow(7), 1});
    for (std::uint64_t v = 1; v < 32; ++v) {
        const FieldElement x{v};
        const auto expect = FieldContext::add(ctx->mul(ctx->alpha_pow(3), ctx->pow(x, 3)), ctx->mul(ctx->alpha_pow(7), ctx->inv(x)));
        EXPECT_EQ(evaluate(*ctx, f, x), expect);
    }
}

TEST(CharSums, WeilBoundLiteralSweepMatchesFoldedSweep) {
    // Every monic f of odd degree d <= 5 over GF(8) and d <= 3 over GF(16).
    for (auto [m, dmax] : {std::pair{2, 5}, std::pair{3, 5}, std::pair{4, 3}}) {
        const auto ctx = default_field(m);
        const std::uint64_t q = ctx->size();
        double literal_max = 0;
        for (int d = 3; d <= dmax; d += 2) {
            std::uint64_t combos = 1;
            for (int i = 0; i < d; ++i) combos *= q;
            for (std::uint64_t idx = 0; idx < combos; ++idx) {
                FieldPolynomial f(static_cast<std::size_t>(d) + 1);
                std::uint64_t rest = idx;
                for (int i = 0; i < d; ++i, rest /= q) f[i] = {rest % q};
                f[d] = ctx->one();
                const auto v = wcu_check(*ctx, f);
                ASSERT_TRUE(v.applicable);
                EXPECT_TRUE(v.ok);
                literal_max = std::max(literal_max, std::abs(double(v.sum)) / v.bound);
            }
        }
        const auto folded = wcu_exhaustive(*ctx, dmax);
        EXPECT_EQ(folded.violations, 0u);
        EXPECT_NEAR(folded.max_ratio, literal_max, 1e-12) << m;
    }
}

TEST(CharSums, FoldedSweepHasNoViolations) {
    for (int m = 1; m <= 7; ++m) {
        const auto rep = wcu_exhaustive(*default_field(m), 5);
        EXPECT_EQ(rep.violations, 0u) << m;
        EXPECT_LE(rep.max_ratio, 1.0);
    }
}

TEST(CharSums, WcuRejectsEvenDegree) {
    const auto ctx = default_field(4);
    EXPECT_FALSE(wcu_check(*ctx, FieldPolynomial{{1}, {0}, {1}}).applicable);
    EXPECT_FALSE(wcu_check(*ctx, FieldPolynomial{{1}}).applicable);
}

TEST(CharSums, LaurentShapeAndSampling) {
    const auto ctx = default_field(6);
    LaurentExponentForm bad;
    bad.positive.push_back({{1}, 2});
    bad.negative.push_back({{1}, 1});
    EXPECT_FALSE(laurent_weil_check(*ctx, bad).applicable);
    EXPECT_TRUE(bad.shape_violation().has_value());
    for (int m = 3; m <= 8; ++m) {
        const auto rep = laurent_sampled(*default_field(m), {1, 3, 5}, 20, 99);
        EXPECT_EQ(rep.violations, 0u) << m;
        EXPECT_EQ(rep.cases_checked, 9u * 20u);
    }
    std::mt19937_64 rng(5);
    EXPECT_THROW(random_laurent_form(*ctx, 2, 1, rng), CharSumError);
}

TEST(CharSums, PatternCountsFromCharacters) {
    std::mt19937_64 rng(51);
    for (int m : {5, 6}) {
        const auto ctx = default_field(m);
        for (const auto& exps : {std::vector<std::int64_t>{1, 3}, std::vector<std::int64_t>{1, -1}}) {
            for (int k = 0; k < 4; ++k) {
                std::vector<FieldElement> gam{{1 + rng() % (ctx->size() - 1)}, {rng() % ctx->size()}};
                const int s = 4;
                const std::uint64_t window = nt::mersenne(m);
                const auto seq = trace_form_sequence(*ctx, exps, gam, window + s - 1);
                const auto hist = pattern_histogram(seq, s, window);
                for (std::uint64_t y = 0; y < hist.size(); ++y)
                    EXPECT_EQ(pattern_count_via_characters(*ctx, exps, gam, y, s), static_cast<std::int64_t>(hist[y]));
            }
        }
    }
}

TEST(CharSums, PatternTheoremsOnSmallFamilies) {
    for (int m : {6, 7}) {
        const auto bch = pattern_theorem_check(make_bch(2, m), PatternVariant::equal_degree, m);
        ASSERT_TRUE(bch.applicable) << bch.failed_hypothesis;
        EXPECT_EQ(bch.max_t, 3u);
        EXPECT_TRUE(bch.violations.empty());
        EXPECT_EQ(bch.corollary_misses, 0u);
        const auto mel = pattern_theorem_check(make_melas(m), PatternVariant::melas_mixed, m);
        ASSERT_TRUE(mel.applicable) << mel.failed_hypothesis;
        EXPECT_EQ(mel.max_t + mel.max_u, 2u);
        EXPECT_TRUE(mel.violations.empty());
        EXPECT_EQ(mel.corollary_misses, 0u);
    }
    EXPECT_FALSE(pattern_theorem_check(make_bch(1, 5), PatternVariant::equal_degree, 3).applicable);
    EXPECT_FALSE(pattern_theorem_check(make_bch(2, 5), PatternVariant::equal_degree, 6).applicable);
}

TEST(CharSums, SmallestOddConjugate) {
    const auto ctx = default_field(6);
    EXPECT_EQ(smallest_odd_conjugate(*ctx, 1), 1u);
    EXPECT_EQ(smallest_odd_conjugate(*ctx, 6), 3u);
    EXPECT_EQ(smallest_odd_conjugate(*ctx, -1), 31u);
}

TEST(CharSums, NiederreiterOnMixedCodes) {
    for (const auto& e : mixed_degree_corpus(10)) {
        const auto sweep = niederreiter_sweep(e.code.generator(), 4);
        EXPECT_TRUE(sweep.violations.empty()) << e.label;
        EXPECT_GT(sweep.sequences, 0u);
    }
    const auto spec = make_lfsr(BinaryPolynomial(0b1000011), 1);
    const auto rep = niederreiter_check(spec, 3);
    EXPECT_EQ(rep.period, 63u);
    EXPECT_TRUE(rep.applicable);
    EXPECT_FALSE(niederreiter_check(spec, 7).applicable);
}

TEST(CharSums, AppendixInequality) {
    for (int a = 1; a <= 60; ++a)
        for (int b = 1; b <= 60; ++b) EXPECT_TRUE(appendix_inequality_check(a, b).holds) << a << "," << b;
    // Floating-point cross-check where long double is exact enough.
    for (int a = 1; a <= 20; ++a)
        for (int b = 1; b <= 20; ++b) {
            const int c = std::gcd(a, b);
            const long double lhs = std::ldexp(1.0L, c) * (std::ldexp(1.0L, c) - 1) * std::sqrt(std::ldexp(1.0L, a + b)) +
                                    std::ldexp(1.0L, a + b) + std::ldexp(1.0L, c);
            const long double rhs = std::ldexp(1.0L, a + c) + std::ldexp(1.0L, b + c);
            EXPECT_GT(lhs, rhs);
        }
    EXPECT_THROW(appendix_inequality_check(0, 3), std::invalid_argument);
}

TEST(CharSums, FullStateEnumerationMatchesOrbits) {
    const auto code = make_bch(2, 5);
    const auto orbits = pattern_theorem_check(code, PatternVariant::equal_degree, 5);
    const auto full = pattern_theorem_check(code, PatternVariant::equal_degree, 5, 26, true);
    EXPECT_EQ(full.sequences, (1u << 10) - 1);
    EXPECT_LT(orbits.sequences, full.sequences);
    EXPECT_TRUE(full.violations.empty());
    EXPECT_EQ(full.corollary_misses == 0, orbits.corollary_misses == 0);
}

TEST(CharSums, SumSplitsAtZero) {
    std::mt19937_64 rng(52);
    for (int m = 2; m <= 8; ++m) {
        const auto ctx = default_field(m);
        for (int k = 0; k < 20; ++k) {
            FieldPolynomial f(6);
            for (auto& c : f) c = {rng() % ctx->size()};
            const int at_zero = 1 - 2 * ctx->trace(f[0]);
            EXPECT_EQ(char_sum(*ctx, f, SumDomain::all), at_zero + char_sum(*ctx, f, SumDomain::nonzero));
        }
    }
}

TEST(CharSums, AppendixSpotValues) {
    EXPECT_TRUE(appendix_inequality_check(1, 1).holds);
    const auto v = appendix_inequality_check(2, 4);
    EXPECT_EQ(v.c, 2);
    EXPECT_TRUE(v.holds);
}
