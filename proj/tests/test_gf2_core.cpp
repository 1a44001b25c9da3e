#include <gtest/gtest.h>

#include <random>

#include "bcr/field.hpp"
#include "bcr/gf2_factor.hpp"
#include "bcr/gf2_poly.hpp"
#include "bcr/matrix.hpp"
#include "bcr/number_theory.hpp"

using namespace bcr;

namespace {

// Schoolbook oracles on coefficient vectors.
std::vector<int> to_vec(const BinaryPolynomial& p) {
    std::vector<int> v;
    for (int i = 0; i <= p.degree(); ++i) v.push_back(p.coeff(i));
    return v;
}

std::vector<int> naive_mul(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] ^= a[i] & b[j];
    while (!c.empty() && !c.back()) c.pop_back();
    return c;
}

BinaryPolynomial random_poly(std::mt19937_64& rng, int max_deg) {
    BinaryPolynomial p;
    const int d = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    for (int i = 0; i <= d; ++i)
        if (rng() & 1) p.set_coeff(i, true);
    return p;
}

std::uint64_t brute_order(std::uint64_t g) {
    const BinaryPolynomial gp(g);
    for (std::uint64_t n = 1;; ++n)
        if ((x_n_minus_one(static_cast<int>(n)) % gp).is_zero()) return n;
}

bool brute_irreducible(std::uint64_t g) {
    const int d = std::bit_width(g) - 1;
    if (d < 1) return false;
    for (std::uint64_t h = 2; std::bit_width(h) - 1 <= d / 2; ++h)
        if ((BinaryPolynomial(g) % BinaryPolynomial(h)).is_zero()) return false;
    return true;
}

int euler_phi(std::uint64_t n) {
    int r = 0;
    for (std::uint64_t k = 1; k <= n; ++k) r += std::gcd(k, n) == 1;
    return r;
}

}  // namespace

TEST(BinaryPolynomial, ZeroHasNegativeInfiniteDegree) {
    EXPECT_EQ(BinaryPolynomial().degree(), kNegInf);
    EXPECT_TRUE(BinaryPolynomial().is_zero());
    EXPECT_EQ(BinaryPolynomial(1).degree(), 0);
    EXPECT_EQ(BinaryPolynomial::monomial(200).degree(), 200);
}

TEST(BinaryPolynomial, MultiplicationMatchesSchoolbook) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 300; ++k) {
        const auto a = random_poly(rng, 150), b = random_poly(rng, 150);
        EXPECT_EQ(to_vec(a * b), naive_mul(to_vec(a), to_vec(b)));
    }
}

TEST(BinaryPolynomial, DivModReconstructs) {
    std::mt19937_64 rng(12);
    for (int k = 0; k < 300; ++k) {
        const auto a = random_poly(rng, 200);
        auto b = random_poly(rng, 90);
        if (b.is_zero()) b = BinaryPolynomial::one();
        const auto [q, r] = divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
    }
    EXPECT_THROW(BinaryPolynomial(5) % BinaryPolynomial(), DivisionByZero);
}

TEST(BinaryPolynomial, GcdDividesBoth) {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 100; ++k) {
        const auto c = random_poly(rng, 20) + BinaryPolynomial::one();
        const auto a = random_poly(rng, 40) * c, b = random_poly(rng, 40) * c;
        const auto d = gcd(a, b);
        if (a.is_zero() && b.is_zero()) continue;
        EXPECT_TRUE((a % d).is_zero());
        EXPECT_TRUE((b % d).is_zero());
        EXPECT_TRUE((d % c).is_zero());
    }
    EXPECT_EQ(gcd(BinaryPolynomial(0b1011), BinaryPolynomial()), BinaryPolynomial(0b1011));
}

TEST(BinaryPolynomial, ShiftsAndReciprocal) {
    const auto p = parse_polynomial("x^4+x+1");
    EXPECT_EQ(p.reciprocal(), parse_polynomial("x^4+x^3+1"));
    EXPECT_EQ(p.shifted_left(70).shifted_right(70), p);
    EXPECT_EQ(p.shifted_right(1), parse_polynomial("x^3+1"));
    EXPECT_EQ(p.truncated(2), parse_polynomial("x+1"));
    EXPECT_EQ(BinaryPolynomial::monomial(5).lowest_term(), 5);
}

TEST(BinaryPolynomial, PowmodAgreesWithRepeatedMultiplication) {
    const BinaryPolynomial g(0b10011);
    BinaryPolynomial acc = BinaryPolynomial::one();
    for (std::uint64_t e = 0; e < 40; ++e) {
        EXPECT_EQ(x_pow_mod(e, g), acc) << e;
        acc = mulmod(acc, BinaryPolynomial::x(), g);
    }
    EXPECT_EQ(x_pow_two_pow_mod(4, g), x_pow_mod(16, g));
}

TEST(BinaryPolynomial, TextFormsRoundTrip) {
    const auto p = BinaryPolynomial(0b1011);
    EXPECT_EQ(to_hex(p), "0xB");
    EXPECT_EQ(to_human(p), "x^3+x+1");
    EXPECT_EQ(parse_polynomial("0xB"), p);
    EXPECT_EQ(parse_polynomial("[1,1,0,1]"), p);
    EXPECT_EQ(parse_polynomial("X^3 + X + 1"), p);
    std::mt19937_64 rng(14);
    for (int k = 0; k < 100; ++k) {
        const auto q = random_poly(rng, 130);
        EXPECT_EQ(parse_polynomial(to_hex(q)), q);
        EXPECT_EQ(parse_polynomial(to_human(q)), q);
    }
    EXPECT_THROW(parse_polynomial("0xZZ"), ParseError);
    EXPECT_THROW(parse_polynomial("x^+1"), ParseError);
    EXPECT_THROW(parse_polynomial("[1,2]"), ParseError);
}

TEST(NumberTheory, PrimeDivisorsOfMersenneNumbers) {
    EXPECT_EQ(nt::prime_divisors(63), (std::vector<std::uint64_t>{3, 7}));
    EXPECT_EQ(nt::prime_divisors(nt::mersenne(11)), (std::vector<std::uint64_t>{23, 89}));
    const auto big = nt::prime_divisors(nt::mersenne(60));
    std::uint64_t rest = nt::mersenne(60);
    for (auto p : big) {
        EXPECT_TRUE(nt::is_prime(p));
        while (rest % p == 0) rest /= p;
    }
    EXPECT_EQ(rest, 1u);
    EXPECT_THROW(nt::checked_lcm(~std::uint64_t{0}, ~std::uint64_t{0} - 1), std::overflow_error);
}

TEST(Factorization, ProductOfIrreduciblesRecoversInput) {
    std::mt19937_64 rng(15);
    for (int k = 0; k < 150; ++k) {
        auto g = random_poly(rng, 40);
        if (g.degree() < 1) continue;
        BinaryPolynomial prod = BinaryPolynomial::one();
        for (const auto& f : factorize(g)) {
            EXPECT_TRUE(is_irreducible(f.poly));
            for (int i = 0; i < f.multiplicity; ++i) prod *= f.poly;
        }
        EXPECT_EQ(prod, g);
    }
}

TEST(Factorization, IrreducibilityMatchesTrialDivision) {
    for (std::uint64_t g = 2; g < (1u << 11); ++g) EXPECT_EQ(is_irreducible(BinaryPolynomial(g)), brute_irreducible(g)) << g;
}

TEST(Factorization, OrderMatchesBruteForce) {
    for (std::uint64_t g = 3; g < (1u << 9); g += 2) EXPECT_EQ(poly_order(BinaryPolynomial(g)), brute_order(g)) << g;
    EXPECT_THROW(poly_order(BinaryPolynomial(0b110)), OrderError);
    EXPECT_THROW(poly_order(BinaryPolynomial()), OrderError);
}

TEST(Factorization, PrimitiveCountIsPhiOverM) {
    for (int m = 2; m <= 12; ++m)
        EXPECT_EQ(static_cast<int>(all_primitive_polynomials(m).size()), euler_phi(nt::mersenne(m)) / m) << m;
}

TEST(Factorization, DefaultModuli) {
    EXPECT_EQ(default_primitive_modulus(3), BinaryPolynomial(0xB));
    EXPECT_EQ(default_primitive_modulus(4), BinaryPolynomial(0x13));
    EXPECT_EQ(default_primitive_modulus(6), BinaryPolynomial(0x43));
    EXPECT_EQ(default_primitive_modulus(8), BinaryPolynomial(0x11D));
    for (int m = 2; m <= 14; ++m) EXPECT_EQ(default_primitive_modulus(m), all_primitive_polynomials(m).front());
    EXPECT_TRUE(is_primitive(default_primitive_modulus(40)));
}

TEST(Factorization, SquareFreeClassification) {
    const auto rep = classify(BinaryPolynomial(0b111) * BinaryPolynomial(0b111) * BinaryPolynomial(0b1011));
    EXPECT_FALSE(rep.square_free);
    EXPECT_EQ(rep.factors.size(), 2u);
    EXPECT_TRUE(classify(BinaryPolynomial(0b10011)).primitive);
    EXPECT_FALSE(classify(BinaryPolynomial(0b11111)).primitive);
    EXPECT_TRUE(classify(BinaryPolynomial(0b11111)).irreducible);
}

TEST(Field, MultiplicationMatchesPolynomialProduct) {
    for (int m : {3, 5, 8, 13, 21, 33}) {
        const auto ctx = default_field(m);
        std::mt19937_64 rng(16 + m);
        for (int k = 0; k < 200; ++k) {
            const std::uint64_t a = rng() & (ctx->size() - 1), b = rng() & (ctx->size() - 1);
            const auto expect = (BinaryPolynomial(a) * BinaryPolynomial(b)) % ctx->modulus();
            EXPECT_EQ(ctx->mul({a}, {b}).value, expect.is_zero() ? 0 : expect.to_u64());
        }
    }
}

TEST(Field, InverseAndAlphaPowers) {
    const auto ctx = default_field(8);
    for (std::uint64_t a = 1; a < 256; ++a) EXPECT_EQ(ctx->mul({a}, ctx->inv({a})), ctx->one());
    EXPECT_EQ(ctx->alpha_pow(-1), ctx->inv(ctx->alpha()));
    EXPECT_EQ(ctx->alpha_pow(255), ctx->one());
    EXPECT_EQ(ctx->log(ctx->alpha_pow(77)), 77u);
    EXPECT_THROW(ctx->inv({0}), std::domain_error);
}

TEST(Field, TraceIsLinearAndBalanced) {
    for (int m : {4, 7, 10}) {
        const auto ctx = default_field(m);
        int ones = 0;
        for (std::uint64_t a = 0; a < ctx->size(); ++a) {
            // Oracle: x + x^2 + ... + x^{2^{m-1}}.
            FieldElement s{}, y{a};
            for (int k = 0; k < m; ++k) {
                s = FieldContext::add(s, y);
                y = ctx->square(y);
            }
            ASSERT_LE(s.value, 1u);
            EXPECT_EQ(ctx->trace({a}), static_cast<int>(s.value));
            ones += ctx->trace({a});
        }
        EXPECT_EQ(ones, 1 << (m - 1));
    }
}

TEST(Field, NonPrimitiveModulusHasNoTables) {
    const auto ctx = make_field(BinaryPolynomial(0b11111));
    EXPECT_FALSE(ctx->is_primitive());
    EXPECT_EQ(ctx->alpha_order(), 5u);
    EXPECT_EQ(ctx->pow(ctx->alpha(), 5), ctx->one());
    EXPECT_THROW(make_field(BinaryPolynomial(0b101)), std::domain_error);
}

TEST(Field, MinimalPolynomials) {
    const auto ctx = make_field(BinaryPolynomial(0b10011));
    EXPECT_EQ(minimal_polynomial(*ctx, 1), BinaryPolynomial(0b10011));
    EXPECT_EQ(minimal_polynomial(*ctx, 3), BinaryPolynomial(0b11111));
    EXPECT_EQ(minimal_polynomial(*ctx, 5), BinaryPolynomial(0b111));
    EXPECT_EQ(minimal_polynomial(*ctx, -1), BinaryPolynomial(0b11001));
    EXPECT_THROW(minimal_polynomial(*ctx, 15), std::domain_error);
    EXPECT_EQ(minimal_polynomial(*ctx, 0, true), BinaryPolynomial(0b11));
    // Every minimal polynomial has alpha^t as a root.
    for (std::int64_t t = 1; t < 15; ++t) EXPECT_TRUE(ctx->eval(minimal_polynomial(*ctx, t), ctx->alpha_pow(t)).is_zero());
    EXPECT_EQ(cyclotomic_coset(*ctx, 3), (std::vector<std::uint64_t>{3, 6, 9, 12}));
}

TEST(Matrix, InverseAndKernel) {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 50; ++k) {
        const int n = 12;
        BinaryMatrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a.set(i, j, rng() & 1);
        const auto inv = a.inverse();
        EXPECT_EQ(inv.has_value(), a.rank() == n);
        if (inv) {
            BinaryMatrix id(n, n);
            for (int i = 0; i < n; ++i) id.set(i, i, true);
            EXPECT_EQ(a * *inv, id);
        }
        BinaryMatrix h(5, 14);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 14; ++j) h.set(i, j, rng() & 1);
        const auto ker = h.kernel_basis();
        EXPECT_EQ(static_cast<int>(ker.size()), 14 - h.rank());
        for (const auto& v : ker) EXPECT_EQ(h.multiply(v), 0u);
    }
}

TEST(Matrix, DumpIsOneHexRowPerLine) {
    const auto h = BinaryMatrix::from_strings({"1101", "0010"});
    EXPECT_EQ(dump_matrix(h), "0xB\n0x4\n");
    EXPECT_EQ(h.column(0), 1u);
    EXPECT_EQ(h.column(2), 2u);
}
