#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bcr/burst_radius.hpp"
#include "bcr/corpus.hpp"
#include "bcr/lfsr.hpp"

using namespace bcr;

namespace {

// Direct recurrence on a bit list, independent of the word-level kernels.
BitVector recurrence(const BinaryPolynomial& g, std::uint64_t init, std::size_t len) {
    const int r = g.degree();
    BitVector a;
    for (int k = 0; k < r; ++k) a.push_back((init >> k) & 1);
    while (a.size() < len) {
        const std::size_t k = a.size();
        int v = 0;
        for (int i = 0; i < r; ++i) v ^= static_cast<int>(g.coeff(i)) & a[k - r + i];
        a.push_back(static_cast<std::uint8_t>(v));
    }
    a.resize(len);
    return a;
}

int cyclic_zero_run(const BitVector& period) {
    int best = 0, run = 0;
    for (std::size_t k = 0; k < 2 * period.size(); ++k) {
        run = period[k % period.size()] ? 0 : run + 1;
        best = std::max(best, run);
    }
    return best;
}

}  // namespace

TEST(Lfsr, SequenceMatchesRecurrence) {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 200; ++k) {
        const int r = 1 + static_cast<int>(rng() % 20);
        BinaryPolynomial g(rng() & ((std::uint64_t{1} << r) - 1));
        g.set_coeff(r, true);
        const std::uint64_t a = rng() & ((std::uint64_t{1} << r) - 1);
        EXPECT_EQ(lfsr_sequence(make_lfsr(g, a), 100), recurrence(g, a, 100));
    }
}

TEST(Lfsr, RejectsBadSpecs) {
    EXPECT_THROW(make_lfsr(BinaryPolynomial(1), 0), LfsrError);
    EXPECT_THROW(make_lfsr(BinaryPolynomial::monomial(64) + BinaryPolynomial(1), 1), LfsrError);
    EXPECT_THROW(validate(LfsrSpec{BinaryPolynomial(0b111), {1}}), LfsrError);
    EXPECT_THROW(lfsr_period(make_lfsr(BinaryPolynomial(0b110), 1)), LfsrError);
    EXPECT_THROW(max_zero_run(make_lfsr(BinaryPolynomial(0b111), 0)), LfsrError);
}

TEST(Lfsr, GaloisAndFibonacciRoundTrip) {
    std::mt19937_64 rng(22);
    for (int k = 0; k < 300; ++k) {
        const int r = 2 + static_cast<int>(rng() % 40);
        BinaryPolynomial g(rng() & ((std::uint64_t{1} << r) - 1));
        g.set_coeff(r, true);
        g.set_coeff(0, true);
        const std::uint64_t f = rng() & ((std::uint64_t{1} << r) - 1);
        const std::uint64_t a = galois_load_to_init(g, f);
        EXPECT_EQ(init_to_galois_load(g, a), f);
        EXPECT_EQ(galois_output(g, f, 3 * r), recurrence(g, a, 3 * r));
    }
}

TEST(Lfsr, MaximalLengthProperties) {
    for (int m = 2; m <= 10; ++m) {
        for (const auto& g : all_primitive_polynomials(m)) {
            const auto seq = lfsr_period(make_lfsr(g, 1));
            ASSERT_EQ(seq.size(), nt::mersenne(m));
            EXPECT_EQ(std::count(seq.begin(), seq.end(), 1), 1 << (m - 1));
            EXPECT_EQ(cyclic_zero_run(seq), m - 1);
            BitVector ext = seq;
            ext.insert(ext.end(), seq.begin(), seq.begin() + m - 1);
            const auto hist = pattern_histogram(ext, m, seq.size());
            EXPECT_EQ(hist[0], 0u);
            for (std::size_t y = 1; y < hist.size(); ++y) EXPECT_EQ(hist[y], 1u);
        }
    }
}

TEST(Lfsr, PatternCountAgreesWithHistogram) {
    const BinaryPolynomial g(0b1000011);
    const auto spec = make_lfsr(g, 0b101101);
    const auto seq = lfsr_sequence(spec, 200 + 3);
    const auto hist = pattern_histogram(seq, 4, 200);
    for (std::uint64_t y = 0; y < 16; ++y) {
        BitVector pat;
        for (int j = 0; j < 4; ++j) pat.push_back((y >> j) & 1);
        const auto st = pattern_count(spec, pat, 200, true);
        EXPECT_EQ(st.count, hist[y]);
        EXPECT_EQ(st.positions->size(), st.count);
    }
}

TEST(Lfsr, ZeroRunMatchesCodeRadiusOnCorpus) {
    // min over nonzero initial conditions of the zero run equals r - b.
    for (const auto& e : standard_corpus()) {
        const auto& code = e.code;
        if (code.r() > 10) continue;
        const auto& g = code.generator();
        int min_run = code.r();
        for (std::uint64_t a = 1; a < (std::uint64_t{1} << code.r()); ++a) min_run = std::min(min_run, max_zero_run(make_lfsr(g, a)));
        const int b = matrix_burst_radius(parity_check_matrix(code), true).b;
        EXPECT_EQ(min_run, code.r() - b) << e.label;
    }
}

TEST(Lfsr, OrbitsPartitionNonzeroStates) {
    for (std::uint64_t gw : {0b1011ull, 0b111010001ull, 0b1100011011ull}) {
        const BinaryPolynomial g(gw);
        require_orbit_ready(g);
        std::uint64_t total = 0;
        for_each_orbit(g, 28, [&](std::uint64_t rep, std::uint64_t size, int min_deg) {
            total += size;
            EXPECT_EQ(galois_cycle_length(g, rep), size);
            EXPECT_LE(min_deg, word_degree(rep));
        });
        EXPECT_EQ(total, (std::uint64_t{1} << g.degree()) - 1);
    }
    EXPECT_THROW(require_orbit_ready(BinaryPolynomial(0b101)), LfsrError);
}

TEST(Lfsr, TraceRepresentationAndMinimalPolynomial) {
    std::mt19937_64 rng(23);
    const BinaryPolynomial g = BinaryPolynomial(0b111) * BinaryPolynomial(0b10011) * BinaryPolynomial(0b1011);
    for (int k = 0; k < 40; ++k) {
        const std::uint64_t a = 1 + rng() % ((std::uint64_t{1} << g.degree()) - 1);
        const auto spec = make_lfsr(g, a);
        const auto comps = trace_representation(spec);
        EXPECT_EQ(trace_sequence(comps, 80), lfsr_sequence(spec, 80));
        const auto seq = lfsr_sequence(spec, 2 * g.degree() + 10);
        const auto mp = sequence_minimal_polynomial(comps);
        EXPECT_EQ(mp, minimal_polynomial_of(g, seq));
        EXPECT_TRUE(annihilates(mp, seq, g.degree()));
    }
}

TEST(Lfsr, SequencesAreExactlyTheDualCode) {
    for (const auto& e : standard_corpus()) {
        const auto& code = e.code;
        if (code.r() > 10) continue;
        const auto ker = parity_check_matrix(code).kernel_basis();
        std::set<std::vector<std::uint8_t>> seen;
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << code.r()); ++a) {
            const auto seq = lfsr_sequence(make_lfsr(code.generator(), a), code.n());
            for (const auto& v : ker) {
                int dot = 0;
                for (int j = 0; j < code.n(); ++j) dot ^= seq[j] & static_cast<int>(v.coeff(j));
                EXPECT_EQ(dot, 0) << e.label;
            }
            seen.insert(seq);
        }
        // 2^r distinct words orthogonal to a kernel of dimension n - r fill the dual.
        EXPECT_EQ(seen.size(), std::size_t{1} << code.r()) << e.label;
    }
}
