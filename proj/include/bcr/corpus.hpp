#pragma once

#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cyclic_code.hpp"
#include "gf2_factor.hpp"

namespace bcr {

struct CorpusEntry {
    std::string label;
    CyclicCode code;
};

namespace detail {

class CorpusBuilder {
public:
    void add(std::string label, CyclicCode code) {
        if (!seen_.insert({code.n(), to_hex(code.generator())}).second) return;
        out_.push_back({std::move(label), std::move(code)});
    }

    /// Every divisor of X^n - 1 built from a proper nonempty subset of its factors, with r in [1, max_r].
    void add_divisors(int n, int max_r) {
        const auto facs = factorize(x_n_minus_one(n));
        const std::size_t k = facs.size();
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
            BinaryPolynomial g = BinaryPolynomial::one();
            for (std::size_t i = 0; i < k; ++i)
                if (mask >> i & 1) g *= facs[i].poly;
            if (g.degree() > max_r) continue;
            add("divisor n=" + std::to_string(n) + " g=" + to_hex(g), make_cyclic_code(n, g));
        }
    }

    std::vector<CorpusEntry> take() { return std::move(out_); }

private:
    std::set<std::pair<int, std::string>> seen_;
    std::vector<CorpusEntry> out_;
};

}  // namespace detail

/// Cyclic codes with n <= 63 and r <= 14: Hamming, BCH(2, m), Melas(m) for
/// m <= 6, (1 + X + X^2) f products, and divisors of X^n - 1 for small n.
inline std::vector<CorpusEntry> standard_corpus() {
    detail::CorpusBuilder b;
    for (int m = 3; m <= 6; ++m) b.add("hamming(" + std::to_string(m) + ")", make_bch(1, m));
    for (int m = 3; m <= 6; ++m) b.add("bch(2," + std::to_string(m) + ")", make_bch(2, m));
    for (int m = 3; m <= 6; ++m) b.add("melas(" + std::to_string(m) + ")", make_melas(m));
    for (const auto& f : all_primitive_polynomials(4)) b.add("product " + to_hex(f), make_burst_correcting_product(f));
    const auto p6 = all_primitive_polynomials(6);
    for (std::size_t i = 0; i < 3 && i < p6.size(); ++i) b.add("product " + to_hex(p6[i]), make_burst_correcting_product(p6[i]));
    for (int n : {7, 9, 15, 17, 21}) b.add_divisors(n, 14);
    // Mixed degrees inside n = 63: an order-7 cubic or order-9 sextic next to a primitive sextic.
    const auto x63 = factorize(x_n_minus_one(63));
    const BinaryPolynomial m1 = default_primitive_modulus(6);
    for (const auto& f : x63) {
        if (f.poly == m1 || f.degree < 2) continue;
        const BinaryPolynomial g = f.poly * m1;
        if (g.degree() <= 14) b.add("mixed n=63 g=" + to_hex(g), make_cyclic_code(63, g));
    }
    return b.take();
}

/// Codes with n <= 16 from the standard corpus, for the exhaustive geometric check.
inline std::vector<CorpusEntry> short_corpus(int max_n = 16) {
    std::vector<CorpusEntry> out;
    for (auto& e : standard_corpus())
        if (e.code.n() <= max_n) out.push_back(std::move(e));
    return out;
}

/// g = p1 p2 with p1, p2 the default primitive polynomials of degrees d1 < d2;
/// length lcm(2^d1 - 1, 2^d2 - 1).
inline CyclicCode two_primitive_code(int d1, int d2) {
    const BinaryPolynomial p1 = default_primitive_modulus(d1), p2 = default_primitive_modulus(d2);
    const std::uint64_t n = std::lcm(nt::mersenne(d1), nt::mersenne(d2));
    if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) throw CodeError("length overflow");
    return make_cyclic_code(static_cast<int>(n), p1 * p2);
}

/// Whether the exact-value case of the three-part theorem covers (d1, d2).
inline bool two_primitive_exact_case(int d1, int d2) { return d1 < d2 && (std::gcd(d1, d2) < d2 - d1 || d2 - d1 <= 2); }

/// Two-primitive-factor codes with 1 <= d1 < d2 and d1 + d2 <= max_sum.
inline std::vector<CorpusEntry> mixed_degree_corpus(int max_sum = 14) {
    detail::CorpusBuilder b;
    for (int d1 = 1; d1 < max_sum; ++d1)
        for (int d2 = d1 + 1; d1 + d2 <= max_sum; ++d2)
            b.add("primitive(" + std::to_string(d1) + "," + std::to_string(d2) + ")", two_primitive_code(d1, d2));
    return b.take();
}

}  // namespace bcr
