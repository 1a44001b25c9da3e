#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "gf2_poly.hpp"
#include "number_theory.hpp"

namespace bcr {

struct IrreducibleFactor {
    BinaryPolynomial poly;
    int degree = 0;
    int multiplicity = 1;

    friend bool operator==(const IrreducibleFactor&, const IrreducibleFactor&) = default;
};

struct FactorReport {
    bool irreducible = false;
    bool primitive = false;
    bool square_free = false;
    /// Distinct irreducible factors, ordered by degree then bit string.
    std::vector<IrreducibleFactor> factors;
};

namespace detail {

/// p(X) = h(X)^2 -> h. Requires all odd coefficients of p to be zero.
inline BinaryPolynomial poly_sqrt(const BinaryPolynomial& p) {
    BinaryPolynomial h;
    for (int i = 0; i <= p.degree(); ++i) {
        if (!p.coeff(i)) continue;
        if (i & 1) throw std::logic_error("poly_sqrt: not a square");
        h.set_coeff(i / 2, true);
    }
    return h;
}

/// Square-free decomposition f = prod a_i^i.
inline std::vector<std::pair<BinaryPolynomial, int>> square_free_decomposition(const BinaryPolynomial& f) {
    std::vector<std::pair<BinaryPolynomial, int>> out;
    if (f.degree() <= 0) return out;
    BinaryPolynomial c = gcd(f, derivative(f));
    BinaryPolynomial w = f / c;
    int i = 1;
    while (!w.is_one()) {
        const BinaryPolynomial y = gcd(w, c);
        const BinaryPolynomial z = w / y;
        if (!z.is_one()) out.emplace_back(z, i);
        ++i;
        w = y;
        c = c / y;
    }
    if (!c.is_one()) {
        for (auto& [p, k] : square_free_decomposition(poly_sqrt(c))) out.emplace_back(p, 2 * k);
    }
    return out;
}

/// Distinct-degree factorization of a square-free polynomial.
inline std::vector<std::pair<BinaryPolynomial, int>> distinct_degree(BinaryPolynomial f) {
    std::vector<std::pair<BinaryPolynomial, int>> out;
    BinaryPolynomial h = BinaryPolynomial::x() % f;
    for (int i = 1; f.degree() >= 2 * i; ++i) {
        h = square(h) % f;
        const BinaryPolynomial g = gcd(h + BinaryPolynomial::x(), f);
        if (!g.is_one()) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

/// Equal-degree splitting of a product of distinct irreducibles of degree d.
inline void equal_degree(const BinaryPolynomial& f, int d, std::mt19937_64& rng, std::vector<BinaryPolynomial>& out) {
    const int n = f.degree();
    if (n == d) {
        out.push_back(f);
        return;
    }
    for (;;) {
        BinaryPolynomial a;
        for (int i = 0; i < n; ++i)
            if (rng() & 1) a.set_coeff(i, true);
        if (a.degree() <= 0) continue;
        BinaryPolynomial t = a, s = a;
        for (int j = 1; j < d; ++j) {
            s = square(s) % f;
            t += s;
        }
        const BinaryPolynomial g = gcd(f, t);
        if (g.degree() > 0 && g.degree() < n) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

inline std::uint64_t irreducible_order(const BinaryPolynomial& p) {
    const int d = p.degree();
    if (d > 64) throw std::domain_error("order computation limited to factors of degree <= 64");
    if (p == BinaryPolynomial(0b11)) return 1;
    std::uint64_t n = nt::mersenne(d);
    for (std::uint64_t q : nt::prime_divisors(n)) {
        while (n % q == 0 && x_pow_mod(n / q, p).is_one()) n /= q;
    }
    return n;
}

}  // namespace detail

/// Full factorization into distinct irreducibles with multiplicities.
inline std::vector<IrreducibleFactor> factorize(const BinaryPolynomial& g) {
    if (g.is_zero()) throw std::domain_error("factorize: zero polynomial");
    std::vector<IrreducibleFactor> out;
    std::mt19937_64 rng(0x5eedULL);
    for (const auto& [sf, mult] : detail::square_free_decomposition(g)) {
        for (const auto& [part, d] : detail::distinct_degree(sf)) {
            std::vector<BinaryPolynomial> pieces;
            detail::equal_degree(part, d, rng, pieces);
            for (auto& p : pieces) out.push_back({std::move(p), d, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.poly < b.poly; });
    return out;
}

inline bool is_irreducible(const BinaryPolynomial& g) {
    if (g.degree() < 1) return false;
    if (g.degree() == 1) return true;
    if (!g.coeff(0)) return false;
    // Rabin: X^(2^n) = X mod g and gcd(X^(2^(n/p)) - X, g) = 1 for primes p | n.
    const int n = g.degree();
    if (!(x_pow_two_pow_mod(n, g) == BinaryPolynomial::x() % g)) return false;
    for (std::uint64_t p : nt::prime_divisors(static_cast<std::uint64_t>(n))) {
        const BinaryPolynomial h = x_pow_two_pow_mod(n / static_cast<int>(p), g) + BinaryPolynomial::x();
        if (!gcd(h, g).is_one()) return false;
    }
    return true;
}

class OrderError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Least n > 0 with g | X^n - 1.
inline std::uint64_t poly_order(const BinaryPolynomial& g) {
    if (g.is_zero()) throw OrderError("order of the zero polynomial is undefined");
    if (!g.coeff(0)) throw OrderError("order undefined when X divides g");
    if (g.is_one()) return 1;
    std::uint64_t ord = 1;
    int max_mult = 1;
    for (const auto& f : factorize(g)) {
        ord = nt::checked_lcm(ord, detail::irreducible_order(f.poly));
        max_mult = std::max(max_mult, f.multiplicity);
    }
    // ord(p^e) = ord(p) * 2^t with 2^t >= e.
    int t = 0;
    while ((1 << t) < max_mult) ++t;
    if (t > 0 && (t >= 64 || (ord >> (64 - t)) != 0)) throw std::overflow_error("order exceeds 64 bits");
    return ord << t;
}

inline bool is_primitive(const BinaryPolynomial& g) {
    const int d = g.degree();
    if (d < 1 || d > 64 || !is_irreducible(g)) return false;
    if (d == 1) return g == BinaryPolynomial(0b11);
    return detail::irreducible_order(g) == nt::mersenne(d);
}

inline FactorReport classify(const BinaryPolynomial& g) {
    if (g.is_zero()) throw std::domain_error("classify: zero polynomial");
    FactorReport r;
    r.factors = factorize(g);
    r.square_free = std::all_of(r.factors.begin(), r.factors.end(), [](const auto& f) { return f.multiplicity == 1; });
    r.irreducible = r.factors.size() == 1 && r.factors[0].multiplicity == 1;
    r.primitive = r.irreducible && is_primitive(g);
    return r;
}

/// Smallest primitive polynomial of degree m, comparing coefficient strings as integers.
inline BinaryPolynomial default_primitive_modulus(int m) {
    if (m < 1 || m > 62) throw std::domain_error("default modulus supported for 1 <= m <= 62");
    if (m == 1) return BinaryPolynomial(0b11);
    for (std::uint64_t p = (std::uint64_t{1} << m) | 1;; p += 2) {
        const BinaryPolynomial cand(p);
        if (is_primitive(cand)) return cand;
    }
}

/// Every primitive polynomial of degree m, ascending.
inline std::vector<BinaryPolynomial> all_primitive_polynomials(int m) {
    if (m < 1 || m > 24) throw std::domain_error("primitive enumeration supported for 1 <= m <= 24");
    std::vector<BinaryPolynomial> out;
    if (m == 1) return {BinaryPolynomial(0b11)};
    for (std::uint64_t p = (std::uint64_t{1} << m) | 1; p < (std::uint64_t{1} << (m + 1)); p += 2) {
        const BinaryPolynomial cand(p);
        if (is_primitive(cand)) out.push_back(cand);
    }
    return out;
}

}  // namespace bcr
