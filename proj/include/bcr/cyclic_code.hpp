#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"
#include "gf2_factor.hpp"
#include "gf2_poly.hpp"
#include "matrix.hpp"
#include "number_theory.hpp"

namespace bcr {

/// Syndromes are packed r-bit vectors (r <= 64). Factor k occupies bits
/// [offset_k, offset_k + d_k), bit offset_k + b being the coordinate on 2^b
/// in that factor's field.
using Syndrome = std::uint64_t;

class CodeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class FamilyKind { generic, bch, melas };

struct Family {
    FamilyKind kind = FamilyKind::generic;
    int e = 0;  // bch only
    int m = 0;  // bch and melas

    std::string name() const {
        switch (kind) {
            case FamilyKind::bch: return "bch(" + std::to_string(e) + "," + std::to_string(m) + ")";
            case FamilyKind::melas: return "melas(" + std::to_string(m) + ")";
            default: return "generic";
        }
    }
};

struct CodeFactor {
    RootedFactor rooted;
    /// Signed exponent t with root = alpha^t in the code's splitting context, when known.
    std::optional<std::int64_t> exponent;

    const BinaryPolynomial& poly() const noexcept { return rooted.factor; }
    int degree() const noexcept { return rooted.factor.degree(); }
};

/// Binary cyclic code of odd length n with square-free generator g.
class CyclicCode {
public:
    int n() const noexcept { return n_; }
    int r() const noexcept { return g_.degree(); }
    const BinaryPolynomial& generator() const noexcept { return g_; }
    const std::vector<CodeFactor>& factors() const noexcept { return factors_; }
    /// Splitting-field context the exponents refer to; null when unresolved.
    const FieldPtr& context() const noexcept { return ctx_; }
    const Family& family() const noexcept { return family_; }

    int offset(std::size_t k) const noexcept {
        int o = 0;
        for (std::size_t i = 0; i < k; ++i) o += factors_[i].degree();
        return o;
    }

    int min_factor_degree() const noexcept {
        int d = r();
        for (const auto& f : factors_) d = std::min(d, f.degree());
        return d;
    }

    /// Column j of the parity-check matrix: stacked root_k^j.
    Syndrome column(std::int64_t j) const {
        Syndrome s = 0;
        int off = 0;
        for (const auto& f : factors_) {
            s |= root_power(f, j).value << off;
            off += f.degree();
        }
        return s;
    }

    /// root_k^j for factor k and any signed j.
    static FieldElement root_power(const CodeFactor& f, std::int64_t j) {
        const auto& ctx = *f.rooted.field;
        const auto period = static_cast<std::int64_t>(nt::mersenne(ctx.m()));
        std::int64_t e = j % period;
        if (e < 0) e += period;
        return ctx.pow(f.rooted.root, static_cast<std::uint64_t>(e));
    }

private:
    int n_ = 0;
    BinaryPolynomial g_;
    std::vector<CodeFactor> factors_;
    FieldPtr ctx_;
    Family family_;

    friend class CyclicCodeBuilder;
};

class CyclicCodeBuilder {
public:
    static CyclicCode assemble(int n, std::vector<CodeFactor> factors, FieldPtr ctx, Family fam) {
        CyclicCode c;
        c.n_ = n;
        c.g_ = BinaryPolynomial::one();
        for (const auto& f : factors) c.g_ *= f.poly();
        c.factors_ = std::move(factors);
        c.ctx_ = std::move(ctx);
        c.family_ = fam;
        validate(c);
        return c;
    }

private:
    static void validate(const CyclicCode& c) {
        if (c.n_ < 1 || c.n_ % 2 == 0) throw CodeError("code length must be odd");
        if (c.r() < 1) throw CodeError("generator must have degree >= 1");
        if (c.r() > 64) throw CodeError("redundancy above 64 is not supported");
        if (!x_pow_mod(static_cast<std::uint64_t>(c.n_), c.g_).is_one()) throw CodeError("g does not divide X^n - 1");
        for (std::size_t i = 0; i < c.factors_.size(); ++i)
            for (std::size_t j = i + 1; j < c.factors_.size(); ++j)
                if (c.factors_[i].poly() == c.factors_[j].poly()) throw CodeError("generator has a repeated factor");
    }
};

namespace detail {

/// Smallest positive t with factor(alpha^t) = 0, searching over elements of order ord(factor).
inline std::optional<std::int64_t> find_root_exponent(const FieldContext& ctx, const BinaryPolynomial& factor) {
    const std::uint64_t full = ctx.alpha_order();
    const std::uint64_t ord = poly_order(factor);
    if (full % ord != 0) return std::nullopt;
    const std::uint64_t step = full / ord;
    for (std::uint64_t k = 1; k <= ord; ++k) {
        if (std::gcd(k, ord) != 1) continue;
        const std::uint64_t t = (k * step) % full;
        if (ctx.eval(factor, ctx.alpha_pow(static_cast<std::int64_t>(t))).is_zero()) return static_cast<std::int64_t>(t);
    }
    return std::nullopt;
}

}  // namespace detail

/// Generic constructor. Root exponents are resolved in the default primitive
/// splitting field when its degree is at most 20; factors whose degree equals
/// the splitting degree are then rooted there, others in their own quotient field.
inline CyclicCode make_cyclic_code(int n, const BinaryPolynomial& g, FieldPtr splitting = nullptr) {
    if (n < 1 || n % 2 == 0) throw CodeError("code length must be odd");
    if (g.degree() < 1) throw CodeError("generator must have degree >= 1");
    if (!x_pow_mod(static_cast<std::uint64_t>(n), g).is_one()) throw CodeError("g does not divide X^n - 1");
    const auto rep = classify(g);
    if (!rep.square_free) throw CodeError("generator has repeated factors");

    int split_deg = 1;
    for (const auto& f : rep.factors) split_deg = std::lcm(split_deg, f.degree);
    if (splitting && splitting->m() != split_deg) throw CodeError("splitting context has the wrong degree");
    if (!splitting && split_deg <= FieldContext::kMaxTableDegree) splitting = default_field(split_deg);

    std::vector<CodeFactor> factors;
    for (const auto& f : rep.factors) {
        CodeFactor cf{own_field_root(f.poly), std::nullopt};
        if (splitting) {
            cf.exponent = detail::find_root_exponent(*splitting, f.poly);
            if (cf.exponent && f.degree == split_deg)
                cf.rooted = {f.poly, splitting, splitting->alpha_pow(*cf.exponent)};
        }
        factors.push_back(std::move(cf));
    }
    return CyclicCodeBuilder::assemble(n, std::move(factors), splitting, {});
}

inline FieldPtr primitive_context(int m, const std::optional<BinaryPolynomial>& modulus) {
    if (!modulus) return default_field(m);
    if (modulus->degree() != m) throw CodeError("modulus degree must equal m");
    auto ctx = make_field(*modulus);
    if (!ctx->is_primitive()) throw CodeError("modulus " + to_hex(*modulus) + " is not primitive");
    return ctx;
}

/// 2^ceil(m/2) > 2e - 1.
inline bool long_bch_condition(int e, int m) {
    const int half = (m + 1) / 2;
    if (half >= 62) return true;
    return (std::int64_t{1} << half) > 2 * std::int64_t{e} - 1;
}

/// Primitive BCH code with roots alpha, alpha^3, ..., alpha^{2e-1}.
inline CyclicCode make_bch(int e, int m, const std::optional<BinaryPolynomial>& modulus = std::nullopt) {
    if (e < 1) throw CodeError("BCH requires e >= 1");
    if (m < 2 || m > 30) throw CodeError("BCH requires 2 <= m <= 30");
    if (!long_bch_condition(e, m))
        throw CodeError("BCH(" + std::to_string(e) + "," + std::to_string(m) + ") violates the long-code condition 2^ceil(m/2) > 2e-1");
    auto ctx = primitive_context(m, modulus);
    std::vector<CodeFactor> factors;
    for (int i = 1; i <= e; ++i) {
        const std::int64_t t = 2 * i - 1;
        auto mp = minimal_polynomial(*ctx, t);
        if (mp.degree() != m) throw std::logic_error("BCH minimal polynomial has degree below m");
        for (const auto& f : factors)
            if (f.poly() == mp) throw std::logic_error("BCH minimal polynomials are not pairwise coprime");
        factors.push_back({{mp, ctx, ctx->alpha_pow(t)}, t});
    }
    const int n = static_cast<int>(nt::mersenne(m));
    return CyclicCodeBuilder::assemble(n, std::move(factors), ctx, {FamilyKind::bch, e, m});
}

/// Melas code with roots alpha and alpha^{-1}.
inline CyclicCode make_melas(int m, const std::optional<BinaryPolynomial>& modulus = std::nullopt) {
    if (m < 3 || m > 30) throw CodeError("Melas requires 3 <= m <= 30");
    auto ctx = primitive_context(m, modulus);
    const BinaryPolynomial m1 = minimal_polynomial(*ctx, 1);
    const BinaryPolynomial rev = m1.reciprocal();
    if (rev == m1) throw CodeError("minimal polynomial of alpha is self-reciprocal; Melas generator has repeated roots");
    std::vector<CodeFactor> factors{{{m1, ctx, ctx->alpha()}, 1}, {{rev, ctx, ctx->alpha_pow(-1)}, -1}};
    const int n = static_cast<int>(nt::mersenne(m));
    return CyclicCodeBuilder::assemble(n, std::move(factors), ctx, {FamilyKind::melas, 0, m});
}

/// (1 + X + X^2) f(X) with f primitive of even degree m >= 4, length 2^m - 1.
inline CyclicCode make_burst_correcting_product(const BinaryPolynomial& f) {
    const int m = f.degree();
    if (m < 4 || m % 2 != 0) throw CodeError("f must have even degree >= 4");
    if (!is_primitive(f)) throw CodeError("f must be primitive");
    return make_cyclic_code(static_cast<int>(nt::mersenne(m)), BinaryPolynomial(0b111) * f);
}

/// Stacked field evaluation root_k^i f(root_k).
inline Syndrome lc_eval_field(const CyclicCode& code, std::int64_t i, const BinaryPolynomial& f) {
    Syndrome s = 0;
    int off = 0;
    for (const auto& fac : code.factors()) {
        const auto& ctx = *fac.rooted.field;
        const FieldElement v = ctx.mul(CyclicCode::root_power(fac, i), ctx.eval(f, fac.rooted.root));
        s |= v.value << off;
        off += fac.degree();
    }
    return s;
}

/// Sum of columns h_{(i+j) mod n} over j in supp(f).
inline Syndrome lc_eval_columns(const CyclicCode& code, std::int64_t i, const BinaryPolynomial& f) {
    Syndrome s = 0;
    for (int j = 0; j <= f.degree(); ++j)
        if (f.coeff(j)) s ^= code.column(i + j);
    return s;
}

/// Value of the window combination identified with (i, f).
inline Syndrome lc_eval(const CyclicCode& code, std::int64_t i, const BinaryPolynomial& f) {
    const Syndrome s = lc_eval_field(code, i, f);
    assert(f.degree() > 4096 || s == lc_eval_columns(code, i, f));
    return s;
}

inline BinaryMatrix parity_check_matrix(const CyclicCode& code) {
    std::vector<std::uint64_t> cols(static_cast<std::size_t>(code.n()));
    for (int j = 0; j < code.n(); ++j) cols[j] = code.column(j);
    return BinaryMatrix::from_columns(code.r(), cols);
}

/// Codeword u(X) g(X) for deg u < n - r.
inline BinaryPolynomial encode(const CyclicCode& code, const BinaryPolynomial& u) {
    if (u.degree() >= code.n() - code.r()) throw CodeError("message polynomial too long");
    return u * code.generator();
}

}  // namespace bcr
