#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "gf2_factor.hpp"
#include "gf2_poly.hpp"

namespace bcr {

/// Element of GF(2^m) in the polynomial basis of its context: bit j is the
/// coordinate on alpha^j.
struct FieldElement {
    std::uint64_t value = 0;

    bool is_zero() const noexcept { return value == 0; }
    friend bool operator==(const FieldElement&, const FieldElement&) = default;
    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// GF(2)[X]/(modulus) for an irreducible modulus of degree m <= 63.
///
/// alpha is the residue class of X. Log/antilog tables are built when alpha is
/// primitive and m <= 20; everything else falls back to shift-and-add.
class FieldContext {
public:
    static constexpr int kMaxDegree = 63;
    static constexpr int kMaxTableDegree = 20;

    explicit FieldContext(BinaryPolynomial modulus) : modulus_(std::move(modulus)) {
        m_ = modulus_.degree();
        if (m_ < 1 || m_ > kMaxDegree) throw std::domain_error("field degree must be in [1, 63]");
        if (!is_irreducible(modulus_)) throw std::domain_error("field modulus " + to_hex(modulus_) + " is not irreducible");
        mod_mask_ = modulus_.to_u64();
        alpha_ = reduce_x();
        alpha_order_ = poly_order(modulus_);
        primitive_ = alpha_order_ == nt::mersenne(m_);
        trace_mask_ = compute_trace_mask();
        if (primitive_ && m_ <= kMaxTableDegree) build_tables();
    }

    int m() const noexcept { return m_; }
    const BinaryPolynomial& modulus() const noexcept { return modulus_; }
    bool is_primitive() const noexcept { return primitive_; }
    FieldElement alpha() const noexcept { return alpha_; }
    /// Multiplicative order of alpha.
    std::uint64_t alpha_order() const noexcept { return alpha_order_; }
    std::uint64_t size() const noexcept { return std::uint64_t{1} << m_; }
    bool has_tables() const noexcept { return !exp_.empty(); }

    FieldElement zero() const noexcept { return {}; }
    FieldElement one() const noexcept { return {1}; }

    FieldElement element(std::uint64_t bits) const {
        if (m_ < 64 && (bits >> m_) != 0) throw std::out_of_range("field element out of range");
        return {bits};
    }
    FieldElement from_polynomial(const BinaryPolynomial& p) const { return {(p % modulus_).to_u64()}; }
    BinaryPolynomial to_polynomial(FieldElement x) const { return BinaryPolynomial(x.value); }

    static FieldElement add(FieldElement a, FieldElement b) noexcept { return {a.value ^ b.value}; }

    FieldElement mul(FieldElement a, FieldElement b) const noexcept {
        if (a.is_zero() || b.is_zero()) return {};
        if (has_tables()) {
            std::uint64_t k = log_[a.value] + log_[b.value];
            if (k >= alpha_order_) k -= alpha_order_;
            return {exp_[k]};
        }
        std::uint64_t r = 0, x = a.value, y = b.value;
        const std::uint64_t top = std::uint64_t{1} << (m_ - 1);
        while (y) {
            if (y & 1) r ^= x;
            y >>= 1;
            const bool carry = x & top;
            x <<= 1;
            if (carry) x ^= mod_mask_;
        }
        return {r};
    }

    FieldElement square(FieldElement a) const noexcept { return mul(a, a); }

    FieldElement pow(FieldElement a, std::uint64_t e) const noexcept {
        if (a.is_zero()) return e == 0 ? one() : zero();
        if (has_tables()) return {exp_[nt::mulmod(log_[a.value], e % alpha_order_, alpha_order_)]};
        FieldElement r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    FieldElement inv(FieldElement a) const {
        if (a.is_zero()) throw std::domain_error("inverse of zero field element");
        return pow(a, nt::mersenne(m_) - 1);
    }

    /// alpha^k for any signed k.
    FieldElement alpha_pow(std::int64_t k) const noexcept {
        const auto n = static_cast<std::int64_t>(alpha_order_);
        std::int64_t r = k % n;
        if (r < 0) r += n;
        if (has_tables()) return {exp_[static_cast<std::uint64_t>(r)]};
        return pow(alpha_, static_cast<std::uint64_t>(r));
    }

    /// Discrete log base alpha; requires tables.
    std::uint64_t log(FieldElement a) const {
        if (a.is_zero()) throw std::domain_error("log of zero");
        if (!has_tables()) throw std::logic_error("discrete log needs a primitive context with m <= 20");
        return log_[a.value];
    }

    /// Absolute trace to GF(2).
    int trace(FieldElement a) const noexcept { return std::popcount(a.value & trace_mask_) & 1; }
    std::uint64_t trace_mask() const noexcept { return trace_mask_; }

    /// Evaluate a binary polynomial at x.
    FieldElement eval(const BinaryPolynomial& p, FieldElement x) const noexcept {
        FieldElement acc{};
        for (int i = p.degree(); i >= 0; --i) {
            acc = mul(acc, x);
            if (p.coeff(i)) acc.value ^= 1;
        }
        return acc;
    }

    friend bool operator==(const FieldContext& a, const FieldContext& b) noexcept { return a.modulus_ == b.modulus_; }

private:
    FieldElement reduce_x() const { return {(BinaryPolynomial::x() % modulus_).to_u64()}; }

    std::uint64_t compute_trace_mask() const {
        std::uint64_t mask = 0;
        for (int j = 0; j < m_; ++j) {
            FieldElement y{std::uint64_t{1} << j}, s = y;
            for (int k = 1; k < m_; ++k) {
                y = mul(y, y);
                s = add(s, y);
            }
            if (s.value & 1) mask |= std::uint64_t{1} << j;
        }
        return mask;
    }

    void build_tables() {
        const std::uint64_t n = alpha_order_;
        std::vector<std::uint32_t> exp(n), log(size(), 0);
        FieldElement x = one();
        for (std::uint64_t k = 0; k < n; ++k) {
            exp[k] = static_cast<std::uint32_t>(x.value);
            log[x.value] = static_cast<std::uint32_t>(k);
            x = mul(x, alpha_);
        }
        exp_ = std::move(exp);
        log_ = std::move(log);
    }

    BinaryPolynomial modulus_;
    int m_ = 0;
    std::uint64_t mod_mask_ = 0;
    FieldElement alpha_{};
    std::uint64_t alpha_order_ = 1;
    bool primitive_ = false;
    std::uint64_t trace_mask_ = 0;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

inline FieldPtr make_field(const BinaryPolynomial& modulus) { return std::make_shared<const FieldContext>(modulus); }

/// Shared context over the default primitive modulus of degree m.
inline FieldPtr default_field(int m) {
    static std::mutex mu;
    static std::map<int, FieldPtr> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[m];
    if (!slot) slot = make_field(default_primitive_modulus(m));
    return slot;
}

/// Exponents {t * 2^j mod ord(alpha)}, ascending.
inline std::vector<std::uint64_t> cyclotomic_coset(const FieldContext& ctx, std::int64_t t) {
    const auto n = static_cast<std::int64_t>(ctx.alpha_order());
    std::int64_t r = t % n;
    if (r < 0) r += n;
    std::set<std::uint64_t> seen;
    auto e = static_cast<std::uint64_t>(r);
    while (seen.insert(e).second) e = nt::mulmod(e, 2, static_cast<std::uint64_t>(n));
    return {seen.begin(), seen.end()};
}

/// Minimal polynomial of alpha^t over GF(2). Negative t means alpha^{-|t|}.
/// t = 0 (root 1) is rejected unless allow_root_one is set.
inline BinaryPolynomial minimal_polynomial(const FieldContext& ctx, std::int64_t t, bool allow_root_one = false) {
    const auto n = static_cast<std::int64_t>(ctx.alpha_order());
    if (t % n == 0) {
        if (!allow_root_one) throw std::domain_error("minimal_polynomial: exponent is 0 mod the order of alpha (root 1)");
        return BinaryPolynomial(0b11);
    }
    std::vector<FieldElement> poly{ctx.one()};
    for (std::uint64_t e : cyclotomic_coset(ctx, t)) {
        const FieldElement root = ctx.alpha_pow(static_cast<std::int64_t>(e));
        std::vector<FieldElement> next(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = FieldContext::add(next[i + 1], poly[i]);
            next[i] = FieldContext::add(next[i], ctx.mul(poly[i], root));
        }
        poly = std::move(next);
    }
    BinaryPolynomial out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (poly[i].value > 1) throw std::logic_error("minimal polynomial has a coefficient outside GF(2)");
        if (poly[i].value) out.set_coeff(static_cast<int>(i), true);
    }
    return out;
}

inline int field_trace(const FieldContext& ctx, FieldElement x) { return ctx.trace(x); }

}  // namespace bcr

namespace bcr {

/// An irreducible factor together with a chosen root in some field context.
/// The root's context has degree equal to the factor's degree.
struct RootedFactor {
    BinaryPolynomial factor;
    FieldPtr field;
    FieldElement root;
};

/// Root = residue class of X in GF(2)[X]/(factor).
inline RootedFactor own_field_root(const BinaryPolynomial& factor) {
    auto f = make_field(factor);
    const FieldElement a = f->alpha();
    return {factor, std::move(f), a};
}

}  // namespace bcr
