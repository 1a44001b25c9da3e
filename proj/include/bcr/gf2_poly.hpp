#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bcr {

/// Degree of the zero polynomial. Compares below every real degree.
inline constexpr int kNegInf = std::numeric_limits<int>::min();

/// Polynomial over GF(2). Bit i of the limb array is the coefficient of X^i.
///
/// The representation is canonical: the highest limb is never zero, so the
/// zero polynomial has no limbs and equality is limb equality.
class BinaryPolynomial {
public:
    using Limb = std::uint64_t;
    static constexpr int kLimbBits = 64;

    BinaryPolynomial() = default;
    explicit BinaryPolynomial(std::uint64_t mask) {
        if (mask) limbs_.push_back(mask);
    }

    static BinaryPolynomial monomial(int k) {
        BinaryPolynomial p;
        p.set_coeff(k, true);
        return p;
    }
    static BinaryPolynomial one() { return BinaryPolynomial(1); }
    static BinaryPolynomial x() { return BinaryPolynomial(2); }

    /// c_0..c_{len-1} from a bit list.
    static BinaryPolynomial from_coeffs(std::span<const int> coeffs) {
        BinaryPolynomial p;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] & 1) p.set_coeff(static_cast<int>(i), true);
        return p;
    }

    int degree() const noexcept {
        if (limbs_.empty()) return kNegInf;
        return static_cast<int>(limbs_.size() - 1) * kLimbBits + (std::bit_width(limbs_.back()) - 1);
    }
    bool is_zero() const noexcept { return limbs_.empty(); }
    bool is_one() const noexcept { return limbs_.size() == 1 && limbs_[0] == 1; }

    bool coeff(int i) const noexcept {
        if (i < 0) return false;
        const auto limb = static_cast<std::size_t>(i / kLimbBits);
        if (limb >= limbs_.size()) return false;
        return (limbs_[limb] >> (i % kLimbBits)) & 1U;
    }

    void set_coeff(int i, bool v) {
        if (i < 0) throw std::out_of_range("negative coefficient index");
        const auto limb = static_cast<std::size_t>(i / kLimbBits);
        const Limb bit = Limb{1} << (i % kLimbBits);
        if (v) {
            if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
            limbs_[limb] |= bit;
        } else if (limb < limbs_.size()) {
            limbs_[limb] &= ~bit;
            trim();
        }
    }

    void flip_coeff(int i) { set_coeff(i, !coeff(i)); }

    std::span<const Limb> limbs() const noexcept { return limbs_; }

    bool fits_u64() const noexcept { return limbs_.size() <= 1; }
    std::uint64_t to_u64() const {
        if (!fits_u64()) throw std::overflow_error("polynomial does not fit in 64 bits");
        return limbs_.empty() ? 0 : limbs_[0];
    }

    /// Number of nonzero coefficients.
    int weight() const noexcept {
        int w = 0;
        for (Limb l : limbs_) w += std::popcount(l);
        return w;
    }

    /// Exponent of the lowest nonzero coefficient; kNegInf for zero.
    int lowest_term() const noexcept {
        for (std::size_t i = 0; i < limbs_.size(); ++i)
            if (limbs_[i]) return static_cast<int>(i) * kLimbBits + std::countr_zero(limbs_[i]);
        return kNegInf;
    }

    BinaryPolynomial& operator+=(const BinaryPolynomial& o) {
        if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        for (std::size_t i = 0; i < o.limbs_.size(); ++i) limbs_[i] ^= o.limbs_[i];
        trim();
        return *this;
    }
    BinaryPolynomial& operator-=(const BinaryPolynomial& o) { return *this += o; }

    BinaryPolynomial shifted_left(int k) const {
        if (is_zero() || k == 0) return *this;
        if (k < 0) return shifted_right(-k);
        BinaryPolynomial out;
        const int limb_shift = k / kLimbBits, bit_shift = k % kLimbBits;
        out.limbs_.assign(limbs_.size() + static_cast<std::size_t>(limb_shift) + 1, 0);
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            out.limbs_[i + limb_shift] ^= limbs_[i] << bit_shift;
            if (bit_shift) out.limbs_[i + limb_shift + 1] ^= limbs_[i] >> (kLimbBits - bit_shift);
        }
        out.trim();
        return out;
    }

    BinaryPolynomial shifted_right(int k) const {
        if (is_zero() || k == 0) return *this;
        if (k < 0) return shifted_left(-k);
        const int limb_shift = k / kLimbBits, bit_shift = k % kLimbBits;
        if (static_cast<std::size_t>(limb_shift) >= limbs_.size()) return {};
        BinaryPolynomial out;
        out.limbs_.assign(limbs_.size() - limb_shift, 0);
        for (std::size_t i = 0; i < out.limbs_.size(); ++i) {
            out.limbs_[i] = limbs_[i + limb_shift] >> bit_shift;
            if (bit_shift && i + limb_shift + 1 < limbs_.size())
                out.limbs_[i] |= limbs_[i + limb_shift + 1] << (kLimbBits - bit_shift);
        }
        out.trim();
        return out;
    }

    /// Coefficients of degree < k.
    BinaryPolynomial truncated(int k) const {
        if (k <= 0) return {};
        BinaryPolynomial out = *this;
        const auto keep = static_cast<std::size_t>((k + kLimbBits - 1) / kLimbBits);
        if (out.limbs_.size() > keep) out.limbs_.resize(keep);
        if (k % kLimbBits && out.limbs_.size() == keep) out.limbs_.back() &= (Limb{1} << (k % kLimbBits)) - 1;
        out.trim();
        return out;
    }

    /// X^deg * p(1/X).
    BinaryPolynomial reciprocal() const {
        BinaryPolynomial out;
        const int d = degree();
        for (int i = 0; i <= d; ++i)
            if (coeff(i)) out.set_coeff(d - i, true);
        return out;
    }

    /// Evaluate at X = 1 (parity of the weight).
    bool eval_at_one() const noexcept { return weight() & 1; }

    friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;

    /// Total order: by degree, then as an integer bit string.
    friend bool operator<(const BinaryPolynomial& a, const BinaryPolynomial& b) noexcept {
        if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
        for (std::size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
        return false;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<Limb> limbs_;

    friend BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b);
};

inline BinaryPolynomial operator+(BinaryPolynomial a, const BinaryPolynomial& b) { return a += b; }
inline BinaryPolynomial operator-(BinaryPolynomial a, const BinaryPolynomial& b) { return a += b; }

namespace detail {

/// Carry-less 64x64 -> 128 product, returned as (lo, hi).
constexpr std::pair<std::uint64_t, std::uint64_t> clmul64(std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t lo = 0, hi = 0;
    while (b) {
        const int i = std::countr_zero(b);
        lo ^= a << i;
        if (i) hi ^= a >> (64 - i);
        b &= b - 1;
    }
    return {lo, hi};
}

}  // namespace detail

inline BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) {
    BinaryPolynomial out;
    if (a.is_zero() || b.is_zero()) return out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i)
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            const auto [lo, hi] = detail::clmul64(a.limbs_[i], b.limbs_[j]);
            out.limbs_[i + j] ^= lo;
            out.limbs_[i + j + 1] ^= hi;
        }
    out.trim();
    return out;
}

inline BinaryPolynomial& operator*=(BinaryPolynomial& a, const BinaryPolynomial& b) { return a = a * b; }

/// Raised on division by the zero polynomial.
class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by the zero polynomial") {}
};

struct DivMod {
    BinaryPolynomial quotient;
    BinaryPolynomial remainder;
};

inline DivMod divmod(const BinaryPolynomial& a, const BinaryPolynomial& b) {
    if (b.is_zero()) throw DivisionByZero();
    const int db = b.degree();
    DivMod out{{}, a};
    for (int d = out.remainder.degree(); d >= db; d = out.remainder.degree()) {
        out.quotient.set_coeff(d - db, true);
        out.remainder += b.shifted_left(d - db);
    }
    return out;
}

inline BinaryPolynomial operator%(const BinaryPolynomial& a, const BinaryPolynomial& b) { return divmod(a, b).remainder; }
inline BinaryPolynomial operator/(const BinaryPolynomial& a, const BinaryPolynomial& b) { return divmod(a, b).quotient; }

/// gcd(a, 0) = a.
inline BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b) {
    while (!b.is_zero()) {
        a = a % b;
        std::swap(a, b);
    }
    return a;
}

inline BinaryPolynomial mulmod(const BinaryPolynomial& a, const BinaryPolynomial& b, const BinaryPolynomial& m) {
    return (a * b) % m;
}

inline BinaryPolynomial square(const BinaryPolynomial& a) {
    BinaryPolynomial out;
    const int d = a.degree();
    for (int i = 0; i <= d; ++i)
        if (a.coeff(i)) out.set_coeff(2 * i, true);
    return out;
}

/// base^e mod m.
inline BinaryPolynomial powmod(BinaryPolynomial base, std::uint64_t e, const BinaryPolynomial& m) {
    BinaryPolynomial result = BinaryPolynomial::one() % m;
    base = base % m;
    while (e) {
        if (e & 1) result = mulmod(result, base, m);
        e >>= 1;
        if (e) base = square(base) % m;
    }
    return result;
}

/// X^e mod m.
inline BinaryPolynomial x_pow_mod(std::uint64_t e, const BinaryPolynomial& m) { return powmod(BinaryPolynomial::x(), e, m); }

/// X^(2^k) mod m by k repeated squarings.
inline BinaryPolynomial x_pow_two_pow_mod(int k, const BinaryPolynomial& m) {
    BinaryPolynomial h = BinaryPolynomial::x() % m;
    for (int i = 0; i < k; ++i) h = square(h) % m;
    return h;
}

/// Formal derivative.
inline BinaryPolynomial derivative(const BinaryPolynomial& a) {
    BinaryPolynomial out;
    const int d = a.degree();
    for (int i = 1; i <= d; i += 2)
        if (a.coeff(i)) out.set_coeff(i - 1, true);
    return out;
}

/// X^n - 1.
inline BinaryPolynomial x_n_minus_one(int n) {
    BinaryPolynomial p = BinaryPolynomial::monomial(n);
    p.flip_coeff(0);
    return p;
}

// ---------------------------------------------------------------------------
// Text forms: `0xB`, `x^3+x+1`, `[1,1,0,1]`.

inline std::string to_hex(const BinaryPolynomial& p) {
    static constexpr char kDigits[] = "0123456789ABCDEF";
    if (p.is_zero()) return "0x0";
    std::string out;
    const int d = p.degree();
    for (int nib = d / 4; nib >= 0; --nib) {
        int v = 0;
        for (int b = 3; b >= 0; --b) v = (v << 1) | (p.coeff(nib * 4 + b) ? 1 : 0);
        out.push_back(kDigits[v]);
    }
    return "0x" + out;
}

inline std::string to_human(const BinaryPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        if (!p.coeff(i)) continue;
        if (!out.empty()) out += "+";
        if (i == 0)
            out += "1";
        else if (i == 1)
            out += "x";
        else
            out += "x^" + std::to_string(i);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const BinaryPolynomial& p) { return os << to_human(p); }

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

inline BinaryPolynomial parse_hex(std::string_view digits) {
    if (digits.empty()) throw ParseError("empty hex polynomial");
    BinaryPolynomial p;
    int bit = 0;
    for (std::size_t k = digits.size(); k-- > 0; bit += 4) {
        const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(digits[k])));
        int v;
        if (c >= '0' && c <= '9')
            v = c - '0';
        else if (c >= 'a' && c <= 'f')
            v = c - 'a' + 10;
        else
            throw ParseError("bad hex digit in polynomial: " + std::string(digits));
        for (int b = 0; b < 4; ++b)
            if ((v >> b) & 1) p.set_coeff(bit + b, true);
    }
    return p;
}

inline BinaryPolynomial parse_list(std::string_view body) {
    BinaryPolynomial p;
    int idx = 0;
    std::size_t pos = 0;
    if (body.empty()) return p;
    while (pos <= body.size()) {
        const std::size_t comma = std::min(body.find(',', pos), body.size());
        const std::string_view tok = body.substr(pos, comma - pos);
        if (tok == "1")
            p.set_coeff(idx, true);
        else if (tok != "0")
            throw ParseError("coefficient list entries must be 0 or 1");
        ++idx;
        pos = comma + 1;
    }
    return p;
}

inline BinaryPolynomial parse_human(std::string_view s) {
    BinaryPolynomial p;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t plus = std::min(s.find('+', pos), s.size());
        std::string_view term = s.substr(pos, plus - pos);
        pos = plus + 1;
        if (term.empty()) throw ParseError("empty term in polynomial");
        int exp;
        if (term == "1") {
            exp = 0;
        } else if (term == "0") {
            continue;
        } else if (term[0] == 'x' || term[0] == 'X') {
            if (term.size() == 1) {
                exp = 1;
            } else if (term[1] == '^' && term.size() > 2) {
                exp = 0;
                for (char c : term.substr(2)) {
                    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad exponent in term");
                    exp = exp * 10 + (c - '0');
                    if (exp > (1 << 24)) throw ParseError("exponent too large");
                }
            } else {
                throw ParseError("bad term in polynomial");
            }
        } else {
            throw ParseError("bad term in polynomial");
        }
        p.flip_coeff(exp);
    }
    return p;
}

}  // namespace detail

/// Accepts `0x`-prefixed hex (bit i = coefficient of X^i), `x^3+x+1`, or `[1,1,0,1]`.
inline BinaryPolynomial parse_polynomial(std::string_view text) {
    const std::string s = detail::strip_spaces(text);
    if (s.empty()) throw ParseError("empty polynomial");
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) return detail::parse_hex(std::string_view(s).substr(2));
    if (s.front() == '[') {
        if (s.back() != ']') throw ParseError("unterminated coefficient list");
        return detail::parse_list(std::string_view(s).substr(1, s.size() - 2));
    }
    return detail::parse_human(s);
}

}  // namespace bcr
