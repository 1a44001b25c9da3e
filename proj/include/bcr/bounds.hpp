#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclic_code.hpp"
#include "gf2_factor.hpp"
#include "number_theory.hpp"

namespace bcr {

using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// Counting bounds as pure integer formulas over F_q.

namespace detail {

inline u128 checked_pow(std::uint64_t q, int k) {
    if (k < 0) throw std::invalid_argument("negative exponent");
    u128 v = 1;
    for (int i = 0; i < k; ++i) {
        if (v > (~u128{0}) / q) throw std::overflow_error("q^k exceeds 128 bits");
        v *= q;
    }
    return v;
}

}  // namespace detail

/// Smallest n allowed for a cyclic-burst b-covering [n, n-r]_q code (b >= 2).
inline u128 min_length_cyclic(std::uint64_t q, int r, int b) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    if (b < 2 || b > r + 1) throw std::invalid_argument("formula needs 2 <= b <= r + 1");
    return (detail::checked_pow(q, r - b + 1) - 1) / (q - 1) + 1;
}

/// Smallest n allowed with non-cyclic bursts (b >= 2); equality means perfect.
inline u128 min_length_linear(std::uint64_t q, int r, int b) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    if (b < 2 || b > r + 1) throw std::invalid_argument("formula needs 2 <= b <= r + 1");
    return (detail::checked_pow(q, r - b + 1) - 1) / (q - 1) + static_cast<u128>(b - 1);
}

/// Binary cyclic case with b >= 3, r >= 2.
inline u128 min_length_cyclic_binary_improved(int r, int b) {
    if (b < 3 || r < 2 || b > r + 1) throw std::invalid_argument("formula needs b >= 3, r >= 2, b <= r + 1");
    return detail::checked_pow(2, r - b + 1) + 1;
}

/// Smallest b >= lo with min_len(b) <= n, by scanning upward (min_len is nonincreasing in b).
template <class MinLen>
inline int least_b_for_length(std::uint64_t n, int r, int lo, MinLen&& min_len) {
    for (int b = lo; b <= r; ++b)
        if (min_len(b) <= n) return b;
    return r + 1;
}

// ---------------------------------------------------------------------------
// Report.

enum class BoundKind { lower, upper, exact };

inline std::string to_string(BoundKind k) {
    switch (k) {
        case BoundKind::lower: return "lower";
        case BoundKind::upper: return "upper";
        default: return "exact";
    }
}

struct BoundEntry {
    std::string name;
    BoundKind kind = BoundKind::lower;
    /// Real value before rounding.
    double raw = 0;
    /// Integer consequence: ceil for lower, floor for upper.
    int value = 0;
    bool applicable = false;
    std::string note;
};

struct BoundsReport {
    int n = 0;
    int r = 0;
    std::vector<BoundEntry> entries;
    std::optional<int> radius;

    const BoundEntry* find(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }

    int best_lower() const {
        int v = 1;
        for (const auto& e : entries)
            if (e.applicable && e.kind != BoundKind::upper) v = std::max(v, e.value);
        return v;
    }

    int best_upper() const {
        int v = r;
        for (const auto& e : entries)
            if (e.applicable && e.kind != BoundKind::lower) v = std::min(v, e.value);
        return v;
    }

    /// Names of applicable bounds contradicted by the radius, or by each other.
    std::vector<std::string> violations() const {
        std::vector<std::string> out;
        if (best_lower() > best_upper()) out.push_back("lower bounds exceed upper bounds");
        if (!radius) return out;
        for (const auto& e : entries) {
            if (!e.applicable) continue;
            const bool bad = (e.kind == BoundKind::lower && *radius < e.value) || (e.kind == BoundKind::upper && *radius > e.value) ||
                             (e.kind == BoundKind::exact && *radius != e.value);
            if (bad) out.push_back(e.name);
        }
        return out;
    }

    bool consistent() const { return violations().empty(); }
};

// ---------------------------------------------------------------------------
// Exact floors of the real-valued upper bounds.

/// floor(m(e - 1/2) + log2(e - 1) + 1), e >= 2.
inline int bch_upper_floor(int e, int m) {
    if (e < 2) throw std::invalid_argument("BCH upper bound needs e >= 2");
    // k <= value  <=>  2^(2k - 2me + m - 2) <= (e-1)^2, vacuous when the exponent is negative.
    const u128 sq = static_cast<u128>(e - 1) * static_cast<u128>(e - 1);
    int k = m * e + 64;
    for (;; --k) {
        const int t = 2 * k - 2 * m * e + m - 2;
        if (t < 0 || (t < 127 && (u128{1} << t) <= sq)) return k;
    }
}

inline double bch_upper_raw(int e, int m) { return m * (e - 0.5) + std::log2(static_cast<double>(e - 1)) + 1; }

inline int melas_upper_floor(int m) { return (3 * m) / 2 + 1; }
inline double melas_upper_raw(int m) { return 1.5 * m + 1; }

inline int bch_lower(int e, int m) { return (e - 1) * m + 2; }
inline int melas_lower(int m) { return m + 2; }

/// min over nonempty J of ceil(log2 lcm(ord_j) - sum d_j / 2), and its real minimum.
struct OrderDegreeMin {
    int ceil_min = 0;
    double raw_min = 0;
};

inline OrderDegreeMin order_degree_minimum(const std::vector<std::uint64_t>& orders, const std::vector<int>& degrees) {
    const std::size_t e = orders.size();
    if (e == 0 || e > 16) throw std::invalid_argument("subset minimization supports 1..16 factors");
    OrderDegreeMin out{std::numeric_limits<int>::max(), std::numeric_limits<double>::infinity()};
    for (std::uint32_t mask = 1; mask < (1u << e); ++mask) {
        std::uint64_t l = 1;
        int s = 0;
        for (std::size_t j = 0; j < e; ++j)
            if (mask >> j & 1) {
                l = nt::checked_lcm(l, orders[j]);
                s += degrees[j];
            }
        // ceil(log2 l - s/2) = least k with 2^(2k + s) >= l^2.
        const u128 l2 = static_cast<u128>(l) * l;
        int k = -s;  // 2^(2k+s) = 2^(-s) < 1 <= l^2 unless l = 1
        while (true) {
            const int t = 2 * k + s;
            if (t >= 0 && (t >= 128 || (u128{1} << t) >= l2)) break;
            ++k;
        }
        out.ceil_min = std::min(out.ceil_min, k);
        out.raw_min = std::min(out.raw_min, std::log2(static_cast<double>(l)) - s / 2.0);
    }
    return out;
}

/// Every bound applicable to the code; `radius` (if given) is checked against them.
inline BoundsReport bounds_report(const CyclicCode& code, std::optional<int> radius = std::nullopt) {
    BoundsReport rep;
    const int n = code.n(), r = code.r();
    rep.n = n;
    rep.r = r;
    rep.radius = radius;
    const auto un = static_cast<std::uint64_t>(n);

    // Counting bound, cyclic bursts. b >= 2 is forced once n < 2^r - 1.
    {
        BoundEntry e{"counting-cyclic", BoundKind::lower};
        e.applicable = r >= 64 || un < nt::mersenne(r);
        e.value = least_b_for_length(un, r, 2, [&](int b) { return min_length_cyclic(2, r, b); });
        e.raw = r + 1 - std::log2(static_cast<double>(n));
        e.note = "needs b >= 2; holds when n < 2^r - 1";
        rep.entries.push_back(e);
    }
    // Improved binary bound. b >= 3 is forced once 2n < 2^r - 1.
    {
        BoundEntry e{"counting-cyclic-improved", BoundKind::lower};
        e.applicable = r >= 2 && (r >= 64 || 2 * un < nt::mersenne(r));
        if (r >= 2) e.value = least_b_for_length(un, r, 3, [&](int b) { return min_length_cyclic_binary_improved(r, b); });
        e.raw = n > 1 ? r + 1 - std::log2(static_cast<double>(n - 1)) : r;
        e.note = "needs b >= 3 and r >= 2; holds when 2n < 2^r - 1";
        rep.entries.push_back(e);
    }

    const int dmin = code.min_factor_degree();
    rep.entries.push_back({"basic-lower", BoundKind::lower, double(r - dmin + 1), r - dmin + 1, true, "r - min d_i + 1"});
    rep.entries.push_back({"basic-upper", BoundKind::upper, double(r), r, true, "r"});

    std::vector<std::uint64_t> orders;
    std::vector<int> degrees;
    std::vector<bool> primitive;
    for (const auto& f : code.factors()) {
        orders.push_back(poly_order(f.poly()));
        degrees.push_back(f.degree());
        primitive.push_back(orders.back() == nt::mersenne(f.degree()));
    }

    {
        BoundEntry e{"three-part-1", BoundKind::lower, double(r - dmin + 2), r - dmin + 2, false, "a minimum-degree factor is non-primitive"};
        for (std::size_t j = 0; j < degrees.size(); ++j)
            if (degrees[j] == dmin && !primitive[j]) e.applicable = true;
        rep.entries.push_back(e);
    }
    {
        BoundEntry e{"three-part-2", BoundKind::upper};
        e.applicable = degrees.size() <= 16;
        if (e.applicable) {
            const auto mn = order_degree_minimum(orders, degrees);
            e.value = r - mn.ceil_min;
            e.raw = r - mn.raw_min;
        }
        e.note = "r - min_J (log2 lcm ord - sum d/2)";
        rep.entries.push_back(e);
    }
    {
        BoundEntry e{"three-part-3", BoundKind::exact};
        e.note = "two primitive factors, d1 < d2, gcd < d2 - d1 or d2 - d1 <= 2";
        if (degrees.size() == 2 && primitive[0] && primitive[1]) {
            const int d1 = std::min(degrees[0], degrees[1]), d2 = std::max(degrees[0], degrees[1]);
            if (d1 < d2 && (std::gcd(d1, d2) < d2 - d1 || d2 - d1 <= 2)) {
                e.applicable = true;
                e.value = d2 + 1;
                e.raw = d2 + 1;
            }
        }
        rep.entries.push_back(e);
    }

    const auto& fam = code.family();
    if (fam.kind == FamilyKind::bch) {
        BoundEntry up{"bch-upper", BoundKind::upper};
        up.applicable = fam.e > 1;
        if (up.applicable) {
            up.value = bch_upper_floor(fam.e, fam.m);
            up.raw = bch_upper_raw(fam.e, fam.m);
        }
        up.note = "m(e - 1/2) + log2(e - 1) + 1";
        rep.entries.push_back(up);
        rep.entries.push_back({"bch-lower", BoundKind::lower, double(bch_lower(fam.e, fam.m)), bch_lower(fam.e, fam.m), fam.e > 1, "(e - 1)m + 2; needs e >= 2"});
    } else if (fam.kind == FamilyKind::melas) {
        rep.entries.push_back({"melas-upper", BoundKind::upper, melas_upper_raw(fam.m), melas_upper_floor(fam.m), true, "3m/2 + 1"});
        rep.entries.push_back({"melas-lower", BoundKind::lower, double(melas_lower(fam.m)), melas_lower(fam.m), true, "m + 2"});
    }
    return rep;
}

}  // namespace bcr
