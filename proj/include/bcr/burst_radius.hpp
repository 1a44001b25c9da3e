#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "cyclic_code.hpp"
#include "errors.hpp"
#include "lfsr.hpp"
#include "matrix.hpp"

namespace bcr {

enum class RadiusMethod { matrix_bruteforce, geometric, orbit };

inline std::string to_string(RadiusMethod m) {
    switch (m) {
        case RadiusMethod::matrix_bruteforce: return "matrix";
        case RadiusMethod::geometric: return "geometric";
        default: return "orbit";
    }
}

struct RadiusResult {
    int b = 0;
    RadiusMethod method = RadiusMethod::orbit;
    /// matrix: smallest syndrome not reachable with width b-1.
    /// orbit: representative of an orbit whose minimum degree is b-1.
    std::uint64_t witness = 0;
    bool cyclic = true;
};

struct RadiusBudget {
    /// Largest r for the 2^r syndrome/state bit sets.
    int max_register = 28;
    /// Cap on enumerated window combinations for the matrix method.
    std::uint64_t max_combinations = std::uint64_t{1} << 34;
    /// Worker threads for the orbit walk.
    int workers = 1;
};

namespace detail {

class BitSet {
public:
    explicit BitSet(std::uint64_t size) : words_((size + 63) / 64, 0) {}
    bool test(std::uint64_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1; }
    /// Sets bit i; returns true if it was previously clear.
    bool set(std::uint64_t i) noexcept {
        auto& w = words_[i >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        const bool fresh = !(w & bit);
        w |= bit;
        return fresh;
    }
    /// Smallest clear index below limit, or limit.
    std::uint64_t first_clear(std::uint64_t limit) const noexcept {
        for (std::uint64_t w = 0; w < words_.size(); ++w)
            if (~words_[w]) {
                const std::uint64_t i = w * 64 + static_cast<std::uint64_t>(std::countr_zero(~words_[w]));
                return std::min(i, limit);
            }
        return limit;
    }

private:
    std::vector<std::uint64_t> words_;
};

inline void require_syndrome_table(int r, const RadiusBudget& budget) {
    if (r < 1) throw std::invalid_argument("parity-check matrix needs at least one row");
    if (r > budget.max_register || r > 40) throw BudgetExceeded("syndrome table of 2^" + std::to_string(r) + " entries exceeds the budget");
}

/// Calls visit(v) for v = base + any subset sum of cols[idx(0..k-1)], Gray-code order.
template <class Index, class Visit>
inline void for_each_subset_sum(std::uint64_t base, const std::vector<std::uint64_t>& cols, int k, Index idx, Visit&& visit) {
    std::uint64_t v = base;
    visit(v);
    const std::uint64_t count = std::uint64_t{1} << k;
    for (std::uint64_t step = 1; step < count; ++step) {
        v ^= cols[idx(std::countr_zero(step))];
        visit(v);
    }
}

}  // namespace detail

/// Smallest b such that every syndrome is a combination of at most b
/// consecutive columns (cyclically consecutive when `cyclic`).
inline RadiusResult matrix_burst_radius(const BinaryMatrix& h, bool cyclic, const RadiusBudget& budget = {}) {
    const int r = h.rows(), n = h.cols();
    detail::require_syndrome_table(r, budget);
    if (h.rank() != r) throw std::invalid_argument("parity-check matrix is rank deficient");
    const auto cols = h.columns();
    const std::uint64_t total = std::uint64_t{1} << r;
    detail::BitSet covered(total);
    covered.set(0);
    std::uint64_t count = 1, work = 0;

    for (int w = 1; w <= n; ++w) {
        const std::uint64_t witness = covered.first_clear(total);
        // Combinations whose support spans exactly w positions starting at i.
        const int starts = cyclic ? n : n - w + 1;
        const int inner = std::max(w - 2, 0);
        work += static_cast<std::uint64_t>(starts) << inner;
        if (work > budget.max_combinations) throw BudgetExceeded("window enumeration exceeds the combination budget");
        for (int i = 0; i < starts; ++i) {
            std::uint64_t base = cols[i];
            if (w > 1) base ^= cols[(i + w - 1) % n];
            auto mark = [&](std::uint64_t v) { count += covered.set(v); };
            detail::for_each_subset_sum(base, cols, inner, [&](int k) { return (i + 1 + k) % n; }, mark);
        }
        if (count == total) return {w, RadiusMethod::matrix_bruteforce, witness, cyclic};
    }
    throw std::logic_error("full-rank matrix did not reach every syndrome");
}

/// Whether x is a combination of at most w consecutive columns.
inline bool reachable_within(const BinaryMatrix& h, std::uint64_t x, int w, bool cyclic) {
    if (x == 0) return true;
    const int n = h.cols();
    const auto cols = h.columns();
    w = std::min(w, n);
    if (w <= 0) return false;
    const int starts = cyclic ? n : n - w + 1;
    for (int i = 0; i < starts; ++i) {
        bool hit = false;
        detail::for_each_subset_sum(0, cols, w, [&](int k) { return (i + k) % n; }, [&](std::uint64_t v) { hit |= v == x; });
        if (hit) return true;
    }
    return false;
}

struct CensusSummary {
    int b = 0;
    bool cyclic = true;
    std::uint64_t total_combinations = 0;
    std::uint64_t zero_multiplicity = 0;
    /// Over nonzero syndromes.
    std::uint64_t min_multiplicity = 0;
    std::uint64_t max_multiplicity = 0;
    std::uint64_t count_of_uncovered = 0;
    /// multiplicity -> number of syndromes (zero syndrome included).
    std::map<std::uint64_t, std::uint64_t> histogram;

    /// Every nonzero syndrome produced exactly once and zero never.
    bool perfect() const noexcept { return zero_multiplicity == 0 && min_multiplicity == 1 && max_multiplicity == 1; }
};

/// For every syndrome, the number of window-b combinations producing it.
/// A combination is a rightmost nonzero column p with coefficient 1 plus any
/// coefficients on the (up to) b-1 columns before it; p runs over all n
/// positions in index order.
inline CensusSummary syndrome_census(const BinaryMatrix& h, int b, bool cyclic, const RadiusBudget& budget = {}) {
    const int r = h.rows(), n = h.cols();
    detail::require_syndrome_table(r, budget);
    if (r > 32) throw BudgetExceeded("census counts limited to r <= 32");
    if (b < 1 || b > n) throw std::invalid_argument("census window must satisfy 1 <= b <= n");
    const auto cols = h.columns();
    std::vector<std::uint32_t> mult(std::size_t{1} << r, 0);
    CensusSummary out;
    out.b = b;
    out.cyclic = cyclic;
    std::uint64_t work = 0;
    for (int p = 0; p < n; ++p) {
        const int before = cyclic ? b - 1 : std::min(b - 1, p);
        work += std::uint64_t{1} << before;
        if (work > budget.max_combinations) throw BudgetExceeded("census exceeds the combination budget");
        detail::for_each_subset_sum(cols[p], cols, before, [&](int k) { return ((p - 1 - k) % n + n) % n; },
                                    [&](std::uint64_t v) { ++mult[v]; });
    }
    out.zero_multiplicity = mult[0];
    out.min_multiplicity = ~std::uint64_t{0};
    for (std::uint64_t s = 0; s < mult.size(); ++s) {
        ++out.histogram[mult[s]];
        out.total_combinations += mult[s];
        if (s == 0) continue;
        out.min_multiplicity = std::min<std::uint64_t>(out.min_multiplicity, mult[s]);
        out.max_multiplicity = std::max<std::uint64_t>(out.max_multiplicity, mult[s]);
        if (mult[s] == 0) ++out.count_of_uncovered;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Geometric definition: union of burst balls around codewords.

namespace detail {

inline std::uint64_t rotl_n(std::uint64_t v, int k, int n) noexcept {
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    k %= n;
    if (k == 0) return v;
    return ((v << k) | (v >> (n - k))) & mask;
}

inline bool balls_cover(const std::vector<std::uint64_t>& codewords, int n, int b) {
    if (b >= n) return true;
    const std::uint64_t space = std::uint64_t{1} << n;
    BitSet bursts(space);
    std::vector<std::uint64_t> burst_list;
    for (int i = 0; i < n; ++i)
        for (std::uint64_t e = 0; e < (std::uint64_t{1} << b); ++e) {
            const std::uint64_t v = rotl_n(e, i, n);
            if (bursts.set(v)) burst_list.push_back(v);
        }
    BitSet covered(space);
    std::uint64_t count = 0;
    for (std::uint64_t c : codewords) {
        for (std::uint64_t e : burst_list) count += covered.set(c ^ e);
        if (count == space) return true;
    }
    return count == space;
}

}  // namespace detail

inline constexpr int kMaxGeometricLength = 20;

/// Exhaustive check that the cyclic b-burst balls around the codewords of ker(H) fill GF(2)^n.
inline bool geometric_is_covering(const BinaryMatrix& h, int b) {
    const int n = h.cols();
    if (n > kMaxGeometricLength) throw BudgetExceeded("geometric check limited to n <= 20");
    if (h.rows() < 1) throw std::invalid_argument("code must have redundancy >= 1");
    const auto basis = h.kernel_basis();
    std::vector<std::uint64_t> words{0};
    for (const auto& v : basis) {
        const std::uint64_t x = v.to_u64();
        const std::size_t sz = words.size();
        for (std::size_t k = 0; k < sz; ++k) words.push_back(words[k] ^ x);
    }
    return detail::balls_cover(words, n, b);
}

/// Same check, codewords generated as u(X) g(X).
inline bool geometric_is_covering(const CyclicCode& code, int b) {
    const int n = code.n(), k = n - code.r();
    if (n > kMaxGeometricLength) throw BudgetExceeded("geometric check limited to n <= 20");
    const std::uint64_t g = code.generator().to_u64();
    std::vector<std::uint64_t> words;
    words.reserve(std::size_t{1} << k);
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << k); ++u) {
        const auto [lo, hi] = detail::clmul64(u, g);
        (void)hi;
        words.push_back(lo);
    }
    return detail::balls_cover(words, n, b);
}

/// Least b with geometric covering, by linear search.
inline RadiusResult geometric_burst_radius(const CyclicCode& code) {
    for (int b = 1; b <= code.n(); ++b)
        if (geometric_is_covering(code, b)) return {b, RadiusMethod::geometric, 0, true};
    throw std::logic_error("no covering width found");
}

// ---------------------------------------------------------------------------
// Orbit method: b = 1 + max over orbits of min_k deg(X^k f mod g).

namespace detail {

struct OrbitExtreme {
    int min_deg = -1;
    std::uint64_t rep = 0;

    void offer(int d, std::uint64_t r) noexcept {
        if (d > min_deg || (d == min_deg && r < rep)) {
            min_deg = d;
            rep = r;
        }
    }
};

/// Orbits whose smallest element lies in [lo, hi); no shared state.
inline OrbitExtreme scan_orbit_range(std::uint64_t lo, std::uint64_t hi, int r, std::uint64_t low) {
    OrbitExtreme best;
    for (std::uint64_t start = lo; start < hi; ++start) {
        int min_deg = word_degree(start);
        bool owner = true;
        for (std::uint64_t s = galois_step(start, r, low); s != start; s = galois_step(s, r, low)) {
            if (s < start) {
                owner = false;
                break;
            }
            min_deg = std::min(min_deg, word_degree(s));
        }
        if (owner) best.offer(min_deg, start);
    }
    return best;
}

}  // namespace detail

inline RadiusResult orbit_burst_radius(const BinaryPolynomial& g, const RadiusBudget& budget = {}) {
    const int r = g.degree();
    if (r < 1) throw std::invalid_argument("generator must have degree >= 1");
    if (!g.coeff(0)) throw std::invalid_argument("X divides g");
    if (r > budget.max_register) throw BudgetExceeded("orbit walk over 2^" + std::to_string(r) + " states exceeds the budget");
    detail::OrbitExtreme best;
    if (budget.workers <= 1) {
        for_each_orbit(g, budget.max_register, [&](std::uint64_t rep, std::uint64_t, int d) { best.offer(d, rep); });
    } else {
        const std::uint64_t total = std::uint64_t{1} << r, low = low_part(g);
        const auto w = static_cast<std::uint64_t>(budget.workers);
        std::vector<detail::OrbitExtreme> partial(w);
        std::vector<std::thread> pool;
        for (std::uint64_t k = 0; k < w; ++k) {
            const std::uint64_t lo = std::max<std::uint64_t>(1, total * k / w), hi = total * (k + 1) / w;
            pool.emplace_back([&, k, lo, hi] { partial[k] = detail::scan_orbit_range(lo, hi, r, low); });
        }
        for (auto& t : pool) t.join();
        for (const auto& p : partial)
            if (p.min_deg >= 0) best.offer(p.min_deg, p.rep);
    }
    return {best.min_deg + 1, RadiusMethod::orbit, best.rep, true};
}

inline RadiusResult cyclic_burst_radius(const CyclicCode& code, const RadiusBudget& budget = {}) {
    return orbit_burst_radius(code.generator(), budget);
}

/// Syndrome certified by an orbit witness: LC(0, rep). Needs width b.
inline Syndrome orbit_witness_syndrome(const CyclicCode& code, const RadiusResult& res) {
    return lc_eval(code, 0, BinaryPolynomial(res.witness));
}

/// Minimum over nonzero initial conditions of the cyclic maximum zero run: r - b.
inline int min_max_zero_run(const CyclicCode& code, const RadiusBudget& budget = {}) {
    return code.r() - cyclic_burst_radius(code, budget).b;
}

}  // namespace bcr
