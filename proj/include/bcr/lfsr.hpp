#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "gf2_factor.hpp"
#include "gf2_poly.hpp"
#include "matrix.hpp"

namespace bcr {

using BitVector = std::vector<std::uint8_t>;

/// Largest register length handled by the word-level kernels.
inline constexpr int kMaxRegister = 63;

/// Fibonacci LFSR: connection polynomial g of degree r and initial terms a_0..a_{r-1}.
struct LfsrSpec {
    BinaryPolynomial connection;
    BitVector init;

    int order() const noexcept { return connection.degree(); }
    bool is_zero() const noexcept {
        return std::all_of(init.begin(), init.end(), [](auto b) { return b == 0; });
    }
};

class LfsrError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void validate(const LfsrSpec& spec) {
    const int r = spec.order();
    if (r < 1) throw LfsrError("connection polynomial must have degree >= 1");
    if (r > kMaxRegister) throw LfsrError("register length above 63 is not supported");
    if (static_cast<int>(spec.init.size()) != r) throw LfsrError("initial condition length must equal deg(g)");
}

/// Initial conditions from the low r bits of a mask (bit k = a_k).
inline LfsrSpec make_lfsr(const BinaryPolynomial& g, std::uint64_t init_mask) {
    LfsrSpec s{g, BitVector(static_cast<std::size_t>(std::max(g.degree(), 0)), 0)};
    for (std::size_t k = 0; k < s.init.size(); ++k) s.init[k] = (init_mask >> k) & 1;
    validate(s);
    return s;
}

inline std::uint64_t init_mask(const LfsrSpec& s) {
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < s.init.size(); ++k)
        if (s.init[k]) m |= std::uint64_t{1} << k;
    return m;
}

// ---------------------------------------------------------------------------
// Word-level kernels. A register of length r lives in the low r bits.

/// One Galois step: f -> X f mod g. `low` is g without its leading term.
constexpr std::uint64_t galois_step(std::uint64_t f, int r, std::uint64_t low) noexcept {
    const std::uint64_t top = (f >> (r - 1)) & 1;
    f = (f << 1) & ((std::uint64_t{1} << r) - 1);
    return top ? f ^ low : f;
}

/// Degree of a nonzero word.
constexpr int word_degree(std::uint64_t f) noexcept { return static_cast<int>(std::bit_width(f)) - 1; }

inline std::uint64_t low_part(const BinaryPolynomial& g) {
    const int r = g.degree();
    if (r < 1 || r > kMaxRegister) throw LfsrError("register length must be in [1, 63]");
    return g.to_u64() & ((std::uint64_t{1} << r) - 1);
}

/// Fibonacci initial conditions a_0..a_{r-1} produced by the Galois load f.
inline std::uint64_t galois_load_to_init(const BinaryPolynomial& g, std::uint64_t f) {
    const int r = g.degree();
    const std::uint64_t low = low_part(g);
    std::uint64_t a = 0;
    for (int k = 0; k < r; ++k) {
        a |= ((f >> (r - 1)) & 1) << k;
        f = galois_step(f, r, low);
    }
    return a;
}

/// Inverse of galois_load_to_init: f_{r-1-k} = a_k + sum_{j<k} a_j m_{r-k+j}.
inline std::uint64_t init_to_galois_load(const BinaryPolynomial& g, std::uint64_t a) {
    const int r = g.degree();
    std::uint64_t f = 0;
    for (int k = 0; k < r; ++k) {
        int bit = (a >> k) & 1;
        for (int j = 0; j < k; ++j) bit ^= static_cast<int>((a >> j) & 1) & static_cast<int>(g.coeff(r - k + j));
        f |= static_cast<std::uint64_t>(bit) << (r - 1 - k);
    }
    return f;
}

// ---------------------------------------------------------------------------

/// First len terms of the Fibonacci recurrence a_k = sum m_i a_{k-r+i}.
inline BitVector lfsr_sequence(const LfsrSpec& spec, std::size_t len) {
    validate(spec);
    const int r = spec.order();
    const std::uint64_t taps = low_part(spec.connection);
    BitVector out(len);
    std::uint64_t window = init_mask(spec);  // bit i = a_{k-r+i}
    for (std::size_t k = 0; k < len; ++k) {
        if (k < static_cast<std::size_t>(r)) {
            out[k] = spec.init[k];
            continue;
        }
        const auto next = static_cast<std::uint64_t>(std::popcount(window & taps) & 1);
        window = (window >> 1) | (next << (r - 1));
        out[k] = static_cast<std::uint8_t>(next);
    }
    return out;
}

struct GaloisRun {
    std::vector<BinaryPolynomial> states;
    BitVector output;
};

/// States X^k f mod g and outputs (coefficient of X^{r-1}) for k < steps.
inline GaloisRun galois_run(const BinaryPolynomial& g, const BinaryPolynomial& f, std::size_t steps) {
    const int r = g.degree();
    if (r < 1) throw LfsrError("connection polynomial must have degree >= 1");
    if (f.degree() >= r) throw LfsrError("initial load must have degree < deg(g)");
    const std::uint64_t low = low_part(g);
    std::uint64_t s = f.to_u64();
    GaloisRun run;
    run.states.reserve(steps);
    run.output.reserve(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        run.states.emplace_back(s);
        run.output.push_back(static_cast<std::uint8_t>((s >> (r - 1)) & 1));
        s = galois_step(s, r, low);
    }
    return run;
}

/// Length of the cycle through the Galois state f (f != 0, g(0) = 1).
inline std::uint64_t galois_cycle_length(const BinaryPolynomial& g, std::uint64_t f) {
    const int r = g.degree();
    const std::uint64_t low = low_part(g);
    std::uint64_t s = galois_step(f, r, low), len = 1;
    while (s != f) {
        s = galois_step(s, r, low);
        ++len;
    }
    return len;
}

/// One minimal period of the sequence.
inline BitVector lfsr_period(const LfsrSpec& spec) {
    validate(spec);
    if (!spec.connection.coeff(0)) throw LfsrError("X divides the connection polynomial; sequence is not purely periodic");
    if (spec.is_zero()) return {0};
    const std::uint64_t f = init_to_galois_load(spec.connection, init_mask(spec));
    return lfsr_sequence(spec, galois_cycle_length(spec.connection, f));
}

/// Longest run of zeros in the periodic sequence, read cyclically.
inline int max_zero_run(const LfsrSpec& spec) {
    if (spec.is_zero()) throw LfsrError("all-zero initial condition has an unbounded zero run");
    const BitVector period = lfsr_period(spec);
    const std::size_t n = period.size();
    int best = 0, run = 0;
    // Two passes over the period cover runs that wrap the boundary.
    for (std::size_t k = 0; k < 2 * n; ++k) {
        run = period[k % n] ? 0 : run + 1;
        best = std::max(best, run);
    }
    return best;
}

struct PatternStats {
    BitVector pattern;
    std::uint64_t window_length = 0;
    std::uint64_t count = 0;
    std::optional<std::vector<std::uint64_t>> positions;
};

/// Occurrences of y starting at k in [0, L), reading past L into the periodic continuation.
inline PatternStats pattern_count(const LfsrSpec& spec, const BitVector& y, std::uint64_t window, bool keep_positions = false) {
    if (spec.is_zero()) throw LfsrError("pattern counts need a nonzero initial condition");
    if (y.empty()) throw LfsrError("pattern must be nonempty");
    if (window < 1) throw LfsrError("window length must be positive");
    const BitVector seq = lfsr_sequence(spec, window + y.size() - 1);
    PatternStats st{y, window, 0, std::nullopt};
    if (keep_positions) st.positions.emplace();
    for (std::uint64_t k = 0; k < window; ++k) {
        if (std::equal(y.begin(), y.end(), seq.begin() + static_cast<std::ptrdiff_t>(k))) {
            ++st.count;
            if (keep_positions) st.positions->push_back(k);
        }
    }
    return st;
}

/// Counts of every length-s pattern (index = sum y_j 2^j) over the window,
/// for a sequence already extended by s - 1 terms.
inline std::vector<std::uint64_t> pattern_histogram(const BitVector& seq, int s, std::uint64_t window) {
    std::vector<std::uint64_t> counts(std::size_t{1} << s, 0);
    if (seq.size() < window + static_cast<std::size_t>(s) - 1) throw std::invalid_argument("sequence too short for window");
    std::uint64_t v = 0;
    for (int j = 0; j < s - 1; ++j) v |= static_cast<std::uint64_t>(seq[j]) << j;
    const std::uint64_t mask = (std::uint64_t{1} << s) - 1;
    for (std::uint64_t k = 0; k < window; ++k) {
        v |= static_cast<std::uint64_t>(seq[k + s - 1]) << (s - 1);
        ++counts[v & mask];
        v >>= 1;
    }
    return counts;
}

/// Invariant hypotheses for orbit enumeration.
inline void require_orbit_ready(const BinaryPolynomial& g) {
    if (g.degree() < 1) throw LfsrError("connection polynomial must have degree >= 1");
    if (!g.coeff(0)) throw LfsrError("X divides g");
    const auto rep = classify(g);
    if (!rep.square_free) throw LfsrError("g is not square-free");
}

/// Visits each orbit of nonzero residues under f -> X f mod g once.
/// The visitor receives (representative, orbit size, min degree over the orbit);
/// the representative is the orbit's smallest element as an integer.
template <class Visitor>
void for_each_orbit(const BinaryPolynomial& g, int max_register, Visitor&& visit) {
    const int r = g.degree();
    if (r > max_register) throw BudgetExceeded("orbit walk over 2^" + std::to_string(r) + " states exceeds the budget");
    const std::uint64_t low = low_part(g), total = std::uint64_t{1} << r;
    std::vector<std::uint64_t> seen((total + 63) / 64, 0);
    auto test_and_set = [&](std::uint64_t s) {
        auto& w = seen[s >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (s & 63);
        const bool was = w & bit;
        w |= bit;
        return was;
    };
    for (std::uint64_t start = 1; start < total; ++start) {
        if (test_and_set(start)) continue;
        std::uint64_t size = 1, s = galois_step(start, r, low);
        int min_deg = word_degree(start);
        while (s != start) {
            test_and_set(s);
            min_deg = std::min(min_deg, word_degree(s));
            ++size;
            s = galois_step(s, r, low);
        }
        visit(start, size, min_deg);
    }
}

inline std::vector<BinaryPolynomial> orbit_representatives(const BinaryPolynomial& g, int max_register = 28) {
    require_orbit_ready(g);
    std::vector<BinaryPolynomial> reps;
    for_each_orbit(g, max_register, [&](std::uint64_t rep, std::uint64_t, int) { reps.emplace_back(rep); });
    return reps;
}

// ---------------------------------------------------------------------------
// Trace form a_k = sum_i Tr(gamma_i * root_i^k).

struct TraceComponent {
    RootedFactor factor;
    FieldElement gamma;
};

/// Sequence generated by a trace form.
inline BitVector trace_sequence(const std::vector<TraceComponent>& comps, std::size_t len) {
    BitVector out(len, 0);
    for (const auto& c : comps) {
        const auto& ctx = *c.factor.field;
        FieldElement x = c.gamma;
        for (std::size_t k = 0; k < len; ++k) {
            out[k] ^= static_cast<std::uint8_t>(ctx.trace(x));
            x = ctx.mul(x, c.factor.root);
        }
    }
    return out;
}

/// Solve for the gamma_i of a sequence with square-free connection polynomial.
/// With no explicit roots, each factor is rooted in its own quotient field.
inline std::vector<TraceComponent> trace_representation(const LfsrSpec& spec, std::vector<RootedFactor> roots = {}) {
    validate(spec);
    const auto& g = spec.connection;
    const int r = spec.order();
    if (!g.coeff(0)) throw LfsrError("X divides g");
    if (roots.empty()) {
        const auto rep = classify(g);
        if (!rep.square_free) throw LfsrError("g is not square-free");
        for (const auto& f : rep.factors) roots.push_back(own_field_root(f.poly));
    }
    int total = 0;
    for (const auto& rf : roots) {
        if (rf.field->m() != rf.factor.degree()) throw LfsrError("root field degree must equal factor degree");
        total += rf.factor.degree();
    }
    if (total != r) throw LfsrError("rooted factors do not multiply to deg(g)");

    // Column (i, b): the sequence Tr(2^b * root_i^k), k < r.
    BinaryMatrix sys(r, r + 1);
    int col = 0;
    for (const auto& rf : roots) {
        const auto& ctx = *rf.field;
        for (int b = 0; b < ctx.m(); ++b, ++col) {
            FieldElement x{std::uint64_t{1} << b};
            for (int k = 0; k < r; ++k) {
                sys.set(k, col, ctx.trace(x));
                x = ctx.mul(x, rf.root);
            }
        }
    }
    for (int k = 0; k < r; ++k) sys.set(k, r, spec.init[k]);
    if (sys.row_reduce() != r || sys.column_block(0, r).rank() != r) throw std::logic_error("trace basis is singular");

    std::vector<TraceComponent> out;
    col = 0;
    for (auto& rf : roots) {
        TraceComponent c{rf, {}};
        for (int b = 0; b < rf.field->m(); ++b, ++col)
            if (sys.get(col, r)) c.gamma.value |= std::uint64_t{1} << b;
        out.push_back(std::move(c));
    }

    const std::uint64_t check_len = std::min<std::uint64_t>(poly_order(g), std::uint64_t{1} << 24) + static_cast<std::uint64_t>(r);
    if (trace_sequence(out, check_len) != lfsr_sequence(spec, check_len))
        throw std::logic_error("trace representation does not regenerate the sequence");
    return out;
}

/// Product of the factors with nonzero gamma.
inline BinaryPolynomial sequence_minimal_polynomial(const std::vector<TraceComponent>& comps) {
    BinaryPolynomial p = BinaryPolynomial::one();
    for (const auto& c : comps)
        if (!c.gamma.is_zero()) p *= c.factor.factor;
    return p;
}


/// Whether the filter sum_i p_i a_{k+i} vanishes identically on a sequence
/// with connection polynomial g; checks deg(g) consecutive outputs.
inline bool annihilates(const BinaryPolynomial& p, const BitVector& seq, int r) {
    const int d = p.degree();
    if (static_cast<int>(seq.size()) < d + r) throw LfsrError("sequence too short for the annihilator test");
    for (int k = 0; k < r; ++k) {
        int acc = 0;
        for (int i = 0; i <= d; ++i) acc ^= static_cast<int>(p.coeff(i)) & seq[k + i];
        if (acc) return false;
    }
    return true;
}

/// Minimal polynomial of a sequence with square-free connection polynomial g:
/// the product of the irreducible factors p for which g/p does not annihilate it.
/// Needs at least 2 deg(g) terms.
inline BinaryPolynomial minimal_polynomial_of(const BinaryPolynomial& g, const BitVector& seq) {
    const int r = g.degree();
    const auto rep = classify(g);
    if (!rep.square_free) throw LfsrError("g is not square-free");
    BinaryPolynomial out = BinaryPolynomial::one();
    for (const auto& f : rep.factors)
        if (!annihilates(g / f.poly, seq, r)) out *= f.poly;
    return out;
}

/// Output bits of the Galois register started at f: coefficient of X^{r-1} in X^k f mod g.
inline BitVector galois_output(const BinaryPolynomial& g, std::uint64_t f, std::size_t len) {
    const int r = g.degree();
    const std::uint64_t low = low_part(g);
    BitVector out(len);
    for (std::size_t k = 0; k < len; ++k) {
        out[k] = static_cast<std::uint8_t>((f >> (r - 1)) & 1);
        f = galois_step(f, r, low);
    }
    return out;
}

}  // namespace bcr
