#pragma once

#include <cstdint>
#include <stdexcept>

#include "cyclic_code.hpp"
#include "lfsr.hpp"
#include "matrix.hpp"

namespace bcr {

/// Raised when the shift loop runs past n steps: b' is below the radius.
class ThresholdBelowRadius : public std::runtime_error {
public:
    ThresholdBelowRadius() : std::runtime_error("threshold below radius") {}
};

struct CoveringCertificate {
    std::int64_t i = 0;
    BinaryPolynomial f;
    int width = 0;
    std::uint64_t iterations = 0;
};

/// Burst-cover queries against one code. The inverse of the leading r x r
/// block of H is computed once.
class BurstCoverer {
public:
    explicit BurstCoverer(CyclicCode code) : code_(std::move(code)) {
        const int r = code_.r();
        if (r > kMaxRegister) throw CodeError("burst cover supports r <= 63");
        std::vector<std::uint64_t> cols(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j) cols[j] = code_.column(j);
        auto inv = BinaryMatrix::from_columns(r, cols).inverse();
        if (!inv) throw std::logic_error("leading block of the parity-check matrix is singular");
        inv_cols_ = inv->columns();
        low_ = low_part(code_.generator());
    }

    const CyclicCode& code() const noexcept { return code_; }

    /// (i, f) with LC(i, f) = x and deg f < b_prime.
    CoveringCertificate cover(Syndrome x, int b_prime) const {
        const int r = code_.r(), n = code_.n();
        if (r < 64 && (x >> r) != 0) throw std::invalid_argument("syndrome has more than r bits");
        // y = A^{-1} x, f = sum y_i X^i.
        std::uint64_t f = 0;
        for (int k = 0; k < r; ++k)
            if ((x >> k) & 1) f ^= inv_cols_[k];
        CoveringCertificate cert;
        std::uint64_t t = 0;
        while (f != 0 && word_degree(f) >= b_prime) {
            f = galois_step(f, r, low_);
            if (++t > static_cast<std::uint64_t>(n)) throw ThresholdBelowRadius();
        }
        cert.iterations = t;
        std::int64_t i = (n - static_cast<std::int64_t>(t % static_cast<std::uint64_t>(n))) % n;
        if (f != 0) {
            const int v = std::countr_zero(f);
            f >>= v;
            i = (i + v) % n;
            cert.width = word_degree(f) + 1;
        }
        cert.i = f == 0 ? 0 : i;
        cert.f = BinaryPolynomial(f);
        return cert;
    }

private:
    CyclicCode code_;
    std::vector<std::uint64_t> inv_cols_;
    std::uint64_t low_ = 0;
};

inline CoveringCertificate burst_cover(const CyclicCode& code, Syndrome x, int b_prime) { return BurstCoverer(code).cover(x, b_prime); }

/// Recomputes LC(i, f) and checks the shape constraints.
inline bool verify_certificate(const CyclicCode& code, Syndrome x, const CoveringCertificate& cert, int b_prime) {
    if (cert.i < 0 || cert.i >= code.n()) return false;
    if (cert.f.is_zero()) return x == 0 && cert.width == 0;
    if (!cert.f.coeff(0)) return false;
    if (cert.width != cert.f.degree() + 1 || cert.width > b_prime) return false;
    return lc_eval_columns(code, cert.i, cert.f) == x;
}

}  // namespace bcr
