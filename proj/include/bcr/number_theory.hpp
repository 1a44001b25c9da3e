#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace bcr::nt {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 mulmod(u64 a, u64 b, u64 m) noexcept { return static_cast<u64>(static_cast<u128>(a) * b % m); }

constexpr u64 powmod(u64 a, u64 e, u64 m) noexcept {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
constexpr bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

inline u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

inline void factor_into(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        if (n % p == 0) {
            out.push_back(p);
            factor_into(n / p, out);
            return;
        }
    }
    const u64 d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

/// Distinct prime divisors of n, ascending.
inline std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> f;
    detail::factor_into(n, f);
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

/// lcm with overflow detection.
inline u64 checked_lcm(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    const u128 l = static_cast<u128>(a / std::gcd(a, b)) * b;
    if (l > ~u64{0}) throw std::overflow_error("lcm exceeds 64 bits");
    return static_cast<u64>(l);
}

/// ceil(log2(x)) for x >= 1.
constexpr int ceil_log2(u128 x) noexcept {
    int k = 0;
    while ((u128{1} << k) < x) ++k;
    return k;
}

/// 2^m - 1 for 1 <= m <= 64.
constexpr u64 mersenne(int m) noexcept { return m >= 64 ? ~u64{0} : (u64{1} << m) - 1; }

}  // namespace bcr::nt
