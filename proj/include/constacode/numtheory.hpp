/**
 * @file numtheory.hpp
 * @brief Integer utilities: modular arithmetic, factorization by trial
 *        division, multiplicative orders and primitive roots at desk scale.
 */
#ifndef CONSTACODE_NUMTHEORY_HPP
#define CONSTACODE_NUMTHEORY_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace constacode {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Inputs outside the supported small-parameter range.
class CapacityError : public std::runtime_error {
  public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// A computed result contradicts a structural prediction; always a hard stop.
class VerificationError : public std::runtime_error {
  public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

inline std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

inline u64 mul_mod(u64 a, u64 b, u64 n) { return static_cast<u64>((u128(a) * b) % n); }

inline u64 pow_mod(u64 base, u64 exp, u64 n) {
    if (n == 1) return 0;
    u64 r = 1;
    base %= n;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, n);
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    return r;
}

/// Extended gcd on signed 128-bit; returns g and x,y with a*x + b*y = g.
inline __int128 ext_gcd(__int128 a, __int128 b, __int128& x, __int128& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    __int128 x1 = 0, y1 = 0;
    __int128 g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

/// Inverse of a modulo n; throws if gcd(a, n) != 1.
inline u64 inv_mod(u64 a, u64 n) {
    if (n == 1) return 0;
    __int128 x = 0, y = 0;
    __int128 g = ext_gcd(__int128(a % n), __int128(n), x, y);
    if (g != 1) throw std::invalid_argument("inv_mod: arguments are not coprime");
    __int128 r = x % __int128(n);
    if (r < 0) r += n;
    return static_cast<u64>(r);
}

inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d : {2ull, 3ull, 5ull}) {
        if (n % d == 0) return n == d;
    }
    for (u64 d = 7; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

/// Prime factorization (p, multiplicity), primes ascending. Trial division.
inline std::vector<std::pair<u64, int>> factorize_u64(u64 n) {
    std::vector<std::pair<u64, int>> out;
    for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (const auto& [p, e] : factorize_u64(n)) out.push_back(p);
    return out;
}

inline u64 euler_phi(u64 n) {
    u64 r = n;
    for (const auto& [p, e] : factorize_u64(n)) r = r / p * (p - 1);
    return r;
}

/// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
inline u64 mult_order_mod(u64 a, u64 n) {
    a %= n;
    if (n == 1) return 1;
    if (std::gcd(a, n) != 1) throw std::invalid_argument("mult_order_mod: gcd(a,n) != 1");
    u64 o = euler_phi(n);
    for (const auto& [p, e] : factorize_u64(o)) {
        for (int i = 0; i < e && pow_mod(a, o / p, n) == 1; ++i) o /= p;
    }
    return o;
}

/// Smallest primitive root modulo an odd prime l.
inline u64 smallest_primitive_root(u64 l) {
    if (!is_prime_u64(l) || l < 3) throw std::invalid_argument("smallest_primitive_root: odd prime required");
    const auto divs = prime_divisors(l - 1);
    for (u64 r = 2; r < l; ++r) {
        bool ok = true;
        for (u64 d : divs) {
            if (pow_mod(r, (l - 1) / d, l) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return r;
    }
    throw std::logic_error("smallest_primitive_root: none found");
}

/// p^e with overflow guard.
inline u64 checked_pow_u64(u64 p, u64 e) {
    u64 r = 1;
    for (u64 i = 0; i < e; ++i) {
        if (r > UINT64_MAX / p) throw CapacityError("checked_pow_u64: overflow");
        r *= p;
    }
    return r;
}

inline u128 checked_pow_u128(u64 p, u64 e) {
    u128 r = 1;
    const u128 cap = ~u128(0) >> 1;
    for (u64 i = 0; i < e; ++i) {
        if (r > cap / p) throw CapacityError("checked_pow_u128: overflow");
        r *= p;
    }
    return r;
}

/// Solve k*a = b (mod n); returns the smallest non-negative solution k,
/// or throws std::domain_error when none exists.
inline u64 solve_linear_congruence(u64 a, u64 b, u64 n) {
    if (n == 0) throw std::invalid_argument("solve_linear_congruence: zero modulus");
    a %= n;
    b %= n;
    if (n == 1) return 0;
    const u64 g = std::gcd(a == 0 ? n : a, n);
    if (b % g != 0) throw std::domain_error("solve_linear_congruence: no solution");
    const u64 n2 = n / g;
    if (n2 == 1) return 0;
    const u64 k = mul_mod((b / g) % n2, inv_mod((a / g) % n2, n2), n2);
    return k;
}

}  // namespace constacode

#endif  // CONSTACODE_NUMTHEORY_HPP
