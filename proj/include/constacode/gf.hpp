/**
 * @file gf.hpp
 * @brief Exact arithmetic in F_p, F_{p^m} and tower extensions F_{q^k}.
 *
 * A Field is immutable after construction and shared by pointer. Elements are
 * flat coefficient vectors over the prime subfield (low degree first, fixed
 * length = degree over F_p), so they serialize directly as integer sequences.
 *
 * Construction is deterministic: the modulus is the lexicographically smallest
 * monic irreducible (coefficient sequences compared low degree first), and the
 * designated generator xi is the canonically smallest element of maximal
 * multiplicative order. Enumeration-style searches (generator, discrete log,
 * element scans) are capacity-guarded; tower construction itself only needs a
 * bounded candidate scan and works for much larger cardinalities.
 */
#ifndef CONSTACODE_GF_HPP
#define CONSTACODE_GF_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "constacode/numtheory.hpp"

namespace constacode {

/// Field element: coefficients over F_p, low degree first, fixed length.
using FE = std::vector<std::uint32_t>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Canonical total order on elements of one field (lexicographic, low first).
inline bool fe_less(const FE& a, const FE& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct FEHash {
    std::size_t operator()(const FE& a) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (std::uint32_t c : a) {
            h ^= c;
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

namespace capacity {

/// Upper bound on field cardinality for element-enumeration searches
/// (generator search, discrete logs, root scans). Override with the
/// CONSTACODE_CAPACITY environment variable.
inline u64 enumeration_limit() {
    static const u64 v = [] {
        if (const char* e = std::getenv("CONSTACODE_CAPACITY")) {
            const u64 parsed = std::strtoull(e, nullptr, 10);
            if (parsed > 0) return parsed;
        }
        return u64(1) << 20;
    }();
    return v;
}

/// Upper bound on the degree over F_p of any constructed tower.
inline u64 tower_degree_limit() { return 64; }

}  // namespace capacity

namespace detail {

// ---------------------------------------------------------------------------
// Generic dense univariate polynomial algebra over a coefficient adaptor.
// Instantiated for Z_p scalars (std::uint32_t) and for field elements (FE).
// Polynomials are low-degree-first coefficient vectors with no trailing zeros.
// ---------------------------------------------------------------------------

template <class Ops>
struct PolyAlg {
    using Sc = typename Ops::Sc;
    using P = std::vector<Sc>;

    static void trim(const Ops& K, P& a) {
        while (!a.empty() && K.is_zero(a.back())) a.pop_back();
    }

    static P add(const Ops& K, const P& a, const P& b) {
        P r(std::max(a.size(), b.size()), K.zero());
        for (std::size_t i = 0; i < r.size(); ++i) {
            Sc s = i < a.size() ? a[i] : K.zero();
            if (i < b.size()) s = K.add(s, b[i]);
            r[i] = s;
        }
        trim(K, r);
        return r;
    }

    static P sub(const Ops& K, const P& a, const P& b) {
        P r(std::max(a.size(), b.size()), K.zero());
        for (std::size_t i = 0; i < r.size(); ++i) {
            Sc s = i < a.size() ? a[i] : K.zero();
            if (i < b.size()) s = K.sub(s, b[i]);
            r[i] = s;
        }
        trim(K, r);
        return r;
    }

    static P mul(const Ops& K, const P& a, const P& b) {
        if (a.empty() || b.empty()) return {};
        P r(a.size() + b.size() - 1, K.zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (K.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (K.is_zero(b[j])) continue;
                r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
            }
        }
        trim(K, r);
        return r;
    }

    static P scale(const Ops& K, const P& a, const Sc& c) {
        if (K.is_zero(c)) return {};
        P r(a.size(), K.zero());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = K.mul(a[i], c);
        trim(K, r);
        return r;
    }

    static void divrem(const Ops& K, const P& a, const P& b, P& q, P& r) {
        if (b.empty()) throw std::invalid_argument("poly divrem: division by zero polynomial");
        r = a;
        trim(K, r);
        q.clear();
        if (r.size() < b.size()) return;
        q.assign(r.size() - b.size() + 1, K.zero());
        const Sc lead_inv = K.inv(b.back());
        for (std::size_t i = r.size(); i-- >= b.size();) {
            if (K.is_zero(r[i])) {
                if (i + 1 == b.size()) break;
                continue;
            }
            const Sc c = K.mul(r[i], lead_inv);
            q[i - (b.size() - 1)] = c;
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i - (b.size() - 1) + j] = K.sub(r[i - (b.size() - 1) + j], K.mul(c, b[j]));
            if (i + 1 == b.size()) break;
        }
        trim(K, r);
        trim(K, q);
    }

    static P mod(const Ops& K, const P& a, const P& b) {
        P q, r;
        divrem(K, a, b, q, r);
        return r;
    }

    static P monic(const Ops& K, const P& a) {
        if (a.empty()) throw std::invalid_argument("poly monic: zero polynomial");
        if (K.is_one(a.back())) return a;
        return scale(K, a, K.inv(a.back()));
    }

    static P gcd_monic(const Ops& K, P a, P b) {
        trim(K, a);
        trim(K, b);
        while (!b.empty()) {
            P r = mod(K, a, b);
            a = std::move(b);
            b = std::move(r);
        }
        if (a.empty()) return a;
        return monic(K, a);
    }

    static P modpow(const Ops& K, P base, u128 e, const P& m) {
        P r{K.one()};
        base = mod(K, base, m);
        while (e > 0) {
            if (e & 1) r = mod(K, mul(K, r, base), m);
            e >>= 1;
            if (e > 0) base = mod(K, mul(K, base, base), m);
        }
        return r;
    }

    /// Inverse of a modulo m (monic m, gcd(a, m) = 1).
    static P inv_mod_poly(const Ops& K, const P& a, const P& m) {
        P r0 = m, r1 = mod(K, a, m);
        P t0, t1{K.one()};
        while (!r1.empty()) {
            P q, r2;
            divrem(K, r0, r1, q, r2);
            P t2 = sub(K, t0, mul(K, q, t1));
            r0 = std::move(r1);
            r1 = std::move(r2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r0.size() != 1) throw std::invalid_argument("poly inverse: arguments not coprime");
        return scale(K, t0, K.inv(r0[0]));
    }

    static Sc eval(const Ops& K, const P& a, const Sc& x) {
        Sc r = K.zero();
        for (std::size_t i = a.size(); i-- > 0;) r = K.add(K.mul(r, x), a[i]);
        return r;
    }
};

/// Coefficient adaptor for Z_p with word-sized p.
struct ZpOps {
    u64 p;
    using Sc = std::uint32_t;
    Sc zero() const { return 0; }
    Sc one() const { return 1; }
    bool is_zero(Sc a) const { return a == 0; }
    bool is_one(Sc a) const { return a == 1; }
    Sc add(Sc a, Sc b) const { return static_cast<Sc>((u64(a) + b) % p); }
    Sc sub(Sc a, Sc b) const { return static_cast<Sc>((u64(a) + p - b) % p); }
    Sc mul(Sc a, Sc b) const { return static_cast<Sc>((u64(a) * b) % p); }
    Sc inv(Sc a) const {
        if (a == 0) throw std::invalid_argument("Z_p: inversion of zero");
        return static_cast<Sc>(inv_mod(a, p));
    }
};

struct FOps;  // adaptor over a Field, defined after Field

}  // namespace detail

// ---------------------------------------------------------------------------
// Field
// ---------------------------------------------------------------------------

class Field : public std::enable_shared_from_this<Field> {
  public:
    /// F_{p^m} with deterministic modulus and generator. p prime, m >= 1.
    static FieldPtr make(u64 p, std::uint32_t m);

    /// F_{p^m} with a pinned modulus and generator; both are validated.
    static FieldPtr make_pinned(u64 p, std::uint32_t m, const std::vector<std::uint32_t>& modulus,
                                const std::vector<std::uint32_t>& xi);

    /// Degree-k tower extension of an existing field, deterministic modulus.
    static FieldPtr extend(const FieldPtr& base, std::uint32_t k);

    u64 characteristic() const { return p_; }
    std::uint32_t degree() const { return flat_; }             ///< over F_p
    std::uint32_t tower_degree() const { return deg_; }        ///< over base()
    FieldPtr base() const { return base_; }                    ///< null when prime-rooted
    u128 size() const { return q_; }
    u64 size_u64() const {
        if (q_ > u128(UINT64_MAX)) throw CapacityError("field too large for 64-bit enumeration");
        return static_cast<u64>(q_);
    }
    std::string name() const;

    /// Modulus of a prime-rooted field as integers over F_p (monic, low first).
    const std::vector<std::uint32_t>& prime_modulus() const {
        if (base_) throw std::logic_error("prime_modulus: tower field");
        return pmod_;
    }
    /// Modulus of a tower extension, coefficients in the base field.
    const std::vector<FE>& tower_modulus() const {
        if (!base_) throw std::logic_error("tower_modulus: prime-rooted field");
        return emod_;
    }

    // --- elements ---------------------------------------------------------
    FE zero() const { return FE(flat_, 0); }
    FE one() const {
        FE r(flat_, 0);
        r[0] = 1;
        return r;
    }
    /// Integer of the prime subfield (value mod p).
    FE from_uint(u64 v) const {
        FE r(flat_, 0);
        r[0] = static_cast<std::uint32_t>(v % p_);
        return r;
    }
    bool is_zero(const FE& a) const {
        check(a);
        return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
    }
    bool is_one(const FE& a) const {
        check(a);
        if (a[0] != 1) return false;
        return std::all_of(a.begin() + 1, a.end(), [](std::uint32_t c) { return c == 0; });
    }

    /// Element with the given rank in the canonical order; rank 0 is zero.
    FE element_at(u128 rank) const;

    FE add(const FE& a, const FE& b) const;
    FE sub(const FE& a, const FE& b) const;
    FE neg(const FE& a) const;
    FE mul(const FE& a, const FE& b) const;
    FE inv(const FE& a) const;
    FE div(const FE& a, const FE& b) const { return mul(a, inv(b)); }
    FE pow(const FE& a, u128 e) const;
    /// a^(p^t): iterated prime-power Frobenius.
    FE pow_p(const FE& a, u64 t) const;
    /// a^(|base|^i), the Frobenius of the tower over its base field.
    FE frobenius(const FE& a, u64 i = 1) const;
    /// The unique p-th root (inverse of the prime Frobenius).
    FE pth_root(const FE& a) const { return pow_p(a, u64(flat_) - 1); }

    /// Multiplicative order; requires a != 0 and a factorizable group order.
    u64 order(const FE& a) const;

    /// Designated generator of the multiplicative group (canonically smallest).
    const FE& xi() const;
    /// Discrete log base xi; cached table, capacity-guarded.
    u64 dlog(const FE& a) const;
    /// xi^((q-1)/n); requires n | q-1.
    FE unity_root(u64 n) const;
    /// Some element of multiplicative order exactly n. Canonical xi power
    /// within the enumeration capacity; beyond it, the first canonical rank z
    /// whose power z^((q-1)/n) has exact order n (needs only n factorized).
    FE nth_root_of_unity(u64 n) const;

    // --- tower navigation --------------------------------------------------
    /// Base-field element into this field (tower only).
    FE embed(const FE& a) const;
    bool in_base(const FE& a) const;
    /// Project an element known to lie in the base field.
    FE to_base(const FE& a) const;

    u64 group_order_u64() const {
        if (q_ - 1 > u128(UINT64_MAX)) throw CapacityError("multiplicative group too large");
        return static_cast<u64>(q_ - 1);
    }

  private:
    Field() = default;

    void check(const FE& a) const {
        if (a.size() != flat_) throw std::invalid_argument("element belongs to a different field: " + name());
    }

    const std::vector<std::pair<u64, int>>& group_factorization() const;

    FieldPtr base_;
    u64 p_ = 0;
    std::uint32_t deg_ = 0;
    std::uint32_t flat_ = 0;
    u128 q_ = 0;
    std::vector<std::uint32_t> pmod_;  // prime-rooted modulus
    std::vector<FE> emod_;             // tower modulus over base

    mutable std::once_flag xi_once_;
    mutable FE xi_cache_;
    mutable std::once_flag fact_once_;
    mutable std::vector<std::pair<u64, int>> qm1_factors_;
    mutable std::once_flag dlog_once_;
    mutable std::unordered_map<FE, u64, FEHash> dlog_table_;
};

namespace detail {

/// Coefficient adaptor over an arbitrary Field.
struct FOps {
    const Field* K;
    using Sc = FE;
    Sc zero() const { return K->zero(); }
    Sc one() const { return K->one(); }
    bool is_zero(const Sc& a) const { return K->is_zero(a); }
    bool is_one(const Sc& a) const { return K->is_one(a); }
    Sc add(const Sc& a, const Sc& b) const { return K->add(a, b); }
    Sc sub(const Sc& a, const Sc& b) const { return K->sub(a, b); }
    Sc mul(const Sc& a, const Sc& b) const { return K->mul(a, b); }
    Sc inv(const Sc& a) const { return K->inv(a); }
};

using ZAlg = PolyAlg<ZpOps>;
using FAlg = PolyAlg<FOps>;

/// Irreducibility over F_p by exhaustive trial division (desk scale).
inline bool zp_irreducible_exhaustive(const ZpOps& Z, const std::vector<std::uint32_t>& f) {
    const std::size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    // trial divisors: every monic polynomial of degree 1..n/2
    for (std::size_t d = 1; 2 * d <= n; ++d) {
        u64 count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= Z.p;
        for (u64 v = 0; v < count; ++v) {
            std::vector<std::uint32_t> g(d + 1, 0);
            u64 t = v;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % Z.p);
                t /= Z.p;
            }
            g[d] = 1;
            if (ZAlg::mod(Z, f, g).empty()) return false;
        }
    }
    return true;
}

/// Irreducibility of a monic polynomial over an arbitrary field via the
/// Frobenius criterion: x^(Q^n) = x (mod f) and gcd(x^(Q^(n/r)) - x, f) = 1
/// for every prime r | n, where Q = |K|.
inline bool f_irreducible_frobenius(const Field& K, const std::vector<FE>& f) {
    const FOps F{&K};
    const std::size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    if (K.is_zero(f[0]) ) return false;  // divisible by x
    const u128 Q = K.size();
    const std::vector<FE> x{K.zero(), K.one()};
    std::vector<FE> pw = x;  // x^(Q^i) mod f
    const auto primes = prime_divisors(static_cast<u64>(n));
    for (std::size_t i = 1; i <= n; ++i) {
        pw = FAlg::modpow(F, pw, Q, f);
        if (i < n && n % i == 0 && std::find(primes.begin(), primes.end(), u64(n / i)) != primes.end()) {
            auto g = FAlg::gcd_monic(F, FAlg::sub(F, pw, x), f);
            if (!(g.size() == 1)) return false;
        }
    }
    return FAlg::sub(F, pw, x).empty();
}

/// Exhaustive trial-division irreducibility over an arbitrary base field,
/// usable when |K|^(deg/2) stays within the enumeration budget.
inline bool f_irreducible_exhaustive(const Field& K, const std::vector<FE>& f) {
    const FOps F{&K};
    const std::size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    for (std::size_t d = 1; 2 * d <= n; ++d) {
        const u128 count = checked_pow_u128(static_cast<u64>(K.size()), d);
        for (u128 v = 0; v < count; ++v) {
            std::vector<FE> g(d + 1, K.zero());
            u128 t = v;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = K.element_at(t % K.size());
                t /= K.size();
            }
            g[d] = K.one();
            if (FAlg::mod(F, f, g).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Field implementation
// ---------------------------------------------------------------------------

inline std::string Field::name() const {
    std::string s = "GF(" + std::to_string(p_);
    if (flat_ > 1) s += "^" + std::to_string(flat_);
    s += ")";
    return s;
}

inline FieldPtr Field::make(u64 p, std::uint32_t m) {
    if (!is_prime_u64(p)) throw std::invalid_argument("Field::make: p must be prime");
    if (m < 1) throw std::invalid_argument("Field::make: m must be >= 1");
    const u128 q = checked_pow_u128(p, m);
    if (q > capacity::enumeration_limit())
        throw CapacityError("Field::make: p^m exceeds the enumeration capacity (see CONSTACODE_CAPACITY)");

    auto F = std::shared_ptr<Field>(new Field());
    F->p_ = p;
    F->deg_ = m;
    F->flat_ = m;
    F->q_ = q;

    const detail::ZpOps Z{p};
    if (m == 1) {
        F->pmod_ = {0, 1};
    } else {
        // lexicographically smallest monic irreducible, coefficients low first
        bool found = false;
        const u64 total = checked_pow_u64(p, m);
        for (u64 v = 0; v < total && !found; ++v) {
            std::vector<std::uint32_t> f(m + 1, 0);
            u64 t = v;
            for (std::uint32_t i = 0; i < m; ++i) {  // coefficient 0 is the most significant digit
                f[m - 1 - i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            f[m] = 1;
            if (detail::zp_irreducible_exhaustive(Z, f)) {
                F->pmod_ = f;
                found = true;
            }
        }
        if (!found) throw std::logic_error("Field::make: no irreducible modulus found");
    }

    // generator: canonically smallest element of order q-1
    FieldPtr Fc = F;
    const u64 qm1 = F->group_order_u64();
    bool found_xi = false;
    for (u64 r = 1; r < static_cast<u64>(q) && !found_xi; ++r) {
        FE cand = F->element_at(r);
        if (F->order(cand) == qm1) {
            F->xi_cache_ = cand;
            found_xi = true;
        }
    }
    if (!found_xi) throw std::logic_error("Field::make: no generator found");
    std::call_once(F->xi_once_, [] {});
    return Fc;
}

inline FieldPtr Field::make_pinned(u64 p, std::uint32_t m, const std::vector<std::uint32_t>& modulus,
                                   const std::vector<std::uint32_t>& xi) {
    auto F = std::shared_ptr<Field>(new Field());
    if (!is_prime_u64(p)) throw std::invalid_argument("Field::make_pinned: p must be prime");
    if (m < 1) throw std::invalid_argument("Field::make_pinned: m must be >= 1");
    F->p_ = p;
    F->deg_ = m;
    F->flat_ = m;
    F->q_ = checked_pow_u128(p, m);
    if (F->q_ > capacity::enumeration_limit())
        throw CapacityError("Field::make_pinned: p^m exceeds the enumeration capacity");
    if (modulus.size() != m + 1 || modulus[m] != 1)
        throw std::invalid_argument("Field::make_pinned: modulus must be monic of degree m");
    for (auto c : modulus)
        if (c >= p) throw std::invalid_argument("Field::make_pinned: modulus coefficient out of range");
    const detail::ZpOps Z{p};
    if (m > 1 && !detail::zp_irreducible_exhaustive(Z, modulus))
        throw std::invalid_argument("Field::make_pinned: modulus is reducible");
    F->pmod_ = modulus;
    if (m == 1 && !(modulus == std::vector<std::uint32_t>{0, 1}))
        throw std::invalid_argument("Field::make_pinned: prime field modulus must be y");
    if (xi.size() != m) throw std::invalid_argument("Field::make_pinned: xi must have m coefficients");
    for (auto c : xi)
        if (c >= p) throw std::invalid_argument("Field::make_pinned: xi coefficient out of range");
    FE cand(xi.begin(), xi.end());
    if (F->order(cand) != F->group_order_u64())
        throw std::invalid_argument("Field::make_pinned: xi does not generate the multiplicative group");
    F->xi_cache_ = cand;
    std::call_once(F->xi_once_, [] {});
    return F;
}

inline FieldPtr Field::extend(const FieldPtr& base, std::uint32_t k) {
    if (!base) throw std::invalid_argument("Field::extend: null base");
    if (k < 1) throw std::invalid_argument("Field::extend: k must be >= 1");
    if (u64(base->degree()) * k > capacity::tower_degree_limit())
        throw CapacityError("Field::extend: tower degree exceeds capacity");

    auto F = std::shared_ptr<Field>(new Field());
    F->base_ = base;
    F->p_ = base->p_;
    F->deg_ = k;
    F->flat_ = base->flat_ * k;
    F->q_ = checked_pow_u128(base->size_u64(), k);

    const u128 qb = base->size();
    const bool cheap = [&] {
        u128 c = 1;
        for (std::uint32_t d = 1; 2 * d <= k; ++d) {
            if (c > (u128(1) << 16) / qb) return false;
            c *= qb;
        }
        return c <= (u128(1) << 16);
    }();

    // lexicographically smallest monic irreducible of degree k over base.
    // The constant coefficient is the most significant position of the
    // order; for k >= 2 a zero constant means x divides the candidate, so
    // that whole slice is skipped without scanning it.
    bool found = false;
    u64 attempts = 0;
    const u128 rest_total = (k >= 1) ? checked_pow_u128(base->size_u64(), k - 1) : 1;
    for (u128 a0 = (k >= 2 ? 1 : 0); a0 < qb && !found; ++a0) {
        for (u128 rest = 0; rest < rest_total && !found; ++rest) {
            if (++attempts > 2'000'000) throw CapacityError("Field::extend: modulus search budget exceeded");
            std::vector<FE> f(k + 1, base->zero());
            f[0] = base->element_at(a0);
            u128 t = rest;
            for (std::uint32_t i = 1; i < k; ++i) {  // digit 1 next most significant
                f[k - i] = base->element_at(t % qb);
                t /= qb;
            }
            f[k] = base->one();
            const bool irr = (k == 1) || (cheap ? detail::f_irreducible_exhaustive(*base, f)
                                                : detail::f_irreducible_frobenius(*base, f));
            if (irr) {
                F->emod_ = f;
                found = true;
            }
        }
    }
    if (!found) throw std::logic_error("Field::extend: no irreducible modulus found");
    return F;
}

inline FE Field::element_at(u128 rank) const {
    if (rank >= q_) throw std::invalid_argument("element_at: rank out of range");
    if (!base_) {
        FE r(flat_, 0);
        for (std::uint32_t i = 0; i < flat_; ++i) {  // coefficient 0 most significant
            r[flat_ - 1 - i] = static_cast<std::uint32_t>(rank % p_);
            rank /= p_;
        }
        return r;
    }
    FE r(flat_, 0);
    const u128 qb = base_->size();
    for (std::uint32_t i = 0; i < deg_; ++i) {  // digit 0 most significant
        const FE d = base_->element_at(rank % qb);
        rank /= qb;
        std::copy(d.begin(), d.end(), r.begin() + std::size_t(deg_ - 1 - i) * base_->flat_);
    }
    return r;
}

inline FE Field::add(const FE& a, const FE& b) const {
    check(a);
    check(b);
    FE r(flat_);
    for (std::uint32_t i = 0; i < flat_; ++i) r[i] = static_cast<std::uint32_t>((u64(a[i]) + b[i]) % p_);
    return r;
}

inline FE Field::sub(const FE& a, const FE& b) const {
    check(a);
    check(b);
    FE r(flat_);
    for (std::uint32_t i = 0; i < flat_; ++i) r[i] = static_cast<std::uint32_t>((u64(a[i]) + p_ - b[i]) % p_);
    return r;
}

inline FE Field::neg(const FE& a) const {
    check(a);
    FE r(flat_);
    for (std::uint32_t i = 0; i < flat_; ++i) r[i] = static_cast<std::uint32_t>((p_ - a[i]) % p_);
    return r;
}

inline FE Field::mul(const FE& a, const FE& b) const {
    check(a);
    check(b);
    if (!base_) {
        if (flat_ == 1) return {static_cast<std::uint32_t>((u64(a[0]) * b[0]) % p_)};
        // schoolbook product, then reduce by the monic prime-rooted modulus
        std::vector<u64> c(2 * std::size_t(flat_) - 1, 0);
        for (std::uint32_t i = 0; i < flat_; ++i) {
            if (a[i] == 0) continue;
            for (std::uint32_t j = 0; j < flat_; ++j) c[i + j] = (c[i + j] + u64(a[i]) * b[j]) % p_;
        }
        for (std::size_t i = c.size(); i-- > flat_;) {
            const u64 coef = c[i];
            if (coef == 0) continue;
            c[i] = 0;
            for (std::uint32_t j = 0; j < flat_; ++j) {
                if (pmod_[j] == 0) continue;
                const std::size_t t = i - flat_ + j;
                c[t] = (c[t] + (p_ - (coef * pmod_[j]) % p_)) % p_;
            }
        }
        FE r(flat_);
        for (std::uint32_t i = 0; i < flat_; ++i) r[i] = static_cast<std::uint32_t>(c[i]);
        return r;
    }
    // tower: digit convolution over the base field, reduce by emod_
    const std::uint32_t B = base_->flat_;
    std::vector<FE> c(2 * std::size_t(deg_) - 1, base_->zero());
    for (std::uint32_t i = 0; i < deg_; ++i) {
        FE da(a.begin() + std::size_t(i) * B, a.begin() + std::size_t(i + 1) * B);
        if (base_->is_zero(da)) continue;
        for (std::uint32_t j = 0; j < deg_; ++j) {
            FE db(b.begin() + std::size_t(j) * B, b.begin() + std::size_t(j + 1) * B);
            if (base_->is_zero(db)) continue;
            c[i + j] = base_->add(c[i + j], base_->mul(da, db));
        }
    }
    for (std::size_t i = c.size(); i-- > deg_;) {
        if (base_->is_zero(c[i])) continue;
        const FE coef = c[i];
        c[i] = base_->zero();
        for (std::uint32_t j = 0; j < deg_; ++j) {
            if (base_->is_zero(emod_[j])) continue;
            const std::size_t t = i - deg_ + j;
            c[t] = base_->sub(c[t], base_->mul(coef, emod_[j]));
        }
    }
    FE r(flat_, 0);
    for (std::uint32_t i = 0; i < deg_; ++i) std::copy(c[i].begin(), c[i].end(), r.begin() + std::size_t(i) * B);
    return r;
}

inline FE Field::inv(const FE& a) const {
    check(a);
    if (is_zero(a)) throw std::invalid_argument("field inversion of zero");
    if (!base_) {
        if (flat_ == 1) return {static_cast<std::uint32_t>(inv_mod(a[0], p_))};
        const detail::ZpOps Z{p_};
        std::vector<std::uint32_t> av(a.begin(), a.end());
        detail::ZAlg::trim(Z, av);
        auto r = detail::ZAlg::inv_mod_poly(Z, av, pmod_);
        r.resize(flat_, 0);
        return FE(r.begin(), r.end());
    }
    const detail::FOps F{base_.get()};
    const std::uint32_t B = base_->flat_;
    std::vector<FE> av;
    av.reserve(deg_);
    for (std::uint32_t i = 0; i < deg_; ++i) av.emplace_back(a.begin() + std::size_t(i) * B, a.begin() + std::size_t(i + 1) * B);
    detail::FAlg::trim(F, av);
    auto r = detail::FAlg::inv_mod_poly(F, av, emod_);
    r.resize(deg_, base_->zero());
    FE out(flat_, 0);
    for (std::uint32_t i = 0; i < deg_; ++i) std::copy(r[i].begin(), r[i].end(), out.begin() + std::size_t(i) * B);
    return out;
}

inline FE Field::pow(const FE& a, u128 e) const {
    check(a);
    FE r = one();
    FE b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        e >>= 1;
        if (e > 0) b = mul(b, b);
    }
    return r;
}

inline FE Field::pow_p(const FE& a, u64 t) const {
    FE r = a;
    for (u64 i = 0; i < t; ++i) r = pow(r, p_);
    return r;
}

inline FE Field::frobenius(const FE& a, u64 i) const {
    if (!base_) return pow_p(a, i);
    return pow_p(a, i * base_->flat_);
}

inline const std::vector<std::pair<u64, int>>& Field::group_factorization() const {
    std::call_once(fact_once_, [this] {
        const u64 qm1 = group_order_u64();
        if (qm1 > (u64(1) << 44)) throw CapacityError("group order too large to factorize by trial division");
        qm1_factors_ = factorize_u64(qm1 == 0 ? 1 : qm1);
    });
    return qm1_factors_;
}

inline u64 Field::order(const FE& a) const {
    if (is_zero(a)) throw std::invalid_argument("order of zero element");
    const u64 qm1 = group_order_u64();
    if (qm1 == 0) return 1;  // F_2: trivial group
    u64 o = qm1;
    for (const auto& [pr, e] : group_factorization()) {
        for (int i = 0; i < e; ++i) {
            if (o % pr == 0 && is_one(pow(a, o / pr)))
                o /= pr;
            else
                break;
        }
    }
    if (!is_one(pow(a, o))) throw VerificationError("order computation failed");
    return o;
}

inline const FE& Field::xi() const {
    std::call_once(xi_once_, [this] {
        const u64 qu = size_u64();
        if (qu > capacity::enumeration_limit())
            throw CapacityError("generator search exceeds the enumeration capacity");
        const u64 qm1 = qu - 1;
        for (u64 r = 1; r < qu; ++r) {
            FE cand = element_at(r);
            if (order(cand) == qm1) {
                xi_cache_ = cand;
                return;
            }
        }
        throw std::logic_error("no multiplicative generator found");
    });
    return xi_cache_;
}

inline u64 Field::dlog(const FE& a) const {
    if (is_zero(a)) throw std::invalid_argument("discrete log of zero");
    std::call_once(dlog_once_, [this] {
        const u64 qu = size_u64();
        if (qu > capacity::enumeration_limit())
            throw CapacityError("discrete log table exceeds the enumeration capacity");
        const FE& g = xi();
        FE cur = one();
        for (u64 i = 0; i + 1 < qu; ++i) {
            dlog_table_.emplace(cur, i);
            cur = mul(cur, g);
        }
    });
    const auto it = dlog_table_.find(a);
    if (it == dlog_table_.end()) throw std::logic_error("dlog: element not found");
    return it->second;
}

inline FE Field::unity_root(u64 n) const {
    const u64 qm1 = group_order_u64();
    if (n == 0 || qm1 % n != 0) throw std::invalid_argument("unity_root: n does not divide q-1");
    FE r = pow(xi(), qm1 / n);
    if (order(r) != n) throw VerificationError("unity_root: wrong order");
    return r;
}

inline FE Field::nth_root_of_unity(u64 n) const {
    if (n == 0 || (q_ - 1) % n != 0) throw std::invalid_argument("nth_root_of_unity: n does not divide q-1");
    if (q_ <= capacity::enumeration_limit()) return unity_root(n);
    const u128 cofactor = (q_ - 1) / n;
    const auto primes = prime_divisors(n);
    const u64 budget = 1u << 16;
    for (u64 r = 1; r < budget && u128(r) < q_; ++r) {
        const FE w = pow(element_at(r), cofactor);
        if (!is_one(pow(w, n))) throw VerificationError("nth_root_of_unity: cofactor power escapes the subgroup");
        bool exact = true;
        for (u64 pr : primes) {
            if (is_one(pow(w, n / pr))) {
                exact = false;
                break;
            }
        }
        if (exact) return w;
    }
    throw CapacityError("nth_root_of_unity: no element of exact order n within the scan budget");
}

inline FE Field::embed(const FE& a) const {
    if (!base_) throw std::logic_error("embed: prime-rooted field has no base");
    if (a.size() != base_->flat_) throw std::invalid_argument("embed: element not from the base field");
    FE r(flat_, 0);
    std::copy(a.begin(), a.end(), r.begin());
    return r;
}

inline bool Field::in_base(const FE& a) const {
    check(a);
    if (!base_) return true;
    return std::all_of(a.begin() + base_->flat_, a.end(), [](std::uint32_t c) { return c == 0; });
}

inline FE Field::to_base(const FE& a) const {
    if (!base_) throw std::logic_error("to_base: prime-rooted field has no base");
    if (!in_base(a)) throw std::invalid_argument("to_base: element does not lie in the base field");
    return FE(a.begin(), a.begin() + base_->flat_);
}

}  // namespace constacode

#endif  // CONSTACODE_GF_HPP
