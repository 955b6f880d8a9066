/**
 * @file cyclotomic.hpp
 * @brief q-cyclotomic cosets modulo l and 3l, their family labels, reciprocal
 *        cosets, and minimal polynomials synthesized from roots of unity.
 *
 * Throughout, l != 3 is an odd prime coprime to q, f = ord_l(q) and
 * e = phi(l)/f. The cosets modulo 3l fall into three shapes depending on
 * q mod 3 and the parity of f; every labeling below is verified against the
 * computed partition and aborts loudly on any mismatch.
 */
#ifndef CONSTACODE_CYCLOTOMIC_HPP
#define CONSTACODE_CYCLOTOMIC_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "constacode/poly.hpp"

namespace constacode {

struct Coset {
    u64 modulus = 0;
    u64 rep = 0;                // smallest member
    std::vector<u64> members;   // sorted

    friend bool operator==(const Coset& a, const Coset& b) {
        return a.modulus == b.modulus && a.members == b.members;
    }
};

/// Orbits of multiplication by q on Z_n; complete partition sorted by
/// smallest member. Requires gcd(n, q) = 1.
inline std::vector<Coset> q_cosets(u64 n, u64 q) {
    if (n == 0 || std::gcd(n, q % n) != 1) throw std::invalid_argument("q_cosets: gcd(n,q) != 1");
    const u64 qr = q % n;
    std::vector<bool> seen(n, false);
    std::vector<Coset> out;
    for (u64 s = 0; s < n; ++s) {
        if (seen[s]) continue;
        Coset c;
        c.modulus = n;
        u64 x = s;
        do {
            seen[x] = true;
            c.members.push_back(x);
            x = mul_mod(x, qr, n);
        } while (x != s);
        std::sort(c.members.begin(), c.members.end());
        c.rep = c.members.front();
        out.push_back(std::move(c));
    }
    return out;
}

/// The coset of -s: still q-closed, built directly from the members.
inline Coset reciprocal_coset(const Coset& c) {
    Coset r;
    r.modulus = c.modulus;
    r.members.reserve(c.members.size());
    for (u64 x : c.members) r.members.push_back((c.modulus - x) % c.modulus);
    std::sort(r.members.begin(), r.members.end());
    r.rep = r.members.front();
    return r;
}

/// Primitive root g modulo every power of l with g = 1 (mod 3): take the
/// smallest primitive root r mod l with r^(l-1) != 1 (mod l^2) and reduce
/// r + (1-r) l^2 to its least positive residue modulo 3 l^2. Both defining
/// properties are re-verified after reduction.
inline u64 special_primitive_root(u64 l) {
    if (l == 3 || l < 5 || !is_prime_u64(l) || l % 2 == 0)
        throw std::invalid_argument("special_primitive_root: l must be an odd prime different from 3");
    const u64 l2 = l * l;
    const auto divs = prime_divisors(l - 1);
    u64 r = 0;
    for (u64 cand = 2; cand < l; ++cand) {
        bool prim = true;
        for (u64 d : divs)
            if (pow_mod(cand, (l - 1) / d, l) == 1) {
                prim = false;
                break;
            }
        if (!prim) continue;
        if (pow_mod(cand, l - 1, l2) != 1) {  // gcd((r^(l-1)-1)/l, l) = 1
            r = cand;
            break;
        }
    }
    if (r == 0) throw std::logic_error("special_primitive_root: no qualifying root");
    const u64 mod = 3 * l2;
    // r + (1-r) l^2 reduced to the least positive residue
    u64 g = (r % mod + mul_mod(((1 + mod) - (r % mod)) % mod, l2 % mod, mod)) % mod;
    if (g == 0) g = mod;
    if (g % 3 != 1) throw VerificationError("special_primitive_root: g != 1 (mod 3)");
    if (mult_order_mod(g % l, l) != l - 1) throw VerificationError("special_primitive_root: g not primitive mod l");
    if (pow_mod(g % l2, l - 1, l2) == 1)
        throw VerificationError("special_primitive_root: g^(l-1) = 1 (mod l^2)");
    return g;
}

/// ord_{3l}(q) by the closed formula (f, or 2f when q = 2 mod 3 with f odd),
/// cross-checked against the direct order computation.
inline u64 ord_3l(u64 q, u64 l) {
    if (std::gcd(q, 3 * l) != 1) throw std::invalid_argument("ord_3l: gcd(q, 3l) != 1");
    const u64 f = mult_order_mod(q % l, l);
    u64 predicted;
    if (q % 3 == 1)
        predicted = f;
    else
        predicted = (f % 2 == 0) ? f : 2 * f;
    const u64 direct = mult_order_mod(q % (3 * l), 3 * l);
    if (predicted != direct) throw VerificationError("ord_3l: formula disagrees with the direct order");
    return predicted;
}

// ---------------------------------------------------------------------------
// Labeled cosets modulo 3l
// ---------------------------------------------------------------------------

/// The three shapes of the mod-3l partition.
enum class CosetCase { QOne, QTwoEven, QTwoOdd };  // q=1 (3); q=2 (3), f even; q=2 (3), f odd

inline std::string coset_case_name(CosetCase c) {
    switch (c) {
        case CosetCase::QOne: return "q=1 mod 3";
        case CosetCase::QTwoEven: return "q=2 mod 3, f even";
        case CosetCase::QTwoOdd: return "q=2 mod 3, f odd";
    }
    return "?";
}

enum class FamilyKind { Zero, L, MinusL, Unit, UnitNeg, ThreeUnit };

struct FamilyLabel {
    FamilyKind kind = FamilyKind::Zero;
    u64 k = 0;  // index within the family, where applicable

    friend bool operator==(const FamilyLabel& a, const FamilyLabel& b) {
        return a.kind == b.kind && a.k == b.k;
    }
    friend bool operator<(const FamilyLabel& a, const FamilyLabel& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.k < b.k;
    }
};

inline std::string label_name(const FamilyLabel& lb) {
    switch (lb.kind) {
        case FamilyKind::Zero: return "B_0";
        case FamilyKind::L: return "B_l";
        case FamilyKind::MinusL: return "B_{-l}";
        case FamilyKind::Unit: return "B_{g^" + std::to_string(lb.k) + "}";
        case FamilyKind::UnitNeg: return "B_{-g^" + std::to_string(lb.k) + "}";
        case FamilyKind::ThreeUnit: return "B_{3g^" + std::to_string(lb.k) + "}";
    }
    return "?";
}

struct LabeledCoset {
    FamilyLabel label;
    Coset coset;
};

/// The classified q-cyclotomic cosets modulo 3l.
struct CosetFamily {
    u64 q = 0;
    u64 l = 0;
    u64 g = 0;  // special primitive root
    u64 f = 0;  // ord_l(q)
    u64 e = 0;  // phi(l) / f
    CosetCase tag = CosetCase::QOne;
    std::vector<LabeledCoset> cosets;  // complete partition of [0, 3l)

    const LabeledCoset& by_label(const FamilyLabel& lb) const {
        for (const auto& lc : cosets)
            if (lc.label == lb) return lc;
        throw std::logic_error("CosetFamily: no coset with label " + label_name(lb));
    }
    const LabeledCoset& containing(u64 x) const {
        for (const auto& lc : cosets)
            if (std::binary_search(lc.coset.members.begin(), lc.coset.members.end(), x % (3 * l))) return lc;
        throw std::logic_error("CosetFamily: incomplete partition");
    }
};

/// Label the partition of Z_{3l} into q-cosets. Every predicted family must
/// match a computed coset of the predicted size, each coset must receive
/// exactly one label, and the case's size accounting must close; any failure
/// aborts with VerificationError.
inline CosetFamily cosets_mod_3l(u64 q, u64 l, u64 g) {
    if (l == 3 || !is_prime_u64(l) || l % 2 == 0)
        throw std::invalid_argument("cosets_mod_3l: l must be an odd prime different from 3");
    const u64 n = 3 * l;
    if (std::gcd(q, n) != 1) throw std::invalid_argument("cosets_mod_3l: gcd(q, 3l) != 1");

    CosetFamily fam;
    fam.q = q;
    fam.l = l;
    fam.g = g;
    fam.f = mult_order_mod(q % l, l);
    fam.e = (l - 1) / fam.f;
    fam.tag = (q % 3 == 1) ? CosetCase::QOne
                           : (fam.f % 2 == 0 ? CosetCase::QTwoEven : CosetCase::QTwoOdd);

    const auto partition = q_cosets(n, q);
    std::vector<int> assigned(partition.size(), -1);
    const auto locate = [&](u64 member) -> std::size_t {
        for (std::size_t i = 0; i < partition.size(); ++i)
            if (std::binary_search(partition[i].members.begin(), partition[i].members.end(), member % n)) return i;
        throw std::logic_error("cosets_mod_3l: member not covered");
    };

    std::vector<std::pair<FamilyLabel, std::pair<u64, u64>>> predicted;  // label -> (member, size)
    const u64 gr = g % n;
    const auto gpow = [&](u64 k) { return pow_mod(gr, k, n); };

    predicted.push_back({{FamilyKind::Zero, 0}, {0, 1}});
    switch (fam.tag) {
        case CosetCase::QOne:
            predicted.push_back({{FamilyKind::L, 0}, {l, 1}});
            predicted.push_back({{FamilyKind::MinusL, 0}, {n - l, 1}});
            for (u64 k = 0; k < fam.e; ++k) {
                predicted.push_back({{FamilyKind::Unit, k}, {gpow(k), fam.f}});
                predicted.push_back({{FamilyKind::UnitNeg, k}, {n - gpow(k), fam.f}});
                predicted.push_back({{FamilyKind::ThreeUnit, k}, {mul_mod(3, gpow(k), n), fam.f}});
            }
            break;
        case CosetCase::QTwoEven:
            predicted.push_back({{FamilyKind::L, 0}, {l, 2}});
            for (u64 k = 0; k < 2 * fam.e; ++k)
                predicted.push_back({{FamilyKind::Unit, k}, {gpow(k), fam.f}});
            for (u64 k = 0; k < fam.e; ++k)
                predicted.push_back({{FamilyKind::ThreeUnit, k}, {mul_mod(3, gpow(k), n), fam.f}});
            break;
        case CosetCase::QTwoOdd:
            predicted.push_back({{FamilyKind::L, 0}, {l, 2}});
            for (u64 k = 0; k < fam.e; ++k) {
                predicted.push_back({{FamilyKind::Unit, k}, {gpow(k), 2 * fam.f}});
                predicted.push_back({{FamilyKind::ThreeUnit, k}, {mul_mod(3, gpow(k), n), fam.f}});
            }
            break;
    }

    u64 size_sum = 0;
    for (std::size_t pi = 0; pi < predicted.size(); ++pi) {
        const FamilyLabel& label = predicted[pi].first;
        const auto [member, size] = predicted[pi].second;
        const std::size_t idx = locate(member);
        if (assigned[idx] != -1)
            throw VerificationError("cosets_mod_3l: families " +
                                    label_name(predicted[std::size_t(assigned[idx])].first) + " and " +
                                    label_name(label) + " collide on one coset");
        if (partition[idx].members.size() != size)
            throw VerificationError("cosets_mod_3l: family " + label_name(label) + " has size " +
                                    std::to_string(partition[idx].members.size()) + ", predicted " +
                                    std::to_string(size));
        assigned[idx] = static_cast<int>(pi);
        fam.cosets.push_back({label, partition[idx]});
        size_sum += size;
    }
    if (predicted.size() != partition.size() || size_sum != n)
        throw VerificationError("cosets_mod_3l: labeling does not exhaust the partition");
    return fam;
}

// ---------------------------------------------------------------------------
// q^3-cyclotomic cosets modulo l
// ---------------------------------------------------------------------------

struct CubeCosetLabel {
    bool zero = false;
    u64 k = 0;            // unit index: representative g^k q^u
    std::uint32_t u = 0;  // 0, 1 or 2

    friend bool operator==(const CubeCosetLabel& a, const CubeCosetLabel& b) {
        return a.zero == b.zero && a.k == b.k && a.u == b.u;
    }
};

inline std::string cube_label_name(const CubeCosetLabel& lb) {
    if (lb.zero) return "A_0";
    std::string s = "A_{g^" + std::to_string(lb.k);
    if (lb.u == 1) s += " q";
    if (lb.u == 2) s += " q^2";
    return s + "}";
}

struct LabeledCubeCoset {
    CubeCosetLabel label;
    Coset coset;
};

/// q^3-cyclotomic cosets modulo l. When gcd(f,3) = 1 the partition equals the
/// q-cosets (one coset per unit index, u = 0 throughout); when gcd(f,3) = 3
/// each unit index k carries the triple of cosets of g^k, g^k q, g^k q^2,
/// each of size f/3.
inline std::vector<LabeledCubeCoset> q3_cosets_mod_l(u64 q, u64 l, u64 g) {
    if (std::gcd(q, l) != 1) throw std::invalid_argument("q3_cosets_mod_l: gcd(q,l) != 1");
    const u64 f = mult_order_mod(q % l, l);
    const u64 e = (l - 1) / f;
    const bool split = (f % 3 == 0);
    const u64 q3 = pow_mod(q % l, 3, l);
    const auto partition = q_cosets(l, q3);
    {  // structural cross-check: ord_l(q^3) drops by exactly gcd(f, 3)
        const u64 f3 = mult_order_mod(q3, l);
        if (f3 != (split ? f / 3 : f)) throw VerificationError("q3_cosets_mod_l: unexpected ord_l(q^3)");
    }

    std::vector<int> assigned(partition.size(), -1);
    const auto locate = [&](u64 member) -> std::size_t {
        for (std::size_t i = 0; i < partition.size(); ++i)
            if (std::binary_search(partition[i].members.begin(), partition[i].members.end(), member % l)) return i;
        throw std::logic_error("q3_cosets_mod_l: member not covered");
    };

    std::vector<LabeledCubeCoset> out;
    std::size_t idx0 = locate(0);
    assigned[idx0] = 0;
    out.push_back({CubeCosetLabel{true, 0, 0}, partition[idx0]});
    const u64 expected_size = split ? f / 3 : f;
    for (u64 k = 0; k < e; ++k) {
        for (std::uint32_t u = 0; u < (split ? 3u : 1u); ++u) {
            const u64 member = mul_mod(pow_mod(g % l, k, l), pow_mod(q % l, u, l), l);
            const std::size_t idx = locate(member);
            CubeCosetLabel lb{false, k, u};
            if (assigned[idx] != -1)
                throw VerificationError("q3_cosets_mod_l: label " + cube_label_name(lb) + " collides");
            if (partition[idx].members.size() != expected_size)
                throw VerificationError("q3_cosets_mod_l: coset " + cube_label_name(lb) + " has wrong size");
            assigned[idx] = 1;
            out.push_back({lb, partition[idx]});
        }
    }
    if (out.size() != partition.size())
        throw VerificationError("q3_cosets_mod_l: labeling does not exhaust the partition");
    return out;
}

// ---------------------------------------------------------------------------
// Minimal polynomials
// ---------------------------------------------------------------------------

/// prod_{i in coset} (x - eta^i) computed in eta's field; all coefficients
/// must land in the base of that field (this is what q-closure buys), and the
/// result is returned over the base. eta must be a primitive root of unity of
/// order exactly the coset modulus.
inline Poly minimal_poly_of_coset(const Coset& c, const FieldPtr& E, const FE& eta) {
    if (E->order(eta) != c.modulus)
        throw std::invalid_argument("minimal_poly_of_coset: eta is not a primitive " +
                                    std::to_string(c.modulus) + "-th root of unity");
    Poly prod = Poly::constant(E, E->one());
    for (u64 i : c.members) prod = prod * Poly::x_minus(E, E->pow(eta, i));
    return prod.project_to_base();  // throws when a coefficient escapes the base field
}

/// Splitting context for x^n - 1 over F: the extension of degree ord_n(q)
/// and its canonical primitive n-th root of unity.
struct UnityContext {
    FieldPtr ext;
    FE eta;
};

inline UnityContext unity_context(const FieldPtr& F, u64 n) {
    const u64 k = mult_order_mod(static_cast<u64>(F->size() % n), n);
    FieldPtr E = (k == 1) ? F : Field::extend(F, static_cast<std::uint32_t>(k));
    FE eta = E->nth_root_of_unity(n);
    return {E, eta};
}

/// The irreducible factors of x^{3l} - 1 over F, one per labeled coset.
inline std::vector<std::pair<FamilyLabel, Poly>> minimal_polys_mod_3l(const FieldPtr& F,
                                                                      const CosetFamily& fam) {
    const u64 n = 3 * fam.l;
    const auto uc = unity_context(F, n);
    std::vector<std::pair<FamilyLabel, Poly>> out;
    out.reserve(fam.cosets.size());
    for (const auto& lc : fam.cosets) {
        Poly m = (uc.ext == F) ? [&] {
            Poly prod = Poly::constant(F, F->one());
            for (u64 i : lc.coset.members) prod = prod * Poly::x_minus(F, F->pow(uc.eta, i));
            return prod;
        }()
                               : minimal_poly_of_coset(lc.coset, uc.ext, uc.eta);
        out.emplace_back(lc.label, std::move(m));
    }
    // hard identity: the labeled factors multiply back to x^{3l} - 1
    Poly prod = Poly::constant(F, F->one());
    for (const auto& [lb, m] : out) prod = prod * m;
    if (prod != Poly::binomial(F, n, F->one()))
        throw VerificationError("minimal_polys_mod_3l: factors do not multiply to x^{3l} - 1");
    return out;
}

}  // namespace constacode

#endif  // CONSTACODE_CYCLOTOMIC_HPP
