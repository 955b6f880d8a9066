/**
 * @file factorizer.hpp
 * @brief Closed-form irreducible factorizations of x^{3lp^s} - lambda over
 *        F_q, dispatched on d = gcd(q-1, 3l), plus the two irreducibility
 *        criteria the closed forms rest on.
 *
 * Every returned table satisfies the exact product identity (checked before
 * returning, not merely in tests), carries per-factor provenance naming the
 * dispatch case and coset that produced it, and gives every factor
 * multiplicity p^s: the repeated-root structure comes from
 * x^{3lp^s} - lambda = (x^{3l} - mu)^{p^s} with mu the p^s-th root of lambda.
 *
 * The d = 3 classes with lambda outside the cube subgroup are the delicate
 * part. The factorization is assembled over F_{q^3}: scaled minimal
 * polynomials are grouped into coefficient-Frobenius orbits, each orbit of
 * three conjugates is multiplied, and the product must land in F_q[x]. This
 * avoids committing to either branch of omega^q = alpha*omega vs
 * alpha^2*omega; the orbit grouping discovers the pairing.
 */
#ifndef CONSTACODE_FACTORIZER_HPP
#define CONSTACODE_FACTORIZER_HPP

#include <array>
#include <string>
#include <vector>

#include "constacode/cyclotomic.hpp"
#include "constacode/factor_table.hpp"

namespace constacode {

/// Binomial criterion: x^n - a is irreducible over F_q iff every prime
/// divisor of n divides ord(a) but not (q-1)/ord(a), and 4 | n forces
/// 4 | q-1. Requires n >= 2 and a != 0.
inline bool irreducible_binomial(const FieldPtr& F, u64 n, const FE& a) {
    if (n < 2) throw std::invalid_argument("irreducible_binomial: n >= 2 required");
    if (F->is_zero(a)) throw std::invalid_argument("irreducible_binomial: a must be a unit");
    const u64 k = F->order(a);
    const u64 qm1 = F->group_order_u64();
    for (u64 r : prime_divisors(n)) {
        if (k % r != 0) return false;
        if ((qm1 / k) % r == 0) return false;
    }
    if (n % 4 == 0 && qm1 % 4 != 0) return false;
    return true;
}

/// Composition criterion: for irreducible H with H(0) != 0 and e the order
/// of any of its roots, H(x^t) is irreducible over F_q iff every prime
/// divisor of t divides e, gcd(t, (q^n - 1)/e) = 1, and 4 | t forces
/// 4 | q^n - 1 (n = deg H).
inline bool irreducible_composition(const Poly& H, u64 t) {
    if (t == 0) throw std::invalid_argument("irreducible_composition: t must be positive");
    const FieldPtr& F = H.field();
    if (H.degree() < 1 || F->is_zero(H.coeffs()[0]))
        throw std::invalid_argument("irreducible_composition: H must have positive degree and H(0) != 0");
    {
        std::vector<FE> hv = H.coeffs();
        if (!H.is_monic()) hv = monic_hat(H).coeffs();
        if (!detail::f_irreducible_frobenius(*F, hv))
            throw std::invalid_argument("irreducible_composition: H is reducible");
    }
    if (t == 1) return true;

    const u64 n = u64(H.degree());
    const u128 qn = checked_pow_u128(F->size_u64(), n);
    if (qn - 1 > UINT64_MAX) throw CapacityError("irreducible_composition: q^n - 1 exceeds 64 bits");
    const u64 group = static_cast<u64>(qn - 1);
    if (group > (u64(1) << 44)) throw CapacityError("irreducible_composition: group order too large to factorize");

    // order of the root x of H, computed by polynomial powers modulo H
    const Poly Hm = monic_hat(H);
    const Poly x = Poly::x(F);
    const Poly one = Poly::constant(F, F->one());
    u64 e = group;
    for (const auto& [r, mult] : factorize_u64(group)) {
        for (int i = 0; i < mult; ++i) {
            if (e % r == 0 && x.modpow(e / r, Hm) == one)
                e /= r;
            else
                break;
        }
    }
    if (x.modpow(e, Hm) != one) throw VerificationError("irreducible_composition: root order failed");

    for (u64 r : prime_divisors(t))
        if (e % r != 0) return false;
    if (std::gcd(t, group / e) != 1) return false;
    if (t % 4 == 0 && group % 4 != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Splitting data for the d = 3 classes
// ---------------------------------------------------------------------------

/// Everything needed to factor x^{3l} - xi^j for j = 1, 2 when d = 3:
/// the cubic extension, a primitive cube root of unity alpha in F_q, the
/// canonical cube roots nu_j of xi^j in F_{q^3}, and the unique 3(q-1)-th
/// roots of unity omega_j with omega_j^l nu_j = 1.
///
/// nu_1 always has order exactly 3(q-1). nu_2 has order 3(q-1)/gcd(2, q-1):
/// for odd q it is NOT primitive in the 3(q-1) group (its cube xi^2 only has
/// order (q-1)/2), so omega is sought in the full cyclic group of 3(q-1)-th
/// roots of unity, where nu -> nu^l is still a bijection. What the
/// construction genuinely needs is nu_j outside F_q, and that is asserted.
struct CubeSplitData {
    FieldPtr ext;                 // F_{q^3}
    FE alpha;                     // in F_q, order 3
    std::array<FE, 2> nu;         // nu[j-1]^3 = embed(xi^j), canonically smallest root
    std::array<FE, 2> omega;      // omega[j-1]^l * nu[j-1] = 1
};

inline CubeSplitData splitting_data_cubic(const FieldPtr& F, u64 l) {
    const u64 q = F->size_u64();
    if (std::gcd(q - 1, 3 * l) != 3) throw std::invalid_argument("splitting_data_cubic: requires d = 3");
    if (!irreducible_binomial(F, 3, F->xi()))
        throw VerificationError("splitting_data_cubic: x^3 - xi is unexpectedly reducible");

    CubeSplitData data;
    data.ext = Field::extend(F, 3);
    data.alpha = F->unity_root(3);
    const u64 order = 3 * (q - 1);
    const u64 q3 = data.ext->size_u64();
    if (q3 > capacity::enumeration_limit() * 8)
        throw CapacityError("splitting_data_cubic: cubic extension exceeds the scan capacity");

    for (std::uint32_t j = 1; j <= 2; ++j) {
        const FE target = data.ext->embed(F->pow(F->xi(), j));
        bool found = false;
        for (u64 r = 0; r < q3 && !found; ++r) {
            FE z = data.ext->element_at(r);
            if (data.ext->pow(z, 3) == target) {
                data.nu[j - 1] = z;
                found = true;
            }
        }
        if (!found) throw VerificationError("splitting_data_cubic: xi^j has no cube root in F_{q^3}");
        const FE& nu = data.nu[j - 1];
        if (!data.ext->is_one(data.ext->pow(nu, order)))
            throw VerificationError("splitting_data_cubic: nu^{3(q-1)} != 1");
        if (data.ext->in_base(nu))
            throw VerificationError("splitting_data_cubic: nu lies in F_q; x^3 - xi^j would be reducible");
        const u64 expected_order = order / std::gcd<u64>(j, q - 1);
        if (data.ext->order(nu) != expected_order)
            throw VerificationError("splitting_data_cubic: nu has unexpected order");
    }
    if (data.ext->order(data.nu[0]) != order)
        throw VerificationError("splitting_data_cubic: nu_1 must generate the 3(q-1)-th roots of unity");

    // omega_j is unique in the full group <nu_1> of 3(q-1)-th roots of unity
    // with omega_j^l nu_j = 1, because nu -> nu^l is a bijection there.
    for (std::uint32_t j = 1; j <= 2; ++j) {
        bool omega_found = false;
        for (u64 t = 0; t < order; ++t) {
            FE w = data.ext->pow(data.nu[0], t);
            if (data.ext->is_one(data.ext->mul(data.ext->pow(w, l), data.nu[j - 1]))) {
                if (omega_found) throw VerificationError("splitting_data_cubic: omega is not unique");
                data.omega[j - 1] = w;
                omega_found = true;
            }
        }
        if (!omega_found) throw VerificationError("splitting_data_cubic: no omega with omega^l nu = 1");
        if (data.ext->in_base(data.omega[j - 1]))
            throw VerificationError("splitting_data_cubic: omega lies in F_q");
    }
    return data;
}

namespace detail_factor {

struct ExtFactor {
    Poly poly;  // over F_{q^3}, monic
    std::string origin;
};

/// Group monic factors over F_{q^3} into coefficient-Frobenius orbits and
/// multiply each orbit down to F_q[x]. Orbits here always have length 3.
inline std::vector<FactorEntry> multiply_frobenius_orbits(const FieldPtr& F, std::vector<ExtFactor> pool,
                                                          u64 multiplicity) {
    std::vector<FactorEntry> out;
    std::vector<bool> used(pool.size(), false);
    const auto find_in_pool = [&](const Poly& f) -> std::size_t {
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (!used[i] && pool[i].poly == f) return i;
        throw VerificationError("frobenius conjugate is missing from the factor pool");
    };

    for (std::size_t start = 0; start < pool.size(); ++start) {
        if (used[start]) continue;
        const FieldPtr& E = pool[start].poly.field();
        Poly prod = Poly::constant(E, E->one());
        std::string origin = "conjugate orbit {";
        Poly cur = pool[start].poly;
        std::size_t len = 0;
        do {
            const std::size_t idx = find_in_pool(cur);
            used[idx] = true;
            prod = prod * pool[idx].poly;
            if (len) origin += ", ";
            origin += pool[idx].origin;
            ++len;
            cur = pool[idx].poly.map_coeffs([&](const FE& a) { return E->frobenius(a); });
        } while (cur != pool[start].poly);
        if (len != 3)
            throw VerificationError("frobenius orbit of length " + std::to_string(len) +
                                    "; the cubic-class structure requires length 3");
        origin += "}";
        FactorEntry e{prod.project_to_base(), multiplicity, origin};
        if (e.factor.field() != F) throw VerificationError("orbit product landed in the wrong field");
        out.push_back(std::move(e));
    }
    return out;
}

/// Irreducible factorization of x^{3l} - xi^j over F_q for j = 1, 2 and
/// d = 3: scaled minimal polynomials over F_{q^3} grouped into Frobenius
/// orbits. Returns unscaled (c = 1) factors with multiplicity 1.
inline std::vector<FactorEntry> cube_class_factors(const FieldPtr& F, u64 l, std::uint32_t j,
                                                   const CubeSplitData& data) {
    const u64 q = F->size_u64();
    const u64 f = mult_order_mod(q % l, l);
    const bool split = (f % 3 == 0);
    const u64 g = special_primitive_root(l);
    const FieldPtr& E = data.ext;

    const FE alphaE = E->embed(data.alpha);
    const std::array<FE, 3> scalars = {data.omega[j - 1], E->mul(alphaE, data.omega[j - 1]),
                                       E->mul(E->mul(alphaE, alphaE), data.omega[j - 1])};
    const std::array<std::string, 3> scalar_names = {"w", "a*w", "a^2*w"};

    // minimal polynomials with q^3-coset granularity over F_{q^3}
    std::vector<std::pair<std::string, Poly>> minpolys;  // over E
    const auto labeled = q3_cosets_mod_l(q, l, g);
    if (!split) {
        // the q^3-cosets equal the q-cosets; their minimal polynomials live
        // over F_q already and stay irreducible over F_{q^3}
        const auto uc = unity_context(F, l);
        for (const auto& lc : labeled) {
            Poly m = minimal_poly_of_coset(lc.coset, uc.ext, uc.eta);
            minpolys.emplace_back(cube_label_name(lc.label), m.lift_to(E));
        }
    } else {
        const FieldPtr T2 = Field::extend(E, static_cast<std::uint32_t>(f / 3));
        const FE eta = T2->unity_root(l);
        for (const auto& lc : labeled) {
            Poly m = minimal_poly_of_coset(lc.coset, T2, eta);  // lands over E
            minpolys.emplace_back(cube_label_name(lc.label), m);
        }
    }

    std::vector<ExtFactor> pool;
    for (const auto& [name, m] : minpolys)
        for (std::size_t u = 0; u < 3; ++u)
            pool.push_back({monic_hat(scale_substitute(m, scalars[u])), "M(" + name + ")@" + scalar_names[u]});

    auto entries = multiply_frobenius_orbits(F, std::move(pool), 1);

    u64 degsum = 0;
    for (const auto& e : entries) degsum += u64(e.factor.degree());
    if (degsum != 3 * l) throw VerificationError("cube_class_factors: degrees do not sum to 3l");
    return entries;
}

}  // namespace detail_factor

// ---------------------------------------------------------------------------
// the central dispatch
// ---------------------------------------------------------------------------

/// Discrete log of lambda and the class index j with lambda in
/// xi^{j p^s} <xi^d>.
inline u64 unit_class_index(const CodeParams& params, const FieldPtr& F, const FE& lambda) {
    if (F->is_zero(lambda)) throw std::invalid_argument("unit_class_index: lambda must be a unit");
    const u64 d = params.d();
    if (d == 1) return 0;
    const u64 loglam = F->dlog(lambda);
    const u64 ps_mod = params.ps() % d;
    return mul_mod(loglam % d, inv_mod(ps_mod, d), d);
}

/// Closed-form irreducible factorization of x^{3lp^s} - lambda over F_q.
inline FactorTable factor_modulus(const CodeParams& params, const FieldPtr& F, const FE& lambda) {
    params.validate();
    if (F->characteristic() != params.p || F->degree() != params.m)
        throw std::invalid_argument("factor_modulus: field does not match the parameters");
    if (F->is_zero(lambda)) throw std::invalid_argument("factor_modulus: lambda must be a unit");

    const u64 q = F->size_u64();
    const u64 qm1 = q - 1;
    const u64 d = params.d();
    const u64 ps = params.ps();
    const u64 n = params.n();
    const u64 loglam = F->dlog(lambda);

    // peel the p^s-th power: x^{3lp^s} - lambda = (x^{3l} - mu)^{p^s}
    const u64 logmu = (qm1 == 1) ? 0 : mul_mod(loglam, inv_mod(ps % qm1, qm1), qm1);
    const u64 j = unit_class_index(params, F, lambda);
    if (d > 1 && (logmu % d) != (j % d)) throw VerificationError("factor_modulus: class index mismatch");

    // scale x to c x with c^{3l} mu = xi^j (j = 0 gives the cyclic class)
    const u64 jd = (d == 1) ? 0 : j;
    const u64 delta = (qm1 == 1) ? 0 : ((jd % qm1) + qm1 - (logmu % qm1)) % qm1;
    const u64 kc = solve_linear_congruence((3 * params.l) % qm1, delta % qm1, qm1);
    const FE c = F->pow(F->xi(), kc);
    {
        const FE mu = F->pow(F->xi(), logmu);
        if (F->mul(F->pow(c, 3 * params.l), mu) != F->pow(F->xi(), jd))
            throw VerificationError("factor_modulus: scaling constant failed c^{3l} mu = xi^j");
    }

    std::string case_tag;
    std::vector<FactorEntry> raw;  // unscaled factors of x^{3l} - xi^j, multiplicity 1

    if (jd == 0) {
        const u64 g = special_primitive_root(params.l);
        const auto fam = cosets_mod_3l(q, params.l, g);
        const auto polys = minimal_polys_mod_3l(F, fam);
        for (const auto& [label, m] : polys) raw.push_back({m, 1, label_name(label)});
        switch (d) {
            case 1: {
                if (q % 3 != 2) throw VerificationError("factor_modulus: d = 1 requires q = 2 (mod 3)");
                case_tag = (fam.f % 2 == 0) ? "d=1|cyclic|f-even" : "d=1|cyclic|f-odd";
                break;
            }
            case 3: case_tag = "d=3|j=0|cosets-mod-3l"; break;
            default:
                case_tag = (d == params.l ? "d=l|j=0|linear-quadratic" : "d=3l|j=0|all-linear");
                break;
        }
    } else if (d == 3) {
        const auto data = splitting_data_cubic(F, params.l);
        raw = detail_factor::cube_class_factors(F, params.l, static_cast<std::uint32_t>(jd), data);
        const u64 f = mult_order_mod(q % params.l, params.l);
        case_tag = "d=3|j=" + std::to_string(jd) + (f % 3 == 0 ? "|cube-coset-orbits" : "|triple-orbits");
    } else if (d == params.l) {
        // x^{3l} - xi^j = (x^l - xi^i)(x^{2l} + xi^i x^l + xi^{2i}) with 3i = j (mod q-1)
        const u64 i = mul_mod(jd, inv_mod(3, qm1), qm1);
        const FE xii = F->pow(F->xi(), i);
        const Poly binom = Poly::binomial(F, params.l, xii);
        if (!irreducible_binomial(F, params.l, xii))
            throw VerificationError("factor_modulus: x^l - xi^i fails the binomial criterion");
        const Poly H(F, {F->mul(xii, xii), xii, F->one()});
        if (!irreducible_composition(H, params.l))
            throw VerificationError("factor_modulus: the quadratic fails the composition criterion at t = l");
        raw.push_back({binom, 1, "x^l - xi^" + std::to_string(i)});
        raw.push_back({H.inflate(params.l), 1, "x^{2l} + xi^" + std::to_string(i) + " x^l + xi^" + std::to_string(2 * i % qm1)});
        case_tag = "d=l|j=" + std::to_string(jd) +
                   (jd % 3 == 0 ? "|binomial-trinomial|j-multiple-of-3" : "|binomial-trinomial|j-coprime-to-3");
    } else if (d == 3 * params.l) {
        const u64 gcd_j = std::gcd(3 * params.l, jd);
        if (gcd_j == params.l) {
            const u64 t = jd / params.l;  // 1 or 2
            const FE eta = F->unity_root(params.l);
            for (u64 i = 0; i < params.l; ++i) {
                const FE coef = F->mul(F->pow(F->xi(), t), F->pow(eta, i));
                if (!irreducible_binomial(F, 3, coef))
                    throw VerificationError("factor_modulus: x^3 - xi^t eta^i fails the binomial criterion");
                raw.push_back({Poly::binomial(F, 3, coef), 1,
                               "x^3 - xi^" + std::to_string(t) + " eta^" + std::to_string(i)});
            }
            case_tag = "d=3l|j=" + std::to_string(jd) + "|cubic-binomials";
        } else if (gcd_j == 3) {
            const u64 k = jd / 3;
            const FE beta = F->unity_root(3);
            for (u64 i = 0; i < 3; ++i) {
                const FE coef = F->mul(F->pow(F->xi(), k), F->pow(beta, i));
                if (!irreducible_binomial(F, params.l, coef))
                    throw VerificationError("factor_modulus: x^l - xi^k beta^i fails the binomial criterion");
                raw.push_back({Poly::binomial(F, params.l, coef), 1,
                               "x^l - xi^" + std::to_string(k) + " beta^" + std::to_string(i)});
            }
            case_tag = "d=3l|j=" + std::to_string(jd) + "|l-binomials";
        } else if (gcd_j == 1) {
            const FE coef = F->pow(F->xi(), jd);
            if (!irreducible_binomial(F, 3 * params.l, coef))
                throw VerificationError("factor_modulus: x^{3l} - xi^j fails the binomial criterion");
            raw.push_back({Poly::binomial(F, 3 * params.l, coef), 1, "x^{3l} - xi^" + std::to_string(jd)});
            case_tag = "d=3l|j=" + std::to_string(jd) + "|irreducible-binomial";
        } else {
            throw std::logic_error("factor_modulus: impossible gcd(3l, j)");
        }
    } else {
        throw VerificationError("factor_modulus: d is not one of 1, 3, l, 3l");
    }

    // scale back to the lambda class and raise multiplicities to p^s
    FactorTable table;
    table.target = Poly::binomial(F, n, lambda);
    table.case_tag = case_tag;
    table.consta = ConstaTarget{n, lambda, loglam};
    const bool scaled = !F->is_one(c);
    for (auto& e : raw) {
        Poly fac = scaled ? monic_hat(scale_substitute(e.factor, c)) : e.factor;
        std::string prov = case_tag + "; " + e.provenance;
        if (scaled) prov += " (x -> c x, c = xi^" + std::to_string(kc) + ")";
        table.entries.push_back({std::move(fac), ps, std::move(prov)});
    }
    table.sort_canonical();
    table.verify();  // hard product identity
    for (const auto& e : table.entries)
        if (e.multiplicity != ps) throw VerificationError("factor_modulus: multiplicity != p^s");
    return table;
}

}  // namespace constacode

#endif  // CONSTACODE_FACTORIZER_HPP
