/**
 * @file oracle.hpp
 * @brief Brute-force ground truth, independent of the closed-form machinery.
 *
 * Factorization works from first principles: squarefree decomposition with
 * p-th-power extraction, a distinct-degree split by Frobenius powers, and for
 * classes holding several equal-degree factors a pass through the splitting
 * field F_{q^i}: enumerate the roots there, group them into Frobenius orbits,
 * and multiply each orbit back into a base-field factor. Root enumeration
 * scans the splitting field when it is small and otherwise splits with trace
 * polynomials over the prime subfield, which stays deterministic.
 *
 * Nothing in this header knows about cyclotomic cosets or the closed-form
 * dispatch; that independence is what makes the cross-checks meaningful.
 */
#ifndef CONSTACODE_ORACLE_HPP
#define CONSTACODE_ORACLE_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "constacode/factor_table.hpp"

namespace constacode::oracle {

/// Field-size threshold below which splitting-field roots are found by a
/// full scan; larger fields use deterministic trace splitting.
inline constexpr u64 kRootScanLimit = u64(1) << 16;

/// Cap on exponent-vector enumeration (see CONSTACODE_CAPACITY).
inline u64 enumeration_budget() {
    if (const char* e = std::getenv("CONSTACODE_CAPACITY")) {
        const u64 parsed = std::strtoull(e, nullptr, 10);
        if (parsed > 0) return parsed * 8;  // scale with the field capacity override
    }
    return u64(10'000'000);
}

// ---------------------------------------------------------------------------
// squarefree decomposition in characteristic p
// ---------------------------------------------------------------------------

/// For f with f' = 0: the unique g with g^p = f.
inline Poly pth_root_poly(const Poly& f) {
    const FieldPtr& F = f.field();
    const u64 p = F->characteristic();
    if (!f.derivative().is_zero()) throw std::invalid_argument("pth_root_poly: derivative is nonzero");
    std::vector<FE> g(f.coeffs().size() / p + 1, F->zero());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (F->is_zero(f.coeffs()[i])) continue;
        if (i % p != 0) throw VerificationError("pth_root_poly: stray coefficient");
        g[i / p] = F->pth_root(f.coeffs()[i]);
    }
    return Poly(F, std::move(g));
}

/// f = prod u_i^{e_i} with the u_i squarefree, pairwise coprime, and e_i the
/// exact multiplicity of every irreducible inside u_i. f must be monic.
inline std::vector<std::pair<Poly, u64>> squarefree_decomposition(const Poly& f) {
    const FieldPtr& F = f.field();
    const u64 p = F->characteristic();
    if (!f.is_monic()) throw std::invalid_argument("squarefree_decomposition: monic input required");
    std::vector<std::pair<Poly, u64>> out;
    if (f.degree() == 0) return out;

    const Poly fp = f.derivative();
    if (fp.is_zero()) {
        for (auto& [u, e] : squarefree_decomposition(pth_root_poly(f))) out.emplace_back(u, e * p);
        return out;
    }

    Poly c = f.gcd(fp);
    Poly w = f / c;
    for (u64 i = 1; w.degree() > 0; ++i) {
        Poly y = w.gcd(c);
        Poly z = w / y;
        if (z.degree() > 0) out.emplace_back(z, i);
        w = std::move(y);
        c = c / w;
    }
    if (c.degree() > 0) {  // leftover multiplicities all divisible by p
        for (auto& [u, e] : squarefree_decomposition(pth_root_poly(c))) out.emplace_back(u, e * p);
    }

    Poly prod = Poly::constant(F, F->one());
    for (const auto& [u, e] : out) prod = prod * u.pow(e);
    if (prod != f) throw VerificationError("squarefree decomposition does not multiply back");
    return out;
}

// ---------------------------------------------------------------------------
// distinct-degree split and irreducibility
// ---------------------------------------------------------------------------

/// Split a squarefree monic u into (product of its degree-i factors, i).
inline std::vector<std::pair<Poly, u64>> distinct_degree_split(const Poly& u0) {
    const FieldPtr& F = u0.field();
    const u64 q = F->size_u64();
    std::vector<std::pair<Poly, u64>> out;
    Poly rem = u0;
    const Poly x = Poly::x(F);
    Poly pw = x;
    for (u64 i = 1; rem.degree() > 0 && 2 * i <= u64(rem.degree()); ++i) {
        pw = pw.modpow(q, rem);
        Poly g = (pw - x).gcd(rem);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            rem = rem / g;
            pw = pw % rem;
        }
    }
    if (rem.degree() > 0) out.emplace_back(rem, u64(rem.degree()));
    return out;
}

/// Deterministic irreducibility: no factor of degree <= deg/2 is detected by
/// the Frobenius fixed-point gcds (a root search in each small extension).
inline bool is_irreducible(const Poly& f0) {
    if (f0.is_zero() || f0.degree() < 1) throw std::invalid_argument("is_irreducible: degree >= 1 required");
    const Poly f = monic_hat(f0);
    const FieldPtr& F = f.field();
    const u64 q = F->size_u64();
    const Poly x = Poly::x(F);
    Poly pw = x;
    for (u64 i = 1; 2 * i <= u64(f.degree()); ++i) {
        pw = pw.modpow(q, f);
        if ((pw - x).gcd(f).degree() > 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// roots in a splitting field
// ---------------------------------------------------------------------------

namespace detail_roots {

/// Trace polynomial sum_{t<M} (beta x)^{p^t} reduced mod u, over the field of
/// u's coefficients; M is that field's degree over F_p.
inline Poly trace_poly_mod(const Poly& u, const FE& beta) {
    const FieldPtr& E = u.field();
    const u64 M = E->degree();
    Poly s = (Poly::x(E).scaled(beta)) % u;
    Poly acc = s;
    for (u64 t = 1; t < M; ++t) {
        s = s.modpow(E->characteristic(), u);
        acc = acc + s;
    }
    return acc;
}

inline void split_to_roots(const Poly& u, std::vector<FE>& roots) {
    const FieldPtr& E = u.field();
    if (u.degree() == 0) return;
    if (u.degree() == 1) {
        roots.push_back(E->neg(monic_hat(u).coeffs()[0]));
        return;
    }
    std::vector<Poly> work{monic_hat(u)};
    const u64 M = E->degree();
    const u64 p = E->characteristic();
    for (u64 j = 0; j < M && !work.empty(); ++j) {
        FE beta = E->zero();
        beta[static_cast<std::size_t>(j)] = 1;
        std::vector<Poly> next;
        for (const Poly& w : work) {
            const Poly tr = trace_poly_mod(w, beta);
            Poly rest = w;
            for (u64 c = 0; c < p && rest.degree() > 0; ++c) {
                Poly piece = (tr - Poly::constant(E, E->from_uint(c))).gcd(rest);
                if (piece.degree() == 0) continue;
                rest = rest / piece;
                if (piece.degree() == 1)
                    roots.push_back(E->neg(piece.coeffs()[0]));
                else
                    next.push_back(piece);
            }
            if (rest.degree() > 0) throw VerificationError("trace splitting left an uncovered piece");
        }
        work = std::move(next);
    }
    if (!work.empty()) throw VerificationError("trace splitting failed to isolate all roots");
}

}  // namespace detail_roots

/// All roots of u inside the extension E of u's field. u must split into
/// distinct linear factors over E.
inline std::vector<FE> roots_in_extension(const Poly& u, const FieldPtr& E) {
    const Poly lifted = u.lift_to(E);
    std::vector<FE> roots;
    if (E->size() <= kRootScanLimit) {
        const u64 Q = E->size_u64();
        for (u64 r = 0; r < Q; ++r) {
            FE z = E->element_at(r);
            if (E->is_zero(lifted.eval(z))) roots.push_back(z);
        }
    } else {
        detail_roots::split_to_roots(lifted, roots);
        std::sort(roots.begin(), roots.end(), fe_less);
    }
    if (roots.size() != std::size_t(u.degree()))
        throw VerificationError("roots_in_extension: expected " + std::to_string(u.degree()) + " roots, found " +
                                std::to_string(roots.size()));
    return roots;
}

// ---------------------------------------------------------------------------
// full factorization
// ---------------------------------------------------------------------------

/// Split a product of r >= 2 irreducible factors, all of degree i, via
/// Frobenius orbits of its roots in the splitting field F_{q^i}.
inline std::vector<Poly> split_equal_degree(const Poly& P, u64 i) {
    const FieldPtr& F = P.field();
    if (u64(P.degree()) == i) return {P};
    const FieldPtr E = Field::extend(F, static_cast<std::uint32_t>(i));
    const auto roots = roots_in_extension(P, E);
    std::vector<Poly> out;
    std::vector<bool> used(roots.size(), false);
    for (std::size_t a = 0; a < roots.size(); ++a) {
        if (used[a]) continue;
        // Frobenius orbit of roots[a] under z -> z^q
        Poly factor = Poly::constant(E, E->one());
        FE z = roots[a];
        u64 orbit = 0;
        do {
            const auto it = std::lower_bound(roots.begin(), roots.end(), z, fe_less);
            if (it == roots.end() || *it != z) throw VerificationError("frobenius orbit left the root set");
            used[static_cast<std::size_t>(it - roots.begin())] = true;
            factor = factor * Poly::x_minus(E, z);
            z = E->frobenius(z);
            ++orbit;
        } while (z != roots[a]);
        if (orbit != i) throw VerificationError("frobenius orbit has unexpected length");
        out.push_back(factor.project_to_base());
    }
    return out;
}

/// Complete irreducible factorization, computed independently of any
/// closed-form prediction. Factors are canonically sorted, and the product
/// identity is verified before returning.
inline FactorTable brute_factor(const Poly& f0) {
    if (f0.is_zero() || f0.degree() < 1) throw std::invalid_argument("brute_factor: degree >= 1 required");
    const Poly f = monic_hat(f0);
    FactorTable table;
    table.target = f;
    table.case_tag = "oracle";

    for (const auto& [u, mult] : squarefree_decomposition(f)) {
        for (const auto& [classprod, deg] : distinct_degree_split(u)) {
            for (auto& factor : split_equal_degree(classprod, deg)) {
                table.entries.push_back({std::move(factor), mult, "oracle degree-" + std::to_string(deg)});
            }
        }
    }
    table.sort_canonical();
    table.verify();
    return table;
}

// ---------------------------------------------------------------------------
// duality by inner products
// ---------------------------------------------------------------------------

/// The k x n generator matrix whose rows are the coefficients of x^i g(x).
struct GeneratorMatrixView {
    Poly g;
    u64 n = 0;

    u64 rows() const { return n - u64(g.degree()); }
    /// Row i as a length-n coefficient vector.
    std::vector<FE> row(u64 i) const {
        const FieldPtr& F = g.field();
        std::vector<FE> r(n, F->zero());
        for (std::size_t t = 0; t < g.coeffs().size(); ++t) r[t + i] = g.coeffs()[t];
        return r;
    }
};

/// Euclidean orthogonality sweep: every row of <g> against every row of
/// <g_dual>, plus the dimension identity. The divisibility preconditions
/// (g | x^n - lambda, g_dual | x^n - lambda^{-1}) are enforced up front.
inline bool verify_code_duality(u64 n, const Poly& g, const FE& lambda, const Poly& g_dual) {
    const FieldPtr& F = g.field();
    if (F->is_zero(lambda)) throw std::invalid_argument("verify_code_duality: lambda must be a unit");
    if (!g.divides(Poly::binomial(F, n, lambda)))
        throw std::invalid_argument("verify_code_duality: g does not divide x^n - lambda");
    if (!g_dual.divides(Poly::binomial(F, n, F->inv(lambda))))
        throw std::invalid_argument("verify_code_duality: g_dual does not divide x^n - lambda^{-1}");
    const GeneratorMatrixView G{g, n}, H{g_dual, n};
    if (G.rows() + H.rows() != n) return false;
    std::vector<std::vector<FE>> grows, hrows;
    for (u64 i = 0; i < G.rows(); ++i) grows.push_back(G.row(i));
    for (u64 j = 0; j < H.rows(); ++j) hrows.push_back(H.row(j));
    for (const auto& ri : grows) {
        for (const auto& rj : hrows) {
            FE acc = F->zero();
            for (u64 t = 0; t < n; ++t) {
                if (F->is_zero(ri[t]) || F->is_zero(rj[t])) continue;
                acc = F->add(acc, F->mul(ri[t], rj[t]));
            }
            if (!F->is_zero(acc)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// exhaustive self-dual enumeration (cyclic case, characteristic 2)
// ---------------------------------------------------------------------------

struct SelfDualWitness {
    std::vector<u64> exponents;  // aligned with the enumeration table entries
    Poly generator;
};

struct SelfDualEnumeration {
    FactorTable table;  // oracle factorization of x^n - 1
    std::vector<SelfDualWitness> codes;
};

/// Enumerate every divisor g of x^n - 1 through exponent vectors over the
/// oracle's factor table and keep those with g = ((x^n-1)/g)^*.
inline SelfDualEnumeration brute_selfdual_enumerate(const CodeParams& params, const FieldPtr& F) {
    params.validate();
    if (params.p != 2)
        throw std::invalid_argument("self-dual cyclic codes of this length exist only in characteristic 2");
    const u64 n = params.n();
    const Poly modulus = Poly::binomial(F, n, F->one());
    SelfDualEnumeration out;
    out.table = brute_factor(modulus);

    u128 total = 1;
    for (const auto& e : out.table.entries) {
        total *= (e.multiplicity + 1);
        if (total > enumeration_budget()) throw CapacityError("brute_selfdual_enumerate: vector budget exceeded");
    }

    std::vector<u64> exps(out.table.entries.size(), 0);
    while (true) {
        Poly g = Poly::constant(F, F->one());
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) g = g * out.table.entries[i].factor.pow(exps[i]);
        const Poly h = modulus / g;
        if (reciprocal(h) == g) out.codes.push_back({exps, g});

        // lexicographic successor, last index fastest
        std::size_t i = exps.size();
        while (i > 0) {
            --i;
            if (exps[i] < out.table.entries[i].multiplicity) {
                ++exps[i];
                std::fill(exps.begin() + i + 1, exps.end(), 0);
                break;
            }
            if (i == 0) return out;
        }
        if (exps.size() == 0) return out;
    }
}

}  // namespace constacode::oracle

#endif  // CONSTACODE_ORACLE_HPP
