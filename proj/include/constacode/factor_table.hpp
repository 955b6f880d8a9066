/**
 * @file factor_table.hpp
 * @brief Code parameters and the factor-table type shared by the closed-form
 *        factorizer and the brute-force oracle.
 */
#ifndef CONSTACODE_FACTOR_TABLE_HPP
#define CONSTACODE_FACTOR_TABLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "constacode/poly.hpp"

namespace constacode {

/// Parameters of one code length 3*l*p^s over F_{p^m}.
struct CodeParams {
    u64 p = 0;
    std::uint32_t m = 0;
    std::uint32_t s = 0;
    u64 l = 0;

    void validate() const {
        if (!is_prime_u64(p) || p == 3) throw std::invalid_argument("params: p must be a prime different from 3");
        if (!is_prime_u64(l) || l == 3 || l % 2 == 0)
            throw std::invalid_argument("params: l must be an odd prime different from 3");
        if (p == l) throw std::invalid_argument("params: gcd(p, l) must be 1");
        if (m < 1 || s < 1) throw std::invalid_argument("params: m and s must be positive");
        checked_pow_u64(p, m);
        checked_pow_u64(p, s);
        if (3 * l > UINT64_MAX / checked_pow_u64(p, s)) throw CapacityError("params: length overflow");
    }

    u64 q() const { return checked_pow_u64(p, m); }
    u64 ps() const { return checked_pow_u64(p, s); }
    u64 n() const { return 3 * l * ps(); }
    /// Number of equivalence classes: gcd(q-1, 3*l*p^s) = gcd(q-1, 3l).
    u64 d() const { return std::gcd(q() - 1, 3 * l); }

    friend bool operator==(const CodeParams& a, const CodeParams& b) {
        return a.p == b.p && a.m == b.m && a.s == b.s && a.l == b.l;
    }
};

struct FactorEntry {
    Poly factor;        // monic irreducible
    u64 multiplicity;   // p^s for every constacyclic modulus here
    std::string provenance;  // which dispatch case and coset produced it
};

/// Metadata present when the factored target is x^n - lambda.
struct ConstaTarget {
    u64 n = 0;
    FE lambda;
    u64 lambda_log = 0;  // discrete log of lambda base xi
};

struct FactorTable {
    Poly target;  // the exact polynomial the entries multiply to
    std::string case_tag;
    std::optional<ConstaTarget> consta;
    std::vector<FactorEntry> entries;  // canonically sorted

    void sort_canonical() {
        std::sort(entries.begin(), entries.end(),
                  [](const FactorEntry& a, const FactorEntry& b) { return poly_less(a.factor, b.factor); });
    }

    /// Exact product identity: prod factor^multiplicity = target. Hard check.
    void verify() const {
        const FieldPtr& F = target.field();
        Poly prod = Poly::constant(F, F->one());
        for (const auto& e : entries) prod = prod * e.factor.pow(e.multiplicity);
        if (prod != target) throw VerificationError("factor table does not multiply back to its target");
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (!entries[i].factor.is_monic()) throw VerificationError("factor table entry is not monic");
            for (std::size_t j = i + 1; j < entries.size(); ++j)
                if (entries[i].factor == entries[j].factor)
                    throw VerificationError("factor table has duplicate entries");
        }
    }

    /// Same factors with the same multiplicities (provenance ignored).
    bool same_factors(const FactorTable& o) const {
        if (entries.size() != o.entries.size()) return false;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].factor != o.entries[i].factor) return false;
            if (entries[i].multiplicity != o.entries[i].multiplicity) return false;
        }
        return true;
    }

    u64 total_degree() const {
        u64 t = 0;
        for (const auto& e : entries) t += u64(e.factor.degree()) * e.multiplicity;
        return t;
    }
};

}  // namespace constacode

#endif  // CONSTACODE_FACTOR_TABLE_HPP
