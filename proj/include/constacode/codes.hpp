/**
 * @file codes.hpp
 * @brief Constacyclic codes of length 3lp^s as exponent vectors over the
 *        factor table: unit classification, equivalence scalars, streaming
 *        enumeration, and generator/dual synthesis.
 *
 * Duals are computed from first principles (reciprocal of the parity-check
 * polynomial) and then re-expressed over the closed-form factor table of
 * x^n - lambda^{-1}: the dual exponent of factor f must be p^s - e on the
 * reciprocal partner of f. Any mismatch aborts, naming the case tag — this
 * is the computational validation of the closed-form dual expressions.
 */
#ifndef CONSTACODE_CODES_HPP
#define CONSTACODE_CODES_HPP

#include <memory>
#include <utility>
#include <vector>

#include "constacode/factorizer.hpp"

namespace constacode {

/// Unit class of lambda: the unique j in [0, d) with lambda in
/// xi^{j p^s} <xi^d>.
struct UnitClass {
    u64 d = 1;
    u64 j = 0;
};

inline UnitClass classify_unit(const CodeParams& params, const FieldPtr& F, const FE& lambda) {
    params.validate();
    return UnitClass{params.d(), unit_class_index(params, F, lambda)};
}

/// The canonically smallest a = xi^k with a^{3lp^s} lambda = mu. Exists iff
/// lambda and mu share a unit class; otherwise throws std::domain_error.
inline FE equivalence_scalar(const CodeParams& params, const FieldPtr& F, const FE& lambda, const FE& mu) {
    params.validate();
    if (F->is_zero(lambda) || F->is_zero(mu)) throw std::invalid_argument("equivalence_scalar: units required");
    const u64 qm1 = F->group_order_u64();
    if (qm1 == 1) return F->one();
    const u64 delta = (F->dlog(mu) + qm1 - F->dlog(lambda)) % qm1;
    const u64 N = mul_mod((3 * params.l) % qm1, params.ps() % qm1, qm1);
    u64 k;
    try {
        k = solve_linear_congruence(N, delta, qm1);
    } catch (const std::domain_error&) {
        throw std::domain_error("equivalence_scalar: lambda and mu lie in different unit classes");
    }
    const FE a = F->pow(F->xi(), k);
    if (F->mul(F->pow(a, params.n()), lambda) != mu)
        throw VerificationError("equivalence_scalar: candidate fails a^{3lp^s} lambda = mu");
    return a;
}

// ---------------------------------------------------------------------------
// code handles
// ---------------------------------------------------------------------------

/// One lambda-constacyclic code: an exponent vector over the factor table.
struct CodeHandle {
    CodeParams params;
    FE lambda;
    std::shared_ptr<const FactorTable> table;
    std::vector<u64> exponents;  // entry i in [0, p^s], aligned with table->entries

    u64 dimension() const {
        u64 dim = params.n();
        for (std::size_t i = 0; i < exponents.size(); ++i)
            dim -= exponents[i] * u64(table->entries[i].factor.degree());
        return dim;
    }

    Poly generator() const {
        const FieldPtr& F = table->target.field();
        Poly g = Poly::constant(F, F->one());
        for (std::size_t i = 0; i < exponents.size(); ++i)
            if (exponents[i] > 0) g = g * table->entries[i].factor.pow(exponents[i]);
        return g;
    }
};

/// Streams all (p^s + 1)^{#factors} exponent vectors in lexicographic order
/// (last index fastest). The total count never requires materializing.
class CodeEnumerator {
  public:
    CodeEnumerator(CodeParams params, FieldPtr F, FE lambda)
        : params_(params), F_(std::move(F)), lambda_(std::move(lambda)) {
        table_ = std::make_shared<FactorTable>(factor_modulus(params_, F_, lambda_));
        cur_.assign(table_->entries.size(), 0);
    }

    const std::shared_ptr<const FactorTable>& table() const { return table_; }

    u128 total() const {
        u128 t = 1;
        const u128 cap = ~u128(0) >> 1;
        for (const auto& e : table_->entries) {
            if (t > cap / (e.multiplicity + 1)) throw CapacityError("code count exceeds 128 bits");
            t *= (e.multiplicity + 1);
        }
        return t;
    }

    /// Restart the stream from a given exponent vector.
    void seek(const std::vector<u64>& start) {
        if (start.size() != table_->entries.size())
            throw std::invalid_argument("CodeEnumerator::seek: wrong vector length");
        for (std::size_t i = 0; i < start.size(); ++i)
            if (start[i] > table_->entries[i].multiplicity)
                throw std::invalid_argument("CodeEnumerator::seek: exponent out of range");
        cur_ = start;
        done_ = false;
    }

    /// Produce the next handle; false when the stream is exhausted.
    bool next(CodeHandle& out) {
        if (done_) return false;
        out = CodeHandle{params_, lambda_, table_, cur_};
        // advance, last index fastest
        std::size_t i = cur_.size();
        while (i > 0) {
            --i;
            if (cur_[i] < table_->entries[i].multiplicity) {
                ++cur_[i];
                std::fill(cur_.begin() + i + 1, cur_.end(), 0);
                return true;
            }
            if (i == 0) done_ = true;
        }
        if (cur_.empty()) done_ = true;  // single (empty) vector
        return true;
    }

  private:
    CodeParams params_;
    FieldPtr F_;
    FE lambda_;
    std::shared_ptr<const FactorTable> table_;
    std::vector<u64> cur_;
    bool done_ = false;
};

// ---------------------------------------------------------------------------
// duals
// ---------------------------------------------------------------------------

/// Factor tables of x^n - lambda and x^n - lambda^{-1} with the reciprocal
/// partner map between them. Building this asserts that the reciprocal of
/// every factor of x^n - lambda appears among the closed-form factors of
/// x^n - lambda^{-1}, bijectively.
struct DualityContext {
    CodeParams params;
    FieldPtr F;
    FE lambda;
    FE lambda_inv;
    std::shared_ptr<const FactorTable> table;
    std::shared_ptr<const FactorTable> dual_table;
    std::vector<std::size_t> partner;  // index into dual_table->entries
};

inline DualityContext duality_context(const CodeParams& params, const FieldPtr& F, const FE& lambda) {
    DualityContext ctx;
    ctx.params = params;
    ctx.F = F;
    ctx.lambda = lambda;
    ctx.lambda_inv = F->inv(lambda);
    ctx.table = std::make_shared<FactorTable>(factor_modulus(params, F, lambda));
    ctx.dual_table = std::make_shared<FactorTable>(factor_modulus(params, F, ctx.lambda_inv));
    ctx.partner.assign(ctx.table->entries.size(), SIZE_MAX);
    std::vector<bool> hit(ctx.dual_table->entries.size(), false);
    for (std::size_t i = 0; i < ctx.table->entries.size(); ++i) {
        const Poly r = reciprocal(ctx.table->entries[i].factor);
        for (std::size_t t = 0; t < ctx.dual_table->entries.size(); ++t) {
            if (ctx.dual_table->entries[t].factor == r) {
                ctx.partner[i] = t;
                hit[t] = true;
                break;
            }
        }
        if (ctx.partner[i] == SIZE_MAX)
            throw VerificationError("duality_context: reciprocal factor missing from the closed-form dual table (" +
                                    ctx.table->case_tag + ")");
    }
    for (bool h : hit)
        if (!h)
            throw VerificationError("duality_context: dual table has an unmatched factor (" +
                                    ctx.dual_table->case_tag + ")");
    return ctx;
}

/// Generator and dual generator of one code. The dual is the reciprocal of
/// the parity check h = (x^n - lambda)/g, and is additionally required to
/// equal the closed-form expression: exponent p^s - e on each reciprocal
/// partner factor of x^n - lambda^{-1}.
inline std::pair<Poly, Poly> generator_and_dual(const CodeHandle& h, const DualityContext& ctx) {
    const FieldPtr& F = ctx.F;
    const Poly g = h.generator();
    const Poly modulus = Poly::binomial(F, h.params.n(), h.lambda);
    const Poly check = modulus / g;
    const Poly gd = monic_hat(reciprocal(check));

    Poly closed = Poly::constant(F, F->one());
    for (std::size_t i = 0; i < h.exponents.size(); ++i) {
        const u64 de = h.params.ps() - h.exponents[i];
        if (de > 0) closed = closed * ctx.dual_table->entries[ctx.partner[i]].factor.pow(de);
    }
    if (closed != gd)
        throw VerificationError("generator_and_dual: closed-form dual disagrees with reciprocal parity check (" +
                                ctx.table->case_tag + ")");
    return {g, gd};
}

/// Handle of the dual code over the factor table of x^n - lambda^{-1}.
inline CodeHandle dual_handle(const CodeHandle& h, const DualityContext& ctx) {
    std::vector<u64> de(h.exponents.size(), 0);
    for (std::size_t i = 0; i < h.exponents.size(); ++i)
        de[ctx.partner[i]] = h.params.ps() - h.exponents[i];
    return CodeHandle{h.params, ctx.lambda_inv, ctx.dual_table, std::move(de)};
}

}  // namespace constacode

#endif  // CONSTACODE_CODES_HPP
