/**
 * @file selfdual.hpp
 * @brief Self-dual cyclic codes of length 3*l*2^s over F_{2^m}: reciprocal
 *        factor pairing, the exponent criterion, closed-form counts, and
 *        enumeration.
 *
 * The census computes its count two independent ways — the case-dispatched
 * closed formula and (2^s+1)^{#pairs} from the actual reciprocal partition —
 * and refuses to return if they disagree. The factor-level pairing itself is
 * cross-checked against the coset-level reciprocal pairing, so a mislabeled
 * family cannot slip through.
 */
#ifndef CONSTACODE_SELFDUAL_HPP
#define CONSTACODE_SELFDUAL_HPP

#include <memory>
#include <string>
#include <vector>

#include "constacode/codes.hpp"

namespace constacode {

/// Partition of a cyclic factor table into self-reciprocal factors and
/// reciprocal pairs (i, j) with i < j.
struct ReciprocalPartition {
    std::vector<std::size_t> self_reciprocal;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

namespace detail_selfdual {

inline std::string pairing_case_name(const CosetFamily& fam) {
    switch (fam.tag) {
        case CosetCase::QOne:
            return std::string("q=1(3)|f-") + (fam.f % 2 == 0 ? "even" : "odd");
        case CosetCase::QTwoEven:
            return std::string("q=2(3)|f=2t|t-") + ((fam.f / 2) % 2 == 0 ? "even" : "odd");
        case CosetCase::QTwoOdd:
            return "q=2(3)|f-odd";
    }
    return "?";
}

}  // namespace detail_selfdual

/// Pair the factors of x^{3l 2^s} - 1 by the reciprocal map, then cross-check
/// the result against the coset-level reciprocal pairing of the labeled
/// family. Factor-level and coset-level structure must agree exactly.
inline ReciprocalPartition pair_factors(const CodeParams& params, const FieldPtr& F, const FactorTable& table) {
    if (!table.consta || !F->is_one(table.consta->lambda))
        throw std::invalid_argument("pair_factors: the table must target the cyclic modulus x^n - 1");

    ReciprocalPartition part;
    std::vector<std::size_t> partner(table.entries.size(), SIZE_MAX);
    for (std::size_t i = 0; i < table.entries.size(); ++i) {
        const Poly r = reciprocal(table.entries[i].factor);
        for (std::size_t j = 0; j < table.entries.size(); ++j)
            if (table.entries[j].factor == r) partner[i] = j;
        if (partner[i] == SIZE_MAX) throw VerificationError("pair_factors: reciprocal factor not in the table");
    }
    for (std::size_t i = 0; i < table.entries.size(); ++i) {
        if (partner[partner[i]] != i) throw VerificationError("pair_factors: reciprocal map is not an involution");
        if (partner[i] == i)
            part.self_reciprocal.push_back(i);
        else if (i < partner[i])
            part.pairs.emplace_back(i, partner[i]);
    }

    // coset-level cross-check: the minimal polynomial of every labeled coset
    // must pair exactly the way its reciprocal coset does
    const u64 q = F->size_u64();
    const auto fam = cosets_mod_3l(q, params.l, special_primitive_root(params.l));
    const auto polys = minimal_polys_mod_3l(F, fam);
    const std::string case_name = detail_selfdual::pairing_case_name(fam);
    if (polys.size() != table.entries.size())
        throw VerificationError("pair_factors: factor count disagrees with the coset family (" + case_name + ")");

    const auto entry_of = [&](const Poly& m) -> std::size_t {
        for (std::size_t i = 0; i < table.entries.size(); ++i)
            if (table.entries[i].factor == m) return i;
        throw VerificationError("pair_factors: coset minimal polynomial missing from the table (" + case_name + ")");
    };
    for (const auto& lc : fam.cosets) {
        const Poly* mine = nullptr;
        for (const auto& [lb, m] : polys)
            if (lb == lc.label) mine = &m;
        const auto& rlabel = fam.containing(reciprocal_coset(lc.coset).rep).label;
        const Poly* theirs = nullptr;
        for (const auto& [lb, m] : polys)
            if (lb == rlabel) theirs = &m;
        const std::size_t i = entry_of(*mine);
        const std::size_t j = entry_of(*theirs);
        if (partner[i] != j)
            throw VerificationError("pair_factors: factor pairing of " + label_name(lc.label) +
                                    " disagrees with its reciprocal coset " + label_name(rlabel) + " (" +
                                    case_name + ")");
    }
    return part;
}

/// Exponent criterion: self-dual iff every self-reciprocal factor carries
/// exponent 2^{s-1} and every reciprocal pair's exponents sum to 2^s.
inline bool is_selfdual(const CodeHandle& h, const ReciprocalPartition& part) {
    if (h.params.p != 2)
        throw std::invalid_argument("is_selfdual: self-dual cyclic codes of this length require p = 2");
    const u64 ps = h.params.ps();
    for (std::size_t i : part.self_reciprocal)
        if (2 * h.exponents[i] != ps) return false;
    for (const auto& [i, j] : part.pairs)
        if (h.exponents[i] + h.exponents[j] != ps) return false;
    return true;
}

/// The census: counts computed by the closed formula and by the partition.
struct SelfDualCensus {
    CodeParams params;
    std::string case_tag;
    u64 f = 0;
    u64 e = 0;
    u128 formula_count = 0;
    u128 partition_count = 0;
    std::shared_ptr<const FactorTable> table;
    ReciprocalPartition partition;
};

inline SelfDualCensus selfdual_census(const CodeParams& params, const FieldPtr& F) {
    params.validate();
    if (params.p != 2)
        throw std::invalid_argument("selfdual_census: self-dual cyclic codes of this length exist only for p = 2");
    SelfDualCensus c;
    c.params = params;
    c.table = std::make_shared<FactorTable>(factor_modulus(params, F, F->one()));
    c.partition = pair_factors(params, F, *c.table);

    const u64 q = F->size_u64();
    const u64 qmod3 = (params.m % 2 == 0) ? 1 : 2;  // 2^m mod 3 from the parity of m
    if (q % 3 != qmod3) throw VerificationError("selfdual_census: q mod 3 disagrees with the parity of m");
    c.f = mult_order_mod(q % params.l, params.l);
    c.e = (params.l - 1) / c.f;
    const u128 base = u128(params.ps()) + 1;  // 2^s + 1
    const auto power = [&](u64 exp) {
        u128 r = 1;
        for (u64 i = 0; i < exp; ++i) r *= base;
        return r;
    };

    if (qmod3 == 1) {
        if (c.f % 2 == 0) {
            c.case_tag = "q=1(3)|f-even";
            c.formula_count = power(c.e + 1);
        } else {
            if (c.e % 2 != 0) throw VerificationError("selfdual_census: f odd forces e even");
            c.case_tag = "q=1(3)|f-odd";
            c.formula_count = power(3 * c.e / 2 + 1);
        }
    } else {
        if (c.f % 2 == 0) {
            const u64 t = c.f / 2;
            if (t % 2 == 0) {
                c.case_tag = "q=2(3)|f=2t|t-even";
                c.formula_count = power(c.e);
            } else {
                c.case_tag = "q=2(3)|f=2t|t-odd";
                c.formula_count = 1;
            }
        } else {
            if (c.e % 2 != 0) throw VerificationError("selfdual_census: f odd forces e even");
            c.case_tag = "q=2(3)|f-odd";
            c.formula_count = power(c.e);
        }
    }

    c.partition_count = power(u64(c.partition.pairs.size()));
    if (c.formula_count != c.partition_count)
        throw VerificationError("selfdual_census: formula count " + to_string_u128(c.formula_count) +
                                " != partition count " + to_string_u128(c.partition_count) + " (" + c.case_tag +
                                ")");
    return c;
}

/// Materialize every self-dual cyclic code: exponent 2^{s-1} on each
/// self-reciprocal factor, a free exponent on one member of each pair.
inline std::vector<CodeHandle> selfdual_enumerate(const SelfDualCensus& census) {
    const u64 ps = census.params.ps();
    const u64 half = ps / 2;
    std::vector<CodeHandle> out;
    if (census.partition_count > u128(10'000'000))
        throw CapacityError("selfdual_enumerate: census too large to materialize");

    std::vector<u64> deltas(census.partition.pairs.size(), 0);
    while (true) {
        std::vector<u64> exps(census.table->entries.size(), 0);
        for (std::size_t i : census.partition.self_reciprocal) exps[i] = half;
        for (std::size_t t = 0; t < deltas.size(); ++t) {
            exps[census.partition.pairs[t].first] = deltas[t];
            exps[census.partition.pairs[t].second] = ps - deltas[t];
        }
        CodeHandle h{census.params, census.table->target.field()->one(), census.table, std::move(exps)};
        if (!is_selfdual(h, census.partition))
            throw VerificationError("selfdual_enumerate: constructed handle fails the exponent criterion");
        if (2 * h.dimension() != census.params.n())
            throw VerificationError("selfdual_enumerate: self-dual code without dimension n/2");
        out.push_back(std::move(h));

        std::size_t t = deltas.size();
        bool advanced = false;
        while (t > 0) {
            --t;
            if (deltas[t] < ps) {
                ++deltas[t];
                std::fill(deltas.begin() + t + 1, deltas.end(), 0);
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    if (u128(out.size()) != census.partition_count)
        throw VerificationError("selfdual_enumerate: enumeration size disagrees with the census count");
    return out;
}

}  // namespace constacode

#endif  // CONSTACODE_SELFDUAL_HPP
