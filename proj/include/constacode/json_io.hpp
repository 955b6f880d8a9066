/**
 * @file json_io.hpp
 * @brief JSON forms of the library types. Field elements serialize as
 *        integer coefficient sequences (low degree first), polynomials as
 *        sequences of elements, counts as decimal strings (they can exceed
 *        64 bits). Key order is fixed, so identical inputs give
 *        byte-identical output.
 */
#ifndef CONSTACODE_JSON_IO_HPP
#define CONSTACODE_JSON_IO_HPP

#include <json.hpp>

#include "constacode/cyclotomic.hpp"
#include "constacode/selfdual.hpp"

namespace constacode {

using json = nlohmann::ordered_json;

inline json fe_json(const FE& a) { return json(a); }

inline json poly_json(const Poly& f) {
    json arr = json::array();
    for (const auto& c : f.coeffs()) arr.push_back(fe_json(c));
    return arr;
}

/// {p, m, modulus, xi}: enough to pin a reproducible run.
inline json field_spec_json(const FieldPtr& F) {
    json j;
    j["p"] = F->characteristic();
    j["m"] = F->degree();
    j["modulus"] = json(F->prime_modulus());
    j["xi"] = json(F->xi());
    j["q"] = F->size_u64();
    return j;
}

inline FieldPtr field_from_spec_json(const json& j) {
    const u64 p = j.at("p").get<u64>();
    const std::uint32_t m = j.at("m").get<std::uint32_t>();
    const auto modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    const auto xi = j.at("xi").get<std::vector<std::uint32_t>>();
    return Field::make_pinned(p, m, modulus, xi);
}

inline json params_json(const CodeParams& P) {
    json j;
    j["p"] = P.p;
    j["m"] = P.m;
    j["s"] = P.s;
    j["l"] = P.l;
    j["q"] = P.q();
    j["n"] = P.n();
    j["d"] = P.d();
    return j;
}

inline json coset_family_json(const CosetFamily& fam) {
    json j;
    j["q"] = fam.q;
    j["l"] = fam.l;
    j["case"] = coset_case_name(fam.tag);
    j["g"] = fam.g;
    j["f"] = fam.f;
    j["e"] = fam.e;
    json cosets = json::array();
    for (const auto& lc : fam.cosets) {
        json c;
        c["label"] = label_name(lc.label);
        c["members"] = json(lc.coset.members);
        cosets.push_back(std::move(c));
    }
    j["cosets"] = std::move(cosets);
    return j;
}

inline json factor_table_json(const FactorTable& t) {
    json j;
    if (t.consta) {
        j["n"] = t.consta->n;
        j["lambda_log"] = t.consta->lambda_log;
        j["lambda"] = fe_json(t.consta->lambda);
    }
    j["case"] = t.case_tag;
    json entries = json::array();
    for (const auto& e : t.entries) {
        json ej;
        ej["factor"] = poly_json(e.factor);
        ej["degree"] = e.factor.degree();
        ej["multiplicity"] = e.multiplicity;
        ej["provenance"] = e.provenance;
        entries.push_back(std::move(ej));
    }
    j["entries"] = std::move(entries);
    return j;
}

inline json code_handle_json(const CodeHandle& h, const Poly& g, const Poly& g_dual) {
    json j;
    j["params"] = params_json(h.params);
    j["lambda_log"] = h.table->consta ? h.table->consta->lambda_log : 0;
    j["exponents"] = json(h.exponents);
    j["generator"] = poly_json(g);
    j["dual_generator"] = poly_json(g_dual);
    j["dimension"] = h.dimension();
    return j;
}

inline json census_json(const SelfDualCensus& census, const std::vector<CodeHandle>& handles,
                        std::size_t max_list, const std::optional<u64>& oracle_count) {
    json j;
    j["params"] = params_json(census.params);
    j["case"] = census.case_tag;
    j["f"] = census.f;
    j["e"] = census.e;
    j["formula_count"] = to_string_u128(census.formula_count);
    j["partition_count"] = to_string_u128(census.partition_count);
    if (oracle_count) j["oracle_count"] = *oracle_count;
    j["pairs"] = census.partition.pairs.size();
    j["self_reciprocal"] = census.partition.self_reciprocal.size();
    json hs = json::array();
    const FieldPtr& F = census.table->target.field();
    const u64 n = census.params.n();
    std::size_t emitted = 0;
    for (const auto& h : handles) {
        if (emitted >= max_list) break;
        const Poly g = h.generator();
        const Poly gd = monic_hat(reciprocal(Poly::binomial(F, n, F->one()) / g));
        hs.push_back(code_handle_json(h, g, gd));
        ++emitted;
    }
    j["codes_listed"] = emitted;
    j["codes"] = std::move(hs);
    return j;
}

}  // namespace constacode

#endif  // CONSTACODE_JSON_IO_HPP
