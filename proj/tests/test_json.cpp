#include <catch2/catch_amalgamated.hpp>

#include "constacode/json_io.hpp"
#include "constacode/oracle.hpp"

using namespace constacode;

TEST_CASE("field spec round-trips and pins a run") {
    auto F = Field::make(2, 4);
    const json spec = field_spec_json(F);
    REQUIRE(spec.contains("p"));
    REQUIRE(spec.contains("m"));
    REQUIRE(spec.contains("modulus"));
    REQUIRE(spec.contains("xi"));
    auto G = field_from_spec_json(spec);
    REQUIRE(G->prime_modulus() == F->prime_modulus());
    REQUIRE(G->xi() == F->xi());
    REQUIRE(field_spec_json(G) == spec);
}

TEST_CASE("polynomial form is low-degree-first element sequences") {
    auto F3 = Field::make(3, 1);
    Poly f(F3, {FE{2}, FE{0}, FE{1}});  // x^2 + 2
    const json j = poly_json(f);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 3);
    REQUIRE(j[0] == json(std::vector<std::uint32_t>{2}));
    REQUIRE(j[2] == json(std::vector<std::uint32_t>{1}));
}

TEST_CASE("coset family form carries the labels") {
    auto fam = cosets_mod_3l(2, 5, special_primitive_root(5));
    const json j = coset_family_json(fam);
    REQUIRE(j["case"] == "q=2 mod 3, f even");
    REQUIRE(j["f"] == 4);
    REQUIRE(j["e"] == 1);
    REQUIRE(j["cosets"].size() == 5);
    bool saw_bl = false;
    for (const auto& c : j["cosets"])
        if (c["label"] == "B_l") {
            saw_bl = true;
            REQUIRE(c["members"] == json(std::vector<u64>{5, 10}));
        }
    REQUIRE(saw_bl);
}

TEST_CASE("factor table and handle forms are schema-stable") {
    CodeParams P{2, 2, 1, 5};
    auto F = Field::make(2, 2);
    const FE lam = F->pow(F->xi(), 2);
    const auto table = factor_modulus(P, F, lam);
    const json tj = factor_table_json(table);
    REQUIRE(tj["n"] == 30);
    REQUIRE(tj["lambda_log"] == 2);
    REQUIRE(tj["entries"].size() == table.entries.size());
    for (const auto& e : tj["entries"]) {
        REQUIRE(e.contains("factor"));
        REQUIRE(e.contains("multiplicity"));
        REQUIRE(e.contains("provenance"));
    }

    const auto ctx = duality_context(P, F, lam);
    CodeEnumerator en(P, F, lam);
    CodeHandle h;
    REQUIRE(en.next(h));
    REQUIRE(en.next(h));
    auto [g, gd] = generator_and_dual(h, ctx);
    const json hj = code_handle_json(h, g, gd);
    REQUIRE(hj["params"]["p"] == 2);
    REQUIRE(hj["lambda_log"] == 2);
    REQUIRE(hj["exponents"].is_array());
    REQUIRE(hj["generator"].is_array());
    REQUIRE(hj["dual_generator"].is_array());
    REQUIRE(hj["dimension"].is_number());
}

TEST_CASE("census form reports both counts and the handle list") {
    CodeParams P{2, 1, 1, 5};
    auto F = Field::make(2, 1);
    const auto census = selfdual_census(P, F);
    const auto codes = selfdual_enumerate(census);
    const json j = census_json(census, codes, 64, std::optional<u64>(3));
    REQUIRE(j["formula_count"] == "3");
    REQUIRE(j["partition_count"] == "3");
    REQUIRE(j["oracle_count"] == 3);
    REQUIRE(j["codes"].size() == 3);
    const json truncated = census_json(census, codes, 1, std::nullopt);
    REQUIRE(truncated["codes"].size() == 1);
    REQUIRE(truncated["codes_listed"] == 1);
    REQUIRE_FALSE(truncated.contains("oracle_count"));
}

TEST_CASE("identical inputs give byte-identical serialized output") {
    CodeParams P{11, 1, 1, 5};
    const auto run = [&] {
        auto F = Field::make(11, 1);
        const FE lam = F->pow(F->xi(), 3);
        const auto table = factor_modulus(P, F, lam);
        return factor_table_json(table).dump();
    };
    REQUIRE(run() == run());

    const auto census_run = [&] {
        CodeParams P2{2, 2, 1, 5};
        auto F = Field::make(2, 2);
        const auto census = selfdual_census(P2, F);
        return census_json(census, selfdual_enumerate(census), 64, std::nullopt).dump();
    };
    REQUIRE(census_run() == census_run());
}
