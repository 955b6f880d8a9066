#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "constacode/oracle.hpp"

using namespace constacode;

TEST_CASE("squarefree decomposition") {
    auto F2 = Field::make(2, 1);

    SECTION("pure square over F_2") {
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2
        Poly f(F2, {F2->one(), F2->zero(), F2->one(), F2->zero(), F2->one()});
        auto sf = oracle::squarefree_decomposition(f);
        REQUIRE(sf.size() == 1);
        REQUIRE(sf[0].second == 2);
        REQUIRE(sf[0].first == Poly(F2, {F2->one(), F2->one(), F2->one()}));
    }

    SECTION("mixed multiplicities over F_3") {
        auto F3 = Field::make(3, 1);
        Poly a(F3, {FE{1}, FE{1}});            // x + 1
        Poly b(F3, {FE{2}, FE{1}});            // x + 2
        Poly f = a.pow(3) * b.pow(2);
        auto sf = oracle::squarefree_decomposition(f);
        u64 total = 0;
        for (const auto& [u, e] : sf) total += u64(u.degree()) * e;
        REQUIRE(total == 5);
        std::set<u64> mults;
        for (const auto& [u, e] : sf) mults.insert(e);
        REQUIRE(mults == std::set<u64>{2, 3});
    }
}

TEST_CASE("brute factorization examples") {
    SECTION("x^2 - 1 over F_3") {
        auto F3 = Field::make(3, 1);
        auto t = oracle::brute_factor(Poly::binomial(F3, 2, F3->one()));
        REQUIRE(t.entries.size() == 2);
        REQUIRE(t.entries[0].factor == Poly(F3, {FE{1}, FE{1}}));  // x + 1 = x - 2
        REQUIRE(t.entries[1].factor == Poly(F3, {FE{2}, FE{1}}));  // x + 2 = x - 1
        REQUIRE(t.entries[0].multiplicity == 1);
    }

    SECTION("x^30 - 1 over F_2: five distinct irreducibles, each squared") {
        auto F2 = Field::make(2, 1);
        auto t = oracle::brute_factor(Poly::binomial(F2, 30, F2->one()));
        REQUIRE(t.entries.size() == 5);
        std::multiset<int> degs;
        for (const auto& e : t.entries) {
            REQUIRE(e.multiplicity == 2);
            degs.insert(e.factor.degree());
        }
        REQUIRE(degs == std::multiset<int>{1, 2, 4, 4, 4});
    }

    SECTION("factors are irreducible and pairwise coprime") {
        auto F4 = Field::make(2, 2);
        auto t = oracle::brute_factor(Poly::binomial(F4, 30, F4->one()));
        for (std::size_t i = 0; i < t.entries.size(); ++i) {
            REQUIRE(oracle::is_irreducible(t.entries[i].factor));
            for (std::size_t j = i + 1; j < t.entries.size(); ++j)
                REQUIRE(t.entries[i].factor.gcd(t.entries[j].factor).is_one());
        }
    }
}

TEST_CASE("equal-degree splitting through a large splitting field") {
    // x^15 - xi^3 over F_31 where 3 | j: three binomial factors of degree 5.
    // F_{31^5} is far beyond the scan limit, so this exercises the
    // deterministic trace-splitting path.
    auto F31 = Field::make(31, 1);
    const FE xi = F31->xi();
    auto t = oracle::brute_factor(Poly::binomial(F31, 15, F31->pow(xi, 3)));
    REQUIRE(t.entries.size() == 3);
    for (const auto& e : t.entries) {
        REQUIRE(e.factor.degree() == 5);
        REQUIRE(e.multiplicity == 1);
        REQUIRE(oracle::is_irreducible(e.factor));
    }
}

TEST_CASE("irreducibility checks at scale") {
    auto F31 = Field::make(31, 1);
    const FE xi = F31->xi();
    // gcd(15, 1) = 1: x^15 - xi is irreducible over F_31
    REQUIRE(oracle::is_irreducible(Poly::binomial(F31, 15, xi)));
    // x^15 - 1 is certainly not
    REQUIRE_FALSE(oracle::is_irreducible(Poly::binomial(F31, 15, F31->one())));

    auto F2 = Field::make(2, 1);
    REQUIRE(oracle::is_irreducible(Poly(F2, {F2->one(), F2->one(), F2->one()})));
    REQUIRE_FALSE(oracle::is_irreducible(Poly(F2, {F2->one(), F2->zero(), F2->one(), F2->zero(), F2->one()})));
}

TEST_CASE("random polynomials factor and multiply back") {
    std::mt19937 rng(41);
    for (auto [p, m] : std::vector<std::pair<u64, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}}) {
        auto F = Field::make(p, m);
        std::uniform_int_distribution<u64> pick(0, F->size_u64() - 1);
        for (int it = 0; it < 25; ++it) {
            const int deg = 2 + it % 9;
            std::vector<FE> c;
            for (int i = 0; i < deg; ++i) c.push_back(F->element_at(pick(rng)));
            c.push_back(F->one());
            Poly f(F, c);
            auto t = oracle::brute_factor(f);  // verifies the product internally
            for (const auto& e : t.entries) REQUIRE(oracle::is_irreducible(e.factor));
            // squaring doubles every multiplicity
            auto t2 = oracle::brute_factor(f * f);
            REQUIRE(t2.entries.size() == t.entries.size());
            for (std::size_t i = 0; i < t.entries.size(); ++i)
                REQUIRE(t2.entries[i].multiplicity == 2 * t.entries[i].multiplicity);
        }
    }
}

TEST_CASE("duality verification") {
    auto F2 = Field::make(2, 1);
    const u64 n = 30;
    const Poly modulus = Poly::binomial(F2, n, F2->one());

    SECTION("zero code and full space") {
        REQUIRE(oracle::verify_code_duality(n, modulus, F2->one(), Poly::constant(F2, F2->one())));
        REQUIRE(oracle::verify_code_duality(n, Poly::constant(F2, F2->one()), F2->one(), modulus));
    }

    SECTION("reciprocal parity-check duals pass; mismatched duals fail") {
        auto t = oracle::brute_factor(modulus);
        // g = product of the first two factors
        Poly g = t.entries[0].factor * t.entries[1].factor;
        Poly h = modulus / g;
        Poly gd = reciprocal(h);
        REQUIRE(oracle::verify_code_duality(n, g, F2->one(), gd));
        // a dual of the wrong dimension fails
        Poly wrong = gd * t.entries[0].factor;
        if (wrong.divides(modulus)) REQUIRE_FALSE(oracle::verify_code_duality(n, g, F2->one(), wrong));
    }

    SECTION("divisibility preconditions are enforced") {
        Poly notdiv(F2, {F2->one(), F2->one(), F2->one()});  // x^2+x+1 does not divide x^30-1? it does…
        // use a genuinely non-dividing polynomial: x^2 + 1 = (x+1)^2 divides x^30-1, so take x^3+x+1
        Poly nondiv(F2, {F2->one(), F2->one(), F2->zero(), F2->one()});
        REQUIRE_FALSE(nondiv.divides(Poly::binomial(F2, 30, F2->one())));
        REQUIRE_THROWS_AS(oracle::verify_code_duality(30, nondiv, F2->one(), Poly::constant(F2, F2->one())),
                          std::invalid_argument);
    }
}

TEST_CASE("exhaustive self-dual enumeration") {
    SECTION("length 30 over F_2: exactly 3 codes out of 243 vectors") {
        CodeParams P{2, 1, 1, 5};
        auto F = Field::make(2, 1);
        auto e = oracle::brute_selfdual_enumerate(P, F);
        REQUIRE(e.table.entries.size() == 5);
        REQUIRE(e.codes.size() == 3);
        for (const auto& w : e.codes) {
            REQUIRE(w.generator.degree() == 15);  // self-dual: dim = n/2
            REQUIRE(oracle::verify_code_duality(P.n(), w.generator, F->one(), w.generator));
        }
    }

    SECTION("length 30 over F_4: exactly 27 codes") {
        CodeParams P{2, 2, 1, 5};
        auto F = Field::make(2, 2);
        auto e = oracle::brute_selfdual_enumerate(P, F);
        REQUIRE(e.codes.size() == 27);
    }

    SECTION("characteristic != 2 is refused") {
        CodeParams P{5, 1, 1, 7};
        auto F = Field::make(5, 1);
        REQUIRE_THROWS_AS(oracle::brute_selfdual_enumerate(P, F), std::invalid_argument);
    }
}

TEST_CASE("generator matrix view") {
    auto F2 = Field::make(2, 1);
    Poly g(F2, {F2->one(), F2->one()});  // x + 1
    oracle::GeneratorMatrixView G{g, 4};
    REQUIRE(G.rows() == 3);
    auto r1 = G.row(1);
    REQUIRE(r1.size() == 4);
    REQUIRE(F2->is_zero(r1[0]));
    REQUIRE(F2->is_one(r1[1]));
    REQUIRE(F2->is_one(r1[2]));
    REQUIRE(F2->is_zero(r1[3]));
}
