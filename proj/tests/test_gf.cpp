#include <catch2/catch_amalgamated.hpp>

#include "constacode/gf.hpp"

using namespace constacode;

namespace {

// independent check used to freeze the F_4 modulus: a monic quadratic over
// F_2 is irreducible iff it has no root
std::vector<std::vector<std::uint32_t>> irreducible_quadratics_f2() {
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t c0 = 0; c0 < 2; ++c0)
        for (std::uint32_t c1 = 0; c1 < 2; ++c1) {
            bool has_root = false;
            for (std::uint32_t x = 0; x < 2; ++x)
                if (((x * x + c1 * x + c0) % 2) == 0) has_root = true;
            if (!has_root) out.push_back({c0, c1, 1});
        }
    return out;
}

}  // namespace

TEST_CASE("prime field construction") {
    auto F2 = Field::make(2, 1);
    REQUIRE(F2->size() == 2);
    REQUIRE(F2->prime_modulus() == std::vector<std::uint32_t>{0, 1});
    REQUIRE(F2->xi() == F2->one());

    auto F3 = Field::make(3, 1);
    // xi = 2: 2^1 != 1 and 2^2 = 1 in F_3
    REQUIRE(F3->xi() == FE{2});
    REQUIRE(F3->mul(FE{2}, FE{2}) == F3->one());
    REQUIRE(F3->order(FE{2}) == 2);
}

TEST_CASE("F_4 has the unique irreducible quadratic as modulus") {
    const auto irr = irreducible_quadratics_f2();
    REQUIRE(irr.size() == 1);
    REQUIRE(irr[0] == std::vector<std::uint32_t>{1, 1, 1});
    auto F4 = Field::make(2, 2);
    REQUIRE(F4->prime_modulus() == irr[0]);
    REQUIRE(F4->order(F4->xi()) == 3);
    // mul(xi, xi^2) = 1
    REQUIRE(F4->mul(F4->xi(), F4->pow(F4->xi(), 2)) == F4->one());
}

TEST_CASE("element order examples") {
    auto F11 = Field::make(11, 1);
    REQUIRE(F11->order(F11->one()) == 1);
    // 4^1=4, 4^2=5, 4^3=9, 4^4=3, 4^5=1 mod 11
    REQUIRE(F11->order(FE{4}) == 5);
    REQUIRE_THROWS_AS(F11->order(F11->zero()), std::invalid_argument);
}

TEST_CASE("inverses and context checks") {
    auto F7 = Field::make(7, 1);
    REQUIRE(F7->inv(F7->one()) == F7->one());
    REQUIRE(F7->mul(F7->inv(FE{3}), FE{3}) == F7->one());
    REQUIRE_THROWS_AS(F7->inv(F7->zero()), std::invalid_argument);
    auto F4 = Field::make(2, 2);
    REQUIRE_THROWS_AS(F7->add(F7->one(), F4->one()), std::invalid_argument);
}

TEST_CASE("construction errors") {
    REQUIRE_THROWS_AS(Field::make(6, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(Field::make(2, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(Field::make(2, 25), CapacityError);
}

TEST_CASE("extensions") {
    auto F2 = Field::make(2, 1);
    auto F4 = Field::extend(F2, 2);
    REQUIRE(F4->size() == 4);
    REQUIRE(F4->embed(F2->one()) == F4->one());

    // F_16 = extend(F_2, 4): x^5 - 1 splits since 5 | 2^4 - 1
    auto F16 = Field::extend(F2, 4);
    REQUIRE(F16->size() == 16);
    auto eta = F16->unity_root(5);
    REQUIRE(F16->order(eta) == 5);

    // F_64 over F_4: primitive 9th roots of unity exist (9 | 63)
    auto F4m = Field::make(2, 2);
    auto F64 = Field::extend(F4m, 3);
    REQUIRE(F64->size() == 64);
    auto w = F64->unity_root(9);
    REQUIRE(F64->order(w) == 9);
}

TEST_CASE("frobenius permutes the roots of a base-coefficient cubic") {
    auto F4 = Field::make(2, 2);
    auto F64 = Field::extend(F4, 3);
    const FE xi_emb = F64->embed(F4->xi());
    // find the roots of z^3 = xi by scanning in canonical order
    std::vector<FE> roots;
    for (u64 r = 0; r < 64; ++r) {
        FE z = F64->element_at(r);
        if (F64->pow(z, 3) == xi_emb) roots.push_back(z);
    }
    REQUIRE(roots.size() == 3);
    for (const auto& z : roots) {
        FE img = F64->frobenius(z);  // z^4
        REQUIRE(F64->pow(img, 3) == xi_emb);
        REQUIRE(img != z);
    }
}

TEST_CASE("fermat identity exhaustively for q <= 64") {
    const std::vector<std::pair<u64, std::uint32_t>> grid = {
        {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1},
        {13, 1}, {2, 4}, {5, 2}, {3, 3}, {2, 5}, {7, 2}, {2, 6},
    };
    for (auto [p, m] : grid) {
        auto F = Field::make(p, m);
        const u64 q = F->size_u64();
        for (u64 r = 1; r < q; ++r) {
            REQUIRE(F->is_one(F->pow(F->element_at(r), q - 1)));
        }
        REQUIRE(F->order(F->xi()) == q - 1);
    }
}

TEST_CASE("embedding is a ring homomorphism, exhaustive for q <= 16, k <= 3") {
    const std::vector<std::pair<u64, std::uint32_t>> bases = {{2, 1}, {3, 1}, {2, 2}, {5, 1},
                                                              {7, 1}, {2, 3}, {3, 2}, {13, 1},
                                                              {2, 4}};
    for (auto [p, m] : bases) {
        auto B = Field::make(p, m);
        for (std::uint32_t k = 2; k <= 3; ++k) {
            if (checked_pow_u128(B->size_u64(), k) > (1u << 14)) continue;
            auto E = Field::extend(B, k);
            const u64 qb = B->size_u64();
            for (u64 i = 0; i < qb; ++i) {
                for (u64 j = 0; j < qb; ++j) {
                    FE a = B->element_at(i), b = B->element_at(j);
                    REQUIRE(E->embed(B->add(a, b)) == E->add(E->embed(a), E->embed(b)));
                    REQUIRE(E->embed(B->mul(a, b)) == E->mul(E->embed(a), E->embed(b)));
                }
            }
        }
    }
}

TEST_CASE("construction is deterministic") {
    auto A = Field::make(3, 3);
    auto B = Field::make(3, 3);
    REQUIRE(A->prime_modulus() == B->prime_modulus());
    REQUIRE(A->xi() == B->xi());

    auto E1 = Field::extend(A, 2);
    auto E2 = Field::extend(B, 2);
    REQUIRE(E1->tower_modulus().size() == E2->tower_modulus().size());
    for (std::size_t i = 0; i < E1->tower_modulus().size(); ++i)
        REQUIRE(E1->tower_modulus()[i] == E2->tower_modulus()[i]);
}

TEST_CASE("pinned construction validates its inputs") {
    auto F = Field::make_pinned(2, 2, {1, 1, 1}, {0, 1});
    REQUIRE(F->xi() == FE{0, 1});
    REQUIRE_THROWS_AS(Field::make_pinned(2, 2, {1, 0, 1}, {0, 1}), std::invalid_argument);  // (y+1)^2
    REQUIRE_THROWS_AS(Field::make_pinned(2, 2, {1, 1, 1}, {1, 0}), std::invalid_argument);  // order 1
}

TEST_CASE("dlog round-trips through xi powers") {
    for (auto [p, m] : std::vector<std::pair<u64, std::uint32_t>>{{2, 4}, {3, 2}, {11, 1}, {31, 1}}) {
        auto F = Field::make(p, m);
        const u64 q = F->size_u64();
        for (u64 r = 1; r < q; ++r) {
            FE a = F->element_at(r);
            REQUIRE(F->pow(F->xi(), F->dlog(a)) == a);
        }
    }
}

TEST_CASE("pth root inverts the p-power map") {
    auto F = Field::make(3, 2);
    for (u64 r = 0; r < 9; ++r) {
        FE a = F->element_at(r);
        REQUIRE(F->pth_root(F->pow(a, 3)) == a);
    }
}
