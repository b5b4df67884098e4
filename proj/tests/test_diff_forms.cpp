#include "charp/diff_forms.hpp"
#include "charp/random.hpp"
#include "doctest.h"

using namespace charp;

namespace {

TowerPtr rank2_tower() {
    return FieldTower::make(3, RationalFunctionBase{{"b1", "b2"}}, {}, 16);
}

DifferentialForm basis_form(const TowerPtr& t, BasisSubset s) {
    const std::uint32_t degree = std::uint32_t(s.size());
    return DifferentialForm::from_terms(TowerFormContext{t}, degree,
                                        {{std::move(s), t->one()}});
}

}  // namespace

TEST_CASE("wedge: antisymmetry and the sign rule") {
    auto T = rank2_tower();
    auto d1 = basis_form(T, {0});
    auto d2 = basis_form(T, {1});
    CHECK(wedge(d1, d1).is_zero());
    RandomSource rng(3);
    DifferentialForm w = random_form(T, 1, rng);
    CHECK(wedge(w, w).is_zero());
    CHECK(wedge(d2, d1) == -wedge(d1, d2));
    FieldElement c = random_tower_element(T, rng);
    CHECK(wedge(basis_form(T, {0}).scale(c), d2) == wedge(d1, d2).scale(c));
}

TEST_CASE("dlog: basis members, p-th powers, multiplicativity") {
    auto K = FieldTower::make(2, RationalFunctionBase{{"b"}}, {}, 16);
    FieldElement b = K->basis_element(0);
    CHECK(dlog(b) == basis_form(K, {0}));
    CHECK(dlog((b + K->one()).frobenius()).is_zero());
    CHECK(dlog(b * b + b).coeff({0}) == (b + K->one()).inv());
    CHECK_THROWS_AS(dlog(K->zero()), DomainError);
    RandomSource rng(7);
    for (int i = 0; i < 30; ++i) {
        FieldElement x = random_tower_element(K, rng);
        FieldElement y = random_tower_element(K, rng);
        if (x.is_zero() || y.is_zero()) continue;
        CHECK(dlog(x * y) == dlog(x) + dlog(y));
        CHECK(dlog(x.frobenius()).is_zero());
    }
}

TEST_CASE("d squares to zero in every degree") {
    auto T = FieldTower::make(2, RationalFunctionBase{{"b"}}, {"t"}, 16);
    RandomSource rng(11);
    for (std::uint32_t deg = 0; deg < 2; ++deg)
        for (int i = 0; i < 20; ++i) {
            DifferentialForm w = random_form(T, deg, rng, -3, 3);
            CHECK(w.d().d().is_zero());
        }
}

TEST_CASE("d of the monomial forms matches the sign formula") {
    auto T = rank2_tower();
    const std::uint32_t p = 3;
    RandomSource rng(13);
    // omega = b^theta dlog(b_1)...(skip i)...: d omega = (-1)^(i+1) theta(i) b^theta dlog(b).
    for (std::uint8_t t1 = 0; t1 < p; ++t1)
        for (std::uint8_t t2 = 0; t2 < p; ++t2)
            for (std::uint32_t skip = 0; skip < 2; ++skip) {
                FieldElement btheta =
                    T->basis_element(0).pow(t1) * T->basis_element(1).pow(t2);
                BasisSubset rest = skip == 0 ? BasisSubset{1} : BasisSubset{0};
                DifferentialForm w = basis_form(T, rest).scale(btheta);
                std::uint32_t theta_i = skip == 0 ? t1 : t2;
                std::int64_t sign = (skip + 2) % 2 == 0 ? 1 : -1;  // (-1)^(i+1), i = skip+1
                FieldElement want =
                    btheta * T->from_int(sign * std::int64_t(theta_i));
                CHECK(w.d().coeff({0, 1}) == want);
            }
}

TEST_CASE("express_in_basis expands dlog products") {
    auto T = rank2_tower();
    FieldElement b1 = T->basis_element(0), b2 = T->basis_element(1);
    SUBCASE("pure basis factors") {
        auto f = express_in_basis(T, {{T->one(), {b1, b2}}}, 2);
        CHECK(f == wedge(dlog(b1), dlog(b2)));
    }
    SUBCASE("multiplicativity pulls out exponents") {
        RandomSource rng(17);
        FieldElement x = random_tower_element(T, rng);
        auto f = express_in_basis(T, {{x, {b1 * b1 * b2}}}, 1);
        DifferentialForm want =
            (basis_form(T, {0}).scale(T->from_int(2)) + basis_form(T, {1})).scale(x);
        CHECK(f == want);
    }
    SUBCASE("series factor produces a tagged coefficient") {
        auto L = FieldTower::make(2, FiniteFieldBase{FqField::make(2, 1)}, {"t"}, 4);
        FieldElement t = L->basis_element(0);
        auto f = express_in_basis(L, {{L->one(), {L->one() + t}}}, 1);
        FieldElement want = t + t * t + t * t * t + L->big_o(1, 4);
        CHECK(f.coeff({0}) == want);
    }
    SUBCASE("additivity and the zero-factor error") {
        RandomSource rng(19);
        FieldElement x = random_tower_element(T, rng);
        FieldElement y1 = b1 + T->one();
        FieldElement y2 = b2 * b2 + b1;
        auto sum = express_in_basis(T, {{x, {y1}}, {x, {y2}}}, 1);
        CHECK(sum == express_in_basis(T, {{x, {y1}}}, 1) +
                         express_in_basis(T, {{x, {y2}}}, 1));
        CHECK_THROWS_AS(express_in_basis(T, {{x, {T->zero()}}}, 1), DomainError);
    }
}

TEST_CASE("reduction modulo exact forms") {
    auto K = FieldTower::make(2, RationalFunctionBase{{"b"}}, {}, 16);
    FieldElement b = K->basis_element(0);
    RandomSource rng(23);
    SUBCASE("exact forms reduce to zero") {
        for (int i = 0; i < 30; ++i) {
            DifferentialForm eta = random_form(K, 0, rng);
            CHECK(reduce_mod_exact(eta.d()).is_zero());
        }
    }
    SUBCASE("pure p-th powers are fixed") {
        FieldElement lam = random_tower_element(K, rng).frobenius();
        CHECK(reduce_mod_exact(top_form(lam)).lambda() == lam);
    }
    SUBCASE("worked example and idempotence") {
        CHECK(reduce_mod_exact(top_form(b.pow(3) + b)).is_zero());
        FieldElement lam = random_tower_element(K, rng);
        FieldElement r1 = reduce_mod_exact(top_form(lam)).lambda();
        CHECK(reduce_mod_exact(top_form(r1)).lambda() == r1);
    }
    SUBCASE("degree and rank guards") {
        CHECK_THROWS_AS(reduce_mod_exact(random_form(K, 0, rng)), DomainError);
        auto perfect = FieldTower::make(2, FiniteFieldBase{FqField::make(2, 2)}, {}, 16);
        DifferentialForm f0(TowerFormContext{perfect}, 0);
        CHECK_THROWS_AS(reduce_mod_exact(f0), DomainError);
    }
}

TEST_CASE("span of the exact forms, both directions") {
    auto T = rank2_tower();
    RandomSource rng(29);
    const std::uint32_t p = 3;
    // Every b^theta dlog(b) with theta != 0 is exact.
    for (std::uint8_t t1 = 0; t1 < p; ++t1)
        for (std::uint8_t t2 = 0; t2 < p; ++t2) {
            if (t1 == 0 && t2 == 0) continue;
            FieldElement c = random_tower_element(T, rng).frobenius();
            FieldElement lam =
                c * T->basis_element(0).pow(t1) * T->basis_element(1).pow(t2);
            CHECK(reduce_mod_exact(top_form(lam)).is_zero());
        }
    // Conversely a vanishing reduction means no theta = 0 component.
    for (int i = 0; i < 30; ++i) {
        FieldElement lam = random_tower_element(T, rng);
        if (reduce_mod_exact(top_form(lam)).is_zero())
            CHECK(p_component_decompose(lam).theta_zero().is_zero());
    }
}

TEST_CASE("inverse Cartier operator at top degree") {
    auto K = FieldTower::make(2, RationalFunctionBase{{"b"}}, {}, 16);
    FieldElement b = K->basis_element(0);
    CHECK(cartier_inverse_top(top_form(K->one())).lambda() == K->one());
    CHECK(cartier_inverse_top(top_form(b)).lambda() == b * b);
    auto F3 = FieldTower::make(3, RationalFunctionBase{{"b"}}, {}, 16);
    FieldElement two = F3->from_int(2);
    CHECK(cartier_inverse_top(top_form(two)).lambda() == two);  // prime field is fixed
}
