#include "charp/field_tower.hpp"
#include "charp/random.hpp"
#include "doctest.h"

using namespace charp;

namespace {

TowerPtr gf4_tower(std::vector<std::string> layers = {}, std::int64_t prec = 16) {
    return FieldTower::make(2, FiniteFieldBase{FqField::make(2, 2)}, std::move(layers), prec);
}

TowerPtr rat_tower(std::uint32_t p, std::vector<std::string> vars,
                   std::vector<std::string> layers = {}) {
    return FieldTower::make(p, RationalFunctionBase{std::move(vars)}, std::move(layers), 16);
}

}  // namespace

TEST_CASE("tower construction and p-rank bookkeeping") {
    CHECK(gf4_tower()->p_rank() == 0);  // perfect base field, empty p-basis
    auto t2 = gf4_tower({"t1", "t2"});
    CHECK(t2->p_rank() == 2);
    CHECK(t2->basis_name(0) == "t1");
    CHECK(t2->basis_name(1) == "t2");
    auto t3 = rat_tower(3, {"b1", "b2"}, {"t"});
    CHECK(t3->p_rank() == 3);
    CHECK(t3->basis_name(0) == "b1");
    CHECK(t3->basis_name(2) == "t");

    CHECK_THROWS_AS(FieldTower::make(6, RationalFunctionBase{{"b"}}, {}, 16), DomainError);
    CHECK_THROWS_AS(rat_tower(2, {"b", "b"}), DomainError);
    CHECK_THROWS_AS(rat_tower(2, {"b"}, {"b"}), DomainError);
    CHECK_THROWS_AS(rat_tower(2, {"w"}), DomainError);  // reserved
    CHECK_THROWS_AS(FieldTower::make(2, RationalFunctionBase{{"b"}}, {}, 0), DomainError);
}

TEST_CASE("arithmetic matches the small worked identities") {
    auto T = gf4_tower({"t"});
    FieldElement t = T->basis_element(0);
    FieldElement one = T->one();
    RandomSource rng(3);
    FieldElement x = random_tower_element(T, rng);
    CHECK(x + T->zero() == x);
    CHECK((one + t) * (one + t) == one + t * t);
    FieldElement tagged = t + T->big_o(1, 5);
    FieldElement moved = tagged * t.pow(-1);
    CHECK(moved == one + T->big_o(1, 4));
}

TEST_CASE("inversion: exact cases and tagged series") {
    auto F5 = FieldTower::make(5, FiniteFieldBase{FqField::make(5, 1)}, {"t"}, 16);
    FieldElement one = F5->one();
    FieldElement t = F5->basis_element(0);
    CHECK(one.inv() == one);
    FieldElement g = (one - t).inv(4);
    FieldElement expect = one + t + t * t + t * t * t + F5->big_o(1, 4);
    CHECK(g == expect);
    CHECK((one - t) * g == one + F5->big_o(1, 4));

    auto K = rat_tower(2, {"b"});
    FieldElement b = K->basis_element(0);
    FieldElement y = (b * b + b).inv();
    CHECK(y.is_exact());
    CHECK(y * (b * b + b) == K->one());

    CHECK_THROWS_AS(K->zero().inv(), DomainError);
    CHECK_THROWS_AS(t.inv(0), DomainError);  // zero-precision request
    CHECK_THROWS_AS(F5->big_o(1, 3).inv(), PrecisionError);
}

TEST_CASE("frobenius and p-th roots") {
    auto T = gf4_tower({"t"});
    RandomSource rng(5);
    for (int i = 0; i < 50; ++i) {
        FieldElement x = random_tower_element(T, rng);
        auto r = x.frobenius().pth_root();
        REQUIRE(r.has_value());
        CHECK(*r == x);
    }
    // Frobenius is a ring homomorphism.
    for (int i = 0; i < 50; ++i) {
        FieldElement x = random_tower_element(T, rng);
        FieldElement y = random_tower_element(T, rng);
        CHECK((x + y).frobenius() == x.frobenius() + y.frobenius());
        CHECK((x * y).frobenius() == x.frobenius() * y.frobenius());
    }
    auto K = rat_tower(2, {"b"});
    CHECK_FALSE(K->basis_element(0).pth_root().has_value());
    FieldElement w = T->generator();
    CHECK(*w.pth_root() == w * w);
}

TEST_CASE("ring axioms on random exact elements") {
    auto T = rat_tower(3, {"b"}, {"t"});
    RandomSource rng(17);
    for (int i = 0; i < 25; ++i) {
        FieldElement x = random_tower_element(T, rng, -3, 3);
        FieldElement y = random_tower_element(T, rng, -3, 3);
        FieldElement z = random_tower_element(T, rng, -3, 3);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
    }
}

TEST_CASE("p-component decomposition: worked examples") {
    auto K = rat_tower(2, {"b"});
    FieldElement b = K->basis_element(0);
    SUBCASE("prime-field input is pure theta zero") {
        auto d = p_component_decompose(K->one());
        CHECK(d.components().size() == 1);
        CHECK(d.theta_zero() == K->one());
    }
    SUBCASE("b^3 + b = (b+1)^2 b") {
        auto d = p_component_decompose(b.pow(3) + b);
        CHECK(d.theta_zero().is_zero());
        CHECK(d.component({1}) == b + K->one());
        CHECK(d.reassemble() == b.pow(3) + b);
    }
    SUBCASE("a t^-1 over GF(4)((t)) decomposes through sqrt(a)") {
        auto T = gf4_tower({"t"});
        FieldElement w = T->generator();
        FieldElement t = T->basis_element(0);
        auto d = p_component_decompose(w * t.pow(-1));
        CHECK(d.theta_zero().is_zero());
        CHECK(d.component({1}) == *w.pth_root() * t.pow(-1));
        CHECK(d.reassemble() == w * t.pow(-1));
    }
}

TEST_CASE("decomposition round-trips on random exact elements") {
    for (auto tower : {rat_tower(2, {"b"}, {"t"}), rat_tower(3, {"b1", "b2"}, {"t"}),
                       gf4_tower({"t1", "t2"})}) {
        RandomSource rng(23);
        for (int i = 0; i < 20; ++i) {
            FieldElement x = random_tower_element(tower, rng, -4, 4);
            auto d = p_component_decompose(x);
            CHECK(d.reassemble() == x);
            // Uniqueness: decomposing a reassembled decomposition is stable.
            auto d2 = p_component_decompose(d.reassemble());
            CHECK(d2.components().size() == d.components().size());
            for (auto& [th, c] : d.components()) CHECK(d2.component(th) == c);
        }
    }
}

TEST_CASE("decomposition of tagged inputs keeps the stored part") {
    auto T = gf4_tower({"t"});
    FieldElement t = T->basis_element(0);
    FieldElement x = t.pow(-2) + T->one() + T->big_o(1, 3);
    auto d = p_component_decompose(x);
    // Reassembly agrees with the input modulo the tag.
    FieldElement back = d.reassemble();
    CHECK(back.laurent().terms.size() == x.laurent().terms.size());
    CHECK_THROWS_AS(p_component_decompose(T->big_o(1, 0)), PrecisionError);
}

TEST_CASE("partial derivatives") {
    auto T = FieldTower::make(3, FiniteFieldBase{FqField::make(3, 1)}, {"t"}, 16);
    FieldElement t = T->basis_element(0);
    CHECK((t * t + t.pow(5)).partial(0) ==
          T->from_int(2) * t + T->from_int(2) * t.pow(4));
    RandomSource rng(29);
    auto K = rat_tower(3, {"b1", "b2"}, {"t"});
    for (int i = 0; i < 20; ++i) {
        FieldElement v = random_tower_element(K, rng, -3, 3);
        CHECK(v.frobenius().partial(0).is_zero());  // derivations kill p-th powers
        CHECK(v.frobenius().partial(2).is_zero());
    }
    FieldElement b1 = K->basis_element(0), b2 = K->basis_element(1);
    CHECK((b1 * b2).partial(0) == b2);
    CHECK_THROWS_AS(b1.partial(5), DomainError);
    // Precision drops by one on the differentiated layer.
    FieldElement tagged = K->basis_element(2).pow(2) + K->big_o(1, 7);
    CHECK(tagged.partial(2).laurent().precision == 6);
}

TEST_CASE("precision contract: higher default precision refines, never changes") {
    auto lo = gf4_tower({"t"}, 6);
    auto hi = gf4_tower({"t"}, 12);
    FieldElement a_lo = (lo->one() - lo->basis_element(0)).inv();
    FieldElement a_hi = (hi->one() - hi->basis_element(0)).inv();
    const LaurentPoly& L_lo = a_lo.laurent();
    const LaurentPoly& L_hi = a_hi.laurent();
    REQUIRE(L_lo.precision == 6);
    REQUIRE(L_hi.precision == 12);
    for (auto& term : L_lo.terms) {
        bool found = false;
        for (auto& ht : L_hi.terms)
            if (ht.exp == term.exp && ht.coeff == term.coeff) found = true;
        CHECK(found);
    }
}

TEST_CASE("division tracks the divisor's precision") {
    auto T = gf4_tower({"t"});
    FieldElement t = T->basis_element(0);
    FieldElement y = T->one() + t + T->big_o(1, 4);
    FieldElement q = t / y;  // determined modulo t^5 only
    REQUIRE(q.level() == 1);
    CHECK(q.laurent().precision == 5);
    CHECK((q * y).laurent().precision == 5);
    // Leading coefficients agree with the exact computation.
    FieldElement exact = FieldElement::div(t, T->one() + t, 5);
    for (auto& term : q.laurent().terms) {
        bool found = false;
        for (auto& e : exact.laurent().terms)
            if (e.exp == term.exp && e.coeff == term.coeff) found = true;
        CHECK(found);
    }
}

TEST_CASE("inner-layer tags ride through arithmetic") {
    auto T = FieldTower::make(2, FiniteFieldBase{FqField::make(2, 2)}, {"t1", "t2"}, 16);
    FieldElement t1 = T->basis_element(0);
    FieldElement t2 = T->basis_element(1);
    FieldElement inner = t1 + T->big_o(1, 3);  // known mod t1^3
    FieldElement x = inner * t2.pow(-2);
    CHECK(x.known_to_layer_precision(1));
    CHECK_FALSE(x.known_to_layer_precision(4));
    FieldElement sq = x * x;
    // Generic products only know the cross-term bound min(3+1, 3+1) = 4 ...
    CHECK(sq.laurent().terms[0].exp == -4);
    CHECK(sq.laurent().terms[0].coeff.laurent().precision == 4);
    // ... while the p-th power map knows the tail is also raised to the p.
    FieldElement fr = x.frobenius();
    CHECK(fr.laurent().terms[0].coeff.laurent().precision == 6);
}

TEST_CASE("operations reject mixed towers") {
    auto a = gf4_tower({"t"});
    auto b = rat_tower(2, {"b"});
    CHECK_THROWS_AS(a->one() + b->one(), MismatchError);
    auto c = gf4_tower({"s"});
    CHECK_THROWS_AS(a->one() * c->basis_element(0), MismatchError);
}

TEST_CASE("sub-towers and retower round trips") {
    auto T = gf4_tower({"t1", "t2"});
    auto S = T->sub_tower(1);
    CHECK(S->p_rank() == 1);
    RandomSource rng(31);
    FieldElement x = random_tower_element(S, rng);
    FieldElement lifted = x.retower(T);
    CHECK(lifted.tower() == T);
    CHECK(lifted.retower(S) == x);
}

TEST_CASE("finite-field trace wrapper") {
    auto f4 = FqField::make(2, 2);
    auto f2 = FqField::make(2, 1);
    Fq w(f4, f4->generator());
    CHECK(field_trace_finite(w, f2) == Fq(f2, 1));
    CHECK(field_trace_finite(Fq(f4, 1), f2) == Fq(f2, 0));
    CHECK(field_trace_finite(w, f4) == w);
}
