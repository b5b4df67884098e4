#include "charp/weierstrass.hpp"

#include "charp/random.hpp"
#include "doctest.h"

using namespace charp;

namespace {

SeriesRingPtr f5_u_ring(std::uint32_t d = 12) {
    return SeriesRing::make(FqField::make(5, 1), "u", {}, "T", d);
}

}  // namespace

TEST_CASE("ring construction and guards") {
    CHECK_THROWS_AS(SeriesRing::make(FqField::make(2, 1), std::nullopt, {}, "T", 0),
                    DomainError);
    CHECK_THROWS_AS(SeriesRing::make(FqField::make(2, 1), "u", {"u"}, "T", 8), DomainError);
    auto r = SeriesRing::make(FqField::make(5, 1), "u", {"X"}, "T", 12);
    CHECK(r->nvars() == 3);
    CHECK(r->var_name(r->t_index()) == "T");
}

TEST_CASE("regularity order") {
    auto R = f5_u_ring();
    auto u = TruncatedSeries::variable(R, R->u_index());
    auto T = TruncatedSeries::variable(R, R->t_index());
    CHECK(regularity_order(T.pow(3)) == 3);
    CHECK(regularity_order(T * T - u) == 2);
    CHECK(!regularity_order(u * T));
    CHECK(regularity_order(TruncatedSeries::from_int(R, 2)) == 0);
}

TEST_CASE("division: worked examples and failure modes") {
    auto R = f5_u_ring();
    auto u = TruncatedSeries::variable(R, R->u_index());
    auto T = TruncatedSeries::variable(R, R->t_index());
    auto f = T * T - u;
    SUBCASE("g = f") {
        auto d = weierstrass_divide(f, f, 2);
        CHECK(d.quotient.is_one());
        CHECK(d.remainder.is_zero());
    }
    SUBCASE("T^3 by T^2 - u") {
        auto d = weierstrass_divide(T.pow(3), f, 2);
        CHECK(d.quotient == T);
        CHECK(d.remainder == u * T);
    }
    SUBCASE("already reduced dividends pass through") {
        auto g = u * T + u.pow(2);
        auto d = weierstrass_divide(g, f, 2);
        CHECK(d.quotient.is_zero());
        CHECK(d.remainder == g);
    }
    SUBCASE("wrong regularity order is rejected") {
        CHECK_THROWS_AS(weierstrass_divide(T, f, 1), DomainError);
        CHECK_THROWS_AS(weierstrass_divide(T, u * T, 1), DomainError);
    }
}

TEST_CASE("preparation: worked examples") {
    auto R = f5_u_ring();
    auto u = TruncatedSeries::variable(R, R->u_index());
    auto T = TruncatedSeries::variable(R, R->t_index());
    auto one = TruncatedSeries::from_int(R, 1);
    SUBCASE("a monomial is its own preparation") {
        auto pf = weierstrass_prepare(T.pow(3));
        CHECK(pf.unit.is_one());
        CHECK(pf.distinguished == T.pow(3));
        CHECK(pf.order == 3);
    }
    SUBCASE("already distinguished input") {
        auto pf = weierstrass_prepare(T * T - u);
        CHECK(pf.unit.is_one());
        CHECK(pf.distinguished == T * T - u);
    }
    SUBCASE("a unit times a distinguished factor") {
        auto f = (one + T) * (T - u);
        auto pf = weierstrass_prepare(f);
        CHECK(pf.order == 1);
        CHECK(pf.unit * pf.distinguished == f);
        CHECK(pf.unit.constant_term() == 1);
        CHECK(pf.distinguished.degree_in_t() == 1);
    }
    SUBCASE("not regular") {
        CHECK_THROWS_AS(weierstrass_prepare(u * T), DomainError);
    }
}

TEST_CASE("regularize: worked examples") {
    auto R3 = SeriesRing::make(FqField::make(3, 1), std::nullopt, {"X1", "X2"}, "T", 12);
    auto X1 = TruncatedSeries::variable(R3, R3->x_index(0));
    auto X2 = TruncatedSeries::variable(R3, R3->x_index(1));
    auto T = TruncatedSeries::variable(R3, R3->t_index());
    SUBCASE("already regular input keeps the identity substitution") {
        auto r = regularize(T.pow(2) + X1);
        CHECK(r.shifts == std::vector<std::uint32_t>{0, 0});
        CHECK(r.order == 2);
    }
    SUBCASE("a single variable regularizes with the first shift") {
        auto r = regularize(X1);
        CHECK(r.shifts[0] == 1);
        CHECK(r.order == 1);
    }
    SUBCASE("X1 X2 needs distinct powers") {
        auto r = regularize(X1 * X2);
        CHECK(r.shifts == std::vector<std::uint32_t>{1, 2});
        CHECK(r.order == 3);
    }
    SUBCASE("substituted result really is regular") {
        RandomSource rng(3);
        for (int i = 0; i < 20; ++i) {
            TruncatedSeries f = random_series(R3, rng, 6);
            if (f.is_zero()) continue;
            try {
                auto r = regularize(f);
                TruncatedSeries g = f;
                for (std::uint32_t v = 0; v < 2; ++v)
                    if (r.shifts[v]) g = g.shift_x_by_t_power(v, r.shifts[v]);
                CHECK(regularity_order(g) == r.order);
            } catch (const TruncationTooSmall&) {
                // acceptable outcome for unlucky inputs
            }
        }
    }
    SUBCASE("truncation too small is reported") {
        auto tiny = SeriesRing::make(FqField::make(3, 1), std::nullopt, {"X1", "X2"}, "T", 3);
        auto x1 = TruncatedSeries::variable(tiny, tiny->x_index(0));
        auto x2 = TruncatedSeries::variable(tiny, tiny->x_index(1));
        CHECK_THROWS_AS(regularize(x1 * x2), TruncationTooSmall);
    }
    SUBCASE("vanishing modulo the maximal ideal is rejected") {
        auto R = f5_u_ring();
        auto u = TruncatedSeries::variable(R, R->u_index());
        auto T5 = TruncatedSeries::variable(R, R->t_index());
        CHECK_THROWS_AS(regularize(u * T5), DomainError);
    }
}

TEST_CASE("Artin-Schreier solver") {
    auto R = SeriesRing::make(FqField::make(2, 1), std::nullopt, {}, "t", 16);
    auto t = TruncatedSeries::variable(R, R->t_index());
    SUBCASE("zero input") { CHECK(artin_schreier_solve(TruncatedSeries(R), 16).is_zero()); }
    SUBCASE("the geometric solution for a = t") {
        auto b = artin_schreier_solve(t, 16);
        CHECK(b == t + t.pow(2) + t.pow(4) + t.pow(8));
        CHECK((b - b * b).truncate_at(16) == t);
    }
    SUBCASE("solves random right-hand sides to the requested order") {
        RandomSource rng(5);
        for (auto p : {2u, 3u}) {
            auto ring = SeriesRing::make(FqField::make(p, 1), std::nullopt, {}, "t", 16);
            for (int i = 0; i < 25; ++i) {
                TruncatedSeries a = random_series(ring, rng, 8, 1);
                TruncatedSeries b = artin_schreier_solve(a, 16);
                CHECK(b.constant_term() == 0);
                CHECK((b - b.pow(p)).truncate_at(16) == a.truncate_at(16));
            }
        }
    }
    SUBCASE("unit constant terms are rejected") {
        CHECK_THROWS_AS(artin_schreier_solve(TruncatedSeries::from_int(R, 1) + t, 16),
                        DomainError);
    }
}

TEST_CASE("Hensel lifting") {
    auto R = SeriesRing::make(FqField::make(5, 1), std::nullopt, {}, "t", 12);
    auto t = TruncatedSeries::variable(R, R->t_index());
    auto one = TruncatedSeries::from_int(R, 1);
    std::vector<TruncatedSeries> g = {t * t, -(one + t.scalar_mul(2)), one};
    SUBCASE("the quadratic splits with the right congruences") {
        auto x = hensel_lift(g, one, 12);
        CHECK(poly_eval(g, x).is_zero());
        CHECK(x.constant_term() == 1);
        auto x2 = hensel_lift(g, t * t, 12);
        CHECK(x * x2 == t * t);          // Vieta: product of the roots
        CHECK(x + x2 == one + t.scalar_mul(2));  // Vieta: sum of the roots
    }
    SUBCASE("linear polynomials return their root") {
        TruncatedSeries c = t.pow(3) + one;
        std::vector<TruncatedSeries> lin = {-c, one};
        CHECK(hensel_lift(lin, c, 12) == c);
    }
    SUBCASE("non-simple roots are rejected") {
        std::vector<TruncatedSeries> sq = {t.pow(2), TruncatedSeries(R), one};  // X^2 + t^2
        CHECK_THROWS_AS(hensel_lift(sq, TruncatedSeries(R), 12), NotSimpleRoot);
    }
    SUBCASE("x0 must be an approximate root") {
        CHECK_THROWS_AS(hensel_lift(g, t.scalar_mul(3) + one.scalar_mul(2), 12), DomainError);
    }
}

TEST_CASE("unit congruence solver") {
    auto R = SeriesRing::make(FqField::make(2, 2), std::nullopt, {}, "t", 12);
    auto t = TruncatedSeries::variable(R, R->t_index());
    auto one = TruncatedSeries::from_int(R, 1);
    SUBCASE("u = 1") { CHECK(unit_pth_root(one) == one); }
    SUBCASE("1 + t^2 is the square of 1 + t") {
        auto v = unit_pth_root(one + t * t);
        REQUIRE(v.has_value());
        CHECK(*v == one + t);
    }
    SUBCASE("odd exponents obstruct the root") {
        CHECK(!unit_pth_root(one + t.pow(3)).has_value());
    }
    SUBCASE("sampled p-th powers are always recovered") {
        auto rep = unit_group_congruence_check(R, 2, 60, 99);
        CHECK(rep.total == 60);
        CHECK(rep.successes == 60);
        CHECK(rep.failures.empty());
    }
}

TEST_CASE("series helpers: T-split and the (m,X)-adic order") {
    auto R = SeriesRing::make(FqField::make(5, 1), "u", {"X"}, "T", 12);
    RandomSource rng(9);
    auto T = TruncatedSeries::variable(R, R->t_index());
    for (int i = 0; i < 15; ++i) {
        TruncatedSeries s = random_series(R, rng, 8);
        std::uint32_t k = 1 + std::uint32_t(rng.below(4));
        TruncatedSeries low, high;
        s.split_t(k, low, high);
        CHECK(low + high * T.pow(k) == s);
        CHECK(low.degree_in_t() < k);
    }
    auto u = TruncatedSeries::variable(R, R->u_index());
    auto X = TruncatedSeries::variable(R, R->x_index(0));
    CHECK((u * X * T).m_order() == 2);
    CHECK(T.pow(5).m_order() == 0);
    CHECK(TruncatedSeries(R).m_order() == 12);
}

TEST_CASE("division agrees across schedules and truncations") {
    auto R = SeriesRing::make(FqField::make(5, 1), "u", {"X"}, "T", 12);
    RandomSource rng(7);
    for (int i = 0; i < 25; ++i) {
        std::uint32_t k = std::uint32_t(rng.below(4));
        TruncatedSeries f = random_regular_series(R, k, rng);
        TruncatedSeries g = random_series(R, rng, 8);
        auto d1 = weierstrass_divide(g, f, k, DivisionSchedule::WholeResidual);
        auto d2 = weierstrass_divide(g, f, k, DivisionSchedule::GradedByOrder);
        CHECK(d1.quotient == d2.quotient);
        CHECK(d1.remainder == d2.remainder);
        CHECK(d1.quotient * f + d1.remainder == g);
        if (k > 0) CHECK(d1.remainder.degree_in_t() < k);
    }
}
