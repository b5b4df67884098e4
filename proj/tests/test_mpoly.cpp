#include "charp/mpoly.hpp"
#include "charp/random.hpp"
#include "doctest.h"

using namespace charp;

TEST_CASE("fractions are stored in canonical reduced form") {
    MPoly b = MPoly::variable(2, 1, 0);
    MPoly one = MPoly::constant(2, 1, 1);
    RatFunc r1(b, b);  // b/b
    RatFunc r2(one, one);
    CHECK(r1 == r2);
    // (b^2+b)/(b+1) reduces to b.
    RatFunc r3(b * b + b, b + one);
    CHECK(r3 == RatFunc(b, one));
}

TEST_CASE("gcd of products has the common factor") {
    RandomSource rng(7);
    for (int i = 0; i < 40; ++i) {
        MPoly f = random_mpoly(3, 2, rng, 2, 3);
        MPoly g = random_mpoly(3, 2, rng, 2, 3);
        MPoly h = random_mpoly(3, 2, rng, 2, 3);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        MPoly d = MPoly::gcd(f * h, g * h);
        // h divides the gcd.
        CHECK_NOTHROW(d.div_exact(MPoly::gcd(h, d)));
        MPoly q = d.div_exact(MPoly::gcd(h, d));
        (void)q;
        // and the gcd divides both products exactly.
        CHECK_NOTHROW((f * h).div_exact(d));
        CHECK_NOTHROW((g * h).div_exact(d));
    }
}

TEST_CASE("derivatives satisfy the quotient rule") {
    RandomSource rng(11);
    for (int i = 0; i < 30; ++i) {
        RatFunc a = random_ratfunc(3, 2, rng);
        RatFunc b = random_ratfunc(3, 2, rng);
        if (b.is_zero()) continue;
        RatFunc q = a * b;
        RatFunc lhs = q.derivative(0);
        RatFunc rhs = a.derivative(0) * b + a * b.derivative(0);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("p-th roots undo p-th powers") {
    RandomSource rng(13);
    for (int i = 0; i < 30; ++i) {
        RatFunc a = random_ratfunc(2, 2, rng);
        RatFunc out;
        CHECK(a.frobenius().pth_root(out));
        CHECK(out == a);
    }
    MPoly b = MPoly::variable(2, 1, 0);
    MPoly out;
    CHECK_FALSE(b.pth_root(out));
}
