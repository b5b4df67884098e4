#include <set>

#include "charp/fq.hpp"
#include "doctest.h"

using namespace charp;

TEST_CASE("field construction validates its inputs") {
    CHECK_THROWS_AS(FqField::make(4, 1), DomainError);          // not prime
    CHECK_THROWS_AS(FqField::make(2, {1, 0, 1}), DomainError);  // (x+1)^2
    CHECK_THROWS_AS(FqField::make(2, {1, 1, 0}), DomainError);  // not monic
    CHECK(FqField::make(2, {1, 1, 1})->q() == 4);
    CHECK(FqField::make(3, 2)->q() == 9);
}

TEST_CASE("canonical moduli are the first irreducible in counting order") {
    CHECK(FqField::make(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(FqField::make(2, 3)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(FqField::make(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(FqField::make(5, 2)->modulus() == std::vector<std::uint32_t>{2, 0, 1});
}

TEST_CASE("F_4 arithmetic and Frobenius") {
    auto f4 = FqField::make(2, 2);
    fq_repr w = f4->generator();
    CHECK(f4->mul(w, w) == f4->add(w, f4->one()));  // w^2 = w + 1
    CHECK(f4->pow(w, 3) == f4->one());
    CHECK(f4->inv(w) == f4->mul(w, w));
    CHECK(f4->pth_root(f4->frobenius(w)) == w);
    CHECK(f4->pth_root(w) == f4->mul(w, w));  // sqrt(w) = w^2
    CHECK_THROWS_AS(f4->inv(0), DomainError);
}

TEST_CASE("traces to the prime field") {
    auto f4 = FqField::make(2, 2);
    CHECK(f4->trace_to_prime(f4->one()) == 0);
    CHECK(f4->trace_to_prime(f4->generator()) == 1);
    auto f2 = FqField::make(2, 1);
    CHECK(f4->trace_to(f4->generator(), f2) == 1);
    // Identity extension: trace is the identity.
    CHECK(f4->trace_to(f4->generator(), f4) == f4->generator());
}

TEST_CASE("subfield traces require compatible degrees") {
    auto f8 = FqField::make(2, 3);
    auto f4 = FqField::make(2, 2);
    CHECK_THROWS_AS(f8->trace_to(f8->generator(), f4), DomainError);
}

TEST_CASE("traces compose through intermediate subfields") {
    auto f16 = FqField::make(2, 4);
    auto f4 = FqField::make(2, 2);
    auto f2 = FqField::make(2, 1);
    for (std::uint64_t i = 0; i < 16; ++i) {
        fq_repr x = f16->element(i);
        fq_repr through = f4->trace_to(f16->trace_to(x, f4), f2);
        CHECK(through == f16->trace_to(x, f2));
        CHECK(f16->coord(through, 0) == f16->trace_to_prime(x));
    }
    auto f81 = FqField::make(3, 4);
    auto f9 = FqField::make(3, 2);
    auto f3 = FqField::make(3, 1);
    for (std::uint64_t i = 0; i < 81; ++i) {
        fq_repr x = f81->element(i);
        CHECK(f9->trace_to(f81->trace_to(x, f9), f3) == f81->trace_to(x, f3));
    }
}

TEST_CASE("x lies in the Artin-Schreier image iff its absolute trace vanishes") {
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 2}, {2, 3}, {3, 2}, {5, 2}}) {
        auto f = FqField::make(p, e);
        std::set<fq_repr> image;
        for (std::uint64_t i = 0; i < f->q(); ++i) {
            fq_repr x = f->element(i);
            image.insert(f->sub(x, f->frobenius(x)));
        }
        CHECK(image.size() == f->q() / p);
        for (std::uint64_t i = 0; i < f->q(); ++i) {
            fq_repr a = f->element(i);
            CHECK((f->trace_to_prime(a) == 0) == (image.count(a) > 0));
        }
    }
}
