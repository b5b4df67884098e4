#include <regex>

#include "charp/cli.hpp"
#include "charp/expr.hpp"
#include "charp/hp_groups.hpp"
#include "charp/random.hpp"
#include "doctest.h"

using namespace charp;

TEST_CASE("tower descriptors") {
    auto t = parse_tower("GF(4)((t))");
    CHECK(t->p() == 2);
    CHECK(t->p_rank() == 1);
    CHECK(t->default_precision() == 16);
    auto t2 = parse_tower("GF(9)((t1))((t2)) P=24");
    CHECK(t2->p() == 3);
    CHECK(t2->laurent_count() == 2);
    CHECK(t2->default_precision() == 24);
    auto k = parse_tower("Frac GF(2)[b]");
    CHECK(!k->base_is_finite());
    CHECK(k->p_rank() == 1);
    CHECK_THROWS_AS(parse_tower("GF(6)"), ParseError);
    CHECK_THROWS_AS(parse_tower("GF(4)((t)) garbage"), ParseError);
    // Round trip through the printer.
    auto back = parse_tower(tower_to_string(*t2));
    CHECK(back->same_field(*t2));
}

TEST_CASE("series ring descriptors") {
    auto r = parse_series_ring("GF(5)[[u]][[T]] D=12");
    CHECK(r->has_u());
    CHECK(r->x_count() == 0);
    CHECK(r->truncation() == 12);
    auto r2 = parse_series_ring("GF(5)[[u]][[X, T]] D=12");
    CHECK(r2->x_count() == 1);
    auto r3 = parse_series_ring("GF(2)[[t]] D=16");
    CHECK(!r3->has_u());
    CHECK(r3->var_name(r3->t_index()) == "t");
    auto back = parse_series_ring(series_ring_to_string(*r2));
    CHECK(back->same(*r2));
}

TEST_CASE("expression parsing against constructed values") {
    auto T = parse_tower("GF(4)((t))");
    FieldElement t = T->basis_element(0);
    FieldElement w = T->generator();
    CHECK(parse_element("w + t^-2", T) == w + t.pow(-2));
    CHECK(parse_element("1 + t + O(t^5)", T) == T->one() + t + T->big_o(1, 5));
    CHECK(parse_element("(1+t)*(1+t)", T) == (T->one() + t) * (T->one() + t));
    CHECK(parse_element("t^3 / (1 - t)", T) ==
          FieldElement::div(t.pow(3), T->one() - t));
    CHECK(parse_form("(w + t^-2) * dlog(t)", T) == top_form(w + t.pow(-2)));

    auto T2 = parse_tower("GF(4)((t1))((t2))");
    auto f = parse_form("dlog(t1) ^ dlog(t2)", T2);
    CHECK(f.degree() == 2);
    CHECK(f.coeff({0, 1}).is_one());
    CHECK(parse_form("dlog(t2) ^ dlog(t1)", T2) == -f);

    auto R = parse_series_ring("GF(5)[[u]][[T]] D=12");
    auto Tv = TruncatedSeries::variable(R, R->t_index());
    CHECK(parse_series("T^3", R) == Tv.pow(3));
    auto u = TruncatedSeries::variable(R, R->u_index());
    CHECK(parse_series("T^2 - u", R) == Tv * Tv - u);
}

TEST_CASE("parse errors carry positions") {
    auto T = parse_tower("GF(4)((t))");
    CHECK_THROWS_AS(parse_element("w + s", T), ParseError);
    CHECK_THROWS_AS(parse_element("w + ", T), ParseError);
    CHECK_THROWS_AS(parse_element("w @ t", T), ParseError);
    CHECK_THROWS_AS(parse_form("dlog(t) ^ w", T), ParseError);   // wedge of non-forms
    CHECK_THROWS_AS(parse_form("dlog(t) * dlog(t)", T), ParseError);
    try {
        parse_element("w + s", T);
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("printed values re-parse to equal values") {
    RandomSource rng(3);
    auto T = parse_tower("GF(9)((t))");
    for (int i = 0; i < 40; ++i) {
        FieldElement x = random_tower_element(T, rng, -5, 5);
        CHECK(parse_element(x.to_string(), T) == x);
    }
    auto K = parse_tower("Frac GF(2)[b]((t))");
    for (int i = 0; i < 40; ++i) {
        FieldElement x = random_tower_element(K, rng, -3, 3);
        CHECK(parse_element(x.to_string(), K) == x);
    }
    // Tagged elements round-trip too.
    FieldElement tagged = T->basis_element(0).pow(-2) + T->big_o(1, 4);
    CHECK(parse_element(tagged.to_string(), T) == tagged);
    // Forms.
    for (int i = 0; i < 20; ++i) {
        DifferentialForm f = random_form(K, 1, rng, -2, 2);
        CHECK(parse_form(f.to_string(), K) == f);
    }
    // Series.
    auto R = parse_series_ring("GF(5)[[u]][[X,T]] D=10");
    for (int i = 0; i < 20; ++i) {
        TruncatedSeries s = random_series(R, rng, 6);
        CHECK(parse_series(s.to_string(), R) == s);
    }
}

TEST_CASE("extension descriptors") {
    auto k = parse_tower("Frac GF(2)[b]");
    auto rad = parse_extension("radicial(a, b)", k);
    CHECK(!rad->is_etale());
    CHECK(rad->basis_name(0) == "a");
    auto et = parse_extension("etale(y, y^2 + y + 1)", k);
    CHECK(et->is_etale());
    CHECK(et->degree() == 2);
    CHECK_THROWS_AS(parse_extension("radicial(a, c)", k), ParseError);
    CHECK_THROWS_AS(parse_extension("etale(y, y^2)", k), DomainError);  // inseparable
    auto w = parse_ext_form("a * dlog(a)", rad);
    CHECK(w.degree() == 1);
    CHECK(w.coeff({0}) == rad->generator());
}

namespace {

std::string strip_timing(std::string s) {
    static const std::regex timing("\\s*\"timing_ms\": [0-9.e+-]+\n");
    return std::regex_replace(s, timing, "\n");
}

}  // namespace

TEST_CASE("reports are deterministic and carry the documented schema") {
    cli::Request req;
    req.command = "hp-class";
    req.tower = "GF(4)((t))";
    req.form = "(w + t^-2)*dlog(t)";
    req.format = "json";
    auto r1 = cli::run(req);
    auto r2 = cli::run(req);
    CHECK(strip_timing(r1.render("json")) == strip_timing(r2.render("json")));
    auto j = r1.to_json();
    auto it = j.begin();
    CHECK(it.key() == "command");
    CHECK((++it).key() == "decided");
    CHECK((++it).key() == "representative");
    CHECK((++it).key() == "log");
    CHECK((++it).key() == "precision");
    CHECK(j["decided"] == 1);
    CHECK(j["representative"] == "w");
    CHECK(r1.exit_code == 0);
}

TEST_CASE("the precision flag overrides the tower default") {
    cli::Request req;
    req.command = "hp-class";
    req.tower = "GF(4)((t))";
    req.form = "(w + t^-2)*dlog(t)";
    req.precision = 32;
    auto r = cli::run(req);
    CHECK(r.to_json()["precision"] == 32);
    CHECK(r.to_json()["decided"] == 1);
}

TEST_CASE("decision unavailable surfaces as exit code 2") {
    cli::Request req;
    req.command = "hp-class";
    req.tower = "Frac GF(2)[b]";
    req.form = "b * dlog(b)";
    auto r = cli::run(req);
    CHECK(r.exit_code == 2);
    CHECK(r.to_json()["decided"].is_null());
}

TEST_CASE("the verbose reduction log is replayable") {
    cli::Request req;
    req.command = "hp-class";
    req.tower = "GF(4)((t))";
    req.form = "(w + t^-2)*dlog(t)";
    req.verbose = true;
    auto r = cli::run(req);
    CHECK(r.to_json()["log"].size() == 4);
    // Replay through the library: same decision, same representative.
    auto T = parse_tower(req.tower);
    FieldElement lam = T->generator() + T->basis_element(0).pow(-2);
    auto direct = hp_class_coefficient(lam);
    auto replayed = replay_reduction(lam, direct.log, true);
    CHECK(replayed.value == direct.value);
    CHECK(replayed.representative == direct.representative);
}

TEST_CASE("remaining commands dispatch") {
    SUBCASE("trace") {
        cli::Request req;
        req.command = "trace";
        req.tower = "Frac GF(2)[b]";
        req.ext = "radicial(a, b)";
        req.form = "dlog(a)";
        auto r = cli::run(req);
        CHECK(r.to_json()["representative"] == "dlog(b)");
    }
    SUBCASE("reduce-form") {
        cli::Request req;
        req.command = "reduce-form";
        req.tower = "Frac GF(2)[b]";
        req.form = "(b^3 + b) * dlog(b)";
        auto r = cli::run(req);
        CHECK(r.to_json()["representative"] == "0");
    }
    SUBCASE("wprep, wreg, as-solve, hensel") {
        cli::Request req;
        req.command = "wprep";
        req.ring = "GF(5)[[u]][[T]] D=12";
        req.f = "(1+T)*(T-u)";
        auto r = cli::run(req);
        CHECK(r.to_json()["representative"]["k"] == 1);

        cli::Request rreg;
        rreg.command = "wreg";
        rreg.ring = "GF(3)[[X1,X2,T]] D=12";
        rreg.f = "X1*X2";
        auto rr = cli::run(rreg);
        CHECK(rr.to_json()["representative"]["k"] == 3);

        cli::Request ras;
        ras.command = "as-solve";
        ras.ring = "GF(2)[[t]] D=16";
        ras.a = "t";
        ras.order = 16;
        auto ra = cli::run(ras);
        CHECK(ra.to_json()["representative"] == "t + t^2 + t^4 + t^8");

        cli::Request rh;
        rh.command = "hensel";
        rh.ring = "GF(5)[[t]] D=12";
        rh.g = "X^2 - (1+2*t)*X + t^2";
        rh.x0 = "1";
        auto rhr = cli::run(rh);
        CHECK(rhr.exit_code == 0);
    }
    SUBCASE("missing arguments are flagged") {
        cli::Request req;
        req.command = "hp-class";
        CHECK_THROWS_AS(cli::run(req), DomainError);
    }
}
