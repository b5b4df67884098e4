#include "charp/cli.hpp"

#include <chrono>
#include <sstream>

#include "charp/checks.hpp"
#include "charp/expr.hpp"
#include "charp/hp_groups.hpp"
#include "charp/trace.hpp"

namespace charp::cli {

namespace {

TowerPtr tower_for(const Request& req) {
    if (req.tower.empty()) throw DomainError("missing --tower descriptor");
    TowerPtr t = parse_tower(req.tower);
    if (req.precision) {
        if (*req.precision < 1) throw DomainError("precision must be >= 1");
        t = FieldTower::make(t->p(), t->base(), t->laurent_vars(), *req.precision);
    }
    return t;
}

SeriesRingPtr ring_for(const Request& req) {
    if (req.ring.empty()) throw DomainError("missing --ring descriptor");
    return parse_series_ring(req.ring);
}

json log_of_steps(const std::vector<ReductionStep>& steps) {
    json out = json::array();
    for (auto& s : steps) {
        std::string line = rule_name(s.rule);
        line += " layer=" + std::to_string(s.layer);
        if (s.rule == ReductionStep::Rule::DropNonzeroTheta ||
            s.rule == ReductionStep::Rule::FoldPPower ||
            s.rule == ReductionStep::Rule::RetainUndecidable)
            line += " exp=" + std::to_string(s.exponent);
        out.push_back(line);
    }
    return out;
}

Report class_report(const Request& req, const std::string& command, const HpClassResult& res,
                    std::int64_t precision) {
    Report rep;
    rep.command = command;
    rep.precision = precision;
    if (res.state == Decision::Decided)
        rep.decided = res.value;
    else
        rep.decided = nullptr;
    rep.representative = res.representative.to_string();
    if (req.verbose) rep.log = log_of_steps(res.log);
    if (res.state == Decision::Unavailable) rep.exit_code = 2;
    return rep;
}

Report run_impl(const Request& req) {
    Report rep;
    rep.command = req.command;
    rep.decided = nullptr;

    if (req.command == "hp-class") {
        TowerPtr t = tower_for(req);
        if (req.form.empty()) throw DomainError("missing --form expression");
        DifferentialForm w = parse_form(req.form, t);
        return class_report(req, req.command, hp_class(w), t->default_precision());
    }
    if (req.command == "hp1-class") {
        TowerPtr t = tower_for(req);
        if (req.element.empty()) throw DomainError("missing --element expression");
        FieldElement a = parse_element(req.element, t);
        return class_report(req, req.command, hp1_class(a), t->default_precision());
    }
    if (req.command == "reduce-form") {
        TowerPtr t = tower_for(req);
        if (req.form.empty()) throw DomainError("missing --form expression");
        QuotientFormTop q = reduce_mod_exact(parse_form(req.form, t));
        rep.representative = q.to_string();
        rep.precision = t->default_precision();
        return rep;
    }
    if (req.command == "trace") {
        TowerPtr t = tower_for(req);
        if (req.ext.empty()) throw DomainError("missing --ext descriptor");
        if (req.form.empty()) throw DomainError("missing --form expression");
        ExtensionPtr ext = parse_extension(req.ext, t);
        ExtensionForm w = parse_ext_form(req.form, ext);
        DifferentialForm traced = trace_form(w);
        rep.representative = traced.to_string();
        rep.precision = t->default_precision();
        if (req.verbose && traced.degree() == t->p_rank() && t->p_rank() >= 1)
            rep.log.push_back("reduced-class: " + reduce_mod_exact(traced).to_string());
        return rep;
    }
    if (req.command == "wdiv") {
        SeriesRingPtr r = ring_for(req);
        if (req.f.empty() || req.g.empty()) throw DomainError("wdiv needs --f and --g");
        TruncatedSeries f = parse_series(req.f, r);
        TruncatedSeries g = parse_series(req.g, r);
        std::uint32_t k;
        if (req.k) {
            k = *req.k;
        } else {
            auto reg = regularity_order(f);
            if (!reg) throw DomainError("divisor is not T-regular at this truncation");
            k = *reg;
        }
        auto d = weierstrass_divide(g, f, k);
        rep.representative = json{{"q", d.quotient.to_string()},
                                  {"r", d.remainder.to_string()}};
        rep.precision = r->truncation();
        return rep;
    }
    if (req.command == "wprep") {
        SeriesRingPtr r = ring_for(req);
        if (req.f.empty()) throw DomainError("wprep needs --f");
        auto pf = weierstrass_prepare(parse_series(req.f, r));
        rep.representative = json{{"unit", pf.unit.to_string()},
                                  {"distinguished", pf.distinguished.to_string()},
                                  {"k", pf.order}};
        rep.precision = r->truncation();
        return rep;
    }
    if (req.command == "wreg") {
        SeriesRingPtr r = ring_for(req);
        if (req.f.empty()) throw DomainError("wreg needs --f");
        auto rr = regularize(parse_series(req.f, r));
        rep.representative = json{{"shifts", rr.shifts}, {"k", rr.order}};
        rep.precision = r->truncation();
        return rep;
    }
    if (req.command == "as-solve") {
        SeriesRingPtr r = ring_for(req);
        if (req.a.empty()) throw DomainError("as-solve needs --a");
        std::uint32_t order = req.order.value_or(r->truncation());
        TruncatedSeries b = artin_schreier_solve(parse_series(req.a, r), order);
        rep.representative = b.to_string();
        rep.precision = order;
        return rep;
    }
    if (req.command == "hensel") {
        SeriesRingPtr r = ring_for(req);
        if (req.g.empty() || req.x0.empty()) throw DomainError("hensel needs --g and --x0");
        auto poly = parse_series_poly(req.g, r, req.poly_var);
        TruncatedSeries x0 = parse_series(req.x0, r);
        std::uint32_t order = req.order.value_or(r->truncation());
        TruncatedSeries x = hensel_lift(poly, x0, order);
        rep.representative = x.to_string();
        rep.precision = order;
        return rep;
    }
    if (req.command == "check") {
        if (req.suite.empty()) throw DomainError("check needs a suite name");
        std::string context = !req.tower.empty() ? req.tower : req.ring;
        CheckReport cr = run_check_suite(req.suite, context, req.trials, req.seed);
        std::uint32_t passed = 0, total = 0;
        for (auto& l : cr.lines) {
            passed += l.passed;
            total += l.total;
            rep.log.push_back(l.name + ": " + std::to_string(l.passed) + "/" +
                              std::to_string(l.total));
        }
        rep.decided = cr.all_ok();
        rep.representative = cr.suite + ": " + std::to_string(passed) + "/" +
                             std::to_string(total) + " trials passed";
        rep.precision = req.trials;
        rep.exit_code = cr.all_ok() ? 0 : 1;
        return rep;
    }
    throw DomainError("unknown command '" + req.command + "'");
}

}  // namespace

json Report::to_json() const {
    json j;
    j["command"] = command;
    j["decided"] = decided;
    j["representative"] = representative;
    j["log"] = log;
    j["precision"] = precision;
    j["timing_ms"] = timing_ms;
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    if (decided.is_null())
        os << "decided: (none)\n";
    else
        os << "decided: " << decided.dump() << "\n";
    os << "representative: "
       << (representative.is_string() ? representative.get<std::string>()
                                      : representative.dump())
       << "\n";
    os << "precision: " << precision << "\n";
    for (auto& l : log) os << "  " << l.get<std::string>() << "\n";
    os << "time: " << timing_ms << " ms\n";
    return os.str();
}

std::string Report::render(const std::string& format) const {
    if (format == "json") return to_json().dump(2) + "\n";
    return to_text();
}

Report run(const Request& req) {
    auto start = std::chrono::steady_clock::now();
    Report rep = run_impl(req);
    auto stop = std::chrono::steady_clock::now();
    rep.timing_ms =
        std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count() / 1000.0;
    return rep;
}

}  // namespace charp::cli
