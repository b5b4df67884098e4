#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "charp/cli.hpp"
#include "charp/errors.hpp"

namespace {

// "-" means: read the expression from stdin.
void expand_stdin(std::string& value) {
    if (value != "-") return;
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    value = buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact kernel for characteristic-p fields: differential forms, "
                 "H_p class decisions, traces and Weierstrass preparation"};
    app.require_subcommand(1);

    charp::cli::Request req;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", req.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_flag("--verbose", req.verbose, "include reduction logs");
    };
    auto add_tower = [&](CLI::App* cmd) {
        cmd->add_option("--tower", req.tower, "tower descriptor, e.g. \"GF(4)((t))\"");
        cmd->add_option("--precision", req.precision, "override the default precision");
    };
    auto add_ring = [&](CLI::App* cmd) {
        cmd->add_option("--ring", req.ring,
                        "series ring descriptor, e.g. \"GF(5)[[u]][[T]] D=12\"");
    };

    auto* hp = app.add_subcommand("hp-class", "decide the class of a top-degree form");
    add_tower(hp);
    hp->add_option("--form", req.form, "form expression (or - for stdin)");
    add_common(hp);

    auto* hp1 = app.add_subcommand("hp1-class", "decide a degree-0 Artin-Schreier class");
    add_tower(hp1);
    hp1->add_option("--element", req.element, "element expression (or - for stdin)");
    add_common(hp1);

    auto* red = app.add_subcommand("reduce-form", "reduce a top form modulo exact forms");
    add_tower(red);
    red->add_option("--form", req.form, "form expression (or - for stdin)");
    add_common(red);

    auto* tr = app.add_subcommand("trace", "trace a form along a finite extension");
    add_tower(tr);
    tr->add_option("--ext", req.ext, "extension: radicial(a, b) or etale(y, y^2+y+1)");
    tr->add_option("--form", req.form, "form over the extension (or - for stdin)");
    add_common(tr);

    auto* wdiv = app.add_subcommand("wdiv", "Weierstrass division g = q f + r");
    add_ring(wdiv);
    wdiv->add_option("--f", req.f, "divisor series");
    wdiv->add_option("--g", req.g, "dividend series (or - for stdin)");
    wdiv->add_option("--k", req.k, "regularity order (default: computed)");
    add_common(wdiv);

    auto* wprep = app.add_subcommand("wprep", "Weierstrass preparation f = u P");
    add_ring(wprep);
    wprep->add_option("--f", req.f, "series to prepare");
    add_common(wprep);

    auto* wreg = app.add_subcommand("wreg", "find a regularizing substitution");
    add_ring(wreg);
    wreg->add_option("--f", req.f, "series to regularize");
    add_common(wreg);

    auto* assolve = app.add_subcommand("as-solve", "solve b - b^p = a in the maximal ideal");
    add_ring(assolve);
    assolve->add_option("--a", req.a, "right-hand side (zero constant term)");
    assolve->add_option("--order", req.order, "solve through this total degree");
    add_common(assolve);

    auto* hensel = app.add_subcommand("hensel", "lift a simple root by Newton iteration");
    add_ring(hensel);
    hensel->add_option("--g", req.g, "polynomial in the lifting variable (or - for stdin)");
    hensel->add_option("--x0", req.x0, "approximate root");
    hensel->add_option("--order", req.order, "lift through this total degree");
    hensel->add_option("--poly-var", req.poly_var, "name of the lifting variable");
    add_common(hensel);

    auto* check = app.add_subcommand("check", "run a named property suite");
    check->add_option("suite", req.suite, "suite name")->required();
    add_tower(check);
    add_ring(check);
    check->add_option("--trials", req.trials, "number of random trials");
    check->add_option("--seed", req.seed, "random seed");
    add_common(check);

    CLI11_PARSE(app, argc, argv);
    req.command = app.get_subcommands().front()->get_name();
    expand_stdin(req.form);
    expand_stdin(req.element);
    expand_stdin(req.f);
    expand_stdin(req.g);
    expand_stdin(req.a);

    try {
        charp::cli::Report rep = charp::cli::run(req);
        std::cout << rep.render(req.format);
        return rep.exit_code;
    } catch (const charp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
