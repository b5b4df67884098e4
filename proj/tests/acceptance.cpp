// Acceptance suite: every release criterion as one pass/fail line, with the
// stated trial counts and time budgets. Exits nonzero if any line fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include "charp/checks.hpp"
#include "charp/expr.hpp"

using namespace charp;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count() /
               1000.0;
    }
};

bool report_ok(const CheckReport& r, std::string& detail) {
    for (auto& l : r.lines) {
        if (!l.ok()) {
            detail += " [" + r.suite + "/" + l.name + ": " + std::to_string(l.passed) + "/" +
                      std::to_string(l.total) + "]";
        }
    }
    return r.all_ok();
}

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(CHARP_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string strip_timing(std::string s) {
    static const std::regex timing(",\n\\s*\"timing_ms\": [0-9.e+-]+");
    return std::regex_replace(s, timing, "");
}

// The documented invocations and their outputs, byte for byte after the
// timing field is removed. README.md shows the same three transcripts.
const char* kHpClassExpected = R"({
  "command": "hp-class",
  "decided": 1,
  "representative": "w",
  "log": [],
  "precision": 16
}
)";

const char* kWdivExpected = R"({
  "command": "wdiv",
  "decided": null,
  "representative": {
    "q": "T",
    "r": "u*T"
  },
  "log": [],
  "precision": 12
}
)";

const char* kCheckExpected = R"({
  "command": "check",
  "decided": true,
  "representative": "lemma-2-2-4: 600/600 trials passed",
  "log": [
    "d-eta-reduces-to-zero: 200/200",
    "theta0-normal-form: 200/200",
    "power-times-db-wedge-is-exact: 200/200"
  ],
  "precision": 200
}
)";

}  // namespace

int main() {
    int failures = 0;
    auto criterion = [&](int id, const std::string& label, double budget_s, auto&& body) {
        Timer t;
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o = {false, std::string(" exception: ") + e.what()};
        }
        double secs = t.seconds();
        bool in_budget = budget_s <= 0 || secs <= budget_s;
        bool pass = o.pass && in_budget;
        if (!pass) ++failures;
        std::printf("%s criterion %d: %s (%.2fs%s)%s\n", pass ? "PASS" : "FAIL", id,
                    label.c_str(), secs,
                    in_budget ? "" : (" > budget " + std::to_string(budget_s) + "s").c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
    };

    criterion(1, "top-degree normal form over rational-function bases, 500 trials", 10.0,
              [&]() -> Outcome {
                  std::string detail;
                  bool ok = true;
                  for (auto desc : {"Frac GF(2)[b]", "Frac GF(3)[b1,b2]"})
                      ok = report_ok(check_lemma_2_2_4(parse_tower(desc), 500, 20260809),
                                     detail) &&
                           ok;
                  return {ok, detail};
              });

    criterion(2, "Laurent-layer class isomorphism round trip, 200 trials per tower", 30.0,
              [&]() -> Outcome {
                  std::string detail;
                  bool ok = true;
                  for (auto desc : {"GF(4)((t))", "GF(4)((t1))((t2))", "GF(9)((t))"})
                      ok = report_ok(check_prop_2_3_4(parse_tower(desc), 200, 20260809),
                                     detail) &&
                           ok;
                  return {ok, detail};
              });

    criterion(3, "degree-0 classes verified exhaustively against the wp image", 1.0,
              [&]() -> Outcome {
                  std::string detail;
                  bool ok = report_ok(check_hp1_base(), detail);
                  return {ok, detail};
              });

    criterion(4, "trace axioms and class surjectivity, 200 trials", 20.0,
              [&]() -> Outcome {
                  std::string detail;
                  bool ok = report_ok(check_trace_axioms(200, 20260809), detail);
                  return {ok, detail};
              });

    criterion(5, "Weierstrass division and preparation, 100 regular divisors", 30.0,
              [&]() -> Outcome {
                  std::string detail;
                  bool ok = report_ok(check_weierstrass(
                                          parse_series_ring("GF(5)[[u]][[X,T]] D=12"), 100,
                                          20260809),
                                      detail);
                  return {ok, detail};
              });

    criterion(6, "series solvers: Artin-Schreier, Hensel, unit p-th roots, 100 each", 10.0,
              [&]() -> Outcome {
                  std::string detail;
                  bool ok = report_ok(check_solvers(100, 20260809), detail);
                  return {ok, detail};
              });

    criterion(7, "d(t^p(1+f)) = t^p df over two towers, 200 trials", 5.0,
              [&]() -> Outcome {
                  std::string detail;
                  bool ok = true;
                  for (auto desc : {"GF(4)((t))", "Frac GF(3)[b]((t))"})
                      ok = report_ok(check_power_shift(parse_tower(desc), 200, 20260809),
                                     detail) &&
                           ok;
                  return {ok, detail};
              });

    criterion(8, "CLI transcripts match the documentation byte for byte", 0.0,
              [&]() -> Outcome {
                  std::string detail;
                  bool ok = true;
                  auto expect = [&](const std::string& args, const char* want,
                                    int want_code) {
                      CliResult r = run_cli(args);
                      if (r.exit_code != want_code) {
                          ok = false;
                          detail += " [exit " + std::to_string(r.exit_code) + " != " +
                                    std::to_string(want_code) + " for: " + args + "]";
                      }
                      if (strip_timing(r.output) != want) {
                          ok = false;
                          detail += " [output mismatch for: " + args + "]";
                      }
                  };
                  expect("hp-class --tower \"GF(4)((t))\" --form \"(w + t^-2)*dlog(t)\" "
                         "--format json",
                         kHpClassExpected, 0);
                  expect("wdiv --ring \"GF(5)[[u]][[T]] D=12\" --f \"T^2-u\" --g \"T^3\" "
                         "--format json",
                         kWdivExpected, 0);
                  expect("check lemma-2-2-4 --tower \"Frac GF(2)[b]\" --trials 200 "
                         "--format json",
                         kCheckExpected, 0);
                  // A class request over a rational-function base is answered
                  // with the reduced representative and exit code 2.
                  CliResult unavailable = run_cli(
                      "hp-class --tower \"Frac GF(2)[b]\" --form \"b*dlog(b)\" --format json");
                  if (unavailable.exit_code != 2) {
                      ok = false;
                      detail += " [expected exit 2 over a rational-function base]";
                  }
                  return {ok, detail};
              });

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
