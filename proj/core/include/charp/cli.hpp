#ifndef CHARP_CLI_HPP
#define CHARP_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace charp::cli {

using json = nlohmann::ordered_json;

/// One CLI invocation, already flag-parsed.
struct Request {
    std::string command;  // hp-class | hp1-class | reduce-form | trace | wdiv | wprep |
                          // wreg | as-solve | hensel | check
    std::string tower;
    std::string ring;
    std::string form;
    std::string element;
    std::string ext;
    std::string f, g, x0, a;
    std::string suite;
    std::string poly_var = "X";
    std::uint32_t trials = 200;
    std::uint64_t seed = 1;
    std::optional<std::int64_t> precision;
    std::optional<std::uint32_t> order;
    std::optional<std::uint32_t> k;
    bool verbose = false;
    std::string format = "text";  // text | json
};

struct Report {
    std::string command;
    json decided;          // number, bool or null
    json representative;   // string or structured object
    json log = json::array();
    std::int64_t precision = 0;
    double timing_ms = 0.0;
    int exit_code = 0;

    json to_json() const;
    std::string to_text() const;
    std::string render(const std::string& format) const;
};

/// Dispatch a request to the kernel. Throws charp::Error subclasses on
/// malformed input; DecisionUnavailable is NOT an error and comes back as a
/// report with exit_code 2.
Report run(const Request& req);

}  // namespace charp::cli

#endif
