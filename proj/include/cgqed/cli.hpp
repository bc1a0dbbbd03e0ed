#pragma once

// Command-line front end. Exit codes: 0 ok, 1 a check failed, 2 bad flags or
// config, 3 kinematics outside the validity domain. Reports go to `out`,
// messages to `err`. Layouts are documented in docs/cli.md.

#include "cgqed/dirac.hpp"
#include "cgqed/epsx.hpp"
#include "cgqed/quad.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cgqed::cli {

enum ExitCode { ok = 0, check_failed = 1, usage_error = 2, out_of_domain = 3 };

enum class Format { json, csv };

struct RunConfig {
    std::string command;  // selfenergy | vertex
    FourVector p;
    FourVector pp;
    double mass = 1.0;
    std::string part = "total";
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    double fd_step = 1e-3;
    Format format = Format::json;
    std::optional<double> alpha;
    std::string output;  // empty: stdout

    QuadSpec spec() const { return QuadSpec{}.with_tolerance(rel_tol, abs_tol); }
    // empty when valid
    std::string validate() const;
};

bool valid_part(const std::string& command, const std::string& part);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Reporting helpers (report.cpp).
struct Evaluation {
    EpsMatrix value;
    double quad_error = 0.0;
};

Evaluation evaluate(const RunConfig& cfg);  // throws KinematicsOutOfDomain, std::invalid_argument
nlohmann::ordered_json evaluation_json(const RunConfig& cfg, const Evaluation& ev);
std::vector<std::string> csv_header(const std::string& command);
std::vector<std::string> csv_row(const RunConfig& cfg, const Evaluation* ev, const std::string& status);
std::string format_double(double v);  // %.17g
std::string join_csv(const std::vector<std::string>& cells);

// Sweep config (sweep.cpp): flat key = value lines, '#' comments, values of
// the kinematic keys may be comma-separated lists (cartesian product).
struct SweepConfig {
    RunConfig base;
    std::map<std::string, std::vector<double>> axes;  // key -> values
    std::vector<RunConfig> expand() const;
};

SweepConfig parse_sweep_config(const std::string& text);  // throws std::invalid_argument
int run_sweep(const SweepConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace cgqed::cli
