#include "cgqed/cli.hpp"

#include "cgqed/errors.hpp"

#include <boost/algorithm/string.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cgqed::cli {

namespace {

// list-valued keys, in expansion order (last varies fastest)
const std::vector<std::string> kAxes = {"mass", "p0", "px", "py", "pz", "pp0", "ppx", "ppy", "ppz"};

double parse_number(const std::string& v, int line) {
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != v.size())
        throw std::invalid_argument("line " + std::to_string(line) + ": '" + v + "' is not a number");
    return x;
}

void set_axis(RunConfig& c, const std::string& key, double v) {
    if (key == "mass") c.mass = v;
    else if (key == "p0") c.p.t = v;
    else if (key == "px") c.p.x = v;
    else if (key == "py") c.p.y = v;
    else if (key == "pz") c.p.z = v;
    else if (key == "pp0") c.pp.t = v;
    else if (key == "ppx") c.pp.x = v;
    else if (key == "ppy") c.pp.y = v;
    else if (key == "ppz") c.pp.z = v;
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& text) {
    SweepConfig cfg;
    cfg.base.command = "selfenergy";
    cfg.base.format = Format::csv;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    std::map<std::string, int> seen;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw.substr(0, raw.find('#'));
        boost::algorithm::trim(s);
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("line " + std::to_string(line) + ": expected key = value");
        std::string key = s.substr(0, eq), value = s.substr(eq + 1);
        boost::algorithm::trim(key);
        boost::algorithm::trim(value);
        if (seen.count(key))
            throw std::invalid_argument("line " + std::to_string(line) + ": duplicate key '" + key + "'");
        seen[key] = line;

        if (std::find(kAxes.begin(), kAxes.end(), key) != kAxes.end()) {
            std::vector<std::string> parts;
            boost::algorithm::split(parts, value, boost::algorithm::is_any_of(","));
            std::vector<double> vals;
            for (std::string p : parts) {
                boost::algorithm::trim(p);
                vals.push_back(parse_number(p, line));
            }
            cfg.axes[key] = vals;
        } else if (key == "command") {
            if (value != "selfenergy" && value != "vertex")
                throw std::invalid_argument("line " + std::to_string(line) + ": command must be selfenergy or vertex");
            cfg.base.command = value;
        } else if (key == "part") {
            cfg.base.part = value;
        } else if (key == "tol") {
            cfg.base.rel_tol = parse_number(value, line);
        } else if (key == "abs_tol") {
            cfg.base.abs_tol = parse_number(value, line);
        } else if (key == "alpha") {
            cfg.base.alpha = parse_number(value, line);
        } else if (key == "output") {
            cfg.base.output = value;
        } else {
            throw std::invalid_argument("line " + std::to_string(line) + ": unknown key '" + key + "'");
        }
    }
    if (!valid_part(cfg.base.command, cfg.base.part))
        throw std::invalid_argument("part '" + cfg.base.part + "' is not valid for " + cfg.base.command);
    const std::string bad = cfg.base.validate();
    if (!bad.empty()) throw std::invalid_argument(bad);
    return cfg;
}

std::vector<RunConfig> SweepConfig::expand() const {
    std::vector<RunConfig> out = {base};
    for (const std::string& key : kAxes) {
        auto it = axes.find(key);
        if (it == axes.end()) continue;
        std::vector<RunConfig> next;
        for (const RunConfig& c : out)
            for (double v : it->second) {
                RunConfig d = c;
                set_axis(d, key, v);
                next.push_back(d);
            }
        out = std::move(next);
    }
    return out;
}

int run_sweep(const SweepConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ofstream file;
    std::ostream* os = &out;
    if (!cfg.base.output.empty()) {
        file.open(cfg.base.output);
        if (!file) {
            err << "cannot open output file '" << cfg.base.output << "'\n";
            return usage_error;
        }
        os = &file;
    }
    *os << join_csv(csv_header(cfg.base.command)) << '\n';

    bool any_domain = false, any_error = false;
    for (const RunConfig& c : cfg.expand()) {
        const std::string bad = c.validate();
        if (!bad.empty()) {
            err << "row skipped: " << bad << '\n';
            *os << join_csv(csv_row(c, nullptr, "invalid")) << '\n';
            any_error = true;
            continue;
        }
        try {
            const Evaluation ev = evaluate(c);
            *os << join_csv(csv_row(c, &ev, "ok")) << '\n';
        } catch (const KinematicsOutOfDomain& e) {
            err << e.what() << '\n';
            *os << join_csv(csv_row(c, nullptr, "out_of_domain")) << '\n';
            any_domain = true;
        } catch (const Error& e) {
            err << e.what() << '\n';
            *os << join_csv(csv_row(c, nullptr, "error")) << '\n';
            any_error = true;
        }
    }
    if (any_domain) return out_of_domain;
    return any_error ? check_failed : ok;
}

}  // namespace cgqed::cli
