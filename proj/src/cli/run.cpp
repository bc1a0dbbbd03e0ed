#include "cgqed/checks.hpp"
#include "cgqed/cli.hpp"
#include "cgqed/errors.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace cgqed::cli {

namespace {

using ojson = nlohmann::ordered_json;

ojson cjson(const Complex& c) { return {c.real(), c.imag()}; }
ojson fourvec(const FourVector& p) { return {p.t, p.x, p.y, p.z}; }

void add_kinematics(CLI::App* app, RunConfig& cfg, bool with_pp) {
    app->add_option("--p0", cfg.p.t, "p^0");
    app->add_option("--px", cfg.p.x, "p^x");
    app->add_option("--py", cfg.p.y, "p^y");
    app->add_option("--pz", cfg.p.z, "p^z");
    if (with_pp) {
        app->add_option("--pp0", cfg.pp.t, "p'^0");
        app->add_option("--ppx", cfg.pp.x, "p'^x");
        app->add_option("--ppy", cfg.pp.y, "p'^y");
        app->add_option("--ppz", cfg.pp.z, "p'^z");
    }
    app->add_option("--mass", cfg.mass, "electron mass m (> 0)");
}

void add_tolerances(CLI::App* app, RunConfig& cfg) {
    app->add_option("--tol", cfg.rel_tol, "relative quadrature tolerance");
    app->add_option("--abs-tol", cfg.abs_tol, "absolute quadrature tolerance");
}

// Writes the report to --output or `out`.
int emit(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
    if (cfg.output.empty()) {
        out << text;
        return ok;
    }
    std::ofstream f(cfg.output);
    if (!f) {
        err << "cannot open output file '" << cfg.output << "'\n";
        return usage_error;
    }
    f << text;
    return ok;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

int do_evaluate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Evaluation ev = evaluate(cfg);
    if (cfg.format == Format::csv) {
        return emit(cfg, join_csv(csv_header(cfg.command)) + "\n" + join_csv(csv_row(cfg, &ev, "ok")) + "\n", out, err);
    }
    return emit(cfg, dump(evaluation_json(cfg, ev)), out, err);
}

int finish_check(const RunConfig& cfg, ojson j, bool passed, std::ostream& out, std::ostream& err) {
    const int rc = emit(cfg, dump(j), out, err);
    if (rc != ok) return rc;
    if (!passed) err << "check failed\n";
    return passed ? ok : check_failed;
}

int check_ward(const RunConfig& cfg, bool richardson, std::ostream& out, std::ostream& err) {
    const WardReport w = ward_residual(cfg.p, cfg.mass, cfg.fd_step * cfg.mass, cfg.spec(), richardson);
    ojson j;
    j["check"] = "ward";
    j["passed"] = w.passed();
    j["kinematics"] = {{"mass", w.m}, {"p", fourvec(w.p)}};
    j["fd_step"] = w.fd_step;
    j["richardson"] = w.richardson;
    j["delta_residual"] = w.delta_residual;
    j["finite_residual"] = w.finite_residual;
    j["tolerance"] = w.tolerance;
    j["quad_error"] = w.quad_error;
    return finish_check(cfg, j, w.passed(), out, err);
}

int check_onshell(const RunConfig& cfg, const std::vector<double>& ratios, std::ostream& out, std::ostream& err) {
    const OnshellReport r = onshell_check(ratios, cfg.mass, cfg.spec());
    ojson j;
    j["check"] = "onshell";
    j["passed"] = r.passed();
    j["mass"] = r.m;
    j["tolerance"] = r.tolerance;
    ojson rows = ojson::array();
    for (const OnshellRow& row : r.rows)
        rows.push_back({{"p_over_m", row.p_over_m},
                        {"finite", cjson(row.finite)},
                        {"delta", cjson(row.delta)},
                        {"quad_error", row.quad_error}});
    j["rows"] = rows;
    return finish_check(cfg, j, r.passed(), out, err);
}

int check_partsum(const RunConfig& cfg, int random, unsigned seed, std::ostream& out, std::ostream& err) {
    std::vector<FourVector> points;
    if (random > 0) points = random_kinematics(random, cfg.mass, seed);
    else points.push_back(cfg.p);
    bool passed = true;
    ojson rows = ojson::array();
    double tol = 0.0;
    for (const FourVector& p : points) {
        const PartsumReport r = partsum_audit(p, cfg.mass, cfg.spec());
        passed = passed && r.passed();
        tol = r.tolerance;
        rows.push_back({{"kinematics", {{"mass", r.m}, {"p", fourvec(r.p)}}},
                        {"residual",
                         {{"c_m", r.finite_residual[0]}, {"c_g0p0", r.finite_residual[1]}, {"c_gp", r.finite_residual[2]}}},
                        {"delta_exact", r.delta_exact},
                        {"constants_exact", r.constants_exact},
                        {"quad_error", r.quad_error},
                        {"passed", r.passed()}});
    }
    ojson j;
    j["check"] = "partsum";
    j["passed"] = passed;
    j["tolerance"] = tol;
    j["rows"] = rows;
    return finish_check(cfg, j, passed, out, err);
}

int check_integrals(const RunConfig& cfg, bool oracle, std::ostream& out, std::ostream& err) {
    const IntegralReport r = integral_checks(oracle, cfg.spec());
    ojson j;
    j["check"] = "integrals";
    j["passed"] = r.passed();
    j["oracle"] = oracle;
    ojson rows = ojson::array();
    for (const IntegralComparison& c : r.rows)
        rows.push_back({{"name", c.name},
                        {"reference", cjson(c.reference)},
                        {"measured", cjson(c.measured)},
                        {"error", c.error},
                        {"absolute", c.absolute},
                        {"tolerance", c.tolerance},
                        {"informational", c.informational},
                        {"passed", c.passed()}});
    j["rows"] = rows;
    if (r.fi9) {
        const Fi9Adjudication& a = *r.fi9;
        j["rank2_n4_adjudication"] = {{"q", fourvec(a.q)},
                                      {"s", a.s},
                                      {"measured_qq_coefficient", a.measured_qq},
                                      {"measured_g_coefficient", a.measured_g},
                                      {"oracle_error", a.oracle_error},
                                      {"fi9_qq_coefficient", a.printed_fi9_qq},
                                      {"fi14_qq_coefficient", a.printed_fi14_qq},
                                      {"matches", a.matches}};
    }
    return finish_check(cfg, j, r.passed(), out, err);
}

std::string table_name(sym::IdentityTable t) { return t == sym::IdentityTable::four_dim ? "4d" : "Dd"; }

int check_identities(const RunConfig& cfg, bool list, const std::string& lhs, const std::string& rhs, std::ostream& out,
                     std::ostream& err) {
    if (list) {
        ojson rows = ojson::array();
        for (const sym::IdentityRow& r : sym::identity_rows())
            rows.push_back({{"name", r.name}, {"table", table_name(r.table)}, {"sides", r.sides}});
        return emit(cfg, dump(ojson{{"identities", rows}}), out, err);
    }
    if (!lhs.empty() || !rhs.empty()) {
        if (lhs.empty() || rhs.empty()) {
            err << "--expr and --equals must be given together\n";
            return usage_error;
        }
        const sym::GammaExpr a = sym::parse_gamma_expr(lhs);
        const sym::GammaExpr b = sym::parse_gamma_expr(rhs);
        const sym::IdentityVerdict v = sym::verify_identity(a, b);
        const sym::IdentityVerdict v4 = sym::verify_identity_d4(a, b);
        ojson j;
        j["check"] = "identities";
        j["expr"] = lhs;
        j["equals"] = rhs;
        j["passed"] = v.equal;
        j["equal"] = v.equal;
        j["equal_at_D4"] = v4.equal;
        j["difference"] = v.difference.to_string();
        j["canonical_lhs"] = sym::canonicalize(a).to_string();
        j["canonical_rhs"] = sym::canonicalize(b).to_string();
        return finish_check(cfg, j, v.equal, out, err);
    }
    const IdentityReport r = identity_checks();
    ojson rows = ojson::array();
    for (std::size_t k = 0; k < r.rows.size(); ++k) {
        const sym::IdentityCheck& c = r.rows[k];
        rows.push_back({{"name", c.name},
                        {"table", table_name(c.table)},
                        {"sides", sym::identity_rows()[k].sides},
                        {"symbolic", c.symbolic_ok},
                        {"numeric", c.numeric_ok},
                        {"numeric_residual", c.numeric_residual},
                        {"difference", c.difference},
                        {"passed", c.passed()}});
    }
    ojson j;
    j["check"] = "identities";
    j["passed"] = r.passed();
    j["passed_count"] = r.passed_count();
    j["total"] = r.rows.size();
    j["rows"] = rows;
    return finish_check(cfg, j, r.passed(), out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coulomb-gauge one-loop self-energy and vertex evaluator", "cgqed"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "json";
    std::optional<double> alpha;

    auto* se = app.add_subcommand("selfenergy", "evaluate Sigma(p) in units of K");
    add_kinematics(se, cfg, false);
    add_tolerances(se, cfg);
    se->add_option("--part", cfg.part, "coulomb|gaunt|scalret|total");
    se->add_option("--format", format, "json|csv");
    se->add_option("--alpha", alpha, "report in physical units, scaled by alpha/(4 pi)");
    se->add_option("--output", cfg.output, "write the report to a file");

    auto* vx = app.add_subcommand("vertex", "evaluate Lambda^0(p, p') in units of K");
    add_kinematics(vx, cfg, true);
    add_tolerances(vx, cfg);
    vx->add_option("--part", cfg.part, "coulomb|gauntlike|nongauntlike|total");
    vx->add_option("--format", format, "json|csv");
    vx->add_option("--alpha", alpha, "report in physical units, scaled by alpha/(4 pi)");
    vx->add_option("--output", cfg.output, "write the report to a file");

    auto* check = app.add_subcommand("check", "run a verification procedure");
    check->require_subcommand(1);
    bool richardson = false, oracle = false, list = false;
    std::vector<double> ratios = {0.0, 0.3, 0.6};
    int random = 0;
    unsigned seed = 20240601;
    std::string lhs, rhs;

    auto* ward = check->add_subcommand("ward", "Lambda^0(p,p) + dSigma/dp0 = 0");
    add_kinematics(ward, cfg, false);
    add_tolerances(ward, cfg);
    ward->add_option("--fd-step", cfg.fd_step, "finite-difference step in units of m");
    ward->add_flag("--richardson", richardson, "Richardson extrapolation over h and 2h");
    ward->add_option("--output", cfg.output, "write the report to a file");

    auto* onshell = check->add_subcommand("onshell", "ubar Sigma_ren u = 0 on the mass shell");
    onshell->add_option("--mass", cfg.mass, "electron mass m (> 0)");
    onshell->add_option("--p-over-m", ratios, "|p_vec|/m values")->delimiter(',');
    add_tolerances(onshell, cfg);
    onshell->add_option("--output", cfg.output, "write the report to a file");

    auto* partsum = check->add_subcommand("partsum", "part sum vs the renormalized total");
    add_kinematics(partsum, cfg, false);
    add_tolerances(partsum, cfg);
    partsum->add_option("--random", random, "audit N random kinematics with p^2 <= 0.8 m^2 instead");
    partsum->add_option("--seed", seed, "seed for --random");
    partsum->add_option("--output", cfg.output, "write the report to a file");

    auto* integrals = check->add_subcommand("integrals", "master integrals: closed forms, eps-series, oracle");
    integrals->add_flag("--oracle", oracle, "also compare against the Wick-rotated direct integration");
    add_tolerances(integrals, cfg);
    integrals->add_option("--output", cfg.output, "write the report to a file");

    auto* identities = check->add_subcommand("identities", "gamma-matrix identity tables");
    identities->add_flag("--list", list, "list the table rows");
    identities->add_option("--expr", lhs, "left-hand side (grammar in docs/grammar.md)");
    identities->add_option("--equals", rhs, "right-hand side");
    identities->add_option("--output", cfg.output, "write the report to a file");

    auto* sweep = app.add_subcommand("sweep", "CSV sweep driven by a key=value config file");
    std::string config_path;
    sweep->add_option("--config", config_path, "config file")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? ok : usage_error;
    }

    if (format == "csv") cfg.format = Format::csv;
    else if (format != "json") {
        err << "--format must be json or csv\n";
        return usage_error;
    }
    cfg.alpha = alpha;
    const std::string bad = cfg.validate();
    if (!bad.empty()) {
        err << bad << '\n';
        return usage_error;
    }

    try {
        if (se->parsed() || vx->parsed()) {
            cfg.command = se->parsed() ? "selfenergy" : "vertex";
            if (!valid_part(cfg.command, cfg.part)) {
                err << "invalid --part '" << cfg.part << "' for " << cfg.command << '\n';
                return usage_error;
            }
            return do_evaluate(cfg, out, err);
        }
        if (ward->parsed()) return check_ward(cfg, richardson, out, err);
        if (onshell->parsed()) return check_onshell(cfg, ratios, out, err);
        if (partsum->parsed()) return check_partsum(cfg, random, seed, out, err);
        if (integrals->parsed()) return check_integrals(cfg, oracle, out, err);
        if (identities->parsed()) return check_identities(cfg, list, lhs, rhs, out, err);
        if (sweep->parsed()) {
            std::ifstream f(config_path);
            if (!f) {
                err << "cannot read config '" << config_path << "'\n";
                return usage_error;
            }
            std::stringstream ss;
            ss << f.rdbuf();
            SweepConfig sc;
            try {
                sc = parse_sweep_config(ss.str());
            } catch (const std::invalid_argument& e) {
                err << config_path << ": " << e.what() << '\n';
                return usage_error;
            }
            return run_sweep(sc, out, err);
        }
    } catch (const KinematicsOutOfDomain& e) {
        err << "kinematics out of domain: " << e.what() << '\n';
        return out_of_domain;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return usage_error;
    } catch (const UnbalancedContraction& e) {
        err << "unbalanced contraction: " << e.what() << '\n';
        return usage_error;
    } catch (const UnsupportedChainLength& e) {
        err << e.what() << '\n';
        return usage_error;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return check_failed;
    }
    return usage_error;
}

}  // namespace cgqed::cli
