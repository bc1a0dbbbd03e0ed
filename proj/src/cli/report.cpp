#include "cgqed/cli.hpp"

#include "cgqed/errors.hpp"
#include "cgqed/selfenergy.hpp"
#include "cgqed/vertex.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace cgqed::cli {

namespace {

const std::vector<std::string> kVertexBasis = {"1", "g0", "g.p", "g.p'", "g0 g.p", "g0 g.p'", "g.p g.p'", "g0 g.p g.p'"};
const std::vector<std::string> kVertexCsv = {"b1", "g0", "gp", "gpp", "g0gp", "g0gpp", "gpgpp", "g0gpgpp"};

SEPart se_part(const std::string& s) {
    if (s == "coulomb") return SEPart::coulomb;
    if (s == "gaunt") return SEPart::gaunt;
    if (s == "scalret") return SEPart::scalar_retardation;
    if (s == "total") return SEPart::total_renormalized;
    throw std::invalid_argument("unknown self-energy part '" + s + "' (coulomb|gaunt|scalret|total)");
}

VertexPart vx_part(const std::string& s) {
    if (s == "coulomb") return VertexPart::coulomb;
    if (s == "gauntlike") return VertexPart::gaunt_like;
    if (s == "nongauntlike") return VertexPart::non_gaunt_like;
    if (s == "total") return VertexPart::total;
    throw std::invalid_argument("unknown vertex part '" + s + "' (coulomb|gauntlike|nongauntlike|total)");
}

double unit_factor(const RunConfig& cfg) { return cfg.alpha ? *cfg.alpha / (4.0 * std::numbers::pi) : 1.0; }

nlohmann::ordered_json matrix_json(const DiracMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < 4; ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < 4; ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
    }
    return rows;
}

nlohmann::ordered_json fourvec(const FourVector& p) { return {p.t, p.x, p.y, p.z}; }

// Either the basis object or null plus a note.
nlohmann::ordered_json se_block(const DiracMatrix& m, const RunConfig& cfg) {
    nlohmann::ordered_json j;
    try {
        const BasisDecomposition d = decompose_basis(m, cfg.p, cfg.mass);
        j["basis"] = {{"c_m", d.coefficients.c_m}, {"c_g0p0", d.coefficients.c_g0p0}, {"c_gp", d.coefficients.c_gp}};
    } catch (const Error& e) {
        j["basis"] = nullptr;
        j["basis_note"] = e.what();
    }
    j["matrix"] = matrix_json(m);
    return j;
}

nlohmann::ordered_json vx_block(const DiracMatrix& m, const RunConfig& cfg) {
    nlohmann::ordered_json j;
    const VertexBasisDecomposition d = decompose_vertex_basis(m, VKinematics{cfg.p, cfg.pp, cfg.mass});
    nlohmann::ordered_json b;
    for (std::size_t k = 0; k < kVertexBasis.size(); ++k) b[kVertexBasis[k]] = {d.coefficients[k].real(), d.coefficients[k].imag()};
    j["basis"] = b;
    j["basis_residual"] = d.residual;
    j["matrix"] = matrix_json(m);
    return j;
}

}  // namespace

bool valid_part(const std::string& command, const std::string& part) {
    try {
        if (command == "selfenergy") se_part(part);
        else if (command == "vertex") vx_part(part);
        else return false;
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

std::string RunConfig::validate() const {
    if (!(mass > 0.0) || !std::isfinite(mass)) return "--mass must be positive";
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) return "tolerances must be positive";
    if (!(fd_step > 0.0)) return "--fd-step must be positive";
    if (alpha && !(*alpha > 0.0)) return "--alpha must be positive";
    return {};
}

Evaluation evaluate(const RunConfig& cfg) {
    Evaluation ev;
    if (cfg.command == "selfenergy") {
        const SelfEnergyResult r = self_energy(SEKinematics{cfg.p, cfg.mass}, se_part(cfg.part), cfg.spec());
        ev.value = r.value;
        ev.quad_error = r.quad_error;
    } else if (cfg.command == "vertex") {
        const VertexResult r = vertex(VKinematics{cfg.p, cfg.pp, cfg.mass}, vx_part(cfg.part), cfg.spec());
        ev.value = r.value;
        ev.quad_error = r.quad_error;
    } else {
        throw std::invalid_argument("unknown command '" + cfg.command + "'");
    }
    const double f = unit_factor(cfg);
    ev.value *= Complex(f);
    ev.quad_error *= f;
    return ev;
}

nlohmann::ordered_json evaluation_json(const RunConfig& cfg, const Evaluation& ev) {
    nlohmann::ordered_json j;
    j["units"] = cfg.alpha ? "physical" : "K";
    if (cfg.alpha) j["alpha"] = *cfg.alpha;
    j["command"] = cfg.command;
    j["part"] = cfg.part;
    nlohmann::ordered_json kin;
    kin["mass"] = cfg.mass;
    kin["p"] = fourvec(cfg.p);
    if (cfg.command == "vertex") kin["pp"] = fourvec(cfg.pp);
    j["kinematics"] = kin;
    if (cfg.command == "vertex") {
        j["delta"] = vx_block(ev.value.delta_coeff, cfg);
        j["finite"] = vx_block(ev.value.finite, cfg);
    } else {
        j["delta"] = se_block(ev.value.delta_coeff, cfg);
        j["finite"] = se_block(ev.value.finite, cfg);
    }
    j["quad_error"] = ev.quad_error;
    return j;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string join_csv(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k) out += ',';
        out += cells[k];
    }
    return out;
}

std::vector<std::string> csv_header(const std::string& command) {
    std::vector<std::string> h = {"command", "part", "units", "mass", "p0", "px", "py", "pz"};
    if (command == "vertex") {
        for (const char* c : {"pp0", "ppx", "ppy", "ppz"}) h.emplace_back(c);
        for (const char* blk : {"delta", "finite"})
            for (const std::string& b : kVertexCsv)
                for (const char* ri : {"re", "im"}) h.push_back(std::string(blk) + "_" + b + "_" + ri);
    } else {
        for (const char* blk : {"delta", "finite"})
            for (const char* b : {"c_m", "c_g0p0", "c_gp"}) h.push_back(std::string(blk) + "_" + b);
    }
    h.emplace_back("quad_error");
    h.emplace_back("status");
    return h;
}

std::vector<std::string> csv_row(const RunConfig& cfg, const Evaluation* ev, const std::string& status) {
    std::vector<std::string> r = {cfg.command, cfg.part, cfg.alpha ? "alpha=" + format_double(*cfg.alpha) : "K",
                                  format_double(cfg.mass)};
    for (int mu = 0; mu < 4; ++mu) r.push_back(format_double(cfg.p[mu]));
    const std::size_t width = csv_header(cfg.command).size();
    if (cfg.command == "vertex")
        for (int mu = 0; mu < 4; ++mu) r.push_back(format_double(cfg.pp[mu]));

    if (ev) {
        for (const DiracMatrix* m : {&ev->value.delta_coeff, &ev->value.finite}) {
            if (cfg.command == "vertex") {
                const VertexBasisDecomposition d = decompose_vertex_basis(*m, VKinematics{cfg.p, cfg.pp, cfg.mass});
                for (const Complex& c : d.coefficients) {
                    r.push_back(format_double(c.real()));
                    r.push_back(format_double(c.imag()));
                }
            } else {
                try {
                    const BasisDecomposition d = decompose_basis(*m, cfg.p, cfg.mass);
                    for (double c : {d.coefficients.c_m, d.coefficients.c_g0p0, d.coefficients.c_gp})
                        r.push_back(format_double(c));
                } catch (const Error&) {
                    for (int k = 0; k < 3; ++k) r.emplace_back("");
                }
            }
        }
        r.push_back(format_double(ev->quad_error));
    }
    while (r.size() + 1 < width) r.emplace_back("");
    r.push_back(status);
    return r;
}

}  // namespace cgqed::cli
