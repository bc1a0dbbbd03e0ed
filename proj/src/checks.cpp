#include "cgqed/checks.hpp"

#include "cgqed/dimreg.hpp"
#include "cgqed/errors.hpp"
#include "cgqed/oracle.hpp"
#include "cgqed/selfenergy.hpp"
#include "cgqed/vertex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace cgqed {

namespace {

double to_double(const Rational& r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

// Trace projections onto {m, g0 p0, g.p}; a component whose basis element
// vanishes (p0 = 0 or p_vec = 0) is reported as its raw trace instead.
std::array<double, 3> coefficients(const DiracMatrix& mat, const FourVector& p, double m) {
    const ThreeVector pv = p.spatial();
    const double p2 = dot(pv, pv);
    const double tr1 = (mat.trace() / 4.0).real();
    const double tr0 = ((gamma(0) * mat).trace() / 4.0).real();
    const double trp = (-(gamma_dot(pv) * mat).trace() / 4.0).real();
    return {tr1 / m, p.t != 0.0 ? tr0 / p.t : tr0, p2 != 0.0 ? trp / p2 : trp};
}

SelfEnergyResult sigma(const FourVector& p, double m, SEPart part, const QuadSpec& spec) {
    return self_energy(SEKinematics{p, m}, part, spec);
}

}  // namespace

WardReport ward_residual(const FourVector& p, double m, double fd_step, const QuadSpec& spec, bool richardson) {
    WardReport r;
    r.p = p;
    r.m = m;
    r.fd_step = fd_step;
    r.richardson = richardson;

    const VertexResult lam = vertex(VKinematics{p, p, m}, VertexPart::total, spec);
    r.vertex_finite = lam.value.finite;
    r.quad_error = lam.quad_error;

    // delta parts: Lambda^0 -> g0, Sigma_ren -> c_g0p0 g0 p0 + ...
    const double c0 = to_double(self_energy_delta_rational(SEPart::total_renormalized).c_g0p0);
    r.delta_residual = frobenius(lam.value.delta_coeff + gamma(0) * c0);

    auto central = [&](double h) {
        FourVector up = p, dn = p;
        up.t += h;
        dn.t -= h;
        const SelfEnergyResult a = sigma(up, m, SEPart::total_renormalized, spec);
        const SelfEnergyResult b = sigma(dn, m, SEPart::total_renormalized, spec);
        r.quad_error += (a.quad_error + b.quad_error) / (2.0 * h);
        return DiracMatrix((a.value.finite - b.value.finite) / (2.0 * h));
    };
    DiracMatrix deriv = central(fd_step);
    if (richardson) deriv = (4.0 * deriv - central(2.0 * fd_step)) / 3.0;
    r.derivative_finite = deriv;
    r.finite_residual = frobenius(r.vertex_finite + deriv);
    return r;
}

double PartsumReport::max_residual() const {
    return *std::max_element(finite_residual.begin(), finite_residual.end());
}

PartsumReport partsum_audit(const FourVector& p, double m, const QuadSpec& spec) {
    PartsumReport r;
    r.p = p;
    r.m = m;

    const RationalBasis dsum = self_energy_delta_rational(SEPart::coulomb) + self_energy_delta_rational(SEPart::gaunt) +
                               self_energy_delta_rational(SEPart::scalar_retardation) - onshell_subtraction_delta();
    r.delta_exact = dsum == self_energy_delta_rational(SEPart::total_renormalized);
    const RationalBasis csum = self_energy_constant_rational(SEPart::coulomb) +
                               self_energy_constant_rational(SEPart::gaunt) +
                               self_energy_constant_rational(SEPart::scalar_retardation) -
                               onshell_subtraction_constant();
    r.constants_exact = csum == self_energy_constant_rational(SEPart::total_renormalized);

    DiracMatrix sum = -4.0 * m * identity();
    for (SEPart part : {SEPart::coulomb, SEPart::gaunt, SEPart::scalar_retardation}) {
        const SelfEnergyResult s = sigma(p, m, part, spec);
        sum += s.value.finite;
        r.quad_error += s.quad_error;
    }
    const SelfEnergyResult tot = sigma(p, m, SEPart::total_renormalized, spec);
    r.quad_error += tot.quad_error;

    const auto a = coefficients(sum, p, m);
    const auto b = coefficients(tot.value.finite, p, m);
    for (std::size_t k = 0; k < 3; ++k) r.finite_residual[k] = std::abs(a[k] - b[k]);
    return r;
}

std::vector<FourVector> random_kinematics(int count, double m, unsigned seed, double max_p2) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> t(-0.95, 0.95), x(-0.6, 0.6);
    std::vector<FourVector> out;
    while (static_cast<int>(out.size()) < count) {
        const FourVector p(t(rng) * m, x(rng) * m, x(rng) * m, x(rng) * m);
        if (minkowski_square(p) > max_p2 * m * m) continue;
        if (!SEKinematics{p, m}.domain_valid()) continue;
        out.push_back(p);
    }
    return out;
}

bool OnshellReport::passed() const {
    for (const OnshellRow& row : rows)
        if (!(std::abs(row.finite) <= tolerance && std::abs(row.delta) <= tolerance)) return false;
    return true;
}

OnshellReport onshell_check(const std::vector<double>& p_over_m, double m, const QuadSpec& spec) {
    OnshellReport r;
    r.m = m;
    for (double x : p_over_m) {
        const SandwichResult s = onshell_sandwich(ThreeVector{x * m, 0.0, 0.0}, m, spec);
        r.rows.push_back({x, s.finite, s.delta, s.quad_error});
    }
    return r;
}

bool IntegralReport::passed() const {
    for (const IntegralComparison& c : rows)
        if (!c.informational && !c.passed()) return false;
    return true;
}

namespace {

double max_abs(const std::vector<Complex>& v) {
    double out = 0.0;
    for (const Complex& c : v) out = std::max(out, std::abs(c));
    return out;
}

IntegralComparison compare(const std::string& name, const std::vector<Complex>& ref, const std::vector<Complex>& got,
                           double tol) {
    std::vector<Complex> diff(ref.size());
    for (std::size_t k = 0; k < ref.size(); ++k) diff[k] = got[k] - ref[k];
    IntegralComparison c;
    c.name = name;
    // largest component stands for the tensor
    std::size_t big = 0;
    for (std::size_t k = 0; k < ref.size(); ++k)
        if (std::abs(ref[k]) > std::abs(ref[big])) big = k;
    c.reference = ref[big];
    c.measured = got[big];
    if (max_abs(ref) > 0.0) {
        c.error = max_abs(diff) / max_abs(ref);
    } else {
        c.error = max_abs(diff);  // reference vanishes identically
        c.absolute = true;
    }
    c.tolerance = tol;
    return c;
}

std::vector<Complex> finite_parts(const EpsTensor& t, double& delta_norm) {
    std::vector<Complex> out;
    delta_norm = 0.0;
    for (const EpsScalar& e : t.data()) {
        out.push_back(e.finite);
        delta_norm = std::max(delta_norm, std::abs(e.delta_coeff));
    }
    return out;
}

void closed_form_rows(IntegralReport& rep) {
    const FourVector q(0.5, 0.1, -0.2, 0.3);
    const double s = -1.0;
    const double norm = dimreg_normalization();
    struct Pair {
        IntegralKind di;
        int n;
        std::string label;
        ComplexTensor fi;
    };
    const std::vector<Pair> pairs = {
        {IntegralKind::DI4, 3, "DI4(n=3) vs FI12(n=3)", fi_closed(IntegralKind::FI12, 3.0, q, s)},
        {IntegralKind::DI4, 4, "DI4(n=4) vs FI10", fi_closed(IntegralKind::FI10, 4.0, q, s)},
        {IntegralKind::DI4, 5, "DI4(n=5) vs FI11(n=5)", fi_closed(IntegralKind::FI11, 5.0, q, s)},
        {IntegralKind::DI5, 3, "DI5(n=3) vs FI8", fi_closed(IntegralKind::FI8, 3.0, q, s)},
        {IntegralKind::DI5, 4, "DI5(n=4) vs FI13(n=4)", fi_closed(IntegralKind::FI13, 4.0, q, s)},
        {IntegralKind::DI6, 4, "DI6(n=4) vs rank-2 derived(n=4)", fi_rank2_derived(4.0, q, s)},
        {IntegralKind::DI6, 5, "DI6(n=5) vs rank-2 derived(n=5)", fi_rank2_derived(5.0, q, s)},
    };
    for (const Pair& pr : pairs) {
        double dn = 0.0;
        const std::vector<Complex> di = finite_parts(di_covariant(pr.di, pr.n, q, s), dn);
        std::vector<Complex> fi = pr.fi.data();
        for (Complex& c : fi) c *= norm;
        IntegralComparison c = compare(pr.label, fi, di, 1e-12);
        if (dn != 0.0) c.error = std::max(c.error, 1.0);  // must be pole free
        rep.rows.push_back(c);
    }
    // FI4 at q = 0 against DI4(n=3)
    {
        double dn = 0.0;
        const std::vector<Complex> di = finite_parts(di_covariant(IntegralKind::DI4, 3, FourVector{}, s), dn);
        std::vector<Complex> fi = fi_closed(IntegralKind::FI4, 3.0, FourVector{}, s).data();
        for (Complex& c : fi) c *= norm;
        rep.rows.push_back(compare("DI4(n=3, q=0) vs FI4", fi, di, 1e-12));
    }
    // FI14 as printed, against the same eps-series; recorded only
    {
        double dn = 0.0;
        const std::vector<Complex> di = finite_parts(di_covariant(IntegralKind::DI6, 4, q, s), dn);
        std::vector<Complex> fi = fi_closed(IntegralKind::FI14, 4.0, q, s).data();
        for (Complex& c : fi) c *= norm;
        IntegralComparison c = compare("DI6(n=4) vs FI14(n=4) as printed", fi, di, 1e-12);
        c.informational = true;
        rep.rows.push_back(c);
    }
}

OracleResult run_oracle(bool coulomb, int n, std::vector<int> num, const FourVector& q, double s,
                        std::optional<OracleKinematics> sub = std::nullopt) {
    OracleRequest req;
    req.coulomb_factor = coulomb;
    req.n = n;
    req.numerator = std::move(num);
    req.kin = {q, s};
    req.subtract = sub;
    const OracleResult r = wick_direct(req);
    require_converged(r.converged, "oracle");
    return r;
}

// oracle tensor of the given rank over all components
std::vector<Complex> oracle_tensor(bool coulomb, int n, int rank, const FourVector& q, double s) {
    std::vector<Complex> out;
    const int count = 1 << (2 * rank);
    for (int flat = 0; flat < count; ++flat) {
        std::vector<int> idx(static_cast<std::size_t>(rank));
        for (int r = rank - 1, f = flat; r >= 0; --r, f /= 4) idx[static_cast<std::size_t>(r)] = f % 4;
        out.push_back(run_oracle(coulomb, n, idx, q, s).value);
    }
    return out;
}

void oracle_rows(IntegralReport& rep, const QuadSpec& spec) {
    const double norm = dimreg_normalization();
    const std::array<std::pair<FourVector, double>, 3> points = {
        std::pair{FourVector(0.0, 0.0, 0.0, 0.0), -1.0},
        std::pair{FourVector(0.0, 0.3, 0.0, 0.0), -1.0},
        std::pair{FourVector(0.0, 0.2, -0.1, 0.4), -1.5},
    };
    auto pt_label = [](int k) { return " @P" + std::to_string(k + 1); };

    for (int k = 0; k < 3; ++k) {
        const double s4 = std::array<double, 3>{-1.0, -2.0, -0.5}[static_cast<std::size_t>(k)];
        rep.rows.push_back(compare("FI4 vs oracle @s=" + std::to_string(s4).substr(0, 4),
                                   fi_closed(IntegralKind::FI4, 3.0, FourVector{}, s4).data(),
                                   oracle_tensor(false, 3, 0, FourVector{}, s4), 1e-6));
    }
    for (int k = 0; k < 3; ++k) {
        const auto& [q, s] = points[static_cast<std::size_t>(k)];
        rep.rows.push_back(compare("FI7 vs oracle" + pt_label(k), fi_closed(IntegralKind::FI7, 3.0, q, s).data(),
                                   oracle_tensor(false, 3, 0, q, s), 1e-6));
        rep.rows.push_back(compare("FI8 vs oracle" + pt_label(k), fi_closed(IntegralKind::FI8, 3.0, q, s).data(),
                                   oracle_tensor(false, 3, 1, q, s), 1e-6));
        rep.rows.push_back(compare("FI10 vs oracle" + pt_label(k), fi_closed(IntegralKind::FI10, 4.0, q, s).data(),
                                   oracle_tensor(false, 4, 0, q, s), 1e-6));
        rep.rows.push_back(compare("FI11(n=4) vs oracle" + pt_label(k),
                                   fi_closed(IntegralKind::FI11, 4.0, q, s).data(), oracle_tensor(false, 4, 0, q, s),
                                   1e-6));
    }

    // Coulomb-factor integrals at q_vec = (0.3, 0, 0), s = -1
    const FourVector q(0.0, 0.3, 0.0, 0.0);
    const double s = -1.0;
    const EpsTensor d4 = di_coulomb(IntegralKind::DI4k, 2, q, s, spec);
    const Complex o4 = run_oracle(true, 2, {}, q, s).value * norm;
    rep.rows.push_back(compare("DI4k(n=2) vs oracle", {d4.at().finite}, {o4}, 1e-3));

    const EpsTensor d5 = di_coulomb(IntegralKind::DI5k, 2, q, s, spec);
    {
        IntegralComparison c;
        c.name = "DI5k(n=2) time component vs oracle (absolute, in units of |DI4k|)";
        c.reference = d5.at(0).finite;
        c.measured = run_oracle(true, 2, {0}, q, s).value * norm;
        c.error = std::abs(c.measured - c.reference) / std::abs(d4.at().finite);
        c.absolute = true;
        c.tolerance = 1e-3;
        rep.rows.push_back(c);
        rep.rows.push_back(compare("DI5k(n=2) x component vs oracle", {d5.at(1).finite},
                                   {run_oracle(true, 2, {1}, q, s).value * norm}, 1e-3));
    }

    // logarithmically divergent: compared as a difference to q = 0, s = -2
    {
        const FourVector q2{};
        const double s2 = -2.0;
        const EpsTensor a = di_coulomb(IntegralKind::DI6k, 2, q, s, spec);
        const EpsTensor b = di_coulomb(IntegralKind::DI6k, 2, q2, s2, spec);
        const EpsScalar diff = a.at(0, 0) - b.at(0, 0);
        const Complex o = run_oracle(true, 2, {0, 0}, q, s, OracleKinematics{q2, s2}).value * norm;
        IntegralComparison c = compare("DI6k(n=2) time-time, difference to (q=0, s=-2), vs oracle", {diff.finite}, {o},
                                       1e-3);
        if (std::abs(diff.delta_coeff) > 1e-9 * std::abs(diff.finite)) c.error = std::max(c.error, 1.0);
        rep.rows.push_back(c);
    }
    {
        const EpsTensor d6 = di_coulomb(IntegralKind::DI6k, 3, q, s, spec);
        rep.rows.push_back(compare("DI6k(n=3) time-time vs oracle", {d6.at(0, 0).finite},
                                   {run_oracle(true, 3, {0, 0}, q, s).value * norm}, 1e-3));
        rep.rows.push_back(compare("DI6k(n=3) xx vs oracle", {d6.at(1, 1).finite},
                                   {run_oracle(true, 3, {1, 1}, q, s).value * norm}, 1e-3));
    }
    // third rank: both tables recorded
    for (Di7kForm form : {Di7kForm::derived, Di7kForm::as_printed}) {
        const EpsTensor d7 = di_coulomb(IntegralKind::DI7k, 3, q, s, spec, 1.0, form);
        const std::string tag = form == Di7kForm::derived ? "derived" : "as printed";
        for (const std::array<int, 3>& ix : {std::array<int, 3>{1, 1, 1}, std::array<int, 3>{0, 0, 1}}) {
            IntegralComparison c =
                compare("DI7k(n=3) " + tag + " (" + std::to_string(ix[0]) + std::to_string(ix[1]) +
                            std::to_string(ix[2]) + ") vs oracle",
                        {d7.at(ix[0], ix[1], ix[2]).finite},
                        {run_oracle(true, 3, {ix[0], ix[1], ix[2]}, q, s).value * norm}, 1e-3);
            c.informational = true;
            rep.rows.push_back(c);
        }
    }

    // rank-2, n = 4: measured coefficients
    Fi9Adjudication adj;
    adj.q = q;
    adj.s = s;
    const OracleResult t11 = run_oracle(false, 4, {1, 1}, q, s);
    const OracleResult t22 = run_oracle(false, 4, {2, 2}, q, s);
    const double S = s - minkowski_square(q);
    const Complex pre = Complex(0.0, std::numbers::pi * std::numbers::pi / 12.0);
    adj.measured_g = (-(t22.value) * S / pre).real();
    adj.measured_qq = ((t11.value - t22.value) * S * S / (pre * q.x * q.x)).real();
    adj.oracle_error = t11.err_estimate + t11.tail_bound + t22.err_estimate + t22.tail_bound;
    const double e9 = std::abs(adj.measured_qq - adj.printed_fi9_qq);
    const double e14 = std::abs(adj.measured_qq - adj.printed_fi14_qq);
    adj.matches = (e9 < 1e-4 && e9 < e14) ? "FI9" : (e14 < 1e-4 ? "FI14" : "neither");
    rep.fi9 = adj;

    const std::vector<Complex> o2 = oracle_tensor(false, 4, 2, FourVector(0.0, 0.2, -0.1, 0.4), -1.5);
    rep.rows.push_back(compare("rank-2 derived(n=4) vs oracle",
                               fi_rank2_derived(4.0, FourVector(0.0, 0.2, -0.1, 0.4), -1.5).data(), o2, 1e-6));
    IntegralComparison c9 =
        compare("FI9 as printed vs oracle", fi9_printed(FourVector(0.0, 0.2, -0.1, 0.4), -1.5).data(), o2, 1e-6);
    c9.informational = true;
    rep.rows.push_back(c9);
    IntegralComparison c14 = compare("FI14(n=4) as printed vs oracle",
                                     fi_closed(IntegralKind::FI14, 4.0, FourVector(0.0, 0.2, -0.1, 0.4), -1.5).data(),
                                     o2, 1e-6);
    c14.informational = true;
    rep.rows.push_back(c14);
}

}  // namespace

IntegralReport integral_checks(bool with_oracle, const QuadSpec& spec) {
    IntegralReport rep;
    closed_form_rows(rep);
    if (with_oracle) oracle_rows(rep, spec);
    return rep;
}

int IdentityReport::passed_count() const {
    int n = 0;
    for (const auto& r : rows) n += r.passed() ? 1 : 0;
    return n;
}

IdentityReport identity_checks() {
    IdentityReport rep;
    for (const sym::IdentityRow& row : sym::identity_rows()) rep.rows.push_back(sym::check_identity(row));
    return rep;
}

}  // namespace cgqed
