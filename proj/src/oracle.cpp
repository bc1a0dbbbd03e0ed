#include "cgqed/oracle.hpp"

#include "cgqed/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cgqed {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kAzimuthPoints = 8;

double norm3(const ThreeVector& v) { return std::sqrt(dot(v, v)); }

void check_kinematics(const OracleKinematics& k) {
    if (k.q.t != 0.0) throw DenominatorVanishes("oracle supports q^0 = 0 only");
    if (!(k.s < 0.0)) throw DenominatorVanishes("oracle requires s < 0");
    const ThreeVector qv = k.q.spatial();
    if (!(dot(qv, qv) < -k.s)) throw DenominatorVanishes("oracle requires q_vec^2 < |s|");
}

struct Frame {
    ThreeVector e1, e2, e3;
};

// Orthonormal frame with e3 along q (z when q = 0).
Frame frame_along(const ThreeVector& q) {
    const double len = norm3(q);
    if (len == 0.0) return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const ThreeVector e3 = (1.0 / len) * q;
    const ThreeVector trial = std::abs(e3.x) < 0.9 ? ThreeVector{1, 0, 0} : ThreeVector{0, 1, 0};
    ThreeVector e1 = trial - dot(trial, e3) * e3;
    e1 = (1.0 / norm3(e1)) * e1;
    const ThreeVector e2{e3.y * e1.z - e3.z * e1.y, e3.z * e1.x - e3.x * e1.z, e3.x * e1.y - e3.y * e1.x};
    return {e1, e2, e3};
}

}  // namespace

double dimreg_normalization() { return 1.0 / std::pow(2.0 * kPi, 4); }

OracleResult wick_direct(const OracleRequest& req) {
    check_kinematics(req.kin);
    if (req.subtract) check_kinematics(*req.subtract);
    const int rank = static_cast<int>(req.numerator.size());
    if (rank > 3) throw Error("oracle numerators are limited to three momentum factors");
    for (int mu : req.numerator)
        if (mu < 0 || mu > 3) throw Error("oracle numerator index out of range");
    if (req.n < 1) throw NonconvergentPowerCounting("power n must be positive");

    const int c = req.coulomb_factor ? 1 : 0;
    const int p = 4 + rank - 2 * req.n - 2 * c;  // UV degree of divergence
    if (req.subtract ? p > 0 : p >= 0) {
        throw NonconvergentPowerCounting("UV degree " + std::to_string(p) +
                                         (req.subtract ? " too high even for a difference" : " is not negative"));
    }

    const double scale = std::sqrt(-req.kin.s);
    const double cutoff = req.cutoff > 0.0 ? req.cutoff : 1e6 * scale;
    const double psi_max = std::atan(cutoff / scale);

    const ThreeVector q1 = req.kin.q.spatial();
    const ThreeVector q2 = req.subtract ? req.subtract->q.spatial() : ThreeVector{};
    // All kinematics share the polar axis of the first q (or the second when
    // the first vanishes); the azimuth sum is exact either way.
    const Frame fr = frame_along(norm3(q1) > 0.0 ? q1 : q2);
    const double s1 = req.kin.s;
    const double s2 = req.subtract ? req.subtract->s : 0.0;
    const int n = req.n;

    int time_factors = 0;
    for (int mu : req.numerator) time_factors += (mu == 0);

    OracleResult out;
    // Reflection k^a -> -k^a leaves the denominators alone when q^a = 0 (always
    // for a = 0); an odd count of a in the numerator then makes the value exactly
    // zero and a relative tolerance would only chase rounding noise.
    for (int a = 0; a < 4; ++a) {
        const bool q_free = req.kin.q[a] == 0.0 && (!req.subtract || req.subtract->q[a] == 0.0);
        const auto count = std::count(req.numerator.begin(), req.numerator.end(), a);
        if (q_free && count % 2 == 1) return out;
    }

    auto integrand = [&](const Point& x) {
        const double psi = x[0] * psi_max;
        const double tp = std::tan(psi);
        const double R = scale * tp;
        const double dR = scale * (1.0 + tp * tp) * psi_max;
        const double chi = kPi * x[1];
        const double k4 = R * std::cos(chi);
        const double kr = R * std::sin(chi);
        const double ct = 2.0 * x[2] - 1.0;
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));

        double sum = 0.0;
        for (int j = 0; j < kAzimuthPoints; ++j) {
            const double phi = 2.0 * kPi * (j + 0.5) / kAzimuthPoints;
            const ThreeVector dir = (st * std::cos(phi)) * fr.e1 + (st * std::sin(phi)) * fr.e2 + ct * fr.e3;
            const ThreeVector k = kr * dir;
            double num = 1.0;
            for (int mu : req.numerator) num *= (mu == 0 ? k4 : k[mu - 1]);
            const double base = R * R + 2.0 * dot(k, q1);
            double term = std::pow(base - s1, -n);
            if (req.subtract) term -= std::pow(R * R + 2.0 * dot(k, q2) - s2, -n);
            sum += num * term;
        }
        sum *= 2.0 * kPi / kAzimuthPoints;

        // d^4k_E = R^3 sin^2(chi) dR dchi dcos(theta) dphi ; Coulomb factor 1/(R sin chi)^2
        const double measure = req.coulomb_factor ? R : R * R * R * std::sin(chi) * std::sin(chi);
        return sum * measure * dR * kPi * 2.0;
    };

    const QuadResult r = integrate(integrand, 3, req.spec.with_transforms({}));

    // i (-1)^n from the rotation and the denominator sign, i per k^0 factor.
    Complex phase = Complex(0.0, 1.0) * (n % 2 == 0 ? 1.0 : -1.0);
    for (int t = 0; t < time_factors; ++t) phase *= Complex(0.0, 1.0);

    out.value = phase * r.value;
    out.err_estimate = r.err_estimate;
    out.converged = r.converged;

    const double angular = req.coulomb_factor ? 4.0 * kPi * kPi : 2.0 * kPi * kPi;
    const double qmax = std::max(norm3(q1), norm3(q2));
    const double f = 1.0 - 2.0 * qmax / cutoff;
    if (!req.subtract) {
        out.tail_bound = angular * std::pow(cutoff, p) / (-p * std::pow(f, n));
    } else {
        const double dq = norm3(q1 - q2);
        const double ds = std::abs(s1 - s2);
        out.tail_bound = angular * n *
                         (2.0 * dq * std::pow(cutoff, p - 1) / (1.0 - p) + ds * std::pow(cutoff, p - 2) / (2.0 - p)) /
                         std::pow(f, n + 1);
    }
    return out;
}

}  // namespace cgqed
