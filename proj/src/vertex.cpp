#include "cgqed/vertex.hpp"

#include "cgqed/errors.hpp"

#include <cmath>

namespace cgqed {

namespace {

constexpr int kGrid = 64;

double mid(int i) { return (i + 0.5) / kGrid; }

}  // namespace

std::string to_string(VertexPart part) {
    switch (part) {
        case VertexPart::coulomb: return "coulomb";
        case VertexPart::gaunt_like: return "gauntlike";
        case VertexPart::non_gaunt_like: return "nongauntlike";
        case VertexPart::total: return "total";
    }
    return "?";
}

double VKinematics::delta_x(double x, double y) const {
    const FourVector dd = d();
    const ThreeVector dv = dd.spatial(), P = p.spatial(), PP = pp.spatial();
    return m * m - x * (1.0 - x) * dd.t * dd.t + (1.0 - x) * x * y * dot(dv, dv) + (1.0 - x) * (1.0 - y) * dot(P, P) +
           x * (1.0 - y) * dot(PP, PP);
}

double VKinematics::delta_y(double x, double u) const {
    return m * m - u * x * (1.0 - u) * minkowski_square(d()) - minkowski_square(p) * (1.0 - u) * (1.0 - x) -
           minkowski_square(pp) * u * (1.0 - x);
}

double VKinematics::delta_z(double x, double u, double z) const {
    const FourVector dd = d();
    const ThreeVector dv = dd.spatial(), P = p.spatial(), PP = pp.spatial();
    return m * m + x * u * z * (1.0 - u) * dot(dv, dv) - x * u * (1.0 - u) * dd.t * dd.t +
           (1.0 - u) * (1.0 - x * z) * dot(P, P) + u * (1.0 - x * z) * dot(PP, PP) -
           (1.0 - x) * (1.0 - u) * p.t * p.t - u * (1.0 - x) * pp.t * pp.t;
}

std::string VKinematics::domain_violation() const {
    if (!(m > 0.0)) return "mass must be positive";
    for (double v : {p.t, p.x, p.y, p.z, pp.t, pp.x, pp.y, pp.z})
        if (!std::isfinite(v)) return "momentum components must be finite";
    for (double a : {0.0, 1.0})
        for (double b : {0.0, 1.0}) {
            if (!(delta_x(a, b) >= 0.0)) return "Delta_x < 0 at a corner";
            if (!(delta_y(a, b) >= 0.0)) return "Delta_y < 0 at a corner";
            for (double c : {0.0, 1.0})
                if (!(delta_z(a, b, c) >= 0.0)) return "Delta_z < 0 at a corner";
        }
    for (int i = 0; i < kGrid; ++i)
        for (int j = 0; j < kGrid; ++j) {
            if (!(delta_x(mid(i), mid(j)) > 0.0)) return "Delta_x <= 0 inside the unit square";
            if (!(delta_y(mid(i), mid(j)) > 0.0)) return "Delta_y <= 0 inside the unit square";
            for (int l = 0; l < kGrid; ++l)
                if (!(delta_z(mid(i), mid(j), mid(l)) > 0.0)) return "Delta_z <= 0 inside the unit cube";
        }
    return {};
}

bool VKinematics::domain_valid() const { return domain_violation().empty(); }

DiracMatrix coulomb_numerator(const VKinematics& k, double x, double y) {
    const double d0 = k.d().t;
    const DiracMatrix gp = gamma_dot(k.p.spatial());
    const DiracMatrix gpp = gamma_dot(k.pp.spatial());
    const DiracMatrix m1 = identity() * k.m;
    const DiracMatrix left = -gamma(0) * d0 * (1.0 - x) + m1 + gp * ((1.0 - x) * y) - gpp * (1.0 - x * y);
    const DiracMatrix right = gamma(0) * d0 * x + m1 + gp * (1.0 - y + x * y) - gpp * (x * y);
    return left * right;
}

DiracMatrix coulomb_remainder(const VKinematics& k, double x, double y) {
    const ThreeVector v = (1.0 - x) * k.p.spatial() + x * k.pp.spatial();
    const DiracMatrix inner =
        coulomb_numerator(k, x, y) - identity() * k.delta_x(x, y) + identity() * (y * (1.0 - y) * dot(v, v));
    return -gamma(0) * inner;
}

DiracMatrix gaunt_numerator(const VKinematics& kin, double x, double u) {
    const FourVector k = x * kin.qA(u);
    const ThreeVector P = kin.p.spatial(), PP = kin.pp.spatial(), Kv = k.spatial();
    const DiracMatrix& g0 = gamma(0);
    const DiracMatrix gp = gamma_dot(P), gpp = gamma_dot(PP), gk = gamma_dot(Kv);
    const DiracMatrix m1 = identity() * kin.m;

    const DiracMatrix a = g0 * kin.pp.t - g0 * k.t - gk - m1;
    const DiracMatrix b = g0 * kin.p.t - gp - g0 * k.t + gk - m1;
    const DiracMatrix c = g0 * kin.pp.t + gpp - g0 * k.t - gk - m1;
    const double scalar = 2.0 * dot(P, PP) - dot(P, Kv) - dot(PP, Kv);
    return 2.0 * (a * b + c * gp + identity() * scalar);
}

DiracMatrix non_gaunt_rz_prime(const VKinematics& k, double x, double u) {
    const FourVector q = k.qA(u);
    const ThreeVector Q = q.spatial();
    const DiracMatrix gq = gamma_dot(Q);
    const DiracMatrix m1 = identity() * k.m;
    const double ppq = dot(k.pp.spatial(), Q);
    const double pq = dot(k.p.spatial(), Q);
    return gq * ppq * (slash(k.p) - m1) + gq * pq * (tilde(k.pp) + m1) - x * gq * (gamma(0) * q.t) * (ppq + pq);
}

DiracMatrix non_gaunt_rz(const VKinematics& k, double x, double u) {
    const FourVector q = k.qA(u);
    const DiracMatrix gp = gamma_dot(k.p.spatial());
    const DiracMatrix gpp = gamma_dot(k.pp.spatial());
    const DiracMatrix m1 = identity() * k.m;
    const DiracMatrix g0q0 = gamma(0) * q.t;
    return gpp * (slash(k.p) - m1) + gp * (tilde(k.pp) + m1) - gp * g0q0 * x - gpp * g0q0 * x;
}

DiracMatrix vertex_delta(VertexPart part) {
    if (part == VertexPart::gaunt_like || part == VertexPart::total) return gamma(0);
    return DiracMatrix::Zero();
}

namespace {

struct Accum {
    DiracMatrix value = DiracMatrix::Zero();
    double err = 0.0;

    void add(const MatrixQuadResult& r, const char* what, const DiracMatrix& left = identity()) {
        require_converged(r.converged, what);
        value += left * r.value;
        err += r.err_estimate;
    }
};

void coulomb_part(const VKinematics& k, const QuadSpec& spec, Accum& acc) {
    acc.add(integrate_matrix(
                [&](const Point& pt) {
                    const double x = pt[0], y = pt[1];
                    return DiracMatrix(coulomb_remainder(k, x, y) / (std::sqrt(y) * k.delta_x(x, y)));
                },
                2, spec.with_transforms({AxisTransform::none, AxisTransform::sqrt_lower})),
            "vertex coulomb");
}

void gaunt_part(const VKinematics& k, const QuadSpec& spec, Accum& acc) {
    const double p2 = minkowski_square(k.p), pp2 = minkowski_square(k.pp), m2 = k.m * k.m;
    acc.add(integrate_matrix(
                [&](const Point& pt) {
                    const double x = pt[0], u = pt[1];
                    const double w1 = minkowski_square(k.qA(u));
                    const double w2 = -(p2 - m2) + (p2 - pp2) * u;
                    return DiracMatrix((gaunt_numerator(k, x, u) - identity() * (x * (2.0 * x * w1 + 3.0 * w2))) /
                                       k.delta_y(x, u));
                },
                2, spec.with_transforms({})),
            "vertex gaunt-like", gamma(0));
    const double d2 = minkowski_square(k.d());
    const QuadResult lg =
        integrate([&](const Point& pt) { return std::log((m2 - pt[0] * (1.0 - pt[0]) * d2) / m2); }, 1,
                  spec.with_transforms({}));
    require_converged(lg.converged, "vertex gaunt-like log");
    acc.value -= gamma(0) * lg.value;
    acc.err += lg.err_estimate;
}

void non_gaunt_part(const VKinematics& k, const QuadSpec& spec, Accum& acc) {
    acc.add(integrate_matrix(
                [&](const Point& pt) {
                    const double x = pt[0], u = pt[1], z = pt[2];
                    const double dz = k.delta_z(x, u, z);
                    return DiracMatrix(std::sqrt(z) * (non_gaunt_rz_prime(k, x, u) * (2.0 * x * z / (dz * dz)) +
                                                       non_gaunt_rz(k, x, u) / dz));
                },
                3, spec.with_transforms({AxisTransform::none, AxisTransform::none, AxisTransform::sqrt_lower})),
            "vertex non-gaunt-like", gamma(0));
}

}  // namespace

VertexResult vertex(const VKinematics& kin, VertexPart part, const QuadSpec& spec) {
    const std::string bad = kin.domain_violation();
    if (!bad.empty()) throw KinematicsOutOfDomain("vertex: " + bad);

    Accum acc;
    if (part == VertexPart::coulomb || part == VertexPart::total) coulomb_part(kin, spec, acc);
    if (part == VertexPart::gaunt_like || part == VertexPart::total) gaunt_part(kin, spec, acc);
    if (part == VertexPart::non_gaunt_like || part == VertexPart::total) non_gaunt_part(kin, spec, acc);

    VertexResult out;
    out.value = EpsMatrix(vertex_delta(part), acc.value);
    out.quad_error = acc.err;
    return out;
}

VertexBasisDecomposition decompose_vertex_basis(const DiracMatrix& mat, const VKinematics& kin) {
    const DiracMatrix& g0 = gamma(0);
    const DiracMatrix gp = gamma_dot(kin.p.spatial());
    const DiracMatrix gpp = gamma_dot(kin.pp.spatial());
    const std::array<DiracMatrix, 8> basis = {identity(), g0, gp, gpp, g0 * gp, g0 * gpp, gp * gpp, g0 * gp * gpp};

    Eigen::Matrix<Complex, 16, 8> A;
    Eigen::Matrix<Complex, 16, 1> b;
    for (int c = 0; c < 8; ++c)
        for (int i = 0; i < 16; ++i) A(i, c) = basis[static_cast<std::size_t>(c)](i / 4, i % 4);
    for (int i = 0; i < 16; ++i) b(i) = mat(i / 4, i % 4);

    const Eigen::Matrix<Complex, 8, 1> x = A.completeOrthogonalDecomposition().solve(b);
    VertexBasisDecomposition out;
    for (int c = 0; c < 8; ++c) out.coefficients[static_cast<std::size_t>(c)] = x(c);
    out.residual = (A * x - b).norm();
    return out;
}

}  // namespace cgqed
