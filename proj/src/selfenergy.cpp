#include "cgqed/selfenergy.hpp"

#include "cgqed/errors.hpp"

#include <cmath>

namespace cgqed {

namespace {

constexpr int kGrid = 64;

double to_double(const Rational& r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

BasisCoefficients to_basis(const RationalBasis& r) {
    return {to_double(r.c_m), to_double(r.c_g0p0), to_double(r.c_gp)};
}

// int_0^1 y^a dy and int_0^1 y^a (-ln y) dy
Rational M(Rational a) { return Rational(1) / (a + 1); }
Rational L(Rational a) { return Rational(1) / ((a + 1) * (a + 1)); }

const Rational kHalf(1, 2);

}  // namespace

std::string to_string(SEPart part) {
    switch (part) {
        case SEPart::coulomb: return "coulomb";
        case SEPart::gaunt: return "gaunt";
        case SEPart::scalar_retardation: return "scalret";
        case SEPart::total_renormalized: return "total";
    }
    return "?";
}

RationalBasis operator+(const RationalBasis& a, const RationalBasis& b) {
    return {a.c_m + b.c_m, a.c_g0p0 + b.c_g0p0, a.c_gp + b.c_gp};
}

RationalBasis operator-(const RationalBasis& a, const RationalBasis& b) {
    return {a.c_m - b.c_m, a.c_g0p0 - b.c_g0p0, a.c_gp - b.c_gp};
}

RationalBasis self_energy_delta_rational(SEPart part) {
    switch (part) {
        case SEPart::coulomb: return {Rational(2), Rational(0), Rational(4, 3)};
        case SEPart::gaunt: return {Rational(3), Rational(-3, 2), Rational(1, 2)};
        case SEPart::scalar_retardation: return {Rational(-1), Rational(1, 2), Rational(-5, 6)};
        case SEPart::total_renormalized: return {Rational(1), Rational(-1), Rational(1)};
    }
    return {};
}

RationalBasis self_energy_constant_rational(SEPart part) {
    switch (part) {
        case SEPart::coulomb: return {Rational(4), Rational(0), Rational(32, 9)};
        case SEPart::gaunt: return {Rational(1), Rational(-5, 4), Rational(-1, 4)};
        case SEPart::scalar_retardation: return {Rational(-1), Rational(3, 4), Rational(-5, 36)};
        case SEPart::total_renormalized: return {Rational(0), Rational(-1, 2), Rational(19, 6)};
    }
    return {};
}

RationalBasis onshell_subtraction_delta() { return {Rational(3), Rational(0), Rational(0)}; }
RationalBasis onshell_subtraction_constant() { return {Rational(4), Rational(0), Rational(0)}; }

RationalBasis derive_constant_rational(SEPart part) {
    switch (part) {
        case SEPart::coulomb:
            // int dy/sqrt(y) (g.p (1-y) + m)(-ln y)
            return {L(-kHalf), Rational(0), L(-kHalf) - L(kHalf)};
        case SEPart::gaunt:
            // -int [(1-x)(3 g0p0 - g.p) - 3m](-ln x) + 2 int ((1-x) pslash - m)
            return {3 * L(0) - 2 * M(0), -3 * (L(0) - L(1)) + 2 * (M(0) - M(1)),
                    (L(0) - L(1)) - 2 * (M(0) - M(1))};
        case SEPart::scalar_retardation:
            // int (g0p0 (1-x) - g.p (1+x) - m)(-ln x) + int int sqrt(y) g.p (-ln x - ln y)
            return {-L(0), L(0) - L(1), -(L(0) + L(1)) + M(kHalf) * L(0) + L(kHalf) * M(0)};
        case SEPart::total_renormalized:
            return derive_constant_rational(SEPart::coulomb) + derive_constant_rational(SEPart::gaunt) +
                   derive_constant_rational(SEPart::scalar_retardation) - onshell_subtraction_constant();
    }
    return {};
}

RationalBasis derive_delta_rational(SEPart part) {
    switch (part) {
        case SEPart::coulomb: return {M(-kHalf), Rational(0), M(-kHalf) - M(kHalf)};
        case SEPart::gaunt: return {3 * M(0), -3 * (M(0) - M(1)), M(0) - M(1)};
        case SEPart::scalar_retardation: return {-M(0), M(0) - M(1), -(M(0) + M(1)) + M(kHalf)};
        case SEPart::total_renormalized:
            return derive_delta_rational(SEPart::coulomb) + derive_delta_rational(SEPart::gaunt) +
                   derive_delta_rational(SEPart::scalar_retardation) - onshell_subtraction_delta();
    }
    return {};
}

double SEKinematics::X(double y) const { return 1.0 + dot(p.spatial(), p.spatial()) / (m * m) * (1.0 - y); }

namespace {

// m^2 - p^2, with on-shell rounding noise (|gap| <= 1e-12 m^2) snapped to 0.
double mass_gap(const FourVector& p, double m) {
    const double gap = m * m - minkowski_square(p);
    return (gap < 0.0 && gap > -1e-12 * m * m) ? 0.0 : gap;
}

}  // namespace

// Both written as gap + x * (...) so that Y, Z -> 0 on shell stay accurate
// near x = 0.
double SEKinematics::Y(double x) const {
    return (mass_gap(p, m) + minkowski_square(p) * x) / (m * m);
}

double SEKinematics::Z(double x, double y) const {
    const double P2 = dot(p.spatial(), p.spatial());
    return (mass_gap(p, m) + x * (p.t * p.t - P2 * y)) / (m * m);
}

std::string SEKinematics::domain_violation() const {
    if (!(m > 0.0)) return "mass must be positive";
    if (!std::isfinite(p.t) || !std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
        return "momentum components must be finite";
    if (minkowski_square(p) > m * m * (1.0 + 1e-12)) return "p^2 exceeds m^2";

    constexpr double slack = -1e-12;
    for (double e : {0.0, 1.0}) {
        if (!(X(e) > 0.0)) return "X <= 0 at an endpoint";
        if (!(Y(e) >= slack)) return "Y < 0 at an endpoint";
    }
    for (int i = 0; i < kGrid; ++i) {
        const double a = (i + 0.5) / kGrid;
        if (!(X(a) > 0.0)) return "X <= 0 inside the unit interval";
        if (!(Y(a) > 0.0)) return "Y <= 0 inside the unit interval";
        for (double e : {0.0, 1.0}) {
            if (!(Z(a, e) >= slack) || !(Z(e, a) >= slack)) return "Z < 0 on an edge";
        }
        for (int j = 0; j < kGrid; ++j) {
            if (!(Z(a, (j + 0.5) / kGrid) > 0.0)) return "Z <= 0 inside the unit square";
        }
    }
    for (double e1 : {0.0, 1.0})
        for (double e2 : {0.0, 1.0})
            if (!(Z(e1, e2) >= slack)) return "Z < 0 at a corner";
    return {};
}

bool SEKinematics::domain_valid() const { return domain_violation().empty(); }

DiracMatrix self_energy_delta(const SEKinematics& kin, SEPart part) {
    return reconstruct(to_basis(self_energy_delta_rational(part)), kin.p, kin.m);
}

namespace {

struct Accum {
    DiracMatrix value = DiracMatrix::Zero();
    double err = 0.0;

    void add(const MatrixQuadResult& r, const char* what) {
        require_converged(r.converged, what);
        value += r.value;
        err += r.err_estimate;
    }
};

// -int dy/sqrt(y) (g.p (1-y) + m) ln X
void coulomb_log(const SEKinematics& k, const QuadSpec& spec, Accum& acc) {
    const DiracMatrix gp = gamma_dot(k.p.spatial());
    const double m = k.m;
    acc.add(integrate_matrix(
                [&](const Point& x) {
                    const double y = x[0];
                    return DiracMatrix((gp * (1.0 - y) + identity() * m) * (-std::log(k.X(y)) / std::sqrt(y)));
                },
                1, spec.with_transforms({AxisTransform::sqrt_lower})),
            "coulomb log integral");
}

// int dx M(x) ln Y for a matrix-valued M
template <class F>
void y_log(const SEKinematics& k, const QuadSpec& spec, F coeff, Accum& acc) {
    acc.add(integrate_matrix(
                [&](const Point& x) { return DiracMatrix(coeff(x[0]) * std::log(k.Y(x[0]))); }, 1,
                spec.with_transforms({AxisTransform::tanh_sinh})),
            "ln Y integral");
}

// c int dx int dy sqrt(y) g.p ln Z
void z_log(const SEKinematics& k, const QuadSpec& spec, double c, Accum& acc) {
    const DiracMatrix gp = gamma_dot(k.p.spatial());
    if (dot(k.p.spatial(), k.p.spatial()) == 0.0) return;
    acc.add(integrate_matrix(
                [&](const Point& x) { return DiracMatrix(gp * (c * std::sqrt(x[1]) * std::log(k.Z(x[0], x[1])))); },
                2, spec.with_transforms({AxisTransform::tanh_sinh, AxisTransform::sqrt_lower})),
            "ln Z integral");
}

}  // namespace

SelfEnergyResult self_energy(const SEKinematics& kin, SEPart part, const QuadSpec& spec, ScalarRetardationForm form) {
    const std::string bad = kin.domain_violation();
    if (!bad.empty()) throw KinematicsOutOfDomain("self-energy: " + bad);

    const DiracMatrix g0p0 = gamma(0) * kin.p.t;
    const DiracMatrix gp = gamma_dot(kin.p.spatial());
    const DiracMatrix m1 = identity() * kin.m;
    const DiracMatrix ps = slash(kin.p);

    Accum acc;
    acc.value = reconstruct(to_basis(self_energy_constant_rational(part)), kin.p, kin.m);

    switch (part) {
        case SEPart::coulomb: coulomb_log(kin, spec, acc); break;
        case SEPart::gaunt:
            y_log(kin, spec, [&](double x) { return DiracMatrix((1.0 - x) * (3.0 * g0p0 - gp) - 3.0 * m1); }, acc);
            break;
        case SEPart::scalar_retardation:
            if (form == ScalarRetardationForm::corrected) {
                y_log(kin, spec, [&](double x) { return DiracMatrix(-(g0p0 * (1.0 - x) + gp * (1.0 - x) - m1)); }, acc);
                z_log(kin, spec, 2.0, acc);
            } else {
                y_log(kin, spec, [&](double x) { return DiracMatrix(-(g0p0 * (1.0 - x) - gp * (1.0 - x) - m1)); }, acc);
                z_log(kin, spec, -3.0, acc);
            }
            break;
        case SEPart::total_renormalized:
            coulomb_log(kin, spec, acc);
            y_log(kin, spec, [&](double x) { return DiracMatrix(2.0 * ((1.0 - x) * ps - m1)); }, acc);
            z_log(kin, spec, 2.0, acc);
            break;
    }

    SelfEnergyResult out;
    out.value = EpsMatrix(self_energy_delta(kin, part), acc.value);
    out.quad_error = acc.err;
    return out;
}

SandwichResult onshell_sandwich(const ThreeVector& p_vec, double m, const QuadSpec& spec) {
    const double E = std::sqrt(m * m + dot(p_vec, p_vec));
    SEKinematics kin{FourVector(E, p_vec), m};
    const SelfEnergyResult se = self_energy(kin, SEPart::total_renormalized, spec);
    const Spinor u = spinor_u(p_vec, m);
    return {sandwich(u, se.value.finite), sandwich(u, se.value.delta_coeff), se.quad_error};
}

}  // namespace cgqed
