#include "cgqed/dimreg.hpp"

#include "cgqed/errors.hpp"

#include <cmath>
#include <numbers>

namespace cgqed {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex I(0.0, 1.0);

double sign_pow(int n) { return n % 2 == 0 ? 1.0 : -1.0; }

// (S + i0)^a on the principal branch.
Complex branch_pow(double S, double a) {
    if (S > 0.0) return std::pow(S, a);
    return std::pow(-S, a) * std::exp(I * kPi * a);
}

double q_component(const FourVector& q, int mu) { return q[mu]; }

void require_nonsingular(double S) {
    if (S == 0.0) throw SingularDenominator("s - q^2 = 0");
}

bool is_integer(double n) { return std::floor(n) == n; }

}  // namespace

std::string to_string(IntegralKind k) {
    switch (k) {
        case IntegralKind::DI4: return "DI4";
        case IntegralKind::DI5: return "DI5";
        case IntegralKind::DI6: return "DI6";
        case IntegralKind::DI4k: return "DI4k";
        case IntegralKind::DI5k: return "DI5k";
        case IntegralKind::DI6k: return "DI6k";
        case IntegralKind::DI7k: return "DI7k";
        case IntegralKind::FI4: return "FI4";
        case IntegralKind::FI5: return "FI5";
        case IntegralKind::FI7: return "FI7";
        case IntegralKind::FI8: return "FI8";
        case IntegralKind::FI10: return "FI10";
        case IntegralKind::FI11: return "FI11";
        case IntegralKind::FI12: return "FI12";
        case IntegralKind::FI13: return "FI13";
        case IntegralKind::FI14: return "FI14";
    }
    return "?";
}

int tensor_rank(IntegralKind k) {
    switch (k) {
        case IntegralKind::DI5:
        case IntegralKind::DI5k:
        case IntegralKind::FI5:
        case IntegralKind::FI8:
        case IntegralKind::FI13: return 1;
        case IntegralKind::DI6:
        case IntegralKind::DI6k:
        case IntegralKind::FI14: return 2;
        case IntegralKind::DI7k: return 3;
        default: return 0;
    }
}

EpsScalar gamma_w_expansion(int a, double w, double mass_scale) {
    if (!(w > 0.0)) throw NonpositiveW("w = " + std::to_string(w) + " is not positive");
    if (a < 1) throw OutsideValidity("Gamma(" + std::to_string(a) + " - D/2) has a double pole");
    const double L = std::log(w / (mass_scale * mass_scale));
    if (a == 1) return {Complex(-w), Complex(-w * (1.0 - L))};
    if (a == 2) return {Complex(1.0), Complex(-L)};
    return EpsScalar::constant(std::tgamma(a - 2.0) / std::pow(w, a - 2.0));
}

ComplexTensor fi_closed(IntegralKind kind, double n, const FourVector& q, double s) {
    const double S = s - minkowski_square(q);
    switch (kind) {
        case IntegralKind::FI4: {
            if (s == 0.0) throw SingularDenominator("s = 0");
            ComplexTensor t(0);
            t.at() = I * kPi * kPi / (2.0 * s);
            return t;
        }
        case IntegralKind::FI5: return ComplexTensor(1);
        case IntegralKind::FI7: return fi_closed(IntegralKind::FI12, 3.0, q, s);
        case IntegralKind::FI8: return fi_closed(IntegralKind::FI13, 3.0, q, s);
        case IntegralKind::FI10: return fi_closed(IntegralKind::FI12, 4.0, q, s);
        case IntegralKind::FI11: {
            if (!is_integer(n) || n < 3.0) throw OutsideValidity("FI11 needs an integer power n >= 3");
            require_nonsingular(S);
            ComplexTensor t(0);
            // (n-3)!/(n-1)! = 1/((n-1)(n-2))
            t.at() = I * kPi * kPi / ((n - 1.0) * (n - 2.0)) / branch_pow(S, n - 2.0);
            return t;
        }
        case IntegralKind::FI12: {
            if (!(n > 2.0)) throw OutsideValidity("FI12 needs n > 2");
            require_nonsingular(S);
            ComplexTensor t(0);
            t.at() = I * kPi * kPi * std::exp(std::lgamma(n - 2.0) - std::lgamma(n)) / branch_pow(S, n - 2.0);
            return t;
        }
        case IntegralKind::FI13: {
            if (!(n > 2.0)) throw OutsideValidity("FI13 needs n > 2");
            require_nonsingular(S);
            const Complex base = -I * kPi * kPi * std::exp(std::lgamma(n - 2.0) - std::lgamma(n)) / branch_pow(S, n - 2.0);
            ComplexTensor t(1);
            for (int mu = 0; mu < 4; ++mu) t.at(mu) = base * q_component(q, mu);
            return t;
        }
        case IntegralKind::FI14: {
            if (!(n > 3.0)) throw OutsideValidity("FI14 needs n > 3");
            require_nonsingular(S);
            const Complex pre = I * kPi * kPi * std::exp(std::lgamma(n - 3.0) - std::lgamma(n)) / 2.0;
            ComplexTensor t(2);
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = 0; nu < 4; ++nu)
                    t.at(mu, nu) = pre * ((2.0 * n - 3.0) * q[mu] * q[nu] / branch_pow(S, n - 2.0) +
                                          metric(mu, nu) / branch_pow(S, n - 3.0));
            return t;
        }
        default: throw OutsideValidity(to_string(kind) + " has no closed four-dimensional form");
    }
}

ComplexTensor fi9_printed(const FourVector& q, double s) {
    const double S = s - minkowski_square(q);
    require_nonsingular(S);
    ComplexTensor t(2);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            t.at(mu, nu) = I * kPi * kPi / 12.0 * (metric(mu, nu) / S + 2.0 * q[mu] * q[nu] / (S * S));
    return t;
}

ComplexTensor fi_rank2_derived(double n, const FourVector& q, double s) {
    if (!(n > 3.0)) throw OutsideValidity("rank-2 integral needs n > 3");
    const double S = s - minkowski_square(q);
    require_nonsingular(S);
    const Complex pre = I * kPi * kPi * std::exp(std::lgamma(n - 3.0) - std::lgamma(n)) / 2.0;
    ComplexTensor t(2);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            t.at(mu, nu) = pre * (2.0 * (n - 3.0) * q[mu] * q[nu] / branch_pow(S, n - 2.0) +
                                  metric(mu, nu) / branch_pow(S, n - 3.0));
    return t;
}

EpsTensor di_covariant(IntegralKind kind, int n, const FourVector& q, double s, double mass_scale) {
    if (n < 1) throw OutsideValidity("power n must be at least 1");
    const double w = minkowski_square(q) - s;
    if (!(w > 0.0)) throw NonpositiveW("w = q^2 - s = " + std::to_string(w));
    const Complex pre = I * sign_pow(n) / (16.0 * kPi * kPi * std::tgamma(static_cast<double>(n)));

    switch (kind) {
        case IntegralKind::DI4: {
            EpsTensor t(0);
            t.at() = pre * gamma_w_expansion(n, w, mass_scale);
            return t;
        }
        case IntegralKind::DI5: {
            const EpsScalar g = pre * gamma_w_expansion(n, w, mass_scale);
            EpsTensor t(1);
            for (int mu = 0; mu < 4; ++mu) t.at(mu) = g * Complex(-q[mu]);
            return t;
        }
        case IntegralKind::DI6: {
            const EpsScalar gn = pre * gamma_w_expansion(n, w, mass_scale);
            const EpsScalar gm = pre * gamma_w_expansion(n - 1, w, mass_scale);
            EpsTensor t(2);
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = 0; nu < 4; ++nu)
                    t.at(mu, nu) = gn * Complex(q[mu] * q[nu]) - gm * Complex(0.5 * metric(mu, nu));
            return t;
        }
        default: throw OutsideValidity(to_string(kind) + " is not a covariant master integral");
    }
}

namespace {

// Integrand coefficients of G(n+1) and G(n) for one tensor component.
struct ComponentWeights {
    double c_hi;  // multiplies G(n+1)
    double c_lo;  // multiplies G(n)
};

ComponentWeights coulomb_weights(IntegralKind kind, Di7kForm form, const FourVector& q, double y,
                                 const std::array<int, 3>& idx) {
    auto Q = [&](int mu) { return mu == 0 ? q.t : y * q[mu]; };
    auto A = [&](int mu, int nu) {
        return metric(mu, nu) + ((mu == 0 && nu == 0) ? (1.0 - y) / y : 0.0);
    };
    switch (kind) {
        case IntegralKind::DI4k: return {1.0, 0.0};
        case IntegralKind::DI5k: return {-Q(idx[0]), 0.0};
        case IntegralKind::DI6k: return {Q(idx[0]) * Q(idx[1]), -0.5 * A(idx[0], idx[1])};
        case IntegralKind::DI7k: {
            const int a = idx[0], b = idx[1], c = idx[2];
            const double hi = -Q(a) * Q(b) * Q(c);
            if (form == Di7kForm::derived) {
                return {hi, 0.5 * (A(a, b) * Q(c) + A(a, c) * Q(b) + A(b, c) * Q(a))};
            }
            // Table as printed for k^i k^mu k^j; the overall minus sign in
            // front of the bracket applies to both parts.
            const int i = a, mu = b, j = c;
            const double lo = -0.5 * (y * (metric(i, mu) * q[j] + metric(mu, j) * q[i] + metric(j, i) * q[mu]) -
                                      (mu == 0 ? metric(i, j) * q.t * (1.0 - y) : 0.0));
            return {hi, lo};
        }
        default: throw OutsideValidity(to_string(kind) + " is not a Coulomb-factor master integral");
    }
}

}  // namespace

EpsTensor di_coulomb(IntegralKind kind, int n, const FourVector& q, double s, const QuadSpec& spec,
                     double mass_scale, Di7kForm form) {
    if (n < 1) throw OutsideValidity("power n must be at least 1");
    const int rank = tensor_rank(kind);
    if (kind != IntegralKind::DI4k && kind != IntegralKind::DI5k && kind != IntegralKind::DI6k &&
        kind != IntegralKind::DI7k)
        throw OutsideValidity(to_string(kind) + " is not a Coulomb-factor master integral");

    const ThreeVector qv = q.spatial();
    const double q2 = dot(qv, qv);
    // w(y) = y (q0^2 - s - q_vec^2 y)
    const double w_over_y_at0 = q.t * q.t - s;
    const double w_over_y_at1 = w_over_y_at0 - q2;
    if (!(w_over_y_at0 > 0.0) || !(w_over_y_at1 > 0.0))
        throw NonpositiveW("w(y) must be positive on (0,1]");

    const Complex pre = I * sign_pow(n) / (16.0 * kPi * kPi * std::tgamma(static_cast<double>(n)));
    QuadSpec qs = spec.with_transforms({AxisTransform::sqrt_lower});

    EpsTensor t(rank);
    const int count = 1 << (2 * rank);
    for (int flat = 0; flat < count; ++flat) {
        std::array<int, 3> idx{0, 0, 0};
        for (int r = rank - 1, f = flat; r >= 0; --r, f /= 4) idx[static_cast<std::size_t>(r)] = f % 4;

        // Real part carries the Delta coefficient, imaginary part the finite
        // part, so both come out of a single quadrature.
        auto integrand = [&](const Point& x) {
            const double y = x[0];
            const double w = y * (w_over_y_at0 - q2 * y);
            const ComponentWeights cw = coulomb_weights(kind, form, q, y, idx);
            const double measure = std::pow(y, n - 1.5);
            EpsScalar v;
            if (cw.c_hi != 0.0) v += Complex(cw.c_hi) * gamma_w_expansion(n + 1, w, mass_scale);
            if (cw.c_lo != 0.0) v += Complex(cw.c_lo) * gamma_w_expansion(n, w, mass_scale);
            return Complex(v.delta_coeff.real() * measure, v.finite.real() * measure);
        };
        const ComplexQuadResult r = integrate_complex(integrand, 1, qs);
        require_converged(r.converged, to_string(kind));
        t.at(idx[0], idx[1], idx[2]) = pre * EpsScalar(Complex(r.value.real()), Complex(r.value.imag()));
    }
    return t;
}

FourVector FeynmanParametrization::q(double x, double y) const { return q0 + x * qx + y * qy; }
double FeynmanParametrization::s(double x, double y) const { return s0 + sx * x + sy * y; }

FeynmanParametrization feynman_combine(const std::vector<Denominator>& dens, const std::vector<int>& powers) {
    if (dens.size() != powers.size()) throw UnsupportedArity("one power per denominator required");
    // (k - P)^2 - M^2 = k^2 + 2k(-P) + (P^2 - M^2)
    auto qof = [](const Denominator& d) { return -1.0 * d.shift; };
    auto sof = [](const Denominator& d) { return minkowski_square(d.shift) - d.mass2; };

    FeynmanParametrization fp;
    if (dens.size() == 2 && powers[0] == 1 && powers[1] == 1) {
        // a + (b - a) x, power 2
        fp.parameters = 1;
        fp.power = 2;
        fp.q0 = qof(dens[0]);
        fp.qx = qof(dens[1]) - qof(dens[0]);
        fp.s0 = sof(dens[0]);
        fp.sx = sof(dens[1]) - sof(dens[0]);
        return fp;
    }
    if (dens.size() == 2 && powers[0] == 2 && powers[1] == 1) {
        // 2 x / [b + (a - b) x]^3
        fp.parameters = 1;
        fp.power = 3;
        fp.prefactor = 2.0;
        fp.weight_x = true;
        fp.q0 = qof(dens[1]);
        fp.qx = qof(dens[0]) - qof(dens[1]);
        fp.s0 = sof(dens[1]);
        fp.sx = sof(dens[0]) - sof(dens[1]);
        return fp;
    }
    if (dens.size() == 3 && powers[0] == 1 && powers[1] == 1 && powers[2] == 1) {
        // 2 [a + (b - a) x + (c - b) y]^-3 over 0 <= y <= x <= 1
        fp.parameters = 2;
        fp.power = 3;
        fp.prefactor = 2.0;
        fp.q0 = qof(dens[0]);
        fp.qx = qof(dens[1]) - qof(dens[0]);
        fp.qy = qof(dens[2]) - qof(dens[1]);
        fp.s0 = sof(dens[0]);
        fp.sx = sof(dens[1]) - sof(dens[0]);
        fp.sy = sof(dens[2]) - sof(dens[1]);
        return fp;
    }
    throw UnsupportedArity("supported denominator powers: (1,1), (2,1), (1,1,1)");
}

double combined_scalar(const std::vector<double>& values, double x, double y) {
    if (values.size() == 2) return values[0] + (values[1] - values[0]) * x;
    if (values.size() == 3) return values[0] + (values[1] - values[0]) * x + (values[2] - values[1]) * y;
    throw UnsupportedArity("combined_scalar takes 2 or 3 values");
}

}  // namespace cgqed
