#pragma once

// Dirac-representation gamma matrices and four-vector kinematics.
//
// Conventions: metric (+,-,-,-); gamma . a means gamma^i a^i summed over the
// spatial components, so that slash(a) = gamma^0 a_0 - gamma . a and
// tilde(a) = gamma^0 a_0 + gamma . a = gamma^0 slash(a) gamma^0.

#include <Eigen/Dense>

#include <array>
#include <complex>

namespace cgqed {

using Complex = std::complex<double>;
using DiracMatrix = Eigen::Matrix4cd;
using Spinor = Eigen::Vector4cd;

struct ThreeVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

struct FourVector {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr FourVector() = default;
    constexpr FourVector(double t_, double x_, double y_, double z_) : t(t_), x(x_), y(y_), z(z_) {}
    constexpr FourVector(double t_, const ThreeVector& v) : t(t_), x(v.x), y(v.y), z(v.z) {}

    // Contravariant component a^mu.
    constexpr double operator[](int mu) const {
        switch (mu) {
            case 0: return t;
            case 1: return x;
            case 2: return y;
            default: return z;
        }
    }
    constexpr ThreeVector spatial() const { return {x, y, z}; }
};

constexpr ThreeVector operator+(const ThreeVector& a, const ThreeVector& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr ThreeVector operator-(const ThreeVector& a, const ThreeVector& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr ThreeVector operator*(double c, const ThreeVector& a) { return {c * a.x, c * a.y, c * a.z}; }
constexpr double dot(const ThreeVector& a, const ThreeVector& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr FourVector operator+(const FourVector& a, const FourVector& b) { return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr FourVector operator-(const FourVector& a, const FourVector& b) { return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr FourVector operator*(double c, const FourVector& a) { return {c * a.t, c * a.x, c * a.y, c * a.z}; }

// Minkowski product a.b = a0 b0 - a.b (spatial).
constexpr double minkowski_dot(const FourVector& a, const FourVector& b) {
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}
constexpr double minkowski_square(const FourVector& a) { return minkowski_dot(a, a); }

// g^{mu nu} for mu, nu in 0..3.
constexpr double metric(int mu, int nu) { return mu != nu ? 0.0 : (mu == 0 ? 1.0 : -1.0); }

// gamma^mu (upper index), mu in 0..3.
const DiracMatrix& gamma(int mu);
const DiracMatrix& identity();

// gamma^i a^i (spatial components only).
DiracMatrix gamma_dot(const ThreeVector& a);
DiracMatrix slash(const FourVector& a);
DiracMatrix tilde(const FourVector& a);

// Positive-energy free spinor, spin along +z (spin_up) or -z, normalized to
// ubar u = 1 with ubar = u^dagger gamma^0.
Spinor spinor_u(const ThreeVector& p, double mass, bool spin_up = true);
// ubar A u for the spinor u.
Complex sandwich(const Spinor& u, const DiracMatrix& a);

// Coefficients on the {m*1, gamma^0 p_0, gamma.p} basis.
struct BasisCoefficients {
    double c_m = 0.0;
    double c_g0p0 = 0.0;
    double c_gp = 0.0;
};

struct BasisDecomposition {
    BasisCoefficients coefficients;
    double residual = 0.0;  // Frobenius norm of mat - reconstruction
};

DiracMatrix reconstruct(const BasisCoefficients& c, const FourVector& p, double mass);

// Projects mat onto {m*1, gamma^0 p_0, gamma.p} by trace inner products.
// Coefficients whose projector needs p_0 != 0 (or p != 0) are left at zero
// when the matrix has no component there; throws DegenerateKinematics
// otherwise, and ResidualOutsideBasis when mat is not in the span.
BasisDecomposition decompose_basis(const DiracMatrix& mat, const FourVector& p, double mass);

double frobenius(const DiracMatrix& m);

}  // namespace cgqed
