#pragma once

// Regularized values A*Delta + B, with Delta = 2/eps - gamma_E + ln 4pi kept
// as an opaque symbol. Terms of order eps are dropped; the overall factor
// m^{-eps/2} is omitted. All physics results are in units of K = alpha/4pi.

#include "cgqed/dirac.hpp"

#include <string>

namespace cgqed {

// eps * Delta -> 2 as eps -> 0.
constexpr double epsilon_times_delta_limit() { return 2.0; }

struct EpsScalar {
    Complex delta_coeff{0.0, 0.0};
    Complex finite{0.0, 0.0};

    EpsScalar() = default;
    EpsScalar(Complex delta, Complex fin) : delta_coeff(delta), finite(fin) {}
    static EpsScalar constant(Complex c) { return {Complex(0.0), c}; }
    static EpsScalar delta() { return {Complex(1.0), Complex(0.0)}; }

    EpsScalar& operator+=(const EpsScalar& o);
    EpsScalar& operator-=(const EpsScalar& o);
    EpsScalar& operator*=(Complex c);
};

EpsScalar operator+(EpsScalar a, const EpsScalar& b);
EpsScalar operator-(EpsScalar a, const EpsScalar& b);
EpsScalar operator-(const EpsScalar& a);
EpsScalar operator*(Complex c, EpsScalar a);
EpsScalar operator*(EpsScalar a, Complex c);
// Throws DeltaSquared when both factors carry a Delta part.
EpsScalar operator*(const EpsScalar& a, const EpsScalar& b);

struct EpsMatrix {
    DiracMatrix delta_coeff = DiracMatrix::Zero();
    DiracMatrix finite = DiracMatrix::Zero();

    EpsMatrix() = default;
    EpsMatrix(const DiracMatrix& delta, const DiracMatrix& fin) : delta_coeff(delta), finite(fin) {}

    EpsMatrix& operator+=(const EpsMatrix& o);
    EpsMatrix& operator-=(const EpsMatrix& o);
    EpsMatrix& operator*=(Complex c);
};

enum class CombineOp { add, sub };

EpsMatrix eps_combine(const EpsMatrix& a, const EpsMatrix& b, CombineOp op);

EpsMatrix operator+(EpsMatrix a, const EpsMatrix& b);
EpsMatrix operator-(EpsMatrix a, const EpsMatrix& b);
EpsMatrix operator*(Complex c, EpsMatrix a);
EpsMatrix operator*(const DiracMatrix& left, const EpsMatrix& a);
EpsMatrix operator*(const EpsMatrix& a, const DiracMatrix& right);
// Scalar-times-matrix with the same Delta^2 rule as EpsScalar.
EpsMatrix operator*(const EpsScalar& s, const DiracMatrix& m);

// {"delta": [[re,im] x 16], "finite": [[re,im] x 16]}, row-major.
std::string to_json(const EpsMatrix& m);
EpsMatrix eps_matrix_from_json(const std::string& text);

}  // namespace cgqed
