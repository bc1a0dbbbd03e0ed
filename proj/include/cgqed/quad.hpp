#pragma once

// Deterministic adaptive quadrature over [0,1]^d, d = 1..3.
//
// Each axis is integrated by adaptive Gauss-Kronrod (7/15) bisection; higher
// dimensions are nested, with the inner tolerances set to a tenth of the
// outer ones. An axis may carry a substitution that tames an endpoint
// singularity:
//   sqrt_lower  x = t^2, dx = 2t dt        (1/sqrt(x) at x = 0)
//   tanh_sinh   x = 1/(1 + exp(-pi sinh t)), t in [-3.1, 3.1]
//               (logarithmic singularities at either end)

#include "cgqed/dirac.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace cgqed {

enum class AxisTransform { none, sqrt_lower, tanh_sinh };

struct QuadSpec {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
    std::vector<AxisTransform> transforms;  // per axis; missing entries mean none

    AxisTransform transform(int axis) const;
    // Throws InvalidQuadSpec.
    void validate(int dim) const;
    QuadSpec with_tolerance(double rel, double abs) const;
    QuadSpec with_transforms(std::vector<AxisTransform> t) const;
};

using Point = std::array<double, 3>;

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    long evaluations = 0;
    bool converged = true;
};

struct ComplexQuadResult {
    Complex value{0.0, 0.0};
    double err_estimate = 0.0;
    long evaluations = 0;
    bool converged = true;
};

struct MatrixQuadResult {
    DiracMatrix value = DiracMatrix::Zero();
    Eigen::Matrix4d entry_err = Eigen::Matrix4d::Zero();  // |re| + |im| error per entry
    double err_estimate = 0.0;                           // max over entries
    long evaluations = 0;
    bool converged = true;
};

using RealIntegrand = std::function<double(const Point&)>;
using ComplexIntegrand = std::function<Complex(const Point&)>;
using MatrixIntegrand = std::function<DiracMatrix(const Point&)>;

// A result with converged == false means max_subdivisions was exhausted on
// some axis; the value is the best available. NonFiniteIntegrand is thrown
// when f returns NaN or infinity at a node.
QuadResult integrate(const RealIntegrand& f, int dim, const QuadSpec& spec = {});
ComplexQuadResult integrate_complex(const ComplexIntegrand& f, int dim, const QuadSpec& spec = {});
MatrixQuadResult integrate_matrix(const MatrixIntegrand& f, int dim, const QuadSpec& spec = {});

// Throws ToleranceNotReached naming `what` unless converged.
void require_converged(bool converged, const std::string& what);

}  // namespace cgqed
