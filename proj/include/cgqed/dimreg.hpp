#pragma once

// Master integrals of one-loop dimensional regularization.
//
// DI kinds are normalized as  int d^Dk/(2pi)^D  N(k) / (k^2 + 2kq + s + i0)^n
// (times 1/k_vec^2 for the Coulomb-factor "k" kinds) and returned as
// eps-expanded values A*Delta + B. FI kinds are four-dimensional
// int d^4k  N(k) / (k^2 + 2kq + s + i0)^n  in closed form. Tensor components
// carry upper indices; w = q^2 - s.

#include "cgqed/dirac.hpp"
#include "cgqed/epsx.hpp"
#include "cgqed/quad.hpp"

#include <array>
#include <string>
#include <vector>

namespace cgqed {

enum class IntegralKind { DI4, DI5, DI6, DI4k, DI5k, DI6k, DI7k, FI4, FI5, FI7, FI8, FI10, FI11, FI12, FI13, FI14 };

std::string to_string(IntegralKind k);
int tensor_rank(IntegralKind k);

template <class T>
class Tensor {
public:
    explicit Tensor(int rank = 0) : rank_(rank), data_(static_cast<std::size_t>(1) << (2 * rank)) {}

    int rank() const { return rank_; }
    T& at(int i = 0, int j = 0, int k = 0) { return data_[offset(i, j, k)]; }
    const T& at(int i = 0, int j = 0, int k = 0) const { return data_[offset(i, j, k)]; }
    const std::vector<T>& data() const { return data_; }
    std::vector<T>& data() { return data_; }

private:
    std::size_t offset(int i, int j, int k) const {
        const int idx[3] = {i, j, k};
        std::size_t off = 0;
        for (int r = 0; r < rank_; ++r) off = off * 4 + static_cast<std::size_t>(idx[r]);
        return off;
    }

    int rank_;
    std::vector<T> data_;
};

using ComplexTensor = Tensor<Complex>;
using EpsTensor = Tensor<EpsScalar>;

// Eps expansion of (4pi)^{2-D/2} Gamma(a - D/2) (m^2)^{eps/2} / w^{a-D/2}:
//   a = 1:  -w (Delta + 1 - ln(w/m^2))
//   a = 2:  Delta - ln(w/m^2)
//   a >= 3: Gamma(a-2) / w^{a-2}
// Throws OutsideValidity for a < 1, NonpositiveW for w <= 0.
EpsScalar gamma_w_expansion(int a, double w, double mass_scale);

// Closed-form FI integrals. n is used by FI11 (integer >= 3), FI12, FI13
// (n > 2) and FI14 (n > 3); the other kinds have a fixed power. FI4, FI5
// ignore q. Non-integer powers use the principal branch of (s - q^2 + i0).
ComplexTensor fi_closed(IntegralKind kind, double n, const FourVector& q, double s);
// The rank-2, n = 4 integral exactly as printed with a question mark in the
// source tables: i pi^2/12 [g/(s-q^2) + 2 q q/(s-q^2)^2].
ComplexTensor fi9_printed(const FourVector& q, double s);
// Rank-2 integral re-derived by shifting k -> k - q:
//   i pi^2 Gamma(n-3)/(2 Gamma(n)) [2(n-3) q q/(s-q^2)^{n-2} + g/(s-q^2)^{n-3}].
ComplexTensor fi_rank2_derived(double n, const FourVector& q, double s);

// DI4, DI5, DI6 at D = 4 - eps. Throws NonpositiveW (w <= 0) and
// OutsideValidity when a Gamma argument would be non-positive.
EpsTensor di_covariant(IntegralKind kind, int n, const FourVector& q, double s, double mass_scale = 1.0);

enum class Di7kForm { derived, as_printed };

// DI4k..DI7k: y-parameter integrals with w(y) = -q_vec^2 y^2 + y q0^2 - s y,
// Qhat = (q0, y q_vec), Ahat = g + delta0 delta0 (1-y)/y:
//   DI4k  i(-1)^n/Gamma(n) int dy y^{n-3/2} G(n+1)
//   DI5k  ... (-Qhat) G(n+1)
//   DI6k  ... [Qhat Qhat G(n+1) - Ahat/2 G(n)]
//   DI7k  ... -[Qhat Qhat Qhat G(n+1) - (Ahat Qhat + perms)/2 G(n)]
// with G = gamma_w_expansion / (16 pi^2). The as_printed DI7k variant uses
// the tabulated second part  -1/2 {y (g q + g q + g q) - delta_{mu0} g^{ij} q0 (1-y)}
// for k^i k^mu k^j.
// Throws NonpositiveW when w(y)/y <= 0 somewhere on [0,1], ToleranceNotReached.
EpsTensor di_coulomb(IntegralKind kind, int n, const FourVector& q, double s, const QuadSpec& spec = {},
                     double mass_scale = 1.0, Di7kForm form = Di7kForm::derived);

// A propagator factor (k - shift)^2 - mass2.
struct Denominator {
    FourVector shift;
    double mass2 = 0.0;
};

// Combined denominator k^2 + 2 k q + s with q, s affine in the Feynman
// parameters (x, y):  q = q0 + qx x + qy y,  s = s0 + sx x + sy y.
// Two parameters integrate over 0 <= y <= x <= 1 with the stated weight.
struct FeynmanParametrization {
    int parameters = 1;
    int power = 2;           // exponent of the combined denominator
    double prefactor = 1.0;  // constant weight
    bool weight_x = false;   // extra factor x in the measure
    FourVector q0, qx, qy;
    double s0 = 0.0, sx = 0.0, sy = 0.0;

    FourVector q(double x, double y = 0.0) const;
    double s(double x, double y = 0.0) const;
};

// Supported: powers (1,1), (2,1) and (1,1,1). Throws UnsupportedArity.
FeynmanParametrization feynman_combine(const std::vector<Denominator>& dens, const std::vector<int>& powers);

// Scalar version of the same combination for numeric checks:
// a + (b-a) x  or  a + (b-a) x + (c-b) y.
double combined_scalar(const std::vector<double>& values, double x, double y = 0.0);

}  // namespace cgqed
