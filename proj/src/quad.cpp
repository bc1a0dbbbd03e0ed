#include "cgqed/quad.hpp"

#include "cgqed/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

namespace cgqed {

AxisTransform QuadSpec::transform(int axis) const {
    return axis < static_cast<int>(transforms.size()) ? transforms[static_cast<std::size_t>(axis)]
                                                      : AxisTransform::none;
}

void QuadSpec::validate(int dim) const {
    if (dim < 1 || dim > 3) throw InvalidQuadSpec("dimension must be 1, 2 or 3, got " + std::to_string(dim));
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw InvalidQuadSpec("tolerances must be positive");
    if (max_subdivisions < 1) throw InvalidQuadSpec("max_subdivisions must be at least 1");
    if (static_cast<int>(transforms.size()) > dim) throw InvalidQuadSpec("more axis transforms than dimensions");
}

QuadSpec QuadSpec::with_tolerance(double rel, double abs) const {
    QuadSpec s = *this;
    s.rel_tol = rel;
    s.abs_tol = abs;
    return s;
}

QuadSpec QuadSpec::with_transforms(std::vector<AxisTransform> t) const {
    QuadSpec s = *this;
    s.transforms = std::move(t);
    return s;
}

void require_converged(bool converged, const std::string& what) {
    if (!converged) throw ToleranceNotReached(what + ": quadrature tolerance not reached");
}

namespace {

constexpr double kTanhSinhHalfRange = 3.1;

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct AxisMap {
    double lo;
    double hi;
};

AxisMap axis_range(AxisTransform t) {
    if (t == AxisTransform::tanh_sinh) return {-kTanhSinhHalfRange, kTanhSinhHalfRange};
    return {0.0, 1.0};
}

// Maps t to x in (0,1) and returns dx/dt.
double map_axis(AxisTransform tr, double t, double& x) {
    switch (tr) {
        case AxisTransform::none:
            x = t;
            return 1.0;
        case AxisTransform::sqrt_lower:
            x = t * t;
            return 2.0 * t;
        case AxisTransform::tanh_sinh: {
            const double s = std::numbers::pi * std::sinh(t);
            const double e = std::exp(-std::abs(s));
            const double small = e / (1.0 + e);  // min(x, 1 - x)
            x = s >= 0.0 ? 1.0 - small : small;
            return std::numbers::pi * std::cosh(t) * small * (1.0 - small);
        }
    }
    return 1.0;
}

template <int N>
using Vec = Eigen::Matrix<double, N, 1>;

template <int N>
struct Estimate {
    Vec<N> val = Vec<N>::Zero();
    Vec<N> err = Vec<N>::Zero();
};

template <int N>
struct Interval {
    double a;
    double b;
    Estimate<N> est;
    double score;  // max component error
    bool operator<(const Interval& o) const { return score < o.score; }
};

template <int N>
class Nested {
public:
    using Fn = std::function<Vec<N>(const Point&)>;

    Nested(const Fn& f, int dim, const QuadSpec& spec) : f_(f), dim_(dim), spec_(spec) {}

    Estimate<N> run() {
        Point x{0.0, 0.0, 0.0};
        return axis(0, x, spec_.rel_tol, spec_.abs_tol);
    }

    long evaluations() const { return evals_; }
    bool converged() const { return converged_; }

private:
    Estimate<N> node(int ax, Point& x, double t, double rel, double abs) {
        const double jac = map_axis(spec_.transform(ax), t, x[static_cast<std::size_t>(ax)]);
        Estimate<N> e;
        if (ax == dim_ - 1) {
            ++evals_;
            e.val = f_(x);
            if (!e.val.allFinite()) {
                throw NonFiniteIntegrand("integrand not finite at (" + std::to_string(x[0]) + ", " +
                                         std::to_string(x[1]) + ", " + std::to_string(x[2]) + ")");
            }
            e.val *= jac;
        } else {
            e = axis(ax + 1, x, rel / 10.0, abs / 10.0);
            e.val *= jac;
            e.err *= std::abs(jac);
        }
        return e;
    }

    Estimate<N> gk15(int ax, Point& x, double a, double b, double rel, double abs) {
        const double center = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        std::array<Estimate<N>, 15> fv;
        fv[0] = node(ax, x, center, rel, abs);
        for (int j = 0; j < 7; ++j) {
            const double dx = half * kXgk[static_cast<std::size_t>(j)];
            fv[static_cast<std::size_t>(1 + 2 * j)] = node(ax, x, center - dx, rel, abs);
            fv[static_cast<std::size_t>(2 + 2 * j)] = node(ax, x, center + dx, rel, abs);
        }

        Vec<N> kron = kWgk[7] * fv[0].val;
        Vec<N> gauss = kWg[3] * fv[0].val;
        Vec<N> inner = kWgk[7] * fv[0].err;
        for (int j = 0; j < 7; ++j) {
            const auto& lo = fv[static_cast<std::size_t>(1 + 2 * j)];
            const auto& hi = fv[static_cast<std::size_t>(2 + 2 * j)];
            kron += kWgk[static_cast<std::size_t>(j)] * (lo.val + hi.val);
            inner += kWgk[static_cast<std::size_t>(j)] * (lo.err + hi.err);
            if (j % 2 == 1) gauss += kWg[static_cast<std::size_t>(j / 2)] * (lo.val + hi.val);
        }
        const Vec<N> mean = kron * 0.5;
        Vec<N> asc = kWgk[7] * (fv[0].val - mean).cwiseAbs();
        Vec<N> absint = kWgk[7] * fv[0].val.cwiseAbs();
        for (int j = 0; j < 7; ++j) {
            const auto& lo = fv[static_cast<std::size_t>(1 + 2 * j)];
            const auto& hi = fv[static_cast<std::size_t>(2 + 2 * j)];
            asc += kWgk[static_cast<std::size_t>(j)] * ((lo.val - mean).cwiseAbs() + (hi.val - mean).cwiseAbs());
            absint += kWgk[static_cast<std::size_t>(j)] * (lo.val.cwiseAbs() + hi.val.cwiseAbs());
        }

        Estimate<N> out;
        out.val = kron * half;
        constexpr double eps = std::numeric_limits<double>::epsilon();
        for (int i = 0; i < N; ++i) {
            const double resasc = asc[i] * std::abs(half);
            const double resabs = absint[i] * std::abs(half);
            double err = std::abs((kron[i] - gauss[i]) * half);
            if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
            if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(err, 50.0 * eps * resabs);
            out.err[i] = err + inner[i] * std::abs(half);
        }
        return out;
    }

    Estimate<N> axis(int ax, Point& x, double rel, double abs) {
        const AxisMap range = axis_range(spec_.transform(ax));
        std::priority_queue<Interval<N>> work;
        std::vector<Interval<N>> done;

        auto make = [&](double a, double b) {
            Interval<N> iv{a, b, gk15(ax, x, a, b, rel, abs), 0.0};
            iv.score = iv.est.err.maxCoeff();
            return iv;
        };

        Estimate<N> total;
        {
            auto iv = make(range.lo, range.hi);
            total = iv.est;
            work.push(iv);
        }
        int splits = 0;
        auto target = [&]() { return std::max(abs, rel * total.val.cwiseAbs().maxCoeff()); };
        while (total.err.maxCoeff() > target()) {
            if (splits >= spec_.max_subdivisions || work.empty()) {
                converged_ = false;
                break;
            }
            Interval<N> iv = work.top();
            work.pop();
            const double mid = 0.5 * (iv.a + iv.b);
            if (!(mid > iv.a && mid < iv.b)) {
                done.push_back(iv);
                continue;
            }
            auto left = make(iv.a, mid);
            auto right = make(mid, iv.b);
            total.val += left.est.val + right.est.val - iv.est.val;
            total.err += left.est.err + right.est.err - iv.est.err;
            work.push(left);
            work.push(right);
            ++splits;
        }

        // Re-sum in a fixed order to avoid drift from the incremental updates.
        while (!work.empty()) {
            done.push_back(work.top());
            work.pop();
        }
        std::sort(done.begin(), done.end(), [](const Interval<N>& l, const Interval<N>& r) { return l.a < r.a; });
        Estimate<N> sum;
        for (const auto& iv : done) {
            sum.val += iv.est.val;
            sum.err += iv.est.err;
        }
        return sum;
    }

    const Fn& f_;
    int dim_;
    const QuadSpec& spec_;
    long evals_ = 0;
    bool converged_ = true;
};

template <int N>
std::pair<Estimate<N>, std::pair<long, bool>> run_nested(const typename Nested<N>::Fn& f, int dim,
                                                         const QuadSpec& spec) {
    spec.validate(dim);
    Nested<N> nested(f, dim, spec);
    auto est = nested.run();
    return {est, {nested.evaluations(), nested.converged()}};
}

}  // namespace

QuadResult integrate(const RealIntegrand& f, int dim, const QuadSpec& spec) {
    auto [est, info] = run_nested<1>([&](const Point& x) { return Vec<1>(f(x)); }, dim, spec);
    return {est.val[0], est.err[0], info.first, info.second};
}

ComplexQuadResult integrate_complex(const ComplexIntegrand& f, int dim, const QuadSpec& spec) {
    auto [est, info] = run_nested<2>(
        [&](const Point& x) {
            const Complex v = f(x);
            return Vec<2>(v.real(), v.imag());
        },
        dim, spec);
    return {Complex(est.val[0], est.val[1]), est.err[0] + est.err[1], info.first, info.second};
}

MatrixQuadResult integrate_matrix(const MatrixIntegrand& f, int dim, const QuadSpec& spec) {
    auto [est, info] = run_nested<32>(
        [&](const Point& x) {
            const DiracMatrix m = f(x);
            Vec<32> v;
            for (int i = 0; i < 16; ++i) {
                v[2 * i] = m(i / 4, i % 4).real();
                v[2 * i + 1] = m(i / 4, i % 4).imag();
            }
            return v;
        },
        dim, spec);
    MatrixQuadResult out;
    for (int i = 0; i < 16; ++i) {
        out.value(i / 4, i % 4) = Complex(est.val[2 * i], est.val[2 * i + 1]);
        out.entry_err(i / 4, i % 4) = est.err[2 * i] + est.err[2 * i + 1];
    }
    out.err_estimate = out.entry_err.maxCoeff();
    out.evaluations = info.first;
    out.converged = info.second;
    return out;
}

}  // namespace cgqed
