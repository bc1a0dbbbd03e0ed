#pragma once

// Integrals shared by the quad unit tests and the acceptance run: the three
// closed-form ones plus smooth, peaked and log-singular integrands of one to
// three dimensions. `exact` is NaN where no closed form is used.

#include "cgqed/quad.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace corpus {

struct Entry {
    std::string name;
    int dim = 1;
    cgqed::RealIntegrand f;
    std::vector<cgqed::AxisTransform> transforms;
    double exact = std::numeric_limits<double>::quiet_NaN();
};

inline std::vector<Entry> entries() {
    using cgqed::AxisTransform;
    using cgqed::Point;
    return {
        {"1/sqrt(y)", 1, [](const Point& x) { return 1.0 / std::sqrt(x[0]); }, {AxisTransform::sqrt_lower}, 2.0},
        {"ln y", 1, [](const Point& x) { return std::log(x[0]); }, {AxisTransform::tanh_sinh}, -1.0},
        {"ln(y)/sqrt(y)", 1, [](const Point& x) { return std::log(x[0]) / std::sqrt(x[0]); },
         {AxisTransform::sqrt_lower}, -4.0},
        {"peak 1/(1e-2 + (y-0.3)^2)", 1, [](const Point& x) { return 1.0 / (1e-2 + (x[0] - 0.3) * (x[0] - 0.3)); },
         {}, (std::atan(7.0) + std::atan(3.0)) * 10.0},
        {"exp(x+y)", 2, [](const Point& x) { return std::exp(x[0] + x[1]); }, {},
         (std::numbers::e - 1.0) * (std::numbers::e - 1.0)},
        {"ln(1 + x y)", 2, [](const Point& x) { return std::log(1.0 + x[0] * x[1]); }, {}},
        {"sqrt(z) ln(x) / (1 + x y z)", 3,
         [](const Point& x) { return std::sqrt(x[2]) * std::log(x[0]) / (1.0 + x[0] * x[1] * x[2]); },
         {AxisTransform::tanh_sinh}},
    };
}

}  // namespace corpus
