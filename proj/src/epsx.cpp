#include "cgqed/epsx.hpp"

#include "cgqed/errors.hpp"

#include <json.hpp>

namespace cgqed {

EpsScalar& EpsScalar::operator+=(const EpsScalar& o) {
    delta_coeff += o.delta_coeff;
    finite += o.finite;
    return *this;
}

EpsScalar& EpsScalar::operator-=(const EpsScalar& o) {
    delta_coeff -= o.delta_coeff;
    finite -= o.finite;
    return *this;
}

EpsScalar& EpsScalar::operator*=(Complex c) {
    delta_coeff *= c;
    finite *= c;
    return *this;
}

EpsScalar operator+(EpsScalar a, const EpsScalar& b) { return a += b; }
EpsScalar operator-(EpsScalar a, const EpsScalar& b) { return a -= b; }
EpsScalar operator-(const EpsScalar& a) { return {-a.delta_coeff, -a.finite}; }
EpsScalar operator*(Complex c, EpsScalar a) { return a *= c; }
EpsScalar operator*(EpsScalar a, Complex c) { return a *= c; }

EpsScalar operator*(const EpsScalar& a, const EpsScalar& b) {
    if (a.delta_coeff != Complex(0.0) && b.delta_coeff != Complex(0.0)) {
        throw DeltaSquared("product of two Delta-divergent values");
    }
    return {a.delta_coeff * b.finite + a.finite * b.delta_coeff, a.finite * b.finite};
}

EpsMatrix& EpsMatrix::operator+=(const EpsMatrix& o) {
    delta_coeff += o.delta_coeff;
    finite += o.finite;
    return *this;
}

EpsMatrix& EpsMatrix::operator-=(const EpsMatrix& o) {
    delta_coeff -= o.delta_coeff;
    finite -= o.finite;
    return *this;
}

EpsMatrix& EpsMatrix::operator*=(Complex c) {
    delta_coeff *= c;
    finite *= c;
    return *this;
}

EpsMatrix eps_combine(const EpsMatrix& a, const EpsMatrix& b, CombineOp op) {
    return op == CombineOp::add ? a + b : a - b;
}

EpsMatrix operator+(EpsMatrix a, const EpsMatrix& b) { return a += b; }
EpsMatrix operator-(EpsMatrix a, const EpsMatrix& b) { return a -= b; }
EpsMatrix operator*(Complex c, EpsMatrix a) { return a *= c; }

EpsMatrix operator*(const DiracMatrix& left, const EpsMatrix& a) {
    return {left * a.delta_coeff, left * a.finite};
}

EpsMatrix operator*(const EpsMatrix& a, const DiracMatrix& right) {
    return {a.delta_coeff * right, a.finite * right};
}

EpsMatrix operator*(const EpsScalar& s, const DiracMatrix& m) {
    return {s.delta_coeff * m, s.finite * m};
}

namespace {

nlohmann::json matrix_json(const DiracMatrix& m) {
    nlohmann::json arr = nlohmann::json::array();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) arr.push_back({m(r, c).real(), m(r, c).imag()});
    return arr;
}

DiracMatrix matrix_from(const nlohmann::json& arr) {
    if (!arr.is_array() || arr.size() != 16) throw Error("eps matrix JSON: expected 16 entries");
    DiracMatrix m;
    for (int i = 0; i < 16; ++i) {
        const auto& e = arr[static_cast<std::size_t>(i)];
        m(i / 4, i % 4) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
    return m;
}

}  // namespace

std::string to_json(const EpsMatrix& m) {
    nlohmann::json j;
    j["delta"] = matrix_json(m.delta_coeff);
    j["finite"] = matrix_json(m.finite);
    return j.dump();
}

EpsMatrix eps_matrix_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    return {matrix_from(j.at("delta")), matrix_from(j.at("finite"))};
}

}  // namespace cgqed
