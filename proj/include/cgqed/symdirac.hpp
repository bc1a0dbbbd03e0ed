#pragma once

// Symbolic gamma-matrix chains with coefficients polynomial in the dimension D.
//
// A GammaExpr is a sum of terms  coeff(D) * scalars * chain  where the chain
// is an ordered product of gamma atoms (indexed gammas, slashed and tilded
// vectors) and the scalars are dot products, metric tensors and vector
// components. Canonicalization eliminates tildes (A~ = g0 A/ g0), contracted
// index pairs and the spatial contractions, then sorts each chain by
// anticommutation so that equal expressions have identical canonical forms.
//
// Text grammar: see docs/grammar.md.

#include "cgqed/dirac.hpp"

#include <boost/rational.hpp>

#include <map>
#include <tuple>
#include <string>
#include <vector>

namespace cgqed::sym {

using Rational = boost::rational<long long>;

// Polynomial in D with rational coefficients.
class Poly {
public:
    Poly() = default;
    Poly(Rational c);  // NOLINT(google-explicit-constructor)
    static Poly D();

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Rational>& terms() const { return terms_; }
    Rational evaluate(Rational d) const;
    Poly substitute_d(Rational d) const { return Poly(evaluate(d)); }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    void add_term(int power, Rational c);
    std::map<int, Rational> terms_;
};

struct Index {
    bool fixed = false;  // numeric index 0..3
    int value = 0;
    std::string name;
    bool upper = true;
    bool spatial = false;  // label of a spatial-only contraction (gi)

    static Index fixed_upper(int v) { return {true, v, {}, true, false}; }
    bool same_label(const Index& o) const { return !fixed && !o.fixed && name == o.name; }
    auto key() const { return std::tie(fixed, value, name, upper, spatial); }
    bool operator==(const Index& o) const { return key() == o.key(); }
    bool operator<(const Index& o) const { return key() < o.key(); }
    std::string to_string() const;
};

struct GammaAtom {
    enum class Kind { index, slash, tilde_slash, tilde_index };
    Kind kind = Kind::index;
    Index idx;        // index and tilde_index
    std::string vec;  // slash and tilde_slash

    static GammaAtom gamma0() { return {Kind::index, Index::fixed_upper(0), {}}; }
    static GammaAtom slash(const std::string& v) { return {Kind::slash, {}, v}; }
    bool is_gamma0() const { return kind == Kind::index && idx.fixed && idx.value == 0; }
    auto key() const { return std::tie(kind, idx, vec); }
    bool operator==(const GammaAtom& o) const { return key() == o.key(); }
    std::string to_string() const;
};

struct ScalarAtom {
    enum class Kind { dot, metric, comp };
    Kind kind = Kind::dot;
    std::string a, b;  // vectors (dot: both, comp: a)
    Index i, j;        // metric: both, comp: i

    auto key() const { return std::tie(kind, a, b, i, j); }
    bool operator==(const ScalarAtom& o) const { return key() == o.key(); }
    bool operator<(const ScalarAtom& o) const { return key() < o.key(); }
    std::string to_string() const;
};

struct Term {
    Poly coeff{Rational(1)};
    std::vector<ScalarAtom> scalars;
    std::vector<GammaAtom> chain;
};

class GammaExpr {
public:
    GammaExpr() = default;
    explicit GammaExpr(std::vector<Term> terms) : terms_(std::move(terms)) {}

    const std::vector<Term>& terms() const { return terms_; }
    std::vector<Term>& terms() { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GammaExpr operator-(const GammaExpr& o) const;
    GammaExpr operator+(const GammaExpr& o) const;

    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

// Throws ParseError (with byte offset) and UnbalancedContraction.
GammaExpr parse_gamma_expr(const std::string& text);

enum class SpatialRoute {
    direct,        // gi_i a Y gi^i = -a (gi_i Y gi^i) + 2 Y (a - <a,g0> g0), gi_i gi^i = D - 1
    via_full,      // gi_i X gi^i = g_mu X g^mu - g^0 X g^0
};

struct CanonOptions {
    SpatialRoute spatial = SpatialRoute::direct;
    std::size_t max_chain = 8;
};

// Throws UnsupportedChainLength when a chain exceeds max_chain gammas after
// tilde elimination.
GammaExpr canonicalize(const GammaExpr& e, const CanonOptions& opt = {});

// Replaces D by the given value in every coefficient and merges like terms.
GammaExpr substitute_dimension(const GammaExpr& e, Rational d);

bool structurally_equal(const GammaExpr& a, const GammaExpr& b);

struct IdentityVerdict {
    bool equal = false;
    GammaExpr difference;  // canonical lhs - rhs
};

IdentityVerdict verify_identity(const GammaExpr& lhs, const GammaExpr& rhs, const CanonOptions& opt = {});
// Same with D = 4 substituted after canonicalization.
IdentityVerdict verify_identity_d4(const GammaExpr& lhs, const GammaExpr& rhs, const CanonOptions& opt = {});

// Numeric value at D = 4 by explicit summation over contracted indices.
// Vectors are looked up by name; free labels by name (values 0..3).
struct NumericBinding {
    std::map<std::string, FourVector> vectors;
    std::map<std::string, int> labels;
};

DiracMatrix evaluate_numeric(const GammaExpr& e, const NumericBinding& b);

// Free (uncontracted, named) labels and vector names occurring in e.
std::vector<std::string> free_labels(const GammaExpr& e);
std::vector<std::string> vector_names(const GammaExpr& e);

enum class IdentityTable { four_dim, d_dim };

struct IdentityRow {
    IdentityTable table;
    std::string name;
    std::vector<std::string> sides;  // all sides must be equal
};

// The 12 four-dimensional relations and 13 D-dimensional relations.
const std::vector<IdentityRow>& identity_rows();

struct IdentityCheck {
    std::string name;
    IdentityTable table;
    bool symbolic_ok = false;
    bool numeric_ok = false;
    double numeric_residual = 0.0;
    std::string difference;  // non-empty on symbolic failure
    bool passed() const { return symbolic_ok && numeric_ok; }
};

// Four-dimensional rows: symbolic with D = 4 plus numeric 4x4 check;
// D-dimensional rows: symbolic in D plus the numeric shadow at D = 4.
// Random vectors come from a fixed seed.
IdentityCheck check_identity(const IdentityRow& row, unsigned seed = 12345, int samples = 20);

}  // namespace cgqed::sym
