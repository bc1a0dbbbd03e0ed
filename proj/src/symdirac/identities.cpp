#include "cgqed/errors.hpp"
#include "cgqed/symdirac.hpp"

#include <random>

namespace cgqed::sym {

namespace {

double to_double(Rational r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

struct Slot {
    std::string name;
    bool spatial = false;
};

// value of an index at its position: lowering multiplies by g_vv
double lower_factor(const Index& i, int v) { return i.upper ? 1.0 : metric(v, v); }

int index_value(const Index& i, const std::map<std::string, int>& vals) {
    if (i.fixed) return i.value;
    auto it = vals.find(i.name);
    if (it == vals.end()) throw Error("no value bound for index '" + i.name + "'");
    return it->second;
}

const FourVector& vec(const NumericBinding& b, const std::string& name) {
    auto it = b.vectors.find(name);
    if (it == b.vectors.end()) throw Error("no value bound for vector '" + name + "'");
    return it->second;
}

DiracMatrix term_value(const Term& t, const NumericBinding& b, const std::map<std::string, int>& vals) {
    double c = to_double(t.coeff.evaluate(Rational(4)));
    for (const ScalarAtom& s : t.scalars) {
        switch (s.kind) {
            case ScalarAtom::Kind::dot: c *= minkowski_dot(vec(b, s.a), vec(b, s.b)); break;
            case ScalarAtom::Kind::comp: {
                const int v = index_value(s.i, vals);
                c *= vec(b, s.a)[v] * lower_factor(s.i, v);
                break;
            }
            case ScalarAtom::Kind::metric: {
                const int v = index_value(s.i, vals), w = index_value(s.j, vals);
                c *= s.i.upper == s.j.upper ? metric(v, w) : (v == w ? 1.0 : 0.0);
                break;
            }
        }
    }
    DiracMatrix m = identity() * c;
    for (const GammaAtom& g : t.chain) {
        switch (g.kind) {
            case GammaAtom::Kind::index: {
                const int v = index_value(g.idx, vals);
                m = m * (gamma(v) * lower_factor(g.idx, v));
                break;
            }
            case GammaAtom::Kind::tilde_index: {
                // g~ = g for the time component and -g for spatial ones
                const int v = index_value(g.idx, vals);
                m = m * (gamma(v) * (lower_factor(g.idx, v) * (v == 0 ? 1.0 : -1.0)));
                break;
            }
            case GammaAtom::Kind::slash: m = m * slash(vec(b, g.vec)); break;
            case GammaAtom::Kind::tilde_slash: m = m * tilde(vec(b, g.vec)); break;
        }
    }
    return m;
}

std::vector<Slot> contracted(const Term& t) {
    std::map<std::string, std::pair<int, bool>> count;
    auto add = [&](const Index& i) {
        if (i.fixed) return;
        auto& c = count[i.name];
        ++c.first;
        c.second = c.second || i.spatial;
    };
    for (const GammaAtom& g : t.chain)
        if (g.kind == GammaAtom::Kind::index || g.kind == GammaAtom::Kind::tilde_index) add(g.idx);
    for (const ScalarAtom& s : t.scalars) {
        if (s.kind == ScalarAtom::Kind::metric) {
            add(s.i);
            add(s.j);
        } else if (s.kind == ScalarAtom::Kind::comp) {
            add(s.i);
        }
    }
    std::vector<Slot> out;
    for (const auto& [n, c] : count)
        if (c.first == 2) out.push_back({n, c.second});
    return out;
}

DiracMatrix sum_over(const Term& t, const NumericBinding& b, const std::vector<Slot>& slots, std::size_t k,
                     std::map<std::string, int>& vals) {
    if (k == slots.size()) return term_value(t, b, vals);
    DiracMatrix acc = DiracMatrix::Zero();
    for (int v = slots[k].spatial ? 1 : 0; v < 4; ++v) {
        vals[slots[k].name] = v;
        acc += sum_over(t, b, slots, k + 1, vals);
    }
    vals.erase(slots[k].name);
    return acc;
}

}  // namespace

DiracMatrix evaluate_numeric(const GammaExpr& e, const NumericBinding& b) {
    DiracMatrix total = DiracMatrix::Zero();
    for (const Term& t : e.terms()) {
        std::map<std::string, int> vals = b.labels;
        total += sum_over(t, b, contracted(t), 0, vals);
    }
    return total;
}

const std::vector<IdentityRow>& identity_rows() {
    using T = IdentityTable;
    static const std::vector<IdentityRow> rows = [] {
        std::vector<IdentityRow> r = {
            {T::four_dim, "", {"g^mu g^n g_mu", "-2 g^n"}},
            {T::four_dim, "", {"g^mu sl(A) g_mu", "-2 sl(A)"}},
            {T::four_dim, "", {"g^mu g_mu", "4"}},
            {T::four_dim, "", {"g^0 g_0", "g^0 g^0", "1"}},
            {T::four_dim, "", {"g^s g^0", "g^0 tg^s"}},
            {T::four_dim, "", {"sl(A) g^0", "g^0 tl(A)"}},
            {T::four_dim, "", {"g^0 g^s g^0", "tg^s"}},
            {T::four_dim, "", {"g^0 sl(A) g^0", "tl(A)"}},
            {T::four_dim, "", {"g^0 g^s g^t g^0", "tg^s tg^t"}},
            {T::four_dim, "", {"g^0 sl(A) sl(B) g^0", "tl(A) tl(B)"}},
            {T::four_dim, "", {"g^0 g^b g^s g^t g^0", "tg^b tg^s tg^t"}},
            {T::four_dim, "", {"g^0 sl(A) sl(B) sl(C) g^0", "tl(A) tl(B) tl(C)"}},

            {T::d_dim, "", {"g^mu g_mu", "4 - eps"}},
            {T::d_dim, "", {"g^mu g^s g_mu", "-(2 - eps) g^s"}},
            {T::d_dim, "", {"g^mu sl(A) g_mu", "-(2 - eps) sl(A)"}},
            {T::d_dim, "", {"g^mu g^s g^t g_mu", "4 g(s,t) - eps g^s g^t"}},
            {T::d_dim, "", {"g^mu sl(A) sl(B) g_mu", "4 dot(A,B) - eps sl(A) sl(B)"}},
            {T::d_dim, "", {"g^mu g^b g^s g^t g_mu", "-2 g^t g^s g^b + eps g^b g^s g^t"}},
            {T::d_dim, "", {"gi_i gi^i", "3 - eps"}},
            {T::d_dim, "", {"gi_i g^s gi^i", "-(2 - eps) g^s - tg^s"}},
            {T::d_dim, "", {"gi_i sl(A) gi^i", "-(2 - eps) sl(A) - tl(A)"}},
            {T::d_dim, "", {"gi_i g^s g^t gi^i", "4 g(s,t) - tg^s tg^t - eps g^s g^t"}},
            {T::d_dim, "", {"gi_i sl(A) sl(B) gi^i", "4 dot(A,B) - tl(A) tl(B) - eps sl(A) sl(B)"}},
            {T::d_dim, "", {"gi_i g^b g^s g^t gi^i", "-2 g^t g^s g^b - tg^b tg^s tg^t + eps g^b g^s g^t"}},
            {T::d_dim, "",
             {"gi_i sl(A) sl(B) sl(C) gi^i", "-2 sl(C) sl(B) sl(A) - tl(A) tl(B) tl(C) + eps sl(A) sl(B) sl(C)"}},
        };
        int n4 = 0, nd = 0;
        for (IdentityRow& row : r) {
            row.name = (row.table == T::four_dim ? "4d-" + std::to_string(++n4) : "Dd-" + std::to_string(++nd));
        }
        return r;
    }();
    return rows;
}

IdentityCheck check_identity(const IdentityRow& row, unsigned seed, int samples) {
    IdentityCheck out;
    out.name = row.name;
    out.table = row.table;

    std::vector<GammaExpr> sides;
    for (const std::string& s : row.sides) sides.push_back(parse_gamma_expr(s));

    out.symbolic_ok = true;
    for (std::size_t k = 1; k < sides.size(); ++k) {
        const IdentityVerdict v = row.table == IdentityTable::four_dim ? verify_identity_d4(sides[0], sides[k])
                                                                        : verify_identity(sides[0], sides[k]);
        if (!v.equal) {
            out.symbolic_ok = false;
            if (out.difference.empty()) out.difference = v.difference.to_string();
        }
    }

    std::vector<std::string> labels, vectors;
    for (const GammaExpr& e : sides) {
        for (const std::string& l : free_labels(e)) labels.push_back(l);
        for (const std::string& v : vector_names(e)) vectors.push_back(v);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        NumericBinding b;
        for (const std::string& v : vectors) {
            if (b.vectors.count(v)) continue;
            b.vectors[v] = FourVector(U(rng), U(rng), U(rng), U(rng));
        }
        // every assignment of the free labels
        std::size_t combos = 1;
        for (std::size_t k = 0; k < labels.size(); ++k) combos *= 4;
        for (std::size_t c = 0; c < combos; ++c) {
            std::size_t r = c;
            for (const std::string& l : labels) {
                b.labels[l] = static_cast<int>(r % 4);
                r /= 4;
            }
            const DiracMatrix ref = evaluate_numeric(sides[0], b);
            for (std::size_t k = 1; k < sides.size(); ++k)
                worst = std::max(worst, (evaluate_numeric(sides[k], b) - ref).cwiseAbs().maxCoeff());
        }
    }
    out.numeric_residual = worst;
    out.numeric_ok = worst <= 1e-12;
    return out;
}

}  // namespace cgqed::sym
