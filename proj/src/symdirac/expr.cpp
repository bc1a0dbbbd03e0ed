#include "cgqed/symdirac.hpp"

#include <set>
#include <sstream>

namespace cgqed::sym {

Poly::Poly(Rational c) { add_term(0, c); }

Poly Poly::D() {
    Poly p;
    p.add_term(1, Rational(1));
    return p;
}

void Poly::add_term(int power, Rational c) {
    if (c == Rational(0)) return;
    auto [it, inserted] = terms_.emplace(power, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Rational(0)) terms_.erase(it);
    }
}

Rational Poly::evaluate(Rational d) const {
    Rational sum(0);
    for (const auto& [k, c] : terms_) {
        Rational pw(1);
        for (int i = 0; i < k; ++i) pw *= d;
        sum += c * pw;
    }
    return sum;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    Poly out;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) out.add_term(k1 + k2, c1 * c2);
    return out;
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [k, c] : terms_) out.add_term(k, -c);
    return out;
}

namespace {

std::string rational_string(Rational r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

}  // namespace

// highest power first, e.g. "2 - D", "D^2 - 1/2"
std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        const int k = it->first;
        if (first) {
            if (c < Rational(0)) {
                os << '-';
                c = -c;
            }
        } else {
            os << (c < Rational(0) ? " - " : " + ");
            if (c < Rational(0)) c = -c;
        }
        first = false;
        if (k == 0) {
            os << rational_string(c);
            continue;
        }
        if (c != Rational(1)) os << rational_string(c) << ' ';
        os << 'D';
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

std::string Index::to_string() const {
    if (fixed) return std::to_string(value);
    return name;
}

std::string GammaAtom::to_string() const {
    const char pos = idx.upper ? '^' : '_';
    switch (kind) {
        case Kind::index: return std::string(idx.spatial ? "gi" : "g") + pos + idx.to_string();
        case Kind::tilde_index: return std::string("tg") + pos + idx.to_string();
        case Kind::slash: return "sl(" + vec + ")";
        case Kind::tilde_slash: return "tl(" + vec + ")";
    }
    return "?";
}

std::string ScalarAtom::to_string() const {
    switch (kind) {
        case Kind::dot: return "dot(" + a + "," + b + ")";
        case Kind::metric: {
            // positions are written out only when lowered
            auto s = [](const Index& x) { return (x.upper ? "" : "_") + x.to_string(); };
            return "g(" + s(i) + "," + s(j) + ")";
        }
        case Kind::comp: return "comp(" + a + "," + (i.upper ? "" : "_") + i.to_string() + ")";
    }
    return "?";
}

GammaExpr GammaExpr::operator+(const GammaExpr& o) const {
    std::vector<Term> t = terms_;
    t.insert(t.end(), o.terms_.begin(), o.terms_.end());
    return GammaExpr(std::move(t));
}

GammaExpr GammaExpr::operator-(const GammaExpr& o) const {
    std::vector<Term> t = terms_;
    for (Term x : o.terms_) {
        x.coeff = -x.coeff;
        t.push_back(std::move(x));
    }
    return GammaExpr(std::move(t));
}

std::string GammaExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Poly c = t.coeff;
        bool neg = false;
        if (c.terms().size() == 1 && c.terms().begin()->second < Rational(0)) {
            neg = true;
            c = -c;
        }
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;

        std::vector<std::string> parts;
        const bool bare = t.scalars.empty() && t.chain.empty();
        if (c.terms().size() > 1) parts.push_back("(" + c.to_string() + ")");
        else if (!(c == Poly(Rational(1))) || bare) parts.push_back(c.to_string());
        for (const ScalarAtom& s : t.scalars) parts.push_back(s.to_string());
        for (const GammaAtom& g : t.chain) parts.push_back(g.to_string());
        for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " " : "") << parts[i];
    }
    return os.str();
}

namespace {

void collect_indices(const Term& t, std::vector<Index>& out) {
    for (const GammaAtom& g : t.chain)
        if (g.kind == GammaAtom::Kind::index || g.kind == GammaAtom::Kind::tilde_index) out.push_back(g.idx);
    for (const ScalarAtom& s : t.scalars) {
        if (s.kind == ScalarAtom::Kind::metric) {
            out.push_back(s.i);
            out.push_back(s.j);
        } else if (s.kind == ScalarAtom::Kind::comp) {
            out.push_back(s.i);
        }
    }
}

}  // namespace

std::vector<std::string> free_labels(const GammaExpr& e) {
    std::set<std::string> names;
    for (const Term& t : e.terms()) {
        std::vector<Index> idx;
        collect_indices(t, idx);
        std::map<std::string, int> count;
        for (const Index& i : idx)
            if (!i.fixed) ++count[i.name];
        for (const auto& [n, c] : count)
            if (c == 1) names.insert(n);
    }
    return {names.begin(), names.end()};
}

std::vector<std::string> vector_names(const GammaExpr& e) {
    std::set<std::string> names;
    for (const Term& t : e.terms()) {
        for (const GammaAtom& g : t.chain)
            if (g.kind == GammaAtom::Kind::slash || g.kind == GammaAtom::Kind::tilde_slash) names.insert(g.vec);
        for (const ScalarAtom& s : t.scalars) {
            if (s.kind == ScalarAtom::Kind::dot) {
                names.insert(s.a);
                names.insert(s.b);
            } else if (s.kind == ScalarAtom::Kind::comp) {
                names.insert(s.a);
            }
        }
    }
    return {names.begin(), names.end()};
}

}  // namespace cgqed::sym
