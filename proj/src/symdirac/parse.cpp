#include "cgqed/errors.hpp"
#include "cgqed/symdirac.hpp"

#include <cctype>

namespace cgqed::sym {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    GammaExpr parse() {
        std::vector<Term> terms;
        skip_ws();
        int sign = 1;
        if (int sg = read_sign()) sign = sg;
        while (true) {
            Term t = parse_term();
            if (sign < 0) t.coeff = -t.coeff;
            terms.push_back(std::move(t));
            skip_ws();
            if (at_end()) break;
            sign = read_sign();
            if (!sign) fail("expected '+' or '-' between terms");
        }
        return GammaExpr(std::move(terms));
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    // '+', '-' or the unicode minus sign; 0 if none
    int read_sign() {
        skip_ws();
        if (peek() == '+') {
            ++pos_;
            return 1;
        }
        if (peek() == '-') {
            ++pos_;
            return -1;
        }
        if (s_.compare(pos_, 3, "\xE2\x88\x92") == 0) {
            pos_ += 3;
            return -1;
        }
        return 0;
    }

    bool at_sign() const {
        return peek() == '+' || peek() == '-' || s_.compare(pos_, 3, "\xE2\x88\x92") == 0;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string identifier() {
        skip_ws();
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a name");
        const std::size_t start = pos_;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    long long integer() {
        const std::size_t start = pos_;
        long long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > 100000000000LL) fail("number too large");
            v = 10 * v + (s_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) fail("expected a number");
        return v;
    }

    Rational number() {
        const long long n = integer();
        if (peek() == '/') {
            ++pos_;
            const long long d = integer();
            if (d == 0) fail("zero denominator");
            return Rational(n, d);
        }
        return Rational(n);
    }

    // NAME or a digit 0..3, optionally preceded by '_' (metric/comp arguments)
    Index index(bool upper) {
        skip_ws();
        Index i;
        i.upper = upper;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const long long v = integer();
            if (v > 3) fail("fixed index must be 0..3");
            i.fixed = true;
            i.value = static_cast<int>(v);
        } else {
            i.name = identifier();
        }
        return i;
    }

    Index marked_index() {
        skip_ws();
        bool upper = true;
        if (peek() == '_') {
            upper = false;
            ++pos_;
        }
        return index(upper);
    }

    // parenthesized coefficient: signed products of numbers, D, eps
    Poly coefficient_sum() {
        Poly sum;
        int sign = read_sign();
        if (!sign) sign = 1;
        while (true) {
            Poly prod = coefficient_factor();
            while (true) {
                skip_ws();
                if (peek() == '*') ++pos_;
                skip_ws();
                if (peek() == ')' || at_end() || at_sign()) break;
                prod = prod * coefficient_factor();
            }
            sum += sign < 0 ? -prod : prod;
            skip_ws();
            if (peek() == ')') return sum;
            sign = read_sign();
            if (!sign) fail("expected ')'");
        }
    }

    Poly coefficient_factor() {
        skip_ws();
        if (std::isdigit(static_cast<unsigned char>(peek()))) return Poly(number());
        if (peek() == '(') {
            ++pos_;
            Poly p = coefficient_sum();
            expect(')');
            return p;
        }
        const std::size_t start = pos_;
        const std::string id = identifier();
        if (id == "D") return Poly::D();
        if (id == "eps") return Poly(Rational(4)) - Poly::D();
        pos_ = start;
        fail("expected a number, D or eps inside a coefficient");
    }

    static ScalarAtom metric(const Index& a, const Index& b) {
        ScalarAtom s;
        s.kind = ScalarAtom::Kind::metric;
        s.i = a;
        s.j = b;
        return s;
    }

    Term parse_term() {
        Term t;
        bool any = false;
        while (true) {
            skip_ws();
            if (peek() == '*' && any) {
                ++pos_;
                skip_ws();
            }
            if (at_end() || at_sign()) break;
            parse_factor(t);
            any = true;
        }
        if (!any) fail("empty term");
        return t;
    }

    void parse_factor(Term& t) {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.coeff = t.coeff * Poly(number());
            return;
        }
        if (c == '(') {
            ++pos_;
            t.coeff = t.coeff * coefficient_sum();
            expect(')');
            return;
        }
        const std::size_t start = pos_;
        const std::string id = identifier();
        if (id == "D") {
            t.coeff = t.coeff * Poly::D();
            return;
        }
        if (id == "eps") {
            t.coeff = t.coeff * (Poly(Rational(4)) - Poly::D());
            return;
        }
        if ((id == "g" || id == "gi" || id == "tg") && (peek() == '^' || peek() == '_')) {
            const bool upper = peek() == '^';
            ++pos_;
            Index i = index(upper);
            GammaAtom g;
            g.kind = id == "tg" ? GammaAtom::Kind::tilde_index : GammaAtom::Kind::index;
            if (i.fixed) {
                // lower a fixed index: g_0 = g^0, g_k = -g^k
                if (!i.upper && i.value != 0) t.coeff = -t.coeff;
                i.upper = true;
            } else {
                i.spatial = id == "gi";
            }
            g.idx = i;
            t.chain.push_back(g);
            return;
        }
        if (id == "g" && peek() == '(') {
            ++pos_;
            const Index a = marked_index();
            expect(',');
            const Index b = marked_index();
            expect(')');
            if (a.fixed && b.fixed) {
                int v = a.value == b.value ? 1 : 0;
                if (a.upper == b.upper && a.value != 0) v = -v;
                t.coeff = t.coeff * Poly(Rational(v));
            } else {
                t.scalars.push_back(metric(a, b));
            }
            return;
        }
        if ((id == "sl" || id == "tl" || id == "dot" || id == "comp") && peek() == '(') {
            ++pos_;
            const std::string a = identifier();
            if (id == "dot") {
                expect(',');
                const std::string b = identifier();
                expect(')');
                ScalarAtom s;
                s.kind = ScalarAtom::Kind::dot;
                s.a = std::min(a, b);
                s.b = std::max(a, b);
                t.scalars.push_back(s);
                return;
            }
            if (id == "comp") {
                expect(',');
                const Index i = marked_index();
                expect(')');
                ScalarAtom s;
                s.kind = ScalarAtom::Kind::comp;
                s.a = a;
                s.i = i;
                t.scalars.push_back(s);
                return;
            }
            expect(')');
            GammaAtom g;
            g.kind = id == "sl" ? GammaAtom::Kind::slash : GammaAtom::Kind::tilde_slash;
            g.vec = a;
            t.chain.push_back(g);
            return;
        }
        pos_ = start;
        fail("unknown factor '" + id + "'");
    }
};

struct Occurrence {
    Index idx;
    bool in_chain;
};

void check_contractions(const Term& t) {
    std::map<std::string, std::vector<Occurrence>> occ;
    for (const GammaAtom& g : t.chain)
        if ((g.kind == GammaAtom::Kind::index || g.kind == GammaAtom::Kind::tilde_index) && !g.idx.fixed)
            occ[g.idx.name].push_back({g.idx, true});
    for (const ScalarAtom& s : t.scalars) {
        if (s.kind == ScalarAtom::Kind::metric) {
            if (!s.i.fixed) occ[s.i.name].push_back({s.i, false});
            if (!s.j.fixed) occ[s.j.name].push_back({s.j, false});
        } else if (s.kind == ScalarAtom::Kind::comp && !s.i.fixed) {
            occ[s.i.name].push_back({s.i, false});
        }
    }
    for (const auto& [name, list] : occ) {
        if (list.size() == 1) {
            if (list[0].idx.spatial) throw UnbalancedContraction("spatial label '" + name + "' appears once");
            continue;
        }
        if (list.size() > 2) throw UnbalancedContraction("label '" + name + "' appears more than twice");
        if (list[0].idx.upper == list[1].idx.upper)
            throw UnbalancedContraction("label '" + name + "' must be contracted one up, one down");
        const bool sp = list[0].idx.spatial || list[1].idx.spatial;
        if (sp && !(list[0].idx.spatial && list[1].idx.spatial))
            throw UnbalancedContraction("spatial label '" + name + "' paired with a Lorentz index");
    }
}

}  // namespace

GammaExpr parse_gamma_expr(const std::string& text) {
    GammaExpr e = Parser(text).parse();
    for (const Term& t : e.terms()) check_contractions(t);
    return e;
}

}  // namespace cgqed::sym
