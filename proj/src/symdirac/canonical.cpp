#include "cgqed/errors.hpp"
#include "cgqed/symdirac.hpp"

#include <algorithm>
#include <optional>

namespace cgqed::sym {

namespace {

using Kind = GammaAtom::Kind;
using SKind = ScalarAtom::Kind;

bool is_index(const GammaAtom& g) { return g.kind == Kind::index; }

// g^{ab} for upper fixed indices
int fixed_metric(int a, int b) {
    if (a != b) return 0;
    return a == 0 ? 1 : -1;
}

ScalarAtom make_metric(Index a, Index b) {
    if (b < a) std::swap(a, b);
    ScalarAtom s;
    s.kind = SKind::metric;
    s.i = a;
    s.j = b;
    return s;
}

ScalarAtom make_dot(const std::string& a, const std::string& b) {
    ScalarAtom s;
    s.kind = SKind::dot;
    s.a = std::min(a, b);
    s.b = std::max(a, b);
    return s;
}

ScalarAtom make_comp(const std::string& v, const Index& i) {
    ScalarAtom s;
    s.kind = SKind::comp;
    s.a = v;
    s.i = i;
    return s;
}

// <a,b> = {a,b}/2 as  number * optional scalar atom
struct Inner {
    Rational num{1};
    std::optional<ScalarAtom> atom;
};

Inner inner(const GammaAtom& a, const GammaAtom& b) {
    if (is_index(a) && is_index(b)) {
        // a spatial summation label has no time component
        auto spatial_vs_0 = [](const Index& x, const Index& y) { return x.spatial && y.fixed && y.value == 0; };
        if (spatial_vs_0(a.idx, b.idx) || spatial_vs_0(b.idx, a.idx)) return {Rational(0), std::nullopt};
        if (a.idx.fixed && b.idx.fixed) return {Rational(fixed_metric(a.idx.value, b.idx.value)), std::nullopt};
        return {Rational(1), make_metric(a.idx, b.idx)};
    }
    if (a.kind == Kind::slash && b.kind == Kind::slash) return {Rational(1), make_dot(a.vec, b.vec)};
    if (is_index(a)) return {Rational(1), make_comp(b.vec, a.idx)};
    return {Rational(1), make_comp(a.vec, b.idx)};
}

// Total order on chain atoms: fixed gammas, then named gammas, then slashes.
int rank(const GammaAtom& g) {
    if (is_index(g)) return g.idx.fixed ? 0 : 1;
    return 2;
}

bool chain_less(const GammaAtom& a, const GammaAtom& b) {
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    if (is_index(a)) return a.idx < b.idx;
    return a.vec < b.vec;
}

Term scaled(const Term& t, const Inner& in, Rational extra) {
    Term out = t;
    out.coeff = out.coeff * Poly(in.num * extra);
    if (in.atom) out.scalars.push_back(*in.atom);
    return out;
}

// Raise fixed indices (g_0 = g^0, g_k = -g^k) and evaluate fixed metrics.
bool normalize_fixed(Term& t) {
    bool changed = false;
    Rational sign(1);
    for (GammaAtom& g : t.chain) {
        if ((g.kind == Kind::index || g.kind == Kind::tilde_index) && g.idx.fixed && !g.idx.upper) {
            if (g.idx.value != 0) sign = -sign;
            g.idx.upper = true;
            changed = true;
        }
        if (g.idx.fixed && g.idx.spatial) {
            g.idx.spatial = false;
            changed = true;
        }
    }
    std::vector<ScalarAtom> keep;
    for (ScalarAtom s : t.scalars) {
        if (s.kind == SKind::comp && s.i.fixed && !s.i.upper) {
            if (s.i.value != 0) sign = -sign;
            s.i.upper = true;
            changed = true;
        }
        if (s.kind == SKind::metric) {
            if (s.i.fixed && s.j.fixed) {
                int v = s.i.value == s.j.value ? 1 : 0;
                if (s.i.upper == s.j.upper) v = fixed_metric(s.i.value, s.j.value);
                sign *= v;
                changed = true;
                continue;
            }
            for (Index* x : {&s.i, &s.j}) {
                if (x->fixed && !x->upper) {
                    if (x->value != 0) sign = -sign;
                    x->upper = true;
                    changed = true;
                }
            }
            if (s.j < s.i) {
                std::swap(s.i, s.j);
                changed = true;
            }
        }
        keep.push_back(s);
    }
    t.scalars = std::move(keep);
    if (sign != Rational(1)) t.coeff = t.coeff * Poly(sign);
    return changed;
}

// A~ = g0 A/ g0, g~^s = g0 g^s g0, followed by g0 g0 = 1.
bool expand_tildes(Term& t) {
    bool changed = false;
    std::vector<GammaAtom> out;
    for (const GammaAtom& g : t.chain) {
        if (g.kind == Kind::tilde_slash || g.kind == Kind::tilde_index) {
            GammaAtom core = g;
            core.kind = g.kind == Kind::tilde_slash ? Kind::slash : Kind::index;
            for (const GammaAtom& x : {GammaAtom::gamma0(), core, GammaAtom::gamma0()}) {
                if (x.is_gamma0() && !out.empty() && out.back().is_gamma0()) out.pop_back();
                else out.push_back(x);
            }
            changed = true;
        } else {
            out.push_back(g);
        }
    }
    t.chain = std::move(out);
    return changed;
}

enum class Where { chain, metric_i, metric_j, comp };

struct Occ {
    Where where;
    std::size_t pos;
};

std::vector<Occ> occurrences(const Term& t, const std::string& name) {
    std::vector<Occ> out;
    for (std::size_t k = 0; k < t.chain.size(); ++k)
        if (is_index(t.chain[k]) && !t.chain[k].idx.fixed && t.chain[k].idx.name == name) out.push_back({Where::chain, k});
    for (std::size_t k = 0; k < t.scalars.size(); ++k) {
        const ScalarAtom& s = t.scalars[k];
        if (s.kind == SKind::metric) {
            if (!s.i.fixed && s.i.name == name) out.push_back({Where::metric_i, k});
            if (!s.j.fixed && s.j.name == name) out.push_back({Where::metric_j, k});
        } else if (s.kind == SKind::comp && !s.i.fixed && s.i.name == name) {
            out.push_back({Where::comp, k});
        }
    }
    return out;
}

std::vector<std::string> labels(const Term& t) {
    std::vector<std::string> out;
    for (const GammaAtom& g : t.chain)
        if (is_index(g) && !g.idx.fixed) out.push_back(g.idx.name);
    for (const ScalarAtom& s : t.scalars) {
        if (s.kind == SKind::metric) {
            if (!s.i.fixed) out.push_back(s.i.name);
            if (!s.j.fixed) out.push_back(s.j.name);
        } else if (s.kind == SKind::comp && !s.i.fixed) {
            out.push_back(s.i.name);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void set_index(Term& t, const Occ& o, const Index& v) {
    Index nv = v;
    nv.spatial = false;
    switch (o.where) {
        case Where::chain: t.chain[o.pos].idx = nv; break;
        case Where::metric_i: t.scalars[o.pos].i = nv; break;
        case Where::metric_j: t.scalars[o.pos].j = nv; break;
        case Where::comp: t.scalars[o.pos].i = nv; break;
    }
}

// Contractions involving metric or component atoms.
bool resolve_scalar_contractions(Term& t) {
    for (const std::string& name : labels(t)) {
        const std::vector<Occ> occ = occurrences(t, name);
        if (occ.size() != 2) continue;
        const Occ a = occ[0], b = occ[1];
        if (a.where == Where::chain && b.where == Where::chain) continue;
        // scalar occurrence first
        const Occ s = a.where == Where::chain ? b : a;
        const Occ o = a.where == Where::chain ? a : b;
        ScalarAtom atom = t.scalars[s.pos];
        if (atom.kind == SKind::metric) {
            if (s.pos == o.pos && o.where != Where::chain && o.where != Where::comp) {
                // g(mu, mu)
                t.scalars.erase(t.scalars.begin() + static_cast<long>(s.pos));
                t.coeff = t.coeff * Poly::D();
                return true;
            }
            const Index other = s.where == Where::metric_i ? atom.j : atom.i;
            set_index(t, o, other);
            t.scalars.erase(t.scalars.begin() + static_cast<long>(s.pos));
            return true;
        }
        // component atom
        if (o.where == Where::chain) {
            t.chain[o.pos] = GammaAtom::slash(atom.a);
            t.scalars.erase(t.scalars.begin() + static_cast<long>(s.pos));
            return true;
        }
        const ScalarAtom partner = t.scalars[o.pos];
        if (partner.kind == SKind::comp) {
            const ScalarAtom d = make_dot(atom.a, partner.a);
            const std::size_t hi = std::max(s.pos, o.pos), lo = std::min(s.pos, o.pos);
            t.scalars.erase(t.scalars.begin() + static_cast<long>(hi));
            t.scalars.erase(t.scalars.begin() + static_cast<long>(lo));
            t.scalars.push_back(d);
            return true;
        }
        // partner is a metric: g(mu, x) comp(A, mu) -> comp(A, x)
        const Index other = o.where == Where::metric_i ? partner.j : partner.i;
        t.scalars[s.pos].i = other;
        t.scalars.erase(t.scalars.begin() + static_cast<long>(o.pos));
        return true;
    }
    return false;
}

std::vector<GammaAtom> slice(const std::vector<GammaAtom>& c, std::size_t b, std::size_t e) {
    return {c.begin() + static_cast<long>(b), c.begin() + static_cast<long>(e)};
}

Term with_chain(const Term& t, std::vector<GammaAtom> chain, Rational factor) {
    Term out = t;
    out.chain = std::move(chain);
    out.coeff = out.coeff * Poly(factor);
    return out;
}

std::vector<GammaAtom> join(std::initializer_list<std::vector<GammaAtom>> parts) {
    std::vector<GammaAtom> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// Eliminates the first contracted gamma pair; empty if there is none.
std::optional<std::vector<Term>> contract(const Term& t, const CanonOptions& opt) {
    for (std::size_t p = 0; p < t.chain.size(); ++p) {
        const GammaAtom& a0 = t.chain[p];
        if (!is_index(a0) || a0.idx.fixed) continue;
        std::size_t q = p + 1;
        while (q < t.chain.size() && !(is_index(t.chain[q]) && t.chain[q].idx.same_label(a0.idx))) ++q;
        if (q == t.chain.size()) continue;

        const bool spatial = a0.idx.spatial;
        const auto L = slice(t.chain, 0, p);
        const auto X = slice(t.chain, p + 1, q);
        const auto R = slice(t.chain, q + 1, t.chain.size());
        const GammaAtom a1 = t.chain[q];
        std::vector<Term> out;

        if (spatial && opt.spatial == SpatialRoute::via_full) {
            GammaAtom f0 = a0, f1 = a1;
            f0.idx.spatial = f1.idx.spatial = false;
            out.push_back(with_chain(t, join({L, {f0}, X, {f1}, R}), Rational(1)));
            out.push_back(with_chain(t, join({L, {GammaAtom::gamma0()}, X, {GammaAtom::gamma0()}, R}), Rational(-1)));
            return out;
        }
        if (X.empty()) {
            Term r = with_chain(t, join({L, R}), Rational(1));
            r.coeff = r.coeff * (spatial ? Poly::D() - Poly(Rational(1)) : Poly::D());
            out.push_back(r);
            return out;
        }
        const GammaAtom x1 = X.front();
        const auto Y = slice(X, 1, X.size());
        // g^mu x1 Y g_mu = -x1 (g^mu Y g_mu) + 2 Y x1
        out.push_back(with_chain(t, join({L, {x1, a0}, Y, {a1}, R}), Rational(-1)));
        out.push_back(with_chain(t, join({L, Y, {x1}, R}), Rational(2)));
        if (spatial) {
            // spatial part of x1 only: x1 - <x1, g0> g0
            const Term base = with_chain(t, join({L, Y, {GammaAtom::gamma0()}, R}), Rational(1));
            out.push_back(scaled(base, inner(x1, GammaAtom::gamma0()), Rational(-2)));
        }
        return out;
    }
    return std::nullopt;
}

std::optional<std::vector<Term>> sort_step(const Term& t) {
    for (std::size_t k = 0; k + 1 < t.chain.size(); ++k) {
        const GammaAtom& a = t.chain[k];
        const GammaAtom& b = t.chain[k + 1];
        auto rest = join({slice(t.chain, 0, k), slice(t.chain, k + 2, t.chain.size())});
        if (a == b) return std::vector<Term>{scaled(with_chain(t, rest, Rational(1)), inner(a, b), Rational(1))};
        if (chain_less(b, a)) {
            std::vector<GammaAtom> swapped = t.chain;
            std::swap(swapped[k], swapped[k + 1]);
            return std::vector<Term>{with_chain(t, swapped, Rational(-1)),
                                     scaled(with_chain(t, rest, Rational(1)), inner(a, b), Rational(2))};
        }
    }
    return std::nullopt;
}

struct TermKey {
    std::vector<ScalarAtom> scalars;
    std::vector<GammaAtom> chain;

    bool operator<(const TermKey& o) const {
        if (chain.size() != o.chain.size()) return chain.size() < o.chain.size();
        if (scalars != o.scalars) return scalars < o.scalars;
        return std::lexicographical_compare(chain.begin(), chain.end(), o.chain.begin(), o.chain.end(),
                                            [](const GammaAtom& x, const GammaAtom& y) { return x.key() < y.key(); });
    }
};

GammaExpr merge(const std::vector<Term>& terms) {
    std::map<TermKey, Poly> acc;
    for (Term t : terms) {
        if (t.coeff.is_zero()) continue;
        std::sort(t.scalars.begin(), t.scalars.end());
        acc[TermKey{t.scalars, t.chain}] += t.coeff;
    }
    std::vector<Term> out;
    for (auto& [k, c] : acc) {
        if (c.is_zero()) continue;
        out.push_back(Term{c, k.scalars, k.chain});
    }
    return GammaExpr(std::move(out));
}

}  // namespace

GammaExpr canonicalize(const GammaExpr& e, const CanonOptions& opt) {
    std::vector<Term> work;
    for (Term t : e.terms()) {
        expand_tildes(t);
        if (t.chain.size() > opt.max_chain)
            throw UnsupportedChainLength("chain of " + std::to_string(t.chain.size()) + " gamma factors exceeds " +
                                         std::to_string(opt.max_chain));
        work.push_back(std::move(t));
    }

    std::vector<Term> done;
    while (!work.empty()) {
        Term t = std::move(work.back());
        work.pop_back();
        if (t.coeff.is_zero()) continue;
        if (normalize_fixed(t) | resolve_scalar_contractions(t)) {
            work.push_back(std::move(t));
            continue;
        }
        if (auto r = contract(t, opt)) {
            for (Term& x : *r) work.push_back(std::move(x));
            continue;
        }
        if (auto r = sort_step(t)) {
            for (Term& x : *r) work.push_back(std::move(x));
            continue;
        }
        done.push_back(std::move(t));
    }
    return merge(done);
}

GammaExpr substitute_dimension(const GammaExpr& e, Rational d) {
    std::vector<Term> terms = e.terms();
    for (Term& t : terms) t.coeff = t.coeff.substitute_d(d);
    return merge(terms);
}

bool structurally_equal(const GammaExpr& a, const GammaExpr& b) {
    if (a.terms().size() != b.terms().size()) return false;
    for (std::size_t k = 0; k < a.terms().size(); ++k) {
        const Term& x = a.terms()[k];
        const Term& y = b.terms()[k];
        if (!(x.coeff == y.coeff) || x.scalars != y.scalars || x.chain != y.chain) return false;
    }
    return true;
}

IdentityVerdict verify_identity(const GammaExpr& lhs, const GammaExpr& rhs, const CanonOptions& opt) {
    IdentityVerdict v;
    v.difference = canonicalize(lhs - rhs, opt);
    v.equal = v.difference.is_zero();
    return v;
}

IdentityVerdict verify_identity_d4(const GammaExpr& lhs, const GammaExpr& rhs, const CanonOptions& opt) {
    IdentityVerdict v;
    v.difference = substitute_dimension(canonicalize(lhs - rhs, opt), Rational(4));
    v.equal = v.difference.is_zero();
    return v;
}

}  // namespace cgqed::sym
