#include "cgqed/errors.hpp"
#include "cgqed/symdirac.hpp"

#include <doctest.h>

#include <random>

using namespace cgqed;
using namespace cgqed::sym;

namespace {

GammaExpr canon(const std::string& s, SpatialRoute r = SpatialRoute::direct) {
    return canonicalize(parse_gamma_expr(s), CanonOptions{r, 8});
}

// All chains of up to max_len atoms. Free labels are numbered by position so
// that nothing contracts by accident.
std::vector<std::string> chains(int max_len, bool tildes = false) {
    std::vector<std::string> out = {""};
    std::vector<std::string> layer = {""};
    for (int len = 1; len <= max_len; ++len) {
        const std::string k = std::to_string(len);
        std::vector<std::string> atoms = {"g^0", "g^a" + k, "g^" + std::to_string(1 + len % 3), "sl(A)", "sl(B)"};
        if (tildes) {
            atoms.push_back("tl(B)");
            atoms.push_back("tg^b" + k);
        }
        std::vector<std::string> next;
        for (const std::string& c : layer)
            for (const std::string& a : atoms) next.push_back(c.empty() ? a : c + " " + a);
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

}  // namespace

TEST_SUITE("symdirac") {

TEST_CASE("basic contractions") {
    CHECK(canon("g^mu g_mu").to_string() == "D");
    CHECK(verify_identity(parse_gamma_expr("g^mu g^nu g_mu"), parse_gamma_expr("(2 - D) g^nu")).equal);
    CHECK(verify_identity(parse_gamma_expr("gi_i gi^i"), parse_gamma_expr("D - 1")).equal);
    CHECK(verify_identity_d4(parse_gamma_expr("g^mu sl(A) g_mu"), parse_gamma_expr("-2 sl(A)")).equal);
    CHECK(verify_identity(parse_gamma_expr("g^0 g^0"), parse_gamma_expr("1")).equal);
}

TEST_CASE("canonicalize is idempotent") {
    std::vector<std::string> all = chains(3);
    for (const std::string& c : chains(2, true)) all.push_back(c);
    for (const std::string& c : all) {
        for (const std::string& e : {c, "g^mu " + c + " g_mu", "gi^i " + c + " gi_i", "sl(A) " + c + " sl(A)"}) {
            if (e.empty()) continue;
            CAPTURE(e);
            const GammaExpr once = canon(e);
            CHECK(structurally_equal(canonicalize(once), once));
        }
    }
}

TEST_CASE("spatial contraction: direct rule equals full minus time component") {
    for (const std::string& c : chains(3)) {
        const std::string e = "gi_i " + c + " gi^i";
        CAPTURE(e);
        CHECK(structurally_equal(canon(e, SpatialRoute::direct), canon(e, SpatialRoute::via_full)));
    }
}

TEST_CASE("symbolic and numeric engines agree") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (const std::string& c : chains(2, true)) {
        const std::string e = "g^mu " + c + " g_mu sl(A)";
        CAPTURE(e);
        NumericBinding b;
        b.vectors["A"] = FourVector(u(rng), u(rng), u(rng), u(rng));
        b.vectors["B"] = FourVector(u(rng), u(rng), u(rng), u(rng));
        for (const std::string& l : free_labels(parse_gamma_expr(e))) {
            const int k = l.back() - '0';
            b.labels[l] = k % 4;
        }
        const DiracMatrix direct = evaluate_numeric(parse_gamma_expr(e), b);
        const DiracMatrix viaCanon = evaluate_numeric(substitute_dimension(canon(e), Rational(4)), b);
        CHECK(frobenius(direct - viaCanon) < 1e-12);
    }
}

TEST_CASE("identity rows") {
    const auto& rows = identity_rows();
    int n4 = 0, nd = 0;
    for (const IdentityRow& r : rows) (r.table == IdentityTable::four_dim ? n4 : nd)++;
    CHECK(n4 == 12);
    CHECK(nd == 13);
    CHECK(rows.front().name == "4d-1");
    for (const IdentityRow& r : rows) {
        CAPTURE(r.name);
        const IdentityCheck c = check_identity(r);
        CHECK(c.passed());
        CHECK(c.numeric_residual <= 1e-12);
    }
}

TEST_CASE("a wrong identity is rejected") {
    const IdentityVerdict v = verify_identity(parse_gamma_expr("g^mu g^nu g_mu"), parse_gamma_expr("-2 g^nu"));
    CHECK_FALSE(v.equal);
    CHECK(v.difference.to_string() == "(-D + 4) g^nu");
    // holds at D = 4 only
    CHECK(verify_identity_d4(parse_gamma_expr("g^mu g^nu g_mu"), parse_gamma_expr("-2 g^nu")).equal);
    CHECK_FALSE(verify_identity(parse_gamma_expr("g^0 sl(A) g^0"), parse_gamma_expr("sl(A)")).equal);
}

TEST_CASE("parse errors carry the position") {
    try {
        parse_gamma_expr("g^mu + @");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 7);
    }
    CHECK_THROWS_AS(parse_gamma_expr("sl(A"), ParseError);
    CHECK_THROWS_AS(parse_gamma_expr("g^5"), ParseError);
    CHECK_THROWS_AS(parse_gamma_expr(""), ParseError);
}

TEST_CASE("unbalanced contractions") {
    CHECK_THROWS_AS(parse_gamma_expr("g^mu g^mu"), UnbalancedContraction);
    CHECK_THROWS_AS(parse_gamma_expr("g^mu g_mu g^mu"), UnbalancedContraction);
    CHECK_THROWS_AS(parse_gamma_expr("gi^i g_i"), UnbalancedContraction);
    CHECK_THROWS_AS(parse_gamma_expr("gi^i"), UnbalancedContraction);
}

TEST_CASE("chain length cap") {
    const std::string nine = "g^a g^b g^c g^d g^e g^f g^h g^j g^k";
    CHECK_THROWS_AS(canon(nine), UnsupportedChainLength);
    CHECK_NOTHROW(canon("g^a g^b g^c g^d g^e g^f g^h g^j"));
    // tildes count after expansion
    CHECK_THROWS_AS(canonicalize(parse_gamma_expr("tl(A) g^a tl(B) g^b tl(A)"), CanonOptions{SpatialRoute::direct, 8}),
                    UnsupportedChainLength);
}

}
