#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "powerstab/errors.hpp"
#include "powerstab/groebner.hpp"
#include "test_support.hpp"

using namespace powerstab;
using powerstab::testing::P;
using powerstab::testing::Ps;

namespace {

const auto ZZ = CoefficientDomain::integers();
const auto QQ = CoefficientDomain::rationals();

bool same_ideal(const GroebnerBasis& gb, const std::vector<Polynomial>& gens) {
    auto other = groebner_basis(gb.context(), gens, gb.order());
    for (const auto& g : gens)
        if (!gb.contains(g)) return false;
    for (const auto& e : gb.elements())
        if (!other.contains(e)) return false;
    return true;
}

std::vector<std::string> strings(const GroebnerBasis& gb) {
    std::vector<std::string> out;
    for (const auto& e : gb.elements()) out.push_back(e.to_string(gb.order()));
    return out;
}

}  // namespace

TEST_CASE("reduce examples") {
    for (auto dom : {ZZ, QQ}) {
        auto ctx = make_context(dom, {"X", "Y"});
        auto lex = MonomialOrder::lex(2);
        CHECK(reduce(P(ctx, "X^2 + Y"), Ps(ctx, {"X^2 - Y"}), lex) == P(ctx, "2*Y"));
        CHECK(reduce(Polynomial(ctx), Ps(ctx, {"X^2 - Y", "Y"}), lex).is_zero());
        CHECK(reduce(P(ctx, "X + Y"), {}, lex) == P(ctx, "X + Y"));
    }
    auto zx = make_context(ZZ, {"X"});
    CHECK(reduce(P(zx, "X^3"), Ps(zx, {"X^2 - 2"}), MonomialOrder::lex(1)) == P(zx, "2*X"));
    // Euclidean coefficient reduction keeps nonnegative remainders below lc
    CHECK(reduce(P(zx, "7*X - 1"), Ps(zx, {"3*X", "4"}), MonomialOrder::lex(1)) == P(zx, "X + 3"));
}

TEST_CASE("reduce postcondition: normal form is irreducible and congruent") {
    std::mt19937_64 rng(21);
    auto ctx = make_context(ZZ, {"x", "y"});
    auto ord = MonomialOrder::grevlex(2);
    for (int i = 0; i < 80; ++i) {
        std::vector<Polynomial> G = {testing::random_poly(ctx, rng, 3, 2, 6), testing::random_poly(ctx, rng, 3, 2, 6)};
        auto f = testing::random_poly(ctx, rng, 5, 4, 30);
        auto r = reduce(f, G, ord);
        for (const auto& t : r.terms())
            for (const auto& g : G) {
                if (g.is_zero()) continue;
                auto [lm, lc] = g.leading_term(ord);
                if (!lm.divides(t.mono)) continue;
                auto [q, rem] = euclid_divide(Coefficient(ZZ, t.coeff), lc);
                CHECK(q.is_zero());
            }
        // f - r lies in the ideal of G
        auto gb = groebner_basis(ctx, G, ord);
        CHECK(gb.contains(f - r));
    }
}

TEST_CASE("s_polynomial examples") {
    auto q = make_context(QQ, {"X", "Y"});
    auto lex = MonomialOrder::lex(2);
    CHECK(s_polynomial(P(q, "X^2 - Y"), P(q, "X*Y - 1"), lex) == P(q, "X - Y^2"));
    CHECK(s_polynomial(P(q, "X^2 - Y"), P(q, "X^2 - Y"), lex).is_zero());
    auto zx = make_context(ZZ, {"X"});
    auto s = s_polynomial(P(zx, "2*X"), P(zx, "X^2 - 2"), MonomialOrder::lex(1));
    CHECK(s == P(zx, "4"));
    CHECK_THROWS_AS(s_polynomial(Polynomial(zx), P(zx, "X"), MonomialOrder::lex(1)), PreconditionError);
}

TEST_CASE("g_polynomial examples") {
    auto zx = make_context(ZZ, {"X"});
    auto lex = MonomialOrder::lex(1);
    CHECK(g_polynomial(P(zx, "2*X"), P(zx, "3*X"), lex) == P(zx, "X"));
    CHECK(g_polynomial(P(zx, "4"), P(zx, "6"), lex) == P(zx, "2"));
    auto f = P(zx, "-3*X^2 + X + 5");
    auto g = g_polynomial(f, f, lex);
    CHECK((g == f || g == -f));
    auto q = make_context(QQ, {"X"});
    CHECK_THROWS_AS(g_polynomial(P(q, "X"), P(q, "X"), MonomialOrder::lex(1)), UnsupportedOperation);
}

TEST_CASE("groebner_basis examples") {
    SUBCASE("(X^2 - 2, X^3) over ZZ") {
        auto zx = make_context(ZZ, {"X"});
        auto gb = groebner_basis(zx, Ps(zx, {"X^2 - 2", "X^3"}), MonomialOrder::lex(1));
        // nonnegative remainders turn the tail -2 into +2 modulo the constant 4
        CHECK(strings(gb) == std::vector<std::string>{"X^2 + 2", "2*X", "4"});
        CHECK(same_ideal(gb, Ps(zx, {"X^2 - 2", "2*X", "4"})));
        CHECK(satisfies_buchberger_criterion(gb));
    }
    SUBCASE("twisted cubic-like curve (T^3, T^4, T^5)") {
        auto ctx = make_context(QQ, {"T", "Y", "Z", "W"});
        auto ord = MonomialOrder::elimination(4, {0});
        auto gb = groebner_basis(ctx, Ps(ctx, {"Y - T^3", "Z - T^4", "W - T^5"}), ord);
        CHECK(satisfies_buchberger_criterion(gb));
        std::vector<Polynomial> t_free;
        for (const auto& e : gb.elements())
            if (!e.involves(0)) t_free.push_back(e);
        auto expect = Ps(ctx, {"Y^3 - Z*W", "Z^2 - Y*W", "W^2 - Y^2*Z"});
        auto kernel = groebner_basis(ctx, t_free, MonomialOrder::grevlex(4));
        auto target = groebner_basis(ctx, expect, MonomialOrder::grevlex(4));
        CHECK(kernel == target);
    }
    SUBCASE("unit and zero ideals") {
        for (auto dom : {ZZ, QQ}) {
            auto ctx = make_context(dom, {"x", "y"});
            auto gb = groebner_basis(ctx, Ps(ctx, {"1"}), MonomialOrder::grevlex(2));
            CHECK(gb.is_unit_ideal());
            CHECK(groebner_basis(ctx, Ps(ctx, {"3", "x + 1", "x"}), MonomialOrder::grevlex(2)).is_unit_ideal());
            CHECK(groebner_basis(ctx, Ps(ctx, {"0"}), MonomialOrder::grevlex(2)).is_zero_ideal());
        }
    }
    SUBCASE("modular coefficients are rejected") {
        auto ctx = make_context(CoefficientDomain::modular(5), {"x"});
        CHECK_THROWS_AS(groebner_basis(ctx, Ps(ctx, {"x"}), MonomialOrder::lex(1)), UnsupportedOperation);
    }
}

TEST_CASE("contains examples") {
    auto zx = make_context(ZZ, {"X"});
    auto lex = MonomialOrder::lex(1);
    auto gens = Ps(zx, {"X^2 - 2", "X^3"});
    auto gb = groebner_basis(zx, gens, lex);
    CHECK(contains(gb, P(zx, "4")));
    CHECK_FALSE(contains(gb, P(zx, "2")));
    std::vector<Polynomial> sq;
    for (const auto& a : gens)
        for (const auto& b : gens) sq.push_back(a * b);
    auto gb2 = groebner_basis(zx, sq, lex);
    CHECK(contains(gb2, P(zx, "8")));
    CHECK_FALSE(contains(gb2, P(zx, "4")));
    auto other = make_context(ZZ, {"Y"});
    CHECK_THROWS_AS(contains(gb, P(other, "Y")), ContextMismatch);
}

TEST_CASE("degree guard trips as a resource error") {
    auto zx = make_context(ZZ, {"X"});
    CHECK_THROWS_AS(groebner_basis(zx, Ps(zx, {"X^600"}), MonomialOrder::lex(1)), ResourceLimit);
}

namespace {

void check_random_ideals(CoefficientDomain dom, std::uint64_t seed, int count, int nvars) {
    std::mt19937_64 rng(seed);
    std::vector<std::string> names = {"x", "y", "z"};
    names.resize(static_cast<std::size_t>(nvars));
    auto ctx = make_context(dom, names);
    std::vector<MonomialOrder> orders = {MonomialOrder::lex(ctx->num_vars()), MonomialOrder::grevlex(ctx->num_vars())};
    if (nvars > 1) orders.push_back(MonomialOrder::elimination(ctx->num_vars(), {0}));
    for (int i = 0; i < count; ++i) {
        std::vector<Polynomial> gens;
        int n = 2 + static_cast<int>(rng() % 2);
        for (int k = 0; k < n; ++k) gens.push_back(testing::random_poly(ctx, rng, 3, 2, 5));
        const auto& ord = orders[rng() % orders.size()];
        auto gb = groebner_basis(ctx, gens, ord);
        CHECK(satisfies_buchberger_criterion(gb));
        // ideal preservation both ways
        for (const auto& g : gens) CHECK(gb.contains(g));
        auto back = groebner_basis(ctx, gens, ord);
        for (const auto& e : gb.elements()) CHECK(back.contains(e));
        // determinism under permutation of the generators
        auto perm = gens;
        std::reverse(perm.begin(), perm.end());
        std::rotate(perm.begin(), perm.begin() + 1, perm.end());
        CHECK(groebner_basis(ctx, perm, ord) == gb);
        // positive / monic normalisation and descending sort
        for (std::size_t k = 0; k < gb.elements().size(); ++k) {
            auto [lm, lc] = gb.elements()[k].leading_term(ord);
            if (dom.is_rationals())
                CHECK(lc.value() == 1);
            else
                CHECK(sgn(lc.value()) > 0);
            if (k) CHECK(ord.less(lm, gb.elements()[k - 1].leading_term(ord).first));
        }
    }
}

}  // namespace

TEST_CASE("random ideals over QQ: criterion, preservation, determinism") { check_random_ideals(QQ, 101, 40, 3); }

TEST_CASE("random ideals over ZZ[x]: criterion, preservation, determinism") { check_random_ideals(ZZ, 202, 60, 1); }

TEST_CASE("random ideals over ZZ[x,y]: criterion, preservation, determinism") { check_random_ideals(ZZ, 303, 30, 2); }

TEST_CASE("strong basis detects integer constants of the ideal") {
    auto zx = make_context(ZZ, {"X"});
    // (5, X^2 + 1): no smaller constant
    auto gb = groebner_basis(zx, Ps(zx, {"5", "X^2 + 1"}), MonomialOrder::lex(1));
    CHECK(strings(gb) == std::vector<std::string>{"X^2 + 1", "5"});
    // (2X + 1, 3): 2X + 1 = 2(X + 2) - 3, so X + 2 is in the ideal
    auto gb2 = groebner_basis(zx, Ps(zx, {"2*X + 1", "3"}), MonomialOrder::lex(1));
    CHECK(strings(gb2) == std::vector<std::string>{"X + 2", "3"});
}

TEST_CASE("coprime leading monomials with shared leading coefficients still need the S-pair") {
    auto zx = make_context(ZZ, {"x"});
    // 4 and 4x + 3 have coprime leading monomials, yet x*4 - (4x + 3) = -3
    CHECK(groebner_basis(zx, Ps(zx, {"4", "4*x + 3"}), MonomialOrder::lex(1)).is_unit_ideal());
    auto gb = groebner_basis(zx, Ps(zx, {"-2*x - 2", "-x^2 + 6"}), MonomialOrder::lex(1));
    CHECK(strings(gb) == std::vector<std::string>{"x^2 + 4", "2*x + 2", "10"});
    CHECK(satisfies_buchberger_criterion(gb));
}
