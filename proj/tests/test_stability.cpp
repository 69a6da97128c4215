#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "powerstab/errors.hpp"
#include "powerstab/serialize.hpp"
#include "powerstab/stability.hpp"
#include "powerstab/suites.hpp"
#include "test_support.hpp"

using namespace powerstab;
using namespace powerstab::testing;
using namespace powerstab::suites;

namespace {

const RingTower ZZX = RingTower::parse("ZZ[X]");

Ideal zx_ideal(const std::vector<std::string>& gens) { return Ideal(ZZX.context(), Ps(ZZX.context(), gens)); }

Ideal base_ideal(const RingTower& tower, const std::vector<std::string>& gens) {
    return Ideal(tower.base_context(), Ps(tower.base_context(), gens));
}

// Row-level invariants every report must satisfy regardless of verdict.
void check_rows(const StabilityReport& r) {
    auto ctx = r.ideal.context();
    Ideal power = r.ideal;
    for (const auto& row : r.rows) {
        if (row.t > 1) power = power_step(power, r.ideal);
        CHECK(is_subset(row.expected, row.contraction));
        CHECK(row.witness.has_value() == !row.equal);
        if (row.witness) {
            CHECK(power.contains(row.witness->embed(ctx)));
            CHECK_FALSE(row.expected.contains(*row.witness));
        }
    }
}

// The graded check first fails at n exactly when the power check first fails at n + 1.
void check_agreement(const Ideal& I, const RingTower& tower, unsigned t_max) {
    auto st = check_power_stable(I, tower, t_max);
    auto gr = check_graded_criterion(I, tower, t_max - 1);
    REQUIRE(st.complete());
    REQUIRE_FALSE(gr.resource_error);
    auto sf = st.first_failure();
    auto gf = gr.first_failure();
    CHECK(sf.has_value() == gf.has_value());
    if (sf && gf) CHECK(*gf + 1 == *sf);
}

void require_stable(const Ideal& I, const RingTower& tower, unsigned t_max) {
    auto st = check_power_stable(I, tower, t_max);
    INFO(I.to_string(), " ", st.overall());
    CHECK(st.stable_up_to_tmax());
    check_rows(st);
}

}  // namespace

TEST_CASE("check_power_stable examples") {
    auto bad = check_power_stable(zx_ideal({"X^2 - 2", "X^3"}), ZZX, 3);
    CHECK(bad.overall() == "first-failure t=2");
    REQUIRE(bad.rows.size() == 3);
    CHECK(bad.rows[0].equal);
    auto base = ZZX.base_context();
    CHECK(equals(bad.rows[0].contraction, base_ideal(ZZX, {"4"})));
    CHECK_FALSE(bad.rows[1].equal);
    CHECK(bad.rows[1].witness->to_string() == "8");
    CHECK(equals(bad.rows[1].expected, base_ideal(ZZX, {"16"})));
    CHECK_FALSE(bad.observed_window_start().has_value());
    check_rows(bad);

    auto good = check_power_stable(zx_ideal({"5", "X^2 + 1"}), ZZX, 4);
    CHECK(good.overall() == "stable-up-to-4");
    long v = 1;
    for (const auto& row : good.rows) {
        v *= 5;
        CHECK(equals(row.contraction, Ideal(base, {Polynomial::constant(base, v)})));
    }
    CHECK(good.observed_window_start() == 1u);
    check_rows(good);

    auto principal = check_power_stable(zx_ideal({"X"}), ZZX, 4);
    CHECK(principal.stable_up_to_tmax());
    for (const auto& row : principal.rows) CHECK(row.contraction.is_zero());

    CHECK_THROWS_AS(check_power_stable(zx_ideal({"X"}), ZZX, 0), PreconditionError);
    auto other = make_context(CoefficientDomain::integers(), {"Y"});
    CHECK_THROWS_AS(check_power_stable(Ideal(other, {Polynomial::variable(other, "Y")}), ZZX, 2), ContextMismatch);
}

TEST_CASE("trivial ideals are stable") {
    auto zx = ZZX.context();
    CHECK(check_power_stable(Ideal::zero(zx), ZZX, 3).stable_up_to_tmax());
    CHECK(check_power_stable(Ideal::unit(zx), ZZX, 3).stable_up_to_tmax());
    CHECK(check_power_stable(zx_ideal({"6"}), ZZX, 3).stable_up_to_tmax());
}

TEST_CASE("resource limit yields a partial report") {
    auto I = zx_ideal({"X^300 - 2", "X^301"});
    auto r = check_power_stable(I, ZZX, 4);
    REQUIRE(r.resource_error.has_value());
    CHECK_FALSE(r.complete());
    CHECK(r.rows.size() == 1);
    CHECK(r.overall() == "incomplete after t=1");
}

TEST_CASE("check_graded_criterion examples") {
    auto g = check_graded_criterion(zx_ideal({"X^2 - 2", "X^3"}), ZZX, 2);
    REQUIRE(g.rows.size() == 3);
    CHECK(g.rows[0].holds);
    CHECK(g.first_failure() == 1u);
    CHECK(g.rows[1].witness->to_string() == "8");
    CHECK(equals(g.rows[1].lhs, base_ideal(ZZX, {"8"})));
    CHECK(equals(g.rows[1].rhs, base_ideal(ZZX, {"16"})));

    auto h = check_graded_criterion(zx_ideal({"5", "X^2 + 1"}), ZZX, 3);
    CHECK_FALSE(h.first_failure().has_value());
    CHECK(h.rows.size() == 4);

    auto z = check_graded_criterion(zx_ideal({"X^2 + X"}), ZZX, 3);
    CHECK_FALSE(z.first_failure().has_value());
    for (const auto& row : z.rows)
        if (row.n >= 1) CHECK(row.rhs.is_zero());
}

TEST_CASE("primary_failure_witness") {
    auto q = make_context(CoefficientDomain::rationals(), {"Y", "Z", "W"});
    Ideal wp = toric_kernel(q, {3, 4, 5}, {"Y", "Z", "W"});
    auto Y = Polynomial::variable(q, "Y");
    auto w = primary_failure_witness(wp, 2, Y);
    REQUIRE(w.has_value());
    Ideal wp2 = ideal_power(wp, 2);
    CHECK_FALSE(wp2.contains(w->witness));
    CHECK(wp2.contains(Y.pow(w->k) * w->witness));
    CHECK(saturate(wp2, Y).contains(P(q, "Y^5 - 3*Y^2*Z*W + Y*Z^3 + W^3")));

    auto xy = make_context(CoefficientDomain::rationals(), {"x", "y"});
    Ideal px(xy, {Polynomial::variable(xy, "x")});
    CHECK_FALSE(primary_failure_witness(px, 2, Polynomial::variable(xy, "y")).has_value());

    auto yz = make_context(CoefficientDomain::rationals(), {"Y", "Z"});
    Ideal cusp = toric_kernel(yz, {2, 3}, {"Y", "Z"});
    CHECK(equals(cusp, Ideal(yz, {P(yz, "Y^3 - Z^2")})));
    CHECK_FALSE(primary_failure_witness(cusp, 2, Polynomial::variable(yz, "Y")).has_value());

    CHECK_THROWS_AS(primary_failure_witness(px, 2, P(xy, "x*y")), PreconditionError);
    Ideal zx_x = zx_ideal({"X"});
    CHECK_THROWS_AS(primary_failure_witness(zx_x, 2, Polynomial::constant(ZZX.context(), 2)), UnsupportedOperation);
}

TEST_CASE("is_reduction") {
    auto xy = make_context(CoefficientDomain::rationals(), {"x", "y"});
    Ideal J(xy, Ps(xy, {"x^2", "y^2"}));
    Ideal I(xy, Ps(xy, {"x^2", "x*y", "y^2"}));
    CHECK(is_reduction(J, I, 4) == 1u);
    CHECK(is_reduction(I, I, 4) == 1u);
    Ideal m(xy, Ps(xy, {"x", "y"}));
    CHECK_FALSE(is_reduction(Ideal(xy, Ps(xy, {"x^2"})), m, 4).has_value());
    CHECK_THROWS_AS(is_reduction(m, I, 4), PreconditionError);
    CHECK_THROWS_AS(is_reduction(J, I, 0), PreconditionError);
}

TEST_CASE("propagate_power_equality") {
    auto xy = make_context(CoefficientDomain::rationals(), {"x", "y"});
    Ideal m(xy, Ps(xy, {"x", "y"}));
    auto same = propagate_power_equality(m, m, 1, 4);
    CHECK(same.passed());
    CHECK(same.rows.size() == 4);

    auto z8 = FiniteRing::integers_mod(8);
    std::vector<FiniteRing::Element> g4{4}, g2{2};
    auto P4 = ideal_closure(z8, g4), K2 = ideal_closure(z8, g2);
    auto rep = propagate_power_equality(P4, K2, 3, 6);
    CHECK(rep.passed());
    CHECK(ideal_power(P4, 3).is_zero());
    CHECK_FALSE(equals(ideal_power(P4, 2), ideal_power(K2, 2)));
    auto early = propagate_power_equality(P4, K2, 2, 6);
    CHECK_FALSE(early.hypothesis_holds);
    CHECK_FALSE(early.passed());
    auto flipped = propagate_power_equality(K2, P4, 3, 6);
    CHECK_FALSE(flipped.hypothesis_holds);
}

TEST_CASE("verify_example_316 over the admissible grid") {
    const std::vector<std::pair<unsigned, unsigned>> nm{{2, 3}, {3, 4}, {4, 5}, {4, 6}};
    for (unsigned p : {2u, 3u, 5u}) {
        for (auto [n, m] : nm) {
            auto rep = verify_example_316(p, n, m, 3);
            INFO(rep.name);
            CHECK(rep.passed());
            CHECK(rep.checks.size() == 6);
        }
    }
    auto r = verify_example_316(3, 2, 3, 3);
    CHECK(r.checks[0].detail == "I ∩ ZZ = (9)");
    CHECK_THROWS_AS(verify_example_316(2, 2, 4, 3), PreconditionError);
    CHECK_THROWS_AS(verify_example_316(2, 3, 5, 3), PreconditionError);
    CHECK_THROWS_AS(verify_example_316(4, 2, 3, 3), PreconditionError);
}

TEST_CASE("(X^2 - p, X^3) fails stability at t = 2") {
    for (unsigned p : {2u, 3u}) {
        auto X = Polynomial::variable(ZZX.context(), "X");
        auto pc = Polynomial::constant(ZZX.context(), static_cast<long>(p));
        Ideal I(ZZX.context(), {X.pow(2) - pc, X.pow(3)});
        auto st = check_power_stable(I, ZZX, 3);
        CHECK(st.first_failure() == 2u);
        check_rows(st);
        check_agreement(I, ZZX, 3);
    }
}

TEST_CASE("verify_monomial_curve") {
    auto rep = verify_monomial_curve();
    CHECK(rep.passed());
    CHECK(rep.checks.size() == 6);
    auto q = make_context(CoefficientDomain::rationals(), {"Y", "Z", "W"});
    auto f = P(q, "Y^3 - Z*W"), g = P(q, "Z^2 - Y*W"), h = P(q, "W^2 - Y^2*Z");
    CHECK(f * f - g * h == P(q, "Y^6 - 3*Y^3*Z*W + Y^2*Z^3 + Y*W^3"));
}

TEST_CASE("verify_lambda_gadget") {
    for (unsigned lam : {2u, 3u}) {
        auto rep = verify_lambda_gadget(lam, 3);
        INFO(rep.name);
        CHECK(rep.passed());
        REQUIRE(rep.stability.has_value());
        CHECK(rep.stability->first_failure() == 2u);
    }
    Ideal gadget = zx_ideal({"X^2 - 2", "2*X"});
    CHECK(equals(gadget, zx_ideal({"X^2 - 2", "X^3"})));
    CHECK_THROWS_AS(verify_lambda_gadget(4, 3), PreconditionError);
}

TEST_CASE("verify_t322_identities on the ZZ/4 example") {
    auto R = FiniteRing::make(4, {-2, 0, 1});
    std::vector<FiniteRing::Element> gens{2, R->x()};
    auto I = ideal_closure(R, gens);
    auto rep = verify_t322_identities(I, 2);
    INFO(to_json(rep).dump(2));
    CHECK(rep.passed());
    CHECK(rep.checks.front().detail == "I^2∩A != (I∩A)^2");
    bool exhibited = false;
    for (const auto& c : rep.checks)
        if (c.detail == "r = 1") exhibited = true;
    CHECK(exhibited);
}

TEST_CASE("verify_t322_identities trivial instance") {
    auto R = FiniteRing::make(3, {0, 1, 1});
    std::vector<FiniteRing::Element> gens{R->x()};
    auto I = ideal_closure(R, gens);
    REQUIRE(contract(I).is_zero());
    auto rep = verify_t322_identities(I, 1);
    CHECK(rep.passed());
}

TEST_CASE("verify_t322_identities on enumerated instances") {
    const std::vector<std::pair<unsigned, std::vector<long>>> rings{
        {4, {-2, 0, 1}}, {4, {2, 0, 1}}, {8, {-2, 0, 1}}, {8, {4, 0, 1}}, {9, {-3, 0, 1}}, {4, {2, 2, 1}}, {8, {2, 0, 0, 1}}};
    int exercised = 0;
    for (const auto& [n, f] : rings) {
        auto R = FiniteRing::make(n, f);
        for (const auto& I : all_ideals(R)) {
            auto prof = brute_power_profile(I, 8);
            auto m = prof.last_failure();
            if (!m || *m >= 8) continue;
            auto rep = verify_t322_identities(I, *m);
            if (!rep.checks.front().passed) continue;
            ++exercised;
            INFO(R->describe(), " ", I.to_string(), " m = ", *m);
            CHECK(rep.passed());
        }
    }
    CHECK(exercised > 0);
    MESSAGE("instances with the hypothesis satisfied: ", exercised);
}

TEST_CASE("suite: (d, h) ideals") {
    for (const auto& I : family_d_h(ZZX.context(), 11, 50)) {
        require_stable(I, ZZX, 4);
        check_agreement(I, ZZX, 4);
    }
}

TEST_CASE("suite: (J, monic f) ideals") {
    for (const auto& I : family_j_monic(ZZX.context(), 12, 50)) {
        require_stable(I, ZZX, 4);
        check_agreement(I, ZZX, 4);
    }
}

TEST_CASE("suite: prime contraction") {
    for (const auto& I : family_prime_contraction(ZZX.context(), 13, 50)) {
        require_stable(I, ZZX, 4);
        check_agreement(I, ZZX, 4);
    }
}

TEST_CASE("suite: comaximal products") {
    for (const auto& [I, J] : family_comaximal(ZZX.context(), 14, 50)) {
        Ideal IJ = ideal_product(I, J);
        CHECK(equals(IJ, intersect(I, J)));
        require_stable(IJ, ZZX, 4);
    }
}

TEST_CASE("suite: powers of stable ideals") {
    auto fam = family_d_h(ZZX.context(), 15, 20);
    for (const auto& I : fam) {
        require_stable(ideal_power(I, 2), ZZX, 2);
        require_stable(ideal_power(I, 3), ZZX, 2);
    }
}

TEST_CASE("suite: contraction-preserving subideals") {
    std::mt19937_64 rng(16);
    auto zx = ZZX.context();
    int found = 0;
    for (const auto& J : family_d_h(zx, 17, 50)) {
        auto c = contract_to_base(J, ZZX);
        auto cz = c.generators().front().embed(zx);
        const auto& h = J.generators()[1];
        auto g1 = poly_of_degree(zx, rng, 1, 3, false), g2 = poly_of_degree(zx, rng, 1, 3, false);
        Ideal J1(zx, {cz, h * g1 + cz * g2, h * h});
        REQUIRE(is_subset(J1, J));
        if (!equals(contract_to_base(J1, ZZX), c)) continue;
        ++found;
        require_stable(J1, ZZX, 3);
    }
    CHECK(found >= 5);
}

TEST_CASE("transitivity through an intermediate ring") {
    auto outer = RingTower::parse("ZZ[Y][X]");
    auto inner = RingTower::parse("ZZ[Y]");
    RingTower composite{CoefficientDomain::integers(), {}, {"Y", "X"}};
    auto ctx = outer.context();
    REQUIRE(*composite.context() == *ctx);
    std::mt19937_64 rng(18);
    std::uniform_int_distribution<long> c(-3, 3), d(2, 6);
    int verified = 0;
    for (int k = 0; k < 20; ++k) {
        auto Y = Polynomial::variable(ctx, "Y"), X = Polynomial::variable(ctx, "X");
        auto f = Y.pow(1 + k % 2) + Polynomial::constant(ctx, c(rng));
        auto g = X.pow(1 + (k / 2) % 2) + Y.scaled(mpq_class(c(rng))) + Polynomial::constant(ctx, c(rng));
        Ideal I(ctx, {Polynomial::constant(ctx, d(rng)), f, g});
        auto upper = check_power_stable(I, outer, 3);
        auto J = contract_to_base(I, outer);
        auto lower = check_power_stable(J, inner, 3);
        if (!upper.stable_up_to_tmax() || !lower.stable_up_to_tmax()) continue;
        ++verified;
        INFO(I.to_string());
        CHECK(check_power_stable(I, composite, 3).stable_up_to_tmax());
    }
    CHECK(verified >= 3);
}

TEST_CASE("report JSON") {
    auto I = zx_ideal({"X^2 - 2", "X^3"});
    auto a = to_json(check_power_stable(I, ZZX, 3)).dump();
    auto b = to_json(check_power_stable(zx_ideal({"X^2 - 2", "X^3"}), ZZX, 3)).dump();
    CHECK(a == b);
    auto j = Json::parse(a);
    CHECK(j["tower"] == "ZZ[X]");
    CHECK(j["overall"] == "first-failure t=2");
    CHECK(j["rows"][1]["verdict"] == "unequal");
    CHECK(j["rows"][1]["witness"] == "8");
    CHECK(j["rows"][0]["witness"].is_null());
    CHECK(j["rows"][0]["contraction"] == Json::array({"4"}));
    CHECK_FALSE(j.contains("observed_window"));

    auto good = to_json(check_power_stable(zx_ideal({"5", "X^2 + 1"}), ZZX, 2));
    CHECK(good["observed_window"]["from"] == 1);
    CHECK(good["rows"][1]["expected"] == Json::array({"25"}));

    auto rep = to_json(verify_monomial_curve());
    CHECK(rep["passed"] == true);
    CHECK(rep["checks"].size() == 6);
}
