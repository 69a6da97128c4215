#include "powerstab/stability.hpp"

#include <algorithm>

#include "powerstab/errors.hpp"

namespace powerstab {

namespace {

std::string str(unsigned v) { return std::to_string(v); }

Polynomial constant(const ContextPtr& ctx, const mpz_class& v) { return Polynomial::constant(ctx, mpq_class(v)); }

mpz_class upow(unsigned base, unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

// Smallest generator of `have` (ascending along the default order) outside `ref`.
std::optional<Polynomial> smallest_outside(const Ideal& have, const Ideal& ref) {
    auto gb = have.basis();
    auto refgb = ref.basis();
    for (auto it = gb.elements().rbegin(); it != gb.elements().rend(); ++it)
        if (!refgb.contains(*it)) return *it;
    return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------- reports

std::optional<unsigned> StabilityReport::first_failure() const {
    for (const auto& r : rows)
        if (!r.equal) return r.t;
    return std::nullopt;
}

std::optional<unsigned> StabilityReport::observed_window_start() const {
    if (!complete()) return std::nullopt;
    std::optional<unsigned> start;
    for (auto it = rows.rbegin(); it != rows.rend() && it->equal; ++it) start = it->t;
    return start;
}

std::string StabilityReport::overall() const {
    if (auto f = first_failure()) return "first-failure t=" + str(*f);
    if (!complete()) return "incomplete after t=" + str(static_cast<unsigned>(rows.size()));
    return "stable-up-to-" + str(t_max);
}

std::optional<unsigned> GradedReport::first_failure() const {
    for (const auto& r : rows)
        if (!r.holds) return r.n;
    return std::nullopt;
}

bool CheckReport::passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.passed; });
}

void CheckReport::add(std::string check, bool ok, std::string detail) {
    checks.push_back(SubCheck{std::move(check), ok, std::move(detail)});
}

// ---------------------------------------------------------------- checkers

StabilityReport check_power_stable(const Ideal& I, const RingTower& tower, unsigned t_max) {
    if (t_max == 0) throw PreconditionError("check_power_stable needs t_max >= 1");
    tower.check(*I.context());
    StabilityReport rep{tower, I, t_max, {}, std::nullopt};
    try {
        Ideal base = interreduce(I);
        Ideal J = contract_to_base(base, tower);
        Ideal power = base, expected = J;
        for (unsigned t = 1; t <= t_max; ++t) {
            if (t > 1) {
                power = power_step(power, base);
                expected = power_step(expected, J);
            }
            Ideal c = t == 1 ? J : contract_to_base(power, tower);
            if (!is_subset(expected, c))
                throw Error("internal: (I ∩ A)^" + str(t) + " is not contained in I^" + str(t) + " ∩ A");
            bool eq = is_subset(c, expected);
            std::optional<Polynomial> w;
            if (!eq) {
                w = smallest_outside(c, expected);
                if (!w || !power.contains(w->embed(I.context())) || expected.contains(*w))
                    throw Error("internal: stability witness failed re-verification at t=" + str(t));
            }
            rep.rows.push_back(StabilityRow{t, std::move(c), expected, eq, std::move(w)});
        }
    } catch (const ResourceLimit& e) {
        rep.resource_error = e.what();
    }
    return rep;
}

GradedReport check_graded_criterion(const Ideal& I, const RingTower& tower, unsigned n_max) {
    tower.check(*I.context());
    GradedReport rep{tower, I, n_max, {}, std::nullopt};
    try {
        Ideal base = interreduce(I);
        Ideal J = contract_to_base(base, tower);
        Ideal Jn = Ideal::unit(J.context());
        Ideal power = base;  // I^(n+1)
        for (unsigned n = 0; n <= n_max; ++n) {
            if (n > 0) {
                power = power_step(power, base);
                Jn = n == 1 ? J : power_step(Jn, J);
            }
            Ideal Jn1 = n == 0 ? J : power_step(Jn, J);
            Ideal lhs = intersect(Jn, contract_to_base(power, tower));
            bool holds = is_subset(lhs, Jn1);
            std::optional<Polynomial> w;
            if (!holds) {
                w = smallest_outside(lhs, Jn1);
                if (!w || !Jn.contains(*w) || !power.contains(w->embed(I.context())) || Jn1.contains(*w))
                    throw Error("internal: graded witness failed re-verification at n=" + str(n));
            }
            rep.rows.push_back(GradedRow{n, std::move(lhs), std::move(Jn1), holds, std::move(w)});
        }
    } catch (const ResourceLimit& e) {
        rep.resource_error = e.what();
    }
    return rep;
}

std::optional<PrimaryWitness> primary_failure_witness(const Ideal& P, unsigned t, const Polynomial& s) {
    if (!P.context()->domain().is_rationals())
        throw UnsupportedOperation("primary_failure_witness needs QQ coefficients");
    if (P.contains(s)) throw PreconditionError("s = " + s.to_string() + " lies in P");
    Ideal Pt = ideal_power(P, t);
    Ideal S = saturate(Pt, s);
    auto w = smallest_outside(S, Pt);
    if (!w) return std::nullopt;
    constexpr unsigned max_k = 64;
    Polynomial acc = *w;
    for (unsigned k = 1; k <= max_k; ++k) {
        acc = acc * s;
        if (Pt.contains(acc)) return PrimaryWitness{*w, k};
    }
    throw Error("internal: saturation element not killed by s^k for k <= " + str(max_k));
}

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------- named examples

CheckReport verify_example_316(unsigned p, unsigned n, unsigned m, unsigned t_max) {
    if (!(n < m && m < 2 * n && 2 * (m - n) <= n))
        throw PreconditionError("(n, m) = (" + str(n) + ", " + str(m) + ") violates n < m < 2n, 2(m - n) <= n");
    if (!is_prime(p)) throw PreconditionError(str(p) + " is not prime");
    CheckReport rep;
    rep.name = "example (X^" + str(n) + " - " + str(p) + ", X^" + str(m) + ")";
    auto tower = RingTower::parse("ZZ[X]");
    auto zx = tower.context();
    auto base = tower.base_context();
    auto X = Polynomial::variable(zx, "X");
    Ideal I(zx, {X.pow(n) - Polynomial::constant(zx, p), X.pow(m)});

    Ideal c = contract_to_base(I, tower);
    Ideal p2(base, {constant(base, upow(p, 2))});
    rep.add("I ∩ ZZ = (" + str(p) + "^2)", equals(c, p2), "I ∩ ZZ = " + c.to_string());

    Ideal I2 = ideal_power(I, 2);
    auto p3 = upow(p, 3);
    rep.add("p^3 ∈ I^2", I2.contains(constant(zx, p3)), p3.get_str() + " tested against I^2");
    rep.add("p^3 ∉ (p^2)^2", !ideal_power(p2, 2).contains(constant(base, p3)));

    Ideal power = I2;
    for (unsigned t = 1; t <= t_max; ++t) {
        if (t > 1) power = power_step(power, I);
        auto v = upow(p, 2 * t + 1);
        rep.add("p^" + str(2 * t + 1) + " ∈ I^" + str(t + 1), power.contains(constant(zx, v)));
    }
    return rep;
}

CheckReport verify_monomial_curve() {
    CheckReport rep;
    rep.name = "monomial curve (3,4,5)";
    auto ctx = make_context(CoefficientDomain::rationals(), {"Y", "Z", "W"});
    auto f = parse_polynomial("Y^3 - Z*W", ctx);
    auto g = parse_polynomial("Z^2 - Y*W", ctx);
    auto h = parse_polynomial("W^2 - Y^2*Z", ctx);
    auto p = parse_polynomial("Y^5 - 3*Y^2*Z*W + Y*Z^3 + W^3", ctx);
    auto Y = Polynomial::variable(ctx, "Y");

    Ideal wp = toric_kernel(ctx, {3, 4, 5}, {"Y", "Z", "W"});
    Ideal fgh(ctx, {f, g, h});
    rep.add("ker = (f, g, h)", equals(wp, fgh), "ker = " + interreduce(wp).to_string());
    auto lhs = f * f - g * h;
    rep.add("f^2 - g*h = Y*p", lhs == Y * p, "f^2 - g*h = " + lhs.to_string());
    rep.add("Y ∉ ℘", !wp.contains(Y));
    rep.add("p ∈ ℘", wp.contains(p));
    Ideal wp2 = ideal_power(wp, 2);
    rep.add("p ∉ ℘^2", !wp2.contains(p));
    Ideal sat = saturate(wp2, Y);
    rep.add("(℘^2 : Y^inf) ⊋ ℘^2", is_subset(wp2, sat) && !is_subset(sat, wp2),
            "℘^2 is not ℘-primary: Y*p ∈ ℘^2 with p ∉ ℘^2 and Y ∉ ℘");
    return rep;
}

CheckReport verify_lambda_gadget(unsigned lambda, unsigned t_max) {
    if (!is_prime(lambda)) throw PreconditionError(str(lambda) + " is not prime");
    CheckReport rep;
    rep.name = "gadget (X^2 - " + str(lambda) + ", " + str(lambda) + "*X)";
    auto tower = RingTower::parse("ZZ[X]");
    auto zx = tower.context();
    auto X = Polynomial::variable(zx, "X");
    auto lam = Polynomial::constant(zx, lambda);
    auto a = X * X - lam;
    auto b = lam * X;
    auto rhs = lam * a * a + b * b - lam * X * X * a;
    rep.add("λ^3 = λ(X^2 - λ)^2 + (λX)^2 - λX^2(X^2 - λ)", rhs == lam.pow(3), "rhs = " + rhs.to_string());

    auto q = make_context(CoefficientDomain::rationals(), {"L", "X"});
    auto L = Polynomial::variable(q, "L"), Xq = Polynomial::variable(q, "X");
    auto aq = Xq * Xq - L;
    rep.add("identity with indeterminate λ", L * aq * aq + (L * Xq) * (L * Xq) - L * Xq * Xq * aq == L.pow(3));

    Ideal J(zx, {a, b});
    rep.add("λ^3 ∈ J^2", ideal_power(J, 2).contains(lam.pow(3)));
    rep.add("J = (X^2 - λ, X^3)", equals(J, Ideal(zx, {a, X.pow(3)})));
    auto st = check_power_stable(J, tower, t_max);
    rep.add("not power stable", st.first_failure() == 2u, st.overall());
    rep.stability = std::move(st);
    return rep;
}

CheckReport verify_t322_identities(const FinIdeal& I, unsigned m, unsigned r_max) {
    if (m == 0) throw PreconditionError("failure index m must be at least 1");
    CheckReport rep;
    rep.name = "contraction identities in " + I.ring()->describe() + ", m = " + str(m);
    FinIdeal J = contract(I);
    auto Jp = [&](unsigned k) { return ideal_power(J, k); };
    auto C = [&](unsigned k) { return contract(ideal_power(I, k)); };
    const FinIdeal Jm1 = Jp(m + 1);

    bool hyp = equals(ideal_product(J, C(m)), Jm1);
    std::string at_m = equals(C(m), Jp(m)) ? "I^" + str(m) + "∩A = (I∩A)^" + str(m) + " (equality does not fail at m)"
                                           : "I^" + str(m) + "∩A != (I∩A)^" + str(m);
    rep.add("(I∩A)(I^" + str(m) + "∩A) = (I∩A)^" + str(m + 1), hyp, at_m);
    if (!hyp) return rep;

    for (unsigned t = 1; t <= m; ++t)
        rep.add("(I∩A)^" + str(t) + "(I^" + str(m + 1 - t) + "∩A) = (I∩A)^" + str(m + 1),
                equals(ideal_product(Jp(t), C(m + 1 - t)), Jm1));

    for (unsigned t = 1; t <= m; ++t) {
        unsigned k = m + 1 - t;
        FinIdeal K = C(k), Jk = Jp(k);
        auto r = is_reduction(Jk, K, r_max);
        std::string what = "(I∩A)^" + str(k) + " reduces I^" + str(k) + "∩A";
        rep.add(what, r.has_value(), r ? "r = " + str(*r) : "no r <= " + str(r_max));
        if (r && t <= k)
            rep.add("(I^" + str(k) + "∩A)^" + str(*r + 1) + " = (I∩A)^" + str(k * (*r + 1)),
                    equals(ideal_power(K, *r + 1), Jp(k * (*r + 1))));
    }
    return rep;
}

}  // namespace powerstab
