#include "powerstab/runner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "powerstab/errors.hpp"
#include "powerstab/suites.hpp"

namespace powerstab {

namespace {

struct Outcome {
    int code = exit_ok;
    std::string text;
    Json report;
};

const char* status_name(int code) {
    switch (code) {
        case exit_ok: return "ok";
        case exit_expectation_failed: return "expectation-failed";
        case exit_usage: return "usage-error";
        default: return "resource-limit";
    }
}

unsigned number(const Command& c, std::string_view key, unsigned fallback) {
    auto v = c.option(key);
    return v ? static_cast<unsigned>(std::stoul(*v)) : fallback;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(", ", start);
        out.push_back(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (comma == std::string::npos) break;
        start = comma + 2;
    }
    return out;
}

std::string show(const std::vector<std::string>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
    return out + ")";
}

std::vector<std::string> basis_strings(const Ideal& I, const std::optional<std::string>& order) {
    const auto& ctx = *I.context();
    auto gb = !order            ? I.basis()
              : *order == "lex" ? I.basis(MonomialOrder::lex(ctx.num_vars()))
                                : I.basis(MonomialOrder::grevlex(ctx.num_vars()));
    std::vector<std::string> out;
    for (const auto& g : gb.elements()) out.push_back(g.to_string());
    if (out.empty()) out.push_back("0");
    return out;
}

Json strings(const std::vector<std::string>& xs) {
    Json j = Json::array();
    for (const auto& x : xs) j.push_back(x);
    return j;
}

std::string base_name(const RingTower& t) {
    return t.base_vars.empty() ? t.base_domain.to_string() : t.base_context()->to_string();
}

std::string stability_text(const StabilityReport& r) {
    std::ostringstream os;
    os << "  ideal " << r.ideal.to_string() << " over " << base_name(r.tower) << " in "
       << r.tower.to_string() << "\n";
    for (const auto& row : r.rows) {
        os << "  t=" << row.t << "  I^t ∩ A = " << row.contraction.to_string()
           << "  (I ∩ A)^t = " << row.expected.to_string() << "  " << (row.equal ? "equal" : "unequal");
        if (row.witness) os << "  witness " << row.witness->to_string();
        os << "\n";
    }
    os << "  overall: " << r.overall() << "\n";
    if (auto a = r.observed_window_start())
        os << "  equality observed for t in [" << *a << ", " << r.t_max << "]; larger t is not decided\n";
    if (r.resource_error) os << "  resource limit: " << *r.resource_error << "\n";
    return os.str();
}

std::string graded_text(const GradedReport& r) {
    std::ostringstream os;
    for (const auto& row : r.rows) {
        os << "  n=" << row.n << "  J^n ∩ (I^(n+1) ∩ A) = " << row.lhs.to_string()
           << "  J^(n+1) = " << row.rhs.to_string() << "  " << (row.holds ? "equal" : "unequal");
        if (row.witness) os << "  witness " << row.witness->to_string();
        os << "\n";
    }
    auto f = r.first_failure();
    os << "  " << (f ? "first failure at n=" + std::to_string(*f) : std::string("holds for every n checked")) << "\n";
    if (r.resource_error) os << "  resource limit: " << *r.resource_error << "\n";
    return os.str();
}

std::string check_text(const CheckReport& r) {
    std::string out;
    for (const auto& c : r.checks) {
        out += std::string("  [") + (c.passed ? "pass" : "FAIL") + "] " + c.name;
        if (!c.detail.empty()) out += "  (" + c.detail + ")";
        out += "\n";
    }
    return out;
}

std::string profile_text(const PowerProfile& p) {
    const auto& R = *p.ideal.ring();
    std::ostringstream os;
    os << "  ideal " << p.ideal.to_string() << " in " << R.describe() << "\n";
    for (const auto& row : p.rows)
        os << "  t=" << row.t << "  |I^t| = " << row.power.size() << "  I^t ∩ A = " << row.contraction.to_string()
           << "  (I ∩ A)^t = " << row.expected.to_string() << "  " << (row.equal ? "equal" : "unequal") << "\n";
    auto f = p.last_failure();
    os << "  " << (f ? "last failure at t=" + std::to_string(*f) : std::string("equal for every t checked")) << "\n";
    return os.str();
}

Json agreement_json(const StabilityReport& st, const GradedReport& gr, bool agree) {
    return {{"power_first_failure", st.first_failure() ? Json(*st.first_failure()) : Json(nullptr)},
            {"graded_first_failure", gr.first_failure() ? Json(*gr.first_failure()) : Json(nullptr)},
            {"agree", agree}};
}

bool criteria_agree(const StabilityReport& st, const GradedReport& gr) {
    auto a = st.first_failure(), b = gr.first_failure();
    if (a.has_value() != b.has_value()) return false;
    return !a || *b + 1 == *a;
}

std::string propagation_text(const PropagationReport& r) {
    std::string out = "  hypothesis: " + r.hypothesis_detail + (r.hypothesis_holds ? "" : " (not satisfied)") + "\n";
    for (const auto& row : r.rows)
        out += "  t=" + std::to_string(row.t) + "  P^t " + (row.equal ? "=" : "!=") + " K^t\n";
    return out;
}

struct SuiteResult {
    Json json;
    std::string text;
    bool passed;
    bool resource;
};

SuiteResult run_suite(const std::string& name, unsigned count, unsigned t_max, std::uint64_t seed) {
    static const RingTower zzx = RingTower::parse("ZZ[X]");
    auto zx = zzx.context();
    std::vector<Ideal> instances;
    if (name == "d-h") instances = suites::family_d_h(zx, seed, static_cast<int>(count));
    if (name == "j-monic") instances = suites::family_j_monic(zx, seed, static_cast<int>(count));
    if (name == "prime-contraction") instances = suites::family_prime_contraction(zx, seed, static_cast<int>(count));
    if (name == "comaximal")
        for (const auto& [I, J] : suites::family_comaximal(zx, seed, static_cast<int>(count)))
            instances.push_back(ideal_product(I, J));
    std::size_t stable = 0, agree = 0, incomplete = 0;
    Json failures = Json::array();
    for (const auto& I : instances) {
        auto st = check_power_stable(I, zzx, t_max);
        auto gr = check_graded_criterion(I, zzx, t_max - 1);
        if (!st.complete() || gr.resource_error) {
            ++incomplete;
            continue;
        }
        bool ok = st.stable_up_to_tmax(), same = criteria_agree(st, gr);
        stable += ok;
        agree += same;
        if (!ok || !same) failures.push_back({{"ideal", to_json(I)}, {"overall", st.overall()}, {"criteria_agree", same}});
    }
    SuiteResult r;
    r.resource = incomplete > 0;
    r.passed = failures.empty() && !r.resource;
    r.json = {{"suite", name},     {"seed", seed},     {"count", instances.size()}, {"t_max", t_max},
              {"stable", stable},  {"criteria_agree", agree}, {"incomplete", incomplete}, {"failures", failures}};
    std::ostringstream os;
    os << "  " << name << ": " << stable << "/" << instances.size() << " stable up to t=" << t_max << ", " << agree
       << " criterion agreements, " << incomplete << " incomplete (seed " << seed << ")\n";
    for (const auto& f : failures) os << "  failing instance " << f["ideal"].dump() << "\n";
    r.text = os.str();
    return r;
}

class Runner {
  public:
    Runner(const Script& s, const RunOptions& o) : script_(s), opts_(o) {}

    RunResult run() {
        RunResult res;
        Json results = Json::array();
        res.text = "tower " + script_.tower.to_string() + "\n";
        for (const auto& cmd : script_.commands) {
            std::string head = cmd.verb;
            for (const auto& a : cmd.args) head += " " + a;
            Outcome out;
            try {
                out = execute(cmd);
            } catch (const ResourceLimit& e) {
                out.code = exit_resource_limit;
                out.text = std::string("  resource limit: ") + e.what() + "\n";
            } catch (const Error& e) {
                out.code = exit_usage;
                out.text = std::string("  error: ") + e.what() + "\n";
            }
            res.exit_code = std::max(res.exit_code, out.code);
            res.text += "\n" + head + "  [" + status_name(out.code) + "]\n" + out.text;
            Json item{{"line", cmd.loc.line}, {"command", head}, {"status", status_name(out.code)}};
            if (!out.report.is_null()) item["report"] = std::move(out.report);
            results.push_back(std::move(item));
        }
        res.json = {{"tower", script_.tower.to_string()}, {"results", std::move(results)}, {"exit_code", res.exit_code}};
        return res;
    }

  private:
    const Ideal& ideal(const std::string& name) {
        if (auto it = cache_.find(name); it != cache_.end()) return it->second;
        const Binding* b = script_.find(name);
        if (!b) throw PreconditionError("unknown ideal '" + name + "'");
        auto ctx = script_.tower.context();
        const auto& e = b->expr;
        using K = IdealExpr::Kind;
        auto poly = [&](const std::string& s) { return parse_polynomial(s, ctx); };
        std::optional<Ideal> v;
        switch (e.kind) {
            case K::Generators: {
                std::vector<Polynomial> gens;
                for (const auto& g : e.polys) gens.push_back(poly(g));
                v.emplace(ctx, std::move(gens));
                break;
            }
            case K::Toric: v = toric_kernel(ctx, e.numbers, e.vars); break;
            case K::Power: v = ideal_power(ideal(e.operands[0]), e.numbers[0]); break;
            case K::Quotient: v = quotient(ideal(e.operands[0]), poly(e.polys[0])); break;
            case K::Saturate: v = saturate(ideal(e.operands[0]), poly(e.polys[0])); break;
            case K::Sum:
            case K::Product:
            case K::Intersect: {
                Ideal acc = ideal(e.operands[0]);
                for (std::size_t i = 1; i < e.operands.size(); ++i) {
                    const Ideal& x = ideal(e.operands[i]);
                    acc = e.kind == K::Sum ? ideal_sum(acc, x) : e.kind == K::Product ? ideal_product(acc, x)
                                                                                      : intersect(acc, x);
                }
                v = std::move(acc);
                break;
            }
        }
        return cache_.emplace(name, std::move(*v)).first->second;
    }

    Outcome execute(const Command& c) {
        const auto& tower = script_.tower;
        auto ctx = tower.context();
        auto arg = [&](std::size_t i) -> const Ideal& { return ideal(c.args.at(i)); };
        Outcome out;
        const std::string& v = c.verb;

        if (v == "check-stability") {
            auto r = check_power_stable(arg(0), tower, number(c, "tmax", opts_.default_tmax));
            out.text = stability_text(r);
            out.report = to_json(r);
            auto expect = c.option("expect");
            if (!expect) expect = opts_.expect;
            if (r.resource_error)
                out.code = exit_resource_limit;
            else if (expect && (*expect == "stable") != r.stable_up_to_tmax())
                out.code = exit_expectation_failed;
            if (expect) {
                out.report["expect"] = *expect;
                out.text += "  expected " + *expect + "\n";
            }
        } else if (v == "graded-criterion") {
            unsigned t_max = opts_.default_tmax;
            auto r = check_graded_criterion(arg(0), tower, number(c, "nmax", t_max > 0 ? t_max - 1 : 0));
            out.text = graded_text(r);
            out.report = to_json(r);
            if (r.resource_error) out.code = exit_resource_limit;
        } else if (v == "contract" || v == "power" || v == "intersect" || v == "quotient" || v == "saturate") {
            std::optional<Ideal> r;
            std::string what;
            if (v == "contract") {
                r = contract_to_base(arg(0), tower);
                what = c.args[0] + " ∩ " + base_name(tower);
            } else if (v == "power") {
                auto t = number(c, "t", 1);
                if (t == 0) throw PreconditionError("power needs t >= 1");
                r = ideal_power(arg(0), t);
                what = c.args[0] + "^" + std::to_string(t);
            } else if (v == "intersect") {
                r = intersect(arg(0), arg(1));
                what = c.args[0] + " ∩ " + c.args[1];
            } else {
                auto f = parse_polynomial(*c.option("f"), ctx);
                r = v == "quotient" ? quotient(arg(0), f) : saturate(arg(0), f);
                what = "(" + c.args[0] + " : " + f.to_string() + (v == "quotient" ? ")" : "^inf)");
            }
            auto gens = basis_strings(*r, c.option("order"));
            out.text = "  " + what + " = " + show(gens) + "\n";
            out.report = {{"result", what}, {"basis", strings(gens)}};
        } else if (v == "primary-witness") {
            auto t = number(c, "t", 1);
            auto s = parse_polynomial(*c.option("s"), ctx);
            auto w = primary_failure_witness(arg(0), t, s);
            out.report = {{"t", t}, {"s", s.to_string()}};
            if (w) {
                out.report["witness"] = w->witness.to_string();
                out.report["k"] = w->k;
                out.text = "  witness " + w->witness.to_string() + " lies in (P^" + std::to_string(t) + " : " +
                           s.to_string() + "^inf) but not in P^" + std::to_string(t) + "; s^" + std::to_string(w->k) +
                           " * witness ∈ P^" + std::to_string(t) + "\n";
            } else {
                out.report["witness"] = nullptr;
                out.text = "  saturation by " + s.to_string() + " equals P^" + std::to_string(t) + " (inconclusive)\n";
            }
            if (auto e = c.option("expect")) {
                out.report["expect"] = *e;
                if ((*e == "found") != w.has_value()) out.code = exit_expectation_failed;
            }
        } else if (v == "is-reduction") {
            unsigned r_max = number(c, "rmax", 4);
            auto r = is_reduction(arg(0), arg(1), r_max);
            out.report = {{"reduction", r.has_value()}, {"r", r ? Json(*r) : Json(nullptr)}, {"r_max", r_max}};
            out.text = r ? "  " + c.args[0] + " * " + c.args[1] + "^" + std::to_string(*r) + " = " + c.args[1] + "^" +
                               std::to_string(*r + 1) + "\n"
                         : "  no r <= " + std::to_string(r_max) + "\n";
        } else if (v == "propagate-equal") {
            auto l = number(c, "l", 1);
            auto r = propagate_power_equality(arg(0), arg(1), l, number(c, "tmax", std::max(l, opts_.default_tmax)));
            out.report = to_json(r);
            out.text = propagation_text(r);
            if (!r.passed()) out.code = exit_expectation_failed;
        } else if (v == "finring") {
            finring(c, out);
        } else if (v == "suite") {
            auto r = run_suite(c.args[0], number(c, "count", 50), number(c, "tmax", opts_.default_tmax),
                               c.option("seed") ? std::stoull(*c.option("seed")) : opts_.seed);
            out.report = r.json;
            out.text = r.text;
            out.code = r.resource ? exit_resource_limit : r.passed ? exit_ok : exit_expectation_failed;
        }
        return out;
    }

    void finring(const Command& c, Outcome& out) {
        unsigned n = number(c, "n", 0);
        auto f = c.option("f");
        RingPtr R = f ? FiniteRing::from_polynomial(n, parse_polynomial(*f, finring_context())) : FiniteRing::integers_mod(n);
        std::string mode = c.option("mode").value_or("profile");
        auto gens = [&] {
            auto g = c.option("gens");
            if (!g) throw PreconditionError("finring mode=" + mode + " needs gens=");
            std::vector<FiniteRing::Element> es;
            for (const auto& s : split_list(*g)) es.push_back(R->image(parse_polynomial(s, finring_context())));
            return ideal_closure(R, es);
        };
        if (mode == "profile") {
            auto p = brute_power_profile(gens(), number(c, "tmax", opts_.default_tmax));
            out.report = to_json(p);
            out.text = profile_text(p);
        } else if (mode == "identities") {
            auto I = gens();
            unsigned m = number(c, "m", 0);
            if (m == 0) {
                auto last = brute_power_profile(I, 8).last_failure();
                if (!last) throw PreconditionError("contraction equality never fails for t <= 8; pass m=");
                m = *last;
            }
            auto r = verify_t322_identities(I, m);
            out.report = to_json(r);
            out.text = check_text(r);
            if (!r.passed()) out.code = exit_expectation_failed;
        } else if (mode == "search") {
            unsigned l_max = number(c, "lmax", 4), t_max = number(c, "tmax", 8);
            auto found = search_power_equal_pairs(R, l_max);
            Json rows = Json::array();
            std::size_t passed = 0;
            for (const auto& inst : found) {
                auto p = propagate_power_equality(inst.P, inst.K, inst.l, std::max(t_max, inst.l));
                passed += p.passed();
                rows.push_back({{"P", to_json(inst.P)}, {"K", to_json(inst.K)}, {"l", inst.l}, {"passed", p.passed()}});
            }
            out.report = {{"ring", R->describe()}, {"l_max", l_max}, {"instances", std::move(rows)}, {"passed", passed}};
            out.text = "  " + R->describe() + ": " + std::to_string(found.size()) + " pairs P ⊊ K with P^l = K^l, l <= " +
                       std::to_string(l_max) + "; propagation held on " + std::to_string(passed) + "\n";
            if (passed != found.size()) out.code = exit_expectation_failed;
        } else {
            if (c.args.empty()) throw PreconditionError("finring mode=cross-check needs an ideal argument");
            if (!f) throw PreconditionError("finring mode=cross-check needs f=");
            auto r = cross_check_membership(ideal(c.args[0]), n, parse_polynomial(*f, finring_context()));
            out.report = to_json(r);
            out.text = "  image of " + c.args[0] + " in " + R->describe() + " has " + std::to_string(r.via_closure.size()) +
                       " elements; " + (r.agree ? "Groebner and closure routes agree" : "routes DISAGREE") + "\n";
            if (!r.agree) out.code = exit_expectation_failed;
        }
    }

    const Script& script_;
    const RunOptions& opts_;
    std::map<std::string, Ideal> cache_;
};

// ---------------------------------------------------------------- bundled suite

struct Item {
    std::string name;
    bool passed;
    Json report;
    std::string text;
};

Item from_check(CheckReport r) {
    auto text = check_text(r);
    bool ok = r.passed();
    return {r.name, ok, to_json(r), std::move(text)};
}

Item finite_ring_example() {
    auto R = FiniteRing::make(4, {-2, 0, 1});
    std::vector<FiniteRing::Element> g{2, R->x()};
    auto I = ideal_closure(R, g);
    auto p = brute_power_profile(I, 4);
    using V = std::vector<FiniteRing::Element>;
    bool ok = p.rows.size() == 4 && p.rows[0].contraction.members() == V{0, 2} &&
              p.rows[1].contraction.members() == V{0, 2} && p.rows[1].expected.members() == V{0} &&
              p.rows[2].contraction.is_zero() && p.rows[3].contraction.is_zero() && p.last_failure() == 2u;
    return {"finite ring: (2, X) in " + R->describe(), ok, to_json(p), profile_text(p)};
}

Item stability_example(const std::string& gens, unsigned t_max, const std::string& expected,
                       std::optional<std::string> witness = std::nullopt) {
    auto tower = RingTower::parse("ZZ[X]");
    std::vector<Polynomial> ps;
    for (const auto& s : split_list(gens)) ps.push_back(parse_polynomial(s, tower.context()));
    Ideal I(tower.context(), ps);
    auto r = check_power_stable(I, tower, t_max);
    bool ok = r.overall() == expected;
    if (witness) {
        auto f = r.first_failure();
        ok = ok && f && r.rows[*f - 1].witness && r.rows[*f - 1].witness->to_string() == *witness;
    }
    auto gr = check_graded_criterion(I, tower, t_max - 1);
    bool agree = criteria_agree(r, gr);
    Json j = to_json(r);
    j["graded_criterion"] = agreement_json(r, gr, agree);
    return {"stability of " + I.to_string(), ok && agree, std::move(j), stability_text(r)};
}

Item primary_example() {
    auto q = make_context(CoefficientDomain::rationals(), {"Y", "Z", "W"});
    Ideal wp = toric_kernel(q, {3, 4, 5}, {"Y", "Z", "W"});
    auto w = primary_failure_witness(wp, 2, Polynomial::variable(q, "Y"));
    Json j{{"witness", w ? Json(w->witness.to_string()) : Json(nullptr)}, {"k", w ? Json(w->k) : Json(nullptr)}};
    std::string text = w ? "  witness " + w->witness.to_string() + ", killed by Y^" + std::to_string(w->k) + "\n"
                         : "  no witness\n";
    return {"primary-failure witness for the (3,4,5) curve, t = 2, s = Y", w.has_value(), std::move(j), text};
}

Item cross_check_example(const std::string& gens, unsigned n, const std::string& f) {
    auto zx = finring_context();
    std::vector<Polynomial> ps;
    for (const auto& s : split_list(gens)) ps.push_back(parse_polynomial(s, zx));
    Ideal I(zx, ps);
    auto r = cross_check_membership(I, n, parse_polynomial(f, zx));
    std::string text = "  " + std::to_string(r.via_closure.size()) + " elements, " +
                       (r.agree ? "routes agree" : "routes DISAGREE") + "\n";
    return {"membership cross-check of " + I.to_string() + " in " + r.ring->describe(), r.agree, to_json(r), text};
}

Item search_example(unsigned n, unsigned l_max) {
    auto R = FiniteRing::integers_mod(n);
    auto found = search_power_equal_pairs(R, l_max);
    Json rows = Json::array();
    bool ok = true;
    for (const auto& inst : found) {
        auto p = propagate_power_equality(inst.P, inst.K, inst.l, inst.l + 4);
        ok &= p.passed();
        rows.push_back({{"P", to_json(inst.P)}, {"K", to_json(inst.K)}, {"l", inst.l}, {"passed", p.passed()}});
    }
    std::string text = "  " + std::to_string(found.size()) + " pairs, propagation " + (ok ? "held" : "VIOLATED") + "\n";
    return {"power-equality propagation over " + R->describe() + ", l <= " + std::to_string(l_max), ok,
            Json{{"instances", std::move(rows)}}, text};
}

Item z8_instance() {
    auto R = FiniteRing::integers_mod(8);
    std::vector<FiniteRing::Element> g4{4}, g2{2};
    auto P = ideal_closure(R, g4), K = ideal_closure(R, g2);
    auto p = propagate_power_equality(P, K, 3, 8);
    bool ok = p.passed() && !equals(ideal_power(P, 2), ideal_power(K, 2));
    return {"propagation for P = (4), K = (2) in ZZ/8, l = 3", ok, to_json(p), propagation_text(p)};
}

Item t322_example() {
    auto R = FiniteRing::make(4, {-2, 0, 1});
    std::vector<FiniteRing::Element> g{2, R->x()};
    return from_check(verify_t322_identities(ideal_closure(R, g), 2));
}

}  // namespace

RunResult run_script(const Script& script, const RunOptions& options) { return Runner(script, options).run(); }

RunResult run_paper_examples(const RunOptions& options) {
    std::vector<std::function<Item()>> jobs{
        finite_ring_example,
        [] { return stability_example("X^2 - 2, X^3", 3, "first-failure t=2", "8"); },
        [] { return stability_example("5, X^2 + 1", 4, "stable-up-to-4"); },
        [] { return stability_example("X", 4, "stable-up-to-4"); },
    };
    for (auto [p, n, m] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 2, 3}, {3, 2, 3}, {5, 2, 3}, {2, 4, 6}})
        jobs.push_back([=] { return from_check(verify_example_316(p, n, m, 3)); });
    jobs.push_back([] { return from_check(verify_monomial_curve()); });
    jobs.push_back(primary_example);
    for (unsigned lam : {2u, 3u}) jobs.push_back([=] { return from_check(verify_lambda_gadget(lam, 3)); });
    jobs.push_back(t322_example);
    jobs.push_back([] { return cross_check_example("2, X", 4, "X^2 - 2"); });
    jobs.push_back([] { return cross_check_example("X^2 - 2, X^3", 4, "X^2 - 2"); });
    for (unsigned n : {8u, 9u, 16u}) jobs.push_back([=] { return search_example(n, 4); });
    jobs.push_back(z8_instance);
    for (const char* s : {"d-h", "j-monic", "prime-contraction", "comaximal"}) {
        jobs.push_back([&options, s] {
            auto r = run_suite(s, 50, options.default_tmax, options.seed);
            return Item{std::string("positive suite ") + s, r.passed, r.json, r.text};
        });
    }

    RunResult res;
    Json items = Json::array();
    bool all = true;
    for (const auto& job : jobs) {
        Item it;
        int code = exit_ok;
        try {
            it = job();
        } catch (const ResourceLimit& e) {
            it = {"(aborted)", false, Json{{"error", e.what()}}, std::string("  resource limit: ") + e.what() + "\n"};
            code = exit_resource_limit;
        }
        if (code == exit_ok && !it.passed) code = exit_expectation_failed;
        res.exit_code = std::max(res.exit_code, code);
        all &= it.passed;
        res.text += std::string("[") + (it.passed ? "pass" : "FAIL") + "] " + it.name + "\n" + it.text;
        items.push_back({{"name", it.name}, {"passed", it.passed}, {"report", std::move(it.report)}});
    }
    res.text += all ? "\nall paper examples reproduced\n" : "\nsome paper examples did not reproduce\n";
    res.json = {{"paper_examples", std::move(items)}, {"passed", all}, {"exit_code", res.exit_code}};
    return res;
}

}  // namespace powerstab
