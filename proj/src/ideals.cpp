#include "powerstab/ideals.hpp"

#include <algorithm>
#include <set>

#include "powerstab/errors.hpp"
#include "powerstab/limits.hpp"

namespace powerstab {

namespace {

std::string fresh_aux(const RingContext& ctx, const std::string& base) {
    std::string name = base;
    for (int k = 1; ctx.index_of(name); ++k) name = base + std::to_string(k);
    return name;
}

void require_same(const Ideal& I, const Ideal& J) {
    if (!(*I.context() == *J.context()))
        throw ContextMismatch(I.context()->to_string() + " vs " + J.context()->to_string());
}

// Canonical representative up to units: monic over QQ, positive leading
// coefficient otherwise.
Polynomial unit_normalized(const Polynomial& p) {
    if (p.is_zero()) return p;
    auto [lm, lc] = p.leading_term(default_order(*p.context()));
    if (p.context()->domain().is_rationals()) return lc.value() == 1 ? p : p.scaled(1 / lc.value());
    return sgn(lc.value()) < 0 ? -p : p;
}

struct TermsLess {
    bool operator()(const Polynomial& a, const Polynomial& b) const {
        return std::lexicographical_compare(a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
                                            [](const Term& x, const Term& y) {
                                                if (x.mono != y.mono) return x.mono < y.mono;
                                                return x.coeff < y.coeff;
                                            });
    }
};

void check_generator_count(std::size_t n) {
    if (n > limits().max_generators)
        throw ResourceLimit("ideal with " + std::to_string(n) + " generators exceeds the guard of " +
                            std::to_string(limits().max_generators.load()));
}

// Generators of the reduced basis (of `gens` in ctx) that avoid every variable
// in `vars`, under an order eliminating `vars`.
std::vector<Polynomial> eliminated_part(const ContextPtr& ctx, const std::vector<Polynomial>& gens,
                                        const std::vector<std::size_t>& vars) {
    auto order = MonomialOrder::elimination(ctx->num_vars(), vars);
    auto gb = groebner_basis(ctx, gens, order);
    std::vector<Polynomial> out;
    for (const auto& e : gb.elements())
        if (std::none_of(vars.begin(), vars.end(), [&](std::size_t v) { return e.involves(v); })) out.push_back(e);
    return out;
}

Ideal from_list(const ContextPtr& ctx, std::vector<Polynomial> gens) {
    if (gens.empty()) return Ideal::zero(ctx);
    return Ideal(ctx, std::move(gens));
}

}  // namespace

Ideal::Ideal(ContextPtr ctx, std::vector<Polynomial> generators)
    : ctx_(std::move(ctx)), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens_) {
        if (!(*g.context() == *ctx_)) throw ContextMismatch(g.context()->to_string() + " vs " + ctx_->to_string());
    }
    if (gens_.empty()) gens_.push_back(Polynomial(ctx_));
}

Ideal Ideal::zero(ContextPtr ctx) {
    auto c = ctx;
    return Ideal(std::move(ctx), {Polynomial(c)});
}

Ideal Ideal::unit(ContextPtr ctx) {
    auto c = ctx;
    return Ideal(std::move(ctx), {Polynomial::constant(c, 1)});
}

std::shared_ptr<const GroebnerBasis> Ideal::cached_basis(const MonomialOrder& order) const {
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->bases.find(order);
        if (it != cache_->bases.end()) return it->second;
    }
    auto gb = std::make_shared<const GroebnerBasis>(groebner_basis(ctx_, gens_, order));
    std::lock_guard lock(cache_->mutex);
    return cache_->bases.emplace(order, std::move(gb)).first->second;
}

bool Ideal::contains(const Polynomial& f) const { return cached_basis(default_order(*ctx_))->contains(f); }

std::string Ideal::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += gens_[i].to_string();
    }
    return out + ")";
}

bool is_subset(const Ideal& I, const Ideal& J) {
    require_same(I, J);
    auto gb = J.basis();
    return std::all_of(I.generators().begin(), I.generators().end(), [&](const Polynomial& g) { return gb.contains(g); });
}

bool equals(const Ideal& I, const Ideal& J) { return is_subset(I, J) && is_subset(J, I); }

// ---------------------------------------------------------------- RingTower

ContextPtr RingTower::context() const {
    std::vector<std::string> vars = base_vars;
    vars.insert(vars.end(), adjoined.begin(), adjoined.end());
    return make_context(base_domain, std::move(vars));
}

ContextPtr RingTower::base_context() const { return make_context(base_domain, base_vars); }

std::string RingTower::to_string() const {
    auto group = [](const std::vector<std::string>& vs) {
        std::string s = "[";
        for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + vs[i];
        return s + "]";
    };
    std::string s = base_domain.to_string();
    if (!base_vars.empty()) s += group(base_vars);
    return s + group(adjoined);
}

void RingTower::check(const RingContext& ctx) const {
    if (!(ctx == *context())) throw ContextMismatch("ideal lives in " + ctx.to_string() + ", tower is " + to_string());
}

RingTower RingTower::parse(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& msg) -> ParseError { return ParseError(msg, 1, pos + 1); };
    while (pos < text.size() && text[pos] == ' ') ++pos;
    RingTower tower;
    if (text.substr(pos, 2) == "ZZ")
        tower.base_domain = CoefficientDomain::integers();
    else if (text.substr(pos, 2) == "QQ")
        tower.base_domain = CoefficientDomain::rationals();
    else
        throw fail("expected ZZ or QQ");
    pos += 2;
    std::vector<std::vector<std::string>> groups;
    while (pos < text.size() && text[pos] != ' ') {
        if (text[pos] != '[') throw fail("expected '['");
        ++pos;
        std::vector<std::string> group;
        while (true) {
            std::size_t start = pos;
            while (pos < text.size() && text[pos] != ',' && text[pos] != ']') ++pos;
            if (pos == text.size()) throw fail("unterminated variable list");
            std::string name(text.substr(start, pos - start));
            if (!RingContext::is_user_identifier(name)) {
                pos = start;
                throw fail("invalid variable name '" + name + "'");
            }
            group.push_back(std::move(name));
            if (text[pos++] == ']') break;
        }
        groups.push_back(std::move(group));
    }
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos != text.size()) throw fail("trailing input after tower");
    if (groups.empty() || groups.size() > 2) throw fail("expected one or two bracket groups");
    tower.adjoined = groups.back();
    if (groups.size() == 2) tower.base_vars = groups.front();
    // distinctness is checked by the context itself
    try {
        (void)tower.context();
    } catch (const Error& e) {
        throw ParseError(e.what(), 1, 1);
    }
    return tower;
}

// ---------------------------------------------------------------- operations

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    require_same(I, J);
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators())
        if (!g.is_zero()) gens.push_back(g);
    for (const auto& g : J.generators())
        if (!g.is_zero()) gens.push_back(g);
    return from_list(I.context(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    require_same(I, J);
    std::set<Polynomial, TermsLess> seen;
    std::vector<Polynomial> gens;
    for (const auto& a : I.generators()) {
        if (a.is_zero()) continue;
        for (const auto& b : J.generators()) {
            if (b.is_zero()) continue;
            auto p = unit_normalized(a * b);
            if (seen.insert(p).second) {
                gens.push_back(std::move(p));
                check_generator_count(gens.size());
            }
        }
    }
    return from_list(I.context(), std::move(gens));
}

Ideal interreduce(const Ideal& I) {
    auto gb = I.basis();
    return from_list(I.context(), gb.elements());
}

Ideal ideal_power(const Ideal& I, unsigned t) {
    if (t == 0) throw PreconditionError("ideal power needs t >= 1");
    Ideal base = interreduce(I);
    Ideal acc = base;
    for (unsigned k = 2; k <= t; ++k) acc = interreduce(ideal_product(acc, base));
    return acc;
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    require_same(I, J);
    const auto& ctx = I.context();
    if (I.is_zero() || J.is_zero()) return Ideal::zero(ctx);
    auto ext = ctx->with_auxiliary({fresh_aux(*ctx, "_u")});
    auto u = Polynomial::variable(ext, ext->variables()[0]);
    auto one_minus_u = Polynomial::constant(ext, 1) - u;
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators())
        if (!g.is_zero()) gens.push_back(u * g.embed(ext));
    for (const auto& h : J.generators())
        if (!h.is_zero()) gens.push_back(one_minus_u * h.embed(ext));
    std::vector<Polynomial> out;
    for (const auto& e : eliminated_part(ext, gens, {0})) out.push_back(e.embed(ctx));
    return from_list(ctx, std::move(out));
}

Ideal quotient(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) throw PreconditionError("ideal quotient by zero");
    if (!(*f.context() == *I.context()))
        throw ContextMismatch(f.context()->to_string() + " vs " + I.context()->to_string());
    if (I.is_zero()) return I;
    Ideal meet = intersect(I, Ideal(I.context(), {f}));
    std::vector<Polynomial> gens;
    for (const auto& g : meet.generators())
        if (!g.is_zero()) gens.push_back(exact_divide(g, f));
    return from_list(I.context(), std::move(gens));
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
    constexpr int max_rounds = 64;
    Ideal cur = interreduce(I);
    for (int round = 0; round < max_rounds; ++round) {
        Ideal next = interreduce(quotient(cur, f));
        if (is_subset(next, cur)) return cur;
        cur = std::move(next);
    }
    throw ResourceLimit("saturation did not stabilize within " + std::to_string(max_rounds) + " quotients");
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop) {
    const auto& ctx = I.context();
    std::vector<std::size_t> idx;
    for (const auto& name : drop) idx.push_back(ctx->require_index(name));
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    if (idx.empty()) return I;
    return from_list(ctx, eliminated_part(ctx, I.generators(), idx));
}

Ideal embed(const Ideal& I, const ContextPtr& target) {
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(g.embed(target));
    return Ideal(target, std::move(gens));
}

Ideal contract_to_base(const Ideal& I, const RingTower& tower) {
    tower.check(*I.context());
    auto base = tower.base_context();
    if (tower.adjoined.empty()) return embed(I, base);
    Ideal part = eliminate(I, tower.adjoined);
    return interreduce(embed(part, base));
}

bool radical_member(const Polynomial& f, const Ideal& I) {
    const auto& ctx = I.context();
    if (!ctx->domain().is_rationals())
        throw UnsupportedOperation("radical membership is only supported over QQ, not " + ctx->domain().to_string());
    if (!(*f.context() == *ctx)) throw ContextMismatch(f.context()->to_string() + " vs " + ctx->to_string());
    auto ext = ctx->with_auxiliary({fresh_aux(*ctx, "_u")});
    auto u = Polynomial::variable(ext, ext->variables()[0]);
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(g.embed(ext));
    gens.push_back(Polynomial::constant(ext, 1) - u * f.embed(ext));
    return groebner_basis(ext, gens, default_order(*ext)).is_unit_ideal();
}

Ideal toric_kernel(const ContextPtr& ctx, const std::vector<unsigned>& weights, const std::vector<std::string>& vars) {
    if (weights.size() != vars.size())
        throw PreconditionError("toric kernel needs one weight per variable (" + std::to_string(weights.size()) +
                                " weights, " + std::to_string(vars.size()) + " variables)");
    if (std::any_of(weights.begin(), weights.end(), [](unsigned w) { return w == 0; }))
        throw PreconditionError("toric weights must be positive");
    auto ext = ctx->with_auxiliary({fresh_aux(*ctx, "_T")});
    const auto& T = ext->variables()[0];
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        ext->require_index(vars[i]);
        gens.push_back(Polynomial::variable(ext, vars[i]) - Polynomial::variable(ext, T, weights[i]));
    }
    std::vector<Polynomial> out;
    for (const auto& e : eliminated_part(ext, gens, {0})) out.push_back(e.embed(ctx));
    return from_list(ctx, std::move(out));
}

}  // namespace powerstab
