#include "powerstab/finring.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "powerstab/errors.hpp"
#include "powerstab/limits.hpp"

namespace powerstab {

namespace {

long mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

void require_same_ring(const FinIdeal& I, const FinIdeal& J) {
    if (!(*I.ring() == *J.ring())) throw ContextMismatch(I.ring()->describe() + " vs " + J.ring()->describe());
}

std::string format_residue_poly(const std::vector<unsigned>& c) {
    std::string out;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (!c[k]) continue;
        std::string term;
        if (k == 0)
            term = std::to_string(c[k]);
        else {
            if (c[k] != 1) term = std::to_string(c[k]) + "*";
            term += "X";
            if (k > 1) term += "^" + std::to_string(k);
        }
        out += (out.empty() ? "" : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

// ---------------------------------------------------------------- FiniteRing

FiniteRing::FiniteRing(unsigned modulus, std::vector<long> f) : n_(modulus) {
    if (n_ < 2) throw PreconditionError("finite ring modulus must be at least 2");
    while (!f.empty() && mod(f.back(), n_) == 0) f.pop_back();
    if (f.size() < 2) throw PreconditionError("quotient polynomial must have degree at least 1");
    if (mod(f.back(), n_) != 1) throw PreconditionError("quotient polynomial must be monic");
    d_ = static_cast<unsigned>(f.size() - 1);
    for (long c : f) f_.push_back(static_cast<unsigned>(mod(c, n_)));
    std::size_t s = 1;
    for (unsigned i = 0; i < d_; ++i) {
        s *= n_;
        if (s > limits().max_ring_size)
            throw ResourceLimit("ring ZZ/" + std::to_string(n_) + " of degree " + std::to_string(d_) +
                                " exceeds the size guard of " + std::to_string(limits().max_ring_size.load()));
    }
    size_ = s;
}

RingPtr FiniteRing::make(unsigned modulus, std::vector<long> f) {
    return std::make_shared<const FiniteRing>(modulus, std::move(f));
}

RingPtr FiniteRing::integers_mod(unsigned modulus) { return make(modulus, {0, 1}); }

RingPtr FiniteRing::from_polynomial(unsigned modulus, const Polynomial& f) {
    const auto& ctx = *f.context();
    if (ctx.num_vars() != 1 || !ctx.domain().is_integers())
        throw PreconditionError("quotient polynomial must lie in a univariate ZZ context");
    std::vector<long> c(f.total_degree() + 1, 0);
    for (const auto& t : f.terms()) {
        mpz_class r = t.coeff.get_num() % modulus;
        c[t.mono[0]] = r.get_si();
    }
    return make(modulus, std::move(c));
}

FiniteRing::Element FiniteRing::x() const { return from_coeffs({0, 1}); }

FiniteRing::Element FiniteRing::add(Element a, Element b) const {
    Element out = 0, place = 1;
    for (unsigned i = 0; i < d_; ++i) {
        out += ((a % n_ + b % n_) % n_) * place;
        a /= n_;
        b /= n_;
        place *= n_;
    }
    return out;
}

FiniteRing::Element FiniteRing::neg(Element a) const {
    Element out = 0, place = 1;
    for (unsigned i = 0; i < d_; ++i) {
        out += ((n_ - a % n_) % n_) * place;
        a /= n_;
        place *= n_;
    }
    return out;
}

FiniteRing::Element FiniteRing::mul(Element a, Element b) const {
    auto ca = coeffs(a), cb = coeffs(b);
    std::vector<long> prod(2 * d_ - 1, 0);
    for (unsigned i = 0; i < d_; ++i) {
        if (!ca[i]) continue;
        for (unsigned j = 0; j < d_; ++j) prod[i + j] = (prod[i + j] + static_cast<long>(ca[i]) * cb[j]) % n_;
    }
    return from_coeffs(prod);
}

std::vector<unsigned> FiniteRing::coeffs(Element e) const {
    std::vector<unsigned> c(d_);
    for (unsigned i = 0; i < d_; ++i) {
        c[i] = e % n_;
        e /= n_;
    }
    return c;
}

FiniteRing::Element FiniteRing::from_coeffs(const std::vector<long>& c) const {
    std::vector<long> r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = mod(c[i], n_);
    // reduce by the monic f from the top
    for (std::size_t k = r.size(); k-- > d_;) {
        long top = r[k];
        if (!top) continue;
        for (unsigned i = 0; i <= d_; ++i) r[k - d_ + i] = mod(r[k - d_ + i] - top * static_cast<long>(f_[i]), n_);
    }
    Element out = 0, place = 1;
    for (unsigned i = 0; i < d_ && i < r.size(); ++i) {
        out += static_cast<Element>(r[i]) * place;
        place *= n_;
    }
    return out;
}

FiniteRing::Element FiniteRing::image(const Polynomial& p) const {
    const auto& ctx = *p.context();
    if (ctx.num_vars() != 1 || !ctx.domain().is_integers())
        throw PreconditionError("finite ring images need a univariate ZZ polynomial");
    std::vector<long> c(p.is_zero() ? 1 : p.total_degree() + 1, 0);
    for (const auto& t : p.terms()) {
        mpz_class r = t.coeff.get_num() % n_;
        c[t.mono[0]] = mod(r.get_si(), n_);
    }
    return from_coeffs(c);
}

Polynomial FiniteRing::lift(Element e, const ContextPtr& zx) const {
    auto c = coeffs(e);
    std::vector<Term> terms;
    for (unsigned i = 0; i < d_; ++i)
        if (c[i]) terms.push_back(Term{Monomial(std::vector<std::uint32_t>{i}), mpq_class(c[i])});
    return Polynomial(zx, std::move(terms));
}

std::string FiniteRing::to_string(Element e) const { return format_residue_poly(coeffs(e)); }

std::string FiniteRing::describe() const {
    std::string base = "ZZ/" + std::to_string(n_);
    if (d_ == 1 && f_[0] == 0) return base;
    return base + "[X]/(" + format_residue_poly(f_) + ")";
}

// ---------------------------------------------------------------- FinIdeal

FinIdeal additive_span(const RingPtr& ring, std::span<const FiniteRing::Element> elements) {
    FinIdeal I;
    I.ring_ = ring;
    I.mask_.assign(ring->size(), false);
    I.mask_[0] = true;
    I.members_ = {0};
    for (auto c : elements) {
        if (I.mask_[c]) continue;
        I.gens_.push_back(c);
        std::vector<FiniteRing::Element> base = I.members_;
        // adjoin the cosets H + k*c until k*c falls back into H
        FiniteRing::Element kc = c;
        while (!I.mask_[kc]) {
            for (auto h : base) {
                auto e = ring->add(h, kc);
                I.mask_[e] = true;
                I.members_.push_back(e);
            }
            kc = ring->add(kc, c);
        }
    }
    std::sort(I.members_.begin(), I.members_.end());
    return I;
}

FinIdeal ideal_closure(const RingPtr& ring, std::span<const FiniteRing::Element> gens) {
    std::vector<FiniteRing::Element> cands;
    auto x = ring->x();
    for (auto g : gens) {
        if (g >= ring->size()) throw PreconditionError("element outside the ring");
        auto t = g;
        for (unsigned i = 0; i < ring->degree(); ++i) {
            cands.push_back(t);
            t = ring->mul(t, x);
        }
    }
    return additive_span(ring, cands);
}

FinIdeal FinIdeal::from_members(RingPtr ring, std::vector<Element> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto span = additive_span(ring, members);
    if (span.members() != members) throw PreconditionError("element set is not an additive subgroup");
    auto x = ring->x();
    for (auto h : members)
        if (!span.contains(ring->mul(h, x))) throw PreconditionError("element set is not closed under multiplication");
    return span;
}

std::string FinIdeal::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) out += (i ? ", " : "") + ring_->to_string(members_[i]);
    return out + "}";
}

FinIdeal ideal_sum(const FinIdeal& I, const FinIdeal& J) {
    require_same_ring(I, J);
    std::vector<FiniteRing::Element> g = I.generators();
    g.insert(g.end(), J.generators().begin(), J.generators().end());
    return additive_span(I.ring(), g);
}

FinIdeal ideal_product(const FinIdeal& I, const FinIdeal& J) {
    require_same_ring(I, J);
    std::vector<FiniteRing::Element> g;
    for (auto a : I.generators())
        for (auto b : J.generators()) g.push_back(I.ring()->mul(a, b));
    return ideal_closure(I.ring(), g);
}

FinIdeal ideal_power(const FinIdeal& I, unsigned t) {
    if (t == 0) throw PreconditionError("ideal power needs t >= 1");
    FinIdeal acc = I;
    for (unsigned k = 2; k <= t; ++k) acc = ideal_product(acc, I);
    return acc;
}

FinIdeal intersect(const FinIdeal& I, const FinIdeal& J) {
    require_same_ring(I, J);
    std::vector<FiniteRing::Element> common;
    for (auto e : I.members())
        if (J.contains(e)) common.push_back(e);
    return additive_span(I.ring(), common);
}

bool is_subset(const FinIdeal& I, const FinIdeal& J) {
    require_same_ring(I, J);
    return std::all_of(I.members().begin(), I.members().end(), [&](auto e) { return J.contains(e); });
}

bool equals(const FinIdeal& I, const FinIdeal& J) {
    require_same_ring(I, J);
    return I.members() == J.members();
}

FinIdeal contract(const FinIdeal& I) {
    auto base = FiniteRing::integers_mod(I.ring()->modulus());
    std::vector<FiniteRing::Element> in_base;
    for (auto e : I.members())
        if (I.ring()->in_base(e)) in_base.push_back(e);
    return additive_span(base, in_base);
}

bool verify_closure(const FinIdeal& I) {
    const auto& R = *I.ring();
    if (!I.contains(0)) return false;
    for (auto a : I.members()) {
        for (auto b : I.members())
            if (!I.contains(R.add(a, b))) return false;
        for (FiniteRing::Element r = 0; r < R.size(); ++r)
            if (!I.contains(R.mul(r, a))) return false;
    }
    return true;
}

// ---------------------------------------------------------------- profiles

std::optional<unsigned> PowerProfile::last_failure() const {
    std::optional<unsigned> out;
    for (const auto& r : rows)
        if (!r.equal) out = r.t;
    return out;
}

PowerProfile brute_power_profile(const FinIdeal& I, unsigned t_max) {
    if (t_max == 0) throw PreconditionError("brute_power_profile needs t_max >= 1");
    PowerProfile prof{I, {}};
    FinIdeal J = contract(I);
    FinIdeal power = I, expected = J;
    for (unsigned t = 1; t <= t_max; ++t) {
        if (t > 1) {
            power = ideal_product(power, I);
            expected = ideal_product(expected, J);
        }
        FinIdeal c = contract(power);
        bool eq = c == expected;
        prof.rows.push_back(ProfileRow{t, power, std::move(c), expected, eq});
    }
    return prof;
}

CrossCheckReport cross_check_membership(const Ideal& I, unsigned n, const Polynomial& f) {
    const auto& ctx = I.context();
    if (ctx->num_vars() != 1 || !ctx->domain().is_integers())
        throw PreconditionError("cross_check_membership needs an ideal of ZZ[X]");
    auto ring = FiniteRing::from_polynomial(n, f);

    std::vector<Polynomial> gens = I.generators();
    gens.push_back(Polynomial::constant(ctx, static_cast<long>(n)));
    gens.push_back(f);
    auto gb = groebner_basis(ctx, gens, MonomialOrder::lex(1));
    CrossCheckReport rep{ring, {}, {}, {}, false};
    for (FiniteRing::Element e = 0; e < ring->size(); ++e)
        if (gb.contains(ring->lift(e, ctx))) rep.via_groebner.push_back(e);

    std::vector<FiniteRing::Element> images;
    for (const auto& g : I.generators()) images.push_back(ring->image(g));
    auto closure = ideal_closure(ring, images);
    rep.via_closure = closure.members();
    for (auto e : rep.via_closure)
        if (ring->in_base(e)) rep.image_in_base.push_back(e);
    rep.agree = rep.via_groebner == rep.via_closure;
    return rep;
}

std::vector<FinIdeal> all_ideals(const RingPtr& ring) {
    constexpr std::size_t max_ideals = 4096;
    if (ring->size() > limits().max_search_ring_size)
        throw ResourceLimit("ideal enumeration over " + ring->describe() + " exceeds the search guard of " +
                            std::to_string(limits().max_search_ring_size.load()) + " elements");
    std::vector<FinIdeal> list;
    std::set<std::vector<FiniteRing::Element>> seen;
    auto push = [&](FinIdeal I) {
        if (!seen.insert(I.members()).second) return;
        if (list.size() >= max_ideals) throw ResourceLimit("more than " + std::to_string(max_ideals) + " ideals");
        list.push_back(std::move(I));
    };
    for (FiniteRing::Element e = 0; e < ring->size(); ++e) {
        FiniteRing::Element g[] = {e};
        push(ideal_closure(ring, g));
    }
    // every ideal is a finite sum of principal ones
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) push(ideal_sum(list[i], list[j]));
    std::sort(list.begin(), list.end(), [](const FinIdeal& a, const FinIdeal& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members() < b.members();
    });
    return list;
}

std::vector<PowerEqualInstance> search_power_equal_pairs(const RingPtr& ring, unsigned l_max) {
    if (l_max == 0) throw PreconditionError("search_power_equal_pairs needs l_max >= 1");
    auto ideals = all_ideals(ring);
    std::vector<std::vector<FinIdeal>> powers;
    for (const auto& I : ideals) {
        std::vector<FinIdeal> p{I};
        for (unsigned l = 2; l <= l_max; ++l) p.push_back(ideal_product(p.back(), I));
        powers.push_back(std::move(p));
    }
    std::vector<PowerEqualInstance> out;
    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (std::size_t j = 0; j < ideals.size(); ++j) {
            if (i == j || !is_subset(ideals[i], ideals[j])) continue;
            for (unsigned l = 1; l <= l_max; ++l)
                if (powers[i][l - 1] == powers[j][l - 1]) {
                    out.push_back(PowerEqualInstance{ideals[i], ideals[j], l});
                    break;
                }
        }
    return out;
}

}  // namespace powerstab
