#include "powerstab/groebner.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <tuple>
#include <unordered_set>

#include "powerstab/errors.hpp"
#include "powerstab/limits.hpp"

namespace powerstab {

namespace {

// Working representation: terms sorted by the active order, leading term first.
using WPoly = std::vector<Term>;

WPoly to_work(const Polynomial& p, const MonomialOrder& ord) {
    WPoly w = p.terms();
    std::sort(w.begin(), w.end(), [&](const Term& a, const Term& b) { return ord.less(b.mono, a.mono); });
    return w;
}

Polynomial to_poly(const ContextPtr& ctx, WPoly w) { return Polynomial(ctx, std::move(w)); }

void check_degree(const Monomial& m) {
    if (m.total_degree() > limits().max_total_degree)
        throw ResourceLimit("Groebner computation reached total degree " + std::to_string(m.total_degree()) +
                            " (guard " + std::to_string(limits().max_total_degree.load()) + ")");
}

// a[from..] - c * m * b[b_from..], both inputs sorted descending; m*b stays sorted.
WPoly sub_mul(const WPoly& a, std::size_t from, const mpq_class& c, const Monomial& m, const WPoly& b,
              std::size_t b_from, const MonomialOrder& ord) {
    WPoly out;
    out.reserve(a.size() - from + b.size() - b_from);
    std::size_t i = from, j = b_from;
    Monomial mb;
    bool have_mb = false;
    while (i < a.size() || j < b.size()) {
        if (j < b.size() && !have_mb) {
            mb = b[j].mono * m;
            have_mb = true;
        }
        if (j == b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        auto cmp = i < a.size() ? ord.compare(a[i].mono, mb) : std::strong_ordering::less;
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            mpq_class v = -c * b[j].coeff;
            if (sgn(v) != 0) out.push_back(Term{std::move(mb), std::move(v)});
            ++j;
            have_mb = false;
        } else {
            mpq_class v = a[i].coeff - c * b[j].coeff;
            if (sgn(v) != 0) out.push_back(Term{a[i].mono, std::move(v)});
            ++i;
            ++j;
            have_mb = false;
        }
    }
    if (out.size() > limits().max_terms)
        throw ResourceLimit("polynomial with " + std::to_string(out.size()) + " terms exceeds the term guard");
    return out;
}

WPoly scale_shift(const WPoly& a, const mpq_class& c, const Monomial& m) {
    WPoly out;
    if (sgn(c) == 0) return out;
    out.reserve(a.size());
    for (const auto& t : a) out.push_back(Term{t.mono * m, c * t.coeff});
    return out;
}

WPoly add_work(const WPoly& a, const WPoly& b, const MonomialOrder& ord) {
    static const mpq_class minus_one(-1);
    if (b.empty()) return a;
    return sub_mul(a, 0, minus_one, Monomial(b[0].mono.size()), b, 0, ord);
}

// Quotient q for rewriting coefficient c by leading coefficient lc. Returns
// false when the term is not reducible (Euclidean quotient zero over ZZ).
bool coefficient_quotient(const mpq_class& c, const mpq_class& lc, bool field, mpq_class& q, mpq_class& r) {
    if (field) {
        q = c / lc;
        r = 0;
        return true;
    }
    mpz_class qq, rr;
    euclid_divide(c.get_num(), lc.get_num(), qq, rr);
    if (sgn(qq) == 0) return false;
    q = qq;
    r = rr;
    return true;
}

// Full normal form of h modulo G (skipping index `skip`).
WPoly normal_form(WPoly h, const std::vector<WPoly>& G, bool field, const MonomialOrder& ord,
                  std::size_t skip = SIZE_MAX) {
    WPoly result;
    std::size_t pos = 0;
    mpq_class q, r;
    while (pos < h.size()) {
        const Term& lead = h[pos];
        bool reduced = false;
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (k == skip || G[k].empty()) continue;
            const Term& gl = G[k][0];
            if (!gl.mono.divides(lead.mono)) continue;
            if (!coefficient_quotient(lead.coeff, gl.coeff, field, q, r)) continue;
            Monomial shift = lead.mono.quotient(gl.mono);
            WPoly next;
            if (sgn(r) != 0) {
                WPoly rest = sub_mul(h, pos + 1, q, shift, G[k], 1, ord);
                next.reserve(rest.size() + 1);
                next.push_back(Term{lead.mono, r});
                std::move(rest.begin(), rest.end(), std::back_inserter(next));
            } else {
                next = sub_mul(h, pos + 1, q, shift, G[k], 1, ord);
            }
            h = std::move(next);
            pos = 0;
            reduced = true;
            break;
        }
        if (!reduced) {
            result.push_back(h[pos]);
            ++pos;
        }
    }
    return result;
}

WPoly s_poly_work(const WPoly& f, const WPoly& g, bool field, const MonomialOrder& ord) {
    const Term& a = f[0];
    const Term& b = g[0];
    Monomial L = a.mono.lcm(b.mono);
    check_degree(L);
    mpq_class cf, cg;
    if (field) {
        cf = 1 / a.coeff;
        cg = 1 / b.coeff;
    } else {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), a.coeff.get_num_mpz_t(), b.coeff.get_num_mpz_t());
        cf = mpq_class(l) / a.coeff;
        cg = mpq_class(l) / b.coeff;
    }
    // leading terms cancel by construction
    WPoly lhs = scale_shift(WPoly(f.begin() + 1, f.end()), cf, L.quotient(a.mono));
    return sub_mul(lhs, 0, cg, L.quotient(b.mono), g, 1, ord);
}

WPoly g_poly_work(const WPoly& f, const WPoly& g, const MonomialOrder& ord) {
    const Term& a = f[0];
    const Term& b = g[0];
    Monomial L = a.mono.lcm(b.mono);
    check_degree(L);
    mpz_class gg, u, v;
    gcd_bezout(a.coeff.get_num(), b.coeff.get_num(), gg, u, v);
    WPoly lhs = scale_shift(f, mpq_class(u), L.quotient(a.mono));
    WPoly rhs = scale_shift(g, mpq_class(v), L.quotient(b.mono));
    return add_work(lhs, rhs, ord);
}

void normalize_unit(WPoly& w, bool field) {
    if (w.empty()) return;
    if (field) {
        mpq_class inv = 1 / w[0].coeff;
        if (inv != 1)
            for (auto& t : w) t.coeff *= inv;
    } else if (sgn(w[0].coeff) < 0) {
        for (auto& t : w) t.coeff = -t.coeff;
    }
}

bool divides_coeff(const mpq_class& a, const mpq_class& b, bool field) {
    if (field) return true;
    return mpz_divisible_p(b.get_num_mpz_t(), a.get_num_mpz_t()) != 0;
}

enum class PairKind : int { G = 0, S = 1 };

struct Pair {
    std::uint64_t degree;
    std::size_t i, j;
    PairKind kind;
    friend auto operator<=>(const Pair& a, const Pair& b) {
        return std::tie(a.degree, a.i, a.j, a.kind) <=> std::tie(b.degree, b.i, b.j, b.kind);
    }
    friend bool operator==(const Pair&, const Pair&) = default;
};

class Engine {
  public:
    Engine(const MonomialOrder& ord, bool field) : ord_(ord), field_(field) {}

    void add(WPoly h) {
        normalize_unit(h, field_);
        if (basis_.size() >= limits().max_basis_size)
            throw ResourceLimit("Groebner basis grew past " + std::to_string(limits().max_basis_size.load()) + " elements");
        std::size_t n = basis_.size();
        for (std::size_t i = 0; i < n; ++i) {
            Monomial L = basis_[i][0].mono.lcm(h[0].mono);
            if (!field_ && !divides_coeff(basis_[i][0].coeff, h[0].coeff, false) &&
                !divides_coeff(h[0].coeff, basis_[i][0].coeff, false))
                queue_.insert(Pair{L.total_degree(), i, n, PairKind::G});
            queue_.insert(Pair{L.total_degree(), i, n, PairKind::S});
            pending_s_.insert(key(i, n));
        }
        basis_.push_back(std::move(h));
    }

    void run() {
        while (!queue_.empty()) {
            Pair p = *queue_.begin();
            queue_.erase(queue_.begin());
            const WPoly& f = basis_[p.i];
            const WPoly& g = basis_[p.j];
            WPoly h;
            if (p.kind == PairKind::S) {
                pending_s_.erase(key(p.i, p.j));
                if (product_criterion(f[0], g[0])) continue;
                if (chain_criterion(p.i, p.j)) continue;
                h = s_poly_work(f, g, field_, ord_);
            } else {
                h = g_poly_work(f, g, ord_);
            }
            h = normal_form(std::move(h), basis_, field_, ord_);
            if (!h.empty()) add(std::move(h));
        }
    }

    std::vector<WPoly> reduced_basis() const {
        // minimise
        std::vector<std::size_t> keep;
        for (std::size_t g = 0; g < basis_.size(); ++g) {
            const Term& lg = basis_[g][0];
            bool redundant = false;
            for (std::size_t h = 0; h < basis_.size() && !redundant; ++h) {
                if (h == g) continue;
                const Term& lh = basis_[h][0];
                if (!lh.mono.divides(lg.mono) || !divides_coeff(lh.coeff, lg.coeff, field_)) continue;
                bool same = lh.mono == lg.mono && (field_ || lh.coeff == lg.coeff);
                if (!same || h < g) redundant = true;
            }
            if (!redundant) keep.push_back(g);
        }
        std::vector<WPoly> minimal;
        for (auto g : keep) minimal.push_back(basis_[g]);
        // tail-reduce
        std::vector<WPoly> out(minimal.size());
        for (std::size_t k = 0; k < minimal.size(); ++k) {
            WPoly tail(minimal[k].begin() + 1, minimal[k].end());
            WPoly nf = normal_form(std::move(tail), minimal, field_, ord_, k);
            out[k].reserve(nf.size() + 1);
            out[k].push_back(minimal[k][0]);
            std::move(nf.begin(), nf.end(), std::back_inserter(out[k]));
            normalize_unit(out[k], field_);
        }
        std::sort(out.begin(), out.end(), [&](const WPoly& a, const WPoly& b) {
            auto c = ord_.compare(a[0].mono, b[0].mono);
            if (c != 0) return c > 0;
            return a[0].coeff < b[0].coeff;
        });
        return out;
    }

  private:
    static std::uint64_t key(std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        return (static_cast<std::uint64_t>(i) << 32) | j;
    }

    // Over ZZ the coprime shortcut also needs coprime leading coefficients.
    bool product_criterion(const Term& a, const Term& b) const {
        if (!a.mono.coprime(b.mono)) return false;
        if (field_) return true;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.coeff.get_num_mpz_t(), b.coeff.get_num_mpz_t());
        return g == 1;
    }

    // Skip S(i, j) when some k has a leading term dividing lcm(lt_i, lt_j) and
    // neither S(i, k) nor S(j, k) is still waiting.
    bool chain_criterion(std::size_t i, std::size_t j) const {
        const Term& a = basis_[i][0];
        const Term& b = basis_[j][0];
        Monomial L = a.mono.lcm(b.mono);
        mpz_class c;
        if (!field_) mpz_lcm(c.get_mpz_t(), a.coeff.get_num_mpz_t(), b.coeff.get_num_mpz_t());
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            if (k == i || k == j) continue;
            const Term& t = basis_[k][0];
            if (!t.mono.divides(L)) continue;
            if (!field_ && !mpz_divisible_p(c.get_mpz_t(), t.coeff.get_num_mpz_t())) continue;
            if (pending_s_.count(key(i, k)) || pending_s_.count(key(j, k))) continue;
            return true;
        }
        return false;
    }

    const MonomialOrder& ord_;
    bool field_;
    std::vector<WPoly> basis_;
    std::set<Pair> queue_;
    std::unordered_set<std::uint64_t> pending_s_;
};

std::mutex& observer_mutex() {
    static std::mutex m;
    return m;
}

BasisObserver& observer_slot() {
    static BasisObserver obs;
    return obs;
}

void check_gb_domain(const CoefficientDomain& d) {
    if (d.is_modular()) throw UnsupportedOperation("Groebner bases over " + d.to_string() + " are not supported");
}

}  // namespace

Flavor flavor_for(const CoefficientDomain& d) {
    check_gb_domain(d);
    return d.is_rationals() ? Flavor::Field : Flavor::StrongEuclidean;
}

bool GroebnerBasis::is_unit_ideal() const {
    return elements_.size() == 1 && elements_[0].is_constant() && elements_[0].constant_term() == 1;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const { return reduce(f, elements_, order_); }

bool GroebnerBasis::contains(const Polynomial& f) const { return powerstab::contains(*this, f); }

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> G, const MonomialOrder& order) {
    const auto& ctx = f.context();
    bool field = flavor_for(ctx->domain()) == Flavor::Field;
    std::vector<WPoly> work;
    for (const auto& g : G) {
        require_same_context(f, g);
        if (!g.is_zero()) work.push_back(to_work(g, order));
    }
    return to_poly(ctx, normal_form(to_work(f, order), work, field, order));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    require_same_context(f, g);
    if (f.is_zero() || g.is_zero()) throw PreconditionError("S-polynomial of a zero polynomial");
    bool field = flavor_for(f.context()->domain()) == Flavor::Field;
    return to_poly(f.context(), s_poly_work(to_work(f, order), to_work(g, order), field, order));
}

Polynomial g_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    require_same_context(f, g);
    if (!f.context()->domain().is_integers()) throw UnsupportedOperation("GCD-polynomials require ZZ coefficients");
    if (f.is_zero() || g.is_zero()) throw PreconditionError("GCD-polynomial of a zero polynomial");
    return to_poly(f.context(), g_poly_work(to_work(f, order), to_work(g, order), order));
}

GroebnerBasis groebner_basis(const ContextPtr& ctx, std::span<const Polynomial> gens, const MonomialOrder& order) {
    Flavor flavor = flavor_for(ctx->domain());
    if (order.num_vars() != ctx->num_vars()) throw ContextMismatch("monomial order arity");
    bool field = flavor == Flavor::Field;
    Engine engine(order, field);
    std::vector<Polynomial> inputs;
    std::set<std::vector<std::pair<Monomial, mpq_class>>> seen;
    for (const auto& g : gens) {
        if (!(*g.context() == *ctx)) throw ContextMismatch(g.context()->to_string() + " vs " + ctx->to_string());
        inputs.push_back(g);
        if (g.is_zero()) continue;
        WPoly w = to_work(g, order);
        normalize_unit(w, field);
        std::vector<std::pair<Monomial, mpq_class>> sig;
        for (const auto& t : w) sig.emplace_back(t.mono, t.coeff);
        if (!seen.insert(std::move(sig)).second) continue;
        for (const auto& t : w) check_degree(t.mono);
        engine.add(std::move(w));
    }
    engine.run();
    std::vector<Polynomial> elements;
    for (auto& w : engine.reduced_basis()) elements.push_back(to_poly(ctx, std::move(w)));
    GroebnerBasis gb(ctx, order, std::move(elements), flavor);
    BasisObserver obs;
    {
        std::lock_guard lock(observer_mutex());
        obs = observer_slot();
    }
    if (obs) obs(inputs, gb);
    return gb;
}

bool contains(const GroebnerBasis& gb, const Polynomial& f) {
    if (!(*f.context() == *gb.context())) throw ContextMismatch(f.context()->to_string() + " vs " + gb.context()->to_string());
    return reduce(f, gb.elements(), gb.order()).is_zero();
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
    const auto& els = gb.elements();
    bool field = gb.flavor() == Flavor::Field;
    std::vector<WPoly> work;
    for (const auto& e : els) work.push_back(to_work(e, gb.order()));
    for (std::size_t i = 0; i < work.size(); ++i)
        for (std::size_t j = i + 1; j < work.size(); ++j) {
            if (!normal_form(s_poly_work(work[i], work[j], field, gb.order()), work, field, gb.order()).empty())
                return false;
            if (!field && !normal_form(g_poly_work(work[i], work[j], gb.order()), work, field, gb.order()).empty())
                return false;
        }
    return true;
}

ScopedBasisObserver::ScopedBasisObserver(BasisObserver obs) {
    std::lock_guard lock(observer_mutex());
    previous_ = std::exchange(observer_slot(), std::move(obs));
}

ScopedBasisObserver::~ScopedBasisObserver() {
    std::lock_guard lock(observer_mutex());
    observer_slot() = std::move(previous_);
}

}  // namespace powerstab
