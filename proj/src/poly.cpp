#include "powerstab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "powerstab/errors.hpp"
#include "powerstab/limits.hpp"

namespace powerstab {

// ---------------------------------------------------------------- RingContext

RingContext::RingContext(CoefficientDomain domain, std::vector<std::string> variables)
    : domain_(domain), variables_(std::move(variables)) {
    std::set<std::string> seen;
    for (const auto& v : variables_) {
        if (v.empty()) throw PreconditionError("empty variable name");
        if (!seen.insert(v).second) throw PreconditionError("duplicate variable '" + v + "'");
    }
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i] == name) return i;
    return std::nullopt;
}

std::size_t RingContext::require_index(std::string_view name) const {
    auto i = index_of(name);
    if (!i) throw Error("unknown variable '" + std::string(name) + "' in " + to_string());
    return *i;
}

std::shared_ptr<const RingContext> RingContext::with_auxiliary(const std::vector<std::string>& names) const {
    std::vector<std::string> vars;
    for (const auto& n : names) {
        if (!n.starts_with('_')) throw PreconditionError("auxiliary names must start with '_': " + n);
        vars.push_back(n);
    }
    vars.insert(vars.end(), variables_.begin(), variables_.end());
    return std::make_shared<const RingContext>(domain_, std::move(vars));
}

bool RingContext::is_user_identifier(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    return std::all_of(name.begin(), name.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string RingContext::to_string() const {
    std::string s = domain_.to_string() + "[";
    for (std::size_t i = 0; i < variables_.size(); ++i) s += (i ? "," : "") + variables_[i];
    return s + "]";
}

ContextPtr make_context(CoefficientDomain domain, std::vector<std::string> variables) {
    for (const auto& v : variables)
        if (!RingContext::is_user_identifier(v)) throw PreconditionError("invalid variable name '" + v + "'");
    return std::make_shared<const RingContext>(domain, std::move(variables));
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
    r.degree_ = degree_ - other.degree_;
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
    std::vector<std::uint32_t> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
    return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] && other.exps_[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    r.degree_ = a.degree_ + b.degree_;
    return r;
}

// ---------------------------------------------------------------- MonomialOrder

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
    std::vector<std::size_t> all(nvars);
    std::iota(all.begin(), all.end(), 0);
    return MonomialOrder(nvars, {Block{all, Kind::Lex}});
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
    std::vector<std::size_t> all(nvars);
    std::iota(all.begin(), all.end(), 0);
    return MonomialOrder(nvars, {Block{all, Kind::GrevLex}});
}

MonomialOrder MonomialOrder::block(std::size_t nvars, std::vector<Block> blocks) {
    std::vector<int> hit(nvars, 0);
    std::vector<Block> kept;
    for (auto& b : blocks) {
        for (auto v : b.vars) {
            if (v >= nvars || hit[v]++) throw PreconditionError("block order does not partition the variables");
        }
        if (!b.vars.empty()) kept.push_back(std::move(b));
    }
    if (std::any_of(hit.begin(), hit.end(), [](int h) { return h == 0; }))
        throw PreconditionError("block order does not cover every variable");
    return MonomialOrder(nvars, std::move(kept));
}

MonomialOrder MonomialOrder::elimination(std::size_t nvars, const std::vector<std::size_t>& eliminate, Kind rest) {
    std::vector<std::size_t> front(eliminate.begin(), eliminate.end());
    std::sort(front.begin(), front.end());
    std::vector<std::size_t> back;
    for (std::size_t v = 0; v < nvars; ++v)
        if (!std::binary_search(front.begin(), front.end(), v)) back.push_back(v);
    return block(nvars, {Block{front, Kind::GrevLex}, Block{back, rest}});
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    for (const auto& blk : blocks_) {
        if (blk.kind == Kind::Lex) {
            for (auto v : blk.vars)
                if (a[v] != b[v]) return a[v] <=> b[v];
        } else {
            std::uint64_t da = 0, db = 0;
            for (auto v : blk.vars) {
                da += a[v];
                db += b[v];
            }
            if (da != db) return da <=> db;
            for (auto it = blk.vars.rbegin(); it != blk.vars.rend(); ++it)
                if (a[*it] != b[*it]) return b[*it] <=> a[*it];
        }
    }
    return std::strong_ordering::equal;
}

std::string MonomialOrder::to_string() const {
    auto kind = [](Kind k) { return k == Kind::Lex ? "lex" : "grevlex"; };
    if (blocks_.size() <= 1) return blocks_.empty() ? "lex" : kind(blocks_[0].kind);
    std::string s = "block(";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        s += i ? ";" : "";
        s += kind(blocks_[i].kind);
        s += "{";
        for (std::size_t j = 0; j < blocks_[i].vars.size(); ++j)
            s += (j ? "," : "") + std::to_string(blocks_[i].vars[j]);
        s += "}";
    }
    return s + ")";
}

MonomialOrder default_order(const RingContext& ctx) {
    return ctx.domain().is_rationals() ? MonomialOrder::grevlex(ctx.num_vars()) : MonomialOrder::lex(ctx.num_vars());
}

// ---------------------------------------------------------------- Polynomial

namespace {

void check_degree(const Monomial& m) {
    if (m.total_degree() > limits().max_total_degree)
        throw ResourceLimit("total degree " + std::to_string(m.total_degree()) + " exceeds the guard of " +
                            std::to_string(limits().max_total_degree.load()));
}

void check_terms(std::size_t n) {
    if (n > limits().max_terms)
        throw ResourceLimit("term count " + std::to_string(n) + " exceeds the guard of " +
                            std::to_string(limits().max_terms.load()));
}

}  // namespace

Polynomial::Polynomial(ContextPtr ctx, std::vector<Term> terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) {
    for (const auto& t : terms_)
        if (t.mono.size() != ctx_->num_vars()) throw PreconditionError("monomial length does not match the context");
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
    // merge duplicates
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    terms_ = std::move(merged);
    canonicalize();
}

void Polynomial::canonicalize() {
    const auto& dom = ctx_->domain();
    if (!dom.is_rationals())
        for (auto& t : terms_) dom.canonicalize(t.coeff);
    std::erase_if(terms_, [](const Term& t) { return sgn(t.coeff) == 0; });
}

Polynomial Polynomial::constant(ContextPtr ctx, const mpq_class& c) {
    std::size_t n = ctx->num_vars();
    return Polynomial(std::move(ctx), {Term{Monomial(n), c}});
}

Polynomial Polynomial::variable(ContextPtr ctx, std::string_view name, std::uint32_t power) {
    std::vector<std::uint32_t> e(ctx->num_vars(), 0);
    e[ctx->require_index(name)] = power;
    return Polynomial(std::move(ctx), {Term{Monomial(std::move(e)), mpq_class(1)}});
}

Polynomial Polynomial::monomial(ContextPtr ctx, Monomial m, const mpq_class& c) {
    return Polynomial(std::move(ctx), {Term{std::move(m), c}});
}

mpq_class Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coeff;
    return 0;
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

bool Polynomial::involves(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono[var] != 0; });
}

bool same_context(const Polynomial& a, const Polynomial& b) {
    return a.context() == b.context() || *a.context() == *b.context();
}

void require_same_context(const Polynomial& a, const Polynomial& b) {
    if (!same_context(a, b)) throw ContextMismatch(a.context()->to_string() + " vs " + b.context()->to_string());
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    r.canonicalize();
    return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].mono < a[i].mono) {
            out.push_back(Term{b[j].mono, sign > 0 ? b[j].coeff : mpq_class(-b[j].coeff)});
            ++j;
        } else {
            mpq_class c = sign > 0 ? mpq_class(a[i].coeff + b[j].coeff) : mpq_class(a[i].coeff - b[j].coeff);
            if (sgn(c) != 0) out.push_back(Term{a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& q) {
    require_same_context(*this, q);
    terms_ = merge_terms(terms_, q.terms_, +1);
    canonicalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
    require_same_context(*this, q);
    terms_ = merge_terms(terms_, q.terms_, -1);
    canonicalize();
    return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    require_same_context(p, q);
    check_terms(p.terms_.size() * q.terms_.size());
    std::vector<Term> prod;
    prod.reserve(p.terms_.size() * q.terms_.size());
    for (const auto& a : p.terms_)
        for (const auto& b : q.terms_) {
            Monomial m = a.mono * b.mono;
            check_degree(m);
            prod.push_back(Term{std::move(m), a.coeff * b.coeff});
        }
    Polynomial r(p.ctx_, std::move(prod));
    check_terms(r.terms_.size());
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) { return *this = *this * q; }

Polynomial Polynomial::scaled(const mpq_class& c) const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff *= c;
    r.canonicalize();
    return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial result = constant(ctx_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

std::pair<Monomial, Coefficient> Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
    if (order.num_vars() != ctx_->num_vars()) throw ContextMismatch("monomial order arity");
    const Term* best = &terms_[0];
    for (const auto& t : terms_)
        if (order.less(best->mono, t.mono)) best = &t;
    return {best->mono, Coefficient(ctx_->domain(), best->coeff)};
}

Polynomial Polynomial::embed(const ContextPtr& target) const {
    if (!(target->domain() == ctx_->domain())) throw ContextMismatch("coefficient domains differ");
    std::vector<std::size_t> map(ctx_->num_vars());
    for (std::size_t i = 0; i < map.size(); ++i) {
        auto j = target->index_of(ctx_->variables()[i]);
        if (!j) {
            if (involves(i))
                throw ContextMismatch("variable '" + ctx_->variables()[i] + "' missing from " + target->to_string());
            map[i] = SIZE_MAX;
        } else {
            map[i] = *j;
        }
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<std::uint32_t> e(target->num_vars(), 0);
        for (std::size_t i = 0; i < map.size(); ++i)
            if (map[i] != SIZE_MAX) e[map[i]] = t.mono[i];
        out.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial(target, std::move(out));
}

std::string format_monomial(const Monomial& m, const RingContext& ctx) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!s.empty()) s += "*";
        s += ctx.variables()[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::string Polynomial::to_string(const MonomialOrder& order) const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> sorted;
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(), [&](const Term* a, const Term* b) { return order.less(b->mono, a->mono); });
    std::string s;
    bool first = true;
    for (const Term* t : sorted) {
        bool neg = sgn(t->coeff) < 0;
        mpq_class mag = abs(t->coeff);
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        if (t->mono.is_one()) {
            s += mag.get_str();
        } else {
            if (mag != 1) s += mag.get_str() + "*";
            s += format_monomial(t->mono, *ctx_);
        }
    }
    return s;
}

std::string Polynomial::to_string() const { return to_string(default_order(*ctx_)); }

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_context(a, b)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithOp op) {
    switch (op) {
        case ArithOp::Add:
            return p + q;
        case ArithOp::Sub:
            return p - q;
        case ArithOp::Mul:
            return p * q;
    }
    return p;
}

Coefficient content(const Polynomial& p) {
    const auto& dom = p.context()->domain();
    if (!dom.is_integers()) throw UnsupportedOperation("content requires integer coefficients");
    if (p.is_zero()) throw PreconditionError("content of the zero polynomial");
    mpz_class g = 0;
    for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    return Coefficient(dom, mpq_class(g));
}

Polynomial exact_divide(const Polynomial& g, const Polynomial& f) {
    require_same_context(g, f);
    if (f.is_zero()) throw DivisionByZero();
    const auto& ctx = g.context();
    auto order = MonomialOrder::lex(ctx->num_vars());
    auto [lm_f, lc_f] = f.leading_term(order);
    bool integral = !ctx->domain().is_rationals();
    Polynomial q(ctx), r = g;
    while (!r.is_zero()) {
        auto [lm_r, lc_r] = r.leading_term(order);
        if (!lm_f.divides(lm_r)) throw Error("exact division failed: " + f.to_string() + " does not divide " + g.to_string());
        mpq_class c = lc_r.value() / lc_f.value();
        if (integral && c.get_den() != 1)
            throw Error("exact division failed: " + f.to_string() + " does not divide " + g.to_string());
        Polynomial t = Polynomial::monomial(ctx, lm_r.quotient(lm_f), c);
        q += t;
        r -= t * f;
    }
    return q;
}

// ---------------------------------------------------------------- parser

namespace {

class PolyParser {
  public:
    PolyParser(std::string_view text, const ContextPtr& ctx) : s_(text), ctx_(ctx) {}

    Polynomial parse() {
        skip_ws();
        if (pos_ == s_.size()) fail("empty polynomial");
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial acc(ctx_);
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Polynomial t = term();
        acc = neg ? -t : t;
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc *= factor();
        skip_ws();
        if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '('))
            fail("juxtaposition is not allowed; use '*'");
        return acc;
    }

    Polynomial factor() {
        Polynomial base = primary();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a nonnegative integer exponent");
            unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
            if (e > limits().max_total_degree) throw ResourceLimit("exponent exceeds the degree guard");
            base = base.pow(static_cast<std::uint32_t>(e));
        }
        return base;
    }

    Polynomial primary() {
        skip_ws();
        if (pos_ == s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                std::size_t dstart = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (dstart == pos_) fail("expected a denominator");
            }
            if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                fail("juxtaposition is not allowed; use '*'");
            std::string lit(s_.substr(start, pos_ - start));
            Coefficient value = [&] {
                try {
                    return parse_coefficient(lit, ctx_->domain());
                } catch (const ParseError& e) {
                    throw ParseError(e.message(), 1, start + 1);
                }
            }();
            return Polynomial::constant(ctx_, value.value());
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (!ctx_->index_of(name)) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return Polynomial::variable(ctx_, name);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    const ContextPtr& ctx_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx) { return PolyParser(text, ctx).parse(); }

}  // namespace powerstab
