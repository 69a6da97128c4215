#include "powerstab/arith.hpp"

#include <cctype>

#include "powerstab/errors.hpp"
#include "powerstab/limits.hpp"

namespace powerstab {

Limits& limits() {
    static Limits instance;
    return instance;
}

CoefficientDomain CoefficientDomain::modular(std::uint64_t n) {
    if (n < 2) throw PreconditionError("ZZ/n requires n >= 2");
    return CoefficientDomain(Kind::Modular, n);
}

void CoefficientDomain::canonicalize(mpq_class& v) const {
    switch (kind_) {
        case Kind::Rationals:
            v.canonicalize();
            return;
        case Kind::Integers:
            if (v.get_den() != 1) throw PreconditionError("non-integer value " + v.get_str() + " in ZZ");
            return;
        case Kind::Modular: {
            if (v.get_den() != 1) throw PreconditionError("non-integer value " + v.get_str() + " in " + to_string());
            mpz_class n(std::to_string(modulus_));
            mpz_class r;
            mpz_mod(r.get_mpz_t(), v.get_num_mpz_t(), n.get_mpz_t());
            v = mpq_class(r);
            return;
        }
    }
}

std::string CoefficientDomain::to_string() const {
    switch (kind_) {
        case Kind::Integers:
            return "ZZ";
        case Kind::Rationals:
            return "QQ";
        case Kind::Modular:
            return "ZZ/" + std::to_string(modulus_);
    }
    return "?";
}

Coefficient::Coefficient(CoefficientDomain d, mpq_class v) : domain_(d), value_(std::move(v)) {
    domain_.canonicalize(value_);
}

namespace {

void require_same(const Coefficient& a, const Coefficient& b) {
    if (!(a.domain() == b.domain()))
        throw ContextMismatch(a.domain().to_string() + " vs " + b.domain().to_string());
}

}  // namespace

Coefficient Coefficient::operator-() const { return Coefficient(domain_, -value_); }

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
    require_same(a, b);
    return Coefficient(a.domain_, a.value_ + b.value_);
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) {
    require_same(a, b);
    return Coefficient(a.domain_, a.value_ - b.value_);
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    require_same(a, b);
    return Coefficient(a.domain_, a.value_ * b.value_);
}

bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.domain_ == b.domain_ && a.value_ == b.value_;
}

void euclid_divide(const mpz_class& a, const mpz_class& b, mpz_class& q, mpz_class& r) {
    if (sgn(b) == 0) throw DivisionByZero();
    mpz_class abs_b = abs(b);
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), abs_b.get_mpz_t());
    mpz_class diff = a - r;
    mpz_divexact(q.get_mpz_t(), diff.get_mpz_t(), b.get_mpz_t());
}

void gcd_bezout(const mpz_class& a, const mpz_class& b, mpz_class& g, mpz_class& u, mpz_class& v) {
    if (sgn(a) == 0 && sgn(b) == 0) throw PreconditionError("gcd_bezout(0, 0) is undefined");
    // Iterative extended Euclid on |a|, |b|; same cofactors as the textbook recursion.
    mpz_class r0 = abs(a), r1 = abs(b);
    mpz_class s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (sgn(r1) != 0) {
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
        r0 = r1;
        r1 = r;
        mpz_class s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        mpz_class t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    g = r0;
    u = sgn(a) < 0 ? mpz_class(-s0) : s0;
    v = sgn(b) < 0 ? mpz_class(-t0) : t0;

    // Minimal-|u| normalisation: shift along the solution line (u + k*b/g, v - k*a/g).
    mpz_class step_u = abs(mpz_class(b / g));
    if (sgn(step_u) == 0) {
        return;
    }
    mpz_class step_v = a / g;
    if (sgn(b) < 0) step_v = -step_v;
    // want u in (-step/2, step/2]
    mpz_class k;
    mpz_class r;
    mpz_class shifted = u;
    mpz_fdiv_r(r.get_mpz_t(), shifted.get_mpz_t(), step_u.get_mpz_t());  // r in [0, step)
    if (2 * r > step_u) r -= step_u;
    mpz_class delta = (r - u) / step_u;  // exact
    u = r;
    v -= delta * step_v;
}

std::pair<Coefficient, Coefficient> euclid_divide(const Coefficient& a, const Coefficient& b) {
    require_same(a, b);
    const auto& d = a.domain();
    if (b.is_zero()) throw DivisionByZero();
    if (d.is_modular()) throw UnsupportedOperation("Euclidean division is not supported over " + d.to_string());
    if (d.is_rationals()) return {Coefficient(d, a.value() / b.value()), Coefficient(d, 0)};
    mpz_class q, r;
    euclid_divide(a.value().get_num(), b.value().get_num(), q, r);
    return {Coefficient(d, mpq_class(q)), Coefficient(d, mpq_class(r))};
}

std::tuple<Coefficient, Coefficient, Coefficient> gcd_bezout(const Coefficient& a, const Coefficient& b) {
    require_same(a, b);
    const auto& d = a.domain();
    if (!d.is_integers()) throw UnsupportedOperation("gcd_bezout requires ZZ, got " + d.to_string());
    mpz_class g, u, v;
    gcd_bezout(a.value().get_num(), b.value().get_num(), g, u, v);
    return {Coefficient(d, mpq_class(g)), Coefficient(d, mpq_class(u)), Coefficient(d, mpq_class(v))};
}

Coefficient parse_coefficient(std::string_view text, const CoefficientDomain& domain) {
    auto valid_int = [](std::string_view s) {
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    std::string s(text);
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("malformed number '" + s + "'", 1, 1);
    mpz_class dn(den);
    if (sgn(dn) == 0) throw DivisionByZero();
    mpq_class v(mpz_class(num), dn);
    v.canonicalize();
    if (!domain.is_rationals() && v.get_den() != 1)
        throw ParseError("fraction '" + s + "' is not an element of " + domain.to_string(), 1, 1);
    return Coefficient(domain, v);
}

}  // namespace powerstab
