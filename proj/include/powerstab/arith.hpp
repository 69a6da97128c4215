#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>

#include <gmpxx.h>

namespace powerstab {

/// One of the exact coefficient domains: ZZ, QQ or ZZ/n.
class CoefficientDomain {
  public:
    enum class Kind { Integers, Rationals, Modular };

    static CoefficientDomain integers() { return CoefficientDomain(Kind::Integers, 0); }
    static CoefficientDomain rationals() { return CoefficientDomain(Kind::Rationals, 0); }
    /// Throws PreconditionError unless n >= 2.
    static CoefficientDomain modular(std::uint64_t n);

    Kind kind() const noexcept { return kind_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    bool is_integers() const noexcept { return kind_ == Kind::Integers; }
    bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
    bool is_modular() const noexcept { return kind_ == Kind::Modular; }
    bool is_field() const noexcept { return kind_ == Kind::Rationals; }

    /// Brings a value into canonical form for this domain (residue in [0, n)
    /// for ZZ/n). Throws if a non-integer is offered to ZZ or ZZ/n.
    void canonicalize(mpq_class& v) const;

    std::string to_string() const;

    friend bool operator==(const CoefficientDomain&, const CoefficientDomain&) = default;

  private:
    CoefficientDomain(Kind k, std::uint64_t n) : kind_(k), modulus_(n) {}

    Kind kind_;
    std::uint64_t modulus_;
};

/// An exact number tagged with its domain.
class Coefficient {
  public:
    Coefficient(CoefficientDomain d, mpq_class v);
    Coefficient(CoefficientDomain d, long v) : Coefficient(d, mpq_class(v)) {}

    const CoefficientDomain& domain() const noexcept { return domain_; }
    const mpq_class& value() const noexcept { return value_; }
    bool is_zero() const { return sgn(value_) == 0; }

    Coefficient operator-() const;
    friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    friend bool operator==(const Coefficient& a, const Coefficient& b);

    std::string to_string() const { return value_.get_str(); }

  private:
    CoefficientDomain domain_;
    mpq_class value_;
};

/// a = q*b + r with 0 <= r < |b| over ZZ; r = 0 over QQ.
std::pair<Coefficient, Coefficient> euclid_divide(const Coefficient& a, const Coefficient& b);

/// g = gcd(a, b) >= 0 and g = u*a + v*b. Integers only; (0, 0) is rejected.
/// u is normalised into (-|b/g|/2, |b/g|/2], so the triple is deterministic.
std::tuple<Coefficient, Coefficient, Coefficient> gcd_bezout(const Coefficient& a,
                                                             const Coefficient& b);

/// Raw-integer versions used by the polynomial kernels.
void euclid_divide(const mpz_class& a, const mpz_class& b, mpz_class& q, mpz_class& r);
void gcd_bezout(const mpz_class& a, const mpz_class& b, mpz_class& g, mpz_class& u, mpz_class& v);

/// Parses "-7", "3/4" (rationals are reduced). Integer-like domains reject fractions.
Coefficient parse_coefficient(std::string_view text, const CoefficientDomain& domain);

}  // namespace powerstab
