#pragma once

#include "produal/exact/numbers.hpp"

#include <string>
#include <vector>

namespace produal {

/// Polynomial over Z in the index variable, coefficients low -> high with no
/// trailing zeros.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Int> coeffs);
    static Poly constant(Int c);
    static Poly x();

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }
    const Int& leading() const;

    Int eval(const Int& x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Int& c) const;
    /// p(x + a)
    Poly shifted(const Int& a) const;

    /// gcd of coefficients, >= 0 (0 for the zero polynomial).
    Int content() const;
    /// this / content, keeping the leading sign; zero stays zero.
    Poly primitive_part() const;

    bool operator==(const Poly& o) const = default;

    /// Display form, descending powers: "i^2+2*i-3".
    std::string str() const;

  private:
    std::vector<Int> c_;
    void trim();
};

/// Primitive gcd with positive leading coefficient (primitive PRS).
Poly poly_gcd(Poly a, Poly b);

/// Natural-number roots of a nonzero polynomial, ascending.  Throws TooLarge
/// when the constant term cannot be factored far enough to certify the list.
std::vector<Int> natural_roots(const Poly& p);

/// Exact quotient a / b; throws if b does not divide a over Q or the quotient
/// is not integral.
Poly poly_div_exact(const Poly& a, const Poly& b);

/// Polynomial over Q, used by the canonicalization machinery.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs);
    explicit QPoly(const Poly& p);
    static QPoly constant(Rat c);
    static QPoly x();

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    QPoly scaled(const Rat& c) const;
    /// p(inner(x)) by Horner.
    QPoly substitute(const QPoly& inner) const;
    /// p(x + a)
    QPoly shifted(const Rat& a) const;

    /// (quotient, remainder) with deg remainder < deg divisor.
    std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;

    /// this == p / den with p integral and den >= 1 minimal.
    Poly clear_denominators(Int& den) const;

    bool operator==(const QPoly& o) const = default;

  private:
    std::vector<Rat> c_;
    void trim();
};

/// C(k, e) = k(k-1)...(k-e+1)/e! as a QPoly in k.
QPoly binomial_poly(unsigned e);

/// Coordinates of p in the binomial basis C(k, e): p = sum coords[e]*C(k, e).
std::vector<Rat> binomial_coords(const QPoly& p);

/// p takes integer values on all (large) integers iff all binomial
/// coordinates are integers.
bool is_integer_valued(const QPoly& p);

}  // namespace produal
