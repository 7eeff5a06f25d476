#pragma once

#include "produal/seq/polynomial.hpp"

#include <string>
#include <utility>

namespace produal {

/// Quotient of integer polynomials, kept reduced: primitive parts coprime,
/// integer contents coprime, denominator with positive leading coefficient.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Poly::constant(1)) {}
    RationalFunction(Poly num, Poly den);
    static RationalFunction from_poly(Poly p) { return {std::move(p), Poly::constant(1)}; }
    static RationalFunction from_rat(const Rat& q);
    static RationalFunction from_qpoly(const QPoly& p);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /// Denominator is a constant (so the value denominators are bounded).
    bool has_constant_denominator() const { return den_.degree() == 0; }
    /// The constant denominator; only valid when has_constant_denominator().
    Int constant_denominator() const { return den_.coeff(0); }

    Rat value(const Int& i) const;

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction scaled(const Rat& c) const;
    RationalFunction shifted(const Int& a) const;

    /// num/den = polypart + proper with deg(proper.num) < deg(proper.den).
    std::pair<QPoly, RationalFunction> proper_split() const;

    /// Numerator over constant denominator, as a QPoly.  Requires
    /// has_constant_denominator().
    QPoly as_qpoly() const;

    /// Throws ZeroDenominator if den has a root at a natural number.
    void check_denominator_roots() const;

    bool operator==(const RationalFunction& o) const = default;

    std::string str() const;

  private:
    Poly num_, den_;
    void reduce();
};

}  // namespace produal
