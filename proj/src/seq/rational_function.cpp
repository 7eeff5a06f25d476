#include "produal/seq/rational_function.hpp"

#include "produal/errors.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <stdexcept>

namespace produal {

RationalFunction::RationalFunction(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
    reduce();
}

RationalFunction RationalFunction::from_rat(const Rat& q) {
    return {Poly::constant(numerator(q)), Poly::constant(denominator(q))};
}

RationalFunction RationalFunction::from_qpoly(const QPoly& p) {
    Int den;
    Poly num = p.clear_denominators(den);
    return {std::move(num), Poly::constant(den)};
}

void RationalFunction::reduce() {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator polynomial");
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Int cn = num_.content(), cd = den_.content();
    Poly pn = num_.primitive_part(), pd = den_.primitive_part();
    Poly g = poly_gcd(pn, pd);
    if (g.degree() > 0 || g.coeff(0) != 1) {
        pn = poly_div_exact(pn, g);
        pd = poly_div_exact(pd, g);
    }
    Int c = gcd(cn, cd);
    num_ = pn.scaled(cn / c);
    den_ = pd.scaled(cd / c);
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Rat RationalFunction::value(const Int& i) const {
    Int d = den_.eval(i);
    if (d == 0) throw ZeroDenominator("denominator vanishes at index " + i.str());
    return Rat(num_.eval(i), d);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::scaled(const Rat& c) const {
    if (c == 0) return {};
    return {num_.scaled(numerator(c)), den_.scaled(denominator(c))};
}

RationalFunction RationalFunction::shifted(const Int& a) const {
    return {num_.shifted(a), den_.shifted(a)};
}

std::pair<QPoly, RationalFunction> RationalFunction::proper_split() const {
    if (den_.degree() == 0) return {as_qpoly(), RationalFunction()};
    auto [q, r] = QPoly(num_).divmod(QPoly(den_));
    Int c;
    Poly rnum = r.clear_denominators(c);
    return {q, RationalFunction(rnum, den_.scaled(c))};
}

QPoly RationalFunction::as_qpoly() const {
    if (den_.degree() != 0) throw std::logic_error("non-constant denominator");
    return QPoly(num_).scaled(Rat(1, den_.coeff(0)));
}

void RationalFunction::check_denominator_roots() const {
    if (den_.degree() == 0) return;
    std::vector<Int> roots = natural_roots(den_);
    if (!roots.empty())
        throw ZeroDenominator("denominator " + den_.str() + " vanishes at " +
                              roots.front().str());
}

std::string RationalFunction::str() const {
    if (den_.degree() == 0 && den_.coeff(0) == 1) return num_.str();
    std::string n = num_.str(), d = den_.str();
    if (num_.degree() > 0) n = "(" + n + ")";
    if (den_.degree() > 0) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace produal
