#include "produal/seq/polynomial.hpp"

#include "produal/errors.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace produal {

// ---- Poly ------------------------------------------------------------------

Poly::Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(Int c) {
    Poly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

Poly Poly::x() { return Poly({Int(0), Int(1)}); }

const Int& Poly::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

Int Poly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) + o.coeff(k);
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Int> r = c_;
    for (Int& v : r) v = -v;
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1);
    for (std::size_t a = 0; a < c_.size(); ++a)
        for (std::size_t b = 0; b < o.c_.size(); ++b) r[a + b] += c_[a] * o.c_[b];
    return Poly(std::move(r));
}

Poly Poly::scaled(const Int& c) const {
    std::vector<Int> r = c_;
    for (Int& v : r) v *= c;
    return Poly(std::move(r));
}

Poly Poly::shifted(const Int& a) const {
    // Horner in (x + a)
    Poly acc;
    Poly lin({a, Int(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + Poly::constant(*it);
    return acc;
}

Int Poly::content() const {
    Int g = 0;
    for (const Int& v : c_) g = gcd(g, v);
    return g < 0 ? Int(-g) : g;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return Poly();
    Int c = content();
    std::vector<Int> r = c_;
    for (Int& v : r) v /= c;
    return Poly(std::move(r));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        const Int& v = c_[e];
        if (v == 0) continue;
        Int av = v < 0 ? Int(-v) : v;
        if (first) {
            if (v < 0) out << "-";
            first = false;
        } else {
            out << (v < 0 ? "-" : "+");
        }
        bool unit = (av == 1) && e > 0;
        if (!unit) out << av.str();
        if (e > 0) {
            if (!unit) out << "*";
            out << "i";
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

namespace {

// pseudo-remainder of a by b (deg a >= deg b, b nonzero)
Poly pseudo_rem(Poly a, const Poly& b) {
    Int lb = b.leading();
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        Int la = a.leading();
        std::vector<Int> m(shift + 1);
        m[shift] = la;
        a = a.scaled(lb) - b * Poly(std::move(m));
    }
    return a;
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        Poly r = pseudo_rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.leading() < 0) a = -a;
    return a;
}

std::vector<Int> natural_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    std::vector<Int> roots;
    std::vector<Int> c = p.coeffs();
    std::size_t shift = 0;
    while (c[shift] == 0) ++shift;  // factor out powers of the variable
    if (shift > 0) roots.push_back(0);
    Poly q(std::vector<Int>(c.begin() + shift, c.end()));
    if (q.degree() >= 1) {
        Int bound = 0;
        for (const Int& v : q.coeffs()) {
            Int av = v < 0 ? Int(-v) : v;
            if (av > bound) bound = av;
        }
        Int lead = q.leading() < 0 ? Int(-q.leading()) : q.leading();
        bound = bound / lead + 1;  // Cauchy bound on real roots
        Int a = q.coeff(0) < 0 ? Int(-q.coeff(0)) : q.coeff(0);
        std::vector<Int> divisors{Int(1)};
        for (Int f = 2; f * f <= a && f <= 1000000; ++f) {
            if (a % f != 0) continue;
            std::vector<Int> powers;
            Int w = 1;
            while (a % f == 0) {
                a /= f;
                w *= f;
                powers.push_back(w);
            }
            std::size_t base = divisors.size();
            for (std::size_t k = 0; k < base; ++k)
                for (const Int& g : powers) divisors.push_back(divisors[k] * g);
        }
        if (a > 1) {
            // cofactor with all prime factors above 10^6; its proper divisors
            // only matter when the root bound reaches that high
            if (bound > 1000000 && !boost::multiprecision::miller_rabin_test(a, 25))
                throw TooLarge("cannot certify the integer roots of " + q.str());
            std::size_t base = divisors.size();
            for (std::size_t k = 0; k < base; ++k) divisors.push_back(divisors[k] * a);
        }
        for (const Int& d : divisors)
            if (d <= bound && q.eval(d) == 0) roots.push_back(d);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = QPoly(a).divmod(QPoly(b));
    if (!r.is_zero()) throw std::logic_error("poly_div_exact: not divisible");
    Int den;
    Poly qi = q.clear_denominators(den);
    if (den != 1) throw std::logic_error("poly_div_exact: non-integral quotient");
    return qi;
}

// ---- QPoly -----------------------------------------------------------------

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(const Poly& p) {
    c_.reserve(p.coeffs().size());
    for (const Int& v : p.coeffs()) c_.emplace_back(v);
    trim();
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::constant(Rat c) {
    QPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

QPoly QPoly::x() { return QPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

Rat QPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) + o.coeff(k);
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
    std::vector<Rat> r = c_;
    for (Rat& v : r) v = -v;
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1);
    for (std::size_t a = 0; a < c_.size(); ++a)
        for (std::size_t b = 0; b < o.c_.size(); ++b) r[a + b] += c_[a] * o.c_[b];
    return QPoly(std::move(r));
}

QPoly QPoly::scaled(const Rat& c) const {
    std::vector<Rat> r = c_;
    for (Rat& v : r) v *= c;
    return QPoly(std::move(r));
}

QPoly QPoly::substitute(const QPoly& inner) const {
    QPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * inner + QPoly::constant(*it);
    return acc;
}

QPoly QPoly::shifted(const Rat& a) const {
    return substitute(QPoly(std::vector<Rat>{a, Rat(1)}));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    QPoly rem = *this;
    std::vector<Rat> q(std::max<int>(0, degree() - divisor.degree() + 1));
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        Rat f = rem.c_.back() / divisor.c_.back();
        q[shift] = f;
        std::vector<Rat> m(shift + 1);
        m[shift] = f;
        rem = rem - divisor * QPoly(std::move(m));
    }
    return {QPoly(std::move(q)), rem};
}

Poly QPoly::clear_denominators(Int& den) const {
    den = 1;
    for (const Rat& v : c_) den = lcm(den, denominator(v));
    std::vector<Int> r(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k)
        r[k] = numerator(c_[k]) * (den / denominator(c_[k]));
    return Poly(std::move(r));
}

QPoly binomial_poly(unsigned e) {
    QPoly p = QPoly::constant(Rat(1));
    Rat fact(1);
    for (unsigned l = 0; l < e; ++l) {
        p = p * QPoly(std::vector<Rat>{Rat(-(long long)l), Rat(1)});
        fact *= (l + 1);
    }
    return p.scaled(Rat(1) / fact);
}

std::vector<Rat> binomial_coords(const QPoly& p) {
    int d = p.degree();
    if (d < 0) return {};
    std::vector<Rat> coords(d + 1);
    QPoly rest = p;
    for (int e = d; e >= 0; --e) {
        // C(k, e) has leading coefficient 1/e!
        Rat fact(1);
        for (int l = 2; l <= e; ++l) fact *= l;
        Rat g = rest.coeff(e) * fact;
        coords[e] = g;
        if (g != 0) rest = rest - binomial_poly(e).scaled(g);
    }
    return coords;
}

bool is_integer_valued(const QPoly& p) {
    for (const Rat& g : binomial_coords(p))
        if (!is_integer(g)) return false;
    return true;
}

}  // namespace produal
