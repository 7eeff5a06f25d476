#include "produal/exact/torus.hpp"

#include "produal/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace produal {

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

Int parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    return Int(s);
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rat(num, den);
}

Rat torus_window(const Rat& r) {
    // representative in (-1/2, 1/2]: r - ceil(r - 1/2)
    return r - Rat(rat_ceil(r - Rat(1, 2)));
}

void TorusValue::normalize() {
    rational_ = torus_window(rational_);
    for (auto it = irrational_.begin(); it != irrational_.end();) {
        if (it->second == 0)
            it = irrational_.erase(it);
        else
            ++it;
    }
}

TorusValue TorusValue::from_rational(const Rat& r) {
    TorusValue v;
    v.rational_ = r;
    v.normalize();
    return v;
}

TorusValue TorusValue::symbol_multiple(int symbol_id, const Rat& coeff) {
    TorusValue v;
    if (coeff != 0) v.irrational_[symbol_id] = coeff;
    return v;
}

TorusValue TorusValue::operator+(const TorusValue& o) const {
    TorusValue v;
    v.rational_ = rational_ + o.rational_;
    v.irrational_ = irrational_;
    for (const auto& [id, c] : o.irrational_) v.irrational_[id] += c;
    v.normalize();
    return v;
}

TorusValue TorusValue::operator-() const {
    TorusValue v;
    v.rational_ = -rational_;
    for (const auto& [id, c] : irrational_) v.irrational_[id] = -c;
    v.normalize();
    return v;
}

TorusValue TorusValue::scaled(const Int& n) const {
    TorusValue v;
    v.rational_ = rational_ * Rat(n);
    for (const auto& [id, c] : irrational_) v.irrational_[id] = c * Rat(n);
    v.normalize();
    return v;
}

bool TorusValue::operator<(const TorusValue& o) const {
    if (rational_ != o.rational_) return rational_ < o.rational_;
    return irrational_ < o.irrational_;
}

bool TorusValue::abs_leq(const Rat& bound) const {
    if (!is_rational())
        throw UnsupportedTorusValue("magnitude comparison needs a rational torus value");
    return rat_abs(rational_) <= bound;
}

std::string TorusValue::str() const {
    std::ostringstream out;
    bool first = true;
    if (rational_ != 0 || irrational_.empty()) {
        out << to_string(rational_);
        first = false;
    }
    for (const auto& [id, c] : irrational_) {
        if (!first) out << " + ";
        if (c == 1)
            out << "tau" << id;
        else
            out << to_string(c) << "*tau" << id;
        first = false;
    }
    return out.str();
}

TorusValue torus_combine(const std::vector<std::pair<Int, TorusValue>>& terms) {
    TorusValue acc;
    for (const auto& [c, v] : terms) acc = acc + v.scaled(c);
    return acc;
}

}  // namespace produal
