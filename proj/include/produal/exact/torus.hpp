#pragma once

#include "produal/exact/numbers.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace produal {

/// Formal irrational symbol tau_k.  The set {1, tau_1, tau_2, ...} is treated
/// as linearly independent over Q; symbols never receive numeric values.
struct IrrationalSymbol {
    int id = 1;  // >= 1

    std::string label() const { return "tau" + std::to_string(id); }
    friend auto operator<=>(const IrrationalSymbol&, const IrrationalSymbol&) = default;
};

/// Exact element of T = R/Z: a rational part reduced into the canonical
/// window (-1/2, 1/2] plus rational multiples of finitely many formal
/// irrational symbols.
class TorusValue {
  public:
    TorusValue() = default;
    static TorusValue from_rational(const Rat& r);
    /// coeff * tau_id, coeff exact (not reduced mod anything).
    static TorusValue symbol_multiple(int symbol_id, const Rat& coeff);

    const Rat& rational_part() const { return rational_; }
    const std::map<int, Rat>& irrational_coeffs() const { return irrational_; }

    bool is_zero() const { return rational_ == 0 && irrational_.empty(); }
    bool is_rational() const { return irrational_.empty(); }
    /// Pure single-symbol multiple (no rational part, one symbol)?
    bool is_pure_symbol() const { return rational_ == 0 && irrational_.size() == 1; }

    TorusValue operator+(const TorusValue& o) const;
    TorusValue operator-() const;
    TorusValue operator-(const TorusValue& o) const { return *this + (-o); }
    TorusValue scaled(const Int& n) const;

    bool operator==(const TorusValue& o) const {
        return rational_ == o.rational_ && irrational_ == o.irrational_;
    }
    bool operator!=(const TorusValue& o) const { return !(*this == o); }
    bool operator<(const TorusValue& o) const;  // arbitrary total order, for map keys

    /// |representative| <= bound, using the (-1/2, 1/2] window.  Requires a
    /// purely rational value.
    bool abs_leq(const Rat& bound) const;

    std::string str() const;

  private:
    Rat rational_;                 // in (-1/2, 1/2]
    std::map<int, Rat> irrational_;  // symbol id -> nonzero coefficient

    void normalize();
};

/// Reduce a rational into the canonical window (-1/2, 1/2].
Rat torus_window(const Rat& r);

/// Sum of integer multiples: sum c_k * v_k, normalized.
TorusValue torus_combine(const std::vector<std::pair<Int, TorusValue>>& terms);

}  // namespace produal
