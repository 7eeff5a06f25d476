#include "produal/cpx/cpx.hpp"

#include "produal/errors.hpp"

namespace produal {

ReduceResult theorem_b_reduce(const IntFunction& f, const TorusValue& t) {
    bool has_rat = t.rational_part() != 0;
    bool has_irr = !t.irrational_coeffs().empty();
    if ((has_rat && has_irr) || t.irrational_coeffs().size() > 1)
        throw UnsupportedTorusValue("reduction needs a purely rational or single-symbol value: " +
                                    t.str());
    if (has_irr) {
        // irrational component: the induced character pins f itself down
        ContinuityResult c = is_continuous(f);
        if (c.continuous) return {true, f, IndexSet::empty()};
        return {false, {}, c.witness};
    }
    // rational a/m in lowest terms; m = 1 covers t = 0
    Int m = denominator(t.rational_part());
    IntFunction g = f.pointwise_mod(m);
    ContinuityResult c = is_continuous(g);
    if (c.continuous) return {true, std::move(g), IndexSet::empty()};
    return {false, {}, c.witness};
}

}  // namespace produal
