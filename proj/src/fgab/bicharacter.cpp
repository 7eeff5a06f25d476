#include "produal/errors.hpp"
#include "produal/fgab/fgab.hpp"

namespace produal {

Bicharacter::Bicharacter(FGAbelianGroup lhs_, FGAbelianGroup rhs_,
                         std::vector<std::vector<Rat>> table_)
    : lhs(std::move(lhs_)), rhs(std::move(rhs_)), table(std::move(table_)) {
    if (!lhs.is_finite() || !rhs.is_finite())
        throw NotFinite("bicharacters are enumerated on finite groups");
    if (table.size() != lhs.factor_count()) throw IllFormedBicharacter("table height mismatch");
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i].size() != rhs.factor_count())
            throw IllFormedBicharacter("table width mismatch");
        for (std::size_t j = 0; j < table[i].size(); ++j) {
            table[i][j] = torus_window(table[i][j]);
            // value must be killed by both generator orders
            if (!is_integer(table[i][j] * lhs.invariant_factors[i]) ||
                !is_integer(table[i][j] * rhs.invariant_factors[j]))
                throw IllFormedBicharacter("generator value incompatible with orders");
        }
    }
}

TorusValue Bicharacter::eval(const GroupElement& a, const GroupElement& b) const {
    Rat acc = 0;
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = 0; j < table[i].size(); ++j)
            acc += table[i][j] * a.coords[i] * b.coords[j];
    return TorusValue::from_rational(acc);
}

Bicharacter Bicharacter::plus(const Bicharacter& o) const {
    std::vector<std::vector<Rat>> t = table;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t[i].size(); ++j) t[i][j] = torus_window(t[i][j] + o.table[i][j]);
    return {lhs, rhs, std::move(t)};
}

bool Bicharacter::is_zero() const {
    for (const auto& row : table)
        for (const Rat& v : row)
            if (v != 0) return false;
    return true;
}

std::vector<Bicharacter> enumerate_bicharacters(const FGAbelianGroup& g, const FGAbelianGroup& h,
                                                const Int& guard) {
    if (!g.is_finite() || !h.is_finite()) throw NotFinite("bicharacter enumeration");
    std::size_t ng = g.factor_count(), nh = h.factor_count();
    std::vector<Int> gcds(ng * nh);
    Int total = 1;
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < nh; ++j) {
            gcds[i * nh + j] = gcd(g.invariant_factors[i], h.invariant_factors[j]);
            total *= gcds[i * nh + j];
            if (total > guard) throw TooLarge("bicharacter group of order " + total.str());
        }
    std::vector<Bicharacter> out;
    std::vector<Int> counter(ng * nh);
    for (Int n = 0; n < total; ++n) {
        std::vector<std::vector<Rat>> table(ng, std::vector<Rat>(nh));
        for (std::size_t i = 0; i < ng; ++i)
            for (std::size_t j = 0; j < nh; ++j)
                table[i][j] = Rat(counter[i * nh + j], gcds[i * nh + j]);
        out.emplace_back(g, h, std::move(table));
        for (std::size_t k = ng * nh; k-- > 0;) {
            counter[k] += 1;
            if (counter[k] < gcds[k]) break;
            counter[k] = 0;
        }
    }
    return out;
}

GroupHom garling_transpose(const Bicharacter& b) {
    FGAbelianGroup dual_rhs = dual_group(b.rhs);
    IntMatrix m(dual_rhs.factor_count(), b.lhs.factor_count());
    for (std::size_t i = 0; i < b.lhs.factor_count(); ++i)
        for (std::size_t j = 0; j < b.rhs.factor_count(); ++j) {
            // beta(g_i, .) = chi_a with a_j / e_j == beta(g_i, h_j) mod 1
            Rat v = b.table[i][j] * b.rhs.invariant_factors[j];
            if (!is_integer(v)) throw IllFormedBicharacter("value incompatible with order");
            Int a = numerator(v) % b.rhs.invariant_factors[j];
            if (a < 0) a += b.rhs.invariant_factors[j];
            m.at(j, i) = a;
        }
    GroupHom hom{b.lhs, std::move(dual_rhs), std::move(m)};
    if (!hom.well_defined()) throw IllFormedBicharacter("transpose not a homomorphism");
    return hom;
}

}  // namespace produal
