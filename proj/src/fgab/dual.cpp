#include "produal/errors.hpp"
#include "produal/fgab/fgab.hpp"

namespace produal {

FGAbelianGroup dual_group(const FGAbelianGroup& g) {
    if (!g.is_finite()) throw NotFinite("dual enumeration needs a finite group");
    return g;  // self-dual in the same coordinates
}

TorusValue character_pairing(const FGAbelianGroup& g, const GroupElement& chi,
                             const GroupElement& x) {
    if (!g.is_finite()) throw NotFinite("character pairing needs a finite group");
    Rat acc = 0;
    for (std::size_t k = 0; k < g.invariant_factors.size(); ++k)
        acc += Rat(chi.coords[k] * x.coords[k], g.invariant_factors[k]);
    return TorusValue::from_rational(acc);
}

FGAbelianGroup hom_group(const FGAbelianGroup& g, const FGAbelianGroup& h) {
    std::vector<Int> torsion;
    std::size_t free_rank = 0;
    for (std::size_t i = 0; i < g.factor_count(); ++i) {
        Int dg = g.factor_order(i);
        for (std::size_t j = 0; j < h.factor_count(); ++j) {
            Int dh = h.factor_order(j);
            if (dg == 0 && dh == 0)
                ++free_rank;  // Hom(Z, Z) = Z
            else if (dg == 0)
                torsion.push_back(dh);  // Hom(Z, Z_n) = Z_n
            else if (dh == 0)
                ;  // Hom(Z_m, Z) = 0
            else
                torsion.push_back(gcd(dg, dh));  // Hom(Z_m, Z_n) = Z_gcd
        }
    }
    std::erase_if(torsion, [](const Int& d) { return d == 1; });
    return FGAbelianGroup::direct_sum(torsion, free_rank);
}

}  // namespace produal
