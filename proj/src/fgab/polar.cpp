#include "produal/errors.hpp"
#include "produal/fgab/fgab.hpp"

#include <algorithm>

namespace produal {

Subset make_subset(const FGAbelianGroup& g, std::vector<GroupElement> elements) {
    for (GroupElement& e : elements) e = reduce_element(g, std::move(e));
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return {g, std::move(elements)};
}

bool subset_contains(const Subset& s, const GroupElement& e) {
    return std::binary_search(s.elements.begin(), s.elements.end(), e);
}

bool subset_leq(const Subset& a, const Subset& b) {
    return std::all_of(a.elements.begin(), a.elements.end(),
                       [&](const GroupElement& e) { return subset_contains(b, e); });
}

namespace {

Subset bounded_side(const Subset& given) {
    // characters (resp. elements) chi with |chi(a)| <= 1/4 for all a in the
    // given set; the pairing is symmetric in the invariant-factor coordinates
    const FGAbelianGroup& g = given.group;
    std::vector<GroupElement> out;
    for (const GroupElement& chi : enumerate_elements(dual_group(g))) {
        bool ok = true;
        for (const GroupElement& a : given.elements)
            if (!character_pairing(g, chi, a).abs_leq(Rat(1, 4))) {
                ok = false;
                break;
            }
        if (ok) out.push_back(chi);
    }
    return make_subset(g, std::move(out));
}

}  // namespace

Subset polar(const Subset& a) { return bounded_side(a); }

Subset prepolar(const Subset& x) { return bounded_side(x); }

Subset quasiconvex_hull(const Subset& a) { return prepolar(polar(a)); }

}  // namespace produal
