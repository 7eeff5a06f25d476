#include "produal/errors.hpp"
#include "produal/fgab/fgab.hpp"

namespace produal {

TensorConstruction tensor_construct(const FGAbelianGroup& g, const FGAbelianGroup& h,
                                    const Int& guard) {
    if (!g.is_finite() || !h.is_finite())
        throw NotFinite("explicit tensor presentation needs finite groups");
    Int product = g.order() * h.order();
    if (product > guard) throw TooLarge("|G| * |H| = " + product.str() + " exceeds the guard");

    std::vector<GroupElement> eg = enumerate_elements(g);
    std::vector<GroupElement> eh = enumerate_elements(h);
    std::size_t ng = eg.size(), nh = eh.size();
    auto pair_index = [&](const GroupElement& a, const GroupElement& c) {
        std::size_t ia = std::lower_bound(eg.begin(), eg.end(), a) - eg.begin();
        std::size_t ic = std::lower_bound(eh.begin(), eh.end(), c) - eh.begin();
        return ia * nh + ic;
    };

    // bilinearity in generator steps plus generator-order relations; general
    // additivity follows by telescoping
    std::vector<std::vector<Int>> rows;
    auto row_of = [&]() { return std::vector<Int>(ng * nh); };
    for (std::size_t k = 0; k < g.factor_count(); ++k) {
        GroupElement gen = zero_element(g);
        gen.coords[k] = 1;
        for (const GroupElement& a : eg)
            for (const GroupElement& c : eh) {
                auto r = row_of();
                r[pair_index(add(g, a, gen), c)] += 1;
                r[pair_index(a, c)] -= 1;
                r[pair_index(gen, c)] -= 1;
                rows.push_back(std::move(r));
            }
        for (const GroupElement& c : eh) {
            auto r = row_of();
            r[pair_index(gen, c)] = g.invariant_factors[k];
            rows.push_back(std::move(r));
        }
    }
    for (std::size_t k = 0; k < h.factor_count(); ++k) {
        GroupElement gen = zero_element(h);
        gen.coords[k] = 1;
        for (const GroupElement& a : eg)
            for (const GroupElement& c : eh) {
                auto r = row_of();
                r[pair_index(a, add(h, c, gen))] += 1;
                r[pair_index(a, c)] -= 1;
                r[pair_index(a, gen)] -= 1;
                rows.push_back(std::move(r));
            }
        for (const GroupElement& a : eg) {
            auto r = row_of();
            r[pair_index(a, gen)] = h.invariant_factors[k];
            rows.push_back(std::move(r));
        }
    }

    IntMatrix rel(rows.size(), ng * nh);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < ng * nh; ++j) rel.at(i, j) = std::move(rows[i][j]);

    GroupFromRelations q = group_from_relations(ng * nh, rel);
    TensorConstruction out;
    out.group = q.group;
    out.lhs_elements = std::move(eg);
    out.rhs_elements = std::move(eh);
    out.bimap.assign(ng, std::vector<GroupElement>(nh));
    for (std::size_t ia = 0; ia < ng; ++ia)
        for (std::size_t ic = 0; ic < nh; ++ic) {
            GroupElement unit = zero_element(FGAbelianGroup::free(ng * nh));
            unit.coords[ia * nh + ic] = 1;
            out.bimap[ia][ic] = q.projection.apply(unit);
        }
    return out;
}

}  // namespace produal
