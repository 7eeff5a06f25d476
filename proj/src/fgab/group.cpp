#include "produal/fgab/fgab.hpp"

#include "produal/errors.hpp"

#include <algorithm>
#include <sstream>

namespace produal {

FGAbelianGroup FGAbelianGroup::cyclic(const Int& n) {
    if (n < 1) throw Error("cyclic group order must be positive");
    if (n == 1) return trivial();
    return {{n}, 0};
}

FGAbelianGroup FGAbelianGroup::direct_sum(const std::vector<Int>& cyclic_orders,
                                          std::size_t free_rank) {
    std::size_t n = cyclic_orders.size() + free_rank;
    IntMatrix rel(cyclic_orders.size(), n);
    for (std::size_t k = 0; k < cyclic_orders.size(); ++k) rel.at(k, k) = cyclic_orders[k];
    return group_from_relations(n, rel).group;
}

Int FGAbelianGroup::order() const {
    if (!is_finite()) throw NotFinite("group has positive free rank");
    Int n = 1;
    for (const Int& d : invariant_factors) n *= d;
    return n;
}

Int FGAbelianGroup::factor_order(std::size_t k) const {
    return k < invariant_factors.size() ? invariant_factors[k] : Int(0);
}

std::string FGAbelianGroup::str() const {
    if (is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Int& d : invariant_factors) {
        if (!first) out << " + ";
        out << "Z_" << d.str();
        first = false;
    }
    if (free_rank > 0) {
        if (!first) out << " + ";
        out << "Z";
        if (free_rank > 1) out << "^" << free_rank;
    }
    return out.str();
}

bool GroupElement::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Int& c) { return c == 0; });
}

GroupElement reduce_element(const FGAbelianGroup& g, GroupElement e) {
    if (e.coords.size() != g.factor_count()) throw Error("coordinate count mismatch");
    for (std::size_t k = 0; k < g.invariant_factors.size(); ++k) {
        const Int& d = g.invariant_factors[k];
        e.coords[k] %= d;
        if (e.coords[k] < 0) e.coords[k] += d;
    }
    return e;
}

GroupElement zero_element(const FGAbelianGroup& g) {
    return {std::vector<Int>(g.factor_count())};
}

GroupElement add(const FGAbelianGroup& g, const GroupElement& a, const GroupElement& b) {
    GroupElement r = a;
    for (std::size_t k = 0; k < r.coords.size(); ++k) r.coords[k] += b.coords[k];
    return reduce_element(g, std::move(r));
}

GroupElement negate(const FGAbelianGroup& g, const GroupElement& a) {
    GroupElement r = a;
    for (Int& c : r.coords) c = -c;
    return reduce_element(g, std::move(r));
}

GroupElement scale(const FGAbelianGroup& g, const Int& n, const GroupElement& a) {
    GroupElement r = a;
    for (Int& c : r.coords) c *= n;
    return reduce_element(g, std::move(r));
}

Int element_order(const FGAbelianGroup& g, const GroupElement& a) {
    GroupElement e = reduce_element(g, a);
    Int n = 1;
    for (std::size_t k = 0; k < g.invariant_factors.size(); ++k) {
        const Int& d = g.invariant_factors[k];
        if (e.coords[k] != 0) n = lcm(n, d / gcd(e.coords[k], d));
    }
    for (std::size_t k = g.invariant_factors.size(); k < e.coords.size(); ++k)
        if (e.coords[k] != 0) throw NotFinite("element of infinite order");
    return n;
}

std::vector<GroupElement> enumerate_elements(const FGAbelianGroup& g) {
    Int n = g.order();
    if (n > 100000) throw TooLarge("group of order " + n.str());
    std::vector<GroupElement> out;
    out.reserve(n.convert_to<std::size_t>());
    GroupElement cur = zero_element(g);
    for (Int i = 0; i < n; ++i) {
        out.push_back(cur);
        // increment mixed-radix counter, last coordinate fastest, so the
        // result is lexicographically sorted
        for (std::size_t k = cur.coords.size(); k-- > 0;) {
            cur.coords[k] += 1;
            if (cur.coords[k] < g.invariant_factors[k]) break;
            cur.coords[k] = 0;
        }
    }
    return out;
}

GroupElement GroupHom::apply(const GroupElement& e) const {
    if (e.coords.size() != source.factor_count()) throw Error("coordinate count mismatch");
    return reduce_element(target, {matrix.apply(e.coords)});
}

bool GroupHom::well_defined() const {
    for (std::size_t k = 0; k < source.invariant_factors.size(); ++k) {
        GroupElement gen = zero_element(source);
        gen.coords[k] = 1;
        GroupElement img = apply(gen);
        if (!scale(target, source.invariant_factors[k], img).is_zero()) return false;
    }
    return true;
}

GroupFromRelations group_from_relations(std::size_t generators, const IntMatrix& relations) {
    if (relations.cols() != generators) throw Error("relation width mismatch");
    // columns of relations^T span the relation lattice; in the coordinates
    // z = U x the lattice becomes the span of the diagonal of S
    SnfResult r = smith_normal_form(relations.transposed());
    std::size_t n = generators;
    std::size_t rank = std::min(n, relations.rows());
    std::vector<std::size_t> torsion_rows, free_rows;
    std::vector<Int> factors;
    for (std::size_t k = 0; k < n; ++k) {
        Int d = (k < rank) ? r.S.at(k, k) : Int(0);
        if (d == 1) continue;
        if (d == 0)
            free_rows.push_back(k);
        else {
            torsion_rows.push_back(k);
            factors.push_back(d);
        }
    }
    FGAbelianGroup group{std::move(factors), free_rows.size()};
    IntMatrix proj(group.factor_count(), n);
    std::size_t row = 0;
    for (std::size_t k : torsion_rows) {
        for (std::size_t j = 0; j < n; ++j) proj.at(row, j) = r.U.at(k, j);
        ++row;
    }
    for (std::size_t k : free_rows) {
        for (std::size_t j = 0; j < n; ++j) proj.at(row, j) = r.U.at(k, j);
        ++row;
    }
    GroupHom hom{FGAbelianGroup::free(n), group, std::move(proj)};
    return {std::move(group), std::move(hom)};
}

}  // namespace produal
