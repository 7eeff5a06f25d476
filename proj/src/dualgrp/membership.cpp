#include "produal/dualgrp/dual.hpp"

#include "produal/errors.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace produal {

namespace {

// Decomposition terms: one per nonzero cell of the canonical presentation,
// with the cell's cleared denominator moved into the torus value.  The
// numerator polynomial is the cell vector, so every vector has integer
// coefficients.
TensorSum build_decomposition(const CharacterPresentation& t) {
    struct Item {
        int symbol;
        Int den;
        std::uint64_t first;
        ElementaryTensor term;
    };
    std::vector<Item> items;
    for (const auto& cell : t.cells()) {
        if (cell.coeff.is_zero()) continue;
        Int b = cell.coeff.constant_denominator();
        IntSeq vec = IntSeq::from_cells(
            {{cell.support, cell.coeff.num()},
             {cell.support.complement(), Poly()}});
        TorusValue val = cell.symbol == kSymbolOne
                             ? TorusValue::from_rational(Rat(1, b))
                             : TorusValue::symbol_multiple(cell.symbol, Rat(1, b));
        items.push_back({cell.symbol, b, cell.support.first().value(), {std::move(vec), val}});
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        return std::tie(a.symbol, a.den, a.first) < std::tie(b.symbol, b.den, b.first);
    });
    TensorSum s;
    for (Item& it : items) s.terms.push_back(std::move(it.term));
    return s;
}

// One witness vector per symbol component: M/b times the cell numerators,
// M the lcm of the component's cleared denominators.  Annihilating it forces
// the component's pairing to vanish.
ContinuitySubset build_witness(const CharacterPresentation& t) {
    std::map<int, std::vector<const CharacterPresentation::Cell*>> components;
    for (const auto& cell : t.cells())
        if (!cell.coeff.is_zero()) components[cell.symbol].push_back(&cell);
    ContinuitySubset f;
    for (const auto& [sym, cells] : components) {
        Int m = 1;
        for (const auto* c : cells) m = lcm(m, c->coeff.constant_denominator());
        std::vector<IntSeq::Cell> vec;
        IndexSet covered = IndexSet::empty();
        for (const auto* c : cells) {
            vec.push_back({c->support, c->coeff.num().scaled(m / c->coeff.constant_denominator())});
            covered = covered.unite(c->support);
        }
        IndexSet rest = covered.complement();
        if (!rest.is_empty()) vec.push_back({std::move(rest), Poly()});
        f.vectors.push_back(IntSeq::from_cells(std::move(vec)));
    }
    return f;
}

}  // namespace

MembershipVerdict decide_membership(const CharacterPresentation& t) {
    for (int sym : t.symbols()) {
        RatSeq coeffs = t.symbol_coefficients(sym);
        IndexSet support = t.symbol_support(sym);
        DenominatorProfile profile = denominator_profile(coeffs, support);
        if (!profile.is_bounded()) {
            // map back to the cell of the canonical presentation
            for (std::size_t k = 0; k < t.cells().size(); ++k) {
                const auto& cell = t.cells()[k];
                if (cell.symbol == sym && !cell.coeff.is_zero() &&
                    !cell.coeff.has_constant_denominator() && cell.support.is_infinite())
                    return {MembershipVerdict::NotInDual{
                        NonMembershipCertificate{sym, k, cell.coeff.den()}}};
            }
            throw Error("unbounded profile without an offending cell");
        }
    }
    return {MembershipVerdict::InDual{build_decomposition(t), build_witness(t)}};
}

TensorSum decompose(const CharacterPresentation& t) {
    MembershipVerdict v = decide_membership(t);
    if (!v.in_dual())
        throw NotInDualError("character is not continuous: reduced denominator " +
                             v.out().certificate.reduced_denominator.str());
    return std::move(std::get<MembershipVerdict::InDual>(v.result).decomposition);
}

}  // namespace produal
