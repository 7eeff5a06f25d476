#include "produal/dualgrp/dual.hpp"

#include "produal/errors.hpp"
#include "produal/exact/snf.hpp"

#include <algorithm>
#include <map>

namespace produal {

TorusValue tensor_eval(const TensorSum& s, const FinSupportVector& g) {
    std::vector<std::pair<Int, TorusValue>> terms;
    terms.reserve(s.terms.size());
    for (const ElementaryTensor& e : s.terms) terms.emplace_back(pair(g, e.vector), e.value);
    return torus_combine(terms);
}

CharacterPresentation tensor_to_pointwise(const TensorSum& s) {
    // accumulate one coefficient sequence per torus component, then assemble
    std::map<int, RatSeq> acc;
    for (const ElementaryTensor& e : s.terms) {
        RatSeq base = RatSeq::from_int_seq(e.vector);
        if (e.value.rational_part() != 0) {
            auto it = acc.try_emplace(kSymbolOne, RatSeq()).first;
            it->second = it->second + base.scaled(e.value.rational_part());
        }
        for (const auto& [sym, c] : e.value.irrational_coeffs()) {
            auto it = acc.try_emplace(sym, RatSeq()).first;
            it->second = it->second + base.scaled(c);
        }
    }
    struct Atom {
        IndexSet support;
        std::vector<std::pair<int, RationalFunction>> parts;  // nonzero components
    };
    std::vector<Atom> atoms{{IndexSet::all(), {}}};
    for (const auto& [sym, seq] : acc) {
        std::vector<Atom> next;
        for (const Atom& a : atoms)
            for (const auto& cell : seq.cells()) {
                IndexSet s2 = a.support.intersect(cell.support);
                if (s2.is_empty()) continue;
                Atom b{std::move(s2), a.parts};
                if (!cell.func.is_zero()) b.parts.emplace_back(sym, cell.func);
                next.push_back(std::move(b));
            }
        atoms = std::move(next);
    }
    std::vector<CharacterPresentation::Cell> cells;
    for (Atom& a : atoms) {
        if (a.parts.empty()) {
            cells.push_back({std::move(a.support), kSymbolOne, RationalFunction()});
        } else if (a.parts.size() == 1) {
            cells.push_back({std::move(a.support), a.parts[0].first, std::move(a.parts[0].second)});
        } else if (a.support.is_finite()) {
            // pointwise values may still be pure where the components cancel
            for (std::uint64_t i : a.support.members_below(a.support.prefix_size())) {
                TorusValue v;
                for (const auto& [sym, f] : a.parts) {
                    Rat c = f.value(Int(i));
                    v = v + (sym == kSymbolOne ? TorusValue::from_rational(c)
                                               : TorusValue::symbol_multiple(sym, c));
                }
                if (v.is_rational())
                    cells.push_back({IndexSet::single(i), kSymbolOne,
                                     RationalFunction::from_rat(v.rational_part())});
                else if (v.rational_part() == 0 && v.irrational_coeffs().size() == 1)
                    cells.push_back({IndexSet::single(i), v.irrational_coeffs().begin()->first,
                                     RationalFunction::from_rat(v.irrational_coeffs().begin()->second)});
                else
                    throw Unrepresentable("pointwise value at index " + std::to_string(i) +
                                          " mixes independent components");
            }
        } else {
            throw Unrepresentable("independent components overlap on an infinite index set");
        }
    }
    return CharacterPresentation::from_cells(std::move(cells));
}

CharComparison char_equal(const CharacterPresentation& a, const CharacterPresentation& b) {
    if (a == b) return {true, 0};
    // canonical forms differ, so some index distinguishes the values; it lies
    // within one structural period past both prefixes
    std::uint64_t pa = 0, la = 1;
    for (const auto& c : a.cells()) {
        pa = std::max(pa, c.support.prefix_size());
        la = lcm_u64(la, c.support.period_size());
    }
    int deg = 0;
    for (const auto& c : b.cells()) {
        pa = std::max(pa, c.support.prefix_size());
        la = lcm_u64(la, c.support.period_size());
    }
    for (const auto& c : a.cells()) deg = std::max(deg, c.coeff.num().degree());
    for (const auto& c : b.cells()) deg = std::max(deg, c.coeff.num().degree());
    std::uint64_t limit = pa + la * (static_cast<std::uint64_t>(deg) + 2) + 8;
    for (std::uint64_t i = 0; i < limit; ++i)
        if (a.eval(i) != b.eval(i)) return {false, i};
    throw Error("canonical forms differ but no witness index found");
}

FinSupportVector annihilator_witness(const std::vector<IntSeq>& f, const IndexSet& j) {
    if (j.is_finite()) throw FiniteIndexSet("annihilator witness needs an infinite index set");
    std::size_t m = f.size();
    std::vector<std::uint64_t> idx = j.first_members(m + 1);
    IntMatrix a(m, m + 1);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m + 1; ++c) a.at(r, c) = f[r].eval(idx[c]);
    auto basis = integer_kernel_basis(a);
    if (basis.empty()) throw Error("kernel of an m x (m+1) system cannot be trivial");
    FinSupportVector g;
    for (std::size_t c = 0; c < m + 1; ++c) g.add(idx[c], basis.front()[c]);
    return g;
}

}  // namespace produal
