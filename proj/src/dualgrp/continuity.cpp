#include "produal/dualgrp/dual.hpp"

#include "produal/errors.hpp"
#include "produal/exact/snf.hpp"

#include <algorithm>
#include <map>

// verify_continuity_subset decides the quantified statement
//     for all g in Z^(N):  <g, x_j> = 0 (all j)  ==>  <g, t> = 0 in T
// by reducing it to finitely many integer kernel vectors.  On the common
// refinement grid all cell formulas are polynomials of degree <= D (over a
// constant denominator), so every pairing factors through the moments
// sum g(i) i^e (e <= D) taken per congruence class, plus the raw values of g
// at the finitely many exceptional indices.  The achievable moment vectors of
// one class form the lattice spanned by the finite differences of
// (1, i, ..., i^D) along the class, each realizable by an explicit g.  The
// F-orthogonality conditions cut out a kernel sublattice; the statement holds
// iff every kernel basis vector pairs to zero (irrational components) and to
// an integer (rational component).

namespace produal {

namespace {

struct ClassInfo {
    std::uint64_t base;  // first index of the congruence class
    std::uint64_t step;
};

// g realizing the e-th finite-difference moment vector of a class
FinSupportVector difference_vector(const ClassInfo& cls, unsigned e) {
    FinSupportVector g;
    Int binom = 1;
    for (unsigned j = 0; j <= e; ++j) {
        Int sign = ((e - j) % 2 == 0) ? 1 : -1;
        g.add(cls.base + j * cls.step, sign * binom);
        binom = binom * Int(e - j) / Int(j + 1);
    }
    return g;
}

// search a counterexample among kernel vectors of the F-system over growing
// windows of `where`; guaranteed to exist when t restricted to `where` has
// unbounded reduced denominators
FinSupportVector window_search(const CharacterPresentation& t, const std::vector<IntSeq>& f,
                               const IndexSet& where) {
    std::size_t m = f.size();
    for (std::size_t n = m + 1; n <= 4096; n = n * 2 + 1) {
        std::vector<std::uint64_t> idx = where.first_members(n);
        if (idx.size() < m + 1) break;
        IntMatrix a(m, idx.size());
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < idx.size(); ++c) a.at(r, c) = f[r].eval(idx[c]);
        for (const auto& v : integer_kernel_basis(a)) {
            FinSupportVector g;
            for (std::size_t c = 0; c < idx.size(); ++c) g.add(idx[c], v[c]);
            if (!g.is_zero() && !char_eval(t, g).is_zero()) return g;
        }
    }
    throw Error("no counterexample found in the search window");
}

}  // namespace

ContinuityCheck verify_continuity_subset(const CharacterPresentation& t,
                                         const ContinuitySubset& f) {
    // a cell with unbounded reduced denominators can never be certified
    for (const auto& cell : t.cells())
        if (!cell.coeff.is_zero() && !cell.coeff.has_constant_denominator() &&
            cell.support.is_infinite())
            return {false, window_search(t, f.vectors, cell.support)};

    // common refinement grid
    std::uint64_t p = 0, l = 1;
    int deg = 0;
    for (const auto& x : f.vectors)
        for (const auto& c : x.cells()) {
            p = std::max(p, c.support.prefix_size());
            l = lcm_u64(l, c.support.period_size());
            deg = std::max(deg, c.poly.degree());
        }
    for (const auto& c : t.cells()) {
        p = std::max(p, c.support.prefix_size());
        l = lcm_u64(l, c.support.period_size());
        deg = std::max(deg, c.coeff.num().degree());
    }
    unsigned d = static_cast<unsigned>(std::max(deg, 0));
    if (l * (d + 1) + p > 6000) throw TooLarge("continuity check grid too large");

    std::vector<ClassInfo> classes(l);
    for (std::uint64_t s = 0; s < l; ++s)
        classes[s] = {p + (s + l - p % l) % l, l};

    // columns: (class, difference order) pairs then exceptional indices
    std::size_t ncols = l * (d + 1) + p;
    auto realize = [&](std::size_t col) -> FinSupportVector {
        if (col < l * (d + 1)) return difference_vector(classes[col / (d + 1)], col % (d + 1));
        return FinSupportVector::unit(col - l * (d + 1));
    };

    IntMatrix a(f.vectors.size(), ncols);
    for (std::size_t r = 0; r < f.vectors.size(); ++r)
        for (std::size_t col = 0; col < ncols; ++col)
            a.at(r, col) = pair(realize(col), f.vectors[r]);

    for (const auto& y : integer_kernel_basis(a)) {
        FinSupportVector g;
        for (std::size_t col = 0; col < ncols; ++col)
            if (y[col] != 0) g = g + realize(col).scaled(y[col]);
        if (!char_eval(t, g).is_zero()) return {false, std::move(g)};
    }
    return {true, {}};
}

ContinuitySubset minimize_continuity_subset(const CharacterPresentation& t, ContinuitySubset f) {
    for (std::size_t k = f.vectors.size(); k-- > 0;) {
        ContinuitySubset trial;
        for (std::size_t j = 0; j < f.vectors.size(); ++j)
            if (j != k) trial.vectors.push_back(f.vectors[j]);
        if (verify_continuity_subset(t, trial).ok) f = std::move(trial);
    }
    return f;
}

std::vector<FinSupportVector> unbounded_demo(const CharacterPresentation& t,
                                             const std::vector<IntSeq>& attempt,
                                             std::size_t count) {
    const CharacterPresentation::Cell* bad = nullptr;
    for (const auto& cell : t.cells())
        if (!cell.coeff.is_zero() && !cell.coeff.has_constant_denominator() &&
            cell.support.is_infinite())
            bad = &cell;
    if (!bad) throw NotInDualError("character has bounded denominators");
    std::vector<FinSupportVector> out;
    IndexSet region = bad->support;
    while (out.size() < count) {
        FinSupportVector g = window_search(t, attempt, region);
        out.push_back(g);
        // continue past the used indices
        std::uint64_t beyond = g.entries().rbegin()->first + 1;
        region = region.intersect(IndexSet::from_index(beyond));
        if (region.is_finite()) break;
    }
    return out;
}

}  // namespace produal
