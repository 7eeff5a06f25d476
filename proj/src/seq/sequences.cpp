#include "produal/seq/sequences.hpp"

#include "produal/errors.hpp"

#include <algorithm>

namespace produal {

// ---- FinSupportVector -------------------------------------------------------

FinSupportVector FinSupportVector::unit(std::uint64_t i) {
    FinSupportVector v;
    v.add(i, 1);
    return v;
}

void FinSupportVector::add(std::uint64_t i, const Int& v) {
    if (v == 0) return;
    Int& slot = entries_[i];
    slot += v;
    if (slot == 0) entries_.erase(i);
}

Int FinSupportVector::at(std::uint64_t i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? Int(0) : it->second;
}

FinSupportVector FinSupportVector::operator+(const FinSupportVector& o) const {
    FinSupportVector r = *this;
    for (const auto& [i, v] : o.entries_) r.add(i, v);
    return r;
}

FinSupportVector FinSupportVector::scaled(const Int& c) const {
    FinSupportVector r;
    if (c == 0) return r;
    for (const auto& [i, v] : entries_) r.entries_[i] = v * c;
    return r;
}

// ---- IntSeq -----------------------------------------------------------------

IntSeq::IntSeq() { cells_.push_back({IndexSet::all(), Poly()}); }

IntSeq IntSeq::from_cells(std::vector<Cell> cells) { return canonicalize_int_seq(std::move(cells)); }

IntSeq IntSeq::constant(const Int& c) { return of_poly(Poly::constant(c)); }

IntSeq IntSeq::of_poly(Poly p) {
    return from_cells({Cell{IndexSet::all(), std::move(p)}});
}

IntSeq IntSeq::indicator(const IndexSet& j, const Int& c) {
    std::vector<Cell> cells;
    cells.push_back({j, Poly::constant(c)});
    if (!j.is_all()) cells.push_back({j.complement(), Poly()});
    return from_cells(std::move(cells));
}

Int IntSeq::eval(std::uint64_t i) const {
    for (const Cell& c : cells_)
        if (c.support.contains(i)) return c.poly.eval(Int(i));
    throw PresentationInvalid("index not covered");  // unreachable on valid partitions
}

bool IntSeq::is_zero() const {
    return cells_.size() == 1 && cells_[0].poly.is_zero();
}

IntSeq IntSeq::operator+(const IntSeq& o) const {
    std::vector<Cell> out;
    for (const Cell& a : cells_)
        for (const Cell& b : o.cells_) {
            IndexSet s = a.support.intersect(b.support);
            if (!s.is_empty()) out.push_back({std::move(s), a.poly + b.poly});
        }
    return from_cells(std::move(out));
}

IntSeq IntSeq::scaled(const Int& c) const {
    std::vector<Cell> out;
    for (const Cell& a : cells_) out.push_back({a.support, a.poly.scaled(c)});
    return from_cells(std::move(out));
}

IntSeq IntSeq::restricted(const IndexSet& j) const {
    std::vector<Cell> out;
    for (const Cell& a : cells_) {
        IndexSet s = a.support.intersect(j);
        if (!s.is_empty()) out.push_back({std::move(s), a.poly});
    }
    IndexSet off = j.complement();
    if (!off.is_empty()) out.push_back({std::move(off), Poly()});
    return from_cells(std::move(out));
}

// ---- RatSeq -----------------------------------------------------------------

RatSeq::RatSeq() { cells_.push_back({IndexSet::all(), RationalFunction()}); }

RatSeq RatSeq::from_cells(std::vector<Cell> cells) { return canonicalize_rat_seq(std::move(cells)); }

RatSeq RatSeq::constant(const Rat& c) { return of_function(RationalFunction::from_rat(c)); }

RatSeq RatSeq::of_function(RationalFunction f) {
    return from_cells({Cell{IndexSet::all(), std::move(f)}});
}

RatSeq RatSeq::from_int_seq(const IntSeq& s) {
    std::vector<Cell> out;
    for (const auto& c : s.cells()) out.push_back({c.support, RationalFunction::from_poly(c.poly)});
    return from_cells(std::move(out));
}

Rat RatSeq::eval(std::uint64_t i) const {
    for (const Cell& c : cells_)
        if (c.support.contains(i)) return c.func.value(Int(i));
    throw PresentationInvalid("index not covered");
}

bool RatSeq::is_zero() const { return cells_.size() == 1 && cells_[0].func.is_zero(); }

RatSeq RatSeq::operator+(const RatSeq& o) const {
    std::vector<Cell> out;
    for (const Cell& a : cells_)
        for (const Cell& b : o.cells_) {
            IndexSet s = a.support.intersect(b.support);
            if (!s.is_empty()) out.push_back({std::move(s), a.func + b.func});
        }
    return from_cells(std::move(out));
}

RatSeq RatSeq::scaled(const Rat& c) const {
    std::vector<Cell> out;
    for (const Cell& a : cells_) out.push_back({a.support, a.func.scaled(c)});
    return from_cells(std::move(out));
}

RatSeq RatSeq::restricted(const IndexSet& j) const {
    std::vector<Cell> out;
    for (const Cell& a : cells_) {
        IndexSet s = a.support.intersect(j);
        if (!s.is_empty()) out.push_back({std::move(s), a.func});
    }
    IndexSet off = j.complement();
    if (!off.is_empty()) out.push_back({std::move(off), RationalFunction()});
    return from_cells(std::move(out));
}

// ---- CharacterPresentation --------------------------------------------------

CharacterPresentation::CharacterPresentation() {
    cells_.push_back({IndexSet::all(), kSymbolOne, RationalFunction()});
}

CharacterPresentation CharacterPresentation::from_cells(std::vector<Cell> cells) {
    return canonicalize_character(std::move(cells));
}

CharacterPresentation CharacterPresentation::zero() { return CharacterPresentation(); }

CharacterPresentation CharacterPresentation::constant(int symbol, const Rat& coeff) {
    return from_cells({Cell{IndexSet::all(), symbol, RationalFunction::from_rat(coeff)}});
}

TorusValue CharacterPresentation::eval(std::uint64_t i) const {
    for (const Cell& c : cells_)
        if (c.support.contains(i)) {
            Rat v = c.coeff.value(Int(i));
            if (c.symbol == kSymbolOne) return TorusValue::from_rational(v);
            return TorusValue::symbol_multiple(c.symbol, v);
        }
    throw PresentationInvalid("index not covered");
}

bool CharacterPresentation::is_zero() const {
    return cells_.size() == 1 && cells_[0].coeff.is_zero();
}

std::vector<int> CharacterPresentation::symbols() const {
    std::vector<int> out;
    for (const Cell& c : cells_) {
        if (c.coeff.is_zero()) continue;
        if (std::find(out.begin(), out.end(), c.symbol) == out.end()) out.push_back(c.symbol);
    }
    std::sort(out.begin(), out.end());
    return out;
}

IndexSet CharacterPresentation::symbol_support(int symbol) const {
    IndexSet s = IndexSet::empty();
    for (const Cell& c : cells_)
        if (c.symbol == symbol && !c.coeff.is_zero()) s = s.unite(c.support);
    return s;
}

RatSeq CharacterPresentation::symbol_coefficients(int symbol) const {
    std::vector<RatSeq::Cell> out;
    for (const Cell& c : cells_) {
        if (c.symbol == symbol)
            out.push_back({c.support, c.coeff});
        else
            out.push_back({c.support, RationalFunction()});
    }
    return RatSeq::from_cells(std::move(out));
}

namespace {

// (symbol, constant) presentation of a pure torus value; throws on mixed values
std::pair<int, Rat> pure_components(const TorusValue& v) {
    if (v.is_rational()) return {kSymbolOne, v.rational_part()};
    if (v.rational_part() == 0 && v.irrational_coeffs().size() == 1) {
        const auto& [id, c] = *v.irrational_coeffs().begin();
        return {id, c};
    }
    throw Unrepresentable("torus value " + v.str() +
                          " mixes independent components at one index");
}

}  // namespace

CharacterPresentation CharacterPresentation::operator+(const CharacterPresentation& o) const {
    std::vector<Cell> out;
    for (const Cell& a : cells_)
        for (const Cell& b : o.cells_) {
            IndexSet s = a.support.intersect(b.support);
            if (s.is_empty()) continue;
            bool a0 = a.coeff.is_zero(), b0 = b.coeff.is_zero();
            if (a0 && b0) {
                out.push_back({std::move(s), kSymbolOne, RationalFunction()});
            } else if (a0) {
                out.push_back({std::move(s), b.symbol, b.coeff});
            } else if (b0) {
                out.push_back({std::move(s), a.symbol, a.coeff});
            } else if (a.symbol == b.symbol) {
                out.push_back({std::move(s), a.symbol, a.coeff + b.coeff});
            } else if (s.is_finite()) {
                for (std::uint64_t i : s.first_members(s.prefix_size() + 1)) {
                    Rat va = a.coeff.value(Int(i)), vb = b.coeff.value(Int(i));
                    TorusValue sum = (a.symbol == kSymbolOne ? TorusValue::from_rational(va)
                                                             : TorusValue::symbol_multiple(a.symbol, va)) +
                                     (b.symbol == kSymbolOne ? TorusValue::from_rational(vb)
                                                             : TorusValue::symbol_multiple(b.symbol, vb));
                    auto [sym, c] = pure_components(sum);
                    out.push_back({IndexSet::single(i), sym, RationalFunction::from_rat(c)});
                }
            } else {
                throw Unrepresentable("sum needs symbols tau-" + std::to_string(a.symbol) +
                                      " and tau-" + std::to_string(b.symbol) +
                                      " on one infinite cell");
            }
        }
    return from_cells(std::move(out));
}

CharacterPresentation CharacterPresentation::operator-() const {
    std::vector<Cell> out;
    for (const Cell& c : cells_) out.push_back({c.support, c.symbol, -c.coeff});
    return from_cells(std::move(out));
}

// ---- operations -------------------------------------------------------------

Int pair(const FinSupportVector& g, const IntSeq& x) {
    Int acc = 0;
    for (const auto& [i, v] : g.entries()) acc += v * x.eval(i);
    return acc;
}

Rat pair(const FinSupportVector& g, const RatSeq& x) {
    Rat acc = 0;
    for (const auto& [i, v] : g.entries()) acc += Rat(v) * x.eval(i);
    return acc;
}

TorusValue char_eval(const CharacterPresentation& t, const FinSupportVector& g) {
    std::vector<std::pair<Int, TorusValue>> terms;
    terms.reserve(g.entries().size());
    for (const auto& [i, v] : g.entries()) terms.emplace_back(v, t.eval(i));
    return torus_combine(terms);
}

CharacterPresentation restrict_character(const CharacterPresentation& t, const IndexSet& j) {
    std::vector<CharacterPresentation::Cell> out;
    for (const auto& c : t.cells()) {
        IndexSet s = c.support.intersect(j);
        if (!s.is_empty()) out.push_back({std::move(s), c.symbol, c.coeff});
    }
    IndexSet off = j.complement();
    if (!off.is_empty()) out.push_back({std::move(off), kSymbolOne, RationalFunction()});
    return CharacterPresentation::from_cells(std::move(out));
}

DenominatorProfile denominator_profile(const RatSeq& r, const IndexSet& j) {
    const auto& cells = r.cells();
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        IndexSet sj = cells[ci].support.intersect(j);
        if (sj.is_infinite() && !cells[ci].func.has_constant_denominator())
            return {DenominatorProfile::Unbounded{ci, cells[ci].func.den()}};
    }
    std::map<Int, std::pair<std::vector<bool>, std::vector<bool>>> bits;  // den -> grid bits
    std::uint64_t p = j.prefix_size(), l = j.period_size();
    for (const auto& c : r.cells()) {
        p = std::max(p, c.support.prefix_size());
        l = lcm_u64(l, c.support.period_size());
    }
    std::uint64_t lb = l;
    for (const auto& c : r.cells())
        if (c.func.has_constant_denominator()) {
            Int b = c.func.constant_denominator();
            if (b >= 1000000) throw TooLarge("stratification over denominator " + b.str());
            if (b > 1) lb = lcm_u64(lb, b.convert_to<std::uint64_t>());
            if (lb > 4000000) throw TooLarge("stratification grid too large");
        }
    l = lb;
    auto mark = [&](const Int& den, std::uint64_t pos, bool periodic) {
        auto& [pre, per] = bits.try_emplace(den, std::vector<bool>(p), std::vector<bool>(l)).first->second;
        if (periodic)
            per[pos] = true;
        else
            pre[pos] = true;
    };
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const auto& cell = cells[ci];
        IndexSet sj = cell.support.intersect(j);
        if (sj.is_empty()) continue;
        if (cell.func.has_constant_denominator()) {
            Int b = cell.func.constant_denominator();
            const Poly& num = cell.func.num();
            for (std::uint64_t i = 0; i < p; ++i)
                if (sj.contains(i)) mark(b / gcd(num.eval(Int(i)), b), i, false);
            for (std::uint64_t rr = 0; rr < l; ++rr)
                if (sj.contains(p + rr)) mark(b / gcd(num.eval(Int(p + rr)), b), rr, true);
        } else {
            // finite leftover of an unbounded cell: stratify pointwise
            for (std::uint64_t i : sj.first_members(sj.prefix_size() + 1))
                mark(Int(denominator(cell.func.value(Int(i)))), i, false);
        }
    }
    DenominatorProfile::Bounded bounded;
    for (auto& [den, pp] : bits) {
        IndexSet s(std::move(pp.first), std::move(pp.second));
        if (!s.is_empty()) bounded.strata.emplace(den, std::move(s));
    }
    return {std::move(bounded)};
}

}  // namespace produal
