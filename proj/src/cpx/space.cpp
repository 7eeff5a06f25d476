#include "produal/cpx/cpx.hpp"

#include "produal/errors.hpp"

namespace produal {

IntFunction IntFunction::on_finite(std::vector<Int> values) {
    IntFunction f;
    f.space_ = SpaceModel::finite_discrete(values.size());
    f.values_ = std::move(values);
    return f;
}

IntFunction IntFunction::on_sequence(IntSeq seq, Int limit) {
    IntFunction f;
    f.space_ = SpaceModel::convergent_sequence();
    f.seq_ = std::move(seq);
    f.limit_ = std::move(limit);
    return f;
}

Int IntFunction::at(const Point& p) const {
    if (space_.kind == SpaceModel::Kind::FiniteDiscrete) {
        if (p.at_infinity || p.index >= values_.size())
            throw Error("point outside the finite space");
        return values_[p.index];
    }
    return p.at_infinity ? limit_ : seq_.eval(p.index);
}

IntFunction IntFunction::pointwise_mod(const Int& m) const {
    auto residue = [&](const Int& v) {
        Int r = v % m;
        if (r < 0) r += m;
        return r;
    };
    if (space_.kind == SpaceModel::Kind::FiniteDiscrete) {
        std::vector<Int> vals = values_;
        for (Int& v : vals) v = residue(v);
        return on_finite(std::move(vals));
    }
    if (m >= 1000000) throw TooLarge("residue grid over modulus " + m.str());
    std::uint64_t mm = m.convert_to<std::uint64_t>();
    std::vector<IntSeq::Cell> cells;
    for (const auto& cell : seq_.cells()) {
        if (cell.poly.is_constant()) {
            cells.push_back({cell.support, Poly::constant(residue(cell.poly.coeff(0)))});
            continue;
        }
        // polynomial values mod m are m-periodic, so residues are constant on
        // the classes of the lcm(cell period, m) grid
        std::uint64_t p = cell.support.prefix_size();
        std::uint64_t l = lcm_u64(cell.support.period_size(), mm);
        for (std::uint64_t i = 0; i < p; ++i)
            if (cell.support.contains(i))
                cells.push_back({IndexSet::single(i), Poly::constant(residue(cell.poly.eval(Int(i))))});
        for (std::uint64_t r = 0; r < l; ++r) {
            if (!cell.support.contains(p + r)) continue;
            std::vector<bool> period(l, false);
            period[r] = true;
            IndexSet cls(std::vector<bool>(p, false), std::move(period));
            cells.push_back({cls.intersect(cell.support),
                             Poly::constant(residue(cell.poly.eval(Int(p + r))))});
        }
    }
    return on_sequence(IntSeq::from_cells(std::move(cells)), residue(limit_));
}

void FreePoint::add(const Point& p, const Int& c) {
    if (c == 0) return;
    Int& slot = terms[p];
    slot += c;
    if (slot == 0) terms.erase(p);
}

Int apply_free_point(const FreePoint& phi, const IntFunction& f) {
    Int acc = 0;
    for (const auto& [p, c] : phi.terms) acc += c * f.at(p);
    return acc;
}

ContinuityResult is_continuous(const IntFunction& f) {
    if (f.space().kind == SpaceModel::Kind::FiniteDiscrete) return {true, IndexSet::empty()};
    IndexSet mismatch = IndexSet::empty();
    for (const auto& cell : f.sequence().cells()) {
        Poly diff = cell.poly - Poly::constant(f.limit_value());
        if (diff.is_zero()) continue;
        IndexSet bad = cell.support;
        for (const Int& root : natural_roots(diff)) {
            if (root >= 1000000) throw TooLarge("continuity witness beyond index bound");
            bad = bad.intersect(IndexSet::single(root.convert_to<std::uint64_t>()).complement());
        }
        mismatch = mismatch.unite(bad);
    }
    if (mismatch.is_finite()) return {true, IndexSet::empty()};
    return {false, mismatch};
}

std::vector<Point> support_of_hom(const SpaceModel& x, const FreePoint& phi) {
    std::vector<Point> out;
    for (const auto& [p, c] : phi.terms) {
        if (x.kind == SpaceModel::Kind::FiniteDiscrete &&
            (p.at_infinity || p.index >= x.points))
            throw Error("free point outside the space");
        out.push_back(p);
    }
    return out;  // map order = sorted
}

TorusValue theta_eval(const IntFunction& f, const TorusValue& t, const FreePoint& phi) {
    return torus_combine({{apply_free_point(phi, f), t}});
}

RealLift extend_character(const SpaceModel& x, const std::map<Point, TorusValue>& chi) {
    RealLift lift;
    for (const auto& [p, v] : chi) {
        if (x.kind == SpaceModel::Kind::FiniteDiscrete &&
            (p.at_infinity || p.index >= x.points))
            throw Error("character point outside the space");
        if (v.is_zero()) continue;
        RealLift::Coefficient c;
        c.lambda = frac_part(v.rational_part());
        c.irrational = v.irrational_coeffs();
        lift.coefficients.emplace(p, std::move(c));
    }
    return lift;
}

TorusValue RealLift::eval(const IntFunction& f) const {
    Rat acc = 0;
    TorusValue irr;
    for (const auto& [p, c] : coefficients) {
        Int v = f.at(p);
        acc += c.lambda * v;
        for (const auto& [sym, coeff] : c.irrational)
            irr = irr + TorusValue::symbol_multiple(sym, coeff * v);
    }
    return TorusValue::from_rational(acc) + irr;
}

}  // namespace produal
