#include "produal/errors.hpp"
#include "produal/seq/sequences.hpp"

#include <algorithm>
#include <optional>

// Canonical forms.  A presentation is refined onto its prefix/period grid
// (p0, l0); for each step-d congruence class we decide whether the values on
// the class follow a single closed form, scanning d upward from 1.  The
// decision and the chosen form depend only on the values, never on how the
// input cells happened to be split, which is what makes the result canonical:
//
//  * integer / rational cells carry exact formulas, so a class merges iff all
//    covered formulas are identical;
//  * rational-coefficient cells of a character are only determined mod 1, so
//    a class merges iff the step-d finite differences eventually vanish mod 1;
//    the form is then rebuilt from difference values (discrete Taylor) and
//    reduced to the unique representative whose binomial coordinates on the
//    residue-anchored arithmetic progression lie in [0, 1).
//
// After the period scan, the prefix is shrunk while values keep matching the
// periodic labels, and the remaining exceptional indices are grouped by value.

namespace produal {
namespace {

constexpr unsigned kDegreeCap = 64;  // single-form search stops at this degree
constexpr std::uint64_t kGridCap = 2400;

// psi(k) = phi(s + m*k)
QPoly on_ap(const QPoly& phi, std::uint64_t s, std::uint64_t m) {
    return phi.substitute(QPoly(std::vector<Rat>{Rat(s), Rat(m)}));
}

bool integer_valued_on_ap(const QPoly& phi, std::uint64_t s, std::uint64_t m) {
    return is_integer_valued(on_ap(phi, s, m));
}

// Unique representative of phi modulo polynomials that are integer-valued on
// {i == s (mod m)}: binomial coordinates reduced into [0, 1).
QPoly reduce_on_ap(const QPoly& phi, std::uint64_t s, std::uint64_t m) {
    QPoly psi = on_ap(phi, s, m);
    std::vector<Rat> coords = binomial_coords(psi);
    QPoly hat;
    for (std::size_t e = 0; e < coords.size(); ++e) {
        Rat f = frac_part(coords[e]);
        if (f != 0) hat = hat + binomial_poly(static_cast<unsigned>(e)).scaled(f);
    }
    // back to the index variable: k = (i - s)/m
    QPoly back(std::vector<Rat>{Rat(-Int(s), Int(m)), Rat(1, Int(m))});
    return hat.substitute(back);
}

template <class Cell>
void validate_partition(const std::vector<Cell>& cells) {
    IndexSet u = IndexSet::empty();
    for (std::size_t a = 0; a < cells.size(); ++a) {
        for (std::size_t b = a + 1; b < cells.size(); ++b)
            if (!cells[a].support.disjoint_with(cells[b].support))
                throw PresentationInvalid("cells overlap");
        u = u.unite(cells[a].support);
    }
    if (!u.is_all()) throw PresentationInvalid("cells do not cover the index set");
}

// ---- label policies ---------------------------------------------------------

struct IntPolicy {
    using Label = Poly;
    static std::optional<Label> merge(const std::vector<std::uint64_t>&,
                                      const std::vector<const Label*>& labs, std::uint64_t,
                                      std::uint64_t, std::uint64_t, std::uint64_t) {
        for (const Label* l : labs)
            if (!(*l == *labs[0])) return std::nullopt;
        return *labs[0];
    }
    static bool value_match(const Label& owner, std::uint64_t i, const Label& cand) {
        return owner.eval(Int(i)) == cand.eval(Int(i));
    }
    static Label exceptional(const Label& owner, std::uint64_t i) {
        return Poly::constant(owner.eval(Int(i)));
    }
};

struct RatPolicy {
    using Label = RationalFunction;
    static std::optional<Label> merge(const std::vector<std::uint64_t>&,
                                      const std::vector<const Label*>& labs, std::uint64_t,
                                      std::uint64_t, std::uint64_t, std::uint64_t) {
        for (const Label* l : labs)
            if (!(*l == *labs[0])) return std::nullopt;
        return *labs[0];
    }
    static bool value_match(const Label& owner, std::uint64_t i, const Label& cand) {
        return owner.value(Int(i)) == cand.value(Int(i));
    }
    static Label exceptional(const Label& owner, std::uint64_t i) {
        return RationalFunction::from_rat(owner.value(Int(i)));
    }
};

struct CharLabel {
    int symbol = kSymbolOne;
    RationalFunction coeff;
    bool operator==(const CharLabel&) const = default;
};

TorusValue label_value(const CharLabel& l, std::uint64_t i) {
    Rat v = l.coeff.value(Int(i));
    if (l.symbol == kSymbolOne) return TorusValue::from_rational(v);
    return TorusValue::symbol_multiple(l.symbol, v);
}

struct CharPolicy {
    using Label = CharLabel;

    static std::optional<Label> merge(const std::vector<std::uint64_t>& subs,
                                      const std::vector<const Label*>& labs, std::uint64_t d,
                                      std::uint64_t rho, std::uint64_t m, std::uint64_t p0) {
        int sym = kSymbolOne;
        for (const Label* l : labs)
            if (!l->coeff.is_zero() && l->symbol != kSymbolOne) {
                if (sym != kSymbolOne && sym != l->symbol) return std::nullopt;
                sym = l->symbol;
            }
        if (sym != kSymbolOne) {
            // exact component: no mod-1 slack, all pieces must agree
            const RationalFunction* c = nullptr;
            for (const Label* l : labs) {
                if (l->coeff.is_zero() || l->symbol != sym) return std::nullopt;
                if (!c)
                    c = &l->coeff;
                else if (!(*c == l->coeff))
                    return std::nullopt;
            }
            return Label{sym, *c};
        }
        // rational component, determined mod 1
        std::vector<QPoly> polys;
        polys.reserve(labs.size());
        RationalFunction proper;
        for (std::size_t t = 0; t < labs.size(); ++t) {
            auto [pp, pr] = labs[t]->coeff.proper_split();
            if (t == 0)
                proper = pr;
            else if (!(proper == pr))
                return std::nullopt;
            polys.push_back(std::move(pp));
        }
        QPoly nuhat;
        if (labs.size() == 1) {
            nuhat = reduce_on_ap(polys[0], subs[0], m);
        } else {
            std::vector<std::vector<QPoly>> levels{polys};
            int deg_found = -1;
            for (unsigned lev = 1; lev <= kDegreeCap + 1; ++lev) {
                const std::vector<QPoly>& cur = levels.back();
                std::vector<QPoly> nxt(cur.size());
                for (std::size_t t = 0; t < cur.size(); ++t)
                    nxt[t] = cur[(t + 1) % cur.size()].shifted(Rat(d)) - cur[t];
                bool flat = true;
                for (std::size_t t = 0; flat && t < nxt.size(); ++t)
                    if (!integer_valued_on_ap(nxt[t], subs[t], m)) flat = false;
                levels.push_back(std::move(nxt));
                if (flat) {
                    deg_found = static_cast<int>(lev) - 1;
                    break;
                }
            }
            if (deg_found < 0) return std::nullopt;
            // discrete Taylor at the first class member
            std::uint64_t ib = p0 + (rho + d - p0 % d) % d;
            std::uint64_t pos = ((ib % m) - rho) / d;
            QPoly nu;
            for (int e = 0; e <= deg_found; ++e) {
                Rat g = frac_part(levels[e][pos].eval(Rat(ib)));
                if (g == 0) continue;
                QPoly inner(std::vector<Rat>{Rat(-Int(ib), Int(d)), Rat(1, Int(d))});
                nu = nu + binomial_poly(static_cast<unsigned>(e)).substitute(inner).scaled(g);
            }
            nuhat = reduce_on_ap(nu, rho, d);
            for (std::size_t t = 0; t < polys.size(); ++t)
                if (!integer_valued_on_ap(nuhat - polys[t], subs[t], m)) return std::nullopt;
        }
        RationalFunction coeff = RationalFunction::from_qpoly(nuhat) + proper;
        if (coeff.is_zero()) return Label{kSymbolOne, RationalFunction()};
        return Label{kSymbolOne, coeff};
    }

    static bool value_match(const Label& owner, std::uint64_t i, const Label& cand) {
        return label_value(owner, i) == label_value(cand, i);
    }
    static Label exceptional(const Label& owner, std::uint64_t i) {
        Rat v = owner.coeff.value(Int(i));
        if (owner.symbol != kSymbolOne && v != 0)
            return {owner.symbol, RationalFunction::from_rat(v)};
        Rat f = frac_part(v);
        if (f == 0) return {kSymbolOne, RationalFunction()};
        return {kSymbolOne, RationalFunction::from_rat(f)};
    }
};

// ---- generic driver ---------------------------------------------------------

template <class Policy>
std::vector<std::pair<IndexSet, typename Policy::Label>> canonical_cells(
    std::vector<std::pair<IndexSet, typename Policy::Label>> in) {
    using Label = typename Policy::Label;

    std::uint64_t p0 = 0, l0 = 1;
    for (const auto& [s, lab] : in) {
        p0 = std::max(p0, s.prefix_size());
        l0 = lcm_u64(l0, s.period_size());
        if (l0 > kGridCap || p0 > 200000) throw TooLarge("presentation grid too large");
    }
    auto owner = [&](std::uint64_t i) -> const Label& {
        for (const auto& [s, lab] : in)
            if (s.contains(i)) return lab;
        throw PresentationInvalid("index not covered");
    };

    // labels of the step-l0 classes, by absolute residue
    std::vector<const Label*> class_label(l0);
    for (std::uint64_t s = 0; s < l0; ++s) {
        std::uint64_t i = p0 + (s + l0 - p0 % l0) % l0;
        class_label[s] = &owner(i);
    }

    // minimal d such that every step-d class follows a single form
    std::uint64_t lstar = l0;
    std::vector<Label> final_label(l0);
    for (std::uint64_t d = 1; d <= l0; ++d) {
        std::uint64_t m = lcm_u64(l0, d);
        std::vector<Label> merged(d);
        bool ok = true;
        for (std::uint64_t rho = 0; ok && rho < d; ++rho) {
            std::vector<std::uint64_t> subs;
            std::vector<const Label*> labs;
            for (std::uint64_t s = rho; s < m; s += d) {
                subs.push_back(s);
                labs.push_back(class_label[s % l0]);
            }
            auto got = Policy::merge(subs, labs, d, rho, m, p0);
            if (!got)
                ok = false;
            else
                merged[rho] = std::move(*got);
        }
        if (ok) {
            lstar = d;
            final_label = std::move(merged);
            break;
        }
    }

    // shrink the prefix while values keep matching the periodic labels
    std::uint64_t pstar = p0;
    while (pstar > 0) {
        std::uint64_t i = pstar - 1;
        if (!Policy::value_match(owner(i), i, final_label[i % lstar])) break;
        --pstar;
    }

    // group by label
    std::vector<Label> labels;
    std::vector<std::pair<std::vector<bool>, std::vector<bool>>> bits;
    auto slot = [&](const Label& l) -> std::size_t {
        for (std::size_t k = 0; k < labels.size(); ++k)
            if (labels[k] == l) return k;
        labels.push_back(l);
        bits.emplace_back(std::vector<bool>(pstar), std::vector<bool>(lstar));
        return labels.size() - 1;
    };
    for (std::uint64_t i = 0; i < pstar; ++i)
        bits[slot(Policy::exceptional(owner(i), i))].first[i] = true;
    for (std::uint64_t j = 0; j < lstar; ++j)
        bits[slot(final_label[(pstar + j) % lstar])].second[j] = true;

    std::vector<std::pair<IndexSet, Label>> out;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        IndexSet s(std::move(bits[k].first), std::move(bits[k].second));
        if (!s.is_empty()) out.emplace_back(std::move(s), std::move(labels[k]));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.first.first().value() < b.first.first().value();
    });
    return out;
}

}  // namespace

IntSeq canonicalize_int_seq(std::vector<IntSeq::Cell> cells) {
    std::erase_if(cells, [](const IntSeq::Cell& c) { return c.support.is_empty(); });
    validate_partition(cells);
    std::vector<std::pair<IndexSet, Poly>> in;
    in.reserve(cells.size());
    for (auto& c : cells) in.emplace_back(std::move(c.support), std::move(c.poly));
    IntSeq s;
    s.cells_.clear();
    for (auto& [sup, lab] : canonical_cells<IntPolicy>(std::move(in)))
        s.cells_.push_back({std::move(sup), std::move(lab)});
    return s;
}

RatSeq canonicalize_rat_seq(std::vector<RatSeq::Cell> cells) {
    std::erase_if(cells, [](const RatSeq::Cell& c) { return c.support.is_empty(); });
    validate_partition(cells);
    std::vector<std::pair<IndexSet, RationalFunction>> in;
    in.reserve(cells.size());
    for (auto& c : cells) {
        c.func.check_denominator_roots();
        in.emplace_back(std::move(c.support), std::move(c.func));
    }
    RatSeq s;
    s.cells_.clear();
    for (auto& [sup, lab] : canonical_cells<RatPolicy>(std::move(in)))
        s.cells_.push_back({std::move(sup), std::move(lab)});
    return s;
}

CharacterPresentation canonicalize_character(std::vector<CharacterPresentation::Cell> cells) {
    std::erase_if(cells,
                  [](const CharacterPresentation::Cell& c) { return c.support.is_empty(); });
    validate_partition(cells);
    std::vector<std::pair<IndexSet, CharLabel>> in;
    in.reserve(cells.size());
    for (auto& c : cells) {
        c.coeff.check_denominator_roots();
        int sym = c.coeff.is_zero() ? kSymbolOne : c.symbol;
        if (sym < 0) throw PresentationInvalid("negative symbol id");
        in.emplace_back(std::move(c.support), CharLabel{sym, std::move(c.coeff)});
    }
    CharacterPresentation t;
    t.cells_.clear();
    for (auto& [sup, lab] : canonical_cells<CharPolicy>(std::move(in)))
        t.cells_.push_back({std::move(sup), lab.symbol, std::move(lab.coeff)});
    return t;
}

}  // namespace produal
