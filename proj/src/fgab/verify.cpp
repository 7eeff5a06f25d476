#include "produal/errors.hpp"
#include "produal/fgab/fgab.hpp"

#include <sstream>

namespace produal {

namespace {

// all generator tables of bihomomorphisms G x H -> B
std::vector<std::vector<std::vector<GroupElement>>> enumerate_bihoms(const FGAbelianGroup& g,
                                                                     const FGAbelianGroup& h,
                                                                     const FGAbelianGroup& b,
                                                                     const Int& guard) {
    std::size_t ng = g.factor_count(), nh = h.factor_count();
    std::vector<GroupElement> eb = enumerate_elements(b);
    // choices per generator pair: elements killed by gcd of the two orders
    std::vector<std::vector<GroupElement>> choices(ng * nh);
    Int total = 1;
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < nh; ++j) {
            Int k = gcd(g.invariant_factors[i], h.invariant_factors[j]);
            for (const GroupElement& e : eb)
                if (scale(b, k, e).is_zero()) choices[i * nh + j].push_back(e);
            total *= Int(choices[i * nh + j].size());
            if (total > guard * guard) throw TooLarge("bihomomorphism family of size " + total.str());
        }
    std::vector<std::vector<std::vector<GroupElement>>> out;
    std::vector<std::size_t> counter(ng * nh, 0);
    for (Int n = 0; n < total; ++n) {
        std::vector<std::vector<GroupElement>> table(ng, std::vector<GroupElement>(nh));
        for (std::size_t i = 0; i < ng; ++i)
            for (std::size_t j = 0; j < nh; ++j) table[i][j] = choices[i * nh + j][counter[i * nh + j]];
        out.push_back(std::move(table));
        for (std::size_t k = ng * nh; k-- > 0;) {
            if (++counter[k] < choices[k].size()) break;
            counter[k] = 0;
        }
    }
    return out;
}

GroupElement bihom_eval(const FGAbelianGroup& g, const FGAbelianGroup& h, const FGAbelianGroup& b,
                        const std::vector<std::vector<GroupElement>>& table, const GroupElement& a,
                        const GroupElement& c) {
    GroupElement acc = zero_element(b);
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = 0; j < table[i].size(); ++j)
            acc = add(b, acc, scale(b, a.coords[i] * c.coords[j], table[i][j]));
    return acc;
}

}  // namespace

std::optional<FailureReport> verify_universal_property(const FGAbelianGroup& g,
                                                       const FGAbelianGroup& h,
                                                       const FGAbelianGroup& b,
                                                       const Int& guard) {
    TensorConstruction t = tensor_construct(g, h, guard);
    std::size_t nt = t.group.factor_count();
    std::vector<GroupElement> eb = enumerate_elements(b);

    // generator pairs and their images under the canonical bimap
    std::vector<std::pair<GroupElement, GroupElement>> gen_pairs;
    for (std::size_t i = 0; i < g.factor_count(); ++i)
        for (std::size_t j = 0; j < h.factor_count(); ++j) {
            GroupElement a = zero_element(g), c = zero_element(h);
            a.coords[i] = 1;
            c.coords[j] = 1;
            gen_pairs.emplace_back(a, c);
        }
    auto bimap_of = [&](const GroupElement& a, const GroupElement& c) -> const GroupElement& {
        std::size_t ia = std::lower_bound(t.lhs_elements.begin(), t.lhs_elements.end(), a) -
                         t.lhs_elements.begin();
        std::size_t ic = std::lower_bound(t.rhs_elements.begin(), t.rhs_elements.end(), c) -
                         t.rhs_elements.begin();
        return t.bimap[ia][ic];
    };

    for (const auto& table : enumerate_bihoms(g, h, b, guard)) {
        // factorizations through the tensor: images w_k of the normal-form
        // basis; two bilinear maps agreeing on generator pairs agree, so the
        // generator pairs decide b-tilde о bimap == b
        std::size_t found = 0;
        std::vector<std::size_t> counter(nt, 0);
        Int wtotal = 1;
        for (std::size_t k = 0; k < nt; ++k) wtotal *= Int(eb.size());
        for (Int n = 0; n < wtotal; ++n) {
            std::vector<GroupElement> w(nt);
            for (std::size_t k = 0; k < nt; ++k) w[k] = eb[counter[k]];
            bool hom_ok = true;
            for (std::size_t k = 0; hom_ok && k < nt; ++k)
                if (!scale(b, t.group.invariant_factors[k], w[k]).is_zero()) hom_ok = false;
            if (hom_ok) {
                bool match = true;
                for (const auto& [a, c] : gen_pairs) {
                    const GroupElement& m = bimap_of(a, c);
                    GroupElement img = zero_element(b);
                    for (std::size_t k = 0; k < nt; ++k)
                        img = add(b, img, scale(b, m.coords[k], w[k]));
                    if (!(img == bihom_eval(g, h, b, table, a, c))) {
                        match = false;
                        break;
                    }
                }
                if (match) ++found;
            }
            for (std::size_t k = nt; k-- > 0;) {
                if (++counter[k] < eb.size()) break;
                counter[k] = 0;
            }
        }
        if (found != 1) {
            std::ostringstream msg;
            msg << "bihomomorphism admits " << found << " factorizations through "
                << t.group.str();
            return FailureReport{msg.str()};
        }
    }
    return std::nullopt;
}

DualTensorReport verify_dual_of_tensor(const FGAbelianGroup& g, const FGAbelianGroup& h,
                                       const Int& guard) {
    DualTensorReport report;
    TensorConstruction t = tensor_construct(g, h, guard);
    std::vector<Bicharacter> bichars = enumerate_bicharacters(g, h);
    std::vector<GroupElement> duals = enumerate_elements(dual_group(t.group));
    report.bicharacter_count = Int(bichars.size());
    report.tensor_dual_count = Int(duals.size());

    std::vector<std::pair<GroupElement, GroupElement>> gen_pairs;
    for (std::size_t i = 0; i < g.factor_count(); ++i)
        for (std::size_t j = 0; j < h.factor_count(); ++j) {
            GroupElement a = zero_element(g), c = zero_element(h);
            a.coords[i] = 1;
            c.coords[j] = 1;
            gen_pairs.emplace_back(a, c);
        }
    auto bimap_of = [&](const GroupElement& a, const GroupElement& c) -> const GroupElement& {
        std::size_t ia = std::lower_bound(t.lhs_elements.begin(), t.lhs_elements.end(), a) -
                         t.lhs_elements.begin();
        std::size_t ic = std::lower_bound(t.rhs_elements.begin(), t.rhs_elements.end(), c) -
                         t.rhs_elements.begin();
        return t.bimap[ia][ic];
    };

    std::vector<GroupElement> images;
    for (const Bicharacter& beta : bichars) {
        // the unique dual element whose pullback through the bimap is beta
        std::vector<GroupElement> matches;
        for (const GroupElement& chi : duals) {
            bool ok = true;
            for (const auto& [a, c] : gen_pairs)
                if (!(character_pairing(t.group, chi, bimap_of(a, c)) == beta.eval(a, c))) {
                    ok = false;
                    break;
                }
            if (ok) matches.push_back(chi);
        }
        if (matches.size() != 1) {
            report.what = "bicharacter realized by " + std::to_string(matches.size()) +
                          " characters of the tensor";
            return report;
        }
        images.push_back(matches.front());
        report.iso_witness.emplace_back(beta.table, matches.front());
    }
    // injectivity and counting give bijectivity
    std::vector<GroupElement> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        report.what = "canonical map is not injective";
        return report;
    }
    if (images.size() != duals.size()) {
        report.what = "bicharacter group and tensor dual differ in order";
        return report;
    }
    // additivity on a full pass of pairs
    for (std::size_t x = 0; x < bichars.size(); ++x)
        for (std::size_t y = x; y < bichars.size(); ++y) {
            Bicharacter sum = bichars[x].plus(bichars[y]);
            std::size_t idx =
                std::find(bichars.begin(), bichars.end(), sum) - bichars.begin();
            GroupElement expect = add(t.group, images[x], images[y]);
            if (!(images[idx] == expect)) {
                report.what = "canonical map is not additive";
                return report;
            }
        }
    report.ok = true;
    return report;
}

}  // namespace produal
