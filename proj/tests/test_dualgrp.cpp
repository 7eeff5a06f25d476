#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "produal/dualgrp/dual.hpp"
#include "produal/errors.hpp"

using namespace produal;
using produal::testgen::CharGen;

namespace {

IndexSet evens() { return IndexSet::residue_class(0, 2); }
IndexSet odds() { return IndexSet::residue_class(1, 2); }

RationalFunction rf(std::vector<long long> num, std::vector<long long> den = {1}) {
    return RationalFunction(Poly(std::vector<Int>(num.begin(), num.end())),
                            Poly(std::vector<Int>(den.begin(), den.end())));
}

CharacterPresentation harmonic() {
    return CharacterPresentation::from_cells({{IndexSet::all(), kSymbolOne, rf({1}, {1, 1})}});
}

}  // namespace

TEST_CASE("membership examples") {
    SUBCASE("1/(i+1) is rejected with certificate i+1") {
        MembershipVerdict v = decide_membership(harmonic());
        REQUIRE(!v.in_dual());
        CHECK(v.out().certificate.reduced_denominator.str() == "i+1");
        CHECK(v.out().certificate.reduced_denominator.degree() >= 1);
        CHECK(v.out().certificate.symbol == kSymbolOne);
    }
    SUBCASE("constant 1/2 decomposes as all-ones tensor 1/2") {
        MembershipVerdict v = decide_membership(CharacterPresentation::constant(kSymbolOne, Rat(1, 2)));
        REQUIRE(v.in_dual());
        const TensorSum& s = v.in().decomposition;
        REQUIRE(s.terms.size() == 1);
        CHECK(s.terms[0].vector == IntSeq::constant(1));
        CHECK(s.terms[0].value == TorusValue::from_rational(Rat(1, 2)));
        // witness: all-ones * 2/2
        REQUIRE(v.in().witness.vectors.size() == 1);
        CHECK(v.in().witness.vectors[0] == IntSeq::constant(1));
    }
    SUBCASE("tau1/2 on evens, 3/5 on odds") {
        CharacterPresentation t = CharacterPresentation::from_cells(
            {{evens(), 1, rf({1}, {2})}, {odds(), kSymbolOne, rf({3}, {5})}});
        MembershipVerdict v = decide_membership(t);
        REQUIRE(v.in_dual());
        const TensorSum& s = v.in().decomposition;
        REQUIRE(s.terms.size() == 2);
        // rational component first, then tau1
        CHECK(s.terms[0].vector == IntSeq::indicator(odds(), 3));
        CHECK(s.terms[0].value == TorusValue::from_rational(Rat(1, 5)));
        CHECK(s.terms[1].vector == IntSeq::indicator(evens(), 1));
        CHECK(s.terms[1].value == TorusValue::symbol_multiple(1, Rat(1, 2)));
        // cross-check on random vectors
        CharGen gen(3);
        for (int k = 0; k < 100; ++k) {
            FinSupportVector g = gen.random_vector();
            CHECK(tensor_eval(s, g) == char_eval(t, g));
        }
    }
}

TEST_CASE("decompose examples") {
    CHECK(decompose(CharacterPresentation::constant(kSymbolOne, Rat(1, 2))).terms.size() == 1);
    CHECK(decompose(CharacterPresentation::zero()).terms.empty());
    CHECK_THROWS_AS(decompose(harmonic()), NotInDualError);
    SUBCASE("t(i) = i/2") {
        CharacterPresentation t = CharacterPresentation::from_cells(
            {{IndexSet::all(), kSymbolOne, rf({0, 1}, {2})}});
        TensorSum s = decompose(t);
        CharacterPresentation back = tensor_to_pointwise(s);
        for (std::uint64_t i = 0; i <= 50; ++i)
            CHECK(back.eval(i) == TorusValue::from_rational(Rat(i, 2)));
    }
}

TEST_CASE("tensor_eval examples") {
    TensorSum ones_half{{{IntSeq::constant(1), TorusValue::from_rational(Rat(1, 2))}}};
    CHECK(tensor_eval(ones_half, FinSupportVector::unit(0)) ==
          TorusValue::from_rational(Rat(1, 2)));
    FinSupportVector g2;
    g2.add(0, 2);
    CHECK(tensor_eval(ones_half, g2).is_zero());
    // pair value 4 against tau1: 4*tau1 canonic
    TensorSum s{{{IntSeq::constant(2), TorusValue::symbol_multiple(1, Rat(1))}}};
    CHECK(tensor_eval(s, g2) == TorusValue::symbol_multiple(1, Rat(4)));
}

TEST_CASE("tensor_to_pointwise examples") {
    TensorSum ones_half{{{IntSeq::constant(1), TorusValue::from_rational(Rat(1, 2))}}};
    CHECK(tensor_to_pointwise(ones_half) == CharacterPresentation::constant(kSymbolOne, Rat(1, 2)));
    CHECK(tensor_to_pointwise(TensorSum{}).is_zero());
    TensorSum split{{{IntSeq::indicator(evens()), TorusValue::from_rational(Rat(1, 3))},
                     {IntSeq::indicator(odds()), TorusValue::from_rational(Rat(1, 3))}}};
    CHECK(tensor_to_pointwise(split) == CharacterPresentation::constant(kSymbolOne, Rat(1, 3)));
    // cancelling tau-terms are fine, genuine collisions are not
    TensorSum cancel{{{IntSeq::constant(1), TorusValue::symbol_multiple(2, Rat(1, 3))},
                      {IntSeq::constant(-1), TorusValue::symbol_multiple(2, Rat(1, 3))}}};
    CHECK(tensor_to_pointwise(cancel).is_zero());
    TensorSum clash{{{IntSeq::constant(1), TorusValue::symbol_multiple(1, Rat(1, 2))},
                     {IntSeq::constant(1), TorusValue::symbol_multiple(2, Rat(1, 3))}}};
    CHECK_THROWS_AS(tensor_to_pointwise(clash), Unrepresentable);
}

TEST_CASE("char_equal examples") {
    CharacterPresentation half = CharacterPresentation::constant(kSymbolOne, Rat(1, 2));
    CHECK(char_equal(half, tensor_to_pointwise(decompose(half))).equal);
    CHECK(char_equal(half, CharacterPresentation::constant(kSymbolOne, Rat(-1, 2))).equal);
    CharacterPresentation third_on_evens = CharacterPresentation::from_cells(
        {{evens(), kSymbolOne, rf({1}, {3})}, {odds(), kSymbolOne, rf({0})}});
    CharComparison c = char_equal(third_on_evens, CharacterPresentation::constant(kSymbolOne, Rat(1, 3)));
    REQUIRE(!c.equal);
    CHECK(c.witness == 1);
    CHECK(third_on_evens.eval(c.witness) !=
          CharacterPresentation::constant(kSymbolOne, Rat(1, 3)).eval(c.witness));
}

TEST_CASE("annihilator witness examples") {
    SUBCASE("all-ones over evens") {
        FinSupportVector g = annihilator_witness({IntSeq::constant(1)}, evens());
        FinSupportVector expect;
        expect.add(0, 1);
        expect.add(2, -1);
        CHECK(g == expect);  // e0 - e2
    }
    SUBCASE("two sequences over N") {
        FinSupportVector g = annihilator_witness({IntSeq::constant(1), IntSeq::of_poly(Poly({1, 1}))},
                                                 IndexSet::all());
        FinSupportVector expect;
        expect.add(0, 1);
        expect.add(1, -2);
        expect.add(2, 1);
        CHECK(g == expect);
    }
    SUBCASE("empty family") {
        FinSupportVector g = annihilator_witness({}, odds());
        CHECK(g == FinSupportVector::unit(1));
    }
    SUBCASE("finite index set is rejected") {
        CHECK_THROWS_AS(annihilator_witness({}, IndexSet::finite({1, 2, 3})), FiniteIndexSet);
    }
}

TEST_CASE("annihilator witness random property") {
    CharGen gen(12);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<IntSeq> f;
        std::size_t m = gen.rng()() % 4;
        for (std::size_t k = 0; k < m; ++k) f.push_back(IntSeq::of_poly(gen.random_poly(2, 5)));
        IndexSet j = gen.random_infinite_set();
        FinSupportVector g = annihilator_witness(f, j);
        CHECK(!g.is_zero());
        for (const auto& [i, c] : g.entries()) CHECK(j.contains(i));
        for (const IntSeq& x : f) CHECK(pair(g, x) == 0);
    }
}

TEST_CASE("verify_continuity_subset examples") {
    CharacterPresentation half = CharacterPresentation::constant(kSymbolOne, Rat(1, 2));
    SUBCASE("all-ones certifies 1/2") {
        CHECK(verify_continuity_subset(half, {{IntSeq::constant(1)}}).ok);
    }
    SUBCASE("e0 indicator fails with counterexample") {
        ContinuityCheck c = verify_continuity_subset(half, {{IntSeq::indicator(IndexSet::single(0))}});
        REQUIRE(!c.ok);
        CHECK(pair(c.counterexample, IntSeq::indicator(IndexSet::single(0))) == 0);
        CHECK(!char_eval(half, c.counterexample).is_zero());
        CHECK(c.counterexample == FinSupportVector::unit(1));
    }
    SUBCASE("empty subset certifies the zero character") {
        CHECK(verify_continuity_subset(CharacterPresentation::zero(), {}).ok);
        CHECK(!verify_continuity_subset(half, {}).ok);
    }
    SUBCASE("integral corrections are recognized") {
        // (1, 2, 1, 2, ...) certifies 1/2-on-evens although the coefficient
        // sequence is not in its rational span
        CharacterPresentation t = CharacterPresentation::from_cells(
            {{evens(), kSymbolOne, rf({1}, {2})}, {odds(), kSymbolOne, rf({0})}});
        IntSeq x = IntSeq::from_cells({{evens(), Poly({1})}, {odds(), Poly({2})}});
        CHECK(verify_continuity_subset(t, {{x}}).ok);
    }
    SUBCASE("unbounded characters always yield counterexamples") {
        ContinuityCheck c = verify_continuity_subset(harmonic(), {{IntSeq::constant(1)}});
        REQUIRE(!c.ok);
        CHECK(pair(c.counterexample, IntSeq::constant(1)) == 0);
        CHECK(!char_eval(harmonic(), c.counterexample).is_zero());
    }
}

TEST_CASE("round trip and witness soundness (random)") {
    CharGen gen(2024);
    for (int trial = 0; trial < 25; ++trial) {
        CharacterPresentation t = gen.random_in_dual(12, 2);
        MembershipVerdict v = decide_membership(t);
        REQUIRE(v.in_dual());
        CharComparison cmp = char_equal(tensor_to_pointwise(v.in().decomposition), t);
        CHECK(cmp.equal);
        for (int k = 0; k < 50; ++k) {
            FinSupportVector g = gen.random_vector(6, 20, 60);
            CHECK(tensor_eval(v.in().decomposition, g) == char_eval(t, g));
        }
        CHECK(verify_continuity_subset(t, v.in().witness).ok);
        // a nonzero value forces some witness vector to be nonzero there
        for (std::uint64_t i = 0; i < 24; ++i) {
            if (t.eval(i).is_zero()) continue;
            bool hit = false;
            for (const IntSeq& x : v.in().witness.vectors)
                if (x.eval(i) != 0) hit = true;
            CHECK(hit);
        }
    }
}

TEST_CASE("restriction stability (random)") {
    CharGen gen(77);
    for (int trial = 0; trial < 20; ++trial) {
        CharacterPresentation t = gen.random_in_dual(10, 2);
        IndexSet j = gen.random_infinite_set();
        CHECK(decide_membership(restrict_character(t, j)).in_dual());
    }
}

TEST_CASE("certificate soundness (random)") {
    CharGen gen(31);
    for (int trial = 0; trial < 20; ++trial) {
        CharacterPresentation t = gen.random_not_in_dual(10, 2);
        MembershipVerdict v = decide_membership(t);
        REQUIRE(!v.in_dual());
        const auto& cert = v.out().certificate;
        CHECK(cert.reduced_denominator.degree() >= 1);
        const auto& cell = t.cells()[cert.cell_index];
        CHECK(cell.symbol == cert.symbol);
        // sampled index in the cell with reduced denominator above 10^6,
        // found by geometric jumps
        bool found = false;
        for (std::uint64_t probe = 1; probe < (1ull << 40) && !found; probe *= 2) {
            auto i = cell.support.first_member_at_least(probe);
            if (i && denominator(cell.coeff.value(Int(*i))) > 1000000) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("minimize continuity subset") {
    CharacterPresentation half = CharacterPresentation::constant(kSymbolOne, Rat(1, 2));
    ContinuitySubset fat{{IntSeq::constant(1), IntSeq::of_poly(Poly({0, 1})), IntSeq::constant(2)}};
    ContinuitySubset slim = minimize_continuity_subset(half, fat);
    CHECK(slim.vectors.size() == 1);
    CHECK(verify_continuity_subset(half, slim).ok);
}

TEST_CASE("unbounded demo emits annihilating vectors with nonzero values") {
    auto demo = unbounded_demo(harmonic(), {IntSeq::constant(1)}, 3);
    CHECK(demo.size() == 3);
    for (const auto& g : demo) {
        CHECK(pair(g, IntSeq::constant(1)) == 0);
        CHECK(!char_eval(harmonic(), g).is_zero());
    }
}
