#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "produal/errors.hpp"
#include "produal/seq/sequences.hpp"

#include <random>

using namespace produal;

namespace {

IndexSet evens() { return IndexSet::residue_class(0, 2); }
IndexSet odds() { return IndexSet::residue_class(1, 2); }

Poly poly(std::vector<long long> c) { return Poly(std::vector<Int>(c.begin(), c.end())); }

RationalFunction rf(std::vector<long long> num, std::vector<long long> den = {1}) {
    return RationalFunction(poly(num), poly(den));
}

CharacterPresentation two_cell_char(int sym_even, const RationalFunction& even_coeff,
                                    int sym_odd, const RationalFunction& odd_coeff) {
    return CharacterPresentation::from_cells({{evens(), sym_even, even_coeff},
                                              {odds(), sym_odd, odd_coeff}});
}

}  // namespace

TEST_CASE("index set canonical forms") {
    CHECK(IndexSet({}, {true, true}) == IndexSet::all());
    CHECK(IndexSet({true}, {true}) == IndexSet::all());
    CHECK(IndexSet({false, false}, {false}) == IndexSet::empty());
    // {0,2,4,...} presented with a redundant prefix
    CHECK(IndexSet({true, false, true}, {false, true}) == evens());
    CHECK(IndexSet({}, {true, false, true, false}) == evens());
    CHECK(evens().complement() == odds());
    CHECK(evens().intersect(odds()) == IndexSet::empty());
    CHECK(evens().unite(odds()) == IndexSet::all());
    CHECK(IndexSet::single(3).first() == 3);
    CHECK(IndexSet::residue_class(5, 4).first() == 1);  // {i : i == 1 (mod 4)}
    CHECK(IndexSet::residue_class(1, 4, 5).first() == 5);
    CHECK(IndexSet::residue_class(1, 4, 5).contains(9));
    CHECK(!IndexSet::residue_class(1, 4, 5).contains(1));
}

TEST_CASE("index set membership vs bits") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t p = rng() % 5, l = 1 + rng() % 6;
        std::vector<bool> prefix(p), period(l);
        for (std::size_t i = 0; i < p; ++i) prefix[i] = rng() % 2;
        for (std::size_t i = 0; i < l; ++i) period[i] = rng() % 2;
        IndexSet s(prefix, period);
        for (std::uint64_t i = 0; i < 60; ++i) {
            bool expect = i < p ? prefix[i] : period[(i - p) % l];
            CHECK(s.contains(i) == expect);
        }
    }
}

TEST_CASE("polynomial basics") {
    Poly p = poly({0, 0, 1});  // i^2
    CHECK(p.eval(3) == 9);
    CHECK(p.str() == "i^2");
    CHECK(poly({1, 1}).str() == "i+1");
    CHECK(poly({-3, 2, 0, 1}).str() == "i^3+2*i-3");
    CHECK(poly_gcd(poly({-1, 1}) * poly({2, 1}), poly({-1, 1}) * poly({5, 3})) == poly({-1, 1}));
    CHECK(poly({2, 4}).content() == 2);
}

TEST_CASE("binomial machinery") {
    CHECK(binomial_poly(0) == QPoly::constant(Rat(1)));
    CHECK(binomial_poly(2).eval(Rat(5)) == Rat(10));
    QPoly half_k = QPoly::x().scaled(Rat(1, 2));
    CHECK(!is_integer_valued(half_k));
    // k(k-1)/2 is integer valued
    CHECK(is_integer_valued(binomial_poly(2)));
    auto coords = binomial_coords(QPoly(poly({0, 0, 1})));  // k^2 = 2 C(k,2) + C(k,1)
    REQUIRE(coords.size() == 3);
    CHECK(coords[2] == Rat(2));
    CHECK(coords[1] == Rat(1));
    CHECK(coords[0] == Rat(0));
}

TEST_CASE("rational function reduction") {
    // (2i+2)/(i+1) reduces to the constant 2
    RationalFunction f(poly({2, 2}), poly({1, 1}));
    CHECK(f.num() == poly({2}));
    CHECK(f.den() == poly({1}));
    CHECK(f.has_constant_denominator());
    // 1/(i+1) stays put
    RationalFunction h(poly({1}), poly({1, 1}));
    CHECK(!h.has_constant_denominator());
    CHECK(h.value(4) == Rat(1, 5));
    CHECK_THROWS_AS(RationalFunction(poly({1}), poly({-2, 1})).check_denominator_roots(),
                    ZeroDenominator);  // i - 2 vanishes at 2
    RationalFunction g(poly({1}), poly({1, 1}));
    g.check_denominator_roots();  // i + 1 has no natural root
}

TEST_CASE("seq_eval examples") {
    IntSeq sq = IntSeq::of_poly(poly({0, 0, 1}));
    CHECK(sq.eval(3) == 9);
    RatSeq harmonic = RatSeq::of_function(rf({1}, {1, 1}));
    CHECK(harmonic.eval(4) == Rat(1, 5));
    CharacterPresentation t = two_cell_char(kSymbolOne, rf({1}, {3}), kSymbolOne, rf({0}));
    CHECK(t.eval(2) == TorusValue::from_rational(Rat(1, 3)));
    CHECK(t.eval(3).is_zero());
}

TEST_CASE("pair examples") {
    IntSeq sq = IntSeq::of_poly(poly({0, 0, 1}));
    FinSupportVector g;
    g.add(0, 1);
    g.add(3, 2);
    CHECK(pair(g, sq) == 18);
    CHECK(pair(FinSupportVector(), sq) == 0);
    FinSupportVector h;
    h.add(1, 1);
    h.add(2, -1);
    CHECK(pair(h, IntSeq::constant(1)) == 0);
}

TEST_CASE("char_eval examples") {
    CharacterPresentation half = CharacterPresentation::constant(kSymbolOne, Rat(1, 2));
    FinSupportVector g01;
    g01.add(0, 1);
    g01.add(1, 1);
    CHECK(char_eval(half, g01).is_zero());

    CharacterPresentation t = two_cell_char(kSymbolOne, rf({1}, {3}), kSymbolOne, rf({0}));
    FinSupportVector g02;
    g02.add(0, 1);
    g02.add(2, 1);
    CHECK(char_eval(t, g02) == TorusValue::from_rational(Rat(-1, 3)));  // 2/3 in the window

    CharacterPresentation tau = CharacterPresentation::constant(1, Rat(1, 2));
    FinSupportVector g5;
    g5.add(5, 2);
    CHECK(char_eval(tau, g5) == TorusValue::symbol_multiple(1, Rat(1)));
}

TEST_CASE("char determined by unit vectors") {
    CharacterPresentation t = two_cell_char(1, rf({1, 1}, {7}), kSymbolOne, rf({2}, {5}));
    for (std::uint64_t i = 0; i < 30; ++i)
        CHECK(char_eval(t, FinSupportVector::unit(i)) == t.eval(i));
}

TEST_CASE("restrict_character") {
    CharacterPresentation half = CharacterPresentation::constant(kSymbolOne, Rat(1, 2));
    CharacterPresentation r = restrict_character(half, evens());
    CHECK(r == two_cell_char(kSymbolOne, rf({1}, {2}), kSymbolOne, rf({0})));
    CHECK(restrict_character(half, IndexSet::all()) == half);
    CHECK(restrict_character(half, IndexSet::empty()).is_zero());
    // restriction is idempotent
    CHECK(restrict_character(r, evens()) == r);
}

TEST_CASE("canonicalization merges value-equal presentations") {
    SUBCASE("parity pieces of i/2 re-merge into the closed form") {
        CharacterPresentation t = CharacterPresentation::from_cells(
            {{IndexSet::all(), kSymbolOne, rf({0, 1}, {2})}});
        REQUIRE(t.cells().size() == 1);
        CHECK(t.cells()[0].coeff == rf({0, 1}, {2}));
        // 0 on evens, 1/2 on odds is the same element of T^N
        CharacterPresentation s = two_cell_char(kSymbolOne, rf({0}), kSymbolOne, rf({1}, {2}));
        CHECK(s == t);
        for (std::uint64_t i = 0; i < 30; ++i) CHECK(s.eval(i) == t.eval(i));
    }
    SUBCASE("integer-valued coefficients vanish") {
        CharacterPresentation t = CharacterPresentation::from_cells(
            {{IndexSet::all(), kSymbolOne, rf({7})}});
        CHECK(t.is_zero());
        CharacterPresentation u = CharacterPresentation::from_cells(
            {{IndexSet::all(), kSymbolOne, rf({0, 2})}});  // 2i
        CHECK(u.is_zero());
    }
    SUBCASE("quadratic mod-1 structure is re-merged from parity pieces") {
        // C(i,2)/2 = (i^2 - i)/4: on evens it looks like i/4, on odds like (i-1)/4
        CharacterPresentation whole = CharacterPresentation::from_cells(
            {{IndexSet::all(), kSymbolOne, rf({0, -1, 1}, {4})}});
        CharacterPresentation split = two_cell_char(kSymbolOne, rf({0, 1}, {4}),
                                                    kSymbolOne, rf({-1, 1}, {4}));
        CHECK(whole == split);
        for (std::uint64_t i = 0; i < 40; ++i) CHECK(whole.eval(i) == split.eval(i));
    }
    SUBCASE("constants with distinct fractional parts stay split") {
        CharacterPresentation t = two_cell_char(kSymbolOne, rf({1}, {2}), kSymbolOne, rf({1}, {3}));
        CHECK(t.cells().size() == 2);
    }
    SUBCASE("prefix absorbed when values match the pattern") {
        CharacterPresentation t = CharacterPresentation::from_cells(
            {{IndexSet::single(0), kSymbolOne, rf({1}, {2})},
             {IndexSet::single(0).complement(), kSymbolOne, rf({1}, {2})}});
        CHECK(t == CharacterPresentation::constant(kSymbolOne, Rat(1, 2)));
    }
    SUBCASE("tau coefficients are exact, not mod 1") {
        CharacterPresentation a = CharacterPresentation::constant(1, Rat(3, 2));
        CharacterPresentation b = CharacterPresentation::constant(1, Rat(1, 2));
        CHECK(a != b);
        CHECK(a.eval(0) != b.eval(0));
    }
}

TEST_CASE("canonicalization is a value-level decision procedure") {
    // randomized cross-check: perturb a presentation without changing values
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        long long den = 1 + static_cast<long long>(rng() % 6);
        long long a0 = static_cast<long long>(rng() % 7) - 3;
        long long a1 = static_cast<long long>(rng() % 5) - 2;
        RationalFunction coeff = rf({a0, a1}, {den});
        int sym = rng() % 2 ? kSymbolOne : 1;
        CharacterPresentation direct = CharacterPresentation::from_cells(
            {{IndexSet::all(), sym, coeff}});
        // artificial split along a random residue class
        std::uint64_t m = 2 + rng() % 3;
        std::vector<CharacterPresentation::Cell> cells;
        for (std::uint64_t r = 0; r < m; ++r)
            cells.push_back({IndexSet::residue_class(r, m), sym, coeff});
        // plus mod-1 noise on one piece when the symbol is rational
        if (sym == kSymbolOne) {
            Poly noise = poly({static_cast<long long>(rng() % 5), 1 + static_cast<long long>(rng() % 3)});
            cells[rng() % m].coeff = cells[rng() % m].coeff;  // keep structure
            std::uint64_t victim = rng() % m;
            cells[victim].coeff = cells[victim].coeff + RationalFunction::from_poly(noise);
        }
        CharacterPresentation split = CharacterPresentation::from_cells(std::move(cells));
        if (sym == kSymbolOne) {
            for (std::uint64_t i = 0; i < 50; ++i) CHECK(direct.eval(i) == split.eval(i));
            CHECK(direct == split);
        } else {
            CHECK(direct == split);
        }
    }
}

TEST_CASE("int seq canonicalization") {
    // i^2 presented on a finite cell agrees with interpolated constants
    IntSeq a = IntSeq::from_cells({{IndexSet::finite({0, 1}), poly({0, 0, 1})},
                                   {IndexSet::finite({0, 1}).complement(), poly({7})}});
    IntSeq b = IntSeq::from_cells({{IndexSet::single(0), poly({0})},
                                   {IndexSet::single(1), poly({1})},
                                   {IndexSet::finite({0, 1}).complement(), poly({7})}});
    CHECK(a == b);
    for (std::uint64_t i = 0; i < 20; ++i) CHECK(a.eval(i) == b.eval(i));
    CHECK(IntSeq::constant(3) + IntSeq::constant(-3) == IntSeq());
    CHECK(IntSeq::indicator(evens()) + IntSeq::indicator(odds()) == IntSeq::constant(1));
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(IntSeq::from_cells({{evens(), poly({1})}}), PresentationInvalid);
    CHECK_THROWS_AS(IntSeq::from_cells({{evens(), poly({1})},
                                        {IndexSet::all(), poly({0})}}),
                    PresentationInvalid);
}

TEST_CASE("denominator profile examples") {
    SUBCASE("harmonic is unbounded with certificate i+1") {
        RatSeq r = RatSeq::of_function(rf({1}, {1, 1}));
        DenominatorProfile p = denominator_profile(r, IndexSet::all());
        REQUIRE(!p.is_bounded());
        CHECK(p.unbounded().reduced_denominator == poly({1, 1}));
        CHECK(p.unbounded().reduced_denominator.degree() >= 1);
    }
    SUBCASE("alternating 1/2, 1/3 is bounded with parity strata") {
        RatSeq r = RatSeq::from_cells({{evens(), rf({1}, {2})}, {odds(), rf({1}, {3})}});
        DenominatorProfile p = denominator_profile(r, IndexSet::all());
        REQUIRE(p.is_bounded());
        REQUIRE(p.bounded().strata.size() == 2);
        CHECK(p.bounded().strata.at(Int(2)) == evens());
        CHECK(p.bounded().strata.at(Int(3)) == odds());
    }
    SUBCASE("(2i+2)/(i+1) reduces to the constant 2") {
        RatSeq r = RatSeq::of_function(rf({2, 2}, {1, 1}));
        DenominatorProfile p = denominator_profile(r, IndexSet::all());
        REQUIRE(p.is_bounded());
        REQUIRE(p.bounded().strata.size() == 1);
        CHECK(p.bounded().strata.begin()->first == 1);
        CHECK(p.bounded().strata.begin()->second == IndexSet::all());
    }
    SUBCASE("strata track the reduced denominator of i/6") {
        RatSeq r = RatSeq::of_function(rf({0, 1}, {6}));
        DenominatorProfile p = denominator_profile(r, IndexSet::all());
        REQUIRE(p.is_bounded());
        for (const auto& [den, stratum] : p.bounded().strata)
            for (std::uint64_t i : stratum.first_members(8))
                CHECK(denominator(r.eval(i)) == den);
        // covers everything, pairwise disjoint
        IndexSet u = IndexSet::empty();
        for (const auto& [den, stratum] : p.bounded().strata) u = u.unite(stratum);
        CHECK(u == IndexSet::all());
    }
}

TEST_CASE("pair bilinearity (random)") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        IntSeq x = IntSeq::from_cells(
            {{evens(), poly({static_cast<long long>(rng() % 9) - 4, 1})},
             {odds(), poly({static_cast<long long>(rng() % 9) - 4})}});
        FinSupportVector g, h;
        for (int k = 0; k < 4; ++k) {
            g.add(rng() % 20, static_cast<long long>(rng() % 9) - 4);
            h.add(rng() % 20, static_cast<long long>(rng() % 9) - 4);
        }
        Int n = static_cast<long long>(rng() % 7) - 3;
        CHECK(pair(g + h, x) == pair(g, x) + pair(h, x));
        CHECK(pair(g.scaled(n), x) == n * pair(g, x));
    }
}
