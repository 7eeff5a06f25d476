#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "produal/exact/snf.hpp"
#include "produal/exact/torus.hpp"

#include <algorithm>
#include <random>

using namespace produal;

namespace {

IntMatrix mat(std::size_t r, std::size_t c, std::vector<long long> v) {
    std::vector<Int> e(v.begin(), v.end());
    return IntMatrix(r, c, std::move(e));
}

// independent invariant-factor oracle: d_1*...*d_k = gcd of all k x k minors
Int minor_gcd(const IntMatrix& a, std::size_t k) {
    std::vector<std::size_t> ridx(a.rows()), cidx(a.cols());
    Int g = 0;
    std::vector<std::size_t> rs, cs;
    // enumerate k-subsets of rows and columns
    std::vector<bool> rsel(a.rows(), false), csel(a.cols(), false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
        std::fill(csel.begin(), csel.end(), false);
        std::fill(csel.begin(), csel.begin() + k, true);
        do {
            IntMatrix sub(k, k);
            std::size_t ii = 0;
            for (std::size_t i = 0; i < a.rows(); ++i) {
                if (!rsel[i]) continue;
                std::size_t jj = 0;
                for (std::size_t j = 0; j < a.cols(); ++j) {
                    if (!csel[j]) continue;
                    sub.at(ii, jj) = a.at(i, j);
                    ++jj;
                }
                ++ii;
            }
            g = gcd(g, determinant(sub));
        } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    return g < 0 ? Int(-g) : g;
}

void check_snf_contract(const IntMatrix& a) {
    SnfResult r = smith_normal_form(a);
    CHECK(r.U.rows() == a.rows());
    CHECK(r.V.rows() == a.cols());
    Int du = determinant(r.U), dv = determinant(r.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    CHECK(r.U * a * r.V == r.S);
    std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) CHECK(r.S.at(i, j) == 0);
    for (std::size_t k = 0; k < n; ++k) CHECK(r.S.at(k, k) >= 0);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (r.S.at(k + 1, k + 1) == 0) continue;
        CHECK(r.S.at(k, k) != 0);
        CHECK(r.S.at(k + 1, k + 1) % r.S.at(k, k) == 0);
    }
    if (a.rows() == a.cols()) {
        Int da = determinant(a);
        Int ds = 1;
        for (std::size_t k = 0; k < n; ++k) ds *= r.S.at(k, k);
        CHECK((da < 0 ? Int(-da) : da) == ds);
    }
}

}  // namespace

TEST_CASE("torus combine examples") {
    TorusValue q14 = TorusValue::from_rational(Rat(1, 4));
    TorusValue q12 = TorusValue::from_rational(Rat(1, 2));
    CHECK(torus_combine({{Int(3), q14}, {Int(1), q12}}) == q14);  // 5/4 == 1/4 mod 1

    TorusValue t1half = TorusValue::symbol_multiple(1, Rat(1, 2));
    CHECK(torus_combine({{Int(2), t1half}}) == TorusValue::symbol_multiple(1, Rat(1)));

    CHECK(torus_combine({{Int(1), q12}, {Int(1), q12}}).is_zero());
}

TEST_CASE("torus canonical window") {
    CHECK(torus_window(Rat(1, 2)) == Rat(1, 2));
    CHECK(torus_window(Rat(-1, 2)) == Rat(1, 2));
    CHECK(torus_window(Rat(3, 4)) == Rat(-1, 4));
    CHECK(torus_window(Rat(5, 4)) == Rat(1, 4));
    CHECK(torus_window(Rat(0)) == Rat(0));
    // idempotent
    for (int p = -9; p <= 9; ++p)
        for (int q = 1; q <= 6; ++q) {
            Rat w = torus_window(Rat(p, q));
            CHECK(torus_window(w) == w);
            CHECK(is_integer(Rat(p, q) - w));
        }
}

TEST_CASE("torus combine is order independent") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::pair<Int, TorusValue>> terms;
        for (int k = 0; k < 5; ++k) {
            Int c = static_cast<long long>(rng() % 21) - 10;
            Rat r(static_cast<long long>(rng() % 19) - 9, 1 + static_cast<long long>(rng() % 9));
            TorusValue v = TorusValue::from_rational(r);
            if (rng() % 2)
                v = v + TorusValue::symbol_multiple(1 + static_cast<int>(rng() % 2),
                                                    Rat(1, 1 + static_cast<long long>(rng() % 5)));
            terms.emplace_back(c, v);
        }
        TorusValue a = torus_combine(terms);
        std::shuffle(terms.begin(), terms.end(), rng);
        CHECK(a == torus_combine(terms));
    }
}

TEST_CASE("snf worked examples") {
    SUBCASE("identity is a fixed point") {
        SnfResult r = smith_normal_form(IntMatrix::identity(2));
        CHECK(r.S == IntMatrix::identity(2));
    }
    SUBCASE("diag(2,4) from [[2,4],[6,8]]") {
        // oracle: d1 = gcd of entries = 2, d1*d2 = |det| = |16-24| = 8
        SnfResult r = smith_normal_form(mat(2, 2, {2, 4, 6, 8}));
        CHECK(r.S.at(0, 0) == 2);
        CHECK(r.S.at(1, 1) == 4);
    }
    SUBCASE("column vector [[6],[4]]") {
        SnfResult r = smith_normal_form(mat(2, 1, {6, 4}));
        CHECK(r.S.at(0, 0) == 2);  // gcd(6,4) via extended Euclid
        CHECK(r.S.at(1, 0) == 0);
    }
    SUBCASE("zero-dimensional") {
        SnfResult r = smith_normal_form(IntMatrix(0, 0));
        CHECK(r.S.rows() == 0);
        CHECK(smith_normal_form(IntMatrix(0, 3)).S.cols() == 3);
        CHECK(smith_normal_form(IntMatrix(3, 0)).S.rows() == 3);
    }
}

TEST_CASE("kernel worked examples") {
    SUBCASE("2x3 system") {
        auto b = integer_kernel_basis(mat(2, 3, {1, 1, 1, 1, 2, 3}));
        REQUIRE(b.size() == 1);
        CHECK(b[0] == std::vector<Int>{1, -2, 1});
    }
    SUBCASE("zero map") {
        auto b = integer_kernel_basis(mat(1, 1, {0}));
        REQUIRE(b.size() == 1);
        CHECK(b[0] == std::vector<Int>{1});
    }
    SUBCASE("primitive generator of 1x2 system") {
        auto b = integer_kernel_basis(mat(1, 2, {2, 4}));
        REQUIRE(b.size() == 1);
        CHECK(b[0] == std::vector<Int>{2, -1});
    }
}

TEST_CASE("snf random contract and minor-gcd oracle") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                a.at(i, j) = static_cast<long long>(rng() % 41) - 20;
        check_snf_contract(a);
        // invariant-factor uniqueness against the minor-gcd oracle
        SnfResult s = smith_normal_form(a);
        Int prod = 1;
        for (std::size_t k = 0; k < std::min(r, c); ++k) {
            if (s.S.at(k, k) == 0) break;
            prod *= s.S.at(k, k);
            CHECK(prod == minor_gcd(a, k + 1));
        }
    }
}

TEST_CASE("kernel random: basis spans the kernel lattice") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng() % 3, c = 1 + rng() % 5;
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                a.at(i, j) = static_cast<long long>(rng() % 11) - 5;
        auto basis = integer_kernel_basis(a);
        for (const auto& v : basis) {
            auto av = a.apply(v);
            for (const Int& x : av) CHECK(x == 0);
        }
        if (basis.empty()) continue;
        // random kernel vector must be an integer combination of the basis
        std::vector<Int> w(c);
        for (const auto& v : basis) {
            long long k = static_cast<long long>(rng() % 9) - 4;
            for (std::size_t j = 0; j < c; ++j) w[j] += k * v[j];
        }
        IntMatrix bmat(c, basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t i = 0; i < c; ++i) bmat.at(i, j) = basis[j][i];
        CHECK(solve_integer(bmat, w).has_value());
    }
}

TEST_CASE("solve_integer") {
    IntMatrix a = mat(2, 2, {2, 0, 0, 3});
    auto x = solve_integer(a, {4, 9});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 3);
    CHECK(!solve_integer(a, {1, 1}).has_value());
}
