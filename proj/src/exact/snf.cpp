#include "produal/exact/snf.hpp"

#include <algorithm>
#include <tuple>

namespace produal {

std::vector<Int> SnfResult::invariant_factors() const {
    std::vector<Int> d;
    std::size_t n = std::min(S.rows(), S.cols());
    for (std::size_t k = 0; k < n; ++k)
        if (S.at(k, k) != 0) d.push_back(S.at(k, k));
    return d;
}

namespace {

// Pivot rule: smallest absolute value among nonzero entries of the trailing
// submatrix; ties broken by lowest row, then lowest column.
bool find_pivot(const IntMatrix& s, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            const Int& v = s.at(i, j);
            if (v == 0) continue;
            Int av = abs(v);
            if (!found || av < best) {
                found = true;
                best = av;
                pi = i;
                pj = j;
            }
        }
    return found;
}

void diagonalize_from(SnfResult& r, std::size_t t0) {
    IntMatrix& U = r.U;
    IntMatrix& S = r.S;
    IntMatrix& V = r.V;
    std::size_t n = std::min(S.rows(), S.cols());
    for (std::size_t t = t0; t < n; ++t) {
        for (;;) {
            std::size_t pi = t, pj = t;
            if (!find_pivot(S, t, pi, pj)) return;  // trailing block all zero
            S.swap_rows(t, pi);
            U.swap_rows(t, pi);
            S.swap_cols(t, pj);
            V.swap_cols(t, pj);
            for (std::size_t i = t + 1; i < S.rows(); ++i) {
                Int q = S.at(i, t) / S.at(t, t);
                S.add_row_multiple(i, t, -q);
                U.add_row_multiple(i, t, -q);
            }
            for (std::size_t j = t + 1; j < S.cols(); ++j) {
                Int q = S.at(t, j) / S.at(t, t);
                S.add_col_multiple(j, t, -q);
                V.add_col_multiple(j, t, -q);
            }
            bool clean = true;
            for (std::size_t i = t + 1; clean && i < S.rows(); ++i)
                if (S.at(i, t) != 0) clean = false;
            for (std::size_t j = t + 1; clean && j < S.cols(); ++j)
                if (S.at(t, j) != 0) clean = false;
            if (clean) break;  // remainders vanished; otherwise re-pick a smaller pivot
        }
    }
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
    SnfResult r{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
    diagonalize_from(r, 0);
    std::size_t n = std::min(a.rows(), a.cols());
    for (;;) {
        bool fixed = true;
        for (std::size_t k = 0; fixed && k + 1 < n; ++k) {
            if (r.S.at(k, k) == 0) break;
            for (std::size_t l = k + 1; l < n; ++l) {
                if (r.S.at(l, l) == 0) continue;
                if (r.S.at(l, l) % r.S.at(k, k) != 0) {
                    r.S.add_col_multiple(k, l, 1);
                    r.V.add_col_multiple(k, l, 1);
                    diagonalize_from(r, k);
                    fixed = false;
                    break;
                }
            }
        }
        if (fixed) break;
    }
    for (std::size_t k = 0; k < n; ++k)
        if (r.S.at(k, k) < 0) {
            r.S.negate_row(k);
            r.U.negate_row(k);
        }
    return r;
}

std::vector<std::vector<Int>> integer_kernel_basis(const IntMatrix& a) {
    SnfResult r = smith_normal_form(a);
    std::size_t n = std::min(a.rows(), a.cols());
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (j < n && r.S.at(j, j) != 0) continue;
        std::vector<Int> v(a.cols());
        for (std::size_t i = 0; i < a.cols(); ++i) v[i] = r.V.at(i, j);
        for (const Int& c : v) {
            if (c == 0) continue;
            if (c < 0)
                for (Int& x : v) x = -x;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
    SnfResult r = smith_normal_form(a);
    std::vector<Int> c = r.U.apply(b);
    std::size_t n = std::min(a.rows(), a.cols());
    std::vector<Int> y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < n && r.S.at(i, i) != 0) {
            if (c[i] % r.S.at(i, i) != 0) return std::nullopt;
            y[i] = c[i] / r.S.at(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return r.V.apply(y);
}

}  // namespace produal
