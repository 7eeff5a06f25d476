#pragma once

#include "produal/exact/matrix.hpp"

#include <optional>
#include <vector>

namespace produal {

/// Smith decomposition U*A*V = S with U, V unimodular and S diagonal,
/// entries nonnegative and dividing each successor.
struct SnfResult {
    IntMatrix U, S, V;

    /// Nonzero diagonal entries of S, in order.
    std::vector<Int> invariant_factors() const;
};

SnfResult smith_normal_form(const IntMatrix& a);

/// Lattice basis of {v : A*v = 0}, one vector per zero invariant factor.
/// Empty result means the kernel is trivial.  Each basis vector has its first
/// nonzero coordinate positive.
std::vector<std::vector<Int>> integer_kernel_basis(const IntMatrix& a);

/// One integer solution of A*x = b, if any.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

}  // namespace produal
