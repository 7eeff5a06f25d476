#pragma once

#include "produal/exact/numbers.hpp"

#include <cstddef>
#include <vector>

namespace produal {

/// Dense row-major matrix over arbitrary-precision integers.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    const std::vector<Int>& entries() const { return e_; }

    IntMatrix operator*(const IntMatrix& o) const;
    std::vector<Int> apply(const std::vector<Int>& v) const;  // A * v
    IntMatrix transposed() const;

    bool operator==(const IntMatrix& o) const = default;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void negate_row(std::size_t r);
    /// row[dst] += c * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

/// Exact determinant (fraction-free Bareiss elimination).  Square input.
Int determinant(const IntMatrix& a);

}  // namespace produal
