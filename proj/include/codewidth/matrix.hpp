#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "codewidth/field.hpp"

namespace codewidth {

/// Dense row-major matrix over GF(p). Entries are canonical field
/// representatives stored in 16 bits (p < 2^16 by construction).
class Matrix {
public:
    Matrix(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

    static Matrix identity(PrimeField field, std::size_t n);
    static Matrix from_rows(PrimeField field, const std::vector<std::vector<std::uint32_t>>& rows);

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    void set(std::size_t r, std::size_t c, std::uint32_t v) {
        if (v >= field_.modulus())
            throw std::invalid_argument("Matrix::set: value " + std::to_string(v) +
                                        " not a canonical element of GF(" +
                                        std::to_string(field_.modulus()) + ")");
        entries_[r * cols_ + c] = static_cast<std::uint16_t>(v);
    }

    Matrix transposed() const;

    /// Vertical concatenation; both operands must share field and width.
    Matrix stacked_on(const Matrix& below) const;

    bool operator==(const Matrix& other) const {
        return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
               entries_ == other.entries_;
    }

private:
    PrimeField field_;
    std::size_t rows_, cols_;
    std::vector<std::uint16_t> entries_;
};

struct RrefResult {
    Matrix matrix;
    std::vector<std::size_t> pivots;
};

/// Rank over GF(p). Dispatches to the word-packed GF(2) path when p == 2.
int rank(const Matrix& m);

/// Reduced row-echelon form with deterministic elimination order (leftmost
/// pivot column, topmost remaining row). Two matrices span the same row space
/// iff their rrefs agree after dropping zero rows.
RrefResult rref(const Matrix& m);

namespace detail {

// Element-wise Gaussian elimination, any p. Kept callable so the packed
// GF(2) path can be checked against it.
int rank_generic(const Matrix& m);

// Word-XOR elimination over rows packed into 64-bit words; requires p == 2.
int rank_gf2_packed(const Matrix& m);

// Rank of the submatrix formed by the columns selected in `colmask`,
// for packed GF(2) rows of width <= 64.
int rank_gf2_columns(const std::vector<std::uint64_t>& packed_rows, std::uint64_t colmask);

// Same, element-wise for odd p: rows are the generator rows, restricted to
// the selected columns.
int rank_generic_columns(const Matrix& m, std::uint64_t colmask);

}  // namespace detail

}  // namespace codewidth
