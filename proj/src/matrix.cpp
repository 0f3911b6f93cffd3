#include "codewidth/matrix.hpp"

#include <array>
#include <bit>

namespace codewidth {

Matrix Matrix::identity(PrimeField field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<std::vector<std::uint32_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("Matrix::from_rows: ragged rows (row " + std::to_string(i) +
                                        " has " + std::to_string(rows[i].size()) + " entries, expected " +
                                        std::to_string(c) + ")");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = entries_[i * cols_ + j];
    return t;
}

Matrix Matrix::stacked_on(const Matrix& below) const {
    if (!(field_ == below.field_) || cols_ != below.cols_)
        throw std::invalid_argument("Matrix::stacked_on: operands must share field and width");
    Matrix m(field_, rows_ + below.rows_, cols_);
    m.entries_ = entries_;
    m.entries_.insert(m.entries_.end(), below.entries_.begin(), below.entries_.end());
    return m;
}

namespace detail {

int rank_generic(const Matrix& m) {
    const PrimeField& f = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::uint32_t> work(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) work[i * cols + j] = m.at(i, j);

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t i = pivot_row;
        while (i < rows && work[i * cols + col] == 0) ++i;
        if (i == rows) continue;
        if (i != pivot_row)
            for (std::size_t j = col; j < cols; ++j)
                std::swap(work[pivot_row * cols + j], work[i * cols + j]);
        const std::uint32_t inv = f.inv(work[pivot_row * cols + col]);
        for (std::size_t j = pivot_row + 1; j < rows; ++j) {
            const std::uint32_t factor = work[j * cols + col];
            if (factor == 0) continue;
            const std::uint32_t scale = f.mul(factor, inv);
            for (std::size_t c = col; c < cols; ++c)
                work[j * cols + c] = f.sub(work[j * cols + c], f.mul(scale, work[pivot_row * cols + c]));
        }
        ++pivot_row;
    }
    return static_cast<int>(pivot_row);
}

int rank_gf2_packed(const Matrix& m) {
    if (m.field().modulus() != 2)
        throw std::invalid_argument("rank_gf2_packed: field is not GF(2)");
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t words = (cols + 63) / 64;
    std::vector<std::uint64_t> work(rows * words, 0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (m.at(i, j)) work[i * words + j / 64] |= std::uint64_t{1} << (j % 64);

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        const std::size_t w = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t i = pivot_row;
        while (i < rows && !(work[i * words + w] & bit)) ++i;
        if (i == rows) continue;
        if (i != pivot_row)
            for (std::size_t x = 0; x < words; ++x) std::swap(work[pivot_row * words + x], work[i * words + x]);
        for (std::size_t j = pivot_row + 1; j < rows; ++j)
            if (work[j * words + w] & bit)
                for (std::size_t x = w; x < words; ++x) work[j * words + x] ^= work[pivot_row * words + x];
        ++pivot_row;
    }
    return static_cast<int>(pivot_row);
}

int rank_gf2_columns(const std::vector<std::uint64_t>& packed_rows, std::uint64_t colmask) {
    std::array<std::uint64_t, 64> basis{};
    int r = 0;
    for (std::uint64_t x : packed_rows) {
        x &= colmask;
        while (x) {
            const int b = std::countr_zero(x);
            if (!basis[b]) {
                basis[b] = x;
                ++r;
                break;
            }
            x ^= basis[b];
        }
    }
    return r;
}

int rank_generic_columns(const Matrix& m, std::uint64_t colmask) {
    const PrimeField& f = m.field();
    const std::size_t rows = m.rows();
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < m.cols() && j < 64; ++j)
        if (colmask & (std::uint64_t{1} << j)) cols.push_back(j);
    const std::size_t nc = cols.size();
    if (nc == 0 || rows == 0) return 0;

    std::vector<std::uint32_t> work(rows * nc);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < nc; ++j) work[i * nc + j] = m.at(i, cols[j]);

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < nc && pivot_row < rows; ++col) {
        std::size_t i = pivot_row;
        while (i < rows && work[i * nc + col] == 0) ++i;
        if (i == rows) continue;
        if (i != pivot_row)
            for (std::size_t j = col; j < nc; ++j) std::swap(work[pivot_row * nc + j], work[i * nc + j]);
        const std::uint32_t inv = f.inv(work[pivot_row * nc + col]);
        for (std::size_t j = pivot_row + 1; j < rows; ++j) {
            const std::uint32_t factor = work[j * nc + col];
            if (factor == 0) continue;
            const std::uint32_t scale = f.mul(factor, inv);
            for (std::size_t c = col; c < nc; ++c)
                work[j * nc + c] = f.sub(work[j * nc + c], f.mul(scale, work[pivot_row * nc + c]));
        }
        ++pivot_row;
    }
    return static_cast<int>(pivot_row);
}

}  // namespace detail

int rank(const Matrix& m) {
    if (m.field().modulus() == 2) return detail::rank_gf2_packed(m);
    return detail::rank_generic(m);
}

RrefResult rref(const Matrix& m) {
    const PrimeField& f = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    Matrix out = m;
    std::vector<std::size_t> pivots;

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t i = pivot_row;
        while (i < rows && out.at(i, col) == 0) ++i;
        if (i == rows) continue;
        if (i != pivot_row)
            for (std::size_t j = 0; j < cols; ++j) {
                const std::uint32_t a = out.at(pivot_row, j), b = out.at(i, j);
                out.set(pivot_row, j, b);
                out.set(i, j, a);
            }
        const std::uint32_t inv = f.inv(out.at(pivot_row, col));
        if (inv != 1)
            for (std::size_t j = col; j < cols; ++j) out.set(pivot_row, j, f.mul(inv, out.at(pivot_row, j)));
        for (std::size_t j = 0; j < rows; ++j) {
            if (j == pivot_row) continue;
            const std::uint32_t factor = out.at(j, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < cols; ++c)
                out.set(j, c, f.sub(out.at(j, c), f.mul(factor, out.at(pivot_row, c))));
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return {std::move(out), std::move(pivots)};
}

}  // namespace codewidth
