#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace holescan {

// Dense matrix over the two-element field, bit-packed by column.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    static BitMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int row, int col) const;
    void set(int row, int col);

    // column dst ^= column src
    void xor_col(int dst, int src);

    // Lowest row index holding a 1, or -1 for a zero column.
    int first_set_row(int col) const;
    bool col_empty(int col) const { return first_set_row(col) < 0; }

    std::span<const std::uint64_t> col_words(int col) const;
    std::span<std::uint64_t> col_words(int col);

    // Padding bits are never set, so word-wise comparison is exact.
    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    int words_ = 0;  // words per column
    std::vector<std::uint64_t> data_;
};

// Rank over the two-element field by column elimination.
int rank_z2(BitMatrix m);

// a * b; requires a.cols() == b.rows().
BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);

// [a | b]; requires equal row counts.
BitMatrix hstack(const BitMatrix& a, const BitMatrix& b);

}  // namespace holescan
