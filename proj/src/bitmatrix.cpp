#include "holescan/bitmatrix.hpp"

#include <bit>
#include <stdexcept>

namespace holescan {

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((rows + 63) / 64),
      data_(static_cast<std::size_t>(words_) * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be non-negative");
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i);
    return m;
}

bool BitMatrix::get(int row, int col) const {
    return (data_[static_cast<std::size_t>(col) * words_ + (row >> 6)] >> (row & 63)) & 1u;
}

void BitMatrix::set(int row, int col) {
    data_[static_cast<std::size_t>(col) * words_ + (row >> 6)] |= std::uint64_t{1} << (row & 63);
}

void BitMatrix::xor_col(int dst, int src) {
    std::uint64_t* d = data_.data() + static_cast<std::size_t>(dst) * words_;
    const std::uint64_t* s = data_.data() + static_cast<std::size_t>(src) * words_;
    for (int w = 0; w < words_; ++w) d[w] ^= s[w];
}

int BitMatrix::first_set_row(int col) const {
    const std::uint64_t* c = data_.data() + static_cast<std::size_t>(col) * words_;
    for (int w = 0; w < words_; ++w)
        if (c[w]) return (w << 6) + std::countr_zero(c[w]);
    return -1;
}

std::span<const std::uint64_t> BitMatrix::col_words(int col) const {
    return {data_.data() + static_cast<std::size_t>(col) * words_,
            static_cast<std::size_t>(words_)};
}

std::span<std::uint64_t> BitMatrix::col_words(int col) {
    return {data_.data() + static_cast<std::size_t>(col) * words_,
            static_cast<std::size_t>(words_)};
}

int rank_z2(BitMatrix m) {
    std::vector<int> owner(m.rows(), -1);  // pivot row -> owning column
    int rank = 0;
    for (int c = 0; c < m.cols(); ++c) {
        int p = m.first_set_row(c);
        while (p >= 0 && owner[p] >= 0) {
            m.xor_col(c, owner[p]);
            p = m.first_set_row(c);
        }
        if (p >= 0) {
            owner[p] = c;
            ++rank;
        }
    }
    return rank;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in multiply");
    BitMatrix out(a.rows(), b.cols());
    for (int k = 0; k < b.cols(); ++k) {
        auto dst = out.col_words(k);
        for (int j = 0; j < b.rows(); ++j) {
            if (!b.get(j, k)) continue;
            auto src = a.col_words(j);
            for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
        }
    }
    return out;
}

BitMatrix hstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("row count mismatch in hstack");
    BitMatrix out(a.rows(), a.cols() + b.cols());
    for (int c = 0; c < a.cols(); ++c) {
        auto dst = out.col_words(c);
        auto src = a.col_words(c);
        std::copy(src.begin(), src.end(), dst.begin());
    }
    for (int c = 0; c < b.cols(); ++c) {
        auto dst = out.col_words(a.cols() + c);
        auto src = b.col_words(c);
        std::copy(src.begin(), src.end(), dst.begin());
    }
    return out;
}

}  // namespace holescan
