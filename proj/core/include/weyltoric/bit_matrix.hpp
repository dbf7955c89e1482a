#pragma once

#include <cstdint>
#include <vector>

namespace weyltoric {

// Dense GF(2) matrix with 64-bit packed rows.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(std::size_t(rows) * words_, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words_per_row() const { return words_; }

    bool get(int r, int c) const { return (word(r, c / 64) >> (c % 64)) & 1u; }
    void set(int r, int c, bool v) {
        std::uint64_t& w = word(r, c / 64);
        std::uint64_t m = std::uint64_t(1) << (c % 64);
        if (v)
            w |= m;
        else
            w &= ~m;
    }

    const std::uint64_t* row(int r) const { return data_.data() + std::size_t(r) * words_; }
    std::uint64_t* row(int r) { return data_.data() + std::size_t(r) * words_; }

    void xor_row(int dst, int src) {
        auto* d = row(dst);
        const auto* s = row(src);
        for (int w = 0; w < words_; ++w) d[w] ^= s[w];
    }

    bool row_is_zero(int r) const {
        const auto* p = row(r);
        for (int w = 0; w < words_; ++w)
            if (p[w]) return false;
        return true;
    }

    // XOR of the rows selected by the n-bit mask, as a packed vector.
    std::vector<std::uint64_t> row_xor(std::uint32_t row_mask) const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::uint64_t& word(int r, int w) { return data_[std::size_t(r) * words_ + w]; }
    const std::uint64_t& word(int r, int w) const { return data_[std::size_t(r) * words_ + w]; }

    int rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<std::uint64_t> data_;
};

struct Gf2RowSpace {
    int rank = 0;
    BitMatrix basis;  // reduced row-echelon form, `rank` rows
};

// Rank and an RREF basis of the row space. The row space has 2^rank elements.
Gf2RowSpace gf2_rank_rowspace(const BitMatrix& m);

// True iff v lies in the span of an RREF basis.
bool gf2_in_rowspace(const Gf2RowSpace& space, const std::vector<std::uint64_t>& v, int cols);

}  // namespace weyltoric
