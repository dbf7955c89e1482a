#include "weyltoric/bit_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace weyltoric {

std::vector<std::uint64_t> BitMatrix::row_xor(std::uint32_t row_mask) const {
    std::vector<std::uint64_t> acc(words_, 0);
    for (int r = 0; r < rows_; ++r) {
        if ((row_mask >> r) & 1u) {
            const auto* s = row(r);
            for (int w = 0; w < words_; ++w) acc[w] ^= s[w];
        }
    }
    return acc;
}

namespace {

int leading_bit(const std::uint64_t* p, int words) {
    for (int w = 0; w < words; ++w)
        if (p[w]) return w * 64 + std::countr_zero(p[w]);
    return -1;
}

}  // namespace

Gf2RowSpace gf2_rank_rowspace(const BitMatrix& m) {
    const int words = m.words_per_row();
    // Basis rows kept in increasing leading-column order; forward + back
    // substitution yields RREF.
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<int> leads;
    for (int r = 0; r < m.rows(); ++r) {
        std::vector<std::uint64_t> row(m.row(r), m.row(r) + words);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            int l = leads[b];
            if ((row[l / 64] >> (l % 64)) & 1u)
                for (int w = 0; w < words; ++w) row[w] ^= basis[b][w];
        }
        int l = leading_bit(row.data(), words);
        if (l < 0) continue;
        // Clear this column from existing basis rows (RREF).
        for (std::size_t b = 0; b < basis.size(); ++b)
            if ((basis[b][l / 64] >> (l % 64)) & 1u)
                for (int w = 0; w < words; ++w) basis[b][w] ^= row[w];
        // Insert keeping leads sorted.
        std::size_t at = 0;
        while (at < leads.size() && leads[at] < l) ++at;
        basis.insert(basis.begin() + at, std::move(row));
        leads.insert(leads.begin() + at, l);
    }
    Gf2RowSpace out;
    out.rank = static_cast<int>(basis.size());
    out.basis = BitMatrix(out.rank, m.cols());
    for (int r = 0; r < out.rank; ++r)
        for (int w = 0; w < words; ++w) out.basis.row(r)[w] = basis[r][w];
    return out;
}

bool gf2_in_rowspace(const Gf2RowSpace& space, const std::vector<std::uint64_t>& v, int cols) {
    if (space.basis.cols() != cols) throw std::invalid_argument("column count mismatch");
    std::vector<std::uint64_t> row = v;
    const int words = space.basis.words_per_row();
    row.resize(words, 0);
    for (int b = 0; b < space.rank; ++b) {
        int l = leading_bit(space.basis.row(b), words);
        if (l >= 0 && ((row[l / 64] >> (l % 64)) & 1u))
            for (int w = 0; w < words; ++w) row[w] ^= space.basis.row(b)[w];
    }
    return leading_bit(row.data(), words) < 0;
}

}  // namespace weyltoric
