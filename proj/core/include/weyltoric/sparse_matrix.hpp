#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "weyltoric/bigint.hpp"
#include "weyltoric/bit_matrix.hpp"
#include "weyltoric/coefficients.hpp"

namespace weyltoric {

// Sparse integer matrix, row-major; each row holds (col, value) pairs sorted
// by column, values nonzero. Boundary matrices live here.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<std::int32_t, BigInt>>> row_data;

    SparseIntMatrix() = default;
    SparseIntMatrix(int r, int c) : rows(r), cols(c), row_data(r) {}

    static SparseIntMatrix from_dense(const std::vector<std::vector<long>>& dense);

    // Row must be sorted by column with nonzero values; checked.
    void set_row(int r, std::vector<std::pair<std::int32_t, BigInt>> row);

    std::size_t nnz() const;
    SparseIntMatrix transposed() const;
    bool is_zero() const { return nnz() == 0; }

    // Projection mod 2, for the GF(2) elimination path.
    BitMatrix to_bit_matrix() const;
};

// Matrix product (small sizes; used for the boundary-composition check).
SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);

// Exact rank over Q (fraction-free Bareiss elimination with lazy row scaling)
// or over GF(p) (modular elimination; p = 2 routes through BitMatrix).
// Integer coefficients are rejected: rank over Z is a Smith-form question.
int field_rank(const SparseIntMatrix& m, const Coefficients& coeff);

struct SNFResult {
    std::vector<BigInt> invariant_factors;  // positive, d_i | d_{i+1}
    int rank = 0;                           // == invariant_factors.size()
};

// Invariant factors of m over Z, by elimination with smallest-nonzero-pivot
// selection. The divisibility chain is normalized before returning.
SNFResult smith_normal_form(const SparseIntMatrix& m);

}  // namespace weyltoric
