#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weyltoric/chain_complex.hpp"
#include "weyltoric/coxeter.hpp"
#include "weyltoric/sparse_matrix.hpp"

using namespace weyltoric;

namespace {

// Deterministic LCG so the random-matrix properties are reproducible.
struct Lcg {
    std::uint64_t state = 0x2545f4914f6cdd1dULL;
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

// Plain rational Gaussian elimination, as an independent rank oracle.
int rank_rational_oracle(const SparseIntMatrix& m) {
    std::vector<std::vector<BigRat>> a(m.rows, std::vector<BigRat>(m.cols, 0));
    for (int r = 0; r < m.rows; ++r)
        for (const auto& [c, v] : m.row_data[r]) a[r][c] = BigRat(v);
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            BigRat f = a[r][c] / a[rank][c];
            for (int j = c; j < m.cols; ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

SparseIntMatrix random_matrix(Lcg& rng, int max_dim = 8) {
    int rows = static_cast<int>(rng.range(1, max_dim));
    int cols = static_cast<int>(rng.range(1, max_dim));
    std::vector<std::vector<long>> dense(rows, std::vector<long>(cols));
    for (auto& row : dense)
        for (auto& v : row) v = rng.range(-3, 3);
    return SparseIntMatrix::from_dense(dense);
}

// Minimal 6-vertex triangulation of the real projective plane.
SimplicialComplex rp2() {
    SimplicialComplex k;
    k.vertex_count = 6;
    for (auto f : {std::vector<std::int32_t>{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                   {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}}) {
        std::sort(f.begin(), f.end());
        k.facets.push_back(f);
    }
    std::sort(k.facets.begin(), k.facets.end());
    k.validate();
    return k;
}

}  // namespace

TEST_CASE("GF(2) rank and row space") {
    BitMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.set(i, i, true);
    CHECK(gf2_rank_rowspace(id).rank == 3);

    BitMatrix zero(4, 7);
    auto z = gf2_rank_rowspace(zero);
    CHECK(z.rank == 0);  // row space is {0}: 2^0 = 1 element

    auto kc3 = build_coxeter_complex(Family::C, 3);
    auto lambda = characteristic_matrix(kc3);
    auto space = gf2_rank_rowspace(lambda);
    CHECK(space.rank == 3);
    // The row space has 2^rank distinct elements.
    std::set<std::vector<std::uint64_t>> elems;
    for (std::uint32_t mask = 0; mask < 8; ++mask) elems.insert(space.basis.row_xor(mask));
    CHECK(elems.size() == 8);
    // The basis spans the original rows.
    for (int r = 0; r < lambda.rows(); ++r) {
        std::vector<std::uint64_t> row(lambda.row(r), lambda.row(r) + lambda.words_per_row());
        CHECK(gf2_in_rowspace(space, row, lambda.cols()));
    }
}

TEST_CASE("field_rank basics") {
    auto diag2 = SparseIntMatrix::from_dense({{2}});
    CHECK(field_rank(diag2, Coefficients::Q()) == 1);
    CHECK(field_rank(diag2, Coefficients::GF(2)) == 0);
    CHECK(field_rank(diag2, Coefficients::GF(3)) == 1);

    // Boundary of a triangle: 3 edges on 3 vertices.
    SimplicialComplex tri;
    tri.vertex_count = 3;
    tri.facets = {{0, 1}, {0, 2}, {1, 2}};
    auto data = build_chain_complex(tri);
    CHECK(field_rank(data.boundary_matrices[1], Coefficients::Q()) == 2);

    CHECK_THROWS_AS(field_rank(diag2, Coefficients::Z()), std::invalid_argument);
    CHECK_THROWS_AS(Coefficients::GF(4), std::invalid_argument);
    Coefficients bad{Coefficients::Kind::PrimeField, 6};
    CHECK_THROWS_AS(field_rank(diag2, bad), std::invalid_argument);
}

TEST_CASE("boundary ranks of the C_3 Coxeter complex") {
    // A 2-sphere on 26 vertices: rank d1 = f_0 - 1, rank d2 = f_1 - rank d1.
    auto kc3 = build_coxeter_complex(Family::C, 3);
    auto data = build_chain_complex(kc3.complex);
    CHECK(field_rank(data.boundary_matrices[1], Coefficients::Q()) == 25);
    CHECK(field_rank(data.boundary_matrices[2], Coefficients::Q()) == 47);
}

TEST_CASE("smith normal form basics") {
    auto m1 = SparseIntMatrix::from_dense({{2}});
    auto r1 = smith_normal_form(m1);
    CHECK(r1.rank == 1);
    CHECK(r1.invariant_factors == std::vector<BigInt>{2});

    auto m2 = SparseIntMatrix::from_dense({{1, 0}, {0, 3}});
    auto r2 = smith_normal_form(m2);
    CHECK(r2.invariant_factors == std::vector<BigInt>{1, 3});

    auto zero = SparseIntMatrix(3, 2);
    CHECK(smith_normal_form(zero).rank == 0);

    // A matrix whose diagonal needs the divisibility fix-up.
    auto m3 = SparseIntMatrix::from_dense({{2, 0}, {0, 3}});
    auto r3 = smith_normal_form(m3);
    CHECK(r3.invariant_factors == std::vector<BigInt>{1, 6});
}

TEST_CASE("RP^2 boundary has exactly one invariant factor 2") {
    // d2 is injective (H_2 = 0), so all 10 triangles give pivots.
    auto data = build_chain_complex(rp2());
    auto snf = smith_normal_form(data.boundary_matrices[2]);
    CHECK(snf.rank == 10);
    int twos = 0, ones = 0;
    for (const auto& f : snf.invariant_factors) {
        if (f == 1) ++ones;
        if (f == 2) ++twos;
    }
    CHECK(twos == 1);
    CHECK(ones == 9);
}

TEST_CASE("random matrices: rank routes agree and SNF chains divide") {
    Lcg rng;
    for (int trial = 0; trial < 200; ++trial) {
        auto m = random_matrix(rng);
        auto snf = smith_normal_form(m);
        const int q_rank = field_rank(m, Coefficients::Q());
        CHECK(q_rank == snf.rank);
        CHECK(q_rank == rank_rational_oracle(m));
        CHECK(q_rank == field_rank(m.transposed(), Coefficients::Q()));
        for (std::size_t i = 1; i < snf.invariant_factors.size(); ++i) {
            CHECK(snf.invariant_factors[i] % snf.invariant_factors[i - 1] == 0);
            CHECK(snf.invariant_factors[i] >= 1);
        }
        for (long p : {2L, 3L, 5L}) {
            int expected = 0;
            for (const auto& f : snf.invariant_factors)
                if (f % p != 0) ++expected;
            CHECK(field_rank(m, Coefficients::GF(p)) == expected);
        }
    }
}

TEST_CASE("sparse matrix plumbing") {
    auto m = SparseIntMatrix::from_dense({{1, 0, -2}, {0, 0, 3}});
    CHECK(m.nnz() == 3);
    auto t = m.transposed();
    CHECK(t.rows == 3);
    CHECK(t.cols == 2);
    auto prod = multiply(m, t);
    CHECK(prod.rows == 2);
    CHECK(prod.cols == 2);

    SparseIntMatrix bad(1, 3);
    CHECK_THROWS_AS(bad.set_row(0, {{2, BigInt(1)}, {1, BigInt(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(bad.set_row(0, {{0, BigInt(0)}}), std::invalid_argument);

    auto b = m.to_bit_matrix();
    CHECK(b.get(0, 0));
    CHECK_FALSE(b.get(0, 2));  // -2 is even
    CHECK(b.get(1, 2));
}

TEST_CASE("coefficient parsing") {
    CHECK(parse_coefficients("q") == Coefficients::Q());
    CHECK(parse_coefficients("z") == Coefficients::Z());
    CHECK(parse_coefficients("gf2") == Coefficients::GF(2));
    CHECK(parse_coefficients("gf101") == Coefficients::GF(101));
    CHECK_THROWS_AS(parse_coefficients("gf9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_coefficients("r"), std::invalid_argument);
}
