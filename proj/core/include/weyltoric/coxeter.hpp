#pragma once

#include <cstdint>
#include <vector>

#include "weyltoric/bit_matrix.hpp"
#include "weyltoric/family.hpp"
#include "weyltoric/poset_complex.hpp"
#include "weyltoric/signed_subset.hpp"
#include "weyltoric/simplicial_complex.hpp"

namespace weyltoric {

// Coxeter complex of type C_n or D_n with signed-subset vertex labels, in
// ascending base-3 code order.
struct CoxeterComplex {
    Family family = Family::C;
    int n = 0;
    SimplicialComplex complex;

    int vertex_index(const SignedSubset& v) const;  // -1 if absent

    std::vector<std::int32_t> index_by_code;  // dense, size 3^n, -1 where absent
};

// Type C: vertices are all signed subsets with 1 <= |I| <= n, facets the
// complete nested flags, one per (sign vector, permutation). Type D drops
// the |I| = n-1 labels; each facet holds the flag up to size n-2 plus the
// two size-n labels differing in one sign, deduplicated.
CoxeterComplex build_coxeter_complex(Family family, int n);

// Mod-2 characteristic vector of a ray label, as an n-bit mask (bit k-1 is
// the e_k coordinate). Throws for labels that are not vertices of the
// family's complex.
std::uint32_t lambda_mod2(Family family, int n, const SignedSubset& v);

// n x m GF(2) matrix whose column j is lambda of vertex j.
BitMatrix characteristic_matrix(const CoxeterComplex& k);
BitMatrix characteristic_matrix(Family family, int n);

// Induced subcomplex on the vertices whose row-sum over S is 1: vertex j is
// kept iff sum_{i in S} Lambda[i][j] = 1 over GF(2). Facets are the maximal
// traces of K's facets. S is a bitmask over [n] (bit i-1 = element i).
SimplicialComplex induced_subcomplex(const SimplicialComplex& k, const BitMatrix& lambda,
                                     std::uint32_t subset);

// The vertex set of the induced subcomplex computed directly from the
// parity conditions on I^± and I^-, independent of the characteristic
// matrix. v1 holds the |I| < n part, v2 the |I| = n part.
struct VertexPartition {
    std::vector<SignedSubset> v1;
    std::vector<SignedSubset> v2;
};
VertexPartition vertex_partition_oracle(Family family, int n, std::uint32_t subset);

// Reduced poset model of the subcomplex for the representative subset
// S = {1,...,2r-1}: type C is the poset on U ∪ W, type D on U ∪ W ∪ V'
// where V' holds the (n-1)-element intersections of adjacent size-n labels.
// Requires 1 <= r and 2r-1 < n.
PosetComplex reduced_poset_complex(Family family, int n, int r);

enum class RankSelectedKind { BooleanOdd, CrossOdd };

// Odd rank-selected Boolean algebra on [2r] / odd-cardinality faces of the
// cross-polytope on ±[2r], as inclusion posets. two_r must be even and >= 2.
PosetComplex rank_selected_complex(RankSelectedKind kind, int two_r);

}  // namespace weyltoric
