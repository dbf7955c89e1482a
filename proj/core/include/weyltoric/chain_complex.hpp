#pragma once

#include <map>
#include <vector>

#include "weyltoric/bigint.hpp"
#include "weyltoric/coefficients.hpp"
#include "weyltoric/simplicial_complex.hpp"
#include "weyltoric/sparse_matrix.hpp"

namespace weyltoric {

// Augmented (reduced) chain complex of a simplicial complex. Boundary
// matrices are stored with rows indexed by k-faces and columns by
// (k-1)-faces; boundary_matrices[0] is the augmentation onto the empty face
// (a single column of ones). The empty complex has no matrices and a single
// implicit face in degree -1.
struct ChainComplexData {
    std::vector<std::vector<std::vector<std::int32_t>>> faces_by_degree;  // [k], k = 0..dim
    std::vector<SparseIntMatrix> boundary_matrices;                       // [k], k = 0..dim

    int dimension() const { return static_cast<int>(faces_by_degree.size()) - 1; }
    long face_count(int degree) const {
        if (degree == -1) return 1;
        if (degree < -1 || degree > dimension()) return 0;
        return static_cast<long>(faces_by_degree[degree].size());
    }
};

// Enumerates faces by downward closure, orients boundaries by the sorted-
// vertex alternating-sign convention, and checks ∂∘∂ = 0 (complexes up to
// 1e5 faces).
ChainComplexData build_chain_complex(const SimplicialComplex& k);

// Reduced Betti numbers by degree (-1 upward). Only nonzero ranks are
// stored; the empty complex has rank 1 in degree -1.
struct BettiVector {
    Coefficients coefficients = Coefficients::Q();
    std::map<int, BigInt> ranks;

    BigInt rank(int degree) const {
        auto it = ranks.find(degree);
        return it == ranks.end() ? BigInt(0) : it->second;
    }
    int max_degree() const { return ranks.empty() ? -2 : ranks.rbegin()->first; }
    bool same_ranks(const BettiVector& other) const { return ranks == other.ranks; }
};

BettiVector betti_reduced(const ChainComplexData& data, const Coefficients& coeff);
BettiVector betti_reduced(const SimplicialComplex& k, const Coefficients& coeff);

// Reduced integral homology: ranks plus the invariant factors > 1 per degree.
struct IntegralHomology {
    std::map<int, BigInt> ranks;                    // nonzero only
    std::map<int, std::vector<BigInt>> torsion;     // nonempty only
    bool torsion_free() const { return torsion.empty(); }
    BettiVector rank_vector() const { return BettiVector{Coefficients::Z(), ranks}; }
};

IntegralHomology integral_homology(const ChainComplexData& data);
IntegralHomology integral_homology(const SimplicialComplex& k);

}  // namespace weyltoric
