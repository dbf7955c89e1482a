#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "weyltoric/signed_subset.hpp"

namespace weyltoric {

// Finite abstract simplicial complex: facet list over vertices 0..m-1, faces
// implied by downward closure. Facets are sorted index vectors and form an
// antichain; an isolated vertex is a singleton facet. `labels`, when
// non-empty, attaches a SignedSubset to each vertex (Coxeter-complex case).
struct SimplicialComplex {
    int vertex_count = 0;
    std::vector<std::vector<std::int32_t>> facets;
    std::vector<SignedSubset> labels;

    int dimension() const {
        std::size_t d = 0;
        for (const auto& f : facets) d = std::max(d, f.size());
        return static_cast<int>(d) - 1;
    }

    bool empty() const { return vertex_count == 0; }
    bool is_pure() const;

    // Full structural check (sorted facets, index range, antichain, label
    // count, every vertex covered). Throws std::invalid_argument.
    void validate() const;
};

// All faces grouped by degree (faces[k] = sorted list of (k+1)-vertex tuples,
// each tuple sorted). The empty face is implicit.
std::vector<std::vector<std::vector<std::int32_t>>> enumerate_faces(const SimplicialComplex& k);

// f-vector (leading 1 for the empty face) and h-vector of a pure complex.
// Throws std::invalid_argument for a non-pure complex.
std::pair<std::vector<long long>, std::vector<long long>> f_h_vector(const SimplicialComplex& k);

// Every codimension-1 face of a pure complex lies in exactly two facets.
bool is_pseudomanifold(const SimplicialComplex& k);

struct VectorHash {
    std::size_t operator()(const std::vector<std::int32_t>& v) const {
        std::size_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
        for (auto x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace weyltoric
