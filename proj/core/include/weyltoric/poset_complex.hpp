#pragma once

#include <cstdint>
#include <vector>

#include "weyltoric/signed_subset.hpp"
#include "weyltoric/simplicial_complex.hpp"

namespace weyltoric {

// A finite poset of signed subsets together with its order complex (the
// simplicial complex of chains). `less_than[i]` holds the full strict
// relation, i.e. all j with elements[i] < elements[j].
struct PosetComplex {
    std::vector<SignedSubset> elements;
    std::vector<std::vector<std::int32_t>> less_than;

    // Irreflexive and transitive; throws std::invalid_argument otherwise.
    void validate() const;

    // Facets are the maximal chains; an isolated element becomes a singleton
    // facet. Labels carry over.
    SimplicialComplex order_complex() const;
};

// Poset on the given elements ordered by inclusion of signed subsets.
// Elements are sorted into canonical (base-3 code) order; duplicates rejected.
PosetComplex poset_by_inclusion(std::vector<SignedSubset> elements, int n);

}  // namespace weyltoric
