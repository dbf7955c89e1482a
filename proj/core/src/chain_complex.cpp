#include "weyltoric/chain_complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace weyltoric {

ChainComplexData build_chain_complex(const SimplicialComplex& k) {
    ChainComplexData data;
    data.faces_by_degree = enumerate_faces(k);
    const int dim = data.dimension();
    if (dim < 0) return data;

    std::vector<std::unordered_map<std::vector<std::int32_t>, std::int32_t, VectorHash>> index(dim + 1);
    for (int d = 0; d <= dim; ++d)
        for (std::size_t i = 0; i < data.faces_by_degree[d].size(); ++i)
            index[d].emplace(data.faces_by_degree[d][i], static_cast<std::int32_t>(i));

    data.boundary_matrices.resize(dim + 1);
    // Augmentation: every vertex maps to the empty face with coefficient 1.
    auto& aug = data.boundary_matrices[0];
    aug = SparseIntMatrix(static_cast<int>(data.faces_by_degree[0].size()), 1);
    for (auto& row : aug.row_data) row.emplace_back(0, 1);

    std::size_t total_faces = 1;
    for (int d = 0; d <= dim; ++d) total_faces += data.faces_by_degree[d].size();

    for (int d = 1; d <= dim; ++d) {
        const auto& faces = data.faces_by_degree[d];
        auto& m = data.boundary_matrices[d];
        m = SparseIntMatrix(static_cast<int>(faces.size()),
                            static_cast<int>(data.faces_by_degree[d - 1].size()));
        std::vector<std::int32_t> sub;
        for (std::size_t fi = 0; fi < faces.size(); ++fi) {
            const auto& f = faces[fi];
            auto& row = m.row_data[fi];
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                sub.clear();
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != drop) sub.push_back(f[i]);
                row.emplace_back(index[d - 1].at(sub), (drop % 2 == 0) ? 1 : -1);
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        }
    }

    if (total_faces <= 100000) {
        for (int d = 1; d <= dim; ++d)
            if (!multiply(data.boundary_matrices[d], data.boundary_matrices[d - 1]).is_zero())
                throw std::logic_error("boundary composition is nonzero");
    }
    return data;
}

namespace {

std::map<int, BigInt> reduced_ranks(const ChainComplexData& data,
                                    const std::vector<int>& boundary_ranks) {
    // Rank-nullity on the augmented complex; degree -1 carries the empty face.
    const int dim = data.dimension();
    std::map<int, BigInt> out;
    auto rank_of = [&](int d) -> long {
        return (d >= 0 && d <= dim) ? boundary_ranks[d] : 0;
    };
    for (int d = -1; d <= dim; ++d) {
        long b = data.face_count(d) - rank_of(d) - rank_of(d + 1);
        if (b < 0) throw std::logic_error("negative Betti rank");
        if (b > 0) out.emplace(d, b);
    }
    return out;
}

}  // namespace

BettiVector betti_reduced(const ChainComplexData& data, const Coefficients& coeff) {
    if (!coeff.is_field())
        throw std::invalid_argument("betti_reduced needs field coefficients (use integral_homology for Z)");
    std::vector<int> ranks(data.dimension() + 1);
    for (int d = 0; d <= data.dimension(); ++d)
        ranks[d] = field_rank(data.boundary_matrices[d], coeff);
    return BettiVector{coeff, reduced_ranks(data, ranks)};
}

BettiVector betti_reduced(const SimplicialComplex& k, const Coefficients& coeff) {
    return betti_reduced(build_chain_complex(k), coeff);
}

IntegralHomology integral_homology(const ChainComplexData& data) {
    const int dim = data.dimension();
    std::vector<SNFResult> snf(dim + 1);
    std::vector<int> ranks(dim + 1);
    for (int d = 0; d <= dim; ++d) {
        snf[d] = smith_normal_form(data.boundary_matrices[d]);
        ranks[d] = snf[d].rank;
    }
    IntegralHomology out;
    out.ranks = reduced_ranks(data, ranks);
    // Torsion of H_d comes from the invariant factors of the degree-(d+1)
    // boundary.
    for (int d = 0; d < dim; ++d) {
        std::vector<BigInt> t;
        for (const BigInt& f : snf[d + 1].invariant_factors)
            if (f > 1) t.push_back(f);
        if (!t.empty()) out.torsion.emplace(d, std::move(t));
    }
    return out;
}

IntegralHomology integral_homology(const SimplicialComplex& k) {
    return integral_homology(build_chain_complex(k));
}

}  // namespace weyltoric
