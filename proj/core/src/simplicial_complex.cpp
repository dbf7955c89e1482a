#include "weyltoric/simplicial_complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace weyltoric {

bool SimplicialComplex::is_pure() const {
    if (facets.empty()) return true;
    const std::size_t d = facets.front().size();
    for (const auto& f : facets)
        if (f.size() != d) return false;
    return true;
}

void SimplicialComplex::validate() const {
    if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count)
        throw std::invalid_argument("label count does not match vertex count");
    std::vector<char> seen(vertex_count, 0);
    std::unordered_set<std::vector<std::int32_t>, VectorHash> facet_set;
    for (const auto& f : facets) {
        if (f.empty()) throw std::invalid_argument("empty facet");
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] < 0 || f[i] >= vertex_count) throw std::invalid_argument("facet index out of range");
            if (i > 0 && f[i] <= f[i - 1]) throw std::invalid_argument("facet not strictly sorted");
            seen[f[i]] = 1;
        }
        if (!facet_set.insert(f).second) throw std::invalid_argument("duplicate facet");
    }
    for (int v = 0; v < vertex_count; ++v)
        if (!seen[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " lies in no facet");
    // Antichain: no facet may be a subset of another. Each proper subset of a
    // facet is enumerated once and looked up.
    for (const auto& f : facets) {
        const std::size_t s = f.size();
        if (s > 25) throw std::invalid_argument("facet too large for antichain validation");
        for (std::uint32_t m = 1; m + 1 < (1u << s); ++m) {
            std::vector<std::int32_t> sub;
            for (std::size_t i = 0; i < s; ++i)
                if ((m >> i) & 1u) sub.push_back(f[i]);
            if (facet_set.contains(sub)) throw std::invalid_argument("facet list is not an antichain");
        }
    }
}

std::vector<std::vector<std::vector<std::int32_t>>> enumerate_faces(const SimplicialComplex& k) {
    const int dim = k.dimension();
    if (dim < 0) return {};
    std::vector<std::unordered_set<std::vector<std::int32_t>, VectorHash>> sets(dim + 1);
    for (const auto& f : k.facets) {
        const std::size_t s = f.size();
        for (std::uint32_t m = 1; m < (1u << s); ++m) {
            std::vector<std::int32_t> face;
            for (std::size_t i = 0; i < s; ++i)
                if ((m >> i) & 1u) face.push_back(f[i]);
            sets[face.size() - 1].insert(std::move(face));
        }
    }
    std::vector<std::vector<std::vector<std::int32_t>>> out(dim + 1);
    for (int d = 0; d <= dim; ++d) {
        out[d].assign(sets[d].begin(), sets[d].end());
        std::sort(out[d].begin(), out[d].end());
    }
    return out;
}

std::pair<std::vector<long long>, std::vector<long long>> f_h_vector(const SimplicialComplex& k) {
    if (!k.is_pure()) throw std::invalid_argument("f_h_vector requires a pure complex");
    auto faces = enumerate_faces(k);
    const int d = static_cast<int>(faces.size());  // facet size
    std::vector<long long> f(d + 1);
    f[0] = 1;
    for (int i = 0; i < d; ++i) f[i + 1] = static_cast<long long>(faces[i].size());
    // h_k = sum_{i=0..k} (-1)^{k-i} C(d-i, k-i) f_{i-1}
    auto binom = [](long long n, long long r) {
        if (r < 0 || r > n) return 0LL;
        long long v = 1;
        for (long long i = 1; i <= r; ++i) v = v * (n - r + i) / i;
        return v;
    };
    std::vector<long long> h(d + 1, 0);
    for (int kk = 0; kk <= d; ++kk)
        for (int i = 0; i <= kk; ++i) {
            long long term = binom(d - i, kk - i) * f[i];
            h[kk] += ((kk - i) % 2 == 0) ? term : -term;
        }
    return {f, h};
}

bool is_pseudomanifold(const SimplicialComplex& k) {
    if (!k.is_pure() || k.facets.empty()) return false;
    const std::size_t d = k.facets.front().size();
    if (d < 2) return false;
    std::unordered_map<std::vector<std::int32_t>, int, VectorHash> ridge_count;
    for (const auto& f : k.facets) {
        for (std::size_t drop = 0; drop < d; ++drop) {
            std::vector<std::int32_t> ridge;
            ridge.reserve(d - 1);
            for (std::size_t i = 0; i < d; ++i)
                if (i != drop) ridge.push_back(f[i]);
            ++ridge_count[std::move(ridge)];
        }
    }
    for (const auto& [ridge, c] : ridge_count)
        if (c != 2) return false;
    return true;
}

}  // namespace weyltoric
