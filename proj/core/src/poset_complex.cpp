#include "weyltoric/poset_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace weyltoric {

namespace {

using Bitset = std::vector<std::uint64_t>;

Bitset make_bitset(std::size_t n) { return Bitset((n + 63) / 64, 0); }
void bs_set(Bitset& b, std::size_t i) { b[i / 64] |= std::uint64_t(1) << (i % 64); }
bool bs_get(const Bitset& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }

}  // namespace

void PosetComplex::validate() const {
    const std::size_t n = elements.size();
    if (less_than.size() != n) throw std::invalid_argument("relation size mismatch");
    std::vector<Bitset> succ(n, make_bitset(n));
    for (std::size_t i = 0; i < n; ++i)
        for (auto j : less_than[i]) {
            if (j < 0 || static_cast<std::size_t>(j) >= n)
                throw std::invalid_argument("relation index out of range");
            if (static_cast<std::size_t>(j) == i)
                throw std::invalid_argument("order relation is not irreflexive");
            bs_set(succ[i], j);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (auto j : less_than[i])
            for (std::size_t w = 0; w < succ[i].size(); ++w)
                if (succ[j][w] & ~succ[i][w])
                    throw std::invalid_argument("order relation is not transitive");
}

SimplicialComplex PosetComplex::order_complex() const {
    const std::size_t n = elements.size();
    std::vector<Bitset> succ(n, make_bitset(n));
    std::vector<char> has_pred(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (auto j : less_than[i]) {
            bs_set(succ[i], j);
            has_pred[j] = 1;
        }
    // Hasse covers: j covers i iff i<j and no k with i<k<j.
    std::vector<std::vector<std::int32_t>> covers(n);
    for (std::size_t i = 0; i < n; ++i) {
        Bitset reach = make_bitset(n);
        for (auto k : less_than[i])
            for (std::size_t w = 0; w < reach.size(); ++w) reach[w] |= succ[k][w];
        for (auto j : less_than[i])
            if (!bs_get(reach, j)) covers[i].push_back(j);
    }

    SimplicialComplex out;
    out.vertex_count = static_cast<int>(n);
    out.labels = elements;
    // Maximal chains: start at a minimal element, extend along covers until a
    // maximal element. Iterative DFS.
    std::vector<std::int32_t> chain;
    std::vector<std::size_t> branch;  // next cover index to try per level
    for (std::size_t start = 0; start < n; ++start) {
        if (has_pred[start]) continue;
        chain.assign(1, static_cast<std::int32_t>(start));
        branch.assign(1, 0);
        while (!chain.empty()) {
            const auto top = chain.back();
            if (branch.back() == 0 && covers[top].empty()) {
                auto facet = chain;
                std::sort(facet.begin(), facet.end());
                out.facets.push_back(std::move(facet));
            }
            if (branch.back() < covers[top].size()) {
                auto next = covers[top][branch.back()++];
                chain.push_back(next);
                branch.push_back(0);
            } else {
                chain.pop_back();
                branch.pop_back();
            }
        }
    }
    std::sort(out.facets.begin(), out.facets.end());
    return out;
}

PosetComplex poset_by_inclusion(std::vector<SignedSubset> elements, int n) {
    std::sort(elements.begin(), elements.end(),
              [n](const SignedSubset& a, const SignedSubset& b) { return a.code(n) < b.code(n); });
    for (std::size_t i = 1; i < elements.size(); ++i)
        if (elements[i] == elements[i - 1])
            throw std::invalid_argument("duplicate poset element");
    PosetComplex p;
    p.elements = std::move(elements);
    p.less_than.resize(p.elements.size());
    for (std::size_t i = 0; i < p.elements.size(); ++i)
        for (std::size_t j = 0; j < p.elements.size(); ++j)
            if (i != j && p.elements[i].subset_of(p.elements[j]) && p.elements[i] != p.elements[j])
                p.less_than[i].push_back(static_cast<std::int32_t>(j));
    return p;
}

}  // namespace weyltoric
