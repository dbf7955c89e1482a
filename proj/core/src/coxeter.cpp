#include "weyltoric/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace weyltoric {

namespace {

std::uint64_t pow3(int n) {
    std::uint64_t p = 1;
    while (n-- > 0) p *= 3;
    return p;
}

void check_rank(Family family, int n) {
    if (!has_complex(family))
        throw std::invalid_argument("complexes exist only for families C and D");
    if (n < min_rank(family))
        throw std::invalid_argument("family " + family_name(family) + " requires n >= " +
                                    std::to_string(min_rank(family)) + ", got " + std::to_string(n));
    if (n > 18) throw std::invalid_argument("rank too large for the base-3 vertex encoding");
}

}  // namespace

int CoxeterComplex::vertex_index(const SignedSubset& v) const {
    std::uint64_t c = v.code(n);
    if (c >= index_by_code.size()) return -1;
    return index_by_code[c];
}

CoxeterComplex build_coxeter_complex(Family family, int n) {
    check_rank(family, n);
    CoxeterComplex out;
    out.family = family;
    out.n = n;

    const std::uint64_t codes = pow3(n);
    out.index_by_code.assign(codes, -1);
    auto& cx = out.complex;
    for (std::uint64_t code = 1; code < codes; ++code) {
        SignedSubset v = SignedSubset::from_code(code, n);
        if (family == Family::D && v.size() == n - 1) continue;
        out.index_by_code[code] = static_cast<std::int32_t>(cx.labels.size());
        cx.labels.push_back(v);
    }
    cx.vertex_count = static_cast<int>(cx.labels.size());

    // Walk every (sign vector mu, permutation sigma) pair. Labels accumulate
    // one signed index per step; the base-3 code accumulates with them.
    std::vector<std::uint64_t> p3(n);
    for (int i = 0; i < n; ++i) p3[i] = pow3(i);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    std::unordered_set<std::vector<std::int32_t>, VectorHash> dedup;  // type D only
    std::vector<std::int32_t> facet(n);
    do {
        for (std::uint32_t mu = 0; mu < (1u << n); ++mu) {
            std::uint64_t code = 0;
            if (family == Family::C) {
                for (int k = 0; k < n; ++k) {
                    code += p3[perm[k]] * (((mu >> k) & 1u) ? 2 : 1);
                    facet[k] = out.index_by_code[code];
                }
            } else {
                for (int k = 0; k < n - 2; ++k) {
                    code += p3[perm[k]] * (((mu >> k) & 1u) ? 2 : 1);
                    facet[k] = out.index_by_code[code];
                }
                // Both size-n labels: full flag ending, and the same with the
                // final sign reversed.
                std::uint64_t c2 = code + p3[perm[n - 2]] * (((mu >> (n - 2)) & 1u) ? 2 : 1);
                std::uint64_t plain = c2 + p3[perm[n - 1]] * (((mu >> (n - 1)) & 1u) ? 2 : 1);
                std::uint64_t flipped = c2 + p3[perm[n - 1]] * (((mu >> (n - 1)) & 1u) ? 1 : 2);
                facet[n - 2] = out.index_by_code[flipped];
                facet[n - 1] = out.index_by_code[plain];
            }
            std::vector<std::int32_t> sorted_facet = facet;
            std::sort(sorted_facet.begin(), sorted_facet.end());
            if (family == Family::C) {
                cx.facets.push_back(std::move(sorted_facet));
            } else if (dedup.insert(sorted_facet).second) {
                cx.facets.push_back(std::move(sorted_facet));
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(cx.facets.begin(), cx.facets.end());
    return out;
}

std::uint32_t lambda_mod2(Family family, int n, const SignedSubset& v) {
    check_rank(family, n);
    const std::uint32_t full = (1u << n) - 1;
    const std::uint32_t nbit = 1u << (n - 1);
    const std::uint32_t support = v.support();
    if (support == 0 || (support & ~full))
        throw std::invalid_argument("label is not a vertex of the rank-n complex");
    const int size = v.size();
    if (family == Family::D && size == n - 1)
        throw std::invalid_argument("|I| = n-1 labels are not vertices of the type-D complex");
    if (size <= n - 1) return (support & nbit) ? (full & ~support) : support;
    // |I| = n: the e_n coordinate plus the indices on the side opposite to n.
    return nbit | ((v.positives() & nbit) ? v.negatives() : v.positives());
}

BitMatrix characteristic_matrix(const CoxeterComplex& k) {
    BitMatrix m(k.n, k.complex.vertex_count);
    for (int j = 0; j < k.complex.vertex_count; ++j) {
        std::uint32_t col = lambda_mod2(k.family, k.n, k.complex.labels[j]);
        for (int i = 0; i < k.n; ++i)
            if ((col >> i) & 1u) m.set(i, j, true);
    }
    return m;
}

BitMatrix characteristic_matrix(Family family, int n) {
    return characteristic_matrix(build_coxeter_complex(family, n));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& k, const BitMatrix& lambda,
                                     std::uint32_t subset) {
    if (lambda.cols() != k.vertex_count)
        throw std::invalid_argument("characteristic matrix does not match the complex");
    const auto row_sum = lambda.row_xor(subset);

    std::vector<std::int32_t> new_index(k.vertex_count, -1);
    SimplicialComplex out;
    for (int j = 0; j < k.vertex_count; ++j) {
        if ((row_sum[j / 64] >> (j % 64)) & 1u) {
            new_index[j] = out.vertex_count++;
            if (!k.labels.empty()) out.labels.push_back(k.labels[j]);
        }
    }
    if (out.vertex_count == 0) return out;

    std::unordered_set<std::vector<std::int32_t>, VectorHash> traces;
    for (const auto& f : k.facets) {
        std::vector<std::int32_t> t;
        for (auto v : f)
            if (new_index[v] >= 0) t.push_back(new_index[v]);
        if (!t.empty()) traces.insert(std::move(t));  // already sorted: new_index is monotone
    }
    // Keep only maximal traces: each proper subset of a trace is non-maximal.
    std::unordered_set<std::vector<std::int32_t>, VectorHash> dominated;
    for (const auto& t : traces) {
        const std::size_t s = t.size();
        for (std::uint32_t m = 1; m + 1 < (1u << s); ++m) {
            std::vector<std::int32_t> sub;
            for (std::size_t i = 0; i < s; ++i)
                if ((m >> i) & 1u) sub.push_back(t[i]);
            if (traces.contains(sub)) dominated.insert(std::move(sub));
        }
    }
    for (const auto& t : traces)
        if (!dominated.contains(t)) out.facets.push_back(t);
    std::sort(out.facets.begin(), out.facets.end());
    return out;
}

VertexPartition vertex_partition_oracle(Family family, int n, std::uint32_t subset) {
    check_rank(family, n);
    const std::uint32_t nbit = 1u << (n - 1);
    const bool n_in = subset & nbit;
    const bool s_odd = std::popcount(subset) % 2 == 1;
    const std::uint32_t s_without_n = subset & ~nbit;

    // Four parity cases, split by |S| mod 2 and by n ∈ S. Both parts test
    // against the same mask: S∪{n}, S or S\{n}. For |I| < n membership is
    // |I^± ∩ mask| odd; for |I| = n it is |I^- ∩ mask| odd when n ∉ S and
    // even when n ∈ S.
    const std::uint32_t mask = n_in ? (s_odd ? s_without_n : subset)
                                    : (s_odd ? (subset | nbit) : subset);
    const int top_parity = n_in ? 0 : 1;  // required |I^- ∩ mask| mod 2

    VertexPartition out;
    const std::uint64_t codes = pow3(n);
    for (std::uint64_t code = 1; code < codes; ++code) {
        SignedSubset v = SignedSubset::from_code(code, n);
        const int size = v.size();
        if (family == Family::D && size == n - 1) continue;
        if (size == n) {
            if (std::popcount(v.negatives() & mask) % 2 == top_parity) out.v2.push_back(v);
        } else {
            if (std::popcount(v.support() & mask) % 2 == 1) out.v1.push_back(v);
        }
    }
    return out;
}

PosetComplex reduced_poset_complex(Family family, int n, int r) {
    check_rank(family, n);
    if (r < 1 || 2 * r - 1 >= n)
        throw std::invalid_argument("reduced poset requires 1 <= r and 2r-1 < n");
    const std::uint32_t nbit = 1u << (n - 1);
    std::uint32_t subset = 0;
    for (int i = 1; i <= 2 * r - 1; ++i) subset |= 1u << (i - 1);

    auto [v1, v2] = vertex_partition_oracle(family, n, subset);
    std::vector<SignedSubset> elements;
    const std::uint32_t ground = subset | nbit;  // S ∪ {n} as an index mask
    if (family == Family::C) {
        for (const auto& v : v1)
            if ((v.support() & ~ground) == 0) elements.push_back(v);
        elements.insert(elements.end(), v2.begin(), v2.end());
    } else {
        for (const auto& v : v1)
            if ((v.support() & ~ground) == 0 && v.size() < n - 1) elements.push_back(v);
        elements.insert(elements.end(), v2.begin(), v2.end());
        // V': (n-1)-sized intersections of adjacent size-n labels.
        std::unordered_set<SignedSubset, SignedSubsetHash> vprime;
        for (std::size_t i = 0; i < v2.size(); ++i)
            for (std::size_t j = i + 1; j < v2.size(); ++j) {
                SignedSubset meet = v2[i].intersect(v2[j]);
                if (meet.size() == n - 1) vprime.insert(meet);
            }
        elements.insert(elements.end(), vprime.begin(), vprime.end());
    }
    return poset_by_inclusion(std::move(elements), n);
}

PosetComplex rank_selected_complex(RankSelectedKind kind, int two_r) {
    if (two_r < 2 || two_r % 2 != 0)
        throw std::invalid_argument("rank-selected complexes require an even parameter >= 2");
    std::vector<SignedSubset> elements;
    if (kind == RankSelectedKind::BooleanOdd) {
        for (std::uint32_t m = 1; m < (1u << two_r); ++m)
            if (std::popcount(m) % 2 == 1) elements.emplace_back(m, 0);
    } else {
        const std::uint64_t codes = pow3(two_r);
        for (std::uint64_t code = 1; code < codes; ++code) {
            SignedSubset v = SignedSubset::from_code(code, two_r);
            if (v.size() % 2 == 1) elements.push_back(v);
        }
    }
    return poset_by_inclusion(std::move(elements), two_r);
}

}  // namespace weyltoric
