#include "weyltoric/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "weyltoric/cache.hpp"
#include "weyltoric/sequences.hpp"

namespace weyltoric {

Strategy parse_strategy(std::string_view s) {
    if (s == "full") return Strategy::Full;
    if (s == "orbit") return Strategy::Orbit;
    if (s == "poset") return Strategy::Poset;
    throw std::invalid_argument("unknown strategy '" + std::string(s) + "'");
}

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Full: return "full";
        case Strategy::Orbit: return "orbit";
        case Strategy::Poset: return "poset";
    }
    return "?";
}

VerifyLevel parse_verify_level(std::string_view s) {
    if (s == "quick") return VerifyLevel::Quick;
    if (s == "full") return VerifyLevel::Full;
    throw std::invalid_argument("unknown verify level '" + std::string(s) + "'");
}

namespace {

void check_pipeline_rank(Family family, int n) {
    if (!has_complex(family))
        throw std::invalid_argument("the pipeline handles families C and D only");
    if (n < min_rank(family))
        throw std::invalid_argument("family " + family_name(family) + " requires n >= " +
                                    std::to_string(min_rank(family)));
}

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hc = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hc, 1u, 16u));
}

template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    jobs = resolve_jobs(jobs);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<SubsetClass> orbit_classes(Family family, int n) {
    check_pipeline_rank(family, n);
    const std::uint32_t nbit = 1u << (n - 1);
    SubsetClass empty{SubsetClass::Tag::Empty, 0, 0, {0}};
    SubsetClass n_only{SubsetClass::Tag::NOnly, 0, nbit, {nbit}};
    std::map<int, SubsetClass> by_r;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        if (s == nbit) continue;
        const std::uint32_t sp = s & ~nbit;
        const int r = (std::popcount(sp) + 1) / 2;
        auto [it, fresh] = by_r.try_emplace(r);
        if (fresh) {
            it->second.tag = SubsetClass::Tag::R;
            it->second.r = r;
            it->second.representative = (1u << (2 * r - 1)) - 1;  // {1, ..., 2r-1}
        }
        it->second.members.push_back(s);
    }
    std::vector<SubsetClass> out{std::move(empty), std::move(n_only)};
    for (auto& [r, cls] : by_r) out.push_back(std::move(cls));
    return out;
}

BettiVector expected_subcomplex_betti(Family family, int n, std::uint32_t subset) {
    check_pipeline_rank(family, n);
    BettiVector out{Coefficients::Q(), {}};
    const std::uint32_t nbit = 1u << (n - 1);
    const std::uint32_t sp = subset & ~nbit;
    if (subset == 0) {
        out.ranks.emplace(-1, 1);
        return out;
    }
    if (sp == 0) {
        if (family == Family::C) {
            out.ranks.emplace(0, (BigInt(1) << n) - 1);  // 2^n isolated points
        } else {
            auto [s, t] = aux_sequences(n);
            (void)s;
            if (t != 0) out.ranks.emplace(1, t);
        }
        return out;
    }
    const int r = (std::popcount(sp) + 1) / 2;
    const BigInt a2r = euler_zigzag(2 * r);
    const BigInt b2r = springer(2 * r);
    const BigInt half = BigInt(1) << (2 * r - 1);
    const BigInt low = b2r - half * a2r;  // degree r-1
    if (low != 0) out.ranks.emplace(r - 1, low);
    if (family == Family::C) {
        const BigInt high = ((BigInt(1) << (n - 2 * r)) - 1) * half * a2r;  // degree r
        if (high != 0) out.ranks.emplace(r, high);
    } else {
        auto [s, t] = aux_sequences(n - 2 * r);
        (void)s;
        const BigInt high = half * t * a2r;  // degree r+1; vanishes for n = 2r, 2r+1
        if (high != 0) out.ranks.emplace(r + 1, high);
    }
    return out;
}

BettiReport betti_real_toric(Family family, int n, const Coefficients& coeff, Strategy strategy,
                             const PipelineOptions& options) {
    check_pipeline_rank(family, n);
    if (strategy == Strategy::Poset && !coeff.is_field())
        throw std::invalid_argument(
            "poset strategy is restricted to field coefficients; use full or orbit for Z");

    const auto t0 = std::chrono::steady_clock::now();
    BettiReport report;
    report.family = family;
    report.n = n;
    report.coefficients = coeff;
    report.strategy = strategy;

    CoxeterComplex k = load_or_build_complex(options.cache_dir, family, n);
    const BitMatrix lambda = characteristic_matrix(k);
    if (gf2_rank_rowspace(lambda).rank != n)
        throw internal_check_error("characteristic matrix does not have GF(2) rank n");
    const std::string header = complex_header_line(k);
    report.timings_ms["build_complex"] = ms_since(t0);

    struct Item {
        std::uint32_t subset;
        const SubsetClass* cls;  // null for the full strategy
    };
    std::vector<SubsetClass> classes;
    std::vector<Item> items;
    const std::uint32_t num_subsets = 1u << n;
    if (strategy == Strategy::Full) {
        for (std::uint32_t s = 0; s < num_subsets; ++s) items.push_back({s, nullptr});
    } else {
        classes = orbit_classes(family, n);
        for (const auto& cls : classes) items.push_back({cls.representative, &cls});
    }

    const auto t1 = std::chrono::steady_clock::now();
    std::vector<CachedBetti> results(items.size());
    parallel_for(items.size(), options.jobs, [&](std::size_t idx) {
        const Item& item = items[idx];
        std::filesystem::path cache_file;
        if (options.cache_dir) {
            cache_file = betti_cache_path(*options.cache_dir, family, n, item.subset, coeff);
            if (auto hit = load_betti_cache(cache_file, header)) {
                results[idx] = std::move(*hit);
                return;
            }
        }
        CachedBetti value;
        const bool via_poset =
            strategy == Strategy::Poset && item.cls && item.cls->tag == SubsetClass::Tag::R;
        if (via_poset) {
            auto order = reduced_poset_complex(family, n, item.cls->r).order_complex();
            value.ranks = betti_reduced(order, coeff).ranks;
        } else {
            auto ks = induced_subcomplex(k.complex, lambda, item.subset);
            if (coeff.kind == Coefficients::Kind::Integer) {
                auto ih = integral_homology(ks);
                value.ranks = std::move(ih.ranks);
                value.torsion = std::move(ih.torsion);
            } else {
                value.ranks = betti_reduced(ks, coeff).ranks;
            }
        }
        results[idx] = std::move(value);
        if (options.cache_dir) store_betti_cache(cache_file, header, results[idx]);
    });
    report.timings_ms["subsets"] = ms_since(t1);

    std::vector<const CachedBetti*> by_subset(num_subsets, nullptr);
    for (std::size_t idx = 0; idx < items.size(); ++idx) {
        if (items[idx].cls) {
            for (std::uint32_t m : items[idx].cls->members) by_subset[m] = &results[idx];
        } else {
            by_subset[items[idx].subset] = &results[idx];
        }
    }
    report.per_subset.assign(num_subsets, BettiVector{coeff, {}});
    int max_degree = -1;
    for (std::uint32_t s = 0; s < num_subsets; ++s) {
        if (!by_subset[s]) throw internal_check_error("subset classes do not cover the power set");
        report.per_subset[s].ranks = by_subset[s]->ranks;
        if (!by_subset[s]->ranks.empty())
            max_degree = std::max(max_degree, by_subset[s]->ranks.rbegin()->first);
        for (const auto& [degree, factors] : by_subset[s]->torsion)
            report.torsion_summary.push_back({s, degree, factors});
    }

    // beta^r(X) = sum over S of the degree-(r-1) rank; the empty subset's
    // degree -1 class supplies beta^0.
    report.betti.assign(max_degree + 2, 0);
    for (std::uint32_t s = 0; s < num_subsets; ++s)
        for (const auto& [degree, rank] : by_subset[s]->ranks) report.betti[degree + 1] += rank;
    while (report.betti.size() > 1 && report.betti.back() == 0) report.betti.pop_back();

    // Aggregation identity recomputed from the per-subset table.
    for (std::size_t r = 0; r < report.betti.size(); ++r) {
        BigInt acc = 0;
        for (const auto& vec : report.per_subset) acc += vec.rank(static_cast<int>(r) - 1);
        if (acc != report.betti[r])
            throw internal_check_error("aggregation identity violated at degree " + std::to_string(r));
    }

    report.euler_char = 0;
    int sign = 1;
    for (const BigInt& b : report.betti) {
        report.euler_char += sign * b;
        sign = -sign;
    }
    report.timings_ms["total"] = ms_since(t0);
    return report;
}

std::optional<ReferenceRow> reference_row(Family family, int n) {
    // Published nonzero Betti numbers and Euler characteristics, n <= 11.
    static const std::map<int, ReferenceRow> type_c{
        {3, {{1, 13, 12}, 0}},
        {4, {{1, 27, 106}, 80}},
        {5, {{1, 51, 450, 400}, 0}},
        {6, {{1, 93, 1410, 5222}, -3904}},
        {7, {{1, 169, 3794, 30954, 27328}, 0}},
        {8, {{1, 311, 9436, 129416, 474850}, 354560}},
        {9, {{1, 583, 22572, 448728, 3617778, 3191040}, 0}},
        {10, {{1, 1113, 53040, 1399020, 18908730, 69295142}, -51733504}},
        {11, {{1, 2157, 123640, 4102164, 80153898, 645241762, 569068544}, 0}},
    };
    static const std::map<int, ReferenceRow> type_d{
        {4, {{1, 12, 51, 24}, 16}},
        {5, {{1, 20, 219, 200}, 0}},
        {6, {{1, 30, 639, 2642, 1200}, -832}},
        {7, {{1, 42, 1511, 15470, 14000}, 0}},
        {8, {{1, 56, 3149, 59864, 242114, 109312}, 76032}},
        {9, {{1, 72, 6077, 182472, 1816146, 1639680}, 0}},
        {10, {{1, 90, 11237, 479040, 8778330, 35366822, 15955200}, -11101184}},
        {11, {{1, 110, 20437, 1143824, 32715210, 324103714, 292512000}, 0}},
    };
    const std::map<int, ReferenceRow>* table = nullptr;
    if (family == Family::C) table = &type_c;
    if (family == Family::D) table = &type_d;
    if (!table) return std::nullopt;
    auto it = table->find(n);
    if (it == table->end()) return std::nullopt;
    return it->second;
}

namespace {

std::string join_bigints(const std::vector<BigInt>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

std::string join_longs(const std::vector<long long>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

std::string ranks_to_string(const std::map<int, BigInt>& ranks) {
    if (ranks.empty()) return "{}";
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [d, r] : ranks) {
        os << (first ? "" : ", ") << d << ":" << r;
        first = false;
    }
    os << "}";
    return os.str();
}

std::string subset_to_string(std::uint32_t s, int n) {
    std::string out = "{";
    bool first = true;
    for (int i = 1; i <= n; ++i)
        if ((s >> (i - 1)) & 1u) {
            if (!first) out += ",";
            out += std::to_string(i);
            first = false;
        }
    return out + "}";
}

bool row_matches_reference(const std::vector<BigInt>& row, const std::vector<long long>& ref) {
    if (row.size() != ref.size()) return false;
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != ref[i]) return false;
    return true;
}

// Relabels a subcomplex facet list through a vertex map and canonicalizes,
// for the symmetry checks.
template <typename Map>
std::vector<std::vector<std::uint64_t>> facet_codes(const SimplicialComplex& ks, int n, Map map) {
    std::vector<std::vector<std::uint64_t>> out;
    out.reserve(ks.facets.size());
    for (const auto& f : ks.facets) {
        std::vector<std::uint64_t> codes;
        codes.reserve(f.size());
        for (auto v : f) codes.push_back(map(ks.labels[v]).code(n));
        std::sort(codes.begin(), codes.end());
        out.push_back(std::move(codes));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SignedSubset identity_label(const SignedSubset& v) { return v; }

}  // namespace

VerificationReport verify(Family family, int n, VerifyLevel level, const PipelineOptions& options) {
    check_pipeline_rank(family, n);
    VerificationReport report;
    report.family = family;
    report.n = n;
    report.level = level;
    auto add = [&](std::string name, std::string expected, std::string actual, bool pass) {
        report.overall = report.overall && pass;
        report.checks.push_back({std::move(name), std::move(expected), std::move(actual), pass});
    };

    const auto row = betti_closed_form_row(family, n);
    const BigInt chi = euler_char_closed_form(family, n);
    if (auto ref = reference_row(family, n)) {
        add("closed_form_vs_reference", join_longs(ref->betti), join_bigints(row),
            row_matches_reference(row, ref->betti));
        add("closed_form_chi_vs_reference", std::to_string(ref->chi), chi.str(),
            chi == ref->chi);
    }
    add("beta0_is_one", "1", row[0].str(), row[0] == 1);
    if (n % 2 == 1) add("chi_zero_for_odd_rank", "0", chi.str(), chi == 0);
    if (family == Family::C) {
        bool vanish = true;
        for (int r = (n + 1) / 2 + 1; r <= (n + 1) / 2 + 3; ++r)
            vanish = vanish && betti_closed_form(family, n, r) == 0;
        add("vanishing_above_floor_half_n_plus_1", "0", vanish ? "0" : "nonzero", vanish);
    }
    if (level == VerifyLevel::Quick) return report;

    try {
        // Structural invariants of the complex and characteristic matrix.
        CoxeterComplex k = load_or_build_complex(options.cache_dir, family, n);
        const BitMatrix lambda = characteristic_matrix(k);
        BigInt expect_vertices = family == Family::C
                                     ? BigInt(boost::multiprecision::pow(BigInt(3), n)) - 1
                                     : BigInt(boost::multiprecision::pow(BigInt(3), n)) - 1 -
                                           BigInt(n) * (BigInt(1) << (n - 1));
        BigInt expect_facets = 1;
        for (int i = 2; i <= n; ++i) expect_facets *= i;
        expect_facets <<= (family == Family::C ? n : n - 1);
        add("vertex_count", expect_vertices.str(), std::to_string(k.complex.vertex_count),
            expect_vertices == k.complex.vertex_count);
        add("facet_count", expect_facets.str(), std::to_string(k.complex.facets.size()),
            expect_facets == static_cast<long long>(k.complex.facets.size()));
        add("pure_of_dimension_n_minus_1", std::to_string(n - 1),
            std::to_string(k.complex.dimension()),
            k.complex.is_pure() && k.complex.dimension() == n - 1);
        add("pseudomanifold", "true", is_pseudomanifold(k.complex) ? "true" : "false",
            is_pseudomanifold(k.complex));
        auto [fv, hv] = f_h_vector(k.complex);
        long long hsum = 0;
        for (long long h : hv) hsum += h;
        add("h_vector_sums_to_facets", std::to_string(k.complex.facets.size()),
            std::to_string(hsum), hsum == static_cast<long long>(k.complex.facets.size()));
        const int lrank = gf2_rank_rowspace(lambda).rank;
        add("characteristic_matrix_rank", std::to_string(n), std::to_string(lrank), lrank == n);

        // Strategy agreement over Q, against the closed form.
        const auto coeff_q = Coefficients::Q();
        BettiReport full = betti_real_toric(family, n, coeff_q, Strategy::Full, options);
        BettiReport orbit = betti_real_toric(family, n, coeff_q, Strategy::Orbit, options);
        BettiReport poset = betti_real_toric(family, n, coeff_q, Strategy::Poset, options);
        add("full_strategy_vs_closed_form", join_bigints(row), join_bigints(full.betti),
            row == full.betti);
        add("orbit_strategy_vs_full", join_bigints(full.betti), join_bigints(orbit.betti),
            orbit.betti == full.betti && [&] {
                for (std::size_t s = 0; s < full.per_subset.size(); ++s)
                    if (!full.per_subset[s].same_ranks(orbit.per_subset[s])) return false;
                return true;
            }());
        add("poset_strategy_vs_full", join_bigints(full.betti), join_bigints(poset.betti),
            poset.betti == full.betti);
        add("euler_char_vs_closed_form", chi.str(), full.euler_char.str(),
            chi == full.euler_char);

        // Per-subset closed forms.
        {
            bool all = true;
            std::string detail = "all match";
            for (std::uint32_t s = 0; s < full.per_subset.size() && all; ++s) {
                auto expected = expected_subcomplex_betti(family, n, s);
                if (!expected.same_ranks(full.per_subset[s])) {
                    all = false;
                    detail = "mismatch at S=" + subset_to_string(s, n) + ": got " +
                             ranks_to_string(full.per_subset[s].ranks) + ", want " +
                             ranks_to_string(expected.ranks);
                }
            }
            add("per_subset_closed_forms", "all 2^n subsets", detail, all);
        }

        // Subset symmetries. Type C admits genuine simplicial isomorphisms; for
        // type D equality of per-orbit Betti vectors is checked instead.
        if (family == Family::C) {
            std::unordered_map<std::uint32_t, SimplicialComplex> memo;
            auto subcomplex = [&](std::uint32_t s) -> const SimplicialComplex& {
                auto it = memo.find(s);
                if (it == memo.end())
                    it = memo.emplace(s, induced_subcomplex(k.complex, lambda, s)).first;
                return it->second;
            };
            const std::uint32_t nbit = 1u << (n - 1);
            bool inv_ok = true, swap_ok = true;
            std::string inv_detail = "all S", swap_detail = "all (S,a)";
            for (std::uint32_t s = 1; s < nbit && (inv_ok || swap_ok); ++s) {
                const bool odd = std::popcount(s) % 2 == 1;
                // phi: V(S) -> V(S ∪ {n}) by reversing one sign: that of n
                // when |S| is odd, else that of an element of S (the smallest;
                // on the canonical representatives this is 1).
                if (inv_ok) {
                    const int flip = odd ? n : std::countr_zero(s) + 1;
                    auto mapped = facet_codes(subcomplex(s), n, [flip](const SignedSubset& v) {
                        return v.flip_sign(flip);
                    });
                    auto target = facet_codes(subcomplex(s | nbit), n, identity_label);
                    if (mapped != target) {
                        inv_ok = false;
                        inv_detail = "facet mismatch at S=" + subset_to_string(s, n);
                    }
                }
                // psi: V(S) -> V(S ∪ {a}) for odd S and a outside S, swapping
                // ±a with ±n.
                if (odd && swap_ok) {
                    for (int a = 1; a < n && swap_ok; ++a) {
                        if ((s >> (a - 1)) & 1u) continue;
                        auto mapped = facet_codes(subcomplex(s), n, [a, n](const SignedSubset& v) {
                            return v.swap_indices(a, n);
                        });
                        auto target =
                            facet_codes(subcomplex(s | (1u << (a - 1))), n, identity_label);
                        if (mapped != target) {
                            swap_ok = false;
                            swap_detail = "facet mismatch at S=" + subset_to_string(s, n) +
                                          ", a=" + std::to_string(a);
                        }
                    }
                }
            }
            add("involution_maps_subcomplexes", "isomorphic facet sets", inv_detail, inv_ok);
            add("swap_maps_subcomplexes", "isomorphic facet sets", swap_detail, swap_ok);
        } else {
            bool all = true;
            std::string detail = "constant on every class";
            for (const auto& cls : orbit_classes(family, n)) {
                for (std::uint32_t m : cls.members)
                    if (!full.per_subset[m].same_ranks(full.per_subset[cls.representative])) {
                        all = false;
                        detail = "mismatch inside class of " +
                                 subset_to_string(cls.representative, n);
                    }
            }
            add("orbit_betti_equality", "constant on every class", detail, all);
        }

        // Integral and finite-field runs stay desk-sized.
        if (n <= 4) {
            BettiReport zrun = betti_real_toric(family, n, Coefficients::Z(), Strategy::Full, options);
            add("torsion_free_subcomplexes", "no torsion",
                zrun.torsion_summary.empty()
                    ? "no torsion"
                    : std::to_string(zrun.torsion_summary.size()) + " torsion entries",
                zrun.torsion_summary.empty());
            add("integral_ranks_vs_q", join_bigints(full.betti), join_bigints(zrun.betti),
                zrun.betti == full.betti);
            for (long p : {2L, 3L}) {
                BettiReport prun =
                    betti_real_toric(family, n, Coefficients::GF(p), Strategy::Full, options);
                bool same = prun.betti == full.betti;
                for (std::size_t s = 0; s < full.per_subset.size() && same; ++s)
                    same = prun.per_subset[s].same_ranks(full.per_subset[s]);
                add("gf" + std::to_string(p) + "_matches_q", "identical per-subset ranks",
                    same ? "identical" : "differs", same);
            }
        }
    } catch (const std::exception& e) {
        add("verification_run", "no exception", e.what(), false);
    }
    return report;
}

}  // namespace weyltoric
