#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <set>

#include "weyltoric/pipeline.hpp"
#include "weyltoric/sequences.hpp"

using namespace weyltoric;

namespace {

std::map<int, std::size_t> class_sizes(const std::vector<SubsetClass>& classes) {
    std::map<int, std::size_t> out;  // key: -2 empty, -1 n-only, r otherwise
    for (const auto& c : classes) {
        int key = c.tag == SubsetClass::Tag::Empty ? -2 : c.tag == SubsetClass::Tag::NOnly ? -1 : c.r;
        out[key] = c.members.size();
    }
    return out;
}

}  // namespace

TEST_CASE("orbit classes: sizes and partition") {
    auto c3 = class_sizes(orbit_classes(Family::C, 3));
    CHECK(c3 == std::map<int, std::size_t>{{-2, 1}, {-1, 1}, {1, 6}});

    auto c4 = class_sizes(orbit_classes(Family::C, 4));
    CHECK(c4 == std::map<int, std::size_t>{{-2, 1}, {-1, 1}, {1, 12}, {2, 2}});

    auto d5 = class_sizes(orbit_classes(Family::D, 5));
    CHECK(d5 == std::map<int, std::size_t>{{-2, 1}, {-1, 1}, {1, 20}, {2, 10}});

    // Classes partition the power set, and the r-class size formula
    // 2*C(n, 2r) holds (checked by enumeration, not trusted).
    for (auto [fam, max_n] : {std::pair{Family::C, 6}, {Family::D, 6}}) {
        for (int n = min_rank(fam); n <= max_n; ++n) {
            auto classes = orbit_classes(fam, n);
            std::set<std::uint32_t> seen;
            std::size_t total = 0;
            for (const auto& cls : classes) {
                for (auto m : cls.members) CHECK(seen.insert(m).second);
                total += cls.members.size();
                if (cls.tag == SubsetClass::Tag::R) {
                    CHECK(BigInt(cls.members.size()) == 2 * binomial(n, 2 * cls.r));
                    CHECK(cls.representative == (1u << (2 * cls.r - 1)) - 1);
                    for (auto m : cls.members) {
                        int sp = std::popcount(m & ~(1u << (n - 1)));
                        CHECK((sp + 1) / 2 == cls.r);
                    }
                }
            }
            CHECK(total == (1u << n));
        }
    }
}

TEST_CASE("expected subcomplex Betti vectors") {
    CHECK(expected_subcomplex_betti(Family::C, 3, 0).ranks == std::map<int, BigInt>{{-1, 1}});
    CHECK(expected_subcomplex_betti(Family::C, 3, 0b100).ranks == std::map<int, BigInt>{{0, 7}});
    CHECK(expected_subcomplex_betti(Family::C, 3, 0b001).ranks ==
          std::map<int, BigInt>{{0, 1}, {1, 2}});
    CHECK(expected_subcomplex_betti(Family::D, 4, 0b0111).ranks ==
          std::map<int, BigInt>{{1, 17}});
    CHECK(expected_subcomplex_betti(Family::D, 4, 0b1000).ranks ==
          std::map<int, BigInt>{{1, 17}});
    // D_5, S = {1}: degree 0 rank b_2 - 2 a_2 = 1, degree 2 rank 2 t_3 a_2 = 10.
    CHECK(expected_subcomplex_betti(Family::D, 5, 0b00001).ranks ==
          std::map<int, BigInt>{{0, 1}, {2, 10}});
}

TEST_CASE("betti_real_toric: published rows") {
    auto c3 = betti_real_toric(Family::C, 3, Coefficients::Q(), Strategy::Full);
    CHECK(c3.betti == std::vector<BigInt>{1, 13, 12});
    CHECK(c3.euler_char == 0);
    CHECK(c3.per_subset.size() == 8);

    auto d4 = betti_real_toric(Family::D, 4, Coefficients::Z(), Strategy::Orbit);
    CHECK(d4.betti == std::vector<BigInt>{1, 12, 51, 24});
    CHECK(d4.euler_char == 16);
    CHECK(d4.torsion_summary.empty());

    auto c4 = betti_real_toric(Family::C, 4, Coefficients::GF(3), Strategy::Poset);
    CHECK(c4.betti == std::vector<BigInt>{1, 27, 106});
}

TEST_CASE("strategies agree degree by degree") {
    for (auto [fam, n] : {std::pair{Family::C, 3}, {Family::C, 4}, {Family::D, 4}}) {
        auto full = betti_real_toric(fam, n, Coefficients::Q(), Strategy::Full);
        auto orbit = betti_real_toric(fam, n, Coefficients::Q(), Strategy::Orbit);
        auto poset = betti_real_toric(fam, n, Coefficients::Q(), Strategy::Poset);
        CHECK(full.betti == orbit.betti);
        CHECK(full.betti == poset.betti);
        for (std::size_t s = 0; s < full.per_subset.size(); ++s) {
            CHECK(full.per_subset[s].same_ranks(orbit.per_subset[s]));
            CHECK(full.per_subset[s].same_ranks(poset.per_subset[s]));
        }
    }
}

TEST_CASE("aggregation identity holds against the per-subset table") {
    auto rep = betti_real_toric(Family::D, 4, Coefficients::Q(), Strategy::Full);
    for (std::size_t r = 0; r < rep.betti.size(); ++r) {
        BigInt acc = 0;
        for (const auto& v : rep.per_subset) acc += v.rank(static_cast<int>(r) - 1);
        CHECK(acc == rep.betti[r]);
    }
    // Nothing beyond the top degree.
    BigInt beyond = 0;
    for (const auto& v : rep.per_subset) beyond += v.rank(static_cast<int>(rep.betti.size()) - 1);
    CHECK(beyond == 0);
}

TEST_CASE("per-subset vectors match the closed forms") {
    for (auto [fam, n] : {std::pair{Family::C, 4}, {Family::D, 4}}) {
        auto rep = betti_real_toric(fam, n, Coefficients::Q(), Strategy::Full);
        for (std::uint32_t s = 0; s < rep.per_subset.size(); ++s)
            CHECK(rep.per_subset[s].same_ranks(expected_subcomplex_betti(fam, n, s)));
    }
}

TEST_CASE("poset strategy rejects integer coefficients") {
    CHECK_THROWS_AS(betti_real_toric(Family::C, 3, Coefficients::Z(), Strategy::Poset),
                    std::invalid_argument);
}

TEST_CASE("pipeline rejects invalid families and ranks") {
    CHECK_THROWS_AS(betti_real_toric(Family::A, 3, Coefficients::Q(), Strategy::Full),
                    std::invalid_argument);
    CHECK_THROWS_AS(betti_real_toric(Family::C, 2, Coefficients::Q(), Strategy::Full),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify(Family::D, 3, VerifyLevel::Quick), std::invalid_argument);
}

TEST_CASE("parallel execution returns the same report") {
    PipelineOptions serial;
    serial.jobs = 1;
    PipelineOptions wide;
    wide.jobs = 4;
    auto a = betti_real_toric(Family::C, 4, Coefficients::Q(), Strategy::Full, serial);
    auto b = betti_real_toric(Family::C, 4, Coefficients::Q(), Strategy::Full, wide);
    CHECK(a.betti == b.betti);
    for (std::size_t s = 0; s < a.per_subset.size(); ++s)
        CHECK(a.per_subset[s].same_ranks(b.per_subset[s]));
}

TEST_CASE("verify: quick level against the reference rows") {
    for (auto [fam, n] : {std::pair{Family::C, 11}, {Family::D, 11}, {Family::C, 3}}) {
        auto rep = verify(fam, n, VerifyLevel::Quick);
        CHECK(rep.overall);
    }
}

TEST_CASE("verify: full level on desk-sized ranks") {
    for (auto [fam, n] : {std::pair{Family::C, 3}, {Family::D, 4}}) {
        auto rep = verify(fam, n, VerifyLevel::Full);
        for (const auto& c : rep.checks) {
            INFO(c.name, ": expected ", c.expected, ", actual ", c.actual);
            CHECK(c.pass);
        }
        CHECK(rep.overall);
    }
}

TEST_CASE("reference rows exist exactly for the published ranks") {
    CHECK(reference_row(Family::C, 3).has_value());
    CHECK(reference_row(Family::C, 11).has_value());
    CHECK_FALSE(reference_row(Family::C, 12).has_value());
    CHECK_FALSE(reference_row(Family::D, 3).has_value());
    CHECK_FALSE(reference_row(Family::A, 3).has_value());
    CHECK(reference_row(Family::D, 4)->betti == std::vector<long long>{1, 12, 51, 24});
    CHECK(reference_row(Family::D, 4)->chi == 16);
}

TEST_CASE("strategy and level parsing") {
    CHECK(parse_strategy("full") == Strategy::Full);
    CHECK(parse_strategy("orbit") == Strategy::Orbit);
    CHECK(parse_strategy("poset") == Strategy::Poset);
    CHECK_THROWS_AS(parse_strategy("fast"), std::invalid_argument);
    CHECK(parse_verify_level("quick") == VerifyLevel::Quick);
    CHECK_THROWS_AS(parse_verify_level("max"), std::invalid_argument);
}
