#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "weyltoric/cache.hpp"
#include "weyltoric/pipeline.hpp"
#include "weyltoric/report.hpp"

using namespace weyltoric;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("weyltoric-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("complex file round-trip") {
    TempDir dir;
    for (auto [fam, n] : {std::pair{Family::C, 3}, {Family::D, 4}}) {
        auto k = build_coxeter_complex(fam, n);
        auto file = complex_cache_path(dir.path, fam, n);
        write_complex_file(file, k);
        auto back = read_complex_file(file);
        CHECK(back.family == k.family);
        CHECK(back.n == k.n);
        CHECK(back.complex.vertex_count == k.complex.vertex_count);
        CHECK(back.complex.labels == k.complex.labels);
        CHECK(back.complex.facets == k.complex.facets);
        CHECK(complex_header_line(back) == complex_header_line(k));
        CHECK(back.index_by_code == k.index_by_code);
    }
}

TEST_CASE("complex header line format") {
    auto k = build_coxeter_complex(Family::C, 3);
    CHECK(complex_header_line(k) == "C 3 26 48");
}

TEST_CASE("corrupt complex files are rejected") {
    TempDir dir;
    auto file = dir.path / "broken.complex";
    {
        std::ofstream out(file);
        out << "C 3 26 48\n1\n2\n";  // truncated vertex list
    }
    CHECK_THROWS_AS(read_complex_file(file), std::runtime_error);
    {
        std::ofstream out(file, std::ios::trunc);
        out << "E 3 1 1\n";
    }
    CHECK_THROWS_AS(read_complex_file(file), std::invalid_argument);
    CHECK_THROWS_AS(read_complex_file(dir.path / "missing.complex"), std::runtime_error);
}

TEST_CASE("betti sidecar round-trip and staleness") {
    TempDir dir;
    CachedBetti value;
    value.ranks = {{-1, 1}, {2, 42}};
    value.torsion = {{1, {BigInt(2), BigInt(4)}}};
    auto file = betti_cache_path(dir.path, Family::C, 3, 5, Coefficients::Q());
    store_betti_cache(file, "C 3 26 48", value);

    auto got = load_betti_cache(file, "C 3 26 48");
    REQUIRE(got.has_value());
    CHECK(got->ranks == value.ranks);
    CHECK(got->torsion == value.torsion);

    CHECK_FALSE(load_betti_cache(file, "C 3 26 47").has_value());           // stale header
    CHECK_FALSE(load_betti_cache(dir.path / "nope.json", "C 3 26 48").has_value());
}

TEST_CASE("load_or_build_complex persists and reuses the cache file") {
    TempDir dir;
    auto k1 = load_or_build_complex(dir.path, Family::C, 3);
    CHECK(fs::exists(complex_cache_path(dir.path, Family::C, 3)));
    auto k2 = load_or_build_complex(dir.path, Family::C, 3);
    CHECK(k1.complex.facets == k2.complex.facets);
    CHECK(k1.complex.labels == k2.complex.labels);

    // A damaged cache entry is rebuilt rather than trusted.
    {
        std::ofstream out(complex_cache_path(dir.path, Family::C, 3), std::ios::trunc);
        out << "garbage\n";
    }
    auto k3 = load_or_build_complex(dir.path, Family::C, 3);
    CHECK(k3.complex.facets == k1.complex.facets);
    auto k4 = read_complex_file(complex_cache_path(dir.path, Family::C, 3));
    CHECK(k4.complex.facets == k1.complex.facets);
}

TEST_CASE("pipeline results are identical with and without the cache") {
    TempDir dir;
    PipelineOptions cached;
    cached.cache_dir = dir.path;
    auto cold = betti_real_toric(Family::D, 4, Coefficients::Q(), Strategy::Orbit, cached);
    auto warm = betti_real_toric(Family::D, 4, Coefficients::Q(), Strategy::Orbit, cached);
    auto fresh = betti_real_toric(Family::D, 4, Coefficients::Q(), Strategy::Orbit);
    CHECK(cold.betti == warm.betti);
    CHECK(cold.betti == fresh.betti);
    for (std::size_t s = 0; s < cold.per_subset.size(); ++s) {
        CHECK(cold.per_subset[s].same_ranks(warm.per_subset[s]));
        CHECK(cold.per_subset[s].same_ranks(fresh.per_subset[s]));
    }
    // One sidecar per class representative plus the complex file.
    std::size_t json_files = 0;
    for (const auto& e : fs::directory_iterator(dir.path))
        if (e.path().extension() == ".json") ++json_files;
    CHECK(json_files == orbit_classes(Family::D, 4).size());
    // No leftover temporaries from the atomic writes.
    for (const auto& e : fs::directory_iterator(dir.path))
        CHECK(e.path().string().find(".tmp") == std::string::npos);
}

TEST_CASE("rendered reports are bit-stable and JSON is well-formed") {
    auto rep = betti_real_toric(Family::C, 3, Coefficients::Q(), Strategy::Full);
    for (auto fmt : {OutputFormat::Md, OutputFormat::Json, OutputFormat::Csv})
        CHECK(render_betti_report(rep, fmt) == render_betti_report(rep, fmt));
    auto csv = render_betti_report(rep, OutputFormat::Csv);
    CHECK(csv == "1,13,12\nchi=0\n");
    auto json_text = render_betti_report(rep, OutputFormat::Json);
    CHECK(json_text.find("\"betti\"") != std::string::npos);
    CHECK(json_text.find("\"per_subset\"") != std::string::npos);
    CHECK(render_formula(Family::C, 3, OutputFormat::Csv) == "1,13,12\nchi=0\n");
}
