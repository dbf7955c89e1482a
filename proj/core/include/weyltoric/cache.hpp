#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "weyltoric/bigint.hpp"
#include "weyltoric/coefficients.hpp"
#include "weyltoric/coxeter.hpp"

namespace weyltoric {

// Complex cache file, line-based text:
//   header: "<family> <n> <vertex_count> <facet_count>"
//   one line per vertex holding its base-3 code, ascending
//   one line per facet holding space-separated vertex indices
std::string complex_header_line(const CoxeterComplex& k);
void write_complex_file(const std::filesystem::path& file, const CoxeterComplex& k);
CoxeterComplex read_complex_file(const std::filesystem::path& file);  // throws std::runtime_error

std::filesystem::path complex_cache_path(const std::filesystem::path& dir, Family family, int n);

// Reads the cached complex when present and well-formed, otherwise builds and
// persists it. Without a cache dir this is just build_coxeter_complex.
CoxeterComplex load_or_build_complex(const std::optional<std::filesystem::path>& dir, Family family,
                                     int n);

// Per-subset homology cache: a JSON sidecar keyed by (family, n, S,
// coefficients) and content-addressed by the complex header line; entries
// written against a different header are ignored.
struct CachedBetti {
    std::map<int, BigInt> ranks;
    std::map<int, std::vector<BigInt>> torsion;
};

std::filesystem::path betti_cache_path(const std::filesystem::path& dir, Family family, int n,
                                       std::uint32_t subset, const Coefficients& coeff);
std::optional<CachedBetti> load_betti_cache(const std::filesystem::path& file,
                                            const std::string& header);
void store_betti_cache(const std::filesystem::path& file, const std::string& header,
                       const CachedBetti& value);

}  // namespace weyltoric
