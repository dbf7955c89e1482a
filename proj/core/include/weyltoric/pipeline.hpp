#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weyltoric/chain_complex.hpp"
#include "weyltoric/coefficients.hpp"
#include "weyltoric/coxeter.hpp"
#include "weyltoric/family.hpp"

namespace weyltoric {

// Thrown when an internal cross-check fails (row-space rank, aggregation
// identity). Distinct from invalid input.
struct internal_check_error : std::logic_error {
    using std::logic_error::logic_error;
};

enum class Strategy { Full, Orbit, Poset };
Strategy parse_strategy(std::string_view s);
std::string strategy_name(Strategy s);

// Subsets S ⊆ [n] grouped by isomorphism/homotopy type of the subcomplex:
// {∅}, {{n}}, and for r >= 1 all S whose intersection with [n-1] has size
// 2r-1 or 2r, represented by {1,...,2r-1}.
struct SubsetClass {
    enum class Tag { Empty, NOnly, R };
    Tag tag = Tag::Empty;
    int r = 0;  // meaningful iff tag == R
    std::uint32_t representative = 0;
    std::vector<std::uint32_t> members;  // ascending
};

std::vector<SubsetClass> orbit_classes(Family family, int n);

// Closed-form reduced Betti vector of the subcomplex K_S, by the class of S.
BettiVector expected_subcomplex_betti(Family family, int n, std::uint32_t subset);

struct TorsionEntry {
    std::uint32_t subset = 0;
    int degree = 0;
    std::vector<BigInt> factors;
};

struct BettiReport {
    Family family = Family::C;
    int n = 0;
    Coefficients coefficients;
    Strategy strategy = Strategy::Full;
    std::vector<BigInt> betti;  // beta^0, beta^1, ...
    BigInt euler_char = 0;
    std::vector<BettiVector> per_subset;  // indexed by the subset mask, size 2^n
    std::vector<TorsionEntry> torsion_summary;
    std::map<std::string, double> timings_ms;
};

struct PipelineOptions {
    int jobs = 1;  // <= 0 means hardware concurrency
    std::optional<std::filesystem::path> cache_dir;
};

// Aggregates subcomplex cohomology into the Betti numbers of the real toric
// variety: full enumerates all 2^n subsets, orbit computes one representative
// per class, poset swaps representatives for their reduced poset models
// (field coefficients only).
BettiReport betti_real_toric(Family family, int n, const Coefficients& coeff, Strategy strategy,
                             const PipelineOptions& options = {});

enum class VerifyLevel { Quick, Full };
VerifyLevel parse_verify_level(std::string_view s);

struct VerificationCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerificationReport {
    Family family = Family::C;
    int n = 0;
    VerifyLevel level = VerifyLevel::Quick;
    std::vector<VerificationCheck> checks;
    bool overall = true;
};

// quick: closed forms against the published reference rows. full: adds
// structural invariants, strategy agreement, per-subset closed forms,
// symmetry checks, torsion-freeness and field comparisons where the rank
// permits. Failures are reported, never thrown.
VerificationReport verify(Family family, int n, VerifyLevel level,
                          const PipelineOptions& options = {});

// Published nonzero Betti rows (with Euler characteristic) for 3 <= n <= 11
// (C) and 4 <= n <= 11 (D).
struct ReferenceRow {
    std::vector<long long> betti;
    long long chi = 0;
};
std::optional<ReferenceRow> reference_row(Family family, int n);

}  // namespace weyltoric
