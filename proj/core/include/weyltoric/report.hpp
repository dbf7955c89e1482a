#pragma once

#include <string>
#include <string_view>

#include "weyltoric/pipeline.hpp"

namespace weyltoric {

enum class OutputFormat { Md, Json, Csv };
OutputFormat parse_format(std::string_view s);

// Closed-form row for any of the four families.
std::string render_formula(Family family, int n, OutputFormat format);

// Computed BettiReport. Markdown mirrors the published table layout; JSON
// follows the schema {family, n, coefficients, strategy, betti, euler_char,
// per_subset, torsion, timings_ms}; CSV prints the Betti row and chi.
std::string render_betti_report(const BettiReport& report, OutputFormat format);

std::string render_verification_report(const VerificationReport& report, OutputFormat format);

}  // namespace weyltoric
