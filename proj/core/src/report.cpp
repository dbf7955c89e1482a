#include "weyltoric/report.hpp"

#include <sstream>

#include <json.hpp>

#include "weyltoric/sequences.hpp"

namespace weyltoric {

namespace {

using nlohmann::json;

// Integers that fit in 64 bits stay JSON numbers; anything larger becomes a
// decimal string.
json json_bigint(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

std::vector<int> subset_elements(std::uint32_t mask, int n) {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if ((mask >> (i - 1)) & 1u) out.push_back(i);
    return out;
}

std::string csv_row(const std::vector<BigInt>& betti, const BigInt& chi) {
    std::ostringstream os;
    for (std::size_t i = 0; i < betti.size(); ++i) os << (i ? "," : "") << betti[i];
    os << "\nchi=" << chi << "\n";
    return os.str();
}

std::string md_table(Family family, int n, const std::vector<BigInt>& betti, const BigInt& chi) {
    std::ostringstream os;
    os << "| n |";
    for (std::size_t r = 0; r < betti.size(); ++r) os << " beta^" << r << " |";
    os << " chi |\n|---|";
    for (std::size_t r = 0; r < betti.size(); ++r) os << "---|";
    os << "---|\n| " << family_char(family) << "_" << n << " |";
    for (const auto& b : betti) os << " " << b << " |";
    os << " " << chi << " |\n";
    return os.str();
}

}  // namespace

OutputFormat parse_format(std::string_view s) {
    if (s == "md") return OutputFormat::Md;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown format '" + std::string(s) + "' (expected md, json or csv)");
}

std::string render_formula(Family family, int n, OutputFormat format) {
    const auto row = betti_closed_form_row(family, n);
    const BigInt chi = euler_char_closed_form(family, n);
    switch (format) {
        case OutputFormat::Csv:
            return csv_row(row, chi);
        case OutputFormat::Md:
            return md_table(family, n, row, chi);
        case OutputFormat::Json: {
            json j;
            j["family"] = family_name(family);
            j["n"] = n;
            j["betti"] = json::array();
            for (const auto& b : row) j["betti"].push_back(json_bigint(b));
            j["euler_char"] = json_bigint(chi);
            return j.dump(2) + "\n";
        }
    }
    return {};
}

std::string render_betti_report(const BettiReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv:
            return csv_row(report.betti, report.euler_char);
        case OutputFormat::Md: {
            std::ostringstream os;
            os << "Betti numbers of X^R(" << family_char(report.family) << "_" << report.n
               << ") over " << report.coefficients.name() << ", strategy "
               << strategy_name(report.strategy) << "\n\n";
            os << md_table(report.family, report.n, report.betti, report.euler_char);
            if (report.coefficients.kind == Coefficients::Kind::Integer) {
                if (report.torsion_summary.empty()) {
                    os << "\ntorsion: none\n";
                } else {
                    os << "\ntorsion:\n";
                    for (const auto& t : report.torsion_summary) {
                        os << "  S=" << t.subset << " degree=" << t.degree << " factors=";
                        for (std::size_t i = 0; i < t.factors.size(); ++i)
                            os << (i ? "," : "") << t.factors[i];
                        os << "\n";
                    }
                }
            }
            return os.str();
        }
        case OutputFormat::Json: {
            json j;
            j["family"] = family_name(report.family);
            j["n"] = report.n;
            j["coefficients"] = report.coefficients.name();
            j["strategy"] = strategy_name(report.strategy);
            j["betti"] = json::array();
            for (const auto& b : report.betti) j["betti"].push_back(json_bigint(b));
            j["euler_char"] = json_bigint(report.euler_char);
            j["per_subset"] = json::array();
            for (std::uint32_t s = 0; s < report.per_subset.size(); ++s) {
                json entry;
                entry["S"] = subset_elements(s, report.n);
                json ranks = json::object();
                for (const auto& [deg, rank] : report.per_subset[s].ranks)
                    ranks[std::to_string(deg)] = json_bigint(rank);
                entry["ranks"] = ranks;
                j["per_subset"].push_back(std::move(entry));
            }
            j["torsion"] = json::array();
            for (const auto& t : report.torsion_summary) {
                json entry;
                entry["S"] = subset_elements(t.subset, report.n);
                entry["degree"] = t.degree;
                entry["factors"] = json::array();
                for (const auto& f : t.factors) entry["factors"].push_back(json_bigint(f));
                j["torsion"].push_back(std::move(entry));
            }
            j["timings_ms"] = report.timings_ms;
            return j.dump(2) + "\n";
        }
    }
    return {};
}

std::string render_verification_report(const VerificationReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv: {
            std::ostringstream os;
            for (const auto& c : report.checks)
                os << c.name << "," << (c.pass ? "pass" : "fail") << "\n";
            os << "overall," << (report.overall ? "pass" : "fail") << "\n";
            return os.str();
        }
        case OutputFormat::Md: {
            std::ostringstream os;
            os << "Verification of " << family_char(report.family) << "_" << report.n << " (level "
               << (report.level == VerifyLevel::Quick ? "quick" : "full") << ")\n\n";
            os << "| check | expected | actual | result |\n|---|---|---|---|\n";
            for (const auto& c : report.checks)
                os << "| " << c.name << " | " << c.expected << " | " << c.actual << " | "
                   << (c.pass ? "pass" : "FAIL") << " |\n";
            os << "\noverall: " << (report.overall ? "pass" : "FAIL") << "\n";
            return os.str();
        }
        case OutputFormat::Json: {
            json j;
            j["family"] = family_name(report.family);
            j["n"] = report.n;
            j["level"] = report.level == VerifyLevel::Quick ? "quick" : "full";
            j["checks"] = json::array();
            for (const auto& c : report.checks) {
                json entry;
                entry["name"] = c.name;
                entry["expected"] = c.expected;
                entry["actual"] = c.actual;
                entry["pass"] = c.pass;
                j["checks"].push_back(std::move(entry));
            }
            j["overall"] = report.overall;
            return j.dump(2) + "\n";
        }
    }
    return {};
}

}  // namespace weyltoric
