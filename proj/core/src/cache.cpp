#include "weyltoric/cache.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace weyltoric {

namespace fs = std::filesystem;

namespace {

// Atomic publish: write to a sibling temp file, then rename over the target.
void write_atomically(const fs::path& file, const std::string& content) {
    fs::create_directories(file.parent_path());
    std::random_device rd;
    fs::path tmp = file;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    fs::rename(tmp, file);
}

}  // namespace

std::string complex_header_line(const CoxeterComplex& k) {
    std::ostringstream os;
    os << family_char(k.family) << ' ' << k.n << ' ' << k.complex.vertex_count << ' '
       << k.complex.facets.size();
    return os.str();
}

void write_complex_file(const fs::path& file, const CoxeterComplex& k) {
    std::ostringstream os;
    os << complex_header_line(k) << '\n';
    for (const auto& v : k.complex.labels) os << v.code(k.n) << '\n';
    for (const auto& f : k.complex.facets) {
        for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
        os << '\n';
    }
    write_atomically(file, os.str());
}

CoxeterComplex read_complex_file(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open complex file " + file.string());
    std::string fam_str;
    int n = 0;
    long vertex_count = 0, facet_count = 0;
    if (!(in >> fam_str >> n >> vertex_count >> facet_count))
        throw std::runtime_error("bad complex file header in " + file.string());
    CoxeterComplex k;
    k.family = parse_family(fam_str);
    k.n = n;
    if (n < 1 || n > 18 || vertex_count < 0 || facet_count < 0)
        throw std::runtime_error("implausible complex header in " + file.string());

    std::uint64_t codes = 1;
    for (int i = 0; i < n; ++i) codes *= 3;
    k.index_by_code.assign(codes, -1);
    k.complex.labels.reserve(vertex_count);
    std::uint64_t prev_code = 0;
    for (long i = 0; i < vertex_count; ++i) {
        std::uint64_t code = 0;
        if (!(in >> code)) throw std::runtime_error("truncated vertex list in " + file.string());
        if (code == 0 || code >= codes || (i > 0 && code <= prev_code))
            throw std::runtime_error("bad vertex code in " + file.string());
        prev_code = code;
        k.index_by_code[code] = static_cast<std::int32_t>(i);
        k.complex.labels.push_back(SignedSubset::from_code(code, n));
    }
    k.complex.vertex_count = static_cast<int>(vertex_count);
    std::string line;
    std::getline(in, line);  // finish the last vertex line
    for (long i = 0; i < facet_count; ++i) {
        if (!std::getline(in, line)) throw std::runtime_error("truncated facet list in " + file.string());
        std::istringstream ls(line);
        std::vector<std::int32_t> f;
        std::int32_t v;
        while (ls >> v) f.push_back(v);
        if (f.empty()) throw std::runtime_error("empty facet line in " + file.string());
        k.complex.facets.push_back(std::move(f));
    }
    k.complex.validate();
    return k;
}

fs::path complex_cache_path(const fs::path& dir, Family family, int n) {
    return dir / ("K_" + family_name(family) + std::to_string(n) + ".complex");
}

CoxeterComplex load_or_build_complex(const std::optional<fs::path>& dir, Family family, int n) {
    if (!dir) return build_coxeter_complex(family, n);
    const fs::path file = complex_cache_path(*dir, family, n);
    if (fs::exists(file)) {
        try {
            CoxeterComplex k = read_complex_file(file);
            if (k.family == family && k.n == n) return k;
        } catch (const std::exception&) {
            // fall through to rebuild
        }
    }
    CoxeterComplex k = build_coxeter_complex(family, n);
    write_complex_file(file, k);
    return k;
}

fs::path betti_cache_path(const fs::path& dir, Family family, int n, std::uint32_t subset,
                          const Coefficients& coeff) {
    std::ostringstream os;
    os << "betti_" << family_char(family) << n << "_S" << subset << "_" << coeff.name() << ".json";
    return dir / os.str();
}

std::optional<CachedBetti> load_betti_cache(const fs::path& file, const std::string& header) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        if (j.at("header").get<std::string>() != header) return std::nullopt;
        CachedBetti out;
        for (const auto& [deg, rank] : j.at("ranks").items())
            out.ranks.emplace(std::stoi(deg), BigInt(rank.get<std::string>()));
        if (j.contains("torsion")) {
            for (const auto& [deg, factors] : j.at("torsion").items()) {
                std::vector<BigInt> fs;
                for (const auto& f : factors) fs.emplace_back(f.get<std::string>());
                out.torsion.emplace(std::stoi(deg), std::move(fs));
            }
        }
        return out;
    } catch (const std::exception&) {
        return std::nullopt;  // treat unreadable entries as absent
    }
}

void store_betti_cache(const fs::path& file, const std::string& header, const CachedBetti& value) {
    nlohmann::json j;
    j["header"] = header;
    nlohmann::json ranks = nlohmann::json::object();
    for (const auto& [deg, rank] : value.ranks) ranks[std::to_string(deg)] = rank.str();
    j["ranks"] = ranks;
    if (!value.torsion.empty()) {
        nlohmann::json torsion = nlohmann::json::object();
        for (const auto& [deg, factors] : value.torsion) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& f : factors) arr.push_back(f.str());
            torsion[std::to_string(deg)] = arr;
        }
        j["torsion"] = torsion;
    }
    write_atomically(file, j.dump(2) + "\n");
}

}  // namespace weyltoric
