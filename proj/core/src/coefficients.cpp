#include "weyltoric/coefficients.hpp"

namespace weyltoric {

bool is_prime(long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

Coefficients parse_coefficients(std::string_view s) {
    if (s == "q" || s == "Q") return Coefficients::Q();
    if (s == "z" || s == "Z") return Coefficients::Z();
    if (s.size() > 2 && (s.substr(0, 2) == "gf" || s.substr(0, 2) == "GF")) {
        long p = 0;
        for (char c : s.substr(2)) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad coefficients '" + std::string(s) + "'");
            p = p * 10 + (c - '0');
            if (p > (1L << 30)) throw std::invalid_argument("prime too large in '" + std::string(s) + "'");
        }
        return Coefficients::GF(p);
    }
    throw std::invalid_argument("bad coefficients '" + std::string(s) + "' (expected q, z or gf<p>)");
}

}  // namespace weyltoric
