#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weyltoric {

// Coefficient system for (co)homology runs: the rationals, a prime field, or
// the integers (ranks plus torsion).
struct Coefficients {
    enum class Kind { Rational, PrimeField, Integer };

    Kind kind = Kind::Rational;
    long prime = 0;  // set iff kind == PrimeField

    static Coefficients Q() { return {Kind::Rational, 0}; }
    static Coefficients GF(long p);
    static Coefficients Z() { return {Kind::Integer, 0}; }

    bool is_field() const { return kind != Kind::Integer; }

    std::string name() const {
        switch (kind) {
            case Kind::Rational: return "q";
            case Kind::Integer: return "z";
            case Kind::PrimeField: return "gf" + std::to_string(prime);
        }
        return "?";
    }

    friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

bool is_prime(long p);

inline Coefficients Coefficients::GF(long p) {
    if (!is_prime(p)) throw std::invalid_argument("GF(p) requires a prime, got " + std::to_string(p));
    return {Kind::PrimeField, p};
}

// Accepts "q", "z", "gf2", "gf3", "gf<p>".
Coefficients parse_coefficients(std::string_view s);

}  // namespace weyltoric
