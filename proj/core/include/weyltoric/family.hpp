#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weyltoric {

// Classical root-system families. Closed-form Betti numbers exist for all
// four; complexes are only constructed for C and D.
enum class Family { A, B, C, D };

inline char family_char(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
    }
    return '?';
}

inline std::string family_name(Family f) { return std::string(1, family_char(f)); }

inline Family parse_family(std::string_view s) {
    if (s.size() == 1) {
        switch (s[0]) {
            case 'A': case 'a': return Family::A;
            case 'B': case 'b': return Family::B;
            case 'C': case 'c': return Family::C;
            case 'D': case 'd': return Family::D;
        }
    }
    throw std::invalid_argument("unknown family '" + std::string(s) + "' (expected A, B, C or D)");
}

// Smallest rank for which the closed forms apply. Below these the root
// systems coincide with other families (C_n = B_n for n <= 2, D_n = A_n for
// n <= 3).
inline int min_rank(Family f) {
    switch (f) {
        case Family::A: return 1;
        case Family::B: return 2;
        case Family::C: return 3;
        case Family::D: return 4;
    }
    return 1;
}

inline bool has_complex(Family f) { return f == Family::C || f == Family::D; }

}  // namespace weyltoric
