#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace weyltoric {

// A subset I of {±1, ..., ±n} in which no index occurs with both signs
// (I⁺ ∩ I⁻ = ∅). Ray labels of the C/D Weyl-chamber fans are of this shape.
// Bit i-1 of the masks stands for the index i.
class SignedSubset {
public:
    SignedSubset() = default;

    SignedSubset(std::uint32_t positives, std::uint32_t negatives)
        : pos_(positives), neg_(negatives) {
        if (pos_ & neg_) throw std::invalid_argument("signed subset has an index with both signs");
    }

    // Convenience for tests: from_elements({1, -2, 4}).
    static SignedSubset from_elements(std::initializer_list<int> elements) {
        std::uint32_t p = 0, m = 0;
        for (int e : elements) {
            if (e == 0) throw std::invalid_argument("signed subset element must be nonzero");
            if (e > 0)
                p |= 1u << (e - 1);
            else
                m |= 1u << (-e - 1);
        }
        return SignedSubset(p, m);
    }

    std::uint32_t positives() const { return pos_; }
    std::uint32_t negatives() const { return neg_; }
    std::uint32_t support() const { return pos_ | neg_; }  // I^± as an index mask

    int size() const { return std::popcount(support()); }
    bool empty() const { return support() == 0; }

    bool contains(int e) const {
        return e > 0 ? (pos_ >> (e - 1)) & 1u : (neg_ >> (-e - 1)) & 1u;
    }

    bool subset_of(const SignedSubset& other) const {
        return (pos_ & ~other.pos_) == 0 && (neg_ & ~other.neg_) == 0;
    }

    SignedSubset intersect(const SignedSubset& other) const {
        return SignedSubset(pos_ & other.pos_, neg_ & other.neg_);
    }

    // I^{-x}: reverse the sign of x wherever it occurs in I.
    SignedSubset flip_sign(int x) const {
        std::uint32_t bit = 1u << (x - 1);
        std::uint32_t p = pos_, m = neg_;
        if (p & bit) {
            p &= ~bit;
            m |= bit;
        } else if (m & bit) {
            m &= ~bit;
            p |= bit;
        }
        return SignedSubset(p, m);
    }

    // Exchange the roles of ±a and ±b (signs travel with the indices).
    SignedSubset swap_indices(int a, int b) const {
        std::uint32_t ab = 1u << (a - 1), bb = 1u << (b - 1);
        std::uint32_t p = pos_ & ~(ab | bb), m = neg_ & ~(ab | bb);
        if (pos_ & ab) p |= bb;
        if (neg_ & ab) m |= bb;
        if (pos_ & bb) p |= ab;
        if (neg_ & bb) m |= ab;
        return SignedSubset(p, m);
    }

    // Canonical base-3 encoding: digit i-1 is 0 if i is absent, 1 if +i in I,
    // 2 if -i in I. Vertex order everywhere is ascending in this code.
    std::uint64_t code(int n) const {
        std::uint64_t c = 0;
        for (int i = n - 1; i >= 0; --i) {
            c *= 3;
            if ((pos_ >> i) & 1u)
                c += 1;
            else if ((neg_ >> i) & 1u)
                c += 2;
        }
        return c;
    }

    static SignedSubset from_code(std::uint64_t code, int n) {
        std::uint32_t p = 0, m = 0;
        for (int i = 0; i < n; ++i) {
            switch (code % 3) {
                case 1: p |= 1u << i; break;
                case 2: m |= 1u << i; break;
                default: break;
            }
            code /= 3;
        }
        if (code != 0) throw std::invalid_argument("base-3 code out of range for rank n");
        return SignedSubset(p, m);
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int i = 0; i < 32; ++i) {
            if ((support() >> i) & 1u) {
                if (!first) s += ",";
                first = false;
                if ((neg_ >> i) & 1u) s += "-";
                s += std::to_string(i + 1);
            }
        }
        return s + "}";
    }

    friend auto operator<=>(const SignedSubset&, const SignedSubset&) = default;

private:
    std::uint32_t pos_ = 0;
    std::uint32_t neg_ = 0;
};

struct SignedSubsetHash {
    std::size_t operator()(const SignedSubset& s) const {
        std::uint64_t v = (std::uint64_t(s.positives()) << 32) | s.negatives();
        v ^= v >> 33;
        v *= 0xff51afd7ed558ccdULL;
        v ^= v >> 33;
        return static_cast<std::size_t>(v);
    }
};

}  // namespace weyltoric
