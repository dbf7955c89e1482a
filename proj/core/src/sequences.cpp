#include "weyltoric/sequences.hpp"

#include <stdexcept>

namespace weyltoric {

std::vector<BigInt> euler_zigzag_table(int n_max) {
    // Boustrophedon (Entringer) triangle: E(0,0) = 1,
    // E(n,k) = E(n,k-1) + E(n-1,n-k), a_n = E(n,n).
    if (n_max < 0) return {};
    std::vector<BigInt> out;
    out.reserve(n_max + 1);
    std::vector<BigInt> prev{1}, cur;
    out.push_back(1);
    for (int n = 1; n <= n_max; ++n) {
        cur.assign(n + 1, 0);
        for (int k = 1; k <= n; ++k) cur[k] = cur[k - 1] + prev[n - k];
        out.push_back(cur[n]);
        prev.swap(cur);
    }
    return out;
}

std::vector<BigInt> springer_table(int n_max) {
    // Exact Taylor coefficients of 1/(cos x - sin x): invert the series of
    // cos x - sin x over the rationals, then clear factorials.
    if (n_max < 0) return {};
    const int N = n_max;
    std::vector<BigRat> denom(N + 1);  // coefficients of cos x - sin x
    BigInt fact = 1;
    for (int k = 0; k <= N; ++k) {
        if (k > 0) fact *= k;
        int sign;
        switch (k % 4) {
            case 0: sign = 1; break;   //  cos term
            case 1: sign = -1; break;  // -sin term
            case 2: sign = -1; break;  // -cos term
            default: sign = 1; break;  //  sin term
        }
        denom[k] = BigRat(sign, fact);
    }
    std::vector<BigRat> inv(N + 1);
    inv[0] = 1;  // denom[0] == 1
    for (int n = 1; n <= N; ++n) {
        BigRat acc = 0;
        for (int k = 1; k <= n; ++k) acc += denom[k] * inv[n - k];
        inv[n] = -acc;
    }
    std::vector<BigInt> out(N + 1);
    fact = 1;
    for (int n = 0; n <= N; ++n) {
        if (n > 0) fact *= n;
        BigRat v = inv[n] * fact;
        if (boost::multiprecision::denominator(v) != 1)
            throw std::logic_error("springer coefficient is not an integer");
        out[n] = boost::multiprecision::numerator(v);
    }
    return out;
}

BigInt euler_zigzag(int n) {
    if (n < 0) return 0;
    return euler_zigzag_table(n).back();
}

BigInt springer(int n) {
    if (n < 0) return 0;
    return springer_table(n).back();
}

std::pair<BigInt, BigInt> aux_sequences(int m) {
    if (m < 0) throw std::invalid_argument("aux_sequences requires m >= 0");
    BigInt s = (BigInt(1) << m) - 1;
    // (m-2)*2^{m-1}+1 via (m-2)*2^m / 2: the numerator is even for every
    // m >= 0, so the division is exact (m = 0 gives -2/2 + 1 = 0).
    BigInt t = (BigInt(m - 2) << m) / 2 + 1;
    return {s, t};
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

namespace {

BigInt pow2(long e) { return e < 0 ? BigInt(0) : BigInt(1) << e; }

}  // namespace

BigInt betti_closed_form(Family family, int n, int r) {
    if (n < min_rank(family))
        throw std::invalid_argument("family " + family_name(family) + " requires n >= " +
                                    std::to_string(min_rank(family)) + ", got " + std::to_string(n));
    if (r < 0) throw std::invalid_argument("cohomological degree r must be >= 0");

    switch (family) {
        case Family::A:
            return binomial(n + 1, 2 * r) * euler_zigzag(2 * r);
        case Family::B:
            return binomial(n, 2 * r) * springer(2 * r) +
                   binomial(n, 2 * r - 1) * springer(2 * r - 1);
        case Family::C: {
            BigInt term1 = 0;
            if (BigInt c = binomial(n, 2 * r - 2); c != 0) {
                auto [s, t] = aux_sequences(n - 2 * r + 2);
                (void)t;
                term1 = c * pow2(2 * r - 2) * s * euler_zigzag(2 * r - 2);
            }
            BigInt term2 = binomial(n, 2 * r) *
                           (2 * springer(2 * r) - pow2(2 * r) * euler_zigzag(2 * r));
            return term1 + term2;
        }
        case Family::D: {
            BigInt term1 = 0;
            if (BigInt c = binomial(n, 2 * r - 4); c != 0) {
                auto [s, t] = aux_sequences(n - 2 * r + 4);
                (void)s;
                term1 = c * pow2(2 * r - 4) * t * euler_zigzag(2 * r - 4);
            }
            BigInt term2 = binomial(n, 2 * r) *
                           (2 * springer(2 * r) - pow2(2 * r) * euler_zigzag(2 * r));
            return term1 + term2;
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<BigInt> betti_closed_form_row(Family family, int n) {
    // Every term vanishes past r = (n+4)/2 (all binomial indices exceed n).
    std::vector<BigInt> row;
    for (int r = 0; r <= n / 2 + 3; ++r) row.push_back(betti_closed_form(family, n, r));
    while (row.size() > 1 && row.back() == 0) row.pop_back();
    return row;
}

BigInt euler_char_closed_form(Family family, int n) {
    BigInt chi = 0;
    int sign = 1;
    for (const BigInt& v : betti_closed_form_row(family, n)) {
        chi += sign * v;
        sign = -sign;
    }
    return chi;
}

}  // namespace weyltoric
