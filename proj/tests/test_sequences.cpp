#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weyltoric/sequences.hpp"

using namespace weyltoric;

namespace {

// Independent oracle for the zigzag numbers: exact Taylor coefficients of
// (1 + sin x)/cos x, via series division over the rationals. The library
// computes them from the boustrophedon triangle instead.
std::vector<BigInt> zigzag_by_series(int n_max) {
    std::vector<BigRat> num(n_max + 1), den(n_max + 1);
    BigInt fact = 1;
    for (int k = 0; k <= n_max; ++k) {
        if (k > 0) fact *= k;
        const int sin_c[4] = {0, 1, 0, -1};
        const int cos_c[4] = {1, 0, -1, 0};
        num[k] = BigRat(sin_c[k % 4], fact) + (k == 0 ? BigRat(1) : BigRat(0));
        den[k] = BigRat(cos_c[k % 4], fact);
    }
    std::vector<BigRat> q(n_max + 1);
    q[0] = num[0] / den[0];
    for (int n = 1; n <= n_max; ++n) {
        BigRat acc = num[n];
        for (int k = 1; k <= n; ++k) acc -= den[k] * q[n - k];
        q[n] = acc / den[0];
    }
    std::vector<BigInt> out(n_max + 1);
    fact = 1;
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) fact *= n;
        BigRat v = q[n] * fact;
        REQUIRE(boost::multiprecision::denominator(v) == 1);
        out[n] = boost::multiprecision::numerator(v);
    }
    return out;
}

// Independent oracle for the Springer numbers, from
// 1/(cos x - sin x) = sec 2x (cos x + sin x):
// b_n = sum_{j even} C(n,j) 2^j a_j c_{n-j} with c = (1, 1, -1, -1) cyclic.
// The library inverts the cos x - sin x series instead.
BigInt springer_by_secant(int n, const std::vector<BigInt>& zig) {
    const int c[4] = {1, 1, -1, -1};
    BigInt v = 0;
    for (int j = 0; j <= n; j += 2) v += binomial(n, j) * (BigInt(1) << j) * zig[j] * c[(n - j) % 4];
    return v;
}

}  // namespace

TEST_CASE("zigzag and springer reproduce the published table") {
    const long long a[10] = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936};
    const long long b[10] = {1, 1, 3, 11, 57, 361, 2763, 24611, 250737, 2873041};
    auto at = euler_zigzag_table(9);
    auto bt = springer_table(9);
    for (int n = 0; n <= 9; ++n) {
        CHECK(at[n] == a[n]);
        CHECK(bt[n] == b[n]);
        CHECK(euler_zigzag(n) == a[n]);
        CHECK(springer(n) == b[n]);
    }
}

TEST_CASE("recurrence and generating-function routes agree to n = 20") {
    auto zig_series = zigzag_by_series(20);
    auto zig = euler_zigzag_table(20);
    auto spr = springer_table(20);
    for (int n = 0; n <= 20; ++n) {
        CHECK(zig[n] == zig_series[n]);
        CHECK(spr[n] == springer_by_secant(n, zig_series));
    }
}

TEST_CASE("sequences are strictly increasing from n = 2") {
    auto zig = euler_zigzag_table(20);
    auto spr = springer_table(20);
    for (int n = 2; n < 20; ++n) {
        CHECK(zig[n + 1] > zig[n]);
        CHECK(spr[n + 1] > spr[n]);
    }
}

TEST_CASE("negative indices vanish by convention") {
    CHECK(euler_zigzag(-1) == 0);
    CHECK(springer(-3) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(6, 2) == 15);
}

TEST_CASE("auxiliary sequences s_m and t_m") {
    auto [s3, t3] = aux_sequences(3);
    CHECK(s3 == 7);
    CHECK(t3 == 5);
    auto [s0, t0] = aux_sequences(0);
    CHECK(s0 == 0);
    CHECK(t0 == 0);
    auto [s4, t4] = aux_sequences(4);
    CHECK(s4 == 15);
    CHECK(t4 == 17);
    auto [s1, t1] = aux_sequences(1);
    CHECK(s1 == 1);
    CHECK(t1 == 0);
    CHECK_THROWS_AS(aux_sequences(-1), std::invalid_argument);
}

TEST_CASE("closed-form Betti numbers: spot values") {
    CHECK(betti_closed_form(Family::C, 3, 1) == 13);
    CHECK(betti_closed_form(Family::D, 4, 2) == 51);
    CHECK(betti_closed_form(Family::C, 11, 6) == 569068544);
    CHECK(betti_closed_form(Family::B, 2, 1) == 5);
    CHECK(betti_closed_form(Family::A, 3, 2) == 5);
}

TEST_CASE("closed-form rows") {
    CHECK(betti_closed_form_row(Family::A, 3) == std::vector<BigInt>{1, 6, 5});
    CHECK(betti_closed_form_row(Family::C, 3) == std::vector<BigInt>{1, 13, 12});
    CHECK(betti_closed_form_row(Family::D, 4) == std::vector<BigInt>{1, 12, 51, 24});
    CHECK(betti_closed_form_row(Family::D, 10) ==
          std::vector<BigInt>{1, 90, 11237, 479040, 8778330, 35366822, 15955200});
}

TEST_CASE("Euler characteristics from the closed form") {
    CHECK(euler_char_closed_form(Family::C, 4) == 80);
    CHECK(euler_char_closed_form(Family::C, 5) == 0);
    CHECK(euler_char_closed_form(Family::D, 10) == -11101184);
    for (int n = 3; n <= 11; n += 2) CHECK(euler_char_closed_form(Family::C, n) == 0);
    for (int n = 5; n <= 11; n += 2) CHECK(euler_char_closed_form(Family::D, n) == 0);
}

TEST_CASE("ranks below the family minimum are rejected") {
    CHECK_THROWS_AS(betti_closed_form(Family::C, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(betti_closed_form(Family::D, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(betti_closed_form(Family::B, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(betti_closed_form(Family::A, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(betti_closed_form(Family::C, 4, -1), std::invalid_argument);
}

TEST_CASE("type C Betti numbers vanish above floor((n+1)/2)") {
    for (int n = 3; n <= 11; ++n)
        for (int r = (n + 1) / 2 + 1; r <= (n + 1) / 2 + 4; ++r)
            CHECK(betti_closed_form(Family::C, n, r) == 0);
}

TEST_CASE("beta^0 is 1 and chi is the alternating row sum for every family") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        for (int n = min_rank(f); n <= 9; ++n) {
            auto row = betti_closed_form_row(f, n);
            CHECK(row[0] == 1);
            BigInt chi = 0;
            int sign = 1;
            for (const auto& v : row) {
                chi += sign * v;
                sign = -sign;
                CHECK(v >= 0);
            }
            CHECK(chi == euler_char_closed_form(f, n));
        }
    }
}
