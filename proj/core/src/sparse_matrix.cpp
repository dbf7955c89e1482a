#include "weyltoric/sparse_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace weyltoric {

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<long>>& dense) {
    SparseIntMatrix m(static_cast<int>(dense.size()),
                      dense.empty() ? 0 : static_cast<int>(dense[0].size()));
    for (int r = 0; r < m.rows; ++r) {
        if (static_cast<int>(dense[r].size()) != m.cols)
            throw std::invalid_argument("ragged dense matrix");
        for (int c = 0; c < m.cols; ++c)
            if (dense[r][c] != 0) m.row_data[r].emplace_back(c, dense[r][c]);
    }
    return m;
}

void SparseIntMatrix::set_row(int r, std::vector<std::pair<std::int32_t, BigInt>> row) {
    std::int32_t prev = -1;
    for (const auto& [c, v] : row) {
        if (c <= prev || c >= cols) throw std::invalid_argument("row not sorted or column out of range");
        if (v == 0) throw std::invalid_argument("stored zero entry");
        prev = c;
    }
    row_data.at(r) = std::move(row);
}

std::size_t SparseIntMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : row_data) n += r.size();
    return n;
}

SparseIntMatrix SparseIntMatrix::transposed() const {
    SparseIntMatrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (const auto& [c, v] : row_data[r]) t.row_data[c].emplace_back(r, v);
    return t;
}

BitMatrix SparseIntMatrix::to_bit_matrix() const {
    BitMatrix b(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (const auto& [c, v] : row_data[r])
            if (v % 2 != 0) b.set(r, c, true);
    return b;
}

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("dimension mismatch in multiply");
    SparseIntMatrix out(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r) {
        std::map<std::int32_t, BigInt> acc;
        for (const auto& [k, va] : a.row_data[r])
            for (const auto& [c, vb] : b.row_data[k]) acc[c] += va * vb;
        for (auto& [c, v] : acc)
            if (v != 0) out.row_data[r].emplace_back(c, std::move(v));
    }
    return out;
}

namespace {

using SparseRow = std::vector<std::pair<std::int32_t, BigInt>>;

BigInt exact_div(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw std::logic_error("fraction-free elimination: division not exact");
    return q;
}

// row <- row * num / den, entrywise (exact).
void scale_row(SparseRow& row, const BigInt& num, const BigInt& den) {
    for (auto& [c, v] : row) v = exact_div(v * num, den);
}

const BigInt* find_col(const SparseRow& row, std::int32_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::int32_t c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// (pv * target - tc * pivot) / prev, merging sorted rows. The pivot column
// cancels exactly.
SparseRow combine_rows(const SparseRow& target, const SparseRow& pivot, const BigInt& pv,
                       const BigInt& tc, const BigInt& prev) {
    SparseRow out;
    out.reserve(target.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
        BigInt v;
        std::int32_t c;
        if (j >= pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
            c = target[i].first;
            v = pv * target[i].second;
            ++i;
        } else if (i >= target.size() || pivot[j].first < target[i].first) {
            c = pivot[j].first;
            v = -tc * pivot[j].second;
            ++j;
        } else {
            c = target[i].first;
            v = pv * target[i].second - tc * pivot[j].second;
            ++i;
            ++j;
        }
        if (v != 0) out.emplace_back(c, exact_div(v, prev));
    }
    return out;
}

int rank_rational(const SparseIntMatrix& m) {
    // One-step Bareiss with lazy scaling: a row untouched between steps t and
    // k-1 is brought up to date by a single exact scaling p_{k-1}/p_t (the
    // per-step factors p_j/p_{j-1} telescope).
    std::vector<SparseRow> rows;
    rows.reserve(m.row_data.size());
    for (const auto& r : m.row_data)
        if (!r.empty()) rows.push_back(r);
    std::vector<int> last(rows.size(), 0);
    std::vector<char> alive(rows.size(), 1);
    std::vector<BigInt> pivots{1};  // pivots[k] = pivot of step k
    int rank = 0;

    while (true) {
        // Pivot choice on stale values: a ±1 entry in the sparsest row when
        // one exists (the common case for boundary matrices), otherwise the
        // globally smallest magnitude.
        int best = -1;
        std::int32_t best_col = -1;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!alive[i] || rows[i].empty()) continue;
            if (best >= 0 && rows[i].size() >= best_len) continue;
            for (const auto& [c, v] : rows[i]) {
                if (v == 1 || v == -1) {
                    best = static_cast<int>(i);
                    best_col = c;
                    best_len = rows[i].size();
                    break;
                }
            }
            if (best >= 0 && best_len <= 1) break;
        }
        if (best < 0) {
            BigInt best_abs;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (!alive[i] || rows[i].empty()) continue;
                for (const auto& [c, v] : rows[i]) {
                    BigInt a = abs(v);
                    if (best < 0 || a < best_abs ||
                        (a == best_abs && rows[i].size() < best_len)) {
                        best = static_cast<int>(i);
                        best_col = c;
                        best_len = rows[i].size();
                        best_abs = a;
                    }
                }
            }
        }
        if (best < 0) break;

        const int k = ++rank;
        const BigInt& prev = pivots[k - 1];
        if (last[best] != k - 1) {
            scale_row(rows[best], prev, pivots[last[best]]);
            last[best] = k - 1;
        }
        const BigInt pv = *find_col(rows[best], best_col);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!alive[i] || static_cast<int>(i) == best) continue;
            const BigInt* tc = find_col(rows[i], best_col);
            if (!tc) continue;
            if (last[i] != k - 1) scale_row(rows[i], prev, pivots[last[i]]);
            rows[i] = combine_rows(rows[i], rows[best], pv, *tc, prev);
            last[i] = k;
            if (rows[i].empty()) alive[i] = 0;
        }
        pivots.push_back(pv);
        alive[best] = 0;  // retired as a pivot row
    }
    return rank;
}

int rank_mod_p(const SparseIntMatrix& m, long p) {
    using Row = std::vector<std::pair<std::int32_t, std::uint64_t>>;
    const auto up = static_cast<std::uint64_t>(p);
    auto inv = [&](std::uint64_t a) {
        // Fermat: a^(p-2) mod p.
        std::uint64_t r = 1, b = a, e = up - 2;
        while (e) {
            if (e & 1) r = r * b % up;
            b = b * b % up;
            e >>= 1;
        }
        return r;
    };
    std::map<std::int32_t, Row> pivot_rows;  // lead col -> normalized row
    int rank = 0;
    for (const auto& src : m.row_data) {
        Row row;
        row.reserve(src.size());
        for (const auto& [c, v] : src) {
            long rv = static_cast<long>(v % p);
            if (rv < 0) rv += p;
            if (rv) row.emplace_back(c, static_cast<std::uint64_t>(rv));
        }
        while (!row.empty()) {
            auto it = pivot_rows.find(row.front().first);
            if (it == pivot_rows.end()) {
                std::uint64_t s = inv(row.front().second);
                for (auto& [c, v] : row) v = v * s % up;
                pivot_rows.emplace(row.front().first, std::move(row));
                ++rank;
                break;
            }
            // row -= lead * pivot
            const Row& piv = it->second;
            const std::uint64_t f = row.front().second;
            Row next;
            next.reserve(row.size() + piv.size());
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < piv.size()) {
                std::uint64_t v;
                std::int32_t c;
                if (j >= piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                    c = row[i].first;
                    v = row[i].second;
                    ++i;
                } else if (i >= row.size() || piv[j].first < row[i].first) {
                    c = piv[j].first;
                    v = (up - f * piv[j].second % up) % up;
                    ++j;
                } else {
                    c = row[i].first;
                    v = (row[i].second + up - f * piv[j].second % up) % up;
                    ++i;
                    ++j;
                }
                if (v) next.emplace_back(c, v);
            }
            row = std::move(next);
        }
    }
    return rank;
}

}  // namespace

int field_rank(const SparseIntMatrix& m, const Coefficients& coeff) {
    switch (coeff.kind) {
        case Coefficients::Kind::Rational:
            return rank_rational(m);
        case Coefficients::Kind::PrimeField:
            if (!is_prime(coeff.prime))
                throw std::invalid_argument("field_rank: modulus is not prime");
            if (coeff.prime == 2) return gf2_rank_rowspace(m.to_bit_matrix()).rank;
            return rank_mod_p(m, coeff.prime);
        case Coefficients::Kind::Integer:
            throw std::invalid_argument("field_rank requires Q or GF(p) coefficients");
    }
    throw std::logic_error("unreachable");
}

namespace {

// Dense Smith kernel for whatever survives the sparse unit-pivot sweep.
std::vector<BigInt> dense_snf_diagonal(std::vector<std::vector<BigInt>> a) {
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    std::vector<BigInt> diag;
    int t = 0;
    while (t < m && t < n) {
        // Locate smallest nonzero in the trailing submatrix.
        int pi = -1, pj = -1;
        BigInt best;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                if (a[i][j] == 0) continue;
                BigInt v = abs(a[i][j]);
                if (pi < 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        std::swap(a[t], a[pi]);
        for (int i = t; i < m; ++i) std::swap(a[i][t], a[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                BigInt q = a[i][t] / a[t][t];
                if (q != 0)
                    for (int j = t; j < n; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {  // remainder became the smaller pivot
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                BigInt q = a[t][j] / a[t][t];
                if (q != 0)
                    for (int i = t; i < m; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (int i = t; i < m; ++i) std::swap(a[i][t], a[i][j]);
                    clean = false;
                }
            }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

}  // namespace

SNFResult smith_normal_form(const SparseIntMatrix& m) {
    // Sparse phase: repeatedly eliminate with a ±1 pivot of low fill. For
    // simplicial boundary matrices this clears almost everything.
    std::vector<SparseRow> rows;
    for (const auto& r : m.row_data)
        if (!r.empty()) rows.push_back(r);
    std::vector<char> alive(rows.size(), 1);
    std::vector<int> col_count(m.cols, 0);
    for (const auto& r : rows)
        for (const auto& [c, v] : r) ++col_count[c];

    int unit_pivots = 0;
    while (true) {
        int best_row = -1;
        std::int32_t best_col = -1;
        long best_score = std::numeric_limits<long>::max();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!alive[i]) continue;
            for (const auto& [c, v] : rows[i]) {
                if (abs(v) != 1) continue;
                long score = static_cast<long>(rows[i].size() - 1) * (col_count[c] - 1);
                if (score < best_score) {
                    best_score = score;
                    best_row = static_cast<int>(i);
                    best_col = c;
                }
            }
        }
        if (best_row < 0) break;

        const SparseRow piv = rows[best_row];  // copy; the slot gets retired
        const BigInt pv = *find_col(piv, best_col);
        for (const auto& [c, v] : piv) --col_count[c];
        alive[best_row] = 0;
        rows[best_row].clear();
        ++unit_pivots;

        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!alive[i]) continue;
            const BigInt* tc = find_col(rows[i], best_col);
            if (!tc) continue;
            for (const auto& [c, v] : rows[i]) --col_count[c];
            // row -= (tc/pv) * piv, with pv = ±1.
            rows[i] = combine_rows(rows[i], piv, 1, *tc * pv, 1);
            for (const auto& [c, v] : rows[i]) ++col_count[c];
            if (rows[i].empty()) alive[i] = 0;
        }
    }

    // Dense phase on the leftover block.
    std::vector<int> live_cols;
    {
        std::vector<char> used(m.cols, 0);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (alive[i])
                for (const auto& [c, v] : rows[i]) used[c] = 1;
        for (int c = 0; c < m.cols; ++c)
            if (used[c]) live_cols.push_back(c);
    }
    std::vector<int> col_slot(m.cols, -1);
    for (std::size_t k = 0; k < live_cols.size(); ++k) col_slot[live_cols[k]] = static_cast<int>(k);
    std::vector<std::vector<BigInt>> dense;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!alive[i]) continue;
        std::vector<BigInt> dr(live_cols.size(), 0);
        for (const auto& [c, v] : rows[i]) dr[col_slot[c]] = v;
        dense.push_back(std::move(dr));
    }

    std::vector<BigInt> factors(unit_pivots, 1);
    for (BigInt& d : dense_snf_diagonal(std::move(dense))) factors.push_back(std::move(d));

    // Normalize to a divisibility chain: pairwise gcd/lcm until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < factors.size(); ++i)
            for (std::size_t j = i + 1; j < factors.size(); ++j) {
                if (factors[j] % factors[i] == 0) continue;
                BigInt g = gcd(factors[i], factors[j]);
                factors[j] = factors[i] / g * factors[j];
                factors[i] = g;
                changed = true;
            }
    }
    std::sort(factors.begin(), factors.end());

    SNFResult out;
    out.rank = static_cast<int>(factors.size());
    out.invariant_factors = std::move(factors);
    return out;
}

}  // namespace weyltoric
