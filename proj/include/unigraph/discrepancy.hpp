#pragma once

// Beck-Fiala style rounding in exact rational arithmetic. halve() rounds a
// fractional q-split so every coordinate deviates by strictly less than 1;
// partition_pow2() recursively halves into m = 2^k collections with
// per-coordinate deviation at most sum_{i<k} 2^-i < 2.
//
// The floating-variable walk advances along a null direction of the active
// constraint matrix. The elimination is fraction-free (Bareiss) on the
// integer matrix obtained by row scaling, with columns processed lazily:
// scanning stops as soon as the rank is exhausted, and the null vector is
// supported on the pivot columns plus the last non-pivot column.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace unigraph {

struct VectorFamily {
    int dim = 0;
    std::vector<std::vector<Rational>> vectors;
};

struct SplitResult {
    std::vector<std::vector<int>> parts;
};

namespace detail {

inline void check_family(const VectorFamily& fam) {
    if (fam.dim < 0) throw std::invalid_argument("VectorFamily: negative dimension");
    for (std::size_t i = 0; i < fam.vectors.size(); ++i) {
        if (static_cast<int>(fam.vectors[i].size()) != fam.dim)
            throw std::invalid_argument("VectorFamily: vector " + std::to_string(i) + " has wrong length");
        Rational l1(0);
        for (const Rational& x : fam.vectors[i]) l1 += x.abs();
        if (l1 > Rational(1))
            throw std::invalid_argument("VectorFamily: vector " + std::to_string(i) +
                                        " has l1-norm " + l1.str() + " > 1");
    }
}

// One Bareiss elimination step's bookkeeping for lazily scanned columns.
struct PivotStep {
    int row;                       // row index (into the active row list)
    BigInt piv;                    // pivot value after transformation
    std::vector<BigInt> col_state; // transformed pivot column over all rows
    std::vector<BigInt> frozen;    // frozen[s]: this column's value at pivot row s < own step
};

}  // namespace detail

// Subset I of [t] with |sum_{i in I} v_ij - q * sum_i v_ij| < 1 per coordinate.
inline std::vector<int> halve(const VectorFamily& fam, const Rational& q, bool audit = false) {
    if (q < Rational(0) || q > Rational(1)) throw std::invalid_argument("halve: q outside [0,1]");
    detail::check_family(fam);
    const int t = static_cast<int>(fam.vectors.size());
    const int d = fam.dim;
    std::vector<Rational> x(t, q);
    std::vector<char> floating(t, 1);
    if (q == Rational(0) || q == Rational(1)) std::fill(floating.begin(), floating.end(), 0);

    // Row scaling, computed once: scale[j] * v_ij is an integer for all i.
    // The scaled matrix is materialized up front so the per-phase elimination
    // touches integers only.
    std::vector<BigInt> scale(d, 1);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < t; ++i) {
            BigInt den = fam.vectors[i][j].den();
            BigInt g;
            mpz_gcd(g.get_mpz_t(), scale[j].get_mpz_t(), den.get_mpz_t());
            scale[j] = scale[j] / g * den;
        }
    std::vector<std::vector<BigInt>> imat(d, std::vector<BigInt>(t));
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < t; ++i) {
            const Rational& r = fam.vectors[i][j];
            imat[j][i] = r.num() * (scale[j] / r.den());
        }
    auto int_entry = [&](int j, int i) -> const BigInt& { return imat[j][i]; };

    std::vector<Rational> mass(d, Rational(0));  // floating l1 mass per coordinate
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < t; ++i)
            if (floating[i]) mass[j] += fam.vectors[i][j].abs();

    int n_floating = 0;
    for (char f : floating) n_floating += f;

    auto fix_var = [&](int i, const Rational& value) {
        x[i] = value;
        floating[i] = 0;
        --n_floating;
        for (int j = 0; j < d; ++j) mass[j] -= fam.vectors[i][j].abs();
    };

    while (n_floating > 0) {
        std::vector<int> rows;  // active coordinates: floating mass > 1
        for (int j = 0; j < d; ++j)
            if (mass[j] > Rational(1)) rows.push_back(j);

        if (rows.empty()) {
            // No constraints left: each remaining variable moves by < 1, and
            // each coordinate's remaining floating mass is <= 1, so rounding
            // everything to its nearer bound keeps every deviation < 1.
            for (int i = 0; i < t; ++i)
                if (floating[i]) fix_var(i, x[i] <= Rational(1, 2) ? Rational(0) : Rational(1));
            break;
        }

        std::vector<int> flt;
        for (int i = 0; i < t; ++i)
            if (floating[i]) flt.push_back(i);
        const int r_count = static_cast<int>(rows.size());
        // The defining count of the method: active coordinates < floating vars.
        if (r_count >= static_cast<int>(flt.size()))
            throw std::logic_error("halve: more active constraints than floating variables");

        // Lazy Bareiss: scan floating columns until the rank is exhausted.
        std::vector<detail::PivotStep> steps;
        std::vector<int> pivot_step_of_row(r_count, -1);
        std::vector<int> pivot_col;  // column (index into flt) per step
        int scanned = 0;
        int last_nonpivot = -1;
        auto transform_column = [&](int ci) {
            std::vector<BigInt> b(r_count);
            for (int r = 0; r < r_count; ++r) b[r] = int_entry(rows[r], flt[ci]);
            std::vector<BigInt> frozen(steps.size());
            BigInt prev_piv = 1;
            for (std::size_t s = 0; s < steps.size(); ++s) {
                frozen[s] = b[steps[s].row];
                for (int r = 0; r < r_count; ++r) {
                    // update rows not yet pivoted as of step s
                    int ps = pivot_step_of_row[r];
                    if (ps >= 0 && static_cast<std::size_t>(ps) <= s) continue;
                    BigInt tmp = steps[s].piv * b[r] - steps[s].col_state[r] * frozen[s];
                    mpz_divexact(b[r].get_mpz_t(), tmp.get_mpz_t(), prev_piv.get_mpz_t());
                }
                prev_piv = steps[s].piv;
            }
            return std::make_pair(b, frozen);
        };
        while (scanned < static_cast<int>(flt.size()) &&
               static_cast<int>(steps.size()) < r_count) {
            int ci = scanned++;
            auto [b, frozen] = transform_column(ci);
            int prow = -1;
            for (int r = 0; r < r_count; ++r)
                if (pivot_step_of_row[r] < 0 && b[r] != 0) {
                    prow = r;
                    break;
                }
            if (prow < 0) {
                last_nonpivot = ci;
                continue;
            }
            detail::PivotStep st;
            st.row = prow;
            st.piv = b[prow];
            st.col_state = b;
            st.frozen = std::move(frozen);
            pivot_step_of_row[prow] = static_cast<int>(steps.size());
            steps.push_back(std::move(st));
            pivot_col.push_back(ci);
        }
        // Null direction support: pivot columns plus the last non-pivot column.
        int free_col;
        std::vector<BigInt> free_b;
        std::vector<BigInt> free_frozen;
        if (scanned < static_cast<int>(flt.size())) {
            free_col = static_cast<int>(flt.size()) - 1;
            auto [b, frozen] = transform_column(free_col);
            free_b = std::move(b);
            free_frozen = std::move(frozen);
        } else {
            if (last_nonpivot < 0) throw std::logic_error("halve: no free column");
            free_col = last_nonpivot;
            auto [b, frozen] = transform_column(free_col);
            free_b = std::move(b);
            free_frozen = std::move(frozen);
        }

        // Back-substitute: delta[free_col] = 1, solve pivot rows bottom-up.
        std::vector<Rational> delta(flt.size(), Rational(0));
        delta[free_col] = Rational(1);
        for (int s = static_cast<int>(steps.size()) - 1; s >= 0; --s) {
            Rational acc = Rational(free_frozen[s], BigInt(1));
            // plus the value of later pivot columns at this pivot row
            for (std::size_t s2 = s + 1; s2 < steps.size(); ++s2)
                acc += Rational(steps[s2].frozen[s], BigInt(1)) * delta[pivot_col[s2]];
            delta[pivot_col[s]] = -(acc / Rational(steps[s].piv, BigInt(1)));
        }

        // Walk to the first boundary hit.
        Rational alpha(-1);
        for (std::size_t ci = 0; ci < flt.size(); ++ci) {
            if (delta[ci].is_zero()) continue;
            int i = flt[ci];
            Rational room = delta[ci] > Rational(0) ? Rational(1) - x[i] : x[i];
            Rational step = room / delta[ci].abs();
            if (alpha < Rational(0) || step < alpha) alpha = step;
        }
        if (alpha <= Rational(0)) throw std::logic_error("halve: degenerate step");
        for (std::size_t ci = 0; ci < flt.size(); ++ci) {
            if (delta[ci].is_zero()) continue;
            int i = flt[ci];
            Rational nx = x[i] + alpha * delta[ci];
            if (nx == Rational(0) || nx == Rational(1))
                fix_var(i, nx);
            else
                x[i] = nx;
        }

        if (audit) {
            // The walk must keep every active coordinate's balance equation exact.
            for (int j = 0; j < d; ++j) {
                if (!(mass[j] > Rational(1))) continue;
                Rational lhs(0), tot(0);
                for (int i = 0; i < t; ++i) {
                    lhs += x[i] * fam.vectors[i][j];
                    tot += fam.vectors[i][j];
                }
                if (lhs != q * tot) throw std::logic_error("halve: balance equation violated");
            }
        }
    }

    std::vector<int> taken;
    for (int i = 0; i < t; ++i)
        if (x[i] == Rational(1)) taken.push_back(i);
    return taken;
}

namespace detail {

inline void partition_pow2_rec(const VectorFamily& fam, const std::vector<int>& idx, int m,
                               std::vector<std::vector<int>>& out) {
    if (m == 1) {
        out.push_back(idx);
        return;
    }
    VectorFamily sub;
    sub.dim = fam.dim;
    sub.vectors.reserve(idx.size());
    for (int i : idx) sub.vectors.push_back(fam.vectors[i]);
    std::vector<int> taken = halve(sub, Rational(1, 2));
    std::vector<char> in_taken(idx.size(), 0);
    for (int i : taken) in_taken[i] = 1;
    std::vector<int> left, right;
    for (std::size_t i = 0; i < idx.size(); ++i)
        (in_taken[i] ? left : right).push_back(idx[i]);
    partition_pow2_rec(fam, left, m / 2, out);
    partition_pow2_rec(fam, right, m / 2, out);
}

}  // namespace detail

inline SplitResult partition_pow2(const VectorFamily& fam, int m) {
    if (m < 2 || (m & (m - 1)) != 0)
        throw std::invalid_argument("partition_pow2: m must be a power of two >= 2");
    detail::check_family(fam);
    std::vector<int> idx(fam.vectors.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    SplitResult res;
    detail::partition_pow2_rec(fam, idx, m, res.parts);
    return res;
}

}  // namespace unigraph
