#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "linkvol/int_matrix.hpp"

namespace linkvol {

/// Smith normal form U * m * V = D with D diagonal, non-negative, each entry dividing the next
/// and zeros trailing. U and V are unimodular.
struct SmithForm {
    std::vector<BigInt> diagonal; // length min(rows, cols)
    IntMatrix left;               // U, rows x rows
    IntMatrix right;              // V, cols x cols

    std::size_t rank() const {
        std::size_t r = 0;
        for (const auto& d : diagonal)
            r += (d != 0);
        return r;
    }
};

namespace detail {

/// Position of a nonzero entry of least absolute value in the trailing block starting at (t, t).
inline std::optional<std::pair<std::size_t, std::size_t>> smallest_pivot(const IntMatrix& a, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0)
                continue;
            BigInt v = boost::multiprecision::abs(a(i, j));
            if (!best || v < best_abs) {
                best = {i, j};
                best_abs = std::move(v);
            }
        }
    return best;
}

} // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const std::size_t steps = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            const auto pivot = detail::smallest_pivot(a, t);
            if (!pivot)
                break;
            a.swap_rows(t, pivot->first);
            u.swap_rows(t, pivot->first);
            a.swap_cols(t, pivot->second);
            v.swap_cols(t, pivot->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0)
                    continue;
                const BigInt q = a(i, t) / a(t, t);
                a.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                clean = clean && a(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0)
                    continue;
                const BigInt q = a(t, j) / a(t, t);
                a.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                clean = clean && a(t, j) == 0;
            }
            if (!clean)
                continue; // a smaller remainder exists; re-pivot

            // Divisibility: fold an offending row into the pivot row and repeat.
            bool divides = true;
            for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < a.cols(); ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        a.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithForm out{{}, std::move(u), std::move(v)};
    out.diagonal.reserve(steps);
    for (std::size_t t = 0; t < steps; ++t)
        out.diagonal.push_back(a(t, t));
    return out;
}

/// Finitely generated abelian group in invariant-factor form.
struct AbelianGroup {
    std::vector<BigInt> torsion; // each divides the next
    std::size_t free_rank = 0;

    /// Torsion coefficients followed by one zero per free summand.
    std::vector<BigInt> divisors() const {
        std::vector<BigInt> out = torsion;
        out.insert(out.end(), free_rank, BigInt(0));
        return out;
    }
    /// Order of the group, or nullopt when infinite.
    std::optional<BigInt> order() const {
        if (free_rank > 0)
            return std::nullopt;
        BigInt p = 1;
        for (const auto& t : torsion)
            p *= t;
        return p;
    }
    bool trivial() const { return torsion.empty() && free_rank == 0; }
};

/// Abelian group with generators = columns and relations = rows of `relations`.
inline AbelianGroup abelian_group_from_relations(const IntMatrix& relations) {
    const SmithForm snf = smith_normal_form(relations);
    AbelianGroup g;
    for (const auto& d : snf.diagonal)
        if (d > 1)
            g.torsion.push_back(d);
    g.free_rank = relations.cols() - snf.rank();
    return g;
}

} // namespace linkvol
