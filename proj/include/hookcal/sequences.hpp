#pragma once

// Integer sequences behind the identities:
//
//   Catalan(n)   binary tree shapes with n vertices
//   T_n = n^(n-2)  labeled trees on {1..n}       (T_1 = 1 by convention)
//   R_n = n^(n-1)  rooted labeled trees on {1..n}
//   F_n          defined by the recurrence
//                F_0 = 1,
//                F_n = (n+1)/(2n) * sum_{k=0}^{n-1} C(n+1,k+1) F_k F_{n-1-k}
//                and equal to (n+1)^n.
//
// F_n is evaluated bottom-up in exact rational arithmetic; the value is an
// integer even though the intermediate arithmetic is rational.

#include <optional>
#include <stdexcept>
#include <vector>

#include "hookcal/rational.hpp"

namespace hookcal {

/// Catalan numbers C_0..C_nmax via C_0 = 1, C_n = sum_k C_k C_{n-1-k}.
inline std::vector<BigInt> catalan_numbers(int nmax) {
    if (nmax < 0) {
        throw std::invalid_argument("catalan_numbers: nmax must be >= 0");
    }
    std::vector<BigInt> c(static_cast<std::size_t>(nmax) + 1);
    c[0] = 1;
    for (int n = 1; n <= nmax; ++n) {
        BigInt sum = 0;
        for (int k = 0; k < n; ++k) {
            sum += c[static_cast<std::size_t>(k)] *
                   c[static_cast<std::size_t>(n - 1 - k)];
        }
        c[static_cast<std::size_t>(n)] = sum;
    }
    return c;
}

inline BigInt catalan(int n) {
    return catalan_numbers(n).back();
}

/// Row m of Pascal's triangle: C(m, 0) .. C(m, m), built additively so the
/// intermediate values never exceed the results.
inline std::vector<BigInt> pascal_row(int m) {
    if (m < 0) {
        throw std::invalid_argument("pascal_row: m must be >= 0");
    }
    std::vector<BigInt> row{BigInt(1)};
    row.reserve(static_cast<std::size_t>(m) + 1);
    for (int i = 1; i <= m; ++i) {
        row.push_back(BigInt(1));
        for (std::size_t j = row.size() - 2; j >= 1; --j) {
            row[j] += row[j - 1];
        }
    }
    return row;
}

inline BigInt binomial(int m, int j) {
    if (j < 0 || j > m) {
        return BigInt(0);
    }
    return pascal_row(m)[static_cast<std::size_t>(j)];
}

/// T_m = m^(m-2). The closed form at m = 1 reads 1^(-1); the single-vertex
/// tree exists and is counted once, so T_1 = 1.
inline BigInt labeled_tree_count(int m) {
    if (m < 1) {
        throw std::invalid_argument("labeled_tree_count: m must be >= 1");
    }
    if (m == 1) {
        return BigInt(1);
    }
    return int_pow(BigInt(m), static_cast<unsigned>(m - 2));
}

/// R_m = m * T_m = m^(m-1).
inline BigInt rooted_tree_count(int m) {
    if (m < 1) {
        throw std::invalid_argument("rooted_tree_count: m must be >= 1");
    }
    return int_pow(BigInt(m), static_cast<unsigned>(m - 1));
}

/// (n+1)^(n-1): the closed-form side of the unlabeled hook length identity.
inline BigInt hook_identity_closed_form(int n) {
    if (n < 1) {
        throw std::invalid_argument("hook_identity_closed_form: n must be >= 1");
    }
    return int_pow(BigInt(n + 1), static_cast<unsigned>(n - 1));
}

/// (n+1)^n: the closed-form side of the rooted reformulation, equal to F_n.
inline BigInt rooted_identity_closed_form(int n) {
    if (n < 0) {
        throw std::invalid_argument("rooted_identity_closed_form: n must be >= 0");
    }
    return int_pow(BigInt(n + 1), static_cast<unsigned>(n));
}

/// F_0..F_nmax by the recurrence, memoized bottom-up. Returned values are
/// exactly what the recurrence produces; checking them against (n+1)^n is
/// the verification layer's job, not this function's.
inline std::vector<Rational> compute_F(int nmax) {
    if (nmax < 0) {
        throw std::invalid_argument("compute_F: nmax must be >= 0");
    }
    std::vector<Rational> f(static_cast<std::size_t>(nmax) + 1);
    f[0] = 1;
    for (int n = 1; n <= nmax; ++n) {
        const auto row = pascal_row(n + 1);
        Rational sum = 0;
        for (int k = 0; k <= n - 1; ++k) {
            sum += Rational(row[static_cast<std::size_t>(k + 1)]) *
                   f[static_cast<std::size_t>(k)] *
                   f[static_cast<std::size_t>(n - 1 - k)];
        }
        f[static_cast<std::size_t>(n)] =
            make_rational(BigInt(n + 1), BigInt(2 * n)) * sum;
    }
    return f;
}

/// Per-n rows of {Catalan_n, T_n, R_n, F_n}. T and R are absent at n = 0.
struct SequenceTable {
    int nmax = 0;
    std::vector<BigInt> catalan;
    std::vector<std::optional<BigInt>> labeled;  // T_n, n >= 1
    std::vector<std::optional<BigInt>> rooted;   // R_n, n >= 1
    std::vector<Rational> f;
};

inline SequenceTable build_sequence_table(int nmax) {
    if (nmax < 0) {
        throw std::invalid_argument("build_sequence_table: nmax must be >= 0");
    }
    SequenceTable table;
    table.nmax = nmax;
    table.catalan = catalan_numbers(nmax);
    table.f = compute_F(nmax);
    table.labeled.resize(static_cast<std::size_t>(nmax) + 1);
    table.rooted.resize(static_cast<std::size_t>(nmax) + 1);
    for (int n = 1; n <= nmax; ++n) {
        table.labeled[static_cast<std::size_t>(n)] = labeled_tree_count(n);
        table.rooted[static_cast<std::size_t>(n)] = rooted_tree_count(n);
    }
    return table;
}

}  // namespace hookcal
