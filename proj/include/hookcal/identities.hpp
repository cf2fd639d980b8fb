#pragma once

// Verifiers for the hook length identity chain. Each one computes its two
// sides by independent methods and reports exact equality:
//
//   eq1    (n+1)^(n-1) closed form   vs  enumeration sum of unlabeled weights
//   eq2    (n+1)^n closed form       vs  enumeration sum of rooted weights
//   eq3    F_n from the recurrence   vs  (n+1)^n closed form
//   split  (n+1)!/2^n * (1+1/n)      vs  (n+1)/(2n) C(n+1 k+1) (k+1)!/2^k (n-k)!/2^(n-k-1)
//   link   F_n from the recurrence   vs  (n+1) * T_{n+1}
//
// The enumeration sums stream every shape; exact rational addition is
// associative and commutative, so partitioning the sum by left-subtree
// size across threads yields the identical result.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hookcal/binary_trees.hpp"
#include "hookcal/capacity.hpp"
#include "hookcal/report.hpp"
#include "hookcal/sequences.hpp"

namespace hookcal {

struct VerifyOptions {
    std::uint64_t cap = kDefaultEnumerationCap;
    int threads = 1;
};

namespace detail {

struct EnumerationSum {
    Rational sum;
    std::uint64_t count = 0;
};

// Streams all shapes of size n and accumulates hook weights. With more
// than one thread, the left-subtree-size slices k = 0..n-1 are handed out
// work-stealing style and the exact partial sums merged afterwards.
inline EnumerationSum sum_hook_weights(int n, WeightForm form, int threads) {
    EnumerationSum total;
    if (threads <= 1 || n < 4) {
        enumerate_shapes(n, [&](const BinaryTreeShape& t) {
            total.sum += hook_weight(t, form);
            ++total.count;
        });
        return total;
    }
    const int workers = std::min(threads, n);
    std::vector<EnumerationSum> partial(static_cast<std::size_t>(workers));
    std::atomic<int> next_k{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            auto& mine = partial[static_cast<std::size_t>(w)];
            for (int k = next_k.fetch_add(1); k < n; k = next_k.fetch_add(1)) {
                enumerate_shapes_with_left_size(
                    n, k, [&](const BinaryTreeShape& t) {
                        mine.sum += hook_weight(t, form);
                        ++mine.count;
                    });
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (const auto& p : partial) {
        total.sum += p.sum;
        total.count += p.count;
    }
    return total;
}

}  // namespace detail

/// (n+1)^(n-1) against the exhaustive enumeration sum over all Catalan(n)
/// shapes. Refuses with a CapacityError naming Catalan(n) when the shape
/// count exceeds opts.cap.
inline VerificationReport verify_eq1(int n, const VerifyOptions& opts = {}) {
    if (n < 1) {
        throw std::invalid_argument("verify_eq1: n must be >= 1");
    }
    require_capacity(catalan(n), opts.cap,
                     "Catalan(" + std::to_string(n) + ")");
    const auto start = std::chrono::steady_clock::now();
    const auto enumerated =
        detail::sum_hook_weights(n, WeightForm::unlabeled_eq1, opts.threads);
    return VerificationReport::make(
        IdentityId::eq1, n, Rational(hook_identity_closed_form(n)),
        enumerated.sum, "closed form (n+1)^(n-1)",
        "hook-weight sum over all shapes", enumerated.count,
        detail::elapsed_ms_since(start));
}

/// (n+1)^n against the enumeration sum of rooted-form weights.
inline VerificationReport verify_eq2(int n, const VerifyOptions& opts = {}) {
    if (n < 1) {
        throw std::invalid_argument("verify_eq2: n must be >= 1");
    }
    require_capacity(catalan(n), opts.cap,
                     "Catalan(" + std::to_string(n) + ")");
    const auto start = std::chrono::steady_clock::now();
    const auto enumerated =
        detail::sum_hook_weights(n, WeightForm::rooted_eq2, opts.threads);
    return VerificationReport::make(
        IdentityId::eq2, n, Rational(rooted_identity_closed_form(n)),
        enumerated.sum, "closed form (n+1)^n",
        "rooted hook-weight sum over all shapes", enumerated.count,
        detail::elapsed_ms_since(start));
}

/// Recurrence value F_n against the closed form (n+1)^n. `f` must come from
/// compute_F(nmax) with nmax >= n.
inline VerificationReport verify_eq3(int n,
                                     const std::vector<Rational>& f) {
    if (n < 0 || static_cast<std::size_t>(n) >= f.size()) {
        throw std::invalid_argument("verify_eq3: n out of range of F table");
    }
    const auto start = std::chrono::steady_clock::now();
    return VerificationReport::make(
        IdentityId::eq3_vs_closed_form, n, f[static_cast<std::size_t>(n)],
        Rational(rooted_identity_closed_form(n)),
        "bottom-up rational recurrence for F", "closed form (n+1)^n", 0,
        detail::elapsed_ms_since(start));
}

/// The splitting relation behind the recurrence: exact equality of
///   (n+1)!/2^n * (1 + 1/n)
///   (n+1)/(2n) * C(n+1 over k+1) * (k+1)!/2^k * (n-k)!/2^(n-k-1)
/// for 0 <= k <= n-1. Holds for every admissible k.
inline bool verify_split_relation(int n, int k) {
    if (n < 1) {
        throw std::invalid_argument("verify_split_relation: n must be >= 1");
    }
    if (k < 0 || k > n - 1) {
        throw std::invalid_argument(
            "verify_split_relation: need 0 <= k <= n-1");
    }
    const Rational lhs = make_rational(
        factorial(static_cast<unsigned>(n + 1)) * (n + 1),
        pow2(static_cast<unsigned>(n)) * n);
    const Rational rhs = make_rational(
        BigInt(n + 1) * binomial(n + 1, k + 1) *
            factorial(static_cast<unsigned>(k + 1)) *
            factorial(static_cast<unsigned>(n - k)),
        BigInt(2 * n) * pow2(static_cast<unsigned>(k)) *
            pow2(static_cast<unsigned>(n - k - 1)));
    return lhs == rhs;
}

/// Per-n report over every k. lhs is the k-independent side; rhs is the
/// common value of the k-dependent side when all k agree, else the first
/// mismatching value.
inline VerificationReport verify_split_all(int n) {
    if (n < 1) {
        throw std::invalid_argument("verify_split_all: n must be >= 1");
    }
    const auto start = std::chrono::steady_clock::now();
    const Rational lhs = make_rational(
        factorial(static_cast<unsigned>(n + 1)) * (n + 1),
        pow2(static_cast<unsigned>(n)) * n);
    Rational rhs = lhs;
    const auto row = pascal_row(n + 1);
    for (int k = 0; k <= n - 1; ++k) {
        const Rational side = make_rational(
            BigInt(n + 1) * row[static_cast<std::size_t>(k + 1)] *
                factorial(static_cast<unsigned>(k + 1)) *
                factorial(static_cast<unsigned>(n - k)),
            BigInt(2 * n) * pow2(static_cast<unsigned>(k)) *
                pow2(static_cast<unsigned>(n - k - 1)));
        if (side != lhs) {
            rhs = side;
            break;
        }
    }
    return VerificationReport::make(
        IdentityId::split_relation, n, lhs, rhs,
        "factorial form of the split prefactor",
        "binomial split form checked for every k in 0..n-1", 0,
        detail::elapsed_ms_since(start));
}

/// F_n = (n+1) * T_{n+1}: recurrence output against Cayley's closed form.
inline VerificationReport verify_link(int n, const std::vector<Rational>& f) {
    if (n < 1 || static_cast<std::size_t>(n) >= f.size()) {
        throw std::invalid_argument("verify_link: n out of range of F table");
    }
    const auto start = std::chrono::steady_clock::now();
    return VerificationReport::make(
        IdentityId::f_equals_rooted_count, n, f[static_cast<std::size_t>(n)],
        Rational(BigInt(n + 1) * labeled_tree_count(n + 1)),
        "bottom-up rational recurrence for F",
        "(n+1) * T_(n+1) with T the labeled-tree closed form", 0,
        detail::elapsed_ms_since(start));
}

/// The link identity for every n in 1..nmax.
inline std::vector<VerificationReport> verify_F_equals_rooted_count(int nmax) {
    if (nmax < 1) {
        throw std::invalid_argument(
            "verify_F_equals_rooted_count: nmax must be >= 1");
    }
    const auto f = compute_F(nmax);
    std::vector<VerificationReport> reports;
    reports.reserve(static_cast<std::size_t>(nmax));
    for (int n = 1; n <= nmax; ++n) {
        reports.push_back(verify_link(n, f));
    }
    return reports;
}

}  // namespace hookcal
