#pragma once

// Every identity check produces a VerificationReport recording which
// independent methods computed each side, so a bug in one path cannot
// silently vanish. Reports serialize to flat JSON objects with
// decimal-string numbers ("p/q" for non-integers) so no consumer ever
// rounds them.

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>

#include "hookcal/rational.hpp"

namespace hookcal {

namespace detail {

inline std::int64_t elapsed_ms_since(
    std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace detail

enum class IdentityId {
    eq1,                    // (n+1)^(n-1) = sum over shapes of n!/2^n prod(1+1/h)
    eq2,                    // (n+1)^n     = sum over shapes of (n+1)!/2^n prod(1+1/h)
    eq3_vs_closed_form,     // recurrence value F_n vs (n+1)^n
    split_relation,         // the factorial/binomial splitting relation
    eq4,                    // 2n T_{n+1} = sum C(n+1,k+1) (k+1)T_{k+1} (n-k)T_{n-k}
    eq5,                    // R_{n+1} = (n+1)/(2n) sum C(n+1,k+1) R_{k+1} R_{n-k}
    f_equals_rooted_count,  // F_n = (n+1) T_{n+1}
};

inline constexpr std::string_view identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::eq1: return "eq1";
        case IdentityId::eq2: return "eq2";
        case IdentityId::eq3_vs_closed_form: return "eq3";
        case IdentityId::split_relation: return "split";
        case IdentityId::eq4: return "eq4";
        case IdentityId::eq5: return "eq5";
        case IdentityId::f_equals_rooted_count: return "link";
    }
    return "?";
}

struct VerificationReport {
    IdentityId identity = IdentityId::eq1;
    int n = 0;
    Rational lhs;
    Rational rhs;
    std::string method_lhs;
    std::string method_rhs;
    std::uint64_t object_count = 0;  // objects enumerated; 0 for closed forms
    bool verified = false;           // always exactly (lhs == rhs)
    std::int64_t elapsed_ms = 0;

    static VerificationReport make(IdentityId id, int n, Rational lhs,
                                   Rational rhs, std::string method_lhs,
                                   std::string method_rhs,
                                   std::uint64_t object_count,
                                   std::int64_t elapsed_ms) {
        VerificationReport r;
        r.identity = id;
        r.n = n;
        r.verified = (lhs == rhs);
        r.lhs = std::move(lhs);
        r.rhs = std::move(rhs);
        r.method_lhs = std::move(method_lhs);
        r.method_rhs = std::move(method_rhs);
        r.object_count = object_count;
        r.elapsed_ms = elapsed_ms;
        return r;
    }
};

/// Stable output order: identity declaration order, then n, then method.
inline bool report_order_less(const VerificationReport& a,
                              const VerificationReport& b) {
    return std::tuple(static_cast<int>(a.identity), a.n, a.method_rhs) <
           std::tuple(static_cast<int>(b.identity), b.n, b.method_rhs);
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
    return nlohmann::ordered_json{
        {"identity", std::string(identity_name(r.identity))},
        {"n", r.n},
        {"lhs", to_fraction_string(r.lhs)},
        {"rhs", to_fraction_string(r.rhs)},
        {"method_lhs", r.method_lhs},
        {"method_rhs", r.method_rhs},
        {"object_count", r.object_count},
        {"verified", r.verified},
        {"elapsed_ms", r.elapsed_ms},
    };
}

inline std::string to_text_line(const VerificationReport& r) {
    std::ostringstream out;
    out << (r.verified ? "[ ok ]" : "[FAIL]") << ' ' << identity_name(r.identity)
        << " n=" << r.n << "  lhs=" << to_fraction_string(r.lhs)
        << "  rhs=" << to_fraction_string(r.rhs) << "  (" << r.method_lhs
        << " vs " << r.method_rhs << ")";
    if (r.object_count > 0) {
        out << "  objects=" << r.object_count;
    }
    out << "  [" << r.elapsed_ms << " ms]";
    return out.str();
}

inline std::string report_csv_header() {
    return "identity,n,lhs,rhs,method_lhs,method_rhs,object_count,verified,"
           "elapsed_ms";
}

inline std::string to_csv_row(const VerificationReport& r) {
    // Method strings contain no commas or quotes by construction.
    std::ostringstream out;
    out << identity_name(r.identity) << ',' << r.n << ','
        << to_fraction_string(r.lhs) << ',' << to_fraction_string(r.rhs) << ','
        << r.method_lhs << ',' << r.method_rhs << ',' << r.object_count << ','
        << (r.verified ? "true" : "false") << ',' << r.elapsed_ms;
    return out.str();
}

}  // namespace hookcal
