#pragma once

// Exhaustive enumerations refuse to start when the object count exceeds a
// caller-supplied cap, so a typo in `n` cannot launch a runaway job.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "hookcal/rational.hpp"

namespace hookcal {

/// Default ceiling on enumerated objects per job. Full binary-tree
/// enumeration stays feasible through n = 16 (Catalan(16) ~ 3.5e7).
inline constexpr std::uint64_t kDefaultEnumerationCap = 50'000'000;

class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws CapacityError naming the offending count when count > cap.
/// `what` describes the count, e.g. "Catalan(40)".
inline void require_capacity(const BigInt& count, std::uint64_t cap,
                             const std::string& what) {
    if (count > cap) {
        throw CapacityError(what + " = " + count.str() +
                            " objects exceeds enumeration cap " +
                            std::to_string(cap));
    }
}

}  // namespace hookcal
