#pragma once

#include <optional>
#include <string>
#include <utility>

#include "altrun/polynomial.hpp"

namespace altrun {

// First failing index with both sides rendered, so a regression is
// diagnosable from the report alone.
struct Witness {
    long index = 0;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string identity;
    long range_low = 0;
    long range_high = 0;
    bool passed = true;
    std::optional<Witness> witness;
};

inline VerificationReport pass_report(std::string identity, long n) {
    return {std::move(identity), n, n, true, std::nullopt};
}

inline VerificationReport fail_report(std::string identity, long n,
                                      std::string lhs, std::string rhs) {
    return {std::move(identity), n, n, false,
            Witness{n, std::move(lhs), std::move(rhs)}};
}

inline VerificationReport make_report(std::string identity, long n,
                                      const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs == rhs) return pass_report(std::move(identity), n);
    return fail_report(std::move(identity), n, lhs.str(), rhs.str());
}

}  // namespace altrun
