#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace untangle {

/// Exact rational scalar. GMP keeps values canonical (lowest terms,
/// positive denominator), which is what the drawing verifier relies on:
/// "fixed vertex kept its position" is exact equality of Ratios.
using Ratio = mpq_class;
using BigInt = mpz_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Violation of an invariant the construction is supposed to guarantee.
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Ratio make_ratio(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw Error("ratio: zero denominator");
    Ratio q(num, den);
    q.canonicalize();
    return q;
}

inline Ratio midpoint(const Ratio& a, const Ratio& b) { return (a + b) / 2; }

/// Parses "-12.034", "7", or "3/4" into an exact Ratio.
Ratio ratio_from_string(const std::string& text);

/// Canonical "num/den" rendering ("3/4", "-2/1" prints as "-2").
std::string ratio_to_string(const Ratio& q);

/// Exact numerator/denominator pair as decimal strings.
std::pair<std::string, std::string> ratio_to_pair(const Ratio& q);

Ratio ratio_from_pair(const std::string& num, const std::string& den);

}  // namespace untangle
