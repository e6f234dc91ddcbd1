#pragma once

#include "sympchern/rational.hpp"

namespace sympchern {

/// Binomial coefficient under the vanishing convention: C(a,b) = 0 whenever
/// a <= 0, b < 0, or a < b. Note C(0,0) = 0 under this convention; it is the
/// convention the product-family expansions rely on to kill out-of-range
/// terms.
Int binom(long long a, long long b);

/// Standard binomial coefficient: C(a,b) = a!/(b!(a-b)!) for 0 <= b <= a
/// (so C(0,0) = 1), and 0 outside that range.
Int binom_std(long long a, long long b);

}  // namespace sympchern
