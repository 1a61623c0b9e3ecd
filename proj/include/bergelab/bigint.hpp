#ifndef BERGELAB_BIGINT_HPP
#define BERGELAB_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace bergelab {

// Exact integer type for counts that outgrow 64 bits (e.g. census totals and
// the right-hand sides of the reduction inequalities, which involve powers
// like X^{r!/2}).
using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient C(a, b); 0 when b < 0 or b > a.
BigInt binomial(long long a, long long b);

/// Floor of log2 for positive values, as a double good enough for reporting
/// (uses the top bits of the number; exact for values that fit a double).
double log2_approx(const BigInt& x);

}  // namespace bergelab

#endif
