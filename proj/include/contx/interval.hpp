#pragma once

#include "contx/bigint.hpp"
#include "contx/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace contx {

using Q = boost::multiprecision::cpp_rational;

// Closed interval [lo, hi] with exact rational endpoints. Every operation
// returns an interval that contains the exact image, so any comparison that
// separates two intervals is a certified decision.
struct RatInterval {
    Q lo;
    Q hi;

    Q width() const { return hi - lo; }
    bool contains(const Q& x) const { return lo <= x && x <= hi; }
    bool definitely_less(const RatInterval& o) const { return hi < o.lo; }
    bool definitely_greater(const RatInterval& o) const { return lo > o.hi; }
};

RatInterval ri_from(const Q& x);
RatInterval ri_add(const RatInterval& a, const RatInterval& b);
RatInterval ri_sub(const RatInterval& a, const RatInterval& b);
// Requires nonnegative operands; everything in this module is positive.
RatInterval ri_mul(const RatInterval& a, const RatInterval& b);
// Requires b.lo > 0.
RatInterval ri_div(const RatInterval& a, const RatInterval& b);
RatInterval ri_pow(const RatInterval& a, unsigned e);

// floor(x^(1/k)) for x >= 0.
BigInt iroot_floor(const BigInt& x, unsigned k);

// sqrt(x) within 2^-bits for x >= 0.
RatInterval sqrt_interval(const Q& x, unsigned bits);

// x^(1/k) within ~2^-bits, for a nonnegative interval x.
RatInterval kth_root_interval(const RatInterval& x, unsigned k, unsigned bits);

// e^2 within 2^-bits.
RatInterval e_squared(unsigned bits);

BigInt q_floor(const Q& x);
// Nearest integer; throws precision_error when x sits exactly on a half.
BigInt q_nearest(const Q& x);

// Decimal string of x truncated toward zero at `digits` fractional digits.
std::string decimal_string(const Q& x, unsigned digits);

} // namespace contx
