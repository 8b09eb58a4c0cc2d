#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace contx {

// Exact arbitrary-precision integer. Continuants grow exponentially in the
// sequence length, so no fixed-width type is safe here.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

} // namespace contx
