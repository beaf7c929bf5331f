#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace wordentropy {

using BigInt = boost::multiprecision::cpp_int;

/// Natural log of a positive big integer, accurate for values far beyond the
/// double range.
double log_big(const BigInt& value);

/// Nearest double, +inf when out of range.
double to_double(const BigInt& value);

}  // namespace wordentropy
