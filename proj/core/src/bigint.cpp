#include "wordentropy/bigint.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "wordentropy/error.hpp"

namespace wordentropy {

double log_big(const BigInt& value) {
  if (value <= 0) {
    throw Error(Errc::invalid_argument, "log of a non-positive integer");
  }
  if (boost::multiprecision::msb(value) < 1000) {
    return std::log(value.convert_to<double>());
  }
  // Extended exponent range: the value itself may not fit in a double.
  boost::multiprecision::cpp_bin_float_50 wide(value);
  return boost::multiprecision::log(wide).convert_to<double>();
}

double to_double(const BigInt& value) { return value.convert_to<double>(); }

}  // namespace wordentropy
