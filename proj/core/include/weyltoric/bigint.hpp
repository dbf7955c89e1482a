#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace weyltoric {

// All exact arithmetic in the library uses arbitrary precision; nothing here
// is allowed to overflow silently.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

}  // namespace weyltoric
