#pragma once

// Exact arithmetic aliases. Every geometric decision in the affine
// backend is made over these types; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

namespace embrace {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace embrace
