#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bruhat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(int n);

}  // namespace bruhat
