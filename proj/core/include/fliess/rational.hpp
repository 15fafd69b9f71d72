#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace fliess {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

std::string to_string(const Rat& r);  // "3/2", "-1", "0"
double to_double(const Rat& r);

}  // namespace fliess
