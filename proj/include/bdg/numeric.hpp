#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bdg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// "7", "-3", "8/7", "-8/7". Denominator omitted when 1.
std::string rat_to_string(const Rat& r);

// Accepts an integer or a '/'-separated fraction; throws InputError otherwise.
Rat rat_from_string(const std::string& text);

bool is_integer(const Rat& r);

// Floor-free exact conversion; throws InputError when r is not an integer.
Int to_integer(const Rat& r);

} // namespace bdg
