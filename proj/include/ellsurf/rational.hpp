#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

namespace ellsurf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Exact square root of a non-negative integer, if it is a perfect square.
std::optional<Int> sqrt_exact(const Int& n);

/// Exact square root of a rational, if it is a square in Q.
std::optional<Rat> sqrt_exact(const Rat& r);

} // namespace ellsurf
