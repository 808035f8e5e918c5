#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace wordrel {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

// Ordinary binomial coefficient C(n, k); zero when k > n.
BigInt choose(std::uint64_t n, std::uint64_t k);

}  // namespace wordrel
