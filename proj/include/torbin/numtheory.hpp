#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace torbin {

// Exact nonnegative integer of unbounded magnitude. Orbit counts pass
// 2^64 well inside the supported dimension range, so every countable
// quantity is carried as a Natural end to end.
using Natural = boost::multiprecision::cpp_int;

/// Euler's totient: |{k in 1..n : gcd(k, n) = 1}|. Rejects n = 0.
std::uint64_t euler_phi(std::uint64_t n);

/// All divisors of n in strictly increasing order, 1 and n included.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Least common multiple of two positive integers.
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

/// Exact 2^exponent.
Natural pow2(std::uint64_t exponent);

}  // namespace torbin
