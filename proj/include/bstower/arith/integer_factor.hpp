#ifndef BSTOWER_ARITH_INTEGER_FACTOR_HPP_
#define BSTOWER_ARITH_INTEGER_FACTOR_HPP_

#include "bstower/arith/numeric.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace bstower {

/// Prime factorization of |n| (trial division then Pollard-Brent), n != 0.
std::map<Integer, int> factor_integer(Integer const& n);

bool is_prime(Integer const& n);

/// Primes p <= hi.
std::vector<std::uint64_t> primes_up_to(std::uint64_t hi);

/// If n = p^m for a prime p, returns (p, m); otherwise (0, 0).
std::pair<Integer, int> prime_power(Integer const& n);

}  // namespace bstower

#endif  // BSTOWER_ARITH_INTEGER_FACTOR_HPP_
