#pragma once

#include <cstdint>
#include <vector>

namespace irrbase {

bool is_prime(std::uint64_t n);

/// Prime factors of n with multiplicity, in increasing order. factorize(1) is empty.
std::vector<std::uint64_t> factorize(std::uint64_t n);

/// Distinct prime divisors of n, increasing.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// The first k primes, or the first k odd primes when odd_only is set.
std::vector<std::uint64_t> first_primes(std::size_t k, bool odd_only = false);

/// base^exp, throwing DomainError on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

}  // namespace irrbase
