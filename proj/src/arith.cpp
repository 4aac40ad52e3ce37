#include "irrbase/arith.hpp"

#include <limits>

#include "irrbase/error.hpp"

namespace irrbase {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> factorize(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto r : factorize(n))
    if (out.empty() || out.back() != r) out.push_back(r);
  return out;
}

std::vector<std::uint64_t> first_primes(std::size_t k, bool odd_only) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = odd_only ? 3 : 2; out.size() < k; ++c)
    if (is_prime(c)) out.push_back(c);
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      throw DomainError("integer power overflows 64 bits");
    r *= base;
  }
  return r;
}

}  // namespace irrbase
