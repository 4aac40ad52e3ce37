#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "irrbase/bsgs.hpp"
#include "irrbase/error.hpp"

namespace irrbase {

enum class Family { kSymmetric, kSuzuki, kAffine };

/// Serializable description of a witness group.
struct GroupSpec {
  Family family = Family::kSymmetric;
  unsigned n = 0;  // symmetric
  unsigned m = 0;  // suzuki: f = 2m + 1
  unsigned d = 0;  // affine
  std::uint32_t p = 2;
  std::uint64_t f = 1;
  bool extended = false;
  std::string action = "natural";  // natural | delta | pairs | vectors
  std::optional<std::vector<std::uint32_t>> modulus;
  std::vector<std::size_t> expected_lengths;
};

std::string family_name(Family f);
Family family_from_name(const std::string& s);

/// The interval {a, ..., b}.
struct IntervalRequest {
  std::size_t a = 2;
  std::size_t b = 2;
};

/// Number of prime divisors of n counted with multiplicity; DomainError for 0.
std::size_t pi(std::uint64_t n);

class UnsupportedIntervalError : public Error {
 public:
  using Error::Error;
};

/**
 * The witness group for X = {a..b}:
 *   a = b          Sym(a+1) on a+1 points;
 *   a = 2, b = 3   Sz(8) on 2-subsets of the ovoid;
 *   a = 2, b > 3   Sz(2^f) extended by field automorphisms on 2-subsets, f the
 *                  product of the first b-3 odd primes;
 *   b > a >= 3     AGammaL_{a-1}(2^f) on vectors, f the product of the first
 *                  b-a primes.
 * explicit_f replaces the product of primes; it must be squarefree with the
 * right number of prime factors (odd in the Suzuki case).
 */
GroupSpec witness_spec(const IntervalRequest& x, std::optional<std::uint64_t> explicit_f = {});

struct ResourceGuard {
  BigInt max_points = 1000000;
  unsigned max_order_bits = 128;

  /// Defaults, with max_points taken from IRRBASE_MAX_POINTS when set.
  static ResourceGuard from_env();
};

struct SizeEstimate {
  BigInt points;
  BigInt order;
};

SizeEstimate estimate(const GroupSpec& spec);

class GuardError : public Error {
 public:
  GuardError(const std::string& what, SizeEstimate est) : Error(what), estimate_(std::move(est)) {}
  const SizeEstimate& estimate() const { return estimate_; }

 private:
  SizeEstimate estimate_;
};

/// The estimate, or GuardError when it exceeds the guard.
SizeEstimate check_guard(const GroupSpec& spec, const ResourceGuard& guard);

struct Instance {
  GroupSpec spec;
  DomainPtr domain;
  PermGroup group;
};

/// Builds the group; GuardError when the estimate exceeds the guard,
/// InputError when the spec is inconsistent.
Instance instantiate(const GroupSpec& spec, const ResourceGuard& guard = ResourceGuard::from_env());

}  // namespace irrbase
