#include <cmath>
#include "irrbase/realize.hpp"

#include <cstdlib>

#include "irrbase/affine.hpp"
#include "irrbase/arith.hpp"
#include "irrbase/suzuki.hpp"

namespace irrbase {

namespace {

std::vector<std::size_t> interval(std::size_t a, std::size_t b) {
  std::vector<std::size_t> v;
  for (std::size_t x = a; x <= b; ++x) v.push_back(x);
  return v;
}

bool squarefree(std::uint64_t n) {
  const auto fs = factorize(n);
  for (std::size_t i = 1; i < fs.size(); ++i)
    if (fs[i] == fs[i - 1]) return false;
  return true;
}

std::uint64_t product(const std::vector<std::uint64_t>& xs) {
  std::uint64_t r = 1;
  for (auto x : xs) {
    if (r > std::numeric_limits<std::uint64_t>::max() / x)
      throw UnsupportedIntervalError("product of primes overflows 64 bits");
    r *= x;
  }
  return r;
}

std::uint64_t choose_f(std::size_t k, bool odd, std::optional<std::uint64_t> explicit_f) {
  if (!explicit_f) return product(first_primes(k, odd));
  const std::uint64_t f = *explicit_f;
  if (f == 0 || !squarefree(f) || pi(f) != k)
    throw InputError("explicit f must be a product of " + std::to_string(k) + " distinct primes");
  if (odd && f % 2 == 0) throw InputError("explicit f must be odd for the Suzuki construction");
  return f;
}

BigInt big_pow(const BigInt& b, std::uint64_t e) {
  BigInt r = 1, x = b;
  for (; e; e >>= 1) {
    if (e & 1) r *= x;
    x *= x;
  }
  return r;
}

void check_spec(const GroupSpec& s) {
  switch (s.family) {
    case Family::kSymmetric:
      if (s.n == 0) throw InputError("symmetric group needs n >= 1");
      if (s.action != "natural") throw InputError("symmetric groups act naturally");
      break;
    case Family::kSuzuki:
      if (s.m == 0) throw InputError("Suzuki groups need m >= 1");
      if (s.f != 2 * std::uint64_t{s.m} + 1 || s.p != 2)
        throw InputError("Suzuki spec needs p = 2 and f = 2m + 1");
      if (s.action != "delta" && s.action != "pairs")
        throw InputError("Suzuki action must be delta or pairs");
      break;
    case Family::kAffine:
      if (s.d == 0 || s.f == 0) throw InputError("affine spec needs d >= 1 and f >= 1");
      if (!is_prime(s.p)) throw InputError("affine spec needs a prime p");
      if (s.action != "vectors") throw InputError("affine groups act on vectors");
      break;
  }
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::kSymmetric: return "symmetric";
    case Family::kSuzuki: return "suzuki";
    case Family::kAffine: return "affine";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "symmetric") return Family::kSymmetric;
  if (s == "suzuki") return Family::kSuzuki;
  if (s == "affine") return Family::kAffine;
  throw InputError("unknown family '" + s + "'");
}

std::size_t pi(std::uint64_t n) {
  if (n == 0) throw DomainError("pi(0) is undefined");
  return factorize(n).size();
}

GroupSpec witness_spec(const IntervalRequest& x, std::optional<std::uint64_t> explicit_f) {
  if (x.a < 2) throw UnsupportedIntervalError("intervals containing 1 (or 0) are not realizable here");
  if (x.b < x.a) throw UnsupportedIntervalError("empty interval");
  GroupSpec s;
  s.expected_lengths = interval(x.a, x.b);
  if (x.a == x.b) {
    if (explicit_f) throw InputError("--explicit-f does not apply to a one-point interval");
    s.family = Family::kSymmetric;
    s.n = static_cast<unsigned>(x.a + 1);
    s.action = "natural";
    return s;
  }
  if (x.a == 2) {
    s.family = Family::kSuzuki;
    s.action = "pairs";
    s.p = 2;
    if (x.b == 3) {
      if (explicit_f) throw InputError("--explicit-f does not apply to {2,3}");
      s.f = 3;
      s.extended = false;
    } else {
      s.f = choose_f(x.b - 3, true, explicit_f);
      s.extended = true;
    }
    s.m = static_cast<unsigned>((s.f - 1) / 2);
    return s;
  }
  s.family = Family::kAffine;
  s.action = "vectors";
  s.d = static_cast<unsigned>(x.a - 1);
  s.p = 2;
  s.f = choose_f(x.b - x.a, false, explicit_f);
  s.extended = true;
  return s;
}

ResourceGuard ResourceGuard::from_env() {
  ResourceGuard g;
  if (const char* v = std::getenv("IRRBASE_MAX_POINTS")) {
    try {
      g.max_points = BigInt(std::string(v));
    } catch (const std::exception&) {
      throw InputError(std::string("IRRBASE_MAX_POINTS is not an integer: ") + v);
    }
  }
  return g;
}

SizeEstimate estimate(const GroupSpec& s) {
  check_spec(s);
  SizeEstimate e;
  switch (s.family) {
    case Family::kSymmetric:
      e.points = s.n;
      if (s.n <= 4096) {
        e.order = 1;
        for (unsigned i = 2; i <= s.n; ++i) e.order *= i;
      } else {
        // Only the magnitude matters to the guard.
        e.order = BigInt(1) << static_cast<unsigned>(std::ceil(std::lgamma(s.n + 1.0) / std::log(2.0)));
      }
      break;
    case Family::kSuzuki: {
      const BigInt q = big_pow(2, s.f);
      const BigInt delta = q * q + 1;
      e.points = s.action == "pairs" ? delta * (delta - 1) / 2 : delta;
      e.order = q * q * delta * (q - 1) * (s.extended ? BigInt(s.f) : BigInt(1));
      break;
    }
    case Family::kAffine: {
      const BigInt q = big_pow(s.p, s.f);
      const BigInt qd = big_pow(q, s.d);
      e.points = qd;
      e.order = qd;
      BigInt qi = 1;
      for (unsigned i = 0; i < s.d; ++i) {
        e.order *= qd - qi;
        qi *= q;
      }
      if (s.extended) e.order *= s.f;
      break;
    }
  }
  return e;
}

SizeEstimate check_guard(const GroupSpec& s, const ResourceGuard& guard) {
  SizeEstimate est = estimate(s);
  const auto bits = est.order <= 1 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(est.order)) + 1;
  if (est.points > guard.max_points || bits > guard.max_order_bits)
    throw GuardError("instantiation refused: " + est.points.str().substr(0, 40) +
                         (est.points.str().size() > 40 ? "..." : "") + " points, order of " +
                         std::to_string(bits) + " bits",
                     est);
  return est;
}

Instance instantiate(const GroupSpec& s, const ResourceGuard& guard) {
  check_guard(s, guard);
  switch (s.family) {
    case Family::kSymmetric: {
      auto dom = Domain::natural(s.n);
      std::vector<Permutation> gens;
      if (s.n >= 2) {
        std::vector<Point> cycle(s.n);
        for (unsigned i = 0; i < s.n; ++i) cycle[i] = i;
        gens.push_back(Permutation::from_cycles(dom, {{0, 1}}));
        gens.push_back(Permutation::from_cycles(dom, {cycle}));
      }
      return {s, dom, PermGroup(dom, std::move(gens))};
    }
    case Family::kSuzuki: {
      auto params = s.modulus ? suzuki::SuzukiParams::make(s.m, *s.modulus)
                              : suzuki::SuzukiParams::make(s.m);
      auto g = suzuki::build_suzuki_group(
          params, s.extended, s.action == "pairs" ? suzuki::Action::kPairs : suzuki::Action::kDelta);
      return {s, g.domain, std::move(g.group)};
    }
    case Family::kAffine: {
      affine::AffineParams params{s.d, s.modulus ? FieldSpec::make(s.p, static_cast<unsigned>(s.f), *s.modulus)
                                                 : FieldSpec::make(s.p, static_cast<unsigned>(s.f))};
      auto g = affine::build_affine_group(params, s.extended);
      return {s, g.space->domain(), std::move(g.group)};
    }
  }
  throw InputError("unknown family");
}

}  // namespace irrbase
