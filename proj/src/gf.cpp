#include "irrbase/gf.hpp"

#include <numeric>
#include <string>

#include "irrbase/arith.hpp"
#include "irrbase/error.hpp"

namespace irrbase {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2)
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + (p - c) * m[i] % p) % p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  for (; e; e >>= 1) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod m
Poly frobenius_of_x(std::uint32_t p, unsigned k, const Poly& m) {
  Poly r = poly_mod(Poly{0, 1}, m, p);
  for (unsigned i = 0; i < k; ++i) r = poly_powmod(r, p, m, p);
  return r;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

}  // namespace

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  Poly m = poly;
  trim(m);
  if (m.size() < 2 || m.back() != 1) return false;
  const unsigned f = static_cast<unsigned>(m.size() - 1);
  if (f == 1) return true;
  const Poly x{0, 1};
  if (poly_sub(frobenius_of_x(p, f, m), x, p) != Poly{}) return false;
  for (auto l : prime_divisors(f)) {
    Poly h = poly_sub(frobenius_of_x(p, static_cast<unsigned>(f / l), m), x, p);
    Poly g = poly_gcd(m, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t p, unsigned f, std::vector<std::uint32_t> modulus)
    : p_(p), f_(f), q_(checked_pow(p, f)), modulus_(std::move(modulus)) {
  if (p_ == 2)
    for (unsigned i = 0; i < f_; ++i)
      if (modulus_[i]) modulus_bits_ |= std::uint64_t{1} << i;
}

FieldPtr FieldSpec::make(std::uint32_t p, unsigned f) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (f == 0) throw DomainError("field degree must be at least 1");
  if (checked_pow(p, f) > (std::uint64_t{1} << 40))
    throw DomainError("field too large");
  // Enumerate (c_0, ..., c_{f-1}) lexicographically, c_0 most significant.
  const std::uint64_t count = checked_pow(p, f);
  for (std::uint64_t n = 0; n < count; ++n) {
    Poly m(f + 1, 0);
    std::uint64_t t = n;
    for (unsigned i = f; i-- > 0;) {
      m[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    m[f] = 1;
    if (f > 1 && m[0] == 0) continue;
    if (is_irreducible(p, m)) return FieldPtr(new FieldSpec(p, f, std::move(m)));
  }
  throw IntegrityError("no irreducible polynomial found");
}

FieldPtr FieldSpec::make(std::uint32_t p, unsigned f, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (f == 0) throw DomainError("field degree must be at least 1");
  if (modulus.size() != f + 1 || modulus.back() != 1)
    throw DomainError("modulus must be monic of degree " + std::to_string(f));
  for (auto c : modulus)
    if (c >= p) throw DomainError("modulus coefficient out of range");
  if (!is_irreducible(p, modulus)) throw DomainError("modulus is reducible");
  if (checked_pow(p, f) > (std::uint64_t{1} << 40))
    throw DomainError("field too large");
  return FieldPtr(new FieldSpec(p, f, std::move(modulus)));
}

std::vector<std::uint32_t> FieldSpec::coefficients(std::uint64_t code) const {
  std::vector<std::uint32_t> c(f_, 0);
  for (unsigned i = 0; i < f_; ++i) {
    c[i] = static_cast<std::uint32_t>(code % p_);
    code /= p_;
  }
  return c;
}

std::uint64_t FieldSpec::encode(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() > f_) throw DomainError("too many coefficients for field element");
  std::uint64_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw DomainError("coefficient out of range");
    code = code * p_ + coeffs[i];
  }
  return code;
}

std::uint64_t FieldSpec::add(std::uint64_t a, std::uint64_t b) const {
  if (p_ == 2) return a ^ b;
  std::uint64_t r = 0, scale = 1;
  for (unsigned i = 0; i < f_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

std::uint64_t FieldSpec::neg(std::uint64_t a) const {
  if (p_ == 2) return a;
  std::uint64_t r = 0, scale = 1;
  for (unsigned i = 0; i < f_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

std::uint64_t FieldSpec::mul(std::uint64_t a, std::uint64_t b) const {
  if (p_ == 2) {
    std::uint64_t r = 0;
    const std::uint64_t top = std::uint64_t{1} << f_;
    for (; b; b >>= 1) {
      if (b & 1) r ^= a;
      a <<= 1;
      if (a & top) a ^= top | modulus_bits_;
    }
    return r;
  }
  return encode(poly_mulmod(coefficients(a), coefficients(b), modulus_, p_));
}

std::uint64_t FieldSpec::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  for (; e; e >>= 1) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
  }
  return r;
}

std::uint64_t FieldSpec::inv(std::uint64_t a) const {
  if (a == 0) throw DivisionByZeroError("inverse of zero");
  return pow(a, q_ - 2);
}

FieldElement::FieldElement(FieldPtr field, std::uint64_t code)
    : field_(std::move(field)), code_(code) {
  if (!field_) throw DomainError("field element without field");
  if (code_ >= field_->size()) throw DomainError("field element code out of range");
}

FieldElement FieldElement::generator_x(FieldPtr field) {
  auto code = field->encode(poly_mod(Poly{0, 1}, field->modulus(), field->characteristic()));
  return {std::move(field), code};
}

void FieldElement::check_same_field(const FieldElement& b) const {
  if (field_ != b.field_ && !(*field_ == *b.field_))
    throw SpecMismatchError("field elements from different fields");
}

FieldElement FieldElement::operator+(const FieldElement& b) const {
  check_same_field(b);
  return {field_, field_->add(code_, b.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& b) const {
  check_same_field(b);
  return {field_, field_->add(code_, field_->neg(b.code_))};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }

FieldElement FieldElement::operator*(const FieldElement& b) const {
  check_same_field(b);
  return {field_, field_->mul(code_, b.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& b) const {
  check_same_field(b);
  return {field_, field_->mul(code_, field_->inv(b.code_))};
}

FieldElement FieldElement::inverse() const { return {field_, field_->inv(code_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }

std::uint64_t FieldElement::multiplicative_order() const {
  if (is_zero()) throw DomainError("zero has no multiplicative order");
  std::uint64_t n = field_->size() - 1;
  for (auto r : prime_divisors(n))
    while (n % r == 0 && field_->pow(code_, n / r) == 1) n /= r;
  return n;
}

bool FieldElement::operator==(const FieldElement& b) const {
  check_same_field(b);
  return code_ == b.code_;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.code(); }

FieldElement frobenius_pow(const FieldElement& x, long k) {
  const long f = x.field()->degree();
  long r = ((k % f) + f) % f;
  FieldElement y = x;
  for (long i = 0; i < r; ++i) y = y.pow(x.field()->characteristic());
  return y;
}

FieldElement suzuki_sigma(const FieldElement& x) {
  const auto& F = *x.field();
  if (F.characteristic() != 2 || F.degree() % 2 == 0)
    throw DomainError("Suzuki automorphism needs GF(2^f) with f odd");
  return frobenius_pow(x, (F.degree() + 1) / 2);
}

FieldElement subfield_generator(const FieldPtr& field, unsigned k) {
  if (k == 0 || field->degree() % k != 0)
    throw DomainError("subfield degree " + std::to_string(k) + " does not divide " +
                      std::to_string(field->degree()));
  const std::uint64_t target = checked_pow(field->characteristic(), k) - 1;
  for (std::uint64_t c = 1; c < field->size(); ++c) {
    FieldElement x(field, c);
    if (x.pow(target).code() == 1 && x.multiplicative_order() == target) return x;
  }
  throw IntegrityError("subfield has no primitive element");
}

FieldAutomorphism::FieldAutomorphism(FieldPtr field, long k) : field_(std::move(field)) {
  const long f = field_->degree();
  k_ = static_cast<unsigned>(((k % f) + f) % f);
}

FieldElement FieldAutomorphism::operator()(const FieldElement& x) const {
  if (!(*x.field() == *field_)) throw SpecMismatchError("automorphism applied to foreign element");
  return frobenius_pow(x, k_);
}

FieldAutomorphism FieldAutomorphism::then(const FieldAutomorphism& other) const {
  if (!(*field_ == *other.field_)) throw SpecMismatchError("automorphisms of different fields");
  return {field_, static_cast<long>(k_) + other.k_};
}

FieldAutomorphism FieldAutomorphism::inverse() const { return {field_, -static_cast<long>(k_)}; }

unsigned FieldAutomorphism::order() const {
  return field_->degree() / std::gcd(k_ == 0 ? field_->degree() : k_, field_->degree());
}

}  // namespace irrbase
