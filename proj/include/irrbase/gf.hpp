#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <vector>

namespace irrbase {

class FieldElement;
class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/**
 * GF(p^f) as GF(p)[x]/(modulus).
 *
 * Elements are identified with their integer encoding sum c_i p^i, where c_i
 * is the coefficient of x^i in the reduced representative. The encoding is
 * the canonical form: equal elements have equal codes.
 */
class FieldSpec {
 public:
  /// Field with the default modulus: the lexicographically smallest monic
  /// irreducible of degree f, comparing coefficient sequences from the
  /// constant term upwards.
  static FieldPtr make(std::uint32_t p, unsigned f);

  /// Field with an explicit modulus (coefficients low degree first, length
  /// f+1, monic). Throws DomainError unless p is prime and the modulus is
  /// monic irreducible of degree f.
  static FieldPtr make(std::uint32_t p, unsigned f,
                       std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return f_; }
  std::uint64_t size() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool operator==(const FieldSpec& other) const {
    return p_ == other.p_ && f_ == other.f_ && modulus_ == other.modulus_;
  }

  // Arithmetic on encodings. Inputs must be < size().
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;

  std::vector<std::uint32_t> coefficients(std::uint64_t code) const;
  std::uint64_t encode(const std::vector<std::uint32_t>& coeffs) const;

 private:
  FieldSpec(std::uint32_t p, unsigned f, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  unsigned f_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::uint64_t modulus_bits_ = 0;  // p == 2 only: modulus without x^f
};

/// True iff the monic polynomial (low degree first) is irreducible over GF(p).
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

class FieldElement {
 public:
  FieldElement(FieldPtr field, std::uint64_t code);

  static FieldElement zero(FieldPtr field) { return {std::move(field), 0}; }
  static FieldElement one(FieldPtr field) { return {std::move(field), 1}; }
  /// The residue class of x.
  static FieldElement generator_x(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  std::uint64_t code() const { return code_; }
  std::vector<std::uint32_t> coefficients() const {
    return field_->coefficients(code_);
  }
  bool is_zero() const { return code_ == 0; }

  FieldElement operator+(const FieldElement& b) const;
  FieldElement operator-(const FieldElement& b) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& b) const;
  FieldElement operator/(const FieldElement& b) const;
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  /// Multiplicative order; throws DomainError for zero.
  std::uint64_t multiplicative_order() const;

  bool operator==(const FieldElement& b) const;
  bool operator!=(const FieldElement& b) const { return !(*this == b); }

 private:
  void check_same_field(const FieldElement& b) const;

  FieldPtr field_;
  std::uint64_t code_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// x^(p^k). Negative or large k are reduced mod f.
FieldElement frobenius_pow(const FieldElement& x, long k);

/// The Suzuki automorphism x -> x^(2^(m+1)) of GF(2^(2m+1)); its square is
/// x -> x^2. Throws DomainError unless p = 2 and f is odd.
FieldElement suzuki_sigma(const FieldElement& x);

/// Primitive element of the subfield of order p^k: among elements of
/// multiplicative order p^k - 1, the one with the smallest encoding.
FieldElement subfield_generator(const FieldPtr& field, unsigned k);

/// A primitive element of the whole field.
inline FieldElement primitive_element(const FieldPtr& field) {
  return subfield_generator(field, field->degree());
}

/// x -> x^(p^k), 0 <= k < f.
class FieldAutomorphism {
 public:
  FieldAutomorphism(FieldPtr field, long k);

  unsigned exponent() const { return k_; }
  FieldElement operator()(const FieldElement& x) const;
  FieldAutomorphism then(const FieldAutomorphism& other) const;
  FieldAutomorphism inverse() const;
  /// f / gcd(k, f).
  unsigned order() const;
  bool operator==(const FieldAutomorphism& o) const {
    return *field_ == *o.field_ && k_ == o.k_;
  }

 private:
  FieldPtr field_;
  unsigned k_;
};

}  // namespace irrbase
