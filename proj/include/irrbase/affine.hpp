#pragma once

#include <memory>
#include <vector>

#include "irrbase/bsgs.hpp"
#include "irrbase/chains.hpp"
#include "irrbase/gf.hpp"

namespace irrbase::affine {

struct AffineParams {
  unsigned d = 1;
  FieldPtr field;

  /// Throws DomainError for d = 0.
  static AffineParams make(unsigned d, std::uint32_t p, unsigned f);

  std::uint64_t q() const { return field->size(); }
};

using Vector = std::vector<FieldElement>;

/**
 * F_q^d as an indexed domain: the vector (v_1, ..., v_d) has index
 * sum code(v_i) q^(i-1), so index 0 is the zero vector.
 */
class VectorSpace {
 public:
  explicit VectorSpace(AffineParams params);

  const AffineParams& params() const { return params_; }
  const DomainPtr& domain() const { return domain_; }
  std::size_t size() const { return domain_->size(); }

  Vector vector(Point i) const;
  Point index_of(const Vector& v) const;
  /// Standard basis vector e_i, 1 <= i <= d.
  Vector unit(unsigned i) const;
  Vector scaled(const FieldElement& c, const Vector& v) const;
  Vector sum(const Vector& a, const Vector& b) const;

  template <class Map>
  Permutation permutation(Map&& map) const {
    std::vector<Point> img(size());
    for (Point i = 0; i < size(); ++i) img[i] = index_of(map(vector(i)));
    return Permutation(domain_, std::move(img));
  }

 private:
  AffineParams params_;
  DomainPtr domain_;
};

using SpacePtr = std::shared_ptr<const VectorSpace>;

/// Throws DomainError when q^d exceeds max_points.
SpacePtr build_vector_domain(const AffineParams& params, std::size_t max_points = 1u << 22);

struct AffineGroup {
  SpacePtr space;
  bool extended = false;
  PermGroup group;
};

/// q^d |GL_d(q)|, times f when extended.
BigInt affine_group_order(unsigned d, std::uint64_t q, unsigned f, bool extended);

/// Generators of AGL_d(q) (or AGammaL_d(q)) acting on vectors: translations by
/// e_1..e_d and mu e_1; diag(mu,1,..,1); the transvection e_2 -> e_1 + e_2;
/// the coordinate cycle; and x -> x^p coordinatewise when extended.
std::vector<Permutation> affine_generators(const VectorSpace& space, bool extended);

AffineGroup build_affine_group(const AffineParams& params, bool extended);

/// (0, e_1, ..., e_{d-1}, mu e_{d-1} + e_d); (0, mu) when d = 1.
BaseSequence paper_base_min(const VectorSpace& space);

/// (0, e_1, ..., e_d, z_1 e_1, ..., z_r e_1), z_i generating the subfield of
/// degree p_1...p_i for f = p_1...p_r (increasing primes).
BaseSequence paper_base_max(const VectorSpace& space);

}  // namespace irrbase::affine
