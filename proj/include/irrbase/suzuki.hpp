#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "irrbase/bsgs.hpp"
#include "irrbase/chains.hpp"
#include "irrbase/gf.hpp"

namespace irrbase::suzuki {

/// q = 2^f with f = 2m + 1.
struct SuzukiParams {
  unsigned m = 1;
  FieldPtr field;

  /// Throws DomainError for m = 0.
  static SuzukiParams make(unsigned m);
  static SuzukiParams make(unsigned m, std::vector<std::uint32_t> modulus);

  unsigned f() const { return 2 * m + 1; }
  std::uint64_t q() const { return field->size(); }
};

using Coords = std::array<FieldElement, 3>;

/// A point of the ovoid: infinity, or a triple (eta1, eta2, eta3).
struct OvoidPoint {
  std::optional<Coords> coords;

  static OvoidPoint infinity() { return {}; }
  bool is_infinity() const { return !coords.has_value(); }
};

/// x^(sigma+2) = sigma(x) x^2.
FieldElement sigma_plus_two(const FieldElement& x);
/// eta3 = eta1 eta2 + eta1^(sigma+2) + eta2^sigma.
bool on_ovoid(const Coords& c);

/**
 * The Suzuki ovoid as an indexed domain. Index 0 is infinity; the finite point
 * over (eta1, eta2) has index 1 + code(eta1) + q code(eta2).
 */
class Ovoid {
 public:
  explicit Ovoid(SuzukiParams params);

  const SuzukiParams& params() const { return params_; }
  const DomainPtr& domain() const { return domain_; }
  std::size_t size() const { return domain_->size(); }

  OvoidPoint point(Point i) const;
  /// Throws DomainError if the point is not on the ovoid.
  Point index_of(const OvoidPoint& pt) const;
  Point index_of(std::uint64_t e1, std::uint64_t e2, std::uint64_t e3) const;
  FieldElement element(std::uint64_t code) const { return {params_.field, code}; }

  /// Permutation of the ovoid induced by a point map; every image is checked
  /// to lie on the ovoid and the map to be bijective (IntegrityError).
  template <class Map>
  Permutation permutation(Map&& map) const;

 private:
  Permutation checked(const std::vector<OvoidPoint>& images) const;

  SuzukiParams params_;
  DomainPtr domain_;
};

using OvoidPtr = std::shared_ptr<const Ovoid>;

OvoidPtr build_ovoid(const SuzukiParams& params);

/// Translation t_{alpha,beta}; fixes infinity.
Permutation make_t(const Ovoid& ovoid, const FieldElement& alpha, const FieldElement& beta);
/// Torus element n_gamma; gamma != 0 (DomainError otherwise).
Permutation make_n(const Ovoid& ovoid, const FieldElement& gamma);
/// The involution w swapping infinity and (0,0,0).
Permutation make_w(const Ovoid& ovoid);
/// Coordinatewise x -> x^(2^k), 0 <= k < f.
Permutation make_field_aut_perm(const Ovoid& ovoid, unsigned k);

enum class Action { kDelta, kPairs };

struct SuzukiGroup {
  OvoidPtr ovoid;
  DomainPtr domain;  // the ovoid domain, or its pair domain
  Action action = Action::kDelta;
  bool extended = false;
  PermGroup group;
};

/// Generators t_{1,0}, t_{0,1}, n_{gamma0} (gamma0 primitive), w.
std::vector<Permutation> sz_generators(const Ovoid& ovoid);

/// Every t_{alpha,beta}, n_gamma and w.
std::vector<Permutation> sz_full_generator_family(const Ovoid& ovoid);

/// Sz(q) (or Sz(q) extended by field automorphisms) on the ovoid or on its
/// 2-subsets.
SuzukiGroup build_suzuki_group(const SuzukiParams& params, bool extended, Action action);

/// Point of the pair domain for {a, b}.
Point pair_point(const SuzukiGroup& g, const OvoidPoint& a, const OvoidPoint& b);

/**
 * The explicit irredundant chain on 2-subsets:
 *   {(0,0,0),inf}, {(1,0,1),(0,1,1)}, {(0,0,0),(1,1,1)},
 * followed, for the extended group, by {(z_i,0,z_i^(sigma+2)),inf} where z_i
 * generates the subfield of degree p_1...p_i and f = p_1...p_r increasingly.
 */
BaseSequence paper_witness_chain(const SuzukiGroup& g);

template <class Map>
Permutation Ovoid::permutation(Map&& map) const {
  std::vector<OvoidPoint> images(size());
  for (Point i = 0; i < size(); ++i) images[i] = map(point(i));
  return checked(images);
}

}  // namespace irrbase::suzuki
