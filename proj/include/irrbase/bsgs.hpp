#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "irrbase/perm.hpp"

namespace irrbase {

using BigInt = boost::multiprecision::cpp_int;

/// Orbit of a point with a Schreier vector recording how each point was reached.
struct Orbit {
  static constexpr std::int32_t kNotInOrbit = -1;
  static constexpr std::int32_t kRoot = -2;

  DomainPtr domain;
  Point root = 0;
  std::vector<Point> points;  // breadth-first order, root first
  // tree[x] == k >= 0: x = y^gens[k] for the predecessor y of x.
  std::vector<std::int32_t> tree;

  bool contains(Point x) const { return tree[x] != kNotInOrbit; }
  std::size_t size() const { return points.size(); }
  /// An element of <gens> mapping root to x.
  Permutation transversal(std::span<const Permutation> gens, Point x) const;
};

Orbit orbit(DomainPtr domain, std::span<const Permutation> gens, Point i);

/// Orbit index of every point (orbits numbered by smallest member).
std::vector<std::uint32_t> orbit_ids(std::span<const Permutation> gens, std::size_t degree);

/**
 * A permutation group with a base and strong generating set.
 *
 * Construction runs deterministic Schreier-Sims. Each level of the stabilizer
 * chain stores its basic orbit as a Schreier vector into a shared pool of
 * strong generators; transversal elements are rebuilt on demand.
 */
class PermGroup {
 public:
  /// The group generated by gens, with base starting with base_prefix.
  PermGroup(DomainPtr domain, std::vector<Permutation> gens,
            std::span<const Point> base_prefix = {});

  const DomainPtr& domain() const { return domain_; }
  std::size_t degree() const { return domain_->size(); }
  const std::vector<Permutation>& generators() const { return gens_; }
  const BigInt& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  std::vector<Point> base() const;
  std::vector<std::size_t> fundamental_orbit_lengths() const;
  std::vector<Permutation> strong_generators() const;

  /// True iff g sifts to the identity.
  bool contains(const Permutation& g) const;

  /// Uniformly distributed element.
  Permutation random_element(std::mt19937_64& rng) const;

  /// All elements; throws DomainError when the order exceeds limit.
  std::vector<Permutation> elements(std::size_t limit = 1u << 20) const;

  /**
   * Image of source under a faithful homomorphism into Sym(domain).
   *
   * The chain is filled with images of uniformly random elements of source
   * until its orbit product reaches |source|; reaching it certifies the
   * chain, so the result is exact. Throws IntegrityError if the map is not
   * a faithful homomorphism (no progress, or the order overshoots).
   */
  static PermGroup image_of(const PermGroup& source, DomainPtr domain,
                            const std::function<Permutation(const Permutation&)>& hom);

  /// Same group, with a base starting with prefix.
  PermGroup with_base_prefix(std::span<const Point> prefix) const;

  /// Subgroup fixing every point of pts.
  PermGroup pointwise_stabilizer(std::span<const Point> pts) const;
  PermGroup stabilizer(Point p) const {
    return pointwise_stabilizer(std::span<const Point>(&p, 1));
  }

  /// Orbits of the group on the whole domain (see orbit_ids).
  std::vector<std::uint32_t> orbit_ids() const;
  bool is_transitive() const;

 private:
  using Image = std::vector<Point>;

  struct Level {
    Point base;
    std::vector<std::uint32_t> gens;  // indices into pool_
    std::vector<std::int32_t> tree;
    std::vector<Point> orbit;
  };

  explicit PermGroup(DomainPtr domain) : domain_(std::move(domain)) {}

  void push_level(Point base);
  std::uint32_t add_to_pool(Image g);
  void compute_orbit(Level& level) const;
  /// Strips g through levels from..; returns the level where stripping failed
  /// (levels_.size() if it went through) and the residue.
  std::size_t sift(Image& g, std::size_t from) const;
  Image transversal(const Level& level, Point beta) const;
  Image random_image(std::mt19937_64& rng) const;
  void add_strong_generator(Image h, std::size_t first, std::size_t last);
  void schreier_sims(std::size_t start_level);
  void fill_from(const PermGroup& source,
                 const std::function<Image(Image)>& hom = nullptr);
  BigInt orbit_product() const;
  Permutation wrap(Image g) const;

  DomainPtr domain_;
  std::vector<Permutation> gens_;
  std::vector<Image> pool_;
  std::vector<Image> pool_inv_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

/// Deterministic Schreier-Sims on gens (all on one domain).
PermGroup bsgs(DomainPtr domain, std::vector<Permutation> gens);

inline PermGroup pointwise_stabilizer(const PermGroup& g, std::span<const Point> pts) {
  return g.pointwise_stabilizer(pts);
}

/// Points of the finest block containing a and b (sorted).
std::vector<Point> minimal_block(const PermGroup& g, Point a, Point b);

/// Transitive with no block system other than the trivial ones.
bool is_primitive(const PermGroup& g);

}  // namespace irrbase
