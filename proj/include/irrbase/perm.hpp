#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace irrbase {

using Point = std::uint32_t;

class Domain;
using DomainPtr = std::shared_ptr<const Domain>;

/**
 * A finite labelled point set. Points are the indices 0..size()-1; labels are
 * pairwise distinct strings used for reporting and lookup.
 *
 * A pair domain is built from a parent domain and consists of the unordered
 * pairs {i, j}, i < j, in lexicographic order.
 */
class Domain {
 public:
  static DomainPtr make(std::string kind, std::vector<std::string> labels);
  /// Points labelled "0", "1", ..., "n-1".
  static DomainPtr natural(std::size_t n);
  static DomainPtr pairs(DomainPtr parent);

  std::size_t size() const { return labels_.size(); }
  const std::string& kind() const { return kind_; }
  const std::string& label(Point i) const { return labels_.at(i); }
  std::optional<Point> index_of(const std::string& label) const;

  /// Parent of a pair domain, null otherwise.
  const DomainPtr& parent() const { return parent_; }
  bool is_pair_domain() const { return parent_ != nullptr; }
  std::pair<Point, Point> pair_at(Point i) const;
  Point pair_index(Point a, Point b) const;

 private:
  Domain(std::string kind, std::vector<std::string> labels, DomainPtr parent);

  std::string kind_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Point> index_;
  DomainPtr parent_;
};

/**
 * A bijection of a Domain, acting on the right: x^(pq) = (x^p)^q.
 */
class Permutation {
 public:
  /// Throws DomainError unless image is a bijection of the domain.
  Permutation(DomainPtr domain, std::vector<Point> image);

  static Permutation identity(DomainPtr domain);
  /// Product of the given cycles (each a list of points).
  static Permutation from_cycles(DomainPtr domain,
                                 const std::vector<std::vector<Point>>& cycles);

  const DomainPtr& domain() const { return domain_; }
  std::size_t degree() const { return image_.size(); }
  std::span<const Point> images() const { return image_; }

  Point operator()(Point x) const { return image_[x]; }
  Point act(Point x) const { return image_.at(x); }

  /// This permutation followed by q.
  Permutation operator*(const Permutation& q) const;
  Permutation inverse() const;
  Permutation pow(long e) const;
  bool is_identity() const;
  /// Smallest point moved, or nullopt for the identity.
  std::optional<Point> smallest_moved() const;
  std::size_t order() const;

  bool operator==(const Permutation& q) const { return image_ == q.image_; }
  bool operator!=(const Permutation& q) const { return !(*this == q); }
  bool operator<(const Permutation& q) const { return image_ < q.image_; }

 private:
  struct Unchecked {};
  Permutation(DomainPtr domain, std::vector<Point> image, Unchecked)
      : domain_(std::move(domain)), image_(std::move(image)) {}

  DomainPtr domain_;
  std::vector<Point> image_;

  friend class PermGroup;
  friend Permutation induced_pair_action(const Permutation&, const DomainPtr&);
};

inline Point act(const Permutation& p, Point i) { return p.act(i); }
/// p then q; throws SpecMismatchError for different domains.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation invert(const Permutation& p) { return p.inverse(); }

/// {a, b} -> {a^p, b^p} on a pair domain whose parent is p's domain.
Permutation induced_pair_action(const Permutation& p, const DomainPtr& pairs);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace irrbase
