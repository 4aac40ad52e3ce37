#include "irrbase/perm.hpp"

#include <limits>
#include <numeric>

#include "irrbase/error.hpp"

namespace irrbase {

Domain::Domain(std::string kind, std::vector<std::string> labels, DomainPtr parent)
    : kind_(std::move(kind)), labels_(std::move(labels)), parent_(std::move(parent)) {
  if (labels_.size() >= std::numeric_limits<Point>::max())
    throw DomainError("domain too large");
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (!index_.emplace(labels_[i], static_cast<Point>(i)).second)
      throw DomainError("duplicate domain label '" + labels_[i] + "'");
}

DomainPtr Domain::make(std::string kind, std::vector<std::string> labels) {
  return DomainPtr(new Domain(std::move(kind), std::move(labels), nullptr));
}

DomainPtr Domain::natural(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return make("natural", std::move(labels));
}

DomainPtr Domain::pairs(DomainPtr parent) {
  const std::size_t n = parent->size();
  std::vector<std::string> labels;
  labels.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      labels.push_back("{" + parent->label(static_cast<Point>(i)) + "," +
                       parent->label(static_cast<Point>(j)) + "}");
  return DomainPtr(new Domain("pairs", std::move(labels), std::move(parent)));
}

std::optional<Point> Domain::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::pair<Point, Point> Domain::pair_at(Point i) const {
  if (!parent_) throw DomainError("not a pair domain");
  const std::uint64_t n = parent_->size();
  // Row a holds n-1-a pairs.
  std::uint64_t a = 0, start = 0;
  while (start + (n - 1 - a) <= i) {
    start += n - 1 - a;
    ++a;
  }
  return {static_cast<Point>(a), static_cast<Point>(a + 1 + (i - start))};
}

Point Domain::pair_index(Point a, Point b) const {
  if (!parent_) throw DomainError("not a pair domain");
  if (a == b) throw DomainError("a pair needs two distinct points");
  if (a > b) std::swap(a, b);
  const std::uint64_t n = parent_->size();
  if (b >= n) throw DomainError("pair point out of range");
  return static_cast<Point>(a * (2 * n - a - 1) / 2 + (b - a - 1));
}

Permutation::Permutation(DomainPtr domain, std::vector<Point> image)
    : domain_(std::move(domain)), image_(std::move(image)) {
  if (!domain_) throw DomainError("permutation without domain");
  if (image_.size() != domain_->size())
    throw DomainError("permutation length does not match domain size");
  std::vector<bool> seen(image_.size(), false);
  for (auto x : image_) {
    if (x >= image_.size() || seen[x]) throw DomainError("image is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(DomainPtr domain) {
  std::vector<Point> image(domain->size());
  std::iota(image.begin(), image.end(), Point{0});
  return {std::move(domain), std::move(image), Unchecked{}};
}

Permutation Permutation::from_cycles(DomainPtr domain,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> image(domain->size());
  std::iota(image.begin(), image.end(), Point{0});
  std::vector<bool> used(image.size(), false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] >= image.size()) throw DomainError("cycle point out of range");
      if (used[c[k]]) throw DomainError("point repeated in cycles");
      used[c[k]] = true;
      image[c[k]] = c[(k + 1) % c.size()];
    }
  }
  return {std::move(domain), std::move(image)};
}

Permutation Permutation::operator*(const Permutation& q) const {
  return compose(*this, q);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.domain() != q.domain()) throw SpecMismatchError("permutations on different domains");
  std::vector<Point> image(p.degree());
  auto a = p.images();
  auto b = q.images();
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = b[a[i]];
  return Permutation(p.domain(), std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<Point> image(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) image[image_[i]] = static_cast<Point>(i);
  return {domain_, std::move(image), Unchecked{}};
}

Permutation Permutation::pow(long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Permutation r = identity(domain_);
  for (; n; n >>= 1) {
    if (n & 1) r = r * base;
    base = base * base;
  }
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

std::optional<Point> Permutation::smallest_moved() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return static_cast<Point>(i);
  return std::nullopt;
}

std::size_t Permutation::order() const {
  std::size_t ord = 1;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Permutation induced_pair_action(const Permutation& p, const DomainPtr& pairs) {
  if (!pairs || pairs->parent() != p.domain())
    throw SpecMismatchError("pair domain is not derived from the permutation's domain");
  const std::size_t n = p.degree();
  std::vector<Point> image(pairs->size());
  std::size_t k = 0;
  for (Point i = 0; i < n; ++i)
    for (Point j = i + 1; j < n; ++j) image[k++] = pairs->pair_index(p(i), p(j));
  return {pairs, std::move(image), Permutation::Unchecked{}};
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  std::vector<bool> seen(p.degree(), false);
  bool any = false;
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(i) == i) continue;
    os << '(';
    for (Point j = i; !seen[j]; j = p(j)) {
      if (j != i) os << ' ';
      os << j;
      seen[j] = true;
    }
    os << ')';
    any = true;
  }
  if (!any) os << "()";
  return os;
}

}  // namespace irrbase
