#include "irrbase/chains.hpp"

#include <algorithm>
#include <optional>

#include "irrbase/error.hpp"

namespace irrbase {

namespace {

// Groups with |H| * degree at most this many entries are searched through an
// explicit element table instead of stabilizer chains.
constexpr std::size_t kExplicitBudget = std::size_t{1} << 22;

bool is_prime_order(const BigInt& n) {
  if (n < 2) return false;
  if (n > BigInt(std::numeric_limits<std::uint64_t>::max())) return false;
  const auto v = n.convert_to<std::uint64_t>();
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::size_t floor_log2(const BigInt& n) {
  return n <= 1 ? 0 : static_cast<std::size_t>(boost::multiprecision::msb(n));
}

/// A node of the search: the pointwise stabilizer of the points chosen so far.
class Node {
 public:
  static Node of(const PermGroup& g) {
    Node node;
    node.order_ = g.order();
    node.n_ = g.degree();
    if (g.order() * g.degree() <= kExplicitBudget) {
      const auto elems = g.elements(kExplicitBudget);
      node.count_ = elems.size();
      node.rows_.reserve(node.count_ * node.n_);
      for (const auto& e : elems) node.rows_.insert(node.rows_.end(), e.images().begin(), e.images().end());
    } else {
      node.group_ = g;
    }
    node.find_orbits();
    return node;
  }

  const BigInt& order() const { return order_; }
  bool trivial() const { return order_ == 1; }
  /// Smallest point of each orbit of length > 1, increasing.
  const std::vector<Point>& reps() const { return reps_; }
  std::size_t max_orbit() const { return max_orbit_; }

  Node child(Point p) const {
    if (group_) return of(group_->stabilizer(p));
    Node node;
    node.n_ = n_;
    for (std::size_t r = 0; r < count_; ++r) {
      const Point* row = &rows_[r * n_];
      if (row[p] != p) continue;
      node.rows_.insert(node.rows_.end(), row, row + n_);
      ++node.count_;
    }
    node.order_ = node.count_;
    node.find_orbits();
    return node;
  }

 private:
  void find_orbits() {
    std::vector<std::uint32_t> ids;
    if (group_) {
      ids = group_->orbit_ids();
    } else {
      constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
      ids.assign(n_, kUnset);
      for (Point x = 0; x < n_; ++x) {
        if (ids[x] != kUnset) continue;
        for (std::size_t r = 0; r < count_; ++r) ids[rows_[r * n_ + x]] = x;
      }
    }
    std::vector<std::size_t> size(n_, 0);
    for (auto id : ids) ++size[id];
    max_orbit_ = 1;
    for (Point x = 0; x < n_; ++x) {
      if (ids[x] == x && size[x] > 1) reps_.push_back(x);
      max_orbit_ = std::max(max_orbit_, size[x]);
    }
  }

  BigInt order_ = 1;
  std::size_t n_ = 0;
  std::optional<PermGroup> group_;
  std::vector<Point> rows_;
  std::size_t count_ = 0;
  std::vector<Point> reps_;
  std::size_t max_orbit_ = 1;
};

using Suffixes = std::map<std::size_t, std::vector<Point>>;

// Remaining lengths reachable from node, each with the first suffix found.
Suffixes all_lengths(const Node& node) {
  if (node.trivial()) return {{0, {}}};
  if (is_prime_order(node.order())) return {{1, {node.reps().front()}}};
  Suffixes out;
  for (Point p : node.reps()) {
    for (auto& [len, suffix] : all_lengths(node.child(p))) {
      if (out.count(len + 1)) continue;
      std::vector<Point> s{p};
      s.insert(s.end(), suffix.begin(), suffix.end());
      out.emplace(len + 1, std::move(s));
    }
  }
  return out;
}

std::pair<std::size_t, std::vector<Point>> longest(const Node& node) {
  if (node.trivial()) return {0, {}};
  if (is_prime_order(node.order())) return {1, {node.reps().front()}};
  std::size_t best = 0;
  std::vector<Point> best_suffix;
  for (Point p : node.reps()) {
    const Node c = node.child(p);
    // Every strict step at least halves the order.
    if (1 + floor_log2(c.order()) <= best) continue;
    auto [len, suffix] = longest(c);
    if (len + 1 > best) {
      best = len + 1;
      best_suffix = {p};
      best_suffix.insert(best_suffix.end(), suffix.begin(), suffix.end());
    }
  }
  return {best, best_suffix};
}

// A base of at most depth further points, if one exists.
std::optional<std::vector<Point>> shortest_within(const Node& node, std::size_t depth) {
  if (node.trivial()) return std::vector<Point>{};
  if (depth == 0) return std::nullopt;
  BigInt reach = 1;
  for (std::size_t i = 0; i < depth; ++i) reach *= node.max_orbit();
  // Each step divides the order by at most the largest orbit length.
  if (node.order() > reach) return std::nullopt;
  for (Point p : node.reps()) {
    if (auto suffix = shortest_within(node.child(p), depth - 1)) {
      suffix->insert(suffix->begin(), p);
      return suffix;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::string> BaseSequence::labels() const {
  std::vector<std::string> out;
  for (Point p : points) out.push_back(domain->label(p));
  return out;
}

bool ChainReport::all_strict() const {
  return std::all_of(strict.begin(), strict.end(), [](bool b) { return b; });
}

ChainReport chain_report(const PermGroup& g, const BaseSequence& seq) {
  if (seq.domain && seq.domain != g.domain())
    throw SpecMismatchError("base sequence lives on another domain");
  for (Point p : seq.points)
    if (p >= g.degree()) throw DomainError("base point out of range");
  ChainReport rep;
  const PermGroup r = g.with_base_prefix(seq.points);
  const auto lengths = r.fundamental_orbit_lengths();
  // |G_{w1..wi}| is the product of the basic orbit lengths from level i on.
  std::vector<BigInt> tail(lengths.size() + 1, 1);
  for (std::size_t L = lengths.size(); L-- > 0;) tail[L] = tail[L + 1] * lengths[L];
  for (std::size_t i = 0; i <= seq.size(); ++i) rep.orders.push_back(tail[i]);
  for (std::size_t i = 0; i < seq.size(); ++i) rep.strict.push_back(rep.orders[i] > rep.orders[i + 1]);
  rep.terminal_trivial = rep.orders.back() == 1;
  return rep;
}

bool is_irredundant_base(const PermGroup& g, const BaseSequence& seq) {
  const ChainReport rep = chain_report(g, seq);
  return rep.terminal_trivial && rep.all_strict();
}

WitnessedLength min_base_length(const PermGroup& g) {
  const Node root = Node::of(g);
  for (std::size_t depth = 0;; ++depth)
    if (auto suffix = shortest_within(root, depth))
      return {depth, BaseSequence{g.domain(), std::move(*suffix)}};
}

WitnessedLength max_irredundant_length(const PermGroup& g) {
  auto [len, suffix] = longest(Node::of(g));
  return {len, BaseSequence{g.domain(), std::move(suffix)}};
}

IntervalReport achievable_lengths(const PermGroup& g) {
  IntervalReport rep;
  for (auto& [len, suffix] : all_lengths(Node::of(g))) {
    rep.lengths.push_back(len);
    rep.witnesses.emplace(len, BaseSequence{g.domain(), std::move(suffix)});
  }
  rep.min_length = rep.lengths.front();
  rep.max_length = rep.lengths.back();
  rep.is_interval = rep.max_length - rep.min_length + 1 == rep.lengths.size();
  return rep;
}

}  // namespace irrbase
