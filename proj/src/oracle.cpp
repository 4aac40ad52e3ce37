#include "irrbase/oracle.hpp"

#include <numeric>
#include <unordered_set>

#include "irrbase/error.hpp"

namespace irrbase::oracle {

namespace {

struct ElementHash {
  std::size_t operator()(const Element& e) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : e) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

void collect(const std::vector<Element>& elems, std::size_t degree, std::size_t depth,
             std::set<std::size_t>& out) {
  if (elems.size() == 1) {
    out.insert(depth);
    return;
  }
  for (Point p = 0; p < degree; ++p) {
    std::vector<Element> next;
    for (const auto& e : elems)
      if (e[p] == p) next.push_back(e);
    if (next.size() < elems.size()) collect(next, degree, depth + 1, out);
  }
}

}  // namespace

std::vector<Element> closure(std::size_t degree, const std::vector<Permutation>& gens,
                             std::size_t limit) {
  Element id(degree);
  std::iota(id.begin(), id.end(), Point{0});
  std::unordered_set<Element, ElementHash> seen{id};
  std::vector<Element> all{id};
  for (std::size_t h = 0; h < all.size(); ++h) {
    for (const auto& g : gens) {
      Element y(degree);
      for (std::size_t i = 0; i < degree; ++i) y[i] = g(all[h][i]);
      if (seen.insert(y).second) {
        all.push_back(std::move(y));
        if (all.size() > limit) throw DomainError("closure exceeds element limit");
      }
    }
  }
  return all;
}

std::vector<Element> stabilizer(const std::vector<Element>& elems, const std::vector<Point>& pts) {
  std::vector<Element> out;
  for (const auto& e : elems) {
    bool fixes = true;
    for (Point p : pts) fixes = fixes && e[p] == p;
    if (fixes) out.push_back(e);
  }
  return out;
}

std::set<std::size_t> exhaustive_lengths(const std::vector<Element>& elems, std::size_t degree) {
  std::set<std::size_t> out;
  collect(elems, degree, 0, out);
  return out;
}

PairOrbitInfo ordered_pair_orbits(std::size_t degree, const std::vector<Permutation>& gens,
                                  Point a, Point b) {
  const std::size_t n = degree;
  std::vector<std::int64_t> id(n * n, -1);
  PairOrbitInfo info;
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < n * n; ++start) {
    if (start / n == start % n || id[start] >= 0) continue;
    const auto orbit = static_cast<std::int64_t>(info.orbit_count++);
    id[start] = orbit;
    queue.assign(1, start);
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (const auto& g : gens) {
        const std::size_t y = g(static_cast<Point>(queue[h] / n)) * n + g(static_cast<Point>(queue[h] % n));
        if (id[y] < 0) {
          id[y] = orbit;
          queue.push_back(y);
        }
      }
    if (id[a * n + b] == orbit) info.orbit_size = queue.size();
  }
  return info;
}

}  // namespace irrbase::oracle
