#pragma once

// Brute-force reference computations. They share no code with the
// Schreier-Sims and orbit-representative search paths they are used to check.

#include <cstdint>
#include <set>
#include <vector>

#include "irrbase/perm.hpp"

namespace irrbase::oracle {

using Element = std::vector<Point>;

/// Every element of <gens>, by closing {identity} under right multiplication
/// by generators. Throws DomainError if more than limit elements appear.
std::vector<Element> closure(std::size_t degree, const std::vector<Permutation>& gens,
                             std::size_t limit = 200000);

/// Elements fixing every point of pts.
std::vector<Element> stabilizer(const std::vector<Element>& elems, const std::vector<Point>& pts);

/// Irredundant base lengths by trying every point at every step.
std::set<std::size_t> exhaustive_lengths(const std::vector<Element>& elems, std::size_t degree);

/// Number of orbits of the group on ordered pairs of distinct points and the
/// size of the orbit of (a, b).
struct PairOrbitInfo {
  std::size_t orbit_count = 0;
  std::size_t orbit_size = 0;
};
PairOrbitInfo ordered_pair_orbits(std::size_t degree, const std::vector<Permutation>& gens,
                                  Point a, Point b);

}  // namespace irrbase::oracle
