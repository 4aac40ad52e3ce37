#pragma once

#include <map>
#include <string>
#include <vector>

#include "irrbase/bsgs.hpp"

namespace irrbase {

/// An ordered sequence of domain points (duplicates allowed).
struct BaseSequence {
  DomainPtr domain;
  std::vector<Point> points;

  std::size_t size() const { return points.size(); }
  std::vector<std::string> labels() const;
};

/// Orders of G, G_{w1}, G_{w1,w2}, ... along a point sequence.
struct ChainReport {
  std::vector<BigInt> orders;
  std::vector<bool> strict;  // strict[i]: orders[i] > orders[i+1]
  bool terminal_trivial = false;

  bool all_strict() const;
};

/// b(G), I(G) and the full set of irredundant base lengths, with one witness
/// per length.
struct IntervalReport {
  std::size_t min_length = 0;
  std::size_t max_length = 0;
  std::vector<std::size_t> lengths;  // increasing
  bool is_interval = true;
  std::map<std::size_t, BaseSequence> witnesses;
};

struct WitnessedLength {
  std::size_t length = 0;
  BaseSequence witness;
};

ChainReport chain_report(const PermGroup& g, const BaseSequence& seq);

bool is_irredundant_base(const PermGroup& g, const BaseSequence& seq);

/// b(G): length of a shortest base (iterative deepening over orbit
/// representatives). 0 for the trivial group.
WitnessedLength min_base_length(const PermGroup& g);

/// I(G): length of a longest irredundant base.
WitnessedLength max_irredundant_length(const PermGroup& g);

/**
 * The set of all irredundant base lengths of g.
 *
 * Depth-first search over stabilizer chains. At a node with current
 * stabilizer H only the smallest point of each nontrivial H-orbit is tried:
 * replacing a point by an H-conjugate conjugates the rest of the chain, so
 * the set of completion lengths is unchanged. The trivial group yields {0}.
 */
IntervalReport achievable_lengths(const PermGroup& g);

}  // namespace irrbase
