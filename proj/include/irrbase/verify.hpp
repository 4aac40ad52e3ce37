#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "irrbase/bsgs.hpp"

namespace irrbase::verify {

enum class Level { kQuick, kFull };

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  double seconds = 0;
};

struct Check {
  std::string id;
  std::string title;
  Level level;
  std::function<CheckResult()> run;
};

/// Every paper claim checked at desk scale, in report order. Quick checks
/// are the ones with level kQuick; full runs everything.
const std::vector<Check>& paper_checks();

/// Runs the checks for a level; on_result is called after each one.
std::vector<CheckResult> run_checks(Level level,
                                    const std::function<void(const CheckResult&)>& on_result = {});

/// Acceptance criteria 1..10 (criterion(i) for i in 1..10).
CheckResult criterion(int i);

/// A named small group (domain + generators).
struct CorpusGroup {
  std::string name;
  DomainPtr domain;
  std::vector<Permutation> gens;
};

/// Subgroup of Sym(n) generated by 1-3 uniformly random permutations.
CorpusGroup random_group(std::mt19937_64& rng, std::size_t n);

/// Groups of order <= 2000 on <= 12 points: named families plus random ones.
std::vector<CorpusGroup> oracle_corpus();

nlohmann::ordered_json to_json(const CheckResult& r);

}  // namespace irrbase::verify
