#pragma once

#include <optional>

#include <json.hpp>

#include "irrbase/chains.hpp"
#include "irrbase/realize.hpp"

namespace irrbase {

/**
 * GroupSpec JSON:
 *   {"family": "symmetric"|"suzuki"|"affine",
 *    "params": {"n"} | {"m","p","f"[,"modulus"]} | {"d","p","f"[,"modulus"]},
 *    "extended": bool, "action": "natural"|"delta"|"pairs"|"vectors",
 *    "expected_lengths": [..]}
 */
nlohmann::ordered_json to_json(const GroupSpec& spec);
/// Throws InputError on schema violations.
GroupSpec group_spec_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const BaseSequence& seq);
nlohmann::ordered_json to_json(const ChainReport& rep);

struct Timings {
  double build_seconds = 0;
  double search_seconds = 0;
};

/// The analysis report: spec, domain size, order (decimal string), b, I,
/// lengths, is_interval, witnesses (label sequences), optional timings.
nlohmann::ordered_json report_envelope(const Instance& inst, const IntervalReport& rep,
                                       std::optional<Timings> timings = std::nullopt);

}  // namespace irrbase
