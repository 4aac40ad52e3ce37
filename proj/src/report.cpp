#include "irrbase/report.hpp"

#include "irrbase/gf.hpp"

namespace irrbase {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::optional<std::vector<std::uint32_t>> default_modulus(std::uint32_t p, std::uint64_t f) {
  // Only for fields small enough to search for an irreducible quickly.
  if (f > 20 || (p > 2 && f > 12) || p > 1000) return std::nullopt;
  try {
    return FieldSpec::make(p, static_cast<unsigned>(f))->modulus();
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

ordered_json to_json(const GroupSpec& s) {
  ordered_json j;
  j["family"] = family_name(s.family);
  ordered_json params = ordered_json::object();
  switch (s.family) {
    case Family::kSymmetric:
      params["n"] = s.n;
      break;
    case Family::kSuzuki:
      params["m"] = s.m;
      [[fallthrough]];
    case Family::kAffine:
      if (s.family == Family::kAffine) params["d"] = s.d;
      params["p"] = s.p;
      params["f"] = s.f;
      if (auto mod = s.modulus ? s.modulus : default_modulus(s.p, s.f)) params["modulus"] = *mod;
      break;
  }
  j["params"] = params;
  j["extended"] = s.extended;
  j["action"] = s.action;
  j["expected_lengths"] = s.expected_lengths;
  return j;
}

GroupSpec group_spec_from_json(const json& j) {
  if (!j.is_object()) throw InputError("group spec must be a JSON object");
  GroupSpec s;
  s.family = family_from_name(get_field<std::string>(j, "family"));
  const json params = j.contains("params") ? j.at("params") : json::object();
  if (!params.is_object()) throw InputError("'params' must be an object");
  s.extended = j.value("extended", false);
  switch (s.family) {
    case Family::kSymmetric:
      s.n = get_field<unsigned>(params, "n");
      s.action = j.value("action", std::string("natural"));
      break;
    case Family::kSuzuki:
      s.m = get_field<unsigned>(params, "m");
      s.p = params.value("p", 2u);
      s.f = params.value("f", 2 * std::uint64_t{s.m} + 1);
      s.action = j.value("action", std::string("pairs"));
      break;
    case Family::kAffine:
      s.d = get_field<unsigned>(params, "d");
      s.p = get_field<std::uint32_t>(params, "p");
      s.f = get_field<std::uint64_t>(params, "f");
      s.action = j.value("action", std::string("vectors"));
      break;
  }
  if (params.contains("modulus")) s.modulus = get_field<std::vector<std::uint32_t>>(params, "modulus");
  if (j.contains("expected_lengths"))
    s.expected_lengths = get_field<std::vector<std::size_t>>(j, "expected_lengths");
  estimate(s);  // validates parameter consistency
  return s;
}

ordered_json to_json(const BaseSequence& seq) { return seq.labels(); }

ordered_json to_json(const ChainReport& rep) {
  ordered_json j;
  std::vector<std::string> orders;
  for (const auto& o : rep.orders) orders.push_back(o.str());
  j["orders"] = orders;
  j["strict"] = rep.strict;
  j["terminal_trivial"] = rep.terminal_trivial;
  j["irredundant_base"] = rep.terminal_trivial && rep.all_strict();
  return j;
}

ordered_json report_envelope(const Instance& inst, const IntervalReport& rep,
                             std::optional<Timings> timings) {
  ordered_json j;
  j["spec"] = to_json(inst.spec);
  j["domain_size"] = inst.domain->size();
  j["group_order"] = inst.group.order().str();
  j["b"] = rep.min_length;
  j["I"] = rep.max_length;
  j["lengths"] = rep.lengths;
  j["is_interval"] = rep.is_interval;
  ordered_json w = ordered_json::object();
  for (const auto& [len, seq] : rep.witnesses) w[std::to_string(len)] = to_json(seq);
  j["witnesses"] = w;
  if (!inst.spec.expected_lengths.empty())
    j["matches_expected"] = rep.lengths == inst.spec.expected_lengths;
  if (timings) j["timings"] = {{"build_seconds", timings->build_seconds},
                               {"search_seconds", timings->search_seconds}};
  return j;
}

}  // namespace irrbase
