#include <gtest/gtest.h>

#include "irrbase/report.hpp"

using namespace irrbase;
using nlohmann::json;

TEST(SpecJson, RoundTrip) {
  for (auto [a, b] : {std::pair{2u, 3u}, {2u, 6u}, {3u, 5u}, {4u, 4u}, {5u, 8u}}) {
    const GroupSpec s = witness_spec({a, b});
    const auto j = to_json(s);
    const GroupSpec back = group_spec_from_json(json::parse(j.dump()));
    EXPECT_EQ(to_json(back).dump(), j.dump());
  }
}

TEST(SpecJson, Shape) {
  const auto j = to_json(witness_spec({3, 5}));
  EXPECT_EQ(j["family"], "affine");
  EXPECT_EQ(j["params"]["d"], 2);
  EXPECT_EQ(j["params"]["f"], 6);
  EXPECT_EQ(j["extended"], true);
  EXPECT_EQ(j["action"], "vectors");
  EXPECT_EQ(j["expected_lengths"], json::parse("[3,4,5]"));
}

TEST(SpecJson, Rejects) {
  EXPECT_THROW(group_spec_from_json(json::parse("[]")), InputError);
  EXPECT_THROW(group_spec_from_json(json::parse(R"({"family":"dragon","params":{}})")), InputError);
  EXPECT_THROW(group_spec_from_json(json::parse(R"({"family":"symmetric","params":{"n":"five"}})")), InputError);
  EXPECT_THROW(group_spec_from_json(json::parse(R"({"family":"suzuki","params":{"m":1},"action":"vectors"})")),
               InputError);
  EXPECT_THROW(group_spec_from_json(json::parse(R"({"family":"affine","params":{"d":2,"p":4,"f":1}})")), InputError);
  EXPECT_NO_THROW(group_spec_from_json(json::parse(R"({"family":"symmetric","params":{"n":5}})")));
}

TEST(Envelope, Consistent) {
  const auto inst = instantiate(witness_spec({2, 3}), ResourceGuard{});
  const auto rep = achievable_lengths(inst.group);
  const auto j = report_envelope(inst, rep);
  EXPECT_EQ(j["group_order"], "29120");
  EXPECT_EQ(j["domain_size"], 2080);
  EXPECT_EQ(j["b"], 2);
  EXPECT_EQ(j["I"], 3);
  EXPECT_EQ(j["lengths"], json::parse("[2,3]"));
  EXPECT_EQ(j["is_interval"], true);
  EXPECT_EQ(j["matches_expected"], true);
  EXPECT_FALSE(j.contains("timings"));
  for (const auto& [len, labels] : j["witnesses"].items()) {
    BaseSequence seq{inst.domain, {}};
    for (const auto& l : labels) seq.points.push_back(*inst.domain->index_of(l.get<std::string>()));
    EXPECT_EQ(seq.size(), std::stoul(len));
    EXPECT_TRUE(is_irredundant_base(inst.group, seq));
  }
  EXPECT_TRUE(report_envelope(inst, rep, Timings{1, 2}).contains("timings"));
}

TEST(ChainJson, Shape) {
  const auto inst = instantiate(witness_spec({3, 3}), ResourceGuard{});
  const auto j = to_json(chain_report(inst.group, BaseSequence{inst.domain, {0, 1, 2}}));
  EXPECT_EQ(j["orders"], json::parse(R"(["24","6","2","1"])"));
  EXPECT_EQ(j["terminal_trivial"], true);
  EXPECT_EQ(j["irredundant_base"], true);
}
