#include <gtest/gtest.h>

#include "irrbase/affine.hpp"
#include "irrbase/arith.hpp"
#include "irrbase/chains.hpp"
#include "irrbase/error.hpp"
#include "irrbase/oracle.hpp"

using namespace irrbase;
using namespace irrbase::affine;

TEST(VectorDomain, Sizes) {
  auto s = build_vector_domain(AffineParams::make(2, 2, 2));
  EXPECT_EQ(s->size(), 16u);
  EXPECT_EQ(s->domain()->label(0), "(0,0)");
  EXPECT_EQ(build_vector_domain(AffineParams::make(1, 2, 3))->size(), 8u);
  for (Point i = 0; i < 16; ++i) EXPECT_EQ(s->index_of(s->vector(i)), i);
  EXPECT_THROW(build_vector_domain(AffineParams::make(4, 2, 6), 1u << 20), DomainError);
  EXPECT_THROW(AffineParams::make(0, 2, 1), DomainError);
}

TEST(AffineGroupTest, Orders) {
  auto agl14 = build_affine_group(AffineParams::make(1, 2, 2), false);
  EXPECT_EQ(agl14.group.order(), 12);
  EXPECT_EQ(oracle::closure(4, agl14.group.generators()).size(), 12u);
  EXPECT_EQ(build_affine_group(AffineParams::make(2, 2, 2), false).group.order(), 2880);
  for (auto [d, p, f] : {std::tuple{2u, 2u, 2u}, {1u, 2u, 3u}, {2u, 3u, 2u}, {3u, 2u, 2u}}) {
    auto a = build_affine_group(AffineParams::make(d, p, f), false).group.order();
    auto g = build_affine_group(AffineParams::make(d, p, f), true).group.order();
    EXPECT_EQ(g, a * f);
    EXPECT_EQ(a, affine_group_order(d, checked_pow(p, f), f, false));
  }
}

TEST(AffineGroupTest, ClosedFormAgainstEnumeration) {
  for (auto [d, p, f] : {std::tuple{1u, 5u, 1u}, {1u, 3u, 2u}, {2u, 2u, 1u}, {2u, 3u, 1u}}) {
    for (bool ext : {false, true}) {
      auto g = build_affine_group(AffineParams::make(d, p, f), ext);
      EXPECT_EQ(oracle::closure(g.group.degree(), g.group.generators()).size(), g.group.order());
    }
  }
}

TEST(AffineLengths, SemilinearGroupsNeedOneMorePoint) {
  // AGL_d(q) has lengths {d+1}; for f > 1 the semilinear group has b = d+2,
  // because (0, e_1, ..., e_d) is fixed by every field automorphism.
  auto agl = build_affine_group(AffineParams::make(2, 2, 2), false);
  EXPECT_EQ(achievable_lengths(agl.group).lengths, std::vector<std::size_t>{3});
  auto agaml = build_affine_group(AffineParams::make(2, 2, 2), true);
  EXPECT_EQ(achievable_lengths(agaml.group).lengths, std::vector<std::size_t>{4});
  auto brute = oracle::exhaustive_lengths(oracle::closure(16, agaml.group.generators()), 16);
  EXPECT_EQ(brute, (std::set<std::size_t>{4}));
  auto a14 = build_affine_group(AffineParams::make(1, 2, 2), true);
  EXPECT_EQ(a14.group.order(), 24);  // Sym(4)
  EXPECT_EQ(achievable_lengths(a14.group).lengths, std::vector<std::size_t>{3});
}

TEST(AffineLengths, PrimeFieldIsSharp) {
  for (auto [d, p] : {std::pair{1u, 5u}, {2u, 3u}, {3u, 2u}}) {
    auto g = build_affine_group(AffineParams::make(d, p, 1), true);
    EXPECT_EQ(achievable_lengths(g.group).lengths, std::vector<std::size_t>{d + 1});
  }
}

TEST(PaperBases, MinSequence) {
  auto agl = build_affine_group(AffineParams::make(2, 2, 2), false);
  auto seq = paper_base_min(*agl.space);
  ASSERT_EQ(seq.size(), 3u);
  EXPECT_EQ(seq.labels(), (std::vector<std::string>{"(0,0)", "(1,0)", "(2,1)"}));
  EXPECT_TRUE(is_irredundant_base(agl.group, seq));
  // Under AGammaL the Frobenius map composed with a linear map fixes all three
  // points, so the sequence is irredundant but not a base.
  auto ext = build_affine_group(AffineParams::make(2, 2, 2), true);
  auto r = chain_report(ext.group, paper_base_min(*ext.space));
  EXPECT_TRUE(r.all_strict());
  EXPECT_EQ(r.orders.back(), 2);
  auto d1 = build_affine_group(AffineParams::make(1, 2, 2), false);
  EXPECT_EQ(paper_base_min(*d1.space).labels(), (std::vector<std::string>{"(0)", "(2)"}));
  EXPECT_TRUE(is_irredundant_base(d1.group, paper_base_min(*d1.space)));
  auto prime = build_affine_group(AffineParams::make(3, 3, 1), false);
  EXPECT_TRUE(is_irredundant_base(prime.group, paper_base_min(*prime.space)));
}

TEST(PaperBases, MaxSequence) {
  auto g = build_affine_group(AffineParams::make(2, 2, 2), true);
  auto seq = paper_base_max(*g.space);
  EXPECT_EQ(seq.size(), 4u);
  auto r = chain_report(g.group, seq);
  EXPECT_TRUE(r.all_strict());
  EXPECT_EQ(r.orders[r.orders.size() - 2], 2);
  EXPECT_EQ(r.orders.back(), 1);
  auto prime = build_affine_group(AffineParams::make(2, 3, 1), true);
  EXPECT_EQ(paper_base_max(*prime.space).size(), 3u);
  auto s64 = build_vector_domain(AffineParams::make(2, 2, 6));
  EXPECT_EQ(paper_base_max(*s64).size(), 5u);
}
