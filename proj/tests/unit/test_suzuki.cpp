#include <gtest/gtest.h>

#include <set>

#include "irrbase/chains.hpp"
#include "irrbase/error.hpp"
#include "irrbase/oracle.hpp"
#include "irrbase/suzuki.hpp"

using namespace irrbase;
using namespace irrbase::suzuki;

namespace {

struct Sz8 : ::testing::Test {
  SuzukiParams params = SuzukiParams::make(1);
  OvoidPtr ov = build_ovoid(params);
  FieldElement el(std::uint64_t c) const { return ov->element(c); }
  Point pt(std::uint64_t a, std::uint64_t b, std::uint64_t c) const { return ov->index_of(a, b, c); }
};

}  // namespace

TEST(SuzukiParamsTest, Validation) {
  EXPECT_EQ(SuzukiParams::make(1).q(), 8u);
  EXPECT_EQ(SuzukiParams::make(2).f(), 5u);
  EXPECT_THROW(SuzukiParams::make(0), DomainError);
}

TEST_F(Sz8, OvoidMembership) {
  EXPECT_EQ(ov->size(), 65u);
  EXPECT_TRUE(on_ovoid({el(1), el(0), el(1)}));
  EXPECT_TRUE(on_ovoid({el(0), el(0), el(0)}));
  EXPECT_FALSE(on_ovoid({el(1), el(0), el(0)}));
  EXPECT_THROW(ov->index_of(1, 0, 0), DomainError);
  std::size_t count = 0;
  for (std::uint64_t a = 0; a < 8; ++a)
    for (std::uint64_t b = 0; b < 8; ++b)
      for (std::uint64_t c = 0; c < 8; ++c) count += on_ovoid({el(a), el(b), el(c)});
  EXPECT_EQ(count, 64u);
  EXPECT_TRUE(ov->point(0).is_infinity());
  EXPECT_EQ(ov->domain()->label(0), "inf");
}

TEST_F(Sz8, SigmaPlusTwo) {
  for (std::uint64_t c = 0; c < 8; ++c) EXPECT_EQ(sigma_plus_two(el(c)), el(c).pow(6));
}

TEST_F(Sz8, Translations) {
  EXPECT_TRUE(make_t(*ov, el(0), el(0)).is_identity());
  auto t = make_t(*ov, el(1), el(0));
  EXPECT_EQ(act(t, 0), 0u);
  EXPECT_EQ(act(t, pt(0, 0, 0)), pt(1, 0, 1));
  // The translations form a group of order q^2 acting regularly on the finite points.
  std::vector<Permutation> ts;
  for (std::uint64_t a = 0; a < 8; ++a)
    for (std::uint64_t b = 0; b < 8; ++b) ts.push_back(make_t(*ov, el(a), el(b)));
  std::set<Permutation> all(ts.begin(), ts.end());
  EXPECT_EQ(all.size(), 64u);
  for (const auto& x : ts)
    for (const auto& y : ts) EXPECT_TRUE(all.count(x * y));
  std::set<Point> images;
  for (const auto& x : ts) images.insert(act(x, pt(0, 0, 0)));
  EXPECT_EQ(images.size(), 64u);
}

TEST_F(Sz8, Torus) {
  EXPECT_TRUE(make_n(*ov, el(1)).is_identity());
  EXPECT_THROW(make_n(*ov, el(0)), DomainError);
  for (std::uint64_t g = 1; g < 8; ++g) {
    EXPECT_EQ(act(make_n(*ov, el(g)), pt(0, 0, 0)), pt(0, 0, 0));
    EXPECT_EQ(act(make_n(*ov, el(g)), 0), 0u);
    for (std::uint64_t h = 1; h < 8; ++h)
      EXPECT_EQ(make_n(*ov, el(g)) * make_n(*ov, el(h)), make_n(*ov, el(g) * el(h)));
  }
}

TEST_F(Sz8, Involution) {
  auto w = make_w(*ov);
  EXPECT_EQ(act(w, 0), pt(0, 0, 0));
  EXPECT_EQ(act(w, pt(0, 0, 0)), 0u);
  EXPECT_EQ(act(w, pt(1, 1, 1)), pt(1, 1, 1));
  EXPECT_TRUE((w * w).is_identity());
  EXPECT_FALSE(w.is_identity());
}

TEST_F(Sz8, FieldAutomorphisms) {
  EXPECT_TRUE(make_field_aut_perm(*ov, 0).is_identity());
  auto phi = make_field_aut_perm(*ov, 1);
  for (Point p : {Point{0}, pt(0, 0, 0), pt(1, 1, 1)}) EXPECT_EQ(act(phi, p), p);
  EXPECT_TRUE(phi.pow(3).is_identity());
  EXPECT_EQ(phi.order(), 3u);
  PermGroup g(ov->domain(), sz_generators(*ov));
  for (const auto& s : sz_full_generator_family(*ov)) EXPECT_TRUE(g.contains(phi.inverse() * s * phi));
  EXPECT_FALSE(g.contains(phi));
}

TEST_F(Sz8, GroupOrders) {
  auto g = build_suzuki_group(params, false, Action::kDelta);
  EXPECT_EQ(g.group.order(), 29120);
  EXPECT_TRUE(g.group.is_transitive());
  EXPECT_EQ(oracle::closure(65, g.group.generators()).size(), 29120u);
  PermGroup full(ov->domain(), sz_full_generator_family(*ov));
  EXPECT_EQ(full.order(), 29120);
  auto ext = build_suzuki_group(params, true, Action::kDelta);
  EXPECT_EQ(ext.group.order(), 87360);
  auto pairs = build_suzuki_group(params, false, Action::kPairs);
  EXPECT_EQ(pairs.domain->size(), 2080u);
  EXPECT_EQ(pairs.group.order(), 29120);
  EXPECT_TRUE(pairs.group.is_transitive());
}

TEST_F(Sz8, WitnessChain) {
  auto g = build_suzuki_group(params, false, Action::kPairs);
  auto seq = paper_witness_chain(g);
  ASSERT_EQ(seq.size(), 3u);
  EXPECT_EQ(seq.points[0], pair_point(g, OvoidPoint::infinity(), ov->point(pt(0, 0, 0))));
  EXPECT_EQ(seq.points[1], pair_point(g, ov->point(pt(1, 0, 1)), ov->point(pt(0, 1, 1))));
  EXPECT_EQ(seq.points[2], pair_point(g, ov->point(pt(0, 0, 0)), ov->point(pt(1, 1, 1))));
  EXPECT_TRUE(is_irredundant_base(g.group, seq));
  auto r = chain_report(g.group, seq);
  EXPECT_EQ(r.orders, (std::vector<BigInt>{29120, 14, 2, 1}));

  auto ext = build_suzuki_group(params, true, Action::kPairs);
  auto seq4 = paper_witness_chain(ext);
  EXPECT_EQ(seq4.size(), 4u);
  EXPECT_TRUE(is_irredundant_base(ext.group, seq4));
}

TEST(Suzuki32, GeneratorsPreserveOvoid) {
  auto ov = build_ovoid(SuzukiParams::make(2));
  EXPECT_EQ(ov->size(), 1025u);
  auto gens = sz_generators(*ov);
  PermGroup g(ov->domain(), gens);
  // |Sz(32)| = q^2 (q^2 + 1)(q - 1)
  EXPECT_EQ(g.order(), BigInt(1024) * 1025 * 31);
  auto w = make_w(*ov);
  EXPECT_TRUE((w * w).is_identity());
}
