#include <gtest/gtest.h>

#include <random>

#include "irrbase/bsgs.hpp"
#include "irrbase/error.hpp"
#include "irrbase/oracle.hpp"
#include "irrbase/suzuki.hpp"
#include "irrbase/verify.hpp"

using namespace irrbase;

namespace {

std::vector<Point> iota_pts(std::size_t n) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  return v;
}

PermGroup sym(std::size_t n) {
  auto d = Domain::natural(n);
  return PermGroup(d, {Permutation::from_cycles(d, {{0, 1}}), Permutation::from_cycles(d, {iota_pts(n)})});
}

}  // namespace

TEST(OrbitTest, Examples) {
  auto d = Domain::natural(5);
  std::vector<Permutation> none;
  EXPECT_EQ(orbit(d, none, 3).points, std::vector<Point>{3});
  std::vector<Permutation> cyc{Permutation::from_cycles(d, {{0, 1, 2, 3, 4}})};
  auto o = orbit(d, cyc, 0);
  EXPECT_EQ(o.size(), 5u);
  for (Point x = 0; x < 5; ++x) EXPECT_EQ(act(o.transversal(cyc, x), 0), x);
}

TEST(OrbitTest, SuzukiOvoid) {
  auto ov = suzuki::build_ovoid(suzuki::SuzukiParams::make(1));
  auto gens = suzuki::sz_generators(*ov);
  auto o = orbit(ov->domain(), gens, 0);
  EXPECT_EQ(o.size(), 65u);
  for (Point x : o.points) EXPECT_EQ(act(o.transversal(gens, x), 0), x);
}

TEST(OrbitTest, OrbitIds) {
  auto d = Domain::natural(6);
  std::vector<Permutation> g{Permutation::from_cycles(d, {{0, 2}, {3, 5}})};
  auto ids = orbit_ids(g, 6);
  EXPECT_EQ(ids[0], ids[2]);
  EXPECT_EQ(ids[3], ids[5]);
  EXPECT_NE(ids[0], ids[1]);
  EXPECT_NE(ids[1], ids[4]);
}

TEST(BsgsTest, Examples) {
  EXPECT_EQ(sym(3).order(), 6);
  EXPECT_EQ(PermGroup(Domain::natural(4), {}).order(), 1);
  EXPECT_EQ(sym(10).order(), 3628800);
  auto ov = suzuki::build_ovoid(suzuki::SuzukiParams::make(1));
  PermGroup g(ov->domain(), suzuki::sz_generators(*ov));
  EXPECT_EQ(g.order(), 29120);
  EXPECT_EQ(g.order(), oracle::closure(65, g.generators()).size());
}

TEST(BsgsTest, OrderIsProductOfOrbitLengths) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 30; ++i) {
    auto c = verify::random_group(rng, 3 + i % 6);
    PermGroup g(c.domain, c.gens);
    BigInt prod = 1;
    for (auto l : g.fundamental_orbit_lengths()) prod *= l;
    EXPECT_EQ(prod, g.order());
    for (const auto& s : c.gens) EXPECT_TRUE(g.contains(s));
    for (const auto& s : g.strong_generators()) EXPECT_TRUE(g.contains(s));
  }
}

TEST(BsgsTest, MembershipMatchesClosure) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 12; ++i) {
    auto c = verify::random_group(rng, 5);
    PermGroup g(c.domain, c.gens);
    auto elems = oracle::closure(5, c.gens);
    std::set<std::vector<Point>> in(elems.begin(), elems.end());
    std::vector<Point> img = iota_pts(5);
    do EXPECT_EQ(g.contains(Permutation(c.domain, img)), in.count(img) == 1);
    while (std::next_permutation(img.begin(), img.end()));
  }
}

TEST(BsgsTest, GeneratorOrderDoesNotMatter) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10; ++i) {
    auto c = verify::random_group(rng, 8);
    PermGroup a(c.domain, c.gens);
    auto gens = c.gens;
    std::reverse(gens.begin(), gens.end());
    gens.push_back(gens.front() * gens.back());
    PermGroup b(c.domain, gens);
    EXPECT_EQ(a.order(), b.order());
  }
}

TEST(BsgsTest, Elements) {
  auto g = sym(4);
  auto els = g.elements();
  EXPECT_EQ(els.size(), 24u);
  EXPECT_EQ(std::set<Permutation>(els.begin(), els.end()).size(), 24u);
}

TEST(BsgsTest, RandomElementsAreMembers) {
  auto ov = suzuki::build_ovoid(suzuki::SuzukiParams::make(1));
  PermGroup g(ov->domain(), suzuki::sz_generators(*ov));
  PermGroup s6 = sym(6);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) EXPECT_TRUE(g.contains(g.random_element(rng)));
  // A 6-cycle is outside Alt(6).
  auto d = s6.domain();
  PermGroup a6(d, {Permutation::from_cycles(d, {{0, 1, 2}}), Permutation::from_cycles(d, {{1, 2, 3, 4, 5}})});
  EXPECT_EQ(a6.order(), 360);
  EXPECT_FALSE(a6.contains(Permutation::from_cycles(d, {iota_pts(6)})));
}

TEST(StabilizerTest, Examples) {
  auto g = sym(4);
  EXPECT_EQ(g.pointwise_stabilizer(std::vector<Point>{}).order(), 24);
  EXPECT_EQ(g.pointwise_stabilizer(std::vector<Point>{0, 1, 2}).order(), 1);
  EXPECT_EQ(g.stabilizer(3).order(), 6);

  auto sz = suzuki::build_suzuki_group(suzuki::SuzukiParams::make(1), false, suzuki::Action::kDelta);
  const Point zero = sz.ovoid->index_of(0, 0, 0);
  auto h = sz.group.pointwise_stabilizer(std::vector<Point>{zero, 0});
  EXPECT_EQ(h.order(), 7);
  // Cyclic: some element has order 7.
  bool cyclic = false;
  for (const auto& e : h.elements()) cyclic = cyclic || e.order() == 7;
  EXPECT_TRUE(cyclic);
}

TEST(StabilizerTest, MatchesOracle) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 15; ++i) {
    auto c = verify::random_group(rng, 7);
    PermGroup g(c.domain, c.gens);
    auto elems = oracle::closure(7, c.gens);
    for (std::vector<Point> pts : {std::vector<Point>{0}, {3, 1}, {6, 2, 4}}) {
      auto s = g.pointwise_stabilizer(pts);
      EXPECT_EQ(s.order(), oracle::stabilizer(elems, pts).size());
      for (const auto& gen : s.generators())
        for (Point x : pts) EXPECT_EQ(act(gen, x), x);
    }
  }
}

TEST(StabilizerTest, BasePrefix) {
  auto g = sym(6);
  std::vector<Point> pre{4, 2};
  auto h = g.with_base_prefix(pre);
  EXPECT_EQ(h.order(), 720);
  auto b = h.base();
  ASSERT_GE(b.size(), 2u);
  EXPECT_EQ(b[0], 4u);
  EXPECT_EQ(b[1], 2u);
}

TEST(ImageOf, PairActionOfSym) {
  auto g = sym(5);
  auto pairs = Domain::pairs(g.domain());
  auto img = PermGroup::image_of(g, pairs, [&](const Permutation& p) { return induced_pair_action(p, pairs); });
  EXPECT_EQ(img.order(), 120);
  EXPECT_TRUE(img.is_transitive());
}

TEST(ImageOf, RejectsNonFaithful) {
  auto g = sym(4);
  auto d2 = Domain::natural(2);
  // The sign map is a homomorphism with a kernel.
  auto sign = [&](const Permutation& p) {
    std::size_t inv = 0;
    for (Point i = 0; i < 4; ++i)
      for (Point j = i + 1; j < 4; ++j) inv += p(i) > p(j);
    return inv % 2 ? Permutation::from_cycles(d2, {{0, 1}}) : Permutation::identity(d2);
  };
  EXPECT_THROW(PermGroup::image_of(g, d2, sign), IntegrityError);
}

TEST(Primitivity, Examples) {
  EXPECT_TRUE(is_primitive(sym(5)));
  auto d = Domain::natural(6);
  PermGroup c6(d, {Permutation::from_cycles(d, {iota_pts(6)})});
  EXPECT_FALSE(is_primitive(c6));
  auto blk = minimal_block(c6, 0, 3);
  EXPECT_EQ(blk, (std::vector<Point>{0, 3}));
  auto d5 = Domain::natural(5);
  PermGroup c5(d5, {Permutation::from_cycles(d5, {iota_pts(5)})});
  EXPECT_TRUE(is_primitive(c5));
  PermGroup intrans(d, {Permutation::from_cycles(d, {{0, 1}})});
  EXPECT_FALSE(is_primitive(intrans));
}

TEST(Primitivity, SuzukiOnPairs) {
  auto g = suzuki::build_suzuki_group(suzuki::SuzukiParams::make(1), false, suzuki::Action::kPairs);
  EXPECT_TRUE(is_primitive(g.group));
}
