#include "irrbase/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>

#include "irrbase/affine.hpp"
#include "irrbase/chains.hpp"
#include "irrbase/oracle.hpp"
#include "irrbase/realize.hpp"
#include "irrbase/suzuki.hpp"

namespace irrbase::verify {

using nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kCorpusSeed = 20240611;
constexpr std::uint64_t kIntervalSeed = 1729;
constexpr std::uint64_t kOrderSeed = 4104;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string set_str(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

std::string within(double secs, double limit) {
  if (secs <= limit) return "within " + std::to_string(static_cast<int>(limit)) + " s";
  return "took " + std::to_string(secs) + " s, limit " + std::to_string(static_cast<int>(limit)) + " s";
}

std::vector<std::size_t> range(std::size_t a, std::size_t b) {
  std::vector<std::size_t> v;
  for (std::size_t x = a; x <= b; ++x) v.push_back(x);
  return v;
}

// Accumulates sub-results of one check.
struct Tally {
  bool ok = true;
  std::vector<std::string> notes;
  void expect(bool cond, const std::string& what) {
    ok = ok && cond;
    notes.push_back(std::string(cond ? "ok: " : "FAILED: ") + what);
  }
  std::string detail() const {
    std::string s;
    for (const auto& n : notes) s += (s.empty() ? "" : "; ") + n;
    return s;
  }
};

CheckResult finish(std::string id, std::string title, const Tally& t, ordered_json data,
                   Clock::time_point t0) {
  CheckResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  r.passed = t.ok;
  r.detail = t.detail();
  r.data = std::move(data);
  r.seconds = since(t0);
  return r;
}

suzuki::SuzukiGroup sz8(bool extended, suzuki::Action action) {
  return suzuki::build_suzuki_group(suzuki::SuzukiParams::make(1), extended, action);
}

PermGroup affine_group(unsigned d, std::uint32_t p, unsigned f, bool extended) {
  return affine::build_affine_group(affine::AffineParams::make(d, p, f), extended).group;
}

std::vector<std::size_t> lengths_of(const PermGroup& g) { return achievable_lengths(g).lengths; }

CorpusGroup named(std::string name, std::size_t n, std::vector<std::vector<std::vector<Point>>> cycles) {
  CorpusGroup c{std::move(name), Domain::natural(n), {}};
  for (const auto& cs : cycles) c.gens.push_back(Permutation::from_cycles(c.domain, cs));
  return c;
}

CorpusGroup from_group(std::string name, const PermGroup& g) {
  // Re-express on a natural domain so corpus groups are uniform.
  CorpusGroup c{std::move(name), Domain::natural(g.degree()), {}};
  for (const auto& s : g.generators())
    c.gens.emplace_back(c.domain, std::vector<Point>(s.images().begin(), s.images().end()));
  return c;
}

std::vector<Point> iota_points(std::size_t n) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  return v;
}

std::vector<CorpusGroup> named_corpus() {
  std::vector<CorpusGroup> out;
  for (std::size_t n = 3; n <= 6; ++n)
    out.push_back(named("Sym(" + std::to_string(n) + ")", n, {{{0, 1}}, {iota_points(n)}}));
  out.push_back(named("Alt(4)", 4, {{{0, 1, 2}}, {{1, 2, 3}}}));
  out.push_back(named("Alt(5)", 5, {{{0, 1, 2}}, {{0, 1, 2, 3, 4}}}));
  for (std::size_t n : {5u, 8u, 12u}) out.push_back(named("C" + std::to_string(n), n, {{iota_points(n)}}));
  for (std::size_t n : {4u, 6u, 7u, 10u, 12u}) {
    std::vector<std::vector<Point>> refl;
    for (Point i = 1; i < n - i; ++i) refl.push_back({i, static_cast<Point>(n - i)});
    out.push_back(named("D" + std::to_string(2 * n), n, {{iota_points(n)}, refl}));
  }
  out.push_back(named("C2^3 regular", 8, {{{0, 1}, {2, 3}, {4, 5}, {6, 7}},
                                          {{0, 2}, {1, 3}, {4, 6}, {5, 7}},
                                          {{0, 4}, {1, 5}, {2, 6}, {3, 7}}}));
  out.push_back(named("Sym(4)xSym(4)", 8, {{{0, 1}}, {{0, 1, 2, 3}}, {{4, 5}}, {{4, 5, 6, 7}}}));
  out.push_back(named("Sym(3)^3", 9, {{{0, 1}}, {{0, 1, 2}}, {{3, 4}}, {{3, 4, 5}}, {{6, 7}}, {{6, 7, 8}}}));
  out.push_back(named("Sym(3) wr C2", 6, {{{0, 1}}, {{0, 1, 2}}, {{0, 3}, {1, 4}, {2, 5}}}));
  out.push_back(named("C2 wr C3", 6, {{{0, 1}}, {{0, 2, 4}, {1, 3, 5}}}));
  out.push_back(named("Sym(2)xSym(3)xSym(4) on 9", 9, {{{0, 1}}, {{2, 3, 4}}, {{2, 3}}, {{5, 6, 7, 8}}, {{5, 6}}}));
  out.push_back(from_group("AGL1(5)", affine_group(1, 5, 1, false)));
  out.push_back(from_group("AGL1(7)", affine_group(1, 7, 1, false)));
  out.push_back(from_group("AGL1(8)", affine_group(1, 2, 3, false)));
  out.push_back(from_group("AGammaL1(8)", affine_group(1, 2, 3, true)));
  out.push_back(from_group("AGL1(9)", affine_group(1, 3, 2, false)));
  out.push_back(from_group("AGammaL1(9)", affine_group(1, 3, 2, true)));
  out.push_back(from_group("AGL1(11)", affine_group(1, 11, 1, false)));
  out.push_back(from_group("AGL2(3)", affine_group(2, 3, 1, false)));
  out.push_back(from_group("AGL3(2)", affine_group(3, 2, 1, false)));
  out.push_back(from_group("AGL1(4)", affine_group(1, 2, 2, false)));
  out.push_back(from_group("AGammaL1(4)", affine_group(1, 2, 2, true)));
  return out;
}

CheckResult check_lengths(std::string id, std::string title, Clock::time_point t0, const PermGroup& g,
                          const std::vector<std::size_t>& expected, double limit_seconds) {
  const IntervalReport rep = achievable_lengths(g);
  const double secs = since(t0);
  Tally t;
  t.expect(rep.lengths == expected, "lengths " + set_str(rep.lengths) + " vs expected " + set_str(expected));
  t.expect(rep.min_length == expected.front(), "b = " + std::to_string(rep.min_length));
  t.expect(rep.max_length == expected.back(), "I = " + std::to_string(rep.max_length));
  for (const auto& [len, w] : rep.witnesses)
    t.expect(w.size() == len && is_irredundant_base(g, w), "witness of length " + std::to_string(len));
  if (limit_seconds > 0)
    t.expect(secs <= limit_seconds, within(secs, limit_seconds));
  ordered_json data{{"order", g.order().str()}, {"degree", g.degree()}, {"lengths", rep.lengths},
                    {"expected", expected}};
  return finish(std::move(id), std::move(title), t, std::move(data), t0);
}

CheckResult c1() {
  const auto t0 = Clock::now();
  const auto g = sz8(false, suzuki::Action::kPairs);
  return check_lengths("C1", "Sz(8) on 2-subsets: b = 2, I = 3, lengths {2,3}", t0, g.group, {2, 3}, 60);
}

CheckResult c2() {
  const auto t0 = Clock::now();
  const auto g = sz8(true, suzuki::Action::kPairs);
  return check_lengths("C2", "Sz(8):3 on 2-subsets: lengths {2,3,4}", t0, g.group, {2, 3, 4}, 120);
}

CheckResult c3() {
  const auto t0 = Clock::now();
  Tally t;
  const auto g = sz8(false, suzuki::Action::kPairs);
  const BaseSequence seq = suzuki::paper_witness_chain(g);
  const ChainReport rep = chain_report(g.group, seq);
  std::vector<std::string> orders;
  for (const auto& o : rep.orders) orders.push_back(o.str());
  t.expect(rep.all_strict() && rep.terminal_trivial, "chain strictly decreasing to 1");
  t.expect(rep.orders.size() == 4 && rep.orders[2] == 2, "|(G0)_{w1,w2}| = 2");

  const PermGroup h = g.group.pointwise_stabilizer(std::vector<Point>{seq.points[0], seq.points[1]});
  const auto w = induced_pair_action(suzuki::make_w(*g.ovoid), g.domain);
  std::set<Permutation> elems;
  for (auto& e : h.elements()) elems.insert(e);
  const std::set<Permutation> expected{Permutation::identity(g.domain), w};
  t.expect(elems == expected, "(G0)_{w1,w2} = {1, w}");

  // Setwise stabilizer of {(0,0,0), inf} in the full element list on the ovoid.
  const auto delta = sz8(false, suzuki::Action::kDelta);
  const auto all = oracle::closure(delta.group.degree(), delta.group.generators());
  const Point zero = delta.ovoid->index_of(0, 0, 0), inf = 0;
  std::size_t brute = 0;
  for (const auto& e : all) {
    const Point a = e[zero], b = e[inf];
    if ((a == zero && b == inf) || (a == inf && b == zero)) ++brute;
  }
  const std::uint64_t q = 8;
  t.expect(rep.orders.size() > 1 && rep.orders[1] == brute,
           "|(G0)_{w1}| = " + std::to_string(brute) + " by chain and by enumeration");
  t.expect(brute == 2 * (q - 1), "|(G0)_{w1}| = 2(q-1) = 14");
  ordered_json data{{"orders", orders},
                    {"omega1_stabilizer_order", brute},
                    {"equals_2(q-1)", brute == 2 * (q - 1)},
                    {"equals_2(q+1)", brute == 2 * (q + 1)},
                    {"witness", seq.labels()}};
  return finish("C3", "Sz(8) explicit chain: orders, (G0)_{w1,w2} = {1,w}, |(G0)_{w1}|", t,
                std::move(data), t0);
}

CheckResult c4() {
  const auto t0 = Clock::now();
  const auto g = sz8(true, suzuki::Action::kDelta);
  const auto b = min_base_length(g.group);
  const double secs = since(t0);
  Tally t;
  t.expect(b.length == 3, "b(G, Delta) = " + std::to_string(b.length));
  t.expect(is_irredundant_base(g.group, b.witness), "witness is a base");
  t.expect(secs <= 10, within(secs, 10));
  return finish("C4", "Sz(8):3 on the ovoid: b = 3", t,
                {{"b", b.length}, {"witness", b.witness.labels()}}, t0);
}

CheckResult c5() {
  const auto t0 = Clock::now();
  const auto g = sz8(false, suzuki::Action::kDelta);
  const auto info = oracle::ordered_pair_orbits(g.group.degree(), g.group.generators(), 0, 1);
  Tally t;
  t.expect(info.orbit_count == 1, std::to_string(info.orbit_count) + " orbit(s) on ordered pairs");
  t.expect(info.orbit_size == 65 * 64, "orbit size " + std::to_string(info.orbit_size));
  return finish("C5", "Sz(8) is 2-transitive on the ovoid", t,
                {{"orbits", info.orbit_count}, {"orbit_size", info.orbit_size}}, t0);
}

CheckResult c6_impl(std::string id, bool include_big) {
  const auto t0 = Clock::now();
  Tally t;
  ordered_json data = ordered_json::object();
  struct Case {
    std::string name;
    unsigned d, f;
    bool ext;
    std::vector<std::size_t> expected;
    double limit;
  };
  std::vector<Case> cases{{"AGL2(4)", 2, 2, false, {3}, 0}, {"AGammaL2(4)", 2, 2, true, {3, 4}, 0}};
  if (include_big) cases.push_back({"AGammaL2(64)", 2, 6, true, {3, 4, 5}, 600});
  for (const auto& c : cases) {
    const auto s0 = Clock::now();
    const auto lens = lengths_of(affine_group(c.d, 2, c.f, c.ext));
    const double secs = since(s0);
    t.expect(lens == c.expected, c.name + " lengths " + set_str(lens) + " vs " + set_str(c.expected));
    if (c.limit > 0) t.expect(secs <= c.limit, c.name + " " + within(secs, c.limit));
    data[c.name] = {{"lengths", lens}, {"expected", c.expected}};
  }
  return finish(std::move(id), "affine groups: lengths {d+1,...,d+1+pi(f)}", t, std::move(data), t0);
}

CheckResult c7() {
  const auto t0 = Clock::now();
  Tally t;
  ordered_json data = ordered_json::array();
  const std::vector<std::pair<std::size_t, std::size_t>> xs{{2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}, {5, 5}};
  for (auto [a, b] : xs) {
    const GroupSpec spec = witness_spec({a, b});
    const Instance inst = instantiate(spec, ResourceGuard{});
    const auto lens = lengths_of(inst.group);
    const auto want = range(a, b);
    t.expect(spec.expected_lengths == want && lens == want,
             "X = " + set_str(want) + " via " + family_name(spec.family) + ": got " + set_str(lens));
    data.push_back({{"X", want}, {"family", family_name(spec.family)}, {"lengths", lens}});
  }
  // Larger Suzuki witnesses are refused by the guard; only their specs are checked.
  for (std::size_t b = 5; b <= 9; ++b) {
    const GroupSpec spec = witness_spec({2, b});
    bool refused = false;
    try {
      instantiate(spec, ResourceGuard{});
    } catch (const GuardError&) {
      refused = true;
    }
    t.expect(refused && spec.f % 2 == 1 && pi(spec.f) == b - 3 && spec.expected_lengths == range(2, b),
             "X = {2.." + std::to_string(b) + "}: spec f = " + std::to_string(spec.f) + ", guard refuses");
  }
  return finish("C7", "end-to-end: realize -> instantiate -> lengths = X", t, std::move(data), t0);
}

CheckResult c8() {
  const auto t0 = Clock::now();
  Tally t;
  std::mt19937_64 rng(kIntervalSeed);
  std::size_t violations = 0, tested = 0;
  for (int i = 0; i < 100; ++i) {
    std::uniform_int_distribution<std::size_t> pick_n(2, 8);
    const CorpusGroup c = random_group(rng, pick_n(rng));
    const PermGroup g(c.domain, c.gens);
    if (!achievable_lengths(g).is_interval) ++violations;
    ++tested;
  }
  std::vector<PermGroup> paper{sz8(false, suzuki::Action::kPairs).group, sz8(true, suzuki::Action::kPairs).group,
                               sz8(true, suzuki::Action::kDelta).group, affine_group(2, 2, 2, false),
                               affine_group(2, 2, 2, true)};
  for (const auto& g : paper) {
    if (!achievable_lengths(g).is_interval) ++violations;
    ++tested;
  }
  t.expect(violations == 0, std::to_string(violations) + " violations in " + std::to_string(tested) + " groups");
  return finish("C8", "lengths form an interval", t, {{"groups", tested}, {"violations", violations}}, t0);
}

CheckResult c9() {
  const auto t0 = Clock::now();
  Tally t;
  std::size_t discrepancies = 0;
  ordered_json data = ordered_json::array();
  const auto corpus = oracle_corpus();
  for (const auto& c : corpus) {
    const PermGroup g(c.domain, c.gens);
    const auto elems = oracle::closure(c.domain->size(), c.gens);
    const auto brute = oracle::exhaustive_lengths(elems, c.domain->size());
    const auto fast = achievable_lengths(g).lengths;
    const bool same = std::vector<std::size_t>(brute.begin(), brute.end()) == fast;
    if (!same) {
      ++discrepancies;
      t.notes.push_back("mismatch on " + c.name);
    }
    data.push_back({{"group", c.name}, {"order", elems.size()}, {"lengths", fast}, {"agrees", same}});
  }
  t.expect(corpus.size() >= 30, std::to_string(corpus.size()) + " corpus groups");
  t.expect(discrepancies == 0, std::to_string(discrepancies) + " discrepancies");
  return finish("C9", "orbit-representative search = exhaustive search", t, std::move(data), t0);
}

CheckResult c10() {
  const auto t0 = Clock::now();
  Tally t;
  auto cmp = [&](const std::string& name, const PermGroup& g, std::optional<std::size_t> expected) {
    const auto n = oracle::closure(g.degree(), g.generators()).size();
    bool ok = g.order() == n && (!expected || n == *expected);
    t.expect(ok, name + ": BSGS " + g.order().str() + ", closure " + std::to_string(n));
  };
  cmp("Sz(8) on ovoid", sz8(false, suzuki::Action::kDelta).group, 29120);
  cmp("AGL1(4)", affine_group(1, 2, 2, false), 12);
  cmp("AGammaL1(4)", affine_group(1, 2, 2, true), 24);
  std::mt19937_64 rng(kOrderSeed);
  for (int i = 0; i < 20; ++i) {
    std::uniform_int_distribution<std::size_t> pick_n(3, 7);
    const CorpusGroup c = random_group(rng, pick_n(rng));
    cmp(c.name, PermGroup(c.domain, c.gens), std::nullopt);
  }
  return finish("C10", "BSGS order = closure enumeration", t, ordered_json::object(), t0);
}

CheckResult affine_small(unsigned d, unsigned f) {
  const auto t0 = Clock::now();
  Tally t;
  const std::size_t pif = pi(f);
  const auto base = affine_group(d, 2, f, false);
  const auto ext = affine_group(d, 2, f, true);
  const auto lb = lengths_of(base), le = lengths_of(ext);
  t.expect(lb == range(d + 1, d + 1), "AGL lengths " + set_str(lb));
  t.expect(le == range(d + 1, d + 1 + pif), "AGammaL lengths " + set_str(le) + " vs " + set_str(range(d + 1, d + 1 + pif)));
  const std::string q = std::to_string(1u << f);
  return finish("affine-" + std::to_string(d) + "-" + q,
                "AGL" + std::to_string(d) + "(" + q + ") = {d+1}, AGammaL = {d+1..d+1+pi(f)}", t,
                {{"AGL", lb}, {"AGammaL", le}}, t0);
}

CheckResult generator_shortcut() {
  const auto t0 = Clock::now();
  Tally t;
  const auto ov = suzuki::build_ovoid(suzuki::SuzukiParams::make(1));
  const PermGroup small(ov->domain(), suzuki::sz_generators(*ov));
  const PermGroup full(ov->domain(), suzuki::sz_full_generator_family(*ov));
  t.expect(small.order() == full.order(), "4 generators: " + small.order().str() + ", full family: " + full.order().str());
  return finish("sz-generators", "Sz(8): small generating set gives the whole group", t, ordered_json::object(), t0);
}

CheckResult extension_normal() {
  const auto t0 = Clock::now();
  Tally t;
  const auto g = sz8(false, suzuki::Action::kDelta);
  const auto phi = suzuki::make_field_aut_perm(*g.ovoid, 1);
  bool all = true;
  for (const auto& s : g.group.generators()) all = all && g.group.contains(phi.inverse() * s * phi);
  t.expect(all, "Frobenius normalizes Sz(8)");
  const auto e = sz8(true, suzuki::Action::kDelta);
  t.expect(e.group.order() == g.group.order() * 3, "extension has index f = 3");
  return finish("sz-extension", "Sz(8):3 is a semidirect product", t, ordered_json::object(), t0);
}

CheckResult primitive_2080() {
  const auto t0 = Clock::now();
  Tally t;
  const auto g = sz8(false, suzuki::Action::kPairs);
  t.expect(g.group.is_transitive(), "transitive on 2080 points");
  t.expect(is_primitive(g.group), "no nontrivial block system");
  return finish("sz-primitive", "Sz(8) on 2-subsets is primitive", t, ordered_json::object(), t0);
}

}  // namespace

CorpusGroup random_group(std::mt19937_64& rng, std::size_t n) {
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto shuffle_range = [&](std::vector<Point>& img, std::size_t lo, std::size_t hi) {
    for (std::size_t j = hi; j > lo + 1; --j) std::swap(img[j - 1], img[uniform(lo, j - 1)]);
  };
  // Block sizes: one block (any permutation), a random composition
  // (intransitive), or equal blocks permuted among themselves (imprimitive).
  std::vector<std::size_t> divisors;
  for (std::size_t k = 2; k < n; ++k)
    if (n % k == 0) divisors.push_back(k);
  std::size_t mode = uniform(0, 2);
  if (mode == 2 && divisors.empty()) mode = 1;
  std::vector<std::size_t> cuts{0};
  if (mode == 0) {
    cuts.push_back(n);
  } else if (mode == 1) {
    while (cuts.back() < n) cuts.push_back(std::min(n, cuts.back() + uniform(1, std::max<std::size_t>(1, n - 1))));
  } else {
    const std::size_t k = divisors[uniform(0, divisors.size() - 1)];
    for (std::size_t c = k; c <= n; c += k) cuts.push_back(c);
  }

  CorpusGroup c{"", Domain::natural(n), {}};
  std::ostringstream name;
  const std::size_t k = uniform(1, 3);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Point> img = iota_points(n);
    for (std::size_t b = 0; b + 1 < cuts.size(); ++b) shuffle_range(img, cuts[b], cuts[b + 1]);
    if (mode == 2) {
      const std::size_t size = cuts[1], blocks = n / size;
      std::vector<Point> order = iota_points(blocks);
      shuffle_range(order, 0, blocks);
      std::vector<Point> moved(n);
      for (std::size_t x = 0; x < n; ++x)
        moved[x] = static_cast<Point>(order[img[x] / size] * size + img[x] % size);
      img = std::move(moved);
    }
    c.gens.emplace_back(c.domain, std::move(img));
    name << (i ? " " : "") << c.gens.back();
  }
  c.name = "<" + name.str() + "> on " + std::to_string(n);
  return c;
}

std::vector<CorpusGroup> oracle_corpus() {
  std::vector<CorpusGroup> out = named_corpus();
  // Random subgroups of the named groups, generated by one or two uniform elements.
  std::mt19937_64 rng(kCorpusSeed);
  const auto sources = named_corpus();
  for (int i = 0; i < 24; ++i) {
    const auto& src = sources[static_cast<std::size_t>(i * 7) % sources.size()];
    const PermGroup g(src.domain, src.gens);
    CorpusGroup c{"subgroup " + std::to_string(i) + " of " + src.name, src.domain, {}};
    std::uniform_int_distribution<int> pick_k(1, 2);
    for (int j = pick_k(rng); j > 0; --j) c.gens.push_back(g.random_element(rng));
    out.push_back(std::move(c));
  }
  std::erase_if(out, [](const CorpusGroup& c) {
    return c.domain->size() > 12 || PermGroup(c.domain, c.gens).order() > 2000;
  });
  return out;
}

CheckResult criterion(int i) {
  switch (i) {
    case 1: return c1();
    case 2: return c2();
    case 3: return c3();
    case 4: return c4();
    case 5: return c5();
    case 6: return c6_impl("C6", true);
    case 7: return c7();
    case 8: return c8();
    case 9: return c9();
    case 10: return c10();
    default: throw std::out_of_range("no such criterion");
  }
}

const std::vector<Check>& paper_checks() {
  static const std::vector<Check> checks{
      {"C1", "Sz(8) on 2-subsets", Level::kQuick, c1},
      {"C2", "Sz(8):3 on 2-subsets", Level::kQuick, c2},
      {"C3", "Sz(8) explicit chain", Level::kQuick, c3},
      {"C4", "Sz(8):3 base size on the ovoid", Level::kQuick, c4},
      {"C5", "Sz(8) 2-transitivity", Level::kQuick, c5},
      {"sz-generators", "Sz(8) generating set", Level::kQuick, generator_shortcut},
      {"sz-extension", "Sz(8):3 semidirect product", Level::kQuick, extension_normal},
      {"affine-quick", "AGL2(4), AGammaL2(4)", Level::kQuick, [] { return c6_impl("affine-2-4", false); }},
      {"affine-1-4", "AGL1(4), AGammaL1(4)", Level::kQuick, [] { return affine_small(1, 2); }},
      {"affine-2-8", "AGL2(8), AGammaL2(8)", Level::kQuick, [] { return affine_small(2, 3); }},
      {"C8", "interval property", Level::kQuick, c8},
      {"C10", "BSGS order oracle", Level::kQuick, c10},
      {"C6", "affine groups incl. AGammaL2(64)", Level::kFull, [] { return c6_impl("C6", true); }},
      {"C7", "end-to-end realization", Level::kFull, c7},
      {"C9", "search vs exhaustive oracle", Level::kFull, c9},
      {"sz-primitive", "Sz(8) primitive on 2-subsets", Level::kFull, primitive_2080},
  };
  return checks;
}

std::vector<CheckResult> run_checks(Level level, const std::function<void(const CheckResult&)>& on_result) {
  std::vector<CheckResult> out;
  for (const auto& c : paper_checks()) {
    if (level == Level::kQuick && c.level != Level::kQuick) continue;
    CheckResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.id = c.id;
      r.title = c.title;
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

ordered_json to_json(const CheckResult& r) {
  return {{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
          {"data", r.data}, {"seconds", r.seconds}};
}

}  // namespace irrbase::verify
