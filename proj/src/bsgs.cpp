#include "irrbase/bsgs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "irrbase/error.hpp"

namespace irrbase {

namespace {

constexpr std::uint64_t kFillSeed = 0x5eed1bb5c0ffee11ULL;

bool is_identity(const std::vector<Point>& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != i) return false;
  return true;
}

Point smallest_moved(const std::vector<Point>& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != i) return static_cast<Point>(i);
  throw IntegrityError("identity has no moved point");
}

std::vector<Point> identity_image(std::size_t n) {
  std::vector<Point> g(n);
  std::iota(g.begin(), g.end(), Point{0});
  return g;
}

template <class GetImage>
std::vector<std::uint32_t> orbit_ids_impl(std::size_t count, GetImage image, std::size_t n) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> id(n, kUnset);
  std::vector<Point> queue;
  for (Point start = 0; start < n; ++start) {
    if (id[start] != kUnset) continue;
    id[start] = start;
    queue.assign(1, start);
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (std::size_t k = 0; k < count; ++k) {
        Point y = image(k)[queue[h]];
        if (id[y] == kUnset) {
          id[y] = start;
          queue.push_back(y);
        }
      }
  }
  return id;
}

}  // namespace

Permutation Orbit::transversal(std::span<const Permutation> gens, Point x) const {
  if (!contains(x)) throw DomainError("point not in orbit");
  std::vector<Permutation> word;
  while (x != root) {
    const auto& s = gens[static_cast<std::size_t>(tree[x])];
    word.push_back(s);
    x = s.inverse()(x);
  }
  Permutation u = Permutation::identity(domain);
  for (auto it = word.rbegin(); it != word.rend(); ++it) u = u * *it;
  return u;
}

Orbit orbit(DomainPtr domain, std::span<const Permutation> gens, Point i) {
  const std::size_t degree = domain->size();
  if (i >= degree) throw DomainError("orbit point out of range");
  for (const auto& g : gens)
    if (g.domain() != domain) throw SpecMismatchError("generator on a different domain");
  Orbit o;
  o.domain = std::move(domain);
  o.root = i;
  o.tree.assign(degree, Orbit::kNotInOrbit);
  o.tree[i] = Orbit::kRoot;
  o.points.push_back(i);
  for (std::size_t h = 0; h < o.points.size(); ++h)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Point y = gens[k](o.points[h]);
      if (o.tree[y] == Orbit::kNotInOrbit) {
        o.tree[y] = static_cast<std::int32_t>(k);
        o.points.push_back(y);
      }
    }
  return o;
}

std::vector<std::uint32_t> orbit_ids(std::span<const Permutation> gens, std::size_t degree) {
  return orbit_ids_impl(gens.size(), [&](std::size_t k) { return gens[k].images(); }, degree);
}

PermGroup::PermGroup(DomainPtr domain, std::vector<Permutation> gens,
                     std::span<const Point> base_prefix)
    : domain_(std::move(domain)), gens_(std::move(gens)) {
  if (!domain_) throw DomainError("group without domain");
  const std::size_t n = degree();
  for (const auto& g : gens_)
    if (g.domain() != domain_) throw SpecMismatchError("generator on a different domain");
  for (Point p : base_prefix) {
    if (p >= n) throw DomainError("base point out of range");
    push_level(p);
  }
  for (const auto& g : gens_) {
    if (g.is_identity()) continue;
    Image img(g.images().begin(), g.images().end());
    if (std::find(pool_.begin(), pool_.end(), img) != pool_.end()) continue;
    bool moves_base = false;
    for (const auto& L : levels_) moves_base = moves_base || img[L.base] != L.base;
    if (!moves_base) push_level(smallest_moved(img));
    add_to_pool(std::move(img));
  }
  for (std::size_t L = 0; L < levels_.size(); ++L) {
    for (std::uint32_t k = 0; k < pool_.size(); ++k) {
      bool fixes = true;
      for (std::size_t j = 0; j < L && fixes; ++j)
        fixes = pool_[k][levels_[j].base] == levels_[j].base;
      if (fixes) levels_[L].gens.push_back(k);
    }
    compute_orbit(levels_[L]);
  }
  if (!levels_.empty()) schreier_sims(levels_.size() - 1);
  order_ = orbit_product();
}

PermGroup bsgs(DomainPtr domain, std::vector<Permutation> gens) {
  return PermGroup(std::move(domain), std::move(gens));
}

void PermGroup::push_level(Point base) {
  Level L;
  L.base = base;
  L.tree.assign(degree(), Orbit::kNotInOrbit);
  L.tree[base] = Orbit::kRoot;
  L.orbit.push_back(base);
  levels_.push_back(std::move(L));
}

std::uint32_t PermGroup::add_to_pool(Image g) {
  Image inv(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) inv[g[i]] = static_cast<Point>(i);
  pool_.push_back(std::move(g));
  pool_inv_.push_back(std::move(inv));
  return static_cast<std::uint32_t>(pool_.size() - 1);
}

void PermGroup::compute_orbit(Level& level) const {
  for (Point x : level.orbit) level.tree[x] = Orbit::kNotInOrbit;
  level.orbit.assign(1, level.base);
  level.tree[level.base] = Orbit::kRoot;
  for (std::size_t h = 0; h < level.orbit.size(); ++h) {
    const Point x = level.orbit[h];
    for (auto k : level.gens) {
      const Point y = pool_[k][x];
      if (level.tree[y] == Orbit::kNotInOrbit) {
        level.tree[y] = static_cast<std::int32_t>(k);
        level.orbit.push_back(y);
      }
    }
  }
}

std::size_t PermGroup::sift(Image& g, std::size_t from) const {
  for (std::size_t L = from; L < levels_.size(); ++L) {
    const Level& level = levels_[L];
    Point beta = g[level.base];
    if (level.tree[beta] == Orbit::kNotInOrbit) return L;
    while (beta != level.base) {
      const Image& inv = pool_inv_[static_cast<std::size_t>(level.tree[beta])];
      for (auto& x : g) x = inv[x];
      beta = inv[beta];
    }
  }
  return levels_.size();
}

PermGroup::Image PermGroup::transversal(const Level& level, Point beta) const {
  Image acc = identity_image(degree());
  Image next(degree());
  while (beta != level.base) {
    const auto k = static_cast<std::size_t>(level.tree[beta]);
    const Image& s = pool_[k];
    for (std::size_t x = 0; x < acc.size(); ++x) next[x] = acc[s[x]];
    acc.swap(next);
    beta = pool_inv_[k][beta];
  }
  return acc;
}

void PermGroup::add_strong_generator(Image h, std::size_t first, std::size_t last) {
  const auto k = add_to_pool(std::move(h));
  for (std::size_t L = first; L <= last; ++L) {
    levels_[L].gens.push_back(k);
    compute_orbit(levels_[L]);
  }
}

void PermGroup::schreier_sims(std::size_t start_level) {
  const std::size_t n = degree();
  Image g(n);
  long i = static_cast<long>(start_level);
  while (i >= 0) {
    bool restarted = false;
    const auto level_index = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; oi < levels_[level_index].orbit.size() && !restarted; ++oi) {
      const Point beta = levels_[level_index].orbit[oi];
      Image u;
      for (std::size_t gi = 0; gi < levels_[level_index].gens.size(); ++gi) {
        const auto k = levels_[level_index].gens[gi];
        const Image& s = pool_[k];
        const Point gamma = s[beta];
        // Tree edges give trivial Schreier generators.
        if (levels_[level_index].tree[gamma] == static_cast<std::int32_t>(k) &&
            pool_inv_[k][gamma] == beta)
          continue;
        if (u.empty()) u = transversal(levels_[level_index], beta);
        for (std::size_t x = 0; x < n; ++x) g[x] = s[u[x]];
        const std::size_t failed = sift(g, level_index);
        if (failed == levels_.size() && is_identity(g)) continue;
        if (failed == levels_.size()) push_level(smallest_moved(g));
        add_strong_generator(g, level_index + 1, failed);
        i = static_cast<long>(failed);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

BigInt PermGroup::orbit_product() const {
  BigInt r = 1;
  for (const auto& L : levels_) r *= L.orbit.size();
  return r;
}

PermGroup::Image PermGroup::random_image(std::mt19937_64& rng) const {
  Image acc = identity_image(degree());
  Image next(degree());
  for (std::size_t L = levels_.size(); L-- > 0;) {
    const Level& level = levels_[L];
    std::uniform_int_distribution<std::size_t> pick(0, level.orbit.size() - 1);
    Image u = transversal(level, level.orbit[pick(rng)]);
    for (std::size_t x = 0; x < acc.size(); ++x) next[x] = u[acc[x]];
    acc.swap(next);
  }
  return acc;
}

void PermGroup::fill_from(const PermGroup& source, const std::function<Image(Image)>& hom) {
  std::mt19937_64 rng(kFillSeed);
  const BigInt& target = source.order_;
  int misses = 0;
  while (orbit_product() < target) {
    Image g = source.random_image(rng);
    if (hom) g = hom(std::move(g));
    const std::size_t failed = sift(g, 0);
    if (failed == levels_.size() && is_identity(g)) {
      // Uniform elements miss an incomplete chain with probability <= 1/2.
      if (++misses > 80) throw IntegrityError("random Schreier-Sims made no progress");
      continue;
    }
    misses = 0;
    if (failed == levels_.size()) push_level(smallest_moved(g));
    add_strong_generator(std::move(g), 0, failed);
  }
  if (orbit_product() != target) throw IntegrityError("rebased chain overshoots group order");
  order_ = target;
}

PermGroup PermGroup::with_base_prefix(std::span<const Point> prefix) const {
  bool already = prefix.size() <= levels_.size();
  for (std::size_t i = 0; already && i < prefix.size(); ++i)
    already = levels_[i].base == prefix[i];
  if (already) return *this;
  PermGroup r(domain_);
  r.gens_ = gens_;
  for (Point p : prefix) {
    if (p >= degree()) throw DomainError("base point out of range");
    r.push_level(p);
  }
  // The known order makes the randomized fill exact: it stops only when the
  // orbit product reaches |G|, which certifies the chain.
  r.fill_from(*this);
  return r;
}

PermGroup PermGroup::image_of(const PermGroup& source, DomainPtr domain,
                              const std::function<Permutation(const Permutation&)>& hom) {
  PermGroup r(std::move(domain));
  for (const auto& g : source.gens_) {
    Permutation h = hom(g);
    if (h.domain() != r.domain_) throw SpecMismatchError("homomorphism lands on another domain");
    r.gens_.push_back(std::move(h));
  }
  r.fill_from(source, [&](Image g) {
    Permutation h = hom(source.wrap(std::move(g)));
    return Image(h.images().begin(), h.images().end());
  });
  return r;
}

PermGroup PermGroup::pointwise_stabilizer(std::span<const Point> pts) const {
  if (pts.empty()) return *this;
  const PermGroup r = with_base_prefix(pts);
  PermGroup s(domain_);
  const std::size_t k = pts.size();
  std::vector<std::int64_t> remap(r.pool_.size(), -1);
  for (std::size_t L = k; L < r.levels_.size(); ++L) {
    Level level = r.levels_[L];
    for (auto& gi : level.gens) {
      if (remap[gi] < 0) {
        remap[gi] = static_cast<std::int64_t>(s.pool_.size());
        s.pool_.push_back(r.pool_[gi]);
        s.pool_inv_.push_back(r.pool_inv_[gi]);
      }
      gi = static_cast<std::uint32_t>(remap[gi]);
    }
    for (auto& t : level.tree)
      if (t >= 0) t = static_cast<std::int32_t>(remap[static_cast<std::size_t>(t)]);
    s.levels_.push_back(std::move(level));
  }
  if (k < r.levels_.size())
    for (auto gi : s.levels_.front().gens) s.gens_.push_back(s.wrap(s.pool_[gi]));
  s.order_ = s.orbit_product();
  return s;
}

Permutation PermGroup::wrap(Image g) const {
  return Permutation(domain_, std::move(g), Permutation::Unchecked{});
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& L : levels_) b.push_back(L.base);
  return b;
}

std::vector<std::size_t> PermGroup::fundamental_orbit_lengths() const {
  std::vector<std::size_t> r;
  for (const auto& L : levels_) r.push_back(L.orbit.size());
  return r;
}

std::vector<Permutation> PermGroup::strong_generators() const {
  std::vector<Permutation> r;
  for (const auto& g : pool_) r.push_back(wrap(g));
  return r;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.domain() != domain_) return false;
  Image img(g.images().begin(), g.images().end());
  return sift(img, 0) == levels_.size() && is_identity(img);
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  return wrap(random_image(rng));
}

std::vector<Permutation> PermGroup::elements(std::size_t limit) const {
  if (order_ > limit) throw DomainError("group too large to enumerate");
  std::vector<Image> cur{identity_image(degree())};
  for (std::size_t L = levels_.size(); L-- > 0;) {
    std::vector<Image> us;
    for (Point beta : levels_[L].orbit) us.push_back(transversal(levels_[L], beta));
    std::vector<Image> nxt;
    nxt.reserve(cur.size() * us.size());
    for (const auto& x : cur)
      for (const auto& u : us) {
        Image y(x.size());
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = u[x[i]];
        nxt.push_back(std::move(y));
      }
    cur.swap(nxt);
  }
  std::vector<Permutation> out;
  out.reserve(cur.size());
  for (auto& g : cur) out.push_back(wrap(std::move(g)));
  return out;
}

std::vector<std::uint32_t> PermGroup::orbit_ids() const {
  return orbit_ids_impl(pool_.size(), [&](std::size_t k) { return std::span<const Point>(pool_[k]); },
                        degree());
}

bool PermGroup::is_transitive() const {
  for (auto id : orbit_ids())
    if (id != 0) return false;
  return true;
}

std::vector<Point> minimal_block(const PermGroup& g, Point a, Point b) {
  const std::size_t n = g.degree();
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto gens = g.strong_generators();
  std::vector<std::pair<Point, Point>> queue;
  auto unite = [&](Point x, Point y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (y < x) std::swap(x, y);
    parent[y] = x;
    queue.emplace_back(x, y);
  };
  unite(a, b);
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const auto [x, y] = queue[h];
    for (const auto& s : gens) unite(s(x), s(y));
  }
  std::vector<Point> block;
  const Point root = find(a);
  for (Point x = 0; x < n; ++x)
    if (find(x) == root) block.push_back(x);
  return block;
}

bool is_primitive(const PermGroup& g) {
  if (!g.is_transitive()) return false;
  const std::size_t n = g.degree();
  if (n <= 2) return true;
  // Any nontrivial block through 0 contains some b from each orbit of G_0 it
  // meets, so testing one representative per G_0-orbit suffices.
  const auto stab = g.stabilizer(0);
  const auto ids = stab.orbit_ids();
  for (Point b = 1; b < n; ++b) {
    if (ids[b] != b) continue;
    if (minimal_block(g, 0, b).size() != n) return false;
  }
  return true;
}

}  // namespace irrbase
