#include "irrbase/suzuki.hpp"

#include <string>

#include "irrbase/arith.hpp"
#include "irrbase/error.hpp"

namespace irrbase::suzuki {

namespace {

std::string label_of(const Coords& c) {
  return "(" + std::to_string(c[0].code()) + "," + std::to_string(c[1].code()) + "," +
         std::to_string(c[2].code()) + ")";
}

FieldElement sigma_plus_one(const FieldElement& x) { return suzuki_sigma(x) * x; }

}  // namespace

SuzukiParams SuzukiParams::make(unsigned m) {
  if (m == 0) throw DomainError("Suzuki groups need m >= 1 (q >= 8)");
  return {m, FieldSpec::make(2, 2 * m + 1)};
}

SuzukiParams SuzukiParams::make(unsigned m, std::vector<std::uint32_t> modulus) {
  if (m == 0) throw DomainError("Suzuki groups need m >= 1 (q >= 8)");
  return {m, FieldSpec::make(2, 2 * m + 1, std::move(modulus))};
}

FieldElement sigma_plus_two(const FieldElement& x) { return suzuki_sigma(x) * x * x; }

bool on_ovoid(const Coords& c) {
  return c[2] == c[0] * c[1] + sigma_plus_two(c[0]) + suzuki_sigma(c[1]);
}

Ovoid::Ovoid(SuzukiParams params) : params_(std::move(params)) {
  const std::uint64_t q = params_.q();
  std::vector<std::string> labels;
  labels.reserve(q * q + 1);
  labels.emplace_back("inf");
  for (std::uint64_t i = 0; i < q * q; ++i) {
    FieldElement e1 = element(i % q), e2 = element(i / q);
    Coords c{e1, e2, e1 * e2 + sigma_plus_two(e1) + suzuki_sigma(e2)};
    // w is only total if (0,0,0) is the sole finite point with eta3 = 0.
    if (c[2].is_zero() && !(e1.is_zero() && e2.is_zero()))
      throw IntegrityError("ovoid point " + label_of(c) + " has eta3 = 0");
    labels.push_back(label_of(c));
  }
  domain_ = Domain::make("ovoid", std::move(labels));
}

OvoidPoint Ovoid::point(Point i) const {
  if (i >= size()) throw DomainError("ovoid index out of range");
  if (i == 0) return OvoidPoint::infinity();
  const std::uint64_t q = params_.q();
  FieldElement e1 = element((i - 1) % q), e2 = element((i - 1) / q);
  return {Coords{e1, e2, e1 * e2 + sigma_plus_two(e1) + suzuki_sigma(e2)}};
}

Point Ovoid::index_of(const OvoidPoint& pt) const {
  if (pt.is_infinity()) return 0;
  const Coords& c = *pt.coords;
  if (!on_ovoid(c)) throw DomainError("point " + label_of(c) + " is not on the ovoid");
  return static_cast<Point>(1 + c[0].code() + params_.q() * c[1].code());
}

Point Ovoid::index_of(std::uint64_t e1, std::uint64_t e2, std::uint64_t e3) const {
  return index_of(OvoidPoint{Coords{element(e1), element(e2), element(e3)}});
}

Permutation Ovoid::checked(const std::vector<OvoidPoint>& images) const {
  std::vector<Point> img(size());
  for (Point i = 0; i < size(); ++i) {
    const auto& pt = images[i];
    if (!pt.is_infinity() && !on_ovoid(*pt.coords))
      throw IntegrityError("image " + label_of(*pt.coords) + " of point " +
                           domain_->label(i) + " leaves the ovoid");
    img[i] = index_of(pt);
  }
  try {
    return Permutation(domain_, std::move(img));
  } catch (const DomainError&) {
    throw IntegrityError("ovoid map is not a bijection");
  }
}

OvoidPtr build_ovoid(const SuzukiParams& params) { return std::make_shared<const Ovoid>(params); }

Permutation make_t(const Ovoid& ovoid, const FieldElement& a, const FieldElement& b) {
  const FieldElement a_s = suzuki_sigma(a);
  const FieldElement b_s = suzuki_sigma(b);
  const FieldElement a_s2 = sigma_plus_two(a);
  const FieldElement a_s1 = sigma_plus_one(a);
  return ovoid.permutation([&](const OvoidPoint& pt) -> OvoidPoint {
    if (pt.is_infinity()) return pt;
    const auto& [e1, e2, e3] = *pt.coords;
    return {Coords{e1 + a, e2 + b + a_s * e1,
                   e3 + a * b + a_s2 + b_s + a * e2 + a_s1 * e1 + b * e1}};
  });
}

Permutation make_n(const Ovoid& ovoid, const FieldElement& g) {
  if (g.is_zero()) throw DomainError("n_gamma needs gamma != 0");
  const FieldElement g1 = sigma_plus_one(g);
  const FieldElement g2 = sigma_plus_two(g);
  return ovoid.permutation([&](const OvoidPoint& pt) -> OvoidPoint {
    if (pt.is_infinity()) return pt;
    const auto& [e1, e2, e3] = *pt.coords;
    return {Coords{g * e1, g1 * e2, g2 * e3}};
  });
}

Permutation make_w(const Ovoid& ovoid) {
  const FieldElement zero = ovoid.element(0);
  return ovoid.permutation([&](const OvoidPoint& pt) -> OvoidPoint {
    if (pt.is_infinity()) return {Coords{zero, zero, zero}};
    const auto& [e1, e2, e3] = *pt.coords;
    if (e3.is_zero()) {
      if (!e1.is_zero() || !e2.is_zero())
        throw IntegrityError("w undefined: finite point with eta3 = 0");
      return OvoidPoint::infinity();
    }
    const FieldElement inv = e3.inverse();
    return {Coords{e2 * inv, e1 * inv, inv}};
  });
}

Permutation make_field_aut_perm(const Ovoid& ovoid, unsigned k) {
  if (k >= ovoid.params().f()) throw DomainError("field automorphism exponent out of range");
  return ovoid.permutation([&](const OvoidPoint& pt) -> OvoidPoint {
    if (pt.is_infinity()) return pt;
    const auto& [e1, e2, e3] = *pt.coords;
    return {Coords{frobenius_pow(e1, k), frobenius_pow(e2, k), frobenius_pow(e3, k)}};
  });
}

std::vector<Permutation> sz_generators(const Ovoid& ovoid) {
  const FieldElement zero = ovoid.element(0), one = ovoid.element(1);
  return {make_t(ovoid, one, zero), make_t(ovoid, zero, one),
          make_n(ovoid, primitive_element(ovoid.params().field)), make_w(ovoid)};
}

std::vector<Permutation> sz_full_generator_family(const Ovoid& ovoid) {
  const std::uint64_t q = ovoid.params().q();
  std::vector<Permutation> gens;
  for (std::uint64_t a = 0; a < q; ++a)
    for (std::uint64_t b = 0; b < q; ++b)
      gens.push_back(make_t(ovoid, ovoid.element(a), ovoid.element(b)));
  for (std::uint64_t c = 1; c < q; ++c) gens.push_back(make_n(ovoid, ovoid.element(c)));
  gens.push_back(make_w(ovoid));
  return gens;
}

SuzukiGroup build_suzuki_group(const SuzukiParams& params, bool extended, Action action) {
  auto ovoid = build_ovoid(params);
  auto gens = sz_generators(*ovoid);
  if (extended) gens.push_back(make_field_aut_perm(*ovoid, 1));
  PermGroup on_delta(ovoid->domain(), std::move(gens));
  if (action == Action::kDelta)
    return {ovoid, ovoid->domain(), action, extended, std::move(on_delta)};
  auto pairs = Domain::pairs(ovoid->domain());
  auto on_pairs = PermGroup::image_of(
      on_delta, pairs, [&](const Permutation& p) { return induced_pair_action(p, pairs); });
  return {ovoid, pairs, action, extended, std::move(on_pairs)};
}

Point pair_point(const SuzukiGroup& g, const OvoidPoint& a, const OvoidPoint& b) {
  if (g.action != Action::kPairs) throw DomainError("group does not act on 2-subsets");
  return g.domain->pair_index(g.ovoid->index_of(a), g.ovoid->index_of(b));
}

BaseSequence paper_witness_chain(const SuzukiGroup& g) {
  const Ovoid& ov = *g.ovoid;
  auto pt = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return OvoidPoint{Coords{ov.element(a), ov.element(b), ov.element(c)}};
  };
  const OvoidPoint inf = OvoidPoint::infinity();
  BaseSequence seq{g.domain, {}};
  seq.points.push_back(pair_point(g, pt(0, 0, 0), inf));
  seq.points.push_back(pair_point(g, pt(1, 0, 1), pt(0, 1, 1)));
  seq.points.push_back(pair_point(g, pt(0, 0, 0), pt(1, 1, 1)));
  if (g.extended) {
    unsigned degree = 1;
    const FieldElement zero = ov.element(0);
    for (auto prime : factorize(ov.params().f())) {
      degree *= static_cast<unsigned>(prime);
      FieldElement z = subfield_generator(ov.params().field, degree);
      seq.points.push_back(pair_point(g, OvoidPoint{Coords{z, zero, sigma_plus_two(z)}}, inf));
    }
  }
  return seq;
}

}  // namespace irrbase::suzuki
