#include "irrbase/affine.hpp"

#include <string>

#include "irrbase/arith.hpp"
#include "irrbase/error.hpp"

namespace irrbase::affine {

AffineParams AffineParams::make(unsigned d, std::uint32_t p, unsigned f) {
  if (d == 0) throw DomainError("affine dimension must be at least 1");
  return {d, FieldSpec::make(p, f)};
}

VectorSpace::VectorSpace(AffineParams params) : params_(std::move(params)) {
  const std::uint64_t q = params_.q();
  const std::uint64_t n = checked_pow(q, params_.d);
  std::vector<std::string> labels(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    std::string s = "(";
    std::uint64_t t = i;
    for (unsigned k = 0; k < params_.d; ++k) {
      if (k) s += ",";
      s += std::to_string(t % q);
      t /= q;
    }
    labels[i] = s + ")";
  }
  domain_ = Domain::make("vectors", std::move(labels));
}

Vector VectorSpace::vector(Point i) const {
  const std::uint64_t q = params_.q();
  Vector v;
  v.reserve(params_.d);
  std::uint64_t t = i;
  for (unsigned k = 0; k < params_.d; ++k) {
    v.emplace_back(params_.field, t % q);
    t /= q;
  }
  return v;
}

Point VectorSpace::index_of(const Vector& v) const {
  if (v.size() != params_.d) throw DomainError("vector has wrong dimension");
  std::uint64_t idx = 0;
  for (std::size_t k = v.size(); k-- > 0;) idx = idx * params_.q() + v[k].code();
  return static_cast<Point>(idx);
}

Vector VectorSpace::unit(unsigned i) const {
  if (i == 0 || i > params_.d) throw DomainError("basis index out of range");
  Vector v(params_.d, FieldElement::zero(params_.field));
  v[i - 1] = FieldElement::one(params_.field);
  return v;
}

Vector VectorSpace::scaled(const FieldElement& c, const Vector& v) const {
  Vector r = v;
  for (auto& x : r) x = c * x;
  return r;
}

Vector VectorSpace::sum(const Vector& a, const Vector& b) const {
  Vector r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = r[k] + b[k];
  return r;
}

SpacePtr build_vector_domain(const AffineParams& params, std::size_t max_points) {
  if (params.d == 0) throw DomainError("affine dimension must be at least 1");
  BigInt n = 1;
  for (unsigned k = 0; k < params.d; ++k) n *= params.q();
  if (n > max_points)
    throw DomainError("vector domain of size " + n.str() + " exceeds the point limit");
  return std::make_shared<const VectorSpace>(params);
}

BigInt affine_group_order(unsigned d, std::uint64_t q, unsigned f, bool extended) {
  BigInt qd = 1;
  for (unsigned k = 0; k < d; ++k) qd *= q;
  BigInt order = qd;
  BigInt qi = 1;
  for (unsigned i = 0; i < d; ++i) {
    order *= qd - qi;
    qi *= q;
  }
  if (extended) order *= f;
  return order;
}

std::vector<Permutation> affine_generators(const VectorSpace& space, bool extended) {
  const unsigned d = space.params().d;
  const FieldPtr& F = space.params().field;
  const FieldElement mu = primitive_element(F);
  std::vector<Permutation> gens;
  for (unsigned i = 1; i <= d; ++i) {
    const Vector e = space.unit(i);
    gens.push_back(space.permutation([&](const Vector& v) { return space.sum(v, e); }));
  }
  const Vector mu_e1 = space.scaled(mu, space.unit(1));
  gens.push_back(space.permutation([&](const Vector& v) { return space.sum(v, mu_e1); }));
  gens.push_back(space.permutation([&](Vector v) {
    v[0] = mu * v[0];
    return v;
  }));
  if (d >= 2) {
    gens.push_back(space.permutation([&](Vector v) {
      v[0] = v[0] + v[1];
      return v;
    }));
    gens.push_back(space.permutation([&](const Vector& v) {
      Vector r(v.size(), v[0]);
      for (unsigned k = 0; k < d; ++k) r[(k + 1) % d] = v[k];
      return r;
    }));
  }
  if (extended && F->degree() > 1)
    gens.push_back(space.permutation([&](Vector v) {
      for (auto& x : v) x = frobenius_pow(x, 1);
      return v;
    }));
  return gens;
}

AffineGroup build_affine_group(const AffineParams& params, bool extended) {
  auto space = build_vector_domain(params);
  PermGroup g(space->domain(), affine_generators(*space, extended));
  const BigInt expected =
      affine_group_order(params.d, params.q(), params.field->degree(), extended);
  if (g.order() != expected)
    throw IntegrityError("affine generators give order " + g.order().str() + ", expected " +
                         expected.str());
  return {std::move(space), extended, std::move(g)};
}

BaseSequence paper_base_min(const VectorSpace& space) {
  const unsigned d = space.params().d;
  const FieldElement mu = primitive_element(space.params().field);
  const Vector zero(d, FieldElement::zero(space.params().field));
  BaseSequence seq{space.domain(), {space.index_of(zero)}};
  if (d == 1) {
    seq.points.push_back(space.index_of(Vector{mu}));
    return seq;
  }
  for (unsigned i = 1; i < d; ++i) seq.points.push_back(space.index_of(space.unit(i)));
  seq.points.push_back(
      space.index_of(space.sum(space.scaled(mu, space.unit(d - 1)), space.unit(d))));
  return seq;
}

BaseSequence paper_base_max(const VectorSpace& space) {
  const unsigned d = space.params().d;
  const FieldPtr& F = space.params().field;
  const Vector zero(d, FieldElement::zero(F));
  BaseSequence seq{space.domain(), {space.index_of(zero)}};
  for (unsigned i = 1; i <= d; ++i) seq.points.push_back(space.index_of(space.unit(i)));
  unsigned degree = 1;
  for (auto prime : factorize(F->degree())) {
    degree *= static_cast<unsigned>(prime);
    seq.points.push_back(space.index_of(space.scaled(subfield_generator(F, degree), space.unit(1))));
  }
  return seq;
}

}  // namespace irrbase::affine
