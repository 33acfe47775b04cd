#include "anncat/category_model.hpp"

#include <string>

namespace anncat {

namespace {

void check_table(const std::vector<ModuleElement>& table, std::size_t expected, const Bimodule& m, const char* name) {
  if (table.size() != expected) {
    throw Error(ErrorCode::ShapeError, std::string(name) + " table has " + std::to_string(table.size()) +
                                           " entries, expected " + std::to_string(expected));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!m.contains(table[i])) {
      throw Error(ErrorCode::ShapeError, std::string(name) + " entry " + std::to_string(i) + " is out of range");
    }
  }
}

}  // namespace

AnnStructure::AnnStructure(std::shared_ptr<const FiniteRing> ring, std::shared_ptr<const Bimodule> module,
                           std::vector<ModuleElement> eta, std::vector<ModuleElement> lambda,
                           std::optional<std::vector<ModuleElement>> beta)
    : ring_(std::move(ring)),
      module_(std::move(module)),
      n_(ring_->size()),
      eta_(std::move(eta)),
      lambda_(std::move(lambda)),
      beta_(std::move(beta)) {
  if (module_->ring_size() != n_) throw Error(ErrorCode::ShapeError, "module is over a ring of a different size");
  check_table(eta_, n_ * n_, *module_, "eta");
  check_table(lambda_, n_ * n_ * n_, *module_, "lambda");
  if (beta_) {
    check_table(*beta_, n_ * n_, *module_, "beta");
    if (!ring_->is_commutative()) {
      throw Error(ErrorCode::MalformedSpec, "a braiding needs a commutative ring (xy and yx must coincide)");
    }
  }
}

AnnStructure AnnStructure::strict(std::shared_ptr<const FiniteRing> ring, std::shared_ptr<const Bimodule> module,
                                  bool braided) {
  const std::size_t n = ring->size();
  const ModuleElement z = module->zero();
  std::optional<std::vector<ModuleElement>> beta;
  if (braided) beta.emplace(n * n, z);
  return AnnStructure(std::move(ring), std::move(module), std::vector<ModuleElement>(n * n, z),
                      std::vector<ModuleElement>(n * n * n, z), std::move(beta));
}

ModuleElement AnnStructure::beta(RingElement x, RingElement y) const {
  if (!beta_) throw Error(ErrorCode::BraidingAbsent, "structure has no braiding");
  return (*beta_)[idx(x) * n_ + idx(y)];
}

bool AnnStructure::braiding_is_symmetric() const {
  if (!beta_) return false;
  for (auto x : ring_->elements())
    for (auto y : ring_->elements())
      if (module_->add(beta(x, y), beta(y, x)) != module_->zero()) return false;
  return true;
}

bool AnnStructure::operator==(const AnnStructure& other) const {
  return *ring_ == *other.ring_ && ring_->spec() == other.ring_->spec() && *module_ == *other.module_ &&
         module_->spec() == other.module_->spec() && eta_ == other.eta_ && lambda_ == other.lambda_ &&
         beta_ == other.beta_;
}

std::size_t arity(Constraint c) noexcept {
  switch (c) {
    case Constraint::AssocPlus: return 3;
    case Constraint::CommPlus: return 2;
    case Constraint::UnitPlusLeft: return 1;
    case Constraint::UnitPlusRight: return 1;
    case Constraint::Assoc: return 3;
    case Constraint::UnitLeft: return 1;
    case Constraint::UnitRight: return 1;
    case Constraint::DistLeft: return 3;
    case Constraint::DistRight: return 3;
    case Constraint::NullLeft: return 1;
    case Constraint::NullRight: return 1;
    case Constraint::Interchange: return 4;
    case Constraint::Braiding: return 2;
    case Constraint::Theta: return 1;
  }
  return 0;
}

std::string_view to_string(Constraint c) noexcept {
  switch (c) {
    case Constraint::AssocPlus: return "a+";
    case Constraint::CommPlus: return "c+";
    case Constraint::UnitPlusLeft: return "g";
    case Constraint::UnitPlusRight: return "d";
    case Constraint::Assoc: return "a";
    case Constraint::UnitLeft: return "l";
    case Constraint::UnitRight: return "r";
    case Constraint::DistLeft: return "Ldist";
    case Constraint::DistRight: return "Rdist";
    case Constraint::NullLeft: return "Lhat";
    case Constraint::NullRight: return "Rhat";
    case Constraint::Interchange: return "v";
    case Constraint::Braiding: return "c";
    case Constraint::Theta: return "theta";
  }
  return "?";
}

Morphism CategoryModel::compose(const Morphism& after, const Morphism& before) const {
  if (base(after.object) != base(before.object)) {
    throw Error(ErrorCode::ObjectMismatch, "cannot compose morphisms over objects " +
                                               std::to_string(idx(base(after.object))) + " and " +
                                               std::to_string(idx(base(before.object))));
  }
  return {before.object, values().add(after.value, before.value)};
}

Morphism CategoryModel::oplus(const Morphism& f, const Morphism& g) const {
  return {oplus(f.object, g.object), values().add(f.value, g.value)};
}

Morphism CategoryModel::otimes(const Morphism& f, const Morphism& g) const {
  const Bimodule& m = values();
  return {otimes(f.object, g.object),
          m.add(m.left(base(f.object), g.value), m.right(f.value, base(g.object)))};
}

ReducedModel::ReducedModel(const AnnStructure& structure, DerivedConstraints derived)
    : s_(structure), derived_(derived) {
  if (derived_ == DerivedConstraints::Reconstructed && !s_.has_braiding()) {
    throw Error(ErrorCode::BraidingAbsent, "reconstructing the right distributivity needs a braiding");
  }
}

ModuleElement ReducedModel::rdist_value(RingElement x, RingElement y, RingElement a) const {
  const Bimodule& m = s_.module();
  const FiniteRing& r = s_.ring();
  return m.sub(m.add(m.add(s_.beta(a, x), s_.beta(a, y)), s_.lambda(a, x, y)), s_.beta(a, r.add(x, y)));
}

Morphism ReducedModel::constraint(Constraint name, std::span<const Object> o) const {
  if (o.size() != arity(name)) {
    throw Error(ErrorCode::ArityMismatch, std::string("constraint ") + std::string(to_string(name)) + " takes " +
                                              std::to_string(arity(name)) + " objects, got " +
                                              std::to_string(o.size()));
  }
  const FiniteRing& r = s_.ring();
  auto e = [](Object x) { return ring_element(x); };
  const ModuleElement zero = s_.module().zero();
  switch (name) {
    case Constraint::AssocPlus: return {obj(r.add(r.add(e(o[0]), e(o[1])), e(o[2]))), zero};
    case Constraint::CommPlus: return {obj(r.add(e(o[0]), e(o[1]))), s_.eta(e(o[0]), e(o[1]))};
    case Constraint::UnitPlusLeft:
    case Constraint::UnitPlusRight:
    case Constraint::UnitLeft:
    case Constraint::UnitRight:
    case Constraint::Theta: return {o[0], zero};
    case Constraint::Assoc: return {obj(r.mul(r.mul(e(o[0]), e(o[1])), e(o[2]))), zero};
    case Constraint::DistLeft:
      return {obj(r.mul(e(o[0]), r.add(e(o[1]), e(o[2])))), s_.lambda(e(o[0]), e(o[1]), e(o[2]))};
    case Constraint::DistRight: {
      const Object at = obj(r.mul(r.add(e(o[0]), e(o[1])), e(o[2])));
      if (derived_ == DerivedConstraints::Identity) return {at, zero};
      return {at, rdist_value(e(o[0]), e(o[1]), e(o[2]))};
    }
    case Constraint::NullLeft: {
      const Object at = obj(r.mul(e(o[0]), r.zero()));
      if (derived_ == DerivedConstraints::Identity) return {at, zero};
      return {at, s_.module().neg(s_.lambda(e(o[0]), r.zero(), r.zero()))};
    }
    case Constraint::NullRight: {
      const Object at = obj(r.mul(r.zero(), e(o[0])));
      if (derived_ == DerivedConstraints::Identity) return {at, zero};
      return {at, s_.module().neg(rdist_value(r.zero(), r.zero(), e(o[0])))};
    }
    case Constraint::Interchange:
      return {obj(r.add(r.add(e(o[0]), e(o[1])), r.add(e(o[2]), e(o[3])))), s_.eta(e(o[1]), e(o[2]))};
    case Constraint::Braiding: return {obj(r.mul(e(o[0]), e(o[1]))), s_.beta(e(o[0]), e(o[1]))};
  }
  throw Error(ErrorCode::ArityMismatch, "unknown constraint");
}

namespace {

std::vector<Object> as_objects(std::span<const RingElement> xs) {
  std::vector<Object> out;
  out.reserve(xs.size());
  for (auto x : xs) out.push_back(static_cast<Object>(idx(x)));
  return out;
}

}  // namespace

Morphism compose(const AnnStructure& s, const Morphism& f, const Morphism& g) {
  return ReducedModel(s).compose(f, g);
}

Morphism oplus_mor(const AnnStructure& s, const Morphism& f, const Morphism& g) {
  return ReducedModel(s).oplus(f, g);
}

Morphism otimes_mor(const AnnStructure& s, const Morphism& f, const Morphism& g) {
  return ReducedModel(s).otimes(f, g);
}

Morphism constraint(const AnnStructure& s, Constraint name, std::span<const RingElement> objects) {
  const auto objs = as_objects(objects);
  return ReducedModel(s).constraint(name, objs);
}

Morphism rdist_from_braiding(const AnnStructure& s, RingElement x, RingElement y, RingElement a) {
  const ReducedModel model(s);
  const Object ox = static_cast<Object>(idx(x)), oy = static_cast<Object>(idx(y)), oa = static_cast<Object>(idx(a));
  const Object sum = model.oplus(ox, oy);
  const std::array<Object, 2> a_sum{oa, sum}, a_x{oa, ox}, a_y{oa, oy};
  const std::array<Object, 3> a_x_y{oa, ox, oy};
  const Morphism unbraid = model.inverse(model.constraint(Constraint::Braiding, a_sum));
  const Morphism dist = model.constraint(Constraint::DistLeft, a_x_y);
  const Morphism braid_parts =
      model.oplus(model.constraint(Constraint::Braiding, a_x), model.constraint(Constraint::Braiding, a_y));
  return model.compose(braid_parts, model.compose(dist, unbraid));
}

}  // namespace anncat
