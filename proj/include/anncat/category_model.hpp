#pragma once

// The reduced category of type (R, M) in almost-strict normalization.
//
// Objects are ring elements; every morphism is an endomorphism (x, m) with
// m in M, and composition adds values. The only non-identity constraints are
// the additive commutativity c+ (table eta), the left distributivity (table
// lambda) and, when present, the braiding (table beta). Every other named
// constraint evaluates to the identity.

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "anncat/finite_algebra.hpp"

namespace anncat {

class AnnStructure {
 public:
  // Tables are row-major: eta[x][y], lambda[a][x][y], beta[x][y]. A present
  // beta requires a commutative ring. Validity as an Ann-category is decided
  // by the diagram suites, not here.
  AnnStructure(std::shared_ptr<const FiniteRing> ring, std::shared_ptr<const Bimodule> module,
               std::vector<ModuleElement> eta, std::vector<ModuleElement> lambda,
               std::optional<std::vector<ModuleElement>> beta);

  // eta = lambda = 0, beta = 0 when braided is set.
  static AnnStructure strict(std::shared_ptr<const FiniteRing> ring, std::shared_ptr<const Bimodule> module,
                             bool braided);

  const FiniteRing& ring() const noexcept { return *ring_; }
  const Bimodule& module() const noexcept { return *module_; }
  std::shared_ptr<const FiniteRing> ring_ptr() const noexcept { return ring_; }
  std::shared_ptr<const Bimodule> module_ptr() const noexcept { return module_; }

  ModuleElement eta(RingElement x, RingElement y) const { return eta_[idx(x) * n_ + idx(y)]; }
  ModuleElement lambda(RingElement a, RingElement x, RingElement y) const {
    return lambda_[(idx(a) * n_ + idx(x)) * n_ + idx(y)];
  }
  bool has_braiding() const noexcept { return beta_.has_value(); }
  // Throws BraidingAbsent.
  ModuleElement beta(RingElement x, RingElement y) const;

  const std::vector<ModuleElement>& eta_table() const noexcept { return eta_; }
  const std::vector<ModuleElement>& lambda_table() const noexcept { return lambda_; }
  const std::optional<std::vector<ModuleElement>>& beta_table() const noexcept { return beta_; }

  // beta(x, y) + beta(y, x) = 0 for all x, y. False when unbraided.
  bool braiding_is_symmetric() const;

  bool operator==(const AnnStructure& other) const;

 private:
  std::shared_ptr<const FiniteRing> ring_;
  std::shared_ptr<const Bimodule> module_;
  std::size_t n_ = 0;
  std::vector<ModuleElement> eta_;
  std::vector<ModuleElement> lambda_;
  std::optional<std::vector<ModuleElement>> beta_;
};

// Named constraints. Object order follows the usual subscripts:
//   AssocPlus(X,Y,Z)   a+ : X+(Y+Z) -> (X+Y)+Z
//   CommPlus(X,Y)      c+ : X+Y -> Y+X
//   UnitPlusLeft(X)    g  : O+X -> X
//   UnitPlusRight(X)   d  : X+O -> X
//   Assoc(X,Y,Z)       a  : X(YZ) -> (XY)Z
//   UnitLeft(X)        l  : 1X -> X
//   UnitRight(X)       r  : X1 -> X
//   DistLeft(A,X,Y)    A(X+Y) -> AX+AY
//   DistRight(X,Y,A)   (X+Y)A -> XA+YA
//   NullLeft(A)        A.O -> O
//   NullRight(A)       O.A -> O
//   Interchange(U,V,Z,T)  v : (U+V)+(Z+T) -> (U+Z)+(V+T)
//   Braiding(X,Y)      c  : XY -> YX
//   Theta(X)           X -> X.O, the additive unit datum of the center
enum class Constraint {
  AssocPlus,
  CommPlus,
  UnitPlusLeft,
  UnitPlusRight,
  Assoc,
  UnitLeft,
  UnitRight,
  DistLeft,
  DistRight,
  NullLeft,
  NullRight,
  Interchange,
  Braiding,
  Theta,
};

std::size_t arity(Constraint c) noexcept;
std::string_view to_string(Constraint c) noexcept;

using Object = std::uint32_t;

// An endomorphism of `object` with value in M. For the reduced model the
// object is a ring element index; other models use their own object indices.
struct Morphism {
  Object object = 0;
  ModuleElement value{};

  bool operator==(const Morphism&) const = default;
};

// Abstract contract evaluated by the diagram engine. Objects are dense
// indices; each object lies over an object of the reduced base category.
// Morphism algebra is shared: composition and the sum add values, the tensor
// product uses x.n + m.y over the base objects.
class CategoryModel {
 public:
  virtual ~CategoryModel() = default;

  virtual std::size_t object_count() const = 0;
  virtual const Bimodule& values() const = 0;
  virtual RingElement base(Object x) const = 0;
  virtual Object zero() const = 0;
  virtual Object unit() const = 0;
  virtual Object oplus(Object x, Object y) const = 0;
  virtual Object otimes(Object x, Object y) const = 0;
  virtual bool has_braiding() const = 0;
  // Throws ArityMismatch, BraidingAbsent.
  virtual Morphism constraint(Constraint name, std::span<const Object> objects) const = 0;

  Morphism identity(Object x) const { return {x, values().zero()}; }
  // after o before. Throws ObjectMismatch when the base objects differ.
  Morphism compose(const Morphism& after, const Morphism& before) const;
  Morphism inverse(const Morphism& f) const { return {f.object, values().neg(f.value)}; }
  Morphism oplus(const Morphism& f, const Morphism& g) const;
  Morphism otimes(const Morphism& f, const Morphism& g) const;
};

// How the reduced model evaluates the right distributivity and the null
// isomorphisms A.O -> O, O.A -> O.
//   Identity       all three are identities (almost-strict normalization).
//   Reconstructed  right distributivity is read off the braiding square
//                  (rdist_from_braiding); Lhat^A is the unique value making
//                  L^A unit-compatible, -lambda(A,0,0); Rhat^A likewise for
//                  R^A, minus the reconstructed Rdist(O,O,A). Needs a braiding.
// Both agree on every instance whose lambda is normalized and whose braiding
// square commutes.
enum class DerivedConstraints { Identity, Reconstructed };

class ReducedModel final : public CategoryModel {
 public:
  // Throws BraidingAbsent for Reconstructed on an unbraided structure.
  explicit ReducedModel(const AnnStructure& structure,
                        DerivedConstraints derived = DerivedConstraints::Identity);

  std::size_t object_count() const override { return s_.ring().size(); }
  const Bimodule& values() const override { return s_.module(); }
  RingElement base(Object x) const override { return ring_element(x); }
  Object zero() const override { return obj(s_.ring().zero()); }
  Object unit() const override { return obj(s_.ring().one()); }
  Object oplus(Object x, Object y) const override { return obj(s_.ring().add(base(x), base(y))); }
  Object otimes(Object x, Object y) const override { return obj(s_.ring().mul(base(x), base(y))); }
  bool has_braiding() const override { return s_.has_braiding(); }
  Morphism constraint(Constraint name, std::span<const Object> objects) const override;

  const AnnStructure& structure() const noexcept { return s_; }
  DerivedConstraints derived() const noexcept { return derived_; }

  using CategoryModel::oplus;
  using CategoryModel::otimes;

 private:
  static Object obj(RingElement r) { return static_cast<Object>(idx(r)); }

  ModuleElement rdist_value(RingElement x, RingElement y, RingElement a) const;

  const AnnStructure& s_;
  DerivedConstraints derived_;
};

// Reduced-model morphism operations on an AnnStructure.
Morphism compose(const AnnStructure& s, const Morphism& f, const Morphism& g);
Morphism oplus_mor(const AnnStructure& s, const Morphism& f, const Morphism& g);
Morphism otimes_mor(const AnnStructure& s, const Morphism& f, const Morphism& g);
Morphism constraint(const AnnStructure& s, Constraint name, std::span<const RingElement> objects);

// Right distributivity (X+Y)A -> XA+YA read off the braiding square:
// (c+c) o L o c^-1, with value beta(a,x) + beta(a,y) + lambda(a,x,y) - beta(a,x+y).
// It vanishes everywhere exactly when the braiding square commutes with the
// identity right distributivity.
Morphism rdist_from_braiding(const AnnStructure& s, RingElement x, RingElement y, RingElement a);

}  // namespace anncat
