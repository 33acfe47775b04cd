#pragma once

// The center C_A of an almost-strict Ann-category of type (R, M).
//
// An object is a pair (a, u): a central ring element and a table u : R -> M
// with
//   u(1) = 0
//   u(xy) = x.u(y) + u(x).y
//   lambda(a, x, y) = u(x + y) - u(x) - u(y)
// Objects are kept in canonical order: by a, then by the u-table
// lexicographically.

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "anncat/category_model.hpp"
#include "anncat/diagram_engine.hpp"

namespace anncat {

struct CenterObject {
  RingElement a{};
  std::vector<ModuleElement> u;  // indexed by ring element

  ModuleElement operator()(RingElement x) const { return u[idx(x)]; }

  bool operator==(const CenterObject&) const = default;
  std::strong_ordering operator<=>(const CenterObject& other) const;
};

// Checks every membership condition, including centrality of a. Tables of the
// wrong length are not members.
bool is_center_object(const AnnStructure& s, const CenterObject& p);

class CenterCategory {
 public:
  CenterCategory(AnnStructure base, std::vector<CenterObject> objects);

  const AnnStructure& base() const noexcept { return base_; }
  const std::vector<CenterObject>& objects() const noexcept { return objects_; }
  std::size_t size() const noexcept { return objects_.size(); }
  const CenterObject& operator[](std::size_t i) const { return objects_[i]; }

  std::optional<std::size_t> index_of(const CenterObject& p) const;
  bool contains(const CenterObject& p) const { return index_of(p).has_value(); }

  // (0, x -> lambda(x, 0, 0)) and (1, 0).
  CenterObject neutral() const;
  CenterObject unit() const;

 private:
  AnnStructure base_;
  std::vector<CenterObject> objects_;
};

// Throws InvalidBase when the base fails FULL_ANN.
CenterCategory enumerate_center(const AnnStructure& s);

// All four throw NotInCenter for arguments outside C and ClosureViolation if
// the result falls outside C.
CenterObject center_sum(const CenterCategory& c, const CenterObject& p, const CenterObject& q);
CenterObject center_neg(const CenterCategory& c, const CenterObject& p);
CenterObject center_product(const CenterCategory& c, const CenterObject& p, const CenterObject& q);
// The morphism (a.b, u(b)) of the base.
Morphism center_braiding(const CenterCategory& c, const CenterObject& p, const CenterObject& q);

// { f in M : m(x) + f.x = x.f + u(x) for all x } when p.a == q.a, else empty.
std::vector<ModuleElement> center_hom_set(const CenterCategory& c, const CenterObject& p, const CenterObject& q);

// C_A as a CategoryModel. Objects are indices into c.objects(). Sum and
// product tables are computed once at construction.
//   c+(P,Q)       eta(a, b)
//   Ldist(P,Q,W)  lambda(a, b, c)
//   v(U,V,Z,T)    eta(V.a, Z.a)
//   c(P,Q)        u(b)
// All other constraints are identities.
class CenterModel final : public CategoryModel {
 public:
  explicit CenterModel(const CenterCategory& c);

  std::size_t object_count() const override { return c_.size(); }
  const Bimodule& values() const override { return c_.base().module(); }
  RingElement base(Object x) const override { return c_[x].a; }
  Object zero() const override { return zero_; }
  Object unit() const override { return unit_; }
  Object oplus(Object x, Object y) const override { return sum_[x * c_.size() + y]; }
  Object otimes(Object x, Object y) const override { return product_[x * c_.size() + y]; }
  bool has_braiding() const override { return true; }
  Morphism constraint(Constraint name, std::span<const Object> objects) const override;

  const CenterCategory& category() const noexcept { return c_; }

  using CategoryModel::oplus;
  using CategoryModel::otimes;

 private:
  const CenterCategory& c_;
  Object zero_ = 0;
  Object unit_ = 0;
  std::vector<Object> sum_;
  std::vector<Object> product_;
};

// BRAIDED_FULL on the CenterModel of enumerate_center(s). Throws InvalidBase.
std::vector<CheckReport> verify_center(const AnnStructure& s, const CheckOptions& options = {});

// First pair in canonical order (P outer, Q inner) with u(b) + m(a) != 0.
std::optional<std::pair<CenterObject, CenterObject>> find_nonsymmetric_witness(const CenterCategory& c);

}  // namespace anncat
