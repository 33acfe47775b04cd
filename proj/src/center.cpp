#include "anncat/center.hpp"

#include <algorithm>
#include <string>

namespace anncat {

std::strong_ordering CenterObject::operator<=>(const CenterObject& other) const {
  if (auto c = idx(a) <=> idx(other.a); c != 0) return c;
  return std::lexicographical_compare_three_way(
      u.begin(), u.end(), other.u.begin(), other.u.end(),
      [](ModuleElement x, ModuleElement y) { return idx(x) <=> idx(y); });
}

namespace {

bool is_central(const FiniteRing& r, RingElement a) {
  for (auto x : r.elements())
    if (r.mul(a, x) != r.mul(x, a)) return false;
  return true;
}

// u(xy) = x.u(y) + u(x).y
bool derivation_holds(const AnnStructure& s, const std::vector<ModuleElement>& u, RingElement x, RingElement y) {
  const Bimodule& m = s.module();
  return u[idx(s.ring().mul(x, y))] == m.add(m.left(x, u[idx(y)]), m.right(u[idx(x)], y));
}

// lambda(a, x, y) = u(x + y) - u(x) - u(y)
bool defect_holds(const AnnStructure& s, RingElement a, const std::vector<ModuleElement>& u, RingElement x,
                  RingElement y) {
  const Bimodule& m = s.module();
  const ModuleElement rhs = m.sub(m.sub(u[idx(s.ring().add(x, y))], u[idx(x)]), u[idx(y)]);
  return s.lambda(a, x, y) == rhs;
}

std::string describe(const CenterObject& p) {
  std::string out = "(" + std::to_string(idx(p.a)) + ", [";
  for (std::size_t i = 0; i < p.u.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(idx(p.u[i]));
  }
  return out + "])";
}

void require_member(const CenterCategory& c, const CenterObject& p) {
  if (!c.contains(p)) throw Error(ErrorCode::NotInCenter, "object " + describe(p) + " is not in the center");
}

CenterObject closed(const CenterCategory& c, CenterObject p, const char* op) {
  if (!c.contains(p)) {
    throw Error(ErrorCode::ClosureViolation, std::string(op) + " produced " + describe(p) + " outside the center");
  }
  return p;
}

struct Law {
  bool derivation;
  RingElement x, y;
};

// Backtracking over u in index order; each law is tested as soon as the last
// of its indices is assigned.
class Enumerator {
 public:
  explicit Enumerator(const AnnStructure& s) : s_(s), n_(s.ring().size()), laws_(n_) {
    const FiniteRing& r = s.ring();
    for (auto x : r.elements()) {
      for (auto y : r.elements()) {
        const std::size_t d = std::max({idx(x), idx(y), idx(r.mul(x, y))});
        const std::size_t c = std::max({idx(x), idx(y), idx(r.add(x, y))});
        laws_[d].push_back({true, x, y});
        laws_[c].push_back({false, x, y});
      }
    }
  }

  void run(RingElement a, std::vector<CenterObject>& out) {
    a_ = a;
    u_.assign(n_, s_.module().zero());
    extend(0, out);
  }

 private:
  void extend(std::size_t k, std::vector<CenterObject>& out) {
    if (k == n_) {
      out.push_back({a_, u_});
      return;
    }
    const std::size_t choices = k == idx(s_.ring().one()) ? 1 : s_.module().size();
    for (std::size_t v = 0; v < choices; ++v) {
      u_[k] = k == idx(s_.ring().one()) ? s_.module().zero() : module_element(v);
      if (consistent(k)) extend(k + 1, out);
    }
  }

  bool consistent(std::size_t k) const {
    for (const auto& law : laws_[k]) {
      const bool ok = law.derivation ? derivation_holds(s_, u_, law.x, law.y) : defect_holds(s_, a_, u_, law.x, law.y);
      if (!ok) return false;
    }
    return true;
  }

  const AnnStructure& s_;
  std::size_t n_;
  std::vector<std::vector<Law>> laws_;
  RingElement a_{};
  std::vector<ModuleElement> u_;
};

}  // namespace

bool is_center_object(const AnnStructure& s, const CenterObject& p) {
  const FiniteRing& r = s.ring();
  if (!r.contains(p.a) || p.u.size() != r.size()) return false;
  for (auto m : p.u)
    if (!s.module().contains(m)) return false;
  if (!is_central(r, p.a)) return false;
  if (p(r.one()) != s.module().zero()) return false;
  for (auto x : r.elements()) {
    for (auto y : r.elements()) {
      if (!derivation_holds(s, p.u, x, y) || !defect_holds(s, p.a, p.u, x, y)) return false;
    }
  }
  return true;
}

CenterCategory::CenterCategory(AnnStructure base, std::vector<CenterObject> objects)
    : base_(std::move(base)), objects_(std::move(objects)) {
  std::sort(objects_.begin(), objects_.end());
}

std::optional<std::size_t> CenterCategory::index_of(const CenterObject& p) const {
  auto it = std::lower_bound(objects_.begin(), objects_.end(), p);
  if (it == objects_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - objects_.begin());
}

CenterObject CenterCategory::neutral() const {
  const FiniteRing& r = base_.ring();
  CenterObject out{r.zero(), {}};
  for (auto x : r.elements()) out.u.push_back(base_.lambda(x, r.zero(), r.zero()));
  return out;
}

CenterObject CenterCategory::unit() const {
  return {base_.ring().one(), std::vector<ModuleElement>(base_.ring().size(), base_.module().zero())};
}

CenterCategory enumerate_center(const AnnStructure& s) {
  const auto base = check_suite(ReducedModel(s), SuiteId::FullAnn);
  for (const auto& report : base) {
    if (!report.passed) {
      throw Error(ErrorCode::InvalidBase,
                  "base fails FULL_ANN at diagram " + std::string(to_string(report.diagram)));
    }
  }
  std::vector<CenterObject> objects;
  Enumerator e(s);
  for (auto a : ring_center(s.ring())) e.run(a, objects);
  return CenterCategory(s, std::move(objects));
}

CenterObject center_sum(const CenterCategory& c, const CenterObject& p, const CenterObject& q) {
  require_member(c, p);
  require_member(c, q);
  const AnnStructure& s = c.base();
  const Bimodule& m = s.module();
  CenterObject out{s.ring().add(p.a, q.a), {}};
  for (auto x : s.ring().elements()) out.u.push_back(m.sub(m.add(p(x), q(x)), s.lambda(x, p.a, q.a)));
  return closed(c, std::move(out), "center_sum");
}

CenterObject center_neg(const CenterCategory& c, const CenterObject& p) {
  require_member(c, p);
  const AnnStructure& s = c.base();
  const FiniteRing& r = s.ring();
  const RingElement na = r.neg(p.a);
  CenterObject out{na, {}};
  for (auto x : r.elements()) out.u.push_back(s.module().sub(s.lambda(x, p.a, na), p(x)));
  return closed(c, std::move(out), "center_neg");
}

CenterObject center_product(const CenterCategory& c, const CenterObject& p, const CenterObject& q) {
  require_member(c, p);
  require_member(c, q);
  const AnnStructure& s = c.base();
  const Bimodule& m = s.module();
  CenterObject out{s.ring().mul(p.a, q.a), {}};
  for (auto x : s.ring().elements()) out.u.push_back(m.add(m.right(p(x), q.a), m.left(p.a, q(x))));
  return closed(c, std::move(out), "center_product");
}

Morphism center_braiding(const CenterCategory& c, const CenterObject& p, const CenterObject& q) {
  require_member(c, p);
  require_member(c, q);
  return {static_cast<Object>(idx(c.base().ring().mul(p.a, q.a))), p(q.a)};
}

std::vector<ModuleElement> center_hom_set(const CenterCategory& c, const CenterObject& p, const CenterObject& q) {
  std::vector<ModuleElement> out;
  if (p.a != q.a) return out;
  const AnnStructure& s = c.base();
  const Bimodule& m = s.module();
  for (auto f : m.elements()) {
    bool ok = true;
    for (auto x : s.ring().elements()) {
      if (m.add(q(x), m.right(f, x)) != m.add(m.left(x, f), p(x))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(f);
  }
  return out;
}

CenterModel::CenterModel(const CenterCategory& c) : c_(c) {
  const std::size_t n = c.size();
  zero_ = static_cast<Object>(c.index_of(c.neutral()).value_or(0));
  unit_ = static_cast<Object>(c.index_of(c.unit()).value_or(0));
  if (!c.contains(c.neutral()) || !c.contains(c.unit())) {
    throw Error(ErrorCode::ClosureViolation, "the center lacks its neutral or unit object");
  }
  sum_.resize(n * n);
  product_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sum_[i * n + j] = static_cast<Object>(*c.index_of(center_sum(c, c[i], c[j])));
      product_[i * n + j] = static_cast<Object>(*c.index_of(center_product(c, c[i], c[j])));
    }
  }
}

Morphism CenterModel::constraint(Constraint name, std::span<const Object> o) const {
  if (o.size() != arity(name)) {
    throw Error(ErrorCode::ArityMismatch, std::string("constraint ") + std::string(to_string(name)) + " takes " +
                                              std::to_string(arity(name)) + " objects, got " +
                                              std::to_string(o.size()));
  }
  const AnnStructure& s = c_.base();
  const ModuleElement zero = s.module().zero();
  switch (name) {
    case Constraint::AssocPlus: return {oplus(oplus(o[0], o[1]), o[2]), zero};
    case Constraint::CommPlus: return {oplus(o[0], o[1]), s.eta(base(o[0]), base(o[1]))};
    case Constraint::UnitPlusLeft:
    case Constraint::UnitPlusRight:
    case Constraint::UnitLeft:
    case Constraint::UnitRight:
    case Constraint::Theta: return {o[0], zero};
    case Constraint::Assoc: return {otimes(otimes(o[0], o[1]), o[2]), zero};
    case Constraint::DistLeft:
      return {otimes(o[0], oplus(o[1], o[2])), s.lambda(base(o[0]), base(o[1]), base(o[2]))};
    case Constraint::DistRight: return {otimes(oplus(o[0], o[1]), o[2]), zero};
    case Constraint::NullLeft: return {otimes(o[0], zero_), zero};
    case Constraint::NullRight: return {otimes(zero_, o[0]), zero};
    case Constraint::Interchange:
      return {oplus(oplus(o[0], o[1]), oplus(o[2], o[3])), s.eta(base(o[1]), base(o[2]))};
    case Constraint::Braiding: return {otimes(o[0], o[1]), c_[o[0]](base(o[1]))};
  }
  throw Error(ErrorCode::ArityMismatch, "unknown constraint");
}

std::vector<CheckReport> verify_center(const AnnStructure& s, const CheckOptions& options) {
  const CenterCategory c = enumerate_center(s);
  const CenterModel model(c);
  return check_suite(model, SuiteId::BraidedFull, options);
}

std::optional<std::pair<CenterObject, CenterObject>> find_nonsymmetric_witness(const CenterCategory& c) {
  const Bimodule& m = c.base().module();
  for (const auto& p : c.objects()) {
    for (const auto& q : c.objects()) {
      if (m.add(p(q.a), q(p.a)) != m.zero()) return std::make_pair(p, q);
    }
  }
  return std::nullopt;
}

}  // namespace anncat
