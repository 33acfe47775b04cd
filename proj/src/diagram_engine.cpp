#include "anncat/diagram_engine.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <thread>

namespace anncat {

namespace {

// Shorthand for writing paths against a model. seq() composes in
// application order: seq({f, g, h}) = h o g o f.
class PathBuilder {
 public:
  explicit PathBuilder(const CategoryModel& m) : m_(m) {}

  Object O() const { return m_.zero(); }
  Object I() const { return m_.unit(); }
  Object add(Object x, Object y) const { return m_.oplus(x, y); }
  Object mul(Object x, Object y) const { return m_.otimes(x, y); }

  Morphism id(Object x) const { return m_.identity(x); }
  Morphism inv(const Morphism& f) const { return m_.inverse(f); }
  Morphism sum(const Morphism& f, const Morphism& g) const { return m_.oplus(f, g); }
  Morphism tensor(const Morphism& f, const Morphism& g) const { return m_.otimes(f, g); }

  Morphism seq(std::initializer_list<Morphism> steps) const {
    auto it = steps.begin();
    Morphism acc = *it;
    for (++it; it != steps.end(); ++it) acc = m_.compose(*it, acc);
    return acc;
  }

  Morphism aplus(Object x, Object y, Object z) const { return k(Constraint::AssocPlus, {x, y, z}); }
  Morphism cplus(Object x, Object y) const { return k(Constraint::CommPlus, {x, y}); }
  Morphism g(Object x) const { return k(Constraint::UnitPlusLeft, {x}); }
  Morphism d(Object x) const { return k(Constraint::UnitPlusRight, {x}); }
  Morphism a(Object x, Object y, Object z) const { return k(Constraint::Assoc, {x, y, z}); }
  Morphism l(Object x) const { return k(Constraint::UnitLeft, {x}); }
  Morphism r(Object x) const { return k(Constraint::UnitRight, {x}); }
  Morphism L(Object a, Object x, Object y) const { return k(Constraint::DistLeft, {a, x, y}); }
  Morphism R(Object x, Object y, Object a) const { return k(Constraint::DistRight, {x, y, a}); }
  Morphism Lhat(Object x) const { return k(Constraint::NullLeft, {x}); }
  Morphism Rhat(Object x) const { return k(Constraint::NullRight, {x}); }
  Morphism v(Object u, Object x, Object z, Object t) const { return k(Constraint::Interchange, {u, x, z, t}); }
  Morphism c(Object x, Object y) const { return k(Constraint::Braiding, {x, y}); }

 private:
  Morphism k(Constraint name, std::initializer_list<Object> objs) const {
    return m_.constraint(name, std::span<const Object>(objs.begin(), objs.size()));
  }

  const CategoryModel& m_;
};

using Paths = std::pair<Morphism, Morphism>;
using PathFn = Paths (*)(const PathBuilder&, std::span<const Object>);

struct DiagramDef {
  DiagramId id;
  std::string_view name;
  std::size_t arity;
  bool braided;
  PathFn paths;
};

// (Ann-1): L^A compatible with a+.
Paths ann1_l_assoc(const PathBuilder& p, std::span<const Object> t) {
  const Object A = t[0], X = t[1], Y = t[2], Z = t[3];
  const Object AX = p.mul(A, X), AY = p.mul(A, Y), AZ = p.mul(A, Z);
  return {p.seq({p.L(A, X, p.add(Y, Z)), p.sum(p.id(AX), p.L(A, Y, Z)), p.aplus(AX, AY, AZ)}),
          p.seq({p.tensor(p.id(A), p.aplus(X, Y, Z)), p.L(A, p.add(X, Y), Z), p.sum(p.L(A, X, Y), p.id(AZ))})};
}

// (Ann-1): L^A compatible with c+.
Paths ann1_l_comm(const PathBuilder& p, std::span<const Object> t) {
  const Object A = t[0], X = t[1], Y = t[2];
  return {p.seq({p.L(A, X, Y), p.cplus(p.mul(A, X), p.mul(A, Y))}),
          p.seq({p.tensor(p.id(A), p.cplus(X, Y)), p.L(A, Y, X)})};
}

// (Ann-1): R^A compatible with a+.
Paths ann1_r_assoc(const PathBuilder& p, std::span<const Object> t) {
  const Object X = t[0], Y = t[1], Z = t[2], A = t[3];
  const Object XA = p.mul(X, A), YA = p.mul(Y, A), ZA = p.mul(Z, A);
  return {p.seq({p.R(X, p.add(Y, Z), A), p.sum(p.id(XA), p.R(Y, Z, A)), p.aplus(XA, YA, ZA)}),
          p.seq({p.tensor(p.aplus(X, Y, Z), p.id(A)), p.R(p.add(X, Y), Z, A), p.sum(p.R(X, Y, A), p.id(ZA))})};
}

// (Ann-1): R^A compatible with c+.
Paths ann1_r_comm(const PathBuilder& p, std::span<const Object> t) {
  const Object X = t[0], Y = t[1], A = t[2];
  return {p.seq({p.R(X, Y, A), p.cplus(p.mul(X, A), p.mul(Y, A))}),
          p.seq({p.tensor(p.cplus(X, Y), p.id(A)), p.R(Y, X, A)})};
}

// (1): A(B(X+Y)) -> (AB)X + (AB)Y.
Paths d1(const PathBuilder& p, std::span<const Object> t) {
  const Object A = t[0], B = t[1], X = t[2], Y = t[3];
  return {p.seq({p.a(A, B, p.add(X, Y)), p.L(p.mul(A, B), X, Y)}),
          p.seq({p.tensor(p.id(A), p.L(B, X, Y)), p.L(A, p.mul(B, X), p.mul(B, Y)),
                 p.sum(p.a(A, B, X), p.a(A, B, Y))})};
}

// (2): (X+Y)(BA) -> (XB)A + (YB)A.
Paths d2(const PathBuilder& p, std::span<const Object> t) {
  const Object A = t[0], B = t[1], X = t[2], Y = t[3];
  return {p.seq({p.a(p.add(X, Y), B, A), p.tensor(p.R(X, Y, B), p.id(A)), p.R(p.mul(X, B), p.mul(Y, B), A)}),
          p.seq({p.R(X, Y, p.mul(B, A)), p.sum(p.a(X, B, A), p.a(Y, B, A))})};
}

// (3): A((X+Y)B) -> (AX)B + (AY)B.
Paths d3(const PathBuilder& p, std::span<const Object> t) {
  const Object A = t[0], B = t[1], X = t[2], Y = t[3];
  return {p.seq({p.a(A, p.add(X, Y), B), p.tensor(p.L(A, X, Y), p.id(B)), p.R(p.mul(A, X), p.mul(A, Y), B)}),
          p.seq({p.tensor(p.id(A), p.R(X, Y, B)), p.L(A, p.mul(X, B), p.mul(Y, B)),
                 p.sum(p.a(A, X, B), p.a(A, Y, B))})};
}

// (4): (A+B)(X+Y) -> (AX+AY) + (BX+BY).
Paths d4(const PathBuilder& p, std::span<const Object> t) {
  const Object A = t[0], B = t[1], X = t[2], Y = t[3];
  const Object AX = p.mul(A, X), BX = p.mul(B, X), AY = p.mul(A, Y), BY = p.mul(B, Y);
  return {p.seq({p.L(p.add(A, B), X, Y), p.sum(p.R(A, B, X), p.R(A, B, Y)), p.v(AX, BX, AY, BY)}),
          p.seq({p.R(A, B, p.add(X, Y)), p.sum(p.L(A, X, Y), p.L(B, X, Y))})};
}

// (5.1): 1(X+Y) -> X+Y.
Paths d5_1(const PathBuilder& p, std::span<const Object> t) {
  const Object X = t[0], Y = t[1];
  return {p.seq({p.L(p.I(), X, Y), p.sum(p.l(X), p.l(Y))}), p.l(p.add(X, Y))};
}

// (5.2): (X+Y)1 -> X+Y.
Paths d5_2(const PathBuilder& p, std::span<const Object> t) {
  const Object X = t[0], Y = t[1];
  return {p.seq({p.R(X, Y, p.I()), p.sum(p.r(X), p.r(Y))}), p.r(p.add(X, Y))};
}

// (6): A(X+Y) -> XA + YA.
Paths d6(const PathBuilder& p, std::span<const Object> t) {
  const Object A = t[0], X = t[1], Y = t[2];
  return {p.seq({p.c(A, p.add(X, Y)), p.R(X, Y, A)}), p.seq({p.L(A, X, Y), p.sum(p.c(A, X), p.c(A, Y))})};
}

// (7): X.O -> O.
Paths d7(const PathBuilder& p, std::span<const Object> t) {
  const Object X = t[0];
  return {p.seq({p.c(X, p.O()), p.Rhat(X)}), p.Lhat(X)};
}

// (8): (X+Y)(A+B) -> (XA+XB) + (YA+YB).
Paths d8(const PathBuilder& p, std::span<const Object> t) {
  const Object A = t[0], B = t[1], X = t[2], Y = t[3];
  const Object AB = p.add(A, B), XY = p.add(X, Y);
  const Object AX = p.mul(A, X), AY = p.mul(A, Y), BX = p.mul(B, X), BY = p.mul(B, Y);
  return {p.seq({p.c(XY, AB), p.L(AB, X, Y), p.sum(p.c(AB, X), p.c(AB, Y)), p.sum(p.L(X, A, B), p.L(Y, A, B))}),
          p.seq({p.L(XY, A, B), p.sum(p.c(XY, A), p.c(XY, B)), p.sum(p.L(A, X, Y), p.L(B, X, Y)),
                 p.v(AX, AY, BX, BY), p.sum(p.sum(p.c(A, X), p.c(B, X)), p.sum(p.c(A, Y), p.c(B, Y)))})};
}

// Hexagon: X(YZ) -> Y(ZX).
Paths b1(const PathBuilder& p, std::span<const Object> t) {
  const Object X = t[0], Y = t[1], Z = t[2];
  return {p.seq({p.c(X, p.mul(Y, Z)), p.inv(p.a(Y, Z, X))}),
          p.seq({p.a(X, Y, Z), p.tensor(p.c(X, Y), p.id(Z)), p.inv(p.a(Y, X, Z)), p.tensor(p.id(Y), p.c(X, Z))})};
}

// Hexagon: (XY)Z -> (ZX)Y.
Paths b2(const PathBuilder& p, std::span<const Object> t) {
  const Object X = t[0], Y = t[1], Z = t[2];
  return {p.seq({p.c(p.mul(X, Y), Z), p.a(Z, X, Y)}),
          p.seq({p.inv(p.a(X, Y, Z)), p.tensor(p.id(X), p.c(Y, Z)), p.a(X, Z, Y), p.tensor(p.c(X, Z), p.id(Y))})};
}

Paths c_zero(const PathBuilder& p, std::span<const Object>) {
  return {p.c(p.O(), p.O()), p.id(p.mul(p.O(), p.O()))};
}

// c compatible with (1, l, r): X1 -> 1X -> X equals r.
Paths c_unit(const PathBuilder& p, std::span<const Object> t) {
  const Object X = t[0];
  return {p.seq({p.c(X, p.I()), p.l(X)}), p.r(X)};
}

Paths l1(const PathBuilder& p, std::span<const Object>) { return {p.Lhat(p.O()), p.Rhat(p.O())}; }

Paths l2(const PathBuilder& p, std::span<const Object> t) {
  const Object A = t[0], B = t[1];
  return {p.seq({p.L(p.O(), A, B), p.sum(p.Rhat(A), p.Rhat(B)), p.g(p.O())}), p.Rhat(p.add(A, B))};
}

Paths l3(const PathBuilder& p, std::span<const Object> t) {
  const Object A = t[0], B = t[1];
  return {p.seq({p.R(A, B, p.O()), p.sum(p.Lhat(A), p.Lhat(B)), p.d(p.O())}), p.Lhat(p.add(A, B))};
}

// 1.O -> O.
Paths l4(const PathBuilder& p, std::span<const Object>) { return {p.l(p.O()), p.Lhat(p.I())}; }

// O.1 -> O.
Paths l5(const PathBuilder& p, std::span<const Object>) { return {p.r(p.O()), p.Rhat(p.I())}; }

Paths l6(const PathBuilder& p, std::span<const Object> t) {
  const Object A = t[0];
  return {p.Lhat(A), p.seq({p.c(A, p.O()), p.Rhat(A)})};
}

Paths l7(const PathBuilder& p, std::span<const Object> t) {
  const Object A = t[0], B = t[1];
  return {p.seq({p.a(p.O(), A, B), p.tensor(p.Rhat(A), p.id(B)), p.Rhat(B)}), p.Rhat(p.mul(A, B))};
}

Paths l8(const PathBuilder& p, std::span<const Object> t) {
  const Object A = t[0], B = t[1];
  return {p.seq({p.a(A, p.O(), B), p.tensor(p.Lhat(A), p.id(B)), p.Rhat(B)}),
          p.seq({p.tensor(p.id(A), p.Rhat(B)), p.Lhat(A)})};
}

Paths l9(const PathBuilder& p, std::span<const Object> t) {
  const Object A = t[0], B = t[1];
  return {p.seq({p.a(A, B, p.O()), p.Lhat(p.mul(A, B))}), p.seq({p.tensor(p.id(A), p.Lhat(B)), p.Lhat(A)})};
}

Paths l10(const PathBuilder& p, std::span<const Object> t) {
  const Object A = t[0], B = t[1];
  const Object AB = p.mul(A, B);
  return {p.seq({p.L(A, p.O(), B), p.sum(p.Lhat(A), p.id(AB)), p.g(AB)}), p.tensor(p.id(A), p.g(B))};
}

Paths l11(const PathBuilder& p, std::span<const Object> t) {
  const Object A = t[0], B = t[1];
  const Object BA = p.mul(B, A);
  return {p.seq({p.R(p.O(), B, A), p.sum(p.Rhat(A), p.id(BA)), p.g(BA)}), p.tensor(p.g(B), p.id(A))};
}

Paths l12(const PathBuilder& p, std::span<const Object> t) {
  const Object A = t[0], B = t[1];
  const Object AB = p.mul(A, B);
  return {p.seq({p.L(A, B, p.O()), p.sum(p.id(AB), p.Lhat(A)), p.d(AB)}), p.tensor(p.id(A), p.d(B))};
}

Paths l13(const PathBuilder& p, std::span<const Object> t) {
  const Object A = t[0], B = t[1];
  const Object AB = p.mul(A, B);
  return {p.seq({p.R(A, p.O(), B), p.sum(p.id(AB), p.Rhat(B)), p.d(AB)}), p.tensor(p.d(A), p.id(B))};
}

constexpr std::array<DiagramDef, 30> kDiagrams{{
    {DiagramId::ANN1_L_ASSOC, "ANN1_L_ASSOC", 4, false, ann1_l_assoc},
    {DiagramId::ANN1_L_COMM, "ANN1_L_COMM", 3, false, ann1_l_comm},
    {DiagramId::ANN1_R_ASSOC, "ANN1_R_ASSOC", 4, false, ann1_r_assoc},
    {DiagramId::ANN1_R_COMM, "ANN1_R_COMM", 3, false, ann1_r_comm},
    {DiagramId::D1, "D1", 4, false, d1},
    {DiagramId::D2, "D2", 4, false, d2},
    {DiagramId::D3, "D3", 4, false, d3},
    {DiagramId::D4, "D4", 4, false, d4},
    {DiagramId::D5_1, "D5_1", 2, false, d5_1},
    {DiagramId::D5_2, "D5_2", 2, false, d5_2},
    {DiagramId::D6, "D6", 3, true, d6},
    {DiagramId::D7, "D7", 1, true, d7},
    {DiagramId::D8, "D8", 4, true, d8},
    {DiagramId::B1, "B1", 3, true, b1},
    {DiagramId::B2, "B2", 3, true, b2},
    {DiagramId::C_ZERO, "C_ZERO", 0, true, c_zero},
    {DiagramId::C_UNIT, "C_UNIT", 1, true, c_unit},
    {DiagramId::L1, "L1", 0, false, l1},
    {DiagramId::L2, "L2", 2, false, l2},
    {DiagramId::L3, "L3", 2, false, l3},
    {DiagramId::L4, "L4", 0, false, l4},
    {DiagramId::L5, "L5", 0, false, l5},
    {DiagramId::L6, "L6", 1, true, l6},
    {DiagramId::L7, "L7", 2, false, l7},
    {DiagramId::L8, "L8", 2, false, l8},
    {DiagramId::L9, "L9", 2, false, l9},
    {DiagramId::L10, "L10", 2, false, l10},
    {DiagramId::L11, "L11", 2, false, l11},
    {DiagramId::L12, "L12", 2, false, l12},
    {DiagramId::L13, "L13", 2, false, l13},
}};

const DiagramDef& def(DiagramId id) {
  const auto& d = kDiagrams[static_cast<std::size_t>(id)];
  if (d.id != id) throw std::logic_error("diagram table out of order");
  return d;
}

struct ChunkResult {
  std::size_t mismatches = 0;
  std::vector<Witness> witnesses;
};

void decode_tuple(std::size_t rank, std::size_t n, std::span<Object> out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Object>(rank % n);
    rank /= n;
  }
}

ChunkResult check_range(const CategoryModel& model, const DiagramDef& d, std::size_t begin, std::size_t end,
                        std::size_t cap) {
  ChunkResult result;
  const PathBuilder builder(model);
  const std::size_t n = model.object_count();
  std::vector<Object> tuple(d.arity);
  for (std::size_t rank = begin; rank < end; ++rank) {
    decode_tuple(rank, n, tuple);
    const auto [left, right] = d.paths(builder, tuple);
    if (model.base(left.object) != model.base(right.object)) {
      throw std::logic_error(std::string("paths of ") + std::string(d.name) + " end at different objects");
    }
    if (left.value != right.value) {
      ++result.mismatches;
      if (result.witnesses.size() < cap) result.witnesses.push_back({tuple, left.value, right.value});
    }
  }
  return result;
}

std::size_t tuple_count(std::size_t n, std::size_t arity) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) total *= n;
  return total;
}

}  // namespace

std::string_view to_string(DiagramId id) noexcept { return kDiagrams[static_cast<std::size_t>(id)].name; }

std::optional<DiagramId> diagram_from_string(std::string_view name) noexcept {
  for (const auto& d : kDiagrams)
    if (d.name == name) return d.id;
  return std::nullopt;
}

std::size_t arity(DiagramId id) noexcept { return kDiagrams[static_cast<std::size_t>(id)].arity; }
bool needs_braiding(DiagramId id) noexcept { return kDiagrams[static_cast<std::size_t>(id)].braided; }

const std::vector<DiagramId>& all_diagrams() {
  static const std::vector<DiagramId> ids = [] {
    std::vector<DiagramId> out;
    for (const auto& d : kDiagrams) out.push_back(d.id);
    return out;
  }();
  return ids;
}

std::string_view to_string(SuiteId id) noexcept {
  switch (id) {
    case SuiteId::FullAnn: return "FULL_ANN";
    case SuiteId::BraidedFull: return "BRAIDED_FULL";
    case SuiteId::CoreIndependent: return "CORE_INDEPENDENT";
    case SuiteId::Laplaza: return "LAPLAZA";
    case SuiteId::Ringlike: return "RINGLIKE";
  }
  return "?";
}

std::optional<SuiteId> suite_from_string(std::string_view name) noexcept {
  if (name == "full" || name == "FULL_ANN") return SuiteId::FullAnn;
  if (name == "braided" || name == "BRAIDED_FULL") return SuiteId::BraidedFull;
  if (name == "core" || name == "CORE_INDEPENDENT") return SuiteId::CoreIndependent;
  if (name == "laplaza" || name == "LAPLAZA") return SuiteId::Laplaza;
  if (name == "ringlike" || name == "RINGLIKE") return SuiteId::Ringlike;
  return std::nullopt;
}

const std::vector<DiagramId>& suite_members(SuiteId id) {
  using D = DiagramId;
  static const std::vector<D> full{D::ANN1_L_ASSOC, D::ANN1_L_COMM, D::ANN1_R_ASSOC, D::ANN1_R_COMM, D::D1,
                                   D::D2,           D::D3,          D::D4,           D::D5_1,        D::D5_2};
  static const std::vector<D> braided = [] {
    auto out = full;
    out.insert(out.end(), {D::B1, D::B2, D::D6, D::C_ZERO, D::C_UNIT, D::D7});
    return out;
  }();
  static const std::vector<D> core{D::ANN1_L_ASSOC, D::ANN1_L_COMM, D::D1,     D::D8,    D::D5_1,
                                   D::B1,           D::B2,          D::C_ZERO, D::C_UNIT};
  static const std::vector<D> laplaza = [] {
    auto out = full;
    out.insert(out.end(), {D::B1, D::B2, D::C_UNIT, D::L1, D::L2, D::L3, D::L4, D::L5, D::L6, D::L7, D::L8,
                           D::L9, D::L10, D::L11, D::L12, D::L13, D::D6});
    return out;
  }();
  static const std::vector<D> ringlike{D::ANN1_L_ASSOC, D::ANN1_L_COMM, D::D1, D::D8, D::B1, D::B2};
  switch (id) {
    case SuiteId::FullAnn: return full;
    case SuiteId::BraidedFull: return braided;
    case SuiteId::CoreIndependent: return core;
    case SuiteId::Laplaza: return laplaza;
    case SuiteId::Ringlike: return ringlike;
  }
  return full;
}

std::pair<Morphism, Morphism> evaluate_paths(const CategoryModel& model, DiagramId id,
                                             std::span<const Object> objects) {
  const DiagramDef& d = def(id);
  if (objects.size() != d.arity) {
    throw Error(ErrorCode::ArityMismatch, std::string(d.name) + " takes " + std::to_string(d.arity) + " objects");
  }
  if (d.braided && !model.has_braiding()) {
    throw Error(ErrorCode::BraidingAbsent, std::string(d.name) + " needs a braiding");
  }
  return d.paths(PathBuilder(model), objects);
}

CheckReport check_diagram(const CategoryModel& model, DiagramId id, const CheckOptions& options) {
  const DiagramDef& d = def(id);
  if (d.braided && !model.has_braiding()) {
    throw Error(ErrorCode::BraidingAbsent, std::string(d.name) + " needs a braiding");
  }
  const std::size_t cap = std::max<std::size_t>(options.witness_cap, 1);
  const std::size_t total = tuple_count(model.object_count(), d.arity);

  CheckReport report;
  report.diagram = id;
  report.tuples_checked = total;

  const std::size_t workers =
      std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(1, total / 1024));
  std::vector<ChunkResult> chunks(workers);
  if (workers == 1) {
    chunks[0] = check_range(model, d, 0, total, cap);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = total * w / workers, end = total * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] {
          try {
            chunks[w] = check_range(model, d, begin, end, cap);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (auto& chunk : chunks) {
    report.mismatches += chunk.mismatches;
    for (auto& w : chunk.witnesses) {
      if (report.witnesses.size() == cap) break;
      report.witnesses.push_back(std::move(w));
    }
  }
  report.passed = report.mismatches == 0;
  return report;
}

std::vector<CheckReport> check_suite(const CategoryModel& model, SuiteId suite, const CheckOptions& options) {
  std::vector<CheckReport> out;
  for (auto id : suite_members(suite)) out.push_back(check_diagram(model, id, options));
  return out;
}

bool all_passed(std::span<const CheckReport> reports) noexcept {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

std::vector<DiagramId> dependent_diagrams(bool symmetric) {
  using D = DiagramId;
  std::vector<D> out{D::D2, D::D3, D::D4, D::D5_2, D::ANN1_R_ASSOC, D::ANN1_R_COMM, D::D7, D::D8};
  if (symmetric) {
    out.insert(out.end(),
               {D::L1, D::L2, D::L3, D::L4, D::L5, D::L6, D::L7, D::L8, D::L9, D::L10, D::L11, D::L12, D::L13});
  }
  return out;
}

DependenceReport dependence_experiment(const AnnStructure& s, const CheckOptions& options) {
  if (!s.has_braiding()) throw Error(ErrorCode::BraidingAbsent, "dependence experiment needs a braiding");
  // Dependent diagrams see the reconstructed Rdist, Lhat, Rhat.
  const ReducedModel model(s);
  const ReducedModel derived(s, DerivedConstraints::Reconstructed);
  DependenceReport report;
  report.symmetric = s.braiding_is_symmetric();
  report.core = check_suite(model, SuiteId::CoreIndependent, options);
  report.applicable = all_passed(report.core);
  if (!report.applicable) return report;
  for (auto id : dependent_diagrams(report.symmetric)) {
    report.dependent.push_back(check_diagram(derived, id, options));
    if (!report.dependent.back().passed) report.refutations.push_back(id);
  }
  return report;
}

EquivalenceReport equivalence_experiment(const AnnStructure& s, const CheckOptions& options) {
  if (!s.has_braiding()) throw Error(ErrorCode::BraidingAbsent, "equivalence experiment needs a braiding");
  if (!s.braiding_is_symmetric()) throw Error(ErrorCode::NotSymmetric, "equivalence experiment needs a symmetry");
  // LAPLAZA is read with the reconstructed Rdist, Lhat, Rhat.
  const ReducedModel model(s);
  const ReducedModel derived(s, DerivedConstraints::Reconstructed);
  EquivalenceReport report;
  report.laplaza = check_suite(derived, SuiteId::Laplaza, options);
  report.ringlike = check_suite(model, SuiteId::Ringlike, options);
  report.laplaza_passed = all_passed(report.laplaza);
  report.ringlike_passed = all_passed(report.ringlike);
  return report;
}

}  // namespace anncat
