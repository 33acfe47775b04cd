#pragma once

// Finite unital rings and finite bimodules over them, stored as dense
// operation tables. Elements are indices into the carrier; every operation is
// a table lookup. Construction validates every law exhaustively and throws
// AxiomViolation with the first failing tuple.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anncat/error.hpp"

namespace anncat {

enum class RingElement : std::uint32_t {};
enum class ModuleElement : std::uint32_t {};

constexpr std::size_t idx(RingElement e) noexcept { return static_cast<std::size_t>(e); }
constexpr std::size_t idx(ModuleElement e) noexcept { return static_cast<std::size_t>(e); }
constexpr RingElement ring_element(std::size_t i) noexcept {
  return static_cast<RingElement>(static_cast<std::uint32_t>(i));
}
constexpr ModuleElement module_element(std::size_t i) noexcept {
  return static_cast<ModuleElement>(static_cast<std::uint32_t>(i));
}

using Table = std::vector<std::vector<std::uint32_t>>;

struct RingSpec {
  enum class Kind { Cyclic, Dual, UpperTriangular, Product, Tables };

  Kind kind = Kind::Cyclic;
  std::uint32_t n = 0;             // Cyclic, Dual, UpperTriangular
  std::vector<RingSpec> factors;   // Product
  std::uint32_t size = 0;          // Tables
  Table add;
  Table mul;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;

  static RingSpec cyclic(std::uint32_t n);
  // (Z/n)[t]/(t^2); element a + b t has index a + n*b.
  static RingSpec dual(std::uint32_t n);
  // Upper triangular 2x2 matrices over Z/n; [[a, b], [0, c]] has index
  // a + n*b + n*n*c.
  static RingSpec upper_triangular(std::uint32_t n);
  // Direct product; the first factor's index varies fastest.
  static RingSpec product(std::vector<RingSpec> factors);
  static RingSpec tables(Table add, Table mul, std::uint32_t zero, std::uint32_t one);

  bool operator==(const RingSpec&) const = default;
};

// Compact text form: cyclic(n), dual(n), upper(n), product(spec, spec, ...).
// Explicit tables have no text form.
std::string to_text(const RingSpec& spec);
RingSpec parse_ring_spec(const std::string& text);

class FiniteRing {
 public:
  // Throws MalformedSpec for shape errors and AxiomViolation for failed laws.
  static FiniteRing build(const RingSpec& spec);

  std::size_t size() const noexcept { return size_; }
  RingElement zero() const noexcept { return zero_; }
  RingElement one() const noexcept { return one_; }

  RingElement add(RingElement a, RingElement b) const { return ring_element(add_[idx(a) * size_ + idx(b)]); }
  RingElement mul(RingElement a, RingElement b) const { return ring_element(mul_[idx(a) * size_ + idx(b)]); }
  RingElement neg(RingElement a) const { return ring_element(neg_[idx(a)]); }
  RingElement sub(RingElement a, RingElement b) const { return add(a, neg(b)); }

  bool is_commutative() const noexcept { return commutative_; }
  std::vector<RingElement> elements() const;
  // Greedy generating set of the additive group, in index order.
  std::vector<RingElement> additive_generators() const;

  const RingSpec& spec() const noexcept { return spec_; }
  const std::string& label(RingElement a) const { return labels_[idx(a)]; }
  bool contains(RingElement a) const noexcept { return idx(a) < size_; }

  bool operator==(const FiniteRing& other) const {
    return size_ == other.size_ && add_ == other.add_ && mul_ == other.mul_ &&
           zero_ == other.zero_ && one_ == other.one_;
  }

 private:
  FiniteRing() = default;

  std::size_t size_ = 0;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  RingElement zero_{};
  RingElement one_{};
  bool commutative_ = false;
  RingSpec spec_;
  std::vector<std::string> labels_;
};

// { a : a x = x a for all x }, in index order.
std::vector<RingElement> ring_center(const FiniteRing& ring);

struct ModuleSpec {
  enum class Kind { Regular, Tables };

  Kind kind = Kind::Regular;
  std::uint32_t size = 0;
  Table add;
  std::uint32_t zero = 0;
  Table left;   // |R| x size, r.m
  Table right;  // size x |R|, m.r

  static ModuleSpec regular();
  static ModuleSpec tables(Table add, std::uint32_t zero, Table left, Table right);

  bool operator==(const ModuleSpec&) const = default;
};

class Bimodule {
 public:
  static Bimodule build(const FiniteRing& ring, const ModuleSpec& spec);

  std::size_t size() const noexcept { return size_; }
  std::size_t ring_size() const noexcept { return ring_size_; }
  ModuleElement zero() const noexcept { return zero_; }

  ModuleElement add(ModuleElement m, ModuleElement n) const { return module_element(add_[idx(m) * size_ + idx(n)]); }
  ModuleElement neg(ModuleElement m) const { return module_element(neg_[idx(m)]); }
  ModuleElement sub(ModuleElement m, ModuleElement n) const { return add(m, neg(n)); }
  ModuleElement left(RingElement r, ModuleElement m) const { return module_element(left_[idx(r) * size_ + idx(m)]); }
  ModuleElement right(ModuleElement m, RingElement r) const { return module_element(right_[idx(m) * ring_size_ + idx(r)]); }
  // k-fold sum m + ... + m.
  ModuleElement multiple(std::uint64_t k, ModuleElement m) const;

  // r.m == m.r for all r, m.
  bool is_symmetric() const noexcept { return symmetric_; }
  std::vector<ModuleElement> elements() const;
  const ModuleSpec& spec() const noexcept { return spec_; }
  const std::string& label(ModuleElement m) const { return labels_[idx(m)]; }
  bool contains(ModuleElement m) const noexcept { return idx(m) < size_; }

  bool operator==(const Bimodule& other) const {
    return size_ == other.size_ && ring_size_ == other.ring_size_ && add_ == other.add_ &&
           zero_ == other.zero_ && left_ == other.left_ && right_ == other.right_;
  }

 private:
  Bimodule() = default;

  std::size_t size_ = 0;
  std::size_t ring_size_ = 0;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> right_;
  ModuleElement zero_{};
  bool symmetric_ = false;
  ModuleSpec spec_;
  std::vector<std::string> labels_;
};

std::string to_text(const ModuleSpec& spec);
ModuleSpec parse_module_spec(const std::string& text);

}  // namespace anncat
