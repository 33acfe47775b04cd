#pragma once

// Exhaustive commutativity checking of the coherence diagrams of a
// (braided) Ann-category over a CategoryModel, plus the suites and the
// dependence / equivalence experiments built on them.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "anncat/category_model.hpp"

namespace anncat {

enum class DiagramId {
  ANN1_L_ASSOC,
  ANN1_L_COMM,
  ANN1_R_ASSOC,
  ANN1_R_COMM,
  D1,
  D2,
  D3,
  D4,
  D5_1,
  D5_2,
  D6,
  D7,
  D8,
  B1,
  B2,
  C_ZERO,
  C_UNIT,
  L1,
  L2,
  L3,
  L4,
  L5,
  L6,
  L7,
  L8,
  L9,
  L10,
  L11,
  L12,
  L13,
};

std::string_view to_string(DiagramId id) noexcept;
std::optional<DiagramId> diagram_from_string(std::string_view name) noexcept;
std::size_t arity(DiagramId id) noexcept;
bool needs_braiding(DiagramId id) noexcept;
const std::vector<DiagramId>& all_diagrams();

struct Witness {
  std::vector<Object> objects;
  ModuleElement left{};
  ModuleElement right{};

  bool operator==(const Witness&) const = default;
};

struct CheckReport {
  DiagramId diagram{};
  bool passed = true;
  std::size_t tuples_checked = 0;
  std::size_t mismatches = 0;      // uncapped count of failing tuples
  std::vector<Witness> witnesses;  // first failing tuples in canonical order

  bool operator==(const CheckReport&) const = default;
};

struct CheckOptions {
  std::size_t witness_cap = 16;  // values below 1 are treated as 1
  unsigned threads = 1;
};

enum class SuiteId { FullAnn, BraidedFull, CoreIndependent, Laplaza, Ringlike };

std::string_view to_string(SuiteId id) noexcept;
// Accepts the CLI names full, braided, core, laplaza, ringlike as well as the
// upper-case suite names.
std::optional<SuiteId> suite_from_string(std::string_view name) noexcept;
const std::vector<DiagramId>& suite_members(SuiteId id);

// Both paths of the diagram at one object tuple, as (left, right).
std::pair<Morphism, Morphism> evaluate_paths(const CategoryModel& model, DiagramId id,
                                             std::span<const Object> objects);

// Tuples are visited in lexicographic order, first coordinate most
// significant. Throws BraidingAbsent for braiding diagrams on unbraided
// models.
CheckReport check_diagram(const CategoryModel& model, DiagramId id, const CheckOptions& options = {});
std::vector<CheckReport> check_suite(const CategoryModel& model, SuiteId suite, const CheckOptions& options = {});
bool all_passed(std::span<const CheckReport> reports) noexcept;

struct DependenceReport {
  bool applicable = false;  // CORE_INDEPENDENT passed
  bool symmetric = false;
  std::vector<CheckReport> core;
  std::vector<CheckReport> dependent;
  std::vector<DiagramId> refutations;  // dependent diagrams that failed
};

// Diagrams claimed to follow from CORE_INDEPENDENT; L1..L13 are added when
// the braiding is a symmetry.
std::vector<DiagramId> dependent_diagrams(bool symmetric);

DependenceReport dependence_experiment(const AnnStructure& s, const CheckOptions& options = {});

struct EquivalenceReport {
  bool laplaza_passed = false;
  bool ringlike_passed = false;
  std::vector<CheckReport> laplaza;
  std::vector<CheckReport> ringlike;

  bool refuted() const noexcept { return laplaza_passed != ringlike_passed; }
};

// Throws BraidingAbsent, NotSymmetric.
EquivalenceReport equivalence_experiment(const AnnStructure& s, const CheckOptions& options = {});

}  // namespace anncat
