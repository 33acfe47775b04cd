#pragma once

// Enumeration of braided instances over a fixed ring and bimodule.
//
// The free parameters are the values beta(g_i, g_j) on the greedy additive
// generators g_0 < g_1 < ... of R. Each choice is extended biadditively through
// a fixed coefficient representation of every element; choices whose extension
// is not biadditive are discarded. Then lambda(a,x,y) = beta(a,x+y) -
// beta(a,x) - beta(a,y) and eta = 0. Survivors of BRAIDED_FULL are reported in
// lexicographic order of the parameter tuple (beta(g_0,g_0), beta(g_0,g_1),
// ...), first entry most significant.

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "anncat/category_model.hpp"

namespace anncat {

struct SearchOptions {
  std::uint64_t budget = 1u << 20;  // maximum number of parameter tuples
  unsigned threads = 1;
};

struct SearchHit {
  std::uint64_t candidate = 0;             // rank in the lexicographic order
  std::vector<ModuleElement> parameters;   // beta on generator pairs, row-major
  AnnStructure instance;
};

struct SearchSummary {
  std::vector<RingElement> generators;
  std::uint64_t candidates = 0;     // |M|^(g^2)
  std::uint64_t well_defined = 0;   // biadditive extensions
  std::uint64_t survivors = 0;
};

// |M|^(g^2), saturating at UINT64_MAX.
std::uint64_t search_space_size(const FiniteRing& ring, const Bimodule& module);

// Calls on_hit for every survivor, in order. Throws BudgetExceeded when the
// space is larger than options.budget and MalformedSpec for a
// non-commutative ring.
SearchSummary search_instances(std::shared_ptr<const FiniteRing> ring, std::shared_ptr<const Bimodule> module,
                               const std::function<void(const SearchHit&)>& on_hit,
                               const SearchOptions& options = {});

}  // namespace anncat
