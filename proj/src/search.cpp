#include "anncat/search.hpp"

#include <limits>
#include <string>

#include "anncat/diagram_engine.hpp"

namespace anncat {

namespace {

// coeffs[x][i] = k_i with x = sum k_i g_i, found by breadth-first search so
// that every coefficient is as small as possible.
std::vector<std::vector<std::uint64_t>> representations(const FiniteRing& r, const std::vector<RingElement>& gens) {
  const std::size_t n = r.size();
  std::vector<std::vector<std::uint64_t>> coeffs(n);
  std::vector<bool> seen(n, false);
  coeffs[idx(r.zero())].assign(gens.size(), 0);
  seen[idx(r.zero())] = true;
  std::vector<RingElement> frontier{r.zero()};
  while (!frontier.empty()) {
    std::vector<RingElement> next;
    for (auto x : frontier) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const RingElement y = r.add(x, gens[i]);
        if (seen[idx(y)]) continue;
        seen[idx(y)] = true;
        coeffs[idx(y)] = coeffs[idx(x)];
        ++coeffs[idx(y)][i];
        next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return coeffs;
}

bool biadditive(const FiniteRing& r, const Bimodule& m, const std::vector<ModuleElement>& beta) {
  const std::size_t n = r.size();
  auto b = [&](RingElement x, RingElement y) { return beta[idx(x) * n + idx(y)]; };
  for (auto x : r.elements()) {
    for (auto y : r.elements()) {
      for (auto z : r.elements()) {
        if (b(r.add(x, y), z) != m.add(b(x, z), b(y, z))) return false;
        if (b(x, r.add(y, z)) != m.add(b(x, y), b(x, z))) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::uint64_t search_space_size(const FiniteRing& ring, const Bimodule& module) {
  const std::uint64_t g = ring.additive_generators().size();
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < g * g; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / module.size()) return std::numeric_limits<std::uint64_t>::max();
    total *= module.size();
  }
  return total;
}

SearchSummary search_instances(std::shared_ptr<const FiniteRing> ring, std::shared_ptr<const Bimodule> module,
                               const std::function<void(const SearchHit&)>& on_hit, const SearchOptions& options) {
  const FiniteRing& r = *ring;
  const Bimodule& m = *module;
  if (!r.is_commutative()) throw Error(ErrorCode::MalformedSpec, "search needs a commutative ring");

  SearchSummary summary;
  summary.generators = r.additive_generators();
  summary.candidates = search_space_size(r, m);
  if (summary.candidates > options.budget) {
    throw Error(ErrorCode::BudgetExceeded, "search space has " + std::to_string(summary.candidates) +
                                               " candidates, budget is " + std::to_string(options.budget));
  }

  const auto& gens = summary.generators;
  const std::size_t g = gens.size();
  const std::size_t n = r.size();
  const auto coeffs = representations(r, gens);
  const CheckOptions check{1, options.threads};

  std::vector<ModuleElement> params(g * g, m.zero());
  for (std::uint64_t rank = 0; rank < summary.candidates; ++rank) {
    std::uint64_t rest = rank;
    for (std::size_t k = g * g; k-- > 0;) {
      params[k] = module_element(rest % m.size());
      rest /= m.size();
    }

    std::vector<ModuleElement> beta(n * n, m.zero());
    for (auto x : r.elements()) {
      for (auto y : r.elements()) {
        ModuleElement v = m.zero();
        for (std::size_t i = 0; i < g; ++i)
          for (std::size_t j = 0; j < g; ++j)
            v = m.add(v, m.multiple(coeffs[idx(x)][i] * coeffs[idx(y)][j], params[i * g + j]));
        beta[idx(x) * n + idx(y)] = v;
      }
    }
    if (!biadditive(r, m, beta)) continue;
    ++summary.well_defined;

    std::vector<ModuleElement> lambda(n * n * n, m.zero());
    for (auto a : r.elements()) {
      for (auto x : r.elements()) {
        for (auto y : r.elements()) {
          const ModuleElement v =
              m.sub(m.sub(beta[idx(a) * n + idx(r.add(x, y))], beta[idx(a) * n + idx(x)]), beta[idx(a) * n + idx(y)]);
          lambda[(idx(a) * n + idx(x)) * n + idx(y)] = v;
        }
      }
    }
    AnnStructure s(ring, module, std::vector<ModuleElement>(n * n, m.zero()), std::move(lambda), std::move(beta));
    if (!all_passed(check_suite(ReducedModel(s), SuiteId::BraidedFull, check))) continue;
    ++summary.survivors;
    on_hit(SearchHit{rank, params, std::move(s)});
  }
  return summary;
}

}  // namespace anncat
