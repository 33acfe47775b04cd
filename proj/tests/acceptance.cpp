// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "anncat/center.hpp"
#include "anncat/instance_io.hpp"
#include "anncat/report.hpp"
#include "anncat/search.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace anncat;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Base {
  std::shared_ptr<const FiniteRing> ring;
  std::shared_ptr<const Bimodule> module;
};

Base regular(const RingSpec& spec) {
  auto ring = std::make_shared<const FiniteRing>(FiniteRing::build(spec));
  auto module = std::make_shared<const Bimodule>(Bimodule::build(*ring, ModuleSpec::regular()));
  return {ring, module};
}

AnnStructure strict(const RingSpec& spec) {
  const auto b = regular(spec);
  return AnnStructure::strict(b.ring, b.module, true);
}

std::vector<fs::path> corpus_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::recursive_directory_iterator(ANNCAT_CORPUS_DIR))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::string short_name(const fs::path& p) { return p.parent_path().filename().string() + "/" + p.filename().string(); }

struct Run {
  int status = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(ANNCAT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::size_t witness_total(const std::vector<CheckReport>& reports) {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.witnesses.size();
  return n;
}

std::vector<AnnStructure> searched(const RingSpec& spec) {
  const auto b = regular(spec);
  std::vector<AnnStructure> out;
  search_instances(b.ring, b.module, [&](const SearchHit& h) { out.push_back(h.instance); });
  return out;
}

Outcome strict_baseline() {
  const auto s = strict(RingSpec::cyclic(2));
  const ReducedModel model(s);
  const auto braided = check_suite(model, SuiteId::BraidedFull);
  const auto laplaza = check_suite(model, SuiteId::Laplaza);
  const bool ok = all_passed(braided) && all_passed(laplaza) && witness_total(braided) + witness_total(laplaza) == 0;
  return {ok, "BRAIDED_FULL " + std::to_string(braided.size()) + " diagrams, LAPLAZA " +
                  std::to_string(laplaza.size()) + " diagrams, " +
                  std::to_string(witness_total(braided) + witness_total(laplaza)) + " witnesses"};
}

Outcome center_sizes() {
  struct Case {
    const char* label;
    RingSpec spec;
    oracle::Ring ref;
    std::size_t expected;
  };
  const std::vector<Case> cases{{"Z/2", RingSpec::cyclic(2), oracle::cyclic(2), 2},
                                {"Z/4", RingSpec::cyclic(4), oracle::cyclic(4), 4},
                                {"(Z/2)[t]/(t^2)", RingSpec::dual(2), oracle::dual(2), 16}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    const auto s = strict(c.spec);
    const std::size_t got = enumerate_center(s).size();
    const std::size_t brute = oracle::center_count(c.ref, [](int, int, int) { return 0; });
    ok = ok && got == c.expected && brute == c.expected;
    if (!detail.empty()) detail += ", ";
    detail += std::string(c.label) + " " + std::to_string(got) + " (brute force " + std::to_string(brute) + ")";
  }
  return {ok, detail};
}

Outcome center_is_braided() {
  std::size_t instances = 0, failures = 0;
  for (const auto& spec : {RingSpec::cyclic(2), RingSpec::cyclic(3), RingSpec::cyclic(4), RingSpec::dual(2)}) {
    for (const auto& s : searched(spec)) {
      ++instances;
      if (!all_passed(verify_center(s))) ++failures;
    }
  }
  return {instances > 0 && failures == 0,
          std::to_string(instances) + " searched instances, " + std::to_string(failures) + " refutations"};
}

Outcome unsymmetric_example() {
  const auto d = strict(RingSpec::dual(2));
  const auto c = enumerate_center(d);
  const auto w = find_nonsymmetric_witness(c);
  const auto& m = d.module();
  bool ok = w.has_value();
  std::string detail;
  if (w) {
    const auto value = m.add(center_braiding(c, w->first, w->second).value,
                             center_braiding(c, w->second, w->first).value);
    ok = ok && value != m.zero();
    detail = "witness " + render_center_object(w->first) + " " + render_center_object(w->second) + " value " +
             m.label(value);
  }
  // (t, u_1) and (t, u_t): u_1(t) + u_t(t) = 1 + t.
  CenterObject p{ring_element(2), {module_element(0), module_element(0), module_element(1), module_element(1)}};
  CenterObject q{ring_element(2), {module_element(0), module_element(0), module_element(2), module_element(2)}};
  if (c.contains(p) && c.contains(q)) {
    const auto value = m.add(center_braiding(c, p, q).value, center_braiding(c, q, p).value);
    ok = ok && idx(value) == 3;
    detail += "; (t,u_1),(t,u_t) value " + m.label(value);
  } else {
    ok = false;
  }
  const bool z2 = find_nonsymmetric_witness(enumerate_center(strict(RingSpec::cyclic(2)))).has_value();
  const bool z4 = find_nonsymmetric_witness(enumerate_center(strict(RingSpec::cyclic(4)))).has_value();
  ok = ok && !z2 && !z4;
  detail += std::string("; Z/2 ") + (z2 ? "pair" : "none") + ", Z/4 " + (z4 ? "pair" : "none");
  return {ok, detail};
}

Outcome dependence() {
  using D = DiagramId;
  const std::vector<D> claimed{D::D2, D::D3, D::D4, D::D5_2, D::D7, D::ANN1_R_ASSOC, D::ANN1_R_COMM};
  std::size_t applicable = 0, refutations = 0, identity_failures = 0;
  std::string refuted;
  for (const auto& path : corpus_files()) {
    const auto s = load_instance(path);
    if (!s.has_braiding()) continue;
    const auto report = dependence_experiment(s);
    if (!report.applicable) continue;
    ++applicable;
    for (const auto& r : report.dependent) {
      if (std::find(claimed.begin(), claimed.end(), r.diagram) == claimed.end()) continue;
      if (!r.passed) {
        ++refutations;
        refuted += " " + short_name(path) + ":" + std::string(to_string(r.diagram));
      }
    }
    const ReducedModel plain(s);
    for (auto id : claimed)
      if (!check_diagram(plain, id, {.witness_cap = 1}).passed) {
        ++identity_failures;
        break;
      }
  }
  return {applicable >= 3 && refutations == 0,
          std::to_string(applicable) + " instances pass CORE_INDEPENDENT, " + std::to_string(refutations) +
              " refutations" + refuted + " (" + std::to_string(identity_failures) +
              " of them fail with Rdist, Lhat, Rhat fixed to the identity)"};
}

Outcome symmetric_laplaza() {
  using D = DiagramId;
  std::vector<D> claimed{D::L1, D::L2, D::L3, D::L4, D::L5, D::L6, D::L7,
                         D::L8, D::L9, D::L10, D::L11, D::L12, D::L13, D::D8};
  std::size_t checked = 0, refutations = 0;
  std::string refuted;
  std::vector<std::pair<std::string, AnnStructure>> pool;
  for (const auto& path : corpus_files()) pool.emplace_back(short_name(path), load_instance(path));
  for (const auto& spec : {RingSpec::cyclic(2), RingSpec::cyclic(3), RingSpec::cyclic(4), RingSpec::dual(2)})
    for (auto& s : searched(spec)) pool.emplace_back("search " + to_text(spec), std::move(s));
  for (const auto& [name, s] : pool) {
    if (!s.has_braiding() || !s.braiding_is_symmetric()) continue;
    const ReducedModel model(s);
    if (!all_passed(check_suite(model, SuiteId::BraidedFull))) continue;
    ++checked;
    for (auto id : claimed) {
      if (!check_diagram(model, id, {.witness_cap = 1}).passed) {
        ++refutations;
        refuted += " " + name + ":" + std::string(to_string(id));
      }
    }
  }
  return {checked > 0 && refutations == 0,
          std::to_string(checked) + " symmetric BRAIDED_FULL instances, " + std::to_string(refutations) +
              " refutations" + refuted};
}

Outcome equivalence() {
  std::size_t checked = 0, refuted = 0, both = 0;
  std::string which;
  for (const auto& path : corpus_files()) {
    const auto s = load_instance(path);
    if (!s.has_braiding() || !s.braiding_is_symmetric()) continue;
    const auto e = equivalence_experiment(s);
    ++checked;
    both += e.laplaza_passed && e.ringlike_passed;
    if (e.refuted()) {
      ++refuted;
      which += " " + short_name(path);
    }
  }
  const auto bad = load_instance(fs::path(ANNCAT_CORPUS_DIR) / "handmade" / "z2_eta_bad.json");
  const auto e = equivalence_experiment(bad);
  const auto d4 = check_diagram(ReducedModel(bad), DiagramId::D4);
  const bool exact = !d4.witnesses.empty() && d4.witnesses.front().objects == std::vector<Object>{1, 1, 1, 1};
  const bool ok = checked > 0 && refuted == 0 && !e.laplaza_passed && !e.ringlike_passed && exact;
  return {ok, std::to_string(checked) + " symmetric instances, " + std::to_string(both) + " pass both, " +
                  std::to_string(refuted) + " refuted" + which + "; eta(1,1)=1 instance LAPLAZA " +
                  (e.laplaza_passed ? "pass" : "fail") + ", RINGLIKE " + (e.ringlike_passed ? "pass" : "fail") +
                  ", D4 first witness " + (exact ? "(1,1,1,1)" : "missing or different")};
}

Outcome negative_paths() {
  const std::string bad = (fs::path(ANNCAT_CORPUS_DIR) / "handmade" / "z2_eta_bad.json").string();
  const auto check = cli("check " + bad);
  const auto machine = cli("report --format machine " + bad);
  bool has_witness = false;
  const auto doc = nlohmann::json::parse(machine.out, nullptr, false);
  if (!doc.is_discarded())
    for (const auto& suite : doc["suites"])
      for (const auto& d : suite["diagrams"])
        if (d["diagram"] == "D4" && !d["witnesses"].empty() &&
            d["witnesses"][0]["objects"] == nlohmann::json::array({1, 1, 1, 1}))
          has_witness = true;

  const fs::path malformed = fs::temp_directory_path() / ("anncat-malformed-" + std::to_string(getpid()) + ".json");
  std::ofstream(malformed) << "{\"ring\": \"cyclic(2)\", \"module\": \"regular\", \"eta\": [[0, 0], [0, 7]]}";
  const auto broken = cli("check " + malformed.string());
  fs::remove(malformed);
  const bool ok = check.status == 1 && machine.status == 1 && has_witness && broken.status == 2;
  return {ok, "check exit " + std::to_string(check.status) + ", report exit " + std::to_string(machine.status) +
                  (has_witness ? " with" : " without") + " the D4 witness, malformed file exit " +
                  std::to_string(broken.status)};
}

Outcome determinism() {
  std::size_t files = 0, differing = 0;
  for (const auto& path : corpus_files()) {
    ++files;
    for (const char* format : {"text", "machine"}) {
      const std::string args = std::string("report --format ") + format + " " + path.string();
      if (cli(args).out != cli(args).out) ++differing;
    }
  }
  return {files > 0 && differing == 0,
          std::to_string(files) + " instances x 2 formats, " + std::to_string(differing) + " differing pairs"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"strict baseline", strict_baseline},       {"center sizes", center_sizes},
      {"center is braided", center_is_braided},   {"unsymmetric example", unsymmetric_example},
      {"dependence", dependence},                 {"symmetric implies L1-L13, D8", symmetric_laplaza},
      {"equivalence", equivalence},               {"negative paths", negative_paths},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << i + 1 << " " << (o.passed ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
              << o.detail << std::endl;
    failed += !o.passed;
  }
  return failed ? 1 : 0;
}
