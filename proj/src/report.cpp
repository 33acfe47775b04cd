#include "anncat/report.hpp"

#include <sstream>

#include "anncat/instance_io.hpp"
#include "json.hpp"

namespace anncat {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string tuple_text(const std::vector<Object>& objects) {
  std::string out = "(";
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(objects[i]);
  }
  return out + ")";
}

void append_check_text(std::ostringstream& out, const CheckReport& r, const char* indent) {
  out << indent << to_string(r.diagram) << ' ' << (r.passed ? "pass" : "FAIL") << ' ' << r.tuples_checked
      << " tuples";
  if (!r.passed) out << ", " << r.mismatches << " mismatches";
  out << '\n';
  for (const auto& w : r.witnesses) {
    out << indent << "  witness " << tuple_text(w.objects) << " left " << idx(w.left) << " right " << idx(w.right)
        << '\n';
  }
}

std::string verdict(bool passed) { return passed ? "pass" : "FAIL"; }

ordered_json check_json(const CheckReport& r) {
  ordered_json out;
  out["diagram"] = std::string(to_string(r.diagram));
  out["passed"] = r.passed;
  out["tuples_checked"] = r.tuples_checked;
  out["mismatches"] = r.mismatches;
  ordered_json ws = ordered_json::array();
  for (const auto& w : r.witnesses) {
    ordered_json j;
    j["objects"] = w.objects;
    j["left"] = idx(w.left);
    j["right"] = idx(w.right);
    ws.push_back(std::move(j));
  }
  out["witnesses"] = std::move(ws);
  return out;
}

ordered_json checks_json(const std::vector<CheckReport>& reports) {
  ordered_json out = ordered_json::array();
  for (const auto& r : reports) out.push_back(check_json(r));
  return out;
}

ordered_json suite_json(const SuiteResult& s) {
  ordered_json out;
  out["suite"] = std::string(to_string(s.suite));
  out["passed"] = s.passed();
  out["diagrams"] = checks_json(s.reports);
  return out;
}

ordered_json ids_json(const std::vector<DiagramId>& ids) {
  ordered_json out = ordered_json::array();
  for (auto id : ids) out.push_back(std::string(to_string(id)));
  return out;
}

ordered_json object_json(const CenterObject& p) {
  ordered_json out;
  out["a"] = idx(p.a);
  ordered_json u = ordered_json::array();
  for (auto v : p.u) u.push_back(idx(v));
  out["u"] = std::move(u);
  return out;
}

std::vector<DiagramId> failed(const std::vector<CheckReport>& reports) {
  std::vector<DiagramId> out;
  for (const auto& r : reports)
    if (!r.passed) out.push_back(r.diagram);
  return out;
}

}  // namespace

SuiteResult run_suite(const AnnStructure& s, SuiteId suite, const CheckOptions& options) {
  return {suite, check_suite(ReducedModel(s), suite, options)};
}

CenterSummary summarize_center(const AnnStructure& s, const CheckOptions& options) {
  CenterSummary out;
  try {
    const CenterCategory c = enumerate_center(s);
    out.available = true;
    out.object_count = c.size();
    out.verification = check_suite(CenterModel(c), SuiteId::BraidedFull, options);
    out.nonsymmetric_witness = find_nonsymmetric_witness(c);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidBase) throw;
    out.available = false;
    out.unavailable_reason = e.what();
  }
  return out;
}

RunReport build_report(const AnnStructure& s, const CheckOptions& options) {
  RunReport out;
  out.digest = instance_digest(s);
  out.ring = to_text(s.ring().spec());
  out.module = to_text(s.module().spec());
  out.braided = s.has_braiding();
  out.symmetric = s.braiding_is_symmetric();

  out.suites.push_back(run_suite(s, SuiteId::FullAnn, options));
  bool failing = !out.suites.back().passed();
  if (out.braided) {
    for (auto id : {SuiteId::BraidedFull, SuiteId::CoreIndependent, SuiteId::Laplaza, SuiteId::Ringlike}) {
      out.suites.push_back(run_suite(s, id, options));
    }
    failing = failing || !out.suites[1].passed();
    out.dependence = dependence_experiment(s, options);
    failing = failing || !out.dependence->refutations.empty();
    if (out.symmetric) {
      out.equivalence = equivalence_experiment(s, options);
      failing = failing || out.equivalence->refuted();
    }
  }
  out.center = summarize_center(s, options);
  failing = failing || (out.center.available && !out.center.verified());
  out.exit_status = failing ? 1 : 0;
  return out;
}

std::string render_suite_text(const SuiteResult& result) {
  std::ostringstream out;
  out << "suite " << to_string(result.suite) << ": " << verdict(result.passed()) << '\n';
  for (const auto& r : result.reports) append_check_text(out, r, "  ");
  return out.str();
}

std::string render_suite_machine(const SuiteResult& result) { return suite_json(result).dump(2) + "\n"; }

std::string render_center_object(const CenterObject& p) {
  std::string out = "(" + std::to_string(idx(p.a)) + ", [";
  for (std::size_t i = 0; i < p.u.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(idx(p.u[i]));
  }
  return out + "])";
}

std::string render_text(const RunReport& report) {
  std::ostringstream out;
  out << "instance " << report.digest << '\n';
  out << "ring " << report.ring << ", module " << report.module << ", braided " << (report.braided ? "yes" : "no")
      << ", symmetric " << (report.symmetric ? "yes" : "no") << '\n';
  for (const auto& s : report.suites) out << render_suite_text(s);

  if (report.dependence) {
    const auto& d = *report.dependence;
    out << "dependence: ";
    if (!d.applicable) {
      out << "not applicable (CORE_INDEPENDENT fails)\n";
    } else {
      out << d.dependent.size() << " dependent diagrams, " << d.refutations.size() << " refutations\n";
      for (const auto& r : d.dependent)
        if (!r.passed) append_check_text(out, r, "  ");
    }
  }
  if (report.equivalence) {
    const auto& e = *report.equivalence;
    out << "equivalence: LAPLAZA " << verdict(e.laplaza_passed) << ", RINGLIKE " << verdict(e.ringlike_passed)
        << (e.refuted() ? ", REFUTED" : ", consistent") << '\n';
  }

  const auto& c = report.center;
  out << "center: ";
  if (!c.available) {
    out << "unavailable: " << c.unavailable_reason << '\n';
  } else {
    out << c.object_count << " objects, BRAIDED_FULL " << verdict(c.verified()) << '\n';
    for (const auto& r : c.verification)
      if (!r.passed) append_check_text(out, r, "  ");
    if (c.nonsymmetric_witness) {
      out << "  nonsymmetric witness " << render_center_object(c.nonsymmetric_witness->first) << ' '
          << render_center_object(c.nonsymmetric_witness->second) << '\n';
    } else {
      out << "  braiding is symmetric\n";
    }
  }
  out << "status " << report.exit_status << '\n';
  return out.str();
}

std::string render_machine(const RunReport& report) {
  ordered_json doc;
  doc["digest"] = report.digest;
  doc["ring"] = report.ring;
  doc["module"] = report.module;
  doc["braided"] = report.braided;
  doc["symmetric"] = report.symmetric;
  ordered_json suites = ordered_json::array();
  for (const auto& s : report.suites) suites.push_back(suite_json(s));
  doc["suites"] = std::move(suites);

  if (report.dependence) {
    const auto& d = *report.dependence;
    ordered_json j;
    j["applicable"] = d.applicable;
    j["symmetric"] = d.symmetric;
    j["refutations"] = ids_json(d.refutations);
    j["core"] = checks_json(d.core);
    j["dependent"] = checks_json(d.dependent);
    doc["dependence"] = std::move(j);
  } else {
    doc["dependence"] = nullptr;
  }
  if (report.equivalence) {
    const auto& e = *report.equivalence;
    ordered_json j;
    j["laplaza_passed"] = e.laplaza_passed;
    j["ringlike_passed"] = e.ringlike_passed;
    j["refuted"] = e.refuted();
    j["laplaza_failures"] = ids_json(failed(e.laplaza));
    j["ringlike_failures"] = ids_json(failed(e.ringlike));
    doc["equivalence"] = std::move(j);
  } else {
    doc["equivalence"] = nullptr;
  }

  const auto& c = report.center;
  ordered_json cj;
  cj["available"] = c.available;
  if (!c.available) {
    cj["reason"] = c.unavailable_reason;
  } else {
    cj["objects"] = c.object_count;
    cj["verified"] = c.verified();
    cj["failed_diagrams"] = ids_json(failed(c.verification));
    if (c.nonsymmetric_witness) {
      ordered_json w;
      w["p"] = object_json(c.nonsymmetric_witness->first);
      w["q"] = object_json(c.nonsymmetric_witness->second);
      cj["nonsymmetric_witness"] = std::move(w);
    } else {
      cj["nonsymmetric_witness"] = nullptr;
    }
  }
  doc["center"] = std::move(cj);
  doc["status"] = report.exit_status;
  return doc.dump(2) + "\n";
}

}  // namespace anncat
