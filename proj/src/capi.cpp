#include "anncat/anncat.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "anncat/center.hpp"
#include "anncat/instance_io.hpp"
#include "anncat/report.hpp"
#include "anncat/search.hpp"
#include "json.hpp"

struct anncat_instance {
  anncat::AnnStructure s;
};

struct anncat_suite_result {
  anncat::SuiteResult r;
};

struct anncat_center {
  anncat::CenterCategory c;
};

struct anncat_report {
  anncat::RunReport r;
};

namespace {

thread_local std::string last_error;

anncat_status status_of(anncat::ErrorCode code) {
  using anncat::ErrorCode;
  switch (code) {
    case ErrorCode::MalformedSpec: return ANNCAT_ERR_MALFORMED_SPEC;
    case ErrorCode::AxiomViolation: return ANNCAT_ERR_AXIOM_VIOLATION;
    case ErrorCode::ObjectMismatch: return ANNCAT_ERR_OBJECT_MISMATCH;
    case ErrorCode::ArityMismatch: return ANNCAT_ERR_ARITY_MISMATCH;
    case ErrorCode::BraidingAbsent: return ANNCAT_ERR_BRAIDING_ABSENT;
    case ErrorCode::NotSymmetric: return ANNCAT_ERR_NOT_SYMMETRIC;
    case ErrorCode::InvalidBase: return ANNCAT_ERR_INVALID_BASE;
    case ErrorCode::NotInCenter: return ANNCAT_ERR_NOT_IN_CENTER;
    case ErrorCode::ClosureViolation: return ANNCAT_ERR_CLOSURE_VIOLATION;
    case ErrorCode::ParseError: return ANNCAT_ERR_PARSE;
    case ErrorCode::ShapeError: return ANNCAT_ERR_SHAPE;
    case ErrorCode::BudgetExceeded: return ANNCAT_ERR_BUDGET_EXCEEDED;
    case ErrorCode::IoError: return ANNCAT_ERR_IO;
  }
  return ANNCAT_ERR_INTERNAL;
}

anncat_status fail(anncat_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
anncat_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const anncat::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ANNCAT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ANNCAT_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

anncat::CheckOptions options(std::size_t cap, unsigned threads) {
  anncat::CheckOptions o;
  o.witness_cap = cap == 0 ? 1 : cap;
  o.threads = threads == 0 ? 1 : threads;
  return o;
}

}  // namespace

extern "C" {

const char* anncat_version(void) { return "0.1.0"; }

const char* anncat_status_name(anncat_status status) {
  switch (status) {
    case ANNCAT_OK: return "OK";
    case ANNCAT_ERR_MALFORMED_SPEC: return "MalformedSpec";
    case ANNCAT_ERR_AXIOM_VIOLATION: return "AxiomViolation";
    case ANNCAT_ERR_OBJECT_MISMATCH: return "ObjectMismatch";
    case ANNCAT_ERR_ARITY_MISMATCH: return "ArityMismatch";
    case ANNCAT_ERR_BRAIDING_ABSENT: return "BraidingAbsent";
    case ANNCAT_ERR_NOT_SYMMETRIC: return "NotSymmetric";
    case ANNCAT_ERR_INVALID_BASE: return "InvalidBase";
    case ANNCAT_ERR_NOT_IN_CENTER: return "NotInCenter";
    case ANNCAT_ERR_CLOSURE_VIOLATION: return "ClosureViolation";
    case ANNCAT_ERR_PARSE: return "ParseError";
    case ANNCAT_ERR_SHAPE: return "ShapeError";
    case ANNCAT_ERR_BUDGET_EXCEEDED: return "BudgetExceeded";
    case ANNCAT_ERR_IO: return "IoError";
    case ANNCAT_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case ANNCAT_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* anncat_last_error(void) { return last_error.c_str(); }

void anncat_string_free(char* s) { std::free(s); }

anncat_status anncat_instance_load(const char* path, anncat_instance** out) {
  if (!path || !out) return fail(ANNCAT_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new anncat_instance{anncat::load_instance(path)};
    return ANNCAT_OK;
  });
}

anncat_status anncat_instance_parse(const char* text, size_t length, anncat_instance** out) {
  if (!text || !out) return fail(ANNCAT_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new anncat_instance{anncat::parse_instance(std::string_view(text, length))};
    return ANNCAT_OK;
  });
}

void anncat_instance_free(anncat_instance* instance) { delete instance; }

anncat_status anncat_instance_serialize(const anncat_instance* instance, char** out) {
  if (!instance || !out) return fail(ANNCAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(anncat::serialize_instance(instance->s));
    return ANNCAT_OK;
  });
}

anncat_status anncat_instance_digest(const anncat_instance* instance, char** out) {
  if (!instance || !out) return fail(ANNCAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(anncat::instance_digest(instance->s));
    return ANNCAT_OK;
  });
}

int anncat_instance_has_braiding(const anncat_instance* instance) {
  return instance && instance->s.has_braiding() ? 1 : 0;
}

size_t anncat_instance_ring_size(const anncat_instance* instance) { return instance ? instance->s.ring().size() : 0; }

anncat_status anncat_check_suite(const anncat_instance* instance, const char* suite, size_t witness_cap,
                                 unsigned threads, anncat_suite_result** out) {
  if (!instance || !out) return fail(ANNCAT_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  anncat::SuiteId id = instance->s.has_braiding() ? anncat::SuiteId::BraidedFull : anncat::SuiteId::FullAnn;
  if (suite) {
    auto parsed = anncat::suite_from_string(suite);
    if (!parsed) return fail(ANNCAT_ERR_INVALID_ARGUMENT, std::string("unknown suite '") + suite + "'");
    id = *parsed;
  }
  return guarded([&] {
    *out = new anncat_suite_result{anncat::run_suite(instance->s, id, options(witness_cap, threads))};
    return ANNCAT_OK;
  });
}

void anncat_suite_result_free(anncat_suite_result* result) { delete result; }

const char* anncat_suite_result_name(const anncat_suite_result* result) {
  return result ? anncat::to_string(result->r.suite).data() : "";
}

int anncat_suite_result_passed(const anncat_suite_result* result) { return result && result->r.passed() ? 1 : 0; }

size_t anncat_suite_result_diagram_count(const anncat_suite_result* result) {
  return result ? result->r.reports.size() : 0;
}

anncat_status anncat_suite_result_diagram(const anncat_suite_result* result, size_t index, anncat_diagram_info* out) {
  if (!result || !out) return fail(ANNCAT_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= result->r.reports.size()) return fail(ANNCAT_ERR_INVALID_ARGUMENT, "diagram index out of range");
  const auto& r = result->r.reports[index];
  out->name = anncat::to_string(r.diagram).data();
  out->passed = r.passed ? 1 : 0;
  out->tuples_checked = r.tuples_checked;
  out->mismatches = r.mismatches;
  out->witness_count = r.witnesses.size();
  return ANNCAT_OK;
}

anncat_status anncat_suite_result_witness(const anncat_suite_result* result, size_t diagram, size_t witness,
                                          uint32_t* objects, size_t capacity, size_t* arity, uint32_t* left,
                                          uint32_t* right) {
  if (!result) return fail(ANNCAT_ERR_INVALID_ARGUMENT, "null argument");
  if (diagram >= result->r.reports.size()) return fail(ANNCAT_ERR_INVALID_ARGUMENT, "diagram index out of range");
  const auto& ws = result->r.reports[diagram].witnesses;
  if (witness >= ws.size()) return fail(ANNCAT_ERR_INVALID_ARGUMENT, "witness index out of range");
  const auto& w = ws[witness];
  if (arity) *arity = w.objects.size();
  if (objects) {
    for (std::size_t i = 0; i < w.objects.size() && i < capacity; ++i) objects[i] = w.objects[i];
  }
  if (left) *left = static_cast<uint32_t>(anncat::idx(w.left));
  if (right) *right = static_cast<uint32_t>(anncat::idx(w.right));
  return ANNCAT_OK;
}

anncat_status anncat_suite_result_render(const anncat_suite_result* result, anncat_format format, char** out) {
  if (!result || !out) return fail(ANNCAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(format == ANNCAT_FORMAT_MACHINE ? anncat::render_suite_machine(result->r)
                                                       : anncat::render_suite_text(result->r));
    return ANNCAT_OK;
  });
}

anncat_status anncat_center_build(const anncat_instance* instance, anncat_center** out) {
  if (!instance || !out) return fail(ANNCAT_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new anncat_center{anncat::enumerate_center(instance->s)};
    return ANNCAT_OK;
  });
}

void anncat_center_free(anncat_center* center) { delete center; }

size_t anncat_center_size(const anncat_center* center) { return center ? center->c.size() : 0; }

anncat_status anncat_center_object(const anncat_center* center, size_t index, uint32_t* a, uint32_t* u,
                                   size_t capacity, size_t* ring_size) {
  if (!center) return fail(ANNCAT_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= center->c.size()) return fail(ANNCAT_ERR_INVALID_ARGUMENT, "object index out of range");
  const auto& p = center->c[index];
  if (ring_size) *ring_size = p.u.size();
  if (a) *a = static_cast<uint32_t>(anncat::idx(p.a));
  if (u) {
    for (std::size_t i = 0; i < p.u.size() && i < capacity; ++i) u[i] = static_cast<uint32_t>(anncat::idx(p.u[i]));
  }
  return ANNCAT_OK;
}

anncat_status anncat_center_render(const anncat_center* center, char** out) {
  if (!center || !out) return fail(ANNCAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::string text;
    for (std::size_t i = 0; i < center->c.size(); ++i) {
      const auto& p = center->c[i];
      text += std::to_string(i) + " a=" + std::to_string(anncat::idx(p.a)) + " u=[";
      for (std::size_t k = 0; k < p.u.size(); ++k) {
        if (k) text += ",";
        text += std::to_string(anncat::idx(p.u[k]));
      }
      text += "]\n";
    }
    *out = copy_string(text);
    return ANNCAT_OK;
  });
}

anncat_status anncat_center_verify(const anncat_center* center, unsigned threads, anncat_suite_result** out) {
  if (!center || !out) return fail(ANNCAT_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const anncat::CenterModel model(center->c);
    *out = new anncat_suite_result{
        {anncat::SuiteId::BraidedFull, anncat::check_suite(model, anncat::SuiteId::BraidedFull, options(16, threads))}};
    return ANNCAT_OK;
  });
}

anncat_status anncat_center_find_nonsymmetric(const anncat_center* center, int* found, size_t* p, size_t* q) {
  if (!center || !found) return fail(ANNCAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto w = anncat::find_nonsymmetric_witness(center->c);
    *found = w ? 1 : 0;
    if (w) {
      if (p) *p = *center->c.index_of(w->first);
      if (q) *q = *center->c.index_of(w->second);
    }
    return ANNCAT_OK;
  });
}

anncat_status anncat_search(const char* ring_spec, const char* module_spec, uint64_t budget,
                            anncat_search_callback callback, void* user, anncat_search_summary* summary) {
  if (!ring_spec || !module_spec) return fail(ANNCAT_ERR_INVALID_ARGUMENT, "null argument");
  struct Stop {};
  return guarded([&] {
    auto ring = std::make_shared<const anncat::FiniteRing>(anncat::FiniteRing::build(anncat::parse_ring_spec(ring_spec)));
    auto module = std::make_shared<const anncat::Bimodule>(
        anncat::Bimodule::build(*ring, anncat::parse_module_spec(module_spec)));
    anncat::SearchOptions opts;
    opts.budget = budget;
    anncat::SearchSummary result;
    std::uint64_t emitted = 0;
    bool stopped = false;
    try {
      result = anncat::search_instances(
          ring, module,
          [&](const anncat::SearchHit& hit) {
            if (!callback) return;
            std::vector<uint32_t> params;
            for (auto v : hit.parameters) params.push_back(static_cast<uint32_t>(anncat::idx(v)));
            const std::string doc = anncat::serialize_instance(hit.instance);
            nlohmann::ordered_json line;
            line["candidate"] = hit.candidate;
            line["parameters"] = params;
            line["instance"] = nlohmann::ordered_json::parse(doc);
            const std::string line_text = line.dump();
            const anncat_search_hit h{hit.candidate, params.data(), params.size(), doc.c_str(), line_text.c_str()};
            ++emitted;
            if (callback(&h, user) != 0) throw Stop{};
          },
          opts);
    } catch (const Stop&) {
      stopped = true;
    }
    if (stopped) {
      result.generators = ring->additive_generators();
      result.candidates = anncat::search_space_size(*ring, *module);
      result.survivors = emitted;
    }
    if (summary) {
      summary->generator_count = result.generators.size();
      summary->candidates = result.candidates;
      summary->well_defined = result.well_defined;
      summary->survivors = result.survivors;
    }
    return ANNCAT_OK;
  });
}

anncat_status anncat_report_build(const anncat_instance* instance, unsigned threads, anncat_report** out) {
  if (!instance || !out) return fail(ANNCAT_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new anncat_report{anncat::build_report(instance->s, options(16, threads))};
    return ANNCAT_OK;
  });
}

void anncat_report_free(anncat_report* report) { delete report; }

int anncat_report_exit_status(const anncat_report* report) { return report ? report->r.exit_status : 2; }

anncat_status anncat_report_render(const anncat_report* report, anncat_format format, char** out) {
  if (!report || !out) return fail(ANNCAT_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(format == ANNCAT_FORMAT_MACHINE ? anncat::render_machine(report->r)
                                                       : anncat::render_text(report->r));
    return ANNCAT_OK;
  });
}

}  // extern "C"
