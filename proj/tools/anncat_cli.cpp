// anncat command line front end. Talks to the library only through the C API.
//
// Exit codes: 0 everything passed, 1 a mathematical failure (with witnesses),
// 2 input, usage or I/O error.

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "anncat/anncat.h"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct Freer {
  void operator()(anncat_instance* p) const { anncat_instance_free(p); }
  void operator()(anncat_suite_result* p) const { anncat_suite_result_free(p); }
  void operator()(anncat_center* p) const { anncat_center_free(p); }
  void operator()(anncat_report* p) const { anncat_report_free(p); }
  void operator()(char* p) const { anncat_string_free(p); }
};

template <typename T>
using Owned = std::unique_ptr<T, Freer>;

int report_error(anncat_status status) {
  std::cerr << "error: " << anncat_status_name(status) << ": " << anncat_last_error() << '\n';
  return kInputError;
}

// Prints and frees a C string produced by the library.
void emit(char* text, std::ostream& out = std::cout) {
  Owned<char> owned(text);
  out << owned.get();
}

std::string object_text(const anncat_center* c, std::size_t i) {
  uint32_t a = 0;
  std::size_t n = 0;
  anncat_center_object(c, i, &a, nullptr, 0, &n);
  std::vector<uint32_t> u(n);
  anncat_center_object(c, i, &a, u.data(), u.size(), &n);
  std::string out = "(" + std::to_string(a) + ", [";
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(u[k]);
  }
  return out + "])";
}

anncat_status load(const std::string& path, Owned<anncat_instance>& out) {
  anncat_instance* raw = nullptr;
  const anncat_status st = anncat_instance_load(path.c_str(), &raw);
  out.reset(raw);
  return st;
}

int cmd_check(const std::string& path, const std::string& suite, const std::string& format, std::size_t cap,
              unsigned threads) {
  Owned<anncat_instance> inst;
  if (auto st = load(path, inst); st != ANNCAT_OK) return report_error(st);
  anncat_suite_result* raw = nullptr;
  const auto st = anncat_check_suite(inst.get(), suite.empty() ? nullptr : suite.c_str(), cap, threads, &raw);
  Owned<anncat_suite_result> result(raw);
  if (st != ANNCAT_OK) return report_error(st);
  char* text = nullptr;
  const auto fmt = format == "machine" ? ANNCAT_FORMAT_MACHINE : ANNCAT_FORMAT_TEXT;
  if (auto rs = anncat_suite_result_render(result.get(), fmt, &text); rs != ANNCAT_OK) return report_error(rs);
  emit(text);
  return anncat_suite_result_passed(result.get()) ? kPass : kFail;
}

int cmd_center(const std::string& path, bool verify, bool find_nonsymmetric, unsigned threads) {
  Owned<anncat_instance> inst;
  if (auto st = load(path, inst); st != ANNCAT_OK) return report_error(st);
  anncat_center* raw = nullptr;
  const auto st = anncat_center_build(inst.get(), &raw);
  Owned<anncat_center> center(raw);
  if (st == ANNCAT_ERR_INVALID_BASE) {
    std::cout << "invalid base: " << anncat_last_error() << '\n';
    anncat_suite_result* base_raw = nullptr;
    if (anncat_check_suite(inst.get(), "full", 16, threads, &base_raw) == ANNCAT_OK) {
      Owned<anncat_suite_result> base(base_raw);
      char* text = nullptr;
      if (anncat_suite_result_render(base.get(), ANNCAT_FORMAT_TEXT, &text) == ANNCAT_OK) emit(text);
    }
    return kFail;
  }
  if (st != ANNCAT_OK) return report_error(st);

  int status = kPass;
  std::cout << anncat_center_size(center.get()) << " objects\n";
  char* dump = nullptr;
  if (auto rs = anncat_center_render(center.get(), &dump); rs != ANNCAT_OK) return report_error(rs);
  emit(dump);

  if (verify) {
    anncat_suite_result* vraw = nullptr;
    if (auto vs = anncat_center_verify(center.get(), threads, &vraw); vs != ANNCAT_OK) {
      anncat_suite_result_free(vraw);
      return report_error(vs);
    }
    Owned<anncat_suite_result> verdict(vraw);
    char* text = nullptr;
    if (auto rs = anncat_suite_result_render(verdict.get(), ANNCAT_FORMAT_TEXT, &text); rs != ANNCAT_OK) {
      return report_error(rs);
    }
    std::cout << "verify ";
    emit(text);
    if (!anncat_suite_result_passed(verdict.get())) status = kFail;
  }
  if (find_nonsymmetric) {
    int found = 0;
    std::size_t p = 0, q = 0;
    if (auto fs = anncat_center_find_nonsymmetric(center.get(), &found, &p, &q); fs != ANNCAT_OK) {
      return report_error(fs);
    }
    if (found) {
      std::cout << "nonsymmetric " << object_text(center.get(), p) << ' ' << object_text(center.get(), q) << '\n';
    } else {
      std::cout << "symmetric\n";
    }
  }
  return status;
}

struct SearchSink {
  std::filesystem::path out_dir;
  std::string prefix;
  bool write_error = false;
};

int on_hit(const anncat_search_hit* hit, void* user) {
  auto* sink = static_cast<SearchSink*>(user);
  std::cout << hit->line << '\n';
  if (!sink->out_dir.empty()) {
    char name[64];
    std::snprintf(name, sizeof name, "-%06llu.json", static_cast<unsigned long long>(hit->candidate));
    std::ofstream out(sink->out_dir / (sink->prefix + name), std::ios::binary);
    out << hit->document;
    if (!out) {
      sink->write_error = true;
      return 1;
    }
  }
  return 0;
}

std::string file_prefix(const std::string& ring, const std::string& module) {
  std::string out;
  for (char c : ring + "_" + module) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out += c;
    } else if (!out.empty() && out.back() != '_') {
      out += '_';
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

int cmd_search(const std::string& ring, const std::string& module, std::uint64_t budget, const std::string& out_dir) {
  SearchSink sink;
  if (!out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
      std::cerr << "error: IoError: cannot create " << out_dir << ": " << ec.message() << '\n';
      return kInputError;
    }
    sink.out_dir = out_dir;
    sink.prefix = file_prefix(ring, module);
  }
  anncat_search_summary summary{};
  const auto st = anncat_search(ring.c_str(), module.c_str(), budget, on_hit, &sink, &summary);
  if (st != ANNCAT_OK) return report_error(st);
  if (sink.write_error) {
    std::cerr << "error: IoError: cannot write into " << out_dir << '\n';
    return kInputError;
  }
  std::cerr << "search " << ring << ' ' << module << ": " << summary.generator_count << " generators, "
            << summary.candidates << " candidates, " << summary.well_defined << " biadditive, "
            << summary.survivors << " survivors\n";
  return kPass;
}

int cmd_report(const std::string& path, const std::string& format, const std::string& out_path, unsigned threads) {
  Owned<anncat_instance> inst;
  if (auto st = load(path, inst); st != ANNCAT_OK) return report_error(st);
  anncat_report* raw = nullptr;
  const auto st = anncat_report_build(inst.get(), threads, &raw);
  Owned<anncat_report> report(raw);
  if (st != ANNCAT_OK) return report_error(st);
  char* text = nullptr;
  const auto fmt = format == "machine" ? ANNCAT_FORMAT_MACHINE : ANNCAT_FORMAT_TEXT;
  if (auto rs = anncat_report_render(report.get(), fmt, &text); rs != ANNCAT_OK) return report_error(rs);
  Owned<char> owned(text);
  if (out_path.empty()) {
    std::cout << owned.get();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << owned.get();
    out.close();
    if (!out) {
      std::cerr << "error: IoError: cannot write " << out_path << '\n';
      return kInputError;
    }
  }
  return anncat_report_exit_status(report.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherence checks and centers for almost-strict Ann-categories of type (R, M)"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(anncat_version()));

  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for diagram checks")->check(CLI::Range(1u, 256u));

  std::string file;
  std::string suite;
  std::string format = "text";
  std::size_t cap = 16;
  auto* check = app.add_subcommand("check", "Check one suite of coherence diagrams");
  check->add_option("file", file, "Instance document")->required();
  check->add_option("--suite", suite, "full, braided, core, laplaza or ringlike (default: braided if beta given)")
      ->check(CLI::IsMember({"full", "braided", "core", "laplaza", "ringlike"}));
  check->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  check->add_option("--witness-cap", cap, "Witnesses kept per diagram")->check(CLI::Range(1, 1 << 20));

  bool verify = false;
  bool nonsymmetric = false;
  auto* center = app.add_subcommand("center", "Enumerate the center");
  center->add_option("file", file, "Instance document")->required();
  center->add_flag("--verify", verify, "Check BRAIDED_FULL on the center");
  center->add_flag("--find-nonsymmetric", nonsymmetric, "Look for a pair with c' o c != id");

  std::string ring;
  std::string module = "regular";
  std::uint64_t budget = 1u << 20;
  std::string out_dir;
  auto* search = app.add_subcommand("search", "Enumerate braided instances over a ring and module");
  search->add_option("--ring", ring, "Ring: cyclic(n), dual(n), upper(n), product(...)")->required();
  search->add_option("--module", module, "Module: regular");
  search->add_option("--budget", budget, "Maximum number of candidates");
  search->add_option("--out-dir", out_dir, "Also write each survivor as a document here");

  std::string out_path;
  auto* report = app.add_subcommand("report", "Full report: suites, experiments, center");
  report->add_option("file", file, "Instance document")->required();
  report->add_option("--format", format, "text or machine")
      ->required()
      ->check(CLI::IsMember({"text", "machine"}));
  report->add_option("--out", out_path, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (check->parsed()) return cmd_check(file, suite, format, cap, threads);
  if (center->parsed()) return cmd_center(file, verify, nonsymmetric, threads);
  if (search->parsed()) return cmd_search(ring, module, budget, out_dir);
  return cmd_report(file, format, out_path, threads);
}
