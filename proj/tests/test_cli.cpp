// Runs the anncat binary as a subprocess.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
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

std::string corpus(const std::string& name) { return std::string(ANNCAT_CORPUS_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("anncat-cli-" + std::to_string(getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  const fs::path& dir() const { return dir_; }

 private:
  fs::path dir_;
};

}  // namespace

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run("check " + corpus("search/cyclic_2_regular-000000.json")).status, 0);
  EXPECT_EQ(run("check --suite laplaza " + corpus("search/cyclic_2_regular-000000.json")).status, 0);
  EXPECT_EQ(run("check " + corpus("handmade/z2_eta_bad.json")).status, 1);
  EXPECT_EQ(run("check " + corpus("handmade/z4_plain.json")).status, 0);
  EXPECT_EQ(run("check --suite braided " + corpus("handmade/z4_plain.json")).status, 2);
  EXPECT_EQ(run("check /nonexistent.json").status, 2);
  EXPECT_EQ(run("check --suite nonsense " + corpus("handmade/z4_plain.json")).status, 2);
  EXPECT_EQ(run("").status, 2);
}

TEST(Cli, MachineWitness) {
  const auto r = run("check --format machine " + corpus("handmade/z2_eta_bad.json"));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("\"diagram\": \"D4\""), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"objects\": [\n            1,\n            1,\n            1,\n            1\n          ]"),
            std::string::npos)
      << r.out;
}

TEST(Cli, MalformedFiles) {
  Scratch tmp;
  const auto bad = tmp.dir() / "bad.json";
  std::ofstream(bad) << "{\"ring\": \"cyclic(2)\", \"module\": \"regular\", \"eta\": [[0]], \"lambda\": \"zero\"}";
  const auto broken = tmp.dir() / "broken.json";
  std::ofstream(broken) << "{\"ring\": ";
  for (const auto& p : {bad, broken}) {
    EXPECT_EQ(run("check " + p.string()).status, 2);
    EXPECT_EQ(run("center " + p.string()).status, 2);
    EXPECT_EQ(run("report --format text " + p.string()).status, 2);
  }
}

TEST(Cli, Center) {
  const auto r = run("center --verify --find-nonsymmetric " + corpus("search/dual_2_regular-000000.json"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("16 objects\n", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("verify suite BRAIDED_FULL: pass"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("nonsymmetric ("), std::string::npos) << r.out;

  const auto z2 = run("center --find-nonsymmetric " + corpus("search/cyclic_2_regular-000000.json"));
  EXPECT_EQ(z2.status, 0);
  EXPECT_NE(z2.out.find("symmetric\n"), std::string::npos);
  EXPECT_EQ(z2.out.find("nonsymmetric"), std::string::npos);

  const auto bad = run("center " + corpus("handmade/z2_eta_bad.json"));
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.out.find("invalid base"), std::string::npos);
}

TEST(Cli, SearchReproducesTheCorpus) {
  Scratch tmp;
  for (const char* ring : {"cyclic(2)", "cyclic(3)", "cyclic(4)", "dual(2)"}) {
    const auto r = run(std::string("search --ring '") + ring + "' --module regular --out-dir " + tmp.dir().string());
    EXPECT_EQ(r.status, 0) << ring;
  }
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(tmp.dir())) {
    ++files;
    const auto committed = fs::path(ANNCAT_CORPUS_DIR) / "search" / e.path().filename();
    ASSERT_TRUE(fs::exists(committed)) << committed;
    EXPECT_EQ(slurp(e.path()), slurp(committed)) << committed;
  }
  EXPECT_EQ(files, 7u);

  const auto lines = run("search --ring 'dual(2)'");
  EXPECT_EQ(std::count(lines.out.begin(), lines.out.end(), '\n'), 4);
  EXPECT_EQ(run("search --ring 'dual(2)' --budget 0").status, 2);
  EXPECT_EQ(run("search --ring 'upper(2)'").status, 2);
  EXPECT_EQ(run("search --ring 'dual(2' ").status, 2);
}

TEST(Cli, ReportIsDeterministic) {
  Scratch tmp;
  for (const char* name : {"handmade/z2_eta_bad.json", "search/dual_2_regular-000002.json",
                           "handmade/dual2_first_slot.json"}) {
    for (const char* format : {"text", "machine"}) {
      const auto a = run(std::string("report --format ") + format + " " + corpus(name));
      const auto b = run(std::string("report --format ") + format + " --threads 3 " + corpus(name));
      EXPECT_EQ(a.out, b.out) << name;
      EXPECT_EQ(a.status, b.status);
      const auto out = tmp.dir() / "r.out";
      const auto c = run(std::string("report --format ") + format + " --out " + out.string() + " " + corpus(name));
      EXPECT_EQ(c.status, a.status);
      EXPECT_TRUE(c.out.empty());
      EXPECT_EQ(slurp(out), a.out);
    }
  }
  EXPECT_EQ(run("report --format machine " + corpus("handmade/z2_eta_bad.json")).status, 1);
  EXPECT_EQ(run("report --format machine " + corpus("search/dual_2_regular-000002.json")).status, 0);
  EXPECT_EQ(run("report " + corpus("search/dual_2_regular-000002.json")).status, 2);  // --format is required
  EXPECT_EQ(run("report --format text --out /nonexistent/dir/r.txt " + corpus("handmade/z4_plain.json")).status, 2);
}
