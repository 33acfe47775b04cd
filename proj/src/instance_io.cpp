#include "anncat/instance_io.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace anncat {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& loc, const std::string& detail) {
  throw LocatedError(ErrorCode::ParseError, loc, detail);
}

[[noreturn]] void shape_fail(const std::string& loc, const std::string& detail) {
  throw LocatedError(ErrorCode::ShapeError, loc, detail);
}

std::string at(const std::string& loc, const std::string& key) { return loc + "/" + key; }
std::string at(const std::string& loc, std::size_t i) { return loc + "/" + std::to_string(i); }

const json& member(const json& obj, const std::string& loc, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(loc, std::string("missing key \"") + key + "\"");
  return *it;
}

std::uint32_t index_value(const json& j, const std::string& loc) {
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > 0xffffffffu) shape_fail(loc, "index " + std::to_string(v) + " is out of range");
    return static_cast<std::uint32_t>(v);
  }
  if (j.is_number_integer()) shape_fail(loc, "index " + std::to_string(j.get<std::int64_t>()) + " is negative");
  parse_fail(loc, "expected a non-negative integer, got " + std::string(j.type_name()));
}

std::uint32_t bounded(const json& j, const std::string& loc, std::size_t bound) {
  const auto v = index_value(j, loc);
  if (v >= bound) shape_fail(loc, "index " + std::to_string(v) + " is out of range (size " + std::to_string(bound) + ")");
  return v;
}

const json& array_of(const json& j, const std::string& loc, std::size_t length) {
  if (!j.is_array()) parse_fail(loc, "expected an array, got " + std::string(j.type_name()));
  if (j.size() != length) {
    shape_fail(loc, "expected " + std::to_string(length) + " entries, got " + std::to_string(j.size()));
  }
  return j;
}

Table table_of(const json& j, const std::string& loc, std::size_t rows, std::size_t cols, std::size_t bound) {
  array_of(j, loc, rows);
  Table out(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto row_loc = at(loc, i);
    const json& row = array_of(j[i], row_loc, cols);
    for (std::size_t k = 0; k < cols; ++k) out[i].push_back(bounded(row[k], at(row_loc, k), bound));
  }
  return out;
}

std::size_t square_size(const json& j, const std::string& loc) {
  if (!j.is_array()) parse_fail(loc, "expected an array, got " + std::string(j.type_name()));
  if (j.empty()) shape_fail(loc, "table is empty");
  return j.size();
}

void check_keys(const json& obj, const std::string& loc, std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (auto k : allowed) ok = ok || it.key() == k;
    if (!ok) parse_fail(at(loc, it.key()), "unexpected key");
  }
}

std::string kind_of(const json& obj, const std::string& loc) {
  const json& k = member(obj, loc, "kind");
  if (!k.is_string()) parse_fail(at(loc, "kind"), "expected a string");
  return k.get<std::string>();
}

RingSpec ring_from_json(const json& j, const std::string& loc) {
  if (j.is_string()) {
    try {
      return parse_ring_spec(j.get<std::string>());
    } catch (const AxiomViolation&) {
      throw;
    } catch (const Error& e) {
      parse_fail(loc, e.what());
    }
  }
  if (!j.is_object()) parse_fail(loc, "expected a ring object or string, got " + std::string(j.type_name()));
  const std::string kind = kind_of(j, loc);
  if (kind == "cyclic" || kind == "dual" || kind == "upper") {
    check_keys(j, loc, {"kind", "n"});
    const auto n = index_value(member(j, loc, "n"), at(loc, "n"));
    if (n == 0) parse_fail(at(loc, "n"), "must be positive");
    if (kind == "cyclic") return RingSpec::cyclic(n);
    if (kind == "dual") return RingSpec::dual(n);
    return RingSpec::upper_triangular(n);
  }
  if (kind == "product") {
    check_keys(j, loc, {"kind", "factors"});
    const json& fs = member(j, loc, "factors");
    const auto floc = at(loc, "factors");
    if (!fs.is_array() || fs.empty()) parse_fail(floc, "expected a non-empty array");
    std::vector<RingSpec> factors;
    for (std::size_t i = 0; i < fs.size(); ++i) factors.push_back(ring_from_json(fs[i], at(floc, i)));
    return RingSpec::product(std::move(factors));
  }
  if (kind == "tables") {
    check_keys(j, loc, {"kind", "add", "mul", "zero", "one"});
    const std::size_t n = square_size(member(j, loc, "add"), at(loc, "add"));
    Table add = table_of(j["add"], at(loc, "add"), n, n, n);
    Table mul = table_of(member(j, loc, "mul"), at(loc, "mul"), n, n, n);
    const auto zero = bounded(member(j, loc, "zero"), at(loc, "zero"), n);
    const auto one = bounded(member(j, loc, "one"), at(loc, "one"), n);
    return RingSpec::tables(std::move(add), std::move(mul), zero, one);
  }
  parse_fail(at(loc, "kind"), "unknown ring kind \"" + kind + "\"");
}

ModuleSpec module_from_json(const json& j, const std::string& loc, std::size_t ring_size) {
  if (j.is_string()) {
    if (j.get<std::string>() == "regular") return ModuleSpec::regular();
    parse_fail(loc, "unknown module \"" + j.get<std::string>() + "\"");
  }
  if (!j.is_object()) parse_fail(loc, "expected a module object or string, got " + std::string(j.type_name()));
  const std::string kind = kind_of(j, loc);
  if (kind == "regular") {
    check_keys(j, loc, {"kind"});
    return ModuleSpec::regular();
  }
  if (kind == "tables") {
    check_keys(j, loc, {"kind", "add", "zero", "left", "right"});
    const std::size_t n = square_size(member(j, loc, "add"), at(loc, "add"));
    Table add = table_of(j["add"], at(loc, "add"), n, n, n);
    const auto zero = bounded(member(j, loc, "zero"), at(loc, "zero"), n);
    Table left = table_of(member(j, loc, "left"), at(loc, "left"), ring_size, n, n);
    Table right = table_of(member(j, loc, "right"), at(loc, "right"), n, ring_size, n);
    return ModuleSpec::tables(std::move(add), zero, std::move(left), std::move(right));
  }
  parse_fail(at(loc, "kind"), "unknown module kind \"" + kind + "\"");
}

bool is_zero_word(const json& j) { return j.is_string() && j.get<std::string>() == "zero"; }

std::vector<ModuleElement> flat_table(const json& j, const std::string& loc, std::size_t n, int depth,
                                      const Bimodule& m) {
  std::size_t total = 1;
  for (int d = 0; d < depth; ++d) total *= n;
  if (is_zero_word(j)) return std::vector<ModuleElement>(total, m.zero());
  if (j.is_string()) parse_fail(loc, "expected \"zero\" or a table");
  std::vector<ModuleElement> out;
  out.reserve(total);
  auto walk = [&](auto&& self, const json& node, const std::string& here, int level) -> void {
    array_of(node, here, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (level + 1 == depth) {
        out.push_back(module_element(bounded(node[i], at(here, i), m.size())));
      } else {
        self(self, node[i], at(here, i), level + 1);
      }
    }
  };
  walk(walk, j, loc, 0);
  return out;
}

ordered_json table_json(const Table& t) {
  ordered_json out = ordered_json::array();
  for (const auto& row : t) out.push_back(row);
  return out;
}

ordered_json ring_json(const RingSpec& r) {
  ordered_json out;
  switch (r.kind) {
    case RingSpec::Kind::Cyclic: out["kind"] = "cyclic"; out["n"] = r.n; break;
    case RingSpec::Kind::Dual: out["kind"] = "dual"; out["n"] = r.n; break;
    case RingSpec::Kind::UpperTriangular: out["kind"] = "upper"; out["n"] = r.n; break;
    case RingSpec::Kind::Product: {
      out["kind"] = "product";
      ordered_json fs = ordered_json::array();
      for (const auto& f : r.factors) fs.push_back(ring_json(f));
      out["factors"] = fs;
      break;
    }
    case RingSpec::Kind::Tables:
      out["kind"] = "tables";
      out["add"] = table_json(r.add);
      out["mul"] = table_json(r.mul);
      out["zero"] = r.zero;
      out["one"] = r.one;
      break;
  }
  return out;
}

ordered_json module_json(const ModuleSpec& m) {
  ordered_json out;
  if (m.kind == ModuleSpec::Kind::Regular) {
    out["kind"] = "regular";
    return out;
  }
  out["kind"] = "tables";
  out["add"] = table_json(m.add);
  out["zero"] = m.zero;
  out["left"] = table_json(m.left);
  out["right"] = table_json(m.right);
  return out;
}

ordered_json values_json(const std::vector<ModuleElement>& flat, std::size_t n, int depth, ModuleElement zero) {
  bool all_zero = true;
  for (auto v : flat) all_zero = all_zero && v == zero;
  if (all_zero) return "zero";
  std::size_t pos = 0;
  auto build = [&](auto&& self, int level) -> ordered_json {
    ordered_json node = ordered_json::array();
    for (std::size_t i = 0; i < n; ++i) {
      if (level + 1 == depth) {
        node.push_back(idx(flat[pos++]));
      } else {
        node.push_back(self(self, level + 1));
      }
    }
    return node;
  };
  return build(build, 0);
}

}  // namespace

AnnStructure parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_fail("byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) parse_fail("", "expected an object at top level");
  check_keys(doc, "", {"ring", "module", "eta", "lambda", "beta", "name"});
  if (doc.contains("name") && !doc["name"].is_string()) parse_fail("/name", "expected a string");

  const RingSpec rspec = ring_from_json(member(doc, "", "ring"), "/ring");
  std::shared_ptr<const FiniteRing> ring;
  try {
    ring = std::make_shared<const FiniteRing>(FiniteRing::build(rspec));
  } catch (const AxiomViolation&) {
    throw;
  } catch (const Error& e) {
    parse_fail("/ring", e.what());
  }
  const std::size_t n = ring->size();
  const ModuleSpec mspec = module_from_json(member(doc, "", "module"), "/module", n);
  auto module = std::make_shared<const Bimodule>(Bimodule::build(*ring, mspec));

  auto eta = flat_table(member(doc, "", "eta"), "/eta", n, 2, *module);
  auto lambda = flat_table(member(doc, "", "lambda"), "/lambda", n, 3, *module);
  std::optional<std::vector<ModuleElement>> beta;
  if (doc.contains("beta")) beta = flat_table(doc["beta"], "/beta", n, 2, *module);
  return AnnStructure(std::move(ring), std::move(module), std::move(eta), std::move(lambda), std::move(beta));
}

AnnStructure load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  return parse_instance(buf.str());
}

std::string serialize_instance(const AnnStructure& s) {
  const std::size_t n = s.ring().size();
  const ModuleElement z = s.module().zero();
  std::string out = "{\n";
  out += "  \"ring\": " + ring_json(s.ring().spec()).dump() + ",\n";
  out += "  \"module\": " + module_json(s.module().spec()).dump() + ",\n";
  out += "  \"eta\": " + values_json(s.eta_table(), n, 2, z).dump() + ",\n";
  out += "  \"lambda\": " + values_json(s.lambda_table(), n, 3, z).dump();
  if (s.beta_table()) out += ",\n  \"beta\": " + values_json(*s.beta_table(), n, 2, z).dump();
  out += "\n}\n";
  return out;
}

std::string instance_digest(const AnnStructure& s) {
  const std::string doc = serialize_instance(s);
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(doc.data(), doc.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::IoError, "SHA-256 failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

}  // namespace anncat
