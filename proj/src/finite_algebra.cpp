#include "anncat/finite_algebra.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace anncat {

namespace {

using Flat = std::vector<std::uint32_t>;

struct RawRing {
  std::size_t size = 0;
  Flat add;
  Flat mul;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;
  std::vector<std::string> labels;
};

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedSpec, what); }

Flat flatten(const Table& table, std::size_t rows, std::size_t cols, std::size_t bound, const char* name) {
  if (table.size() != rows) {
    malformed(std::string(name) + " table has " + std::to_string(table.size()) + " rows, expected " +
              std::to_string(rows));
  }
  Flat flat;
  flat.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (table[i].size() != cols) {
      malformed(std::string(name) + " table row " + std::to_string(i) + " has " + std::to_string(table[i].size()) +
                " entries, expected " + std::to_string(cols));
    }
    for (auto v : table[i]) {
      if (v >= bound) malformed(std::string(name) + " table entry " + std::to_string(v) + " out of range");
      flat.push_back(v);
    }
  }
  return flat;
}

RawRing raw_cyclic(std::uint32_t n) {
  if (n == 0) malformed("cyclic ring needs n >= 1");
  RawRing r;
  r.size = n;
  r.add.resize(std::size_t{n} * n);
  r.mul.resize(std::size_t{n} * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      r.add[a * n + b] = (a + b) % n;
      r.mul[a * n + b] = static_cast<std::uint32_t>((std::uint64_t{a} * b) % n);
    }
    r.labels.push_back(std::to_string(a));
  }
  r.zero = 0;
  r.one = 1 % n;
  return r;
}

std::string dual_label(std::uint32_t a, std::uint32_t b) {
  if (b == 0) return std::to_string(a);
  std::string t = (b == 1 ? std::string("t") : std::to_string(b) + "t");
  if (a == 0) return t;
  return std::to_string(a) + "+" + t;
}

RawRing raw_dual(std::uint32_t n) {
  if (n == 0) malformed("dual ring needs n >= 1");
  RawRing r;
  const std::size_t size = std::size_t{n} * n;
  r.size = size;
  r.add.resize(size * size);
  r.mul.resize(size * size);
  auto enc = [n](std::uint64_t a, std::uint64_t b) { return static_cast<std::uint32_t>((a % n) + n * (b % n)); };
  for (std::uint32_t x = 0; x < size; ++x) {
    const std::uint64_t a = x % n, b = x / n;
    for (std::uint32_t y = 0; y < size; ++y) {
      const std::uint64_t c = y % n, d = y / n;
      r.add[x * size + y] = enc(a + c, b + d);
      r.mul[x * size + y] = enc(a * c, a * d + b * c);
    }
    r.labels.push_back(dual_label(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)));
  }
  r.zero = 0;
  r.one = enc(1, 0);
  return r;
}

RawRing raw_upper(std::uint32_t n) {
  if (n == 0) malformed("upper triangular ring needs n >= 1");
  RawRing r;
  const std::size_t size = std::size_t{n} * n * n;
  r.size = size;
  r.add.resize(size * size);
  r.mul.resize(size * size);
  auto enc = [n](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return static_cast<std::uint32_t>((a % n) + n * (b % n) + n * n * (c % n));
  };
  for (std::uint32_t x = 0; x < size; ++x) {
    const std::uint64_t a = x % n, b = (x / n) % n, c = x / (n * n);
    for (std::uint32_t y = 0; y < size; ++y) {
      const std::uint64_t a2 = y % n, b2 = (y / n) % n, c2 = y / (n * n);
      r.add[x * size + y] = enc(a + a2, b + b2, c + c2);
      r.mul[x * size + y] = enc(a * a2, a * b2 + b * c2, c * c2);
    }
    r.labels.push_back("[" + std::to_string(a) + "," + std::to_string(b) + ";0," + std::to_string(c) + "]");
  }
  r.zero = 0;
  r.one = enc(1, 0, 1);
  return r;
}

RawRing raw_from_spec(const RingSpec& spec);

RawRing raw_product(const std::vector<RingSpec>& factors) {
  if (factors.empty()) malformed("product ring needs at least one factor");
  std::vector<RawRing> parts;
  std::size_t size = 1;
  for (const auto& f : factors) {
    parts.push_back(raw_from_spec(f));
    size *= parts.back().size;
    if (size > (1u << 16)) malformed("product ring too large");
  }
  // Mixed radix, first factor fastest.
  auto decode = [&](std::size_t x) {
    std::vector<std::uint32_t> digits;
    for (const auto& p : parts) {
      digits.push_back(static_cast<std::uint32_t>(x % p.size));
      x /= p.size;
    }
    return digits;
  };
  auto encode = [&](const std::vector<std::uint32_t>& digits) {
    std::size_t x = 0;
    for (std::size_t i = parts.size(); i-- > 0;) x = x * parts[i].size + digits[i];
    return static_cast<std::uint32_t>(x);
  };
  RawRing r;
  r.size = size;
  r.add.resize(size * size);
  r.mul.resize(size * size);
  std::vector<std::vector<std::uint32_t>> coords(size);
  for (std::size_t x = 0; x < size; ++x) coords[x] = decode(x);
  std::vector<std::uint32_t> sum(parts.size()), prod(parts.size());
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto n = parts[i].size;
        sum[i] = parts[i].add[coords[x][i] * n + coords[y][i]];
        prod[i] = parts[i].mul[coords[x][i] * n + coords[y][i]];
      }
      r.add[x * size + y] = encode(sum);
      r.mul[x * size + y] = encode(prod);
    }
    std::string label = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i != 0) label += ",";
      label += parts[i].labels[coords[x][i]];
    }
    r.labels.push_back(label + ")");
  }
  std::vector<std::uint32_t> zeros, ones;
  for (const auto& p : parts) {
    zeros.push_back(p.zero);
    ones.push_back(p.one);
  }
  r.zero = encode(zeros);
  r.one = encode(ones);
  return r;
}

RawRing raw_tables(const RingSpec& spec) {
  if (spec.size == 0) malformed("ring tables need size >= 1");
  RawRing r;
  r.size = spec.size;
  r.add = flatten(spec.add, spec.size, spec.size, spec.size, "add");
  r.mul = flatten(spec.mul, spec.size, spec.size, spec.size, "mul");
  if (spec.zero >= spec.size) malformed("zero index out of range");
  if (spec.one >= spec.size) malformed("one index out of range");
  r.zero = spec.zero;
  r.one = spec.one;
  for (std::size_t i = 0; i < spec.size; ++i) r.labels.push_back(std::to_string(i));
  return r;
}

RawRing raw_from_spec(const RingSpec& spec) {
  switch (spec.kind) {
    case RingSpec::Kind::Cyclic: return raw_cyclic(spec.n);
    case RingSpec::Kind::Dual: return raw_dual(spec.n);
    case RingSpec::Kind::UpperTriangular: return raw_upper(spec.n);
    case RingSpec::Kind::Product: return raw_product(spec.factors);
    case RingSpec::Kind::Tables: return raw_tables(spec);
  }
  malformed("unknown ring kind");
}

// Abelian group laws on a flat addition table; returns the negation table.
Flat check_abelian_group(std::size_t n, const Flat& add, std::uint32_t zero, const std::string& prefix) {
  auto plus = [&](std::size_t a, std::size_t b) -> std::size_t { return add[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (plus(plus(a, b), c) != plus(a, plus(b, c))) throw AxiomViolation(prefix + "add associativity", {a, b, c});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (plus(a, b) != plus(b, a)) throw AxiomViolation(prefix + "add commutativity", {a, b});
  for (std::size_t a = 0; a < n; ++a)
    if (plus(zero, a) != a) throw AxiomViolation(prefix + "add identity", {a});
  Flat neg(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t b = 0;
    while (b < n && plus(a, b) != zero) ++b;
    if (b == n) throw AxiomViolation(prefix + "add inverse", {a});
    neg[a] = static_cast<std::uint32_t>(b);
  }
  return neg;
}

std::string indent_error(std::size_t pos, const std::string& text, const std::string& what) {
  return "ring spec '" + text + "' at offset " + std::to_string(pos) + ": " + what;
}

class SpecParser {
 public:
  explicit SpecParser(std::string text) : text_(std::move(text)) {}

  RingSpec parse_ring() {
    RingSpec spec = ring();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

 private:
  RingSpec ring() {
    const std::string name = word();
    expect('(');
    RingSpec spec;
    if (name == "product") {
      std::vector<RingSpec> factors;
      factors.push_back(ring());
      while (peek() == ',') {
        ++pos_;
        factors.push_back(ring());
      }
      spec = RingSpec::product(std::move(factors));
    } else {
      const std::uint32_t n = number();
      if (name == "cyclic") spec = RingSpec::cyclic(n);
      else if (name == "dual") spec = RingSpec::dual(n);
      else if (name == "upper") spec = RingSpec::upper_triangular(n);
      else fail("unknown ring kind '" + name + "'");
    }
    expect(')');
    return spec;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string word() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a ring kind");
    return text_.substr(start, pos_ - start);
  }
  std::uint32_t number() {
    skip_ws();
    const auto start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > 0xFFFF) fail("number too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return static_cast<std::uint32_t>(v);
  }
  [[noreturn]] void fail(const std::string& what) { malformed(indent_error(pos_, text_, what)); }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingSpec RingSpec::cyclic(std::uint32_t n) {
  RingSpec s;
  s.kind = Kind::Cyclic;
  s.n = n;
  return s;
}

RingSpec RingSpec::dual(std::uint32_t n) {
  RingSpec s;
  s.kind = Kind::Dual;
  s.n = n;
  return s;
}

RingSpec RingSpec::upper_triangular(std::uint32_t n) {
  RingSpec s;
  s.kind = Kind::UpperTriangular;
  s.n = n;
  return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
  RingSpec s;
  s.kind = Kind::Product;
  s.factors = std::move(factors);
  return s;
}

RingSpec RingSpec::tables(Table add, Table mul, std::uint32_t zero, std::uint32_t one) {
  RingSpec s;
  s.kind = Kind::Tables;
  s.size = static_cast<std::uint32_t>(add.size());
  s.add = std::move(add);
  s.mul = std::move(mul);
  s.zero = zero;
  s.one = one;
  return s;
}

std::string to_text(const RingSpec& spec) {
  switch (spec.kind) {
    case RingSpec::Kind::Cyclic: return "cyclic(" + std::to_string(spec.n) + ")";
    case RingSpec::Kind::Dual: return "dual(" + std::to_string(spec.n) + ")";
    case RingSpec::Kind::UpperTriangular: return "upper(" + std::to_string(spec.n) + ")";
    case RingSpec::Kind::Product: {
      std::string out = "product(";
      for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        if (i != 0) out += ",";
        out += to_text(spec.factors[i]);
      }
      return out + ")";
    }
    case RingSpec::Kind::Tables: return "tables(" + std::to_string(spec.size) + ")";
  }
  return "?";
}

RingSpec parse_ring_spec(const std::string& text) { return SpecParser(text).parse_ring(); }

FiniteRing FiniteRing::build(const RingSpec& spec) {
  RawRing raw = raw_from_spec(spec);
  const std::size_t n = raw.size;
  FiniteRing ring;
  ring.neg_ = check_abelian_group(n, raw.add, raw.zero, "");

  auto plus = [&](std::size_t a, std::size_t b) -> std::size_t { return raw.add[a * n + b]; };
  auto times = [&](std::size_t a, std::size_t b) -> std::size_t { return raw.mul[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (times(times(a, b), c) != times(a, times(b, c))) throw AxiomViolation("mul associativity", {a, b, c});
  for (std::size_t a = 0; a < n; ++a)
    if (times(raw.one, a) != a || times(a, raw.one) != a) throw AxiomViolation("mul identity", {a});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (times(a, plus(b, c)) != plus(times(a, b), times(a, c)))
          throw AxiomViolation("left distributivity", {a, b, c});
        if (times(plus(b, c), a) != plus(times(b, a), times(c, a)))
          throw AxiomViolation("right distributivity", {a, b, c});
      }

  ring.size_ = n;
  ring.add_ = std::move(raw.add);
  ring.mul_ = std::move(raw.mul);
  ring.zero_ = ring_element(raw.zero);
  ring.one_ = ring_element(raw.one);
  ring.spec_ = spec;
  ring.labels_ = std::move(raw.labels);
  ring.commutative_ = true;
  for (std::size_t a = 0; a < n && ring.commutative_; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (ring.mul_[a * n + b] != ring.mul_[b * n + a]) {
        ring.commutative_ = false;
        break;
      }
  return ring;
}

std::vector<RingElement> FiniteRing::elements() const {
  std::vector<RingElement> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(ring_element(i));
  return out;
}

std::vector<RingElement> FiniteRing::additive_generators() const {
  std::vector<bool> covered(size_, false);
  covered[idx(zero_)] = true;
  std::vector<RingElement> gens;
  std::vector<RingElement> members{zero_};
  for (std::size_t i = 0; i < size_; ++i) {
    if (covered[i]) continue;
    gens.push_back(ring_element(i));
    // Close the subgroup under adding the new generator.
    bool grew = true;
    while (grew) {
      grew = false;
      const auto snapshot = members;
      for (auto m : snapshot) {
        const auto s = add(m, ring_element(i));
        if (!covered[idx(s)]) {
          covered[idx(s)] = true;
          members.push_back(s);
          grew = true;
        }
      }
    }
  }
  return gens;
}

std::vector<RingElement> ring_center(const FiniteRing& ring) {
  std::vector<RingElement> out;
  for (auto a : ring.elements()) {
    bool central = true;
    for (auto x : ring.elements()) {
      if (ring.mul(a, x) != ring.mul(x, a)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(a);
  }
  return out;
}

ModuleSpec ModuleSpec::regular() { return ModuleSpec{}; }

ModuleSpec ModuleSpec::tables(Table add, std::uint32_t zero, Table left, Table right) {
  ModuleSpec s;
  s.kind = Kind::Tables;
  s.size = static_cast<std::uint32_t>(add.size());
  s.add = std::move(add);
  s.zero = zero;
  s.left = std::move(left);
  s.right = std::move(right);
  return s;
}

std::string to_text(const ModuleSpec& spec) {
  return spec.kind == ModuleSpec::Kind::Regular ? "regular" : "tables(" + std::to_string(spec.size) + ")";
}

ModuleSpec parse_module_spec(const std::string& text) {
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  if (trimmed == "regular") return ModuleSpec::regular();
  malformed("module spec '" + text + "': only 'regular' has a text form");
}

Bimodule Bimodule::build(const FiniteRing& ring, const ModuleSpec& spec) {
  const std::size_t rn = ring.size();
  Bimodule m;
  m.ring_size_ = rn;
  m.spec_ = spec;
  if (spec.kind == ModuleSpec::Kind::Regular) {
    m.size_ = rn;
    m.add_.resize(rn * rn);
    m.left_.resize(rn * rn);
    m.right_.resize(rn * rn);
    for (auto r : ring.elements()) {
      for (auto s : ring.elements()) {
        m.add_[idx(r) * rn + idx(s)] = static_cast<std::uint32_t>(idx(ring.add(r, s)));
        m.left_[idx(r) * rn + idx(s)] = static_cast<std::uint32_t>(idx(ring.mul(r, s)));
        m.right_[idx(r) * rn + idx(s)] = static_cast<std::uint32_t>(idx(ring.mul(r, s)));
      }
      m.labels_.push_back(ring.label(r));
    }
    m.zero_ = module_element(idx(ring.zero()));
  } else {
    if (spec.size == 0) malformed("module tables need size >= 1");
    m.size_ = spec.size;
    m.add_ = flatten(spec.add, spec.size, spec.size, spec.size, "module add");
    m.left_ = flatten(spec.left, rn, spec.size, spec.size, "module left");
    m.right_ = flatten(spec.right, spec.size, rn, spec.size, "module right");
    if (spec.zero >= spec.size) malformed("module zero index out of range");
    m.zero_ = module_element(spec.zero);
    for (std::size_t i = 0; i < spec.size; ++i) m.labels_.push_back(std::to_string(i));
  }

  const std::size_t n = m.size_;
  m.neg_ = check_abelian_group(n, m.add_, static_cast<std::uint32_t>(idx(m.zero_)), "module ");

  auto plus = [&](std::size_t a, std::size_t b) -> std::size_t { return m.add_[a * n + b]; };
  auto lt = [&](std::size_t r, std::size_t x) -> std::size_t { return m.left_[r * n + x]; };
  auto rt = [&](std::size_t x, std::size_t r) -> std::size_t { return m.right_[x * rn + r]; };
  auto rplus = [&](std::size_t r, std::size_t s) { return idx(ring.add(ring_element(r), ring_element(s))); };
  auto rtimes = [&](std::size_t r, std::size_t s) { return idx(ring.mul(ring_element(r), ring_element(s))); };
  const std::size_t one = idx(ring.one());

  for (std::size_t x = 0; x < n; ++x) {
    if (lt(one, x) != x) throw AxiomViolation("left unit", {x});
    if (rt(x, one) != x) throw AxiomViolation("right unit", {x});
  }
  for (std::size_t r = 0; r < rn; ++r)
    for (std::size_t s = 0; s < rn; ++s)
      for (std::size_t x = 0; x < n; ++x) {
        if (lt(rtimes(r, s), x) != lt(r, lt(s, x))) throw AxiomViolation("left associativity", {r, s, x});
        if (lt(rplus(r, s), x) != plus(lt(r, x), lt(s, x))) throw AxiomViolation("left ring distributivity", {r, s, x});
        if (rt(x, rtimes(r, s)) != rt(rt(x, r), s)) throw AxiomViolation("right associativity", {x, r, s});
        if (rt(x, rplus(r, s)) != plus(rt(x, r), rt(x, s))) throw AxiomViolation("right ring distributivity", {x, r, s});
        if (rt(lt(r, x), s) != lt(r, rt(x, s))) throw AxiomViolation("actions commute", {r, x, s});
      }
  for (std::size_t r = 0; r < rn; ++r)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (lt(r, plus(x, y)) != plus(lt(r, x), lt(r, y))) throw AxiomViolation("left module distributivity", {r, x, y});
        if (rt(plus(x, y), r) != plus(rt(x, r), rt(y, r))) throw AxiomViolation("right module distributivity", {x, y, r});
      }

  m.symmetric_ = true;
  for (std::size_t r = 0; r < rn && m.symmetric_; ++r)
    for (std::size_t x = 0; x < n; ++x)
      if (lt(r, x) != rt(x, r)) {
        m.symmetric_ = false;
        break;
      }
  return m;
}

ModuleElement Bimodule::multiple(std::uint64_t k, ModuleElement m) const {
  ModuleElement acc = zero_;
  ModuleElement base = m;
  while (k != 0) {
    if (k & 1u) acc = add(acc, base);
    base = add(base, base);
    k >>= 1u;
  }
  return acc;
}

std::vector<ModuleElement> Bimodule::elements() const {
  std::vector<ModuleElement> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(module_element(i));
  return out;
}

}  // namespace anncat
