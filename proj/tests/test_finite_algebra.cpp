#include <gtest/gtest.h>

#include <random>

#include "anncat/finite_algebra.hpp"
#include "oracles.hpp"

using namespace anncat;

namespace {

void expect_matches(const FiniteRing& ring, const oracle::Ring& ref) {
  ASSERT_EQ(ring.size(), static_cast<std::size_t>(ref.size));
  EXPECT_EQ(idx(ring.zero()), static_cast<std::size_t>(ref.zero));
  EXPECT_EQ(idx(ring.one()), static_cast<std::size_t>(ref.one));
  for (int a = 0; a < ref.size; ++a) {
    for (int b = 0; b < ref.size; ++b) {
      ASSERT_EQ(idx(ring.add(ring_element(a), ring_element(b))), static_cast<std::size_t>(ref.add(a, b)))
          << a << " + " << b;
      ASSERT_EQ(idx(ring.mul(ring_element(a), ring_element(b))), static_cast<std::size_t>(ref.mul(a, b)))
          << a << " * " << b;
    }
  }
}

Table add_mod(int n) {
  Table t(n, std::vector<std::uint32_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

Table mul_mod(int n) {
  Table t(n, std::vector<std::uint32_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a * b) % n;
  return t;
}

}  // namespace

TEST(FiniteRing, GeneratorsMatchHandArithmetic) {
  expect_matches(FiniteRing::build(RingSpec::cyclic(1)), oracle::cyclic(1));
  for (int n : {2, 3, 4, 6, 8}) expect_matches(FiniteRing::build(RingSpec::cyclic(n)), oracle::cyclic(n));
  for (int n : {2, 3}) expect_matches(FiniteRing::build(RingSpec::dual(n)), oracle::dual(n));
  for (int n : {2}) expect_matches(FiniteRing::build(RingSpec::upper_triangular(n)), oracle::upper(n));
  expect_matches(FiniteRing::build(RingSpec::product({RingSpec::cyclic(2), RingSpec::cyclic(3)})),
                 oracle::product(oracle::cyclic(2), oracle::cyclic(3)));
  expect_matches(FiniteRing::build(RingSpec::product({RingSpec::dual(2), RingSpec::cyclic(2)})),
                 oracle::product(oracle::dual(2), oracle::cyclic(2)));
}

TEST(FiniteRing, Commutativity) {
  EXPECT_TRUE(FiniteRing::build(RingSpec::cyclic(4)).is_commutative());
  EXPECT_TRUE(FiniteRing::build(RingSpec::dual(2)).is_commutative());
  EXPECT_FALSE(FiniteRing::build(RingSpec::upper_triangular(2)).is_commutative());
}

TEST(FiniteRing, CenterAgainstTripleLoop) {
  for (const auto& spec : {RingSpec::cyclic(6), RingSpec::dual(2), RingSpec::upper_triangular(2),
                           RingSpec::product({RingSpec::upper_triangular(2), RingSpec::cyclic(2)})}) {
    const auto ring = FiniteRing::build(spec);
    std::vector<RingElement> expected;
    for (std::size_t a = 0; a < ring.size(); ++a) {
      bool central = true;
      for (std::size_t x = 0; x < ring.size(); ++x)
        central = central && ring.mul(ring_element(a), ring_element(x)) == ring.mul(ring_element(x), ring_element(a));
      if (central) expected.push_back(ring_element(a));
    }
    EXPECT_EQ(ring_center(ring), expected) << to_text(spec);
  }
  // Scalars only: diag(a, a) over Z/2.
  const auto t2 = FiniteRing::build(RingSpec::upper_triangular(2));
  const std::vector<RingElement> scalars{ring_element(0), ring_element(5)};
  EXPECT_EQ(ring_center(t2), scalars);
}

TEST(FiniteRing, NegationAndSubtraction) {
  const auto ring = FiniteRing::build(RingSpec::dual(3));
  const auto ref = oracle::dual(3);
  for (int a = 0; a < ref.size; ++a) {
    EXPECT_EQ(idx(ring.neg(ring_element(a))), static_cast<std::size_t>(ref.neg(a)));
    for (int b = 0; b < ref.size; ++b)
      EXPECT_EQ(idx(ring.sub(ring_element(a), ring_element(b))), static_cast<std::size_t>(ref.sub(a, b)));
  }
}

TEST(FiniteRing, AdditiveGeneratorsSpanTheGroup) {
  for (const auto& spec : {RingSpec::cyclic(4), RingSpec::dual(2), RingSpec::dual(3),
                           RingSpec::product({RingSpec::cyclic(2), RingSpec::cyclic(2), RingSpec::cyclic(2)})}) {
    const auto ring = FiniteRing::build(spec);
    const auto gens = ring.additive_generators();
    std::vector<bool> seen(ring.size(), false);
    std::vector<RingElement> frontier{ring.zero()};
    seen[idx(ring.zero())] = true;
    while (!frontier.empty()) {
      const auto x = frontier.back();
      frontier.pop_back();
      for (auto g : gens) {
        const auto y = ring.add(x, g);
        if (!seen[idx(y)]) {
          seen[idx(y)] = true;
          frontier.push_back(y);
        }
      }
    }
    EXPECT_EQ(std::count(seen.begin(), seen.end(), true), static_cast<long>(ring.size())) << to_text(spec);
  }
  EXPECT_EQ(FiniteRing::build(RingSpec::cyclic(4)).additive_generators().size(), 1u);
  EXPECT_EQ(FiniteRing::build(RingSpec::dual(2)).additive_generators().size(), 2u);
}

TEST(FiniteRing, SpecText) {
  for (const char* text : {"cyclic(5)", "dual(2)", "upper(2)", "product(cyclic(2), dual(2))"}) {
    const auto spec = parse_ring_spec(text);
    EXPECT_EQ(parse_ring_spec(to_text(spec)), spec) << text;
  }
  EXPECT_EQ(parse_ring_spec(" product( cyclic(2) ,cyclic(3) ) "),
            RingSpec::product({RingSpec::cyclic(2), RingSpec::cyclic(3)}));
  for (const char* bad : {"", "cyclic", "cyclic(x)", "dual(2", "ring(3)", "product()", "cyclic(2)x"}) {
    try {
      parse_ring_spec(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::MalformedSpec) << bad;
    }
  }
  try {
    FiniteRing::build(parse_ring_spec("cyclic(0)"));
    ADD_FAILURE() << "built cyclic(0)";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedSpec);
  }
}

TEST(FiniteRing, ExplicitTablesRoundTrip) {
  const auto ring = FiniteRing::build(RingSpec::tables(add_mod(6), mul_mod(6), 0, 1));
  EXPECT_EQ(ring, FiniteRing::build(RingSpec::cyclic(6)));
}

TEST(FiniteRing, AxiomViolationNamesTheFirstTuple) {
  auto mul = mul_mod(4);
  mul[2][3] = 1;
  try {
    FiniteRing::build(RingSpec::tables(add_mod(4), mul, 0, 1));
    FAIL() << "accepted a broken multiplication";
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.code(), ErrorCode::AxiomViolation);
    EXPECT_EQ(e.law(), "mul associativity");
    ASSERT_EQ(e.witness().size(), 3u);
    // Re-evaluate the reported tuple by hand.
    const auto [a, b, c] = std::tuple{e.witness()[0], e.witness()[1], e.witness()[2]};
    auto times = [&](std::size_t x, std::size_t y) { return mul[x][y]; };
    EXPECT_NE(times(times(a, b), c), times(a, times(b, c)));
  }

  auto add = add_mod(3);
  std::swap(add[1][1], add[1][2]);
  EXPECT_THROW(FiniteRing::build(RingSpec::tables(add, mul_mod(3), 0, 1)), AxiomViolation);
}

TEST(FiniteRing, MalformedTables) {
  auto add = add_mod(3);
  add[1].pop_back();
  EXPECT_THROW(FiniteRing::build(RingSpec::tables(add, mul_mod(3), 0, 1)), Error);
  auto mul = mul_mod(3);
  mul[2][2] = 7;
  EXPECT_THROW(FiniteRing::build(RingSpec::tables(add_mod(3), mul, 0, 1)), Error);
  EXPECT_THROW(FiniteRing::build(RingSpec::tables(add_mod(3), mul_mod(3), 0, 5)), Error);
}

TEST(FiniteRing, RandomLawsOnProducts) {
  std::mt19937 gen(20261015);
  const auto spec = RingSpec::product({RingSpec::dual(2), RingSpec::upper_triangular(2)});
  const auto ring = FiniteRing::build(spec);
  std::uniform_int_distribution<std::size_t> pick(0, ring.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = ring_element(pick(gen)), b = ring_element(pick(gen)), c = ring_element(pick(gen));
    ASSERT_EQ(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c)));
    ASSERT_EQ(ring.mul(a, ring.add(b, c)), ring.add(ring.mul(a, b), ring.mul(a, c)));
    ASSERT_EQ(ring.mul(ring.add(a, b), c), ring.add(ring.mul(a, c), ring.mul(b, c)));
    ASSERT_EQ(ring.add(a, ring.neg(a)), ring.zero());
  }
}

TEST(Bimodule, RegularModuleIsTheRing) {
  const auto ring = FiniteRing::build(RingSpec::upper_triangular(2));
  const auto m = Bimodule::build(ring, ModuleSpec::regular());
  ASSERT_EQ(m.size(), ring.size());
  for (std::size_t r = 0; r < ring.size(); ++r) {
    for (std::size_t x = 0; x < ring.size(); ++x) {
      EXPECT_EQ(idx(m.left(ring_element(r), module_element(x))), idx(ring.mul(ring_element(r), ring_element(x))));
      EXPECT_EQ(idx(m.right(module_element(x), ring_element(r))), idx(ring.mul(ring_element(x), ring_element(r))));
    }
  }
  EXPECT_FALSE(m.is_symmetric());
  EXPECT_TRUE(Bimodule::build(FiniteRing::build(RingSpec::dual(2)), ModuleSpec::regular()).is_symmetric());
}

TEST(Bimodule, MultipleIsRepeatedSum) {
  const auto ring = FiniteRing::build(RingSpec::cyclic(5));
  const auto m = Bimodule::build(ring, ModuleSpec::regular());
  for (std::uint64_t k = 0; k < 12; ++k)
    for (std::size_t x = 0; x < 5; ++x) EXPECT_EQ(idx(m.multiple(k, module_element(x))), (k * x) % 5);
}

TEST(Bimodule, ExplicitTables) {
  // Z/2 as a module over Z/4 through reduction mod 2.
  const auto ring = FiniteRing::build(RingSpec::cyclic(4));
  Table add{{0, 1}, {1, 0}};
  Table left(4, std::vector<std::uint32_t>(2)), right(2, std::vector<std::uint32_t>(4));
  for (std::uint32_t r = 0; r < 4; ++r)
    for (std::uint32_t x = 0; x < 2; ++x) left[r][x] = right[x][r] = (r * x) % 2;
  const auto m = Bimodule::build(ring, ModuleSpec::tables(add, 0, left, right));
  EXPECT_EQ(m.size(), 2u);
  EXPECT_TRUE(m.is_symmetric());

  left[1][1] = 0;  // 1.m = m fails
  try {
    Bimodule::build(ring, ModuleSpec::tables(add, 0, left, right));
    FAIL();
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.law(), "left unit");
    EXPECT_EQ(e.witness(), std::vector<std::size_t>{1});
  }
}

TEST(Bimodule, SpecText) {
  EXPECT_EQ(parse_module_spec("regular"), ModuleSpec::regular());
  EXPECT_EQ(to_text(ModuleSpec::regular()), "regular");
  EXPECT_THROW(parse_module_spec("free(2)"), Error);
}
