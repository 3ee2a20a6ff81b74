#include <doctest.h>

#include <random>
#include <set>

#include "clusterkit/error.hpp"
#include "clusterkit/morphism.hpp"
#include "clusterkit/pairs.hpp"
#include "support.hpp"

using namespace clusterkit;
using namespace testsupport;

namespace {

std::size_t components_with_exchangeables(const Seed& s, const std::vector<std::string>& ex0) {
  std::size_t c = 0;
  for (const auto& comp : decompose_seed(freeze(s, ex0)).components) c += comp.exchangeable_count() > 0;
  return c;
}

MorphismSpec into_freezing(const Seed& side, const Seed& freezing) {
  std::map<std::string, LaurentPoly> images;
  for (const auto& n : side.names()) images[n] = parse_laurent(n, freezing.names());
  return MorphismSpec::make(side, freezing, images);
}

}  // namespace

TEST_CASE("indecomposable seed gives two pairs") {
  const Seed s = a3_path();
  const auto pairs = enumerate_complete_pairs(s, {});
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].seed1.exchangeable_count() + pairs[0].seed2.exchangeable_count() == 3);
  CHECK(pairs[0].seed1.exchangeable_count() * pairs[0].seed2.exchangeable_count() == 0);
  CHECK(pairs[0].side1 == pairs[1].side2);
  CHECK(pairs[0].side2 == pairs[1].side1);
}

TEST_CASE("seven-vertex seed gives eight pairs") {
  const auto pairs = enumerate_complete_pairs(seven_vertex(), {});
  CHECK(pairs.size() == 8);
  for (const auto& p : pairs) {
    CHECK_FALSE(verify_complete_pair(seven_vertex(), p));
    CHECK(p.coefficients == std::vector<std::string>{"x3", "x4"});
    CHECK(p.assumes_functorially_finite);
  }
}

TEST_CASE("freezing everything leaves one trivial pair") {
  const Seed s = a3_path();
  const auto pairs = enumerate_complete_pairs(s, {"x1", "x2", "x3"});
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].seed1.is_trivial());
  CHECK(pairs[0].seed2.is_trivial());
  CHECK(pairs[0].seed1.frozen_count() == 3);
}

TEST_CASE("errors") {
  try {
    enumerate_complete_pairs(a2_with_coefficients(), {"x3"});
    FAIL("expected NotExchangeable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotExchangeable);
  }
  const Seed big = make_seed({"a", "b", "c", "d"}, {}, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  ClassifyOptions opt;
  opt.max_exchangeable = 3;
  try {
    classify_cotorsion_pairs(big, opt);
    FAIL("expected SubsetBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SubsetBudgetExceeded);
  }
  opt.force = true;
  CHECK(classify_cotorsion_pairs(big, opt).size() == 16);
}

TEST_CASE("two components give four pairs") {
  const Seed s = make_seed({"x1", "x2"}, {}, {{0, 0}, {0, 0}});
  CHECK(enumerate_complete_pairs(s, {}).size() == 4);
}

TEST_CASE("A3 classification") {
  const auto entries = classify_cotorsion_pairs(a3_path());
  CHECK(entries.size() == 8);
  std::size_t total = 0;
  for (const auto& e : entries) {
    CHECK(e.pairs.size() == (std::size_t{1} << components_with_exchangeables(a3_path(), e.freezing_set)));
    total += e.pairs.size();
  }
  // ex0 = {} : 2; singletons x1, x3 : 2 each, x2 : 4; pairs of vertices : 2 each; all : 1.
  CHECK(total == 2 + 2 + 4 + 2 + 2 + 2 + 2 + 1);
}

TEST_CASE("pairs without coefficients exist only without frozen variables and freezing") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    const Seed s = random_seed(rng, {3, 5, 2, 0.4});
    for (const auto& e : classify_cotorsion_pairs(s))
      for (const auto& p : e.pairs) CHECK(p.coefficients.empty() == (s.frozen_count() == 0 && e.freezing_set.empty()));
  }
}

TEST_CASE("count law, swap closure, verification, component embeddings") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 60; ++i) {
    const Seed s = random_seed(rng);
    const auto entries = classify_cotorsion_pairs(s);
    CHECK(entries.size() == (std::size_t{1} << s.exchangeable_count()));
    for (const auto& e : entries) {
      CHECK(e.pairs.size() == (std::size_t{1} << components_with_exchangeables(s, e.freezing_set)));
      std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> sides;
      for (const auto& p : e.pairs) sides.insert({p.side1, p.side2});
      for (const auto& p : e.pairs) {
        CHECK(sides.count({p.side2, p.side1}) == 1);
        CHECK_FALSE(verify_complete_pair(s, p));
      }
      const Seed f = freeze(s, e.freezing_set);
      for (const auto& p : e.pairs)
        for (const Seed* side : {&p.seed1, &p.seed2}) {
          if (side->exchangeable_count() == 0) continue;
          CHECK_NOTHROW(analyze_injection(into_freezing(*side, f)));
        }
    }
  }
}

TEST_CASE("serial and parallel classification agree") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const Seed s = random_seed(rng);
    const auto a = classify_cotorsion_pairs(s);
    const auto b = classify_cotorsion_pairs_serial(s);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].freezing_set == b[k].freezing_set);
      REQUIRE(a[k].pairs.size() == b[k].pairs.size());
      for (std::size_t j = 0; j < a[k].pairs.size(); ++j) {
        CHECK(a[k].pairs[j].side1 == b[k].pairs[j].side1);
        CHECK(a[k].pairs[j].seed1 == b[k].pairs[j].seed1);
        CHECK(a[k].pairs[j].seed2 == b[k].pairs[j].seed2);
      }
    }
  }
}
