#include <doctest.h>

#include <random>
#include <set>

#include "clusterkit/mutation_class.hpp"
#include "support.hpp"

using namespace clusterkit;
using namespace testsupport;

namespace {

std::set<std::string> texts(const std::vector<LaurentPoly>& ps, const Universe& u) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(to_string(p, u));
  return out;
}

}  // namespace

TEST_CASE("trivial seed has a single seed") {
  const Seed s = make_seed({}, {"x1", "x2"}, {{}, {}});
  const MutationClass c = enumerate_class(s);
  CHECK(c.seeds.size() == 1);
  CHECK(c.complete);
  const ClusterVariables v = cluster_variables(c);
  CHECK(v.exchangeable.empty());
  CHECK(texts(v.frozen, s.universe()) == std::set<std::string>{"x1", "x2"});
}

TEST_CASE("A2 with coefficients") {
  const Seed s = a2_with_coefficients();
  const MutationClass c = enumerate_class(s);
  CHECK(c.complete);
  CHECK(c.seeds.size() == 5);
  CHECK(c.edges.size() == 5);
  const ClusterVariables v = cluster_variables(c);
  std::set<std::string> want;
  for (const char* e : {"x1", "x2", "(1+x2)/x1", "(x1+x3)/x2", "(x1+x3+x2*x3)/(x1*x2)"})
    want.insert(to_string(parse_laurent(e, s.universe()), s.universe()));
  CHECK(texts(v.exchangeable, s.universe()) == want);
  CHECK(texts(v.frozen, s.universe()) == std::set<std::string>{"x3", "x4"});
  // Each cluster has two neighbours in the pentagon.
  std::vector<int> degree(c.seeds.size(), 0);
  for (const auto& e : c.edges) {
    CHECK(e.from < e.to);
    ++degree[e.from];
    ++degree[e.to];
  }
  for (int d : degree) CHECK(d == 2);
  CHECK(c.seeds[c.root_index] == canonicalize(s));
}

TEST_CASE("A2 without coefficients has five variables") {
  const Seed s = make_seed({"x1", "x2"}, {}, {{0, 1}, {-1, 0}});
  const ClusterVariables v = cluster_variables(enumerate_class(s));
  CHECK(v.complete);
  CHECK(v.exchangeable.size() == 5);
}

TEST_CASE("A3 path: 14 seeds, 9 variables, agrees with the numeric oracle") {
  const Seed s = a3_path();
  const MutationClass c = enumerate_class(s);
  CHECK(c.complete);
  CHECK(c.seeds.size() == 14);
  CHECK(c.edges.size() == 21);
  CHECK(cluster_variables(c).exchangeable.size() == 9);
  const NumericClass n = numeric_enumerate(s, 1000);
  CHECK(n.complete);
  CHECK(n.seeds == 14);
  CHECK(n.exchangeable.size() == 9);
}

TEST_CASE("finite types from the numeric oracle") {
  // B2 (6 seeds) and G2 (8 seeds), with a frozen row.
  const Seed b2 = make_seed({"x1", "x2"}, {"x3"}, {{0, 1}, {-2, 0}, {1, 1}});
  const Seed g2 = make_seed({"x1", "x2"}, {}, {{0, 1}, {-3, 0}});
  for (const Seed& s : {b2, g2}) {
    const MutationClass c = enumerate_class(s);
    const NumericClass n = numeric_enumerate(s, 1000);
    CHECK(c.complete);
    CHECK(n.complete);
    CHECK(c.seeds.size() == n.seeds);
    CHECK(cluster_variables(c).exchangeable.size() == n.exchangeable.size());
  }
  CHECK(enumerate_class(b2).seeds.size() == 6);
  CHECK(enumerate_class(g2).seeds.size() == 8);
}

TEST_CASE("budgets report incompleteness") {
  const Seed kronecker = make_seed({"x1", "x2"}, {}, {{0, 2}, {-2, 0}});
  EnumerationLimits lim;
  lim.max_seeds = 20;
  lim.max_depth = 50;
  const MutationClass c = enumerate_class(kronecker, lim);
  CHECK_FALSE(c.complete);
  CHECK(c.seeds.size() <= 20);
  EnumerationLimits shallow;
  shallow.max_depth = 1;
  const MutationClass d = enumerate_class(a3_path(), shallow);
  CHECK_FALSE(d.complete);
  CHECK(d.seeds.size() == 4);
  CHECK(d.depth_reached <= 1);
}

TEST_CASE("serial and parallel enumeration agree") {
  // Small shapes keep wild seeds from growing past memory at this depth.
  std::mt19937_64 rng(5);
  RandomShape shape;
  shape.max_exchangeable = 3;
  shape.max_total = 5;
  shape.bound = 2;
  EnumerationLimits lim;
  lim.max_seeds = 60;
  lim.max_depth = 3;
  for (int i = 0; i < 40; ++i) {
    const Seed s = random_seed(rng, shape);
    const MutationClass a = enumerate_class(s, lim);
    const MutationClass b = enumerate_class_serial(s, lim);
    CHECK(a.seeds == b.seeds);
    CHECK(a.edges == b.edges);
    CHECK(a.complete == b.complete);
    CHECK(a.root_index == b.root_index);
  }
}

TEST_CASE("freezing subalgebra variables occur in the whole class") {
  const Seed s = a3_path();
  const ClusterVariables whole = cluster_variables(enumerate_class(s));
  for (const char* x : {"x1", "x2", "x3"}) {
    const ClusterVariables part = cluster_variables(enumerate_class(freeze(s, {x})));
    CHECK(part.complete);
    for (const auto& v : part.exchangeable)
      CHECK(std::find(whole.exchangeable.begin(), whole.exchangeable.end(), v) != whole.exchangeable.end());
  }
}

TEST_CASE("exchange graph DOT") {
  const std::string dot = exchange_graph_dot(enumerate_class(a2_with_coefficients()));
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("(1+x2)/x1") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t p = dot.find(" -- "); p != std::string::npos; p = dot.find(" -- ", p + 1)) ++edges;
  CHECK(edges == 5);
}
