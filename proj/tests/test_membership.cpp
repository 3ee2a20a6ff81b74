#include <doctest.h>

#include <random>

#include "clusterkit/membership.hpp"

using namespace clusterkit;

namespace {

const std::vector<std::string> kNames = {"x1", "x2", "x3", "x4"};

LaurentPoly P(const std::string& s) { return parse_laurent(s, kNames); }

std::vector<LaurentPoly> gens(std::initializer_list<const char*> texts) {
  std::vector<LaurentPoly> out;
  for (const char* t : texts) out.push_back(P(t));
  return out;
}

}  // namespace

TEST_CASE("constants are members") {
  const MembershipResult r = test_membership(P("-7"), gens({"x1"}));
  CHECK(r.status == Membership::Member);
  CHECK(r.reason == "constant");
}

TEST_CASE("support certificate") {
  const MembershipResult r = test_membership(P("x2"), gens({"x1"}));
  CHECK(r.status == Membership::NotMember);
  CHECK(r.reason == "support");
}

TEST_CASE("denominator certificate") {
  const MembershipResult r = test_membership(P("(1+x2)/x1"), gens({"x1", "x2"}));
  CHECK(r.status == Membership::NotMember);
  CHECK(r.reason == "denominator");
}

TEST_CASE("integral combinations are certified and replay") {
  const auto g = gens({"x1", "x2", "(1+x2)/x1"});
  for (const char* t : {"x1^2 + 2*x1", "1 + x2", "x1*x2 - 3", "(1+x2)^2/x1 + x2", "2*x2 + 2"}) {
    const MembershipResult r = test_membership(P(t), g);
    CHECK_MESSAGE(r.status == Membership::Member, t);
    CHECK(r.reason == "combination");
    CHECK(evaluate_certificate(r.certificate, g) == P(t));
  }
}

TEST_CASE("bounded search reports unknown") {
  MembershipOptions opt;
  opt.degree_bound = 2;
  const MembershipResult r = test_membership(P("x1^5"), gens({"x1"}), opt);
  CHECK(r.status == Membership::Unknown);
  CHECK(default_degree_bound(gens({"x1*x2", "x3"})) == 4);
}

TEST_CASE("random products of generators are found") {
  std::mt19937_64 rng(9);
  const auto g = gens({"x1", "(x1+x3)/x2", "x3"});
  std::uniform_int_distribution<int> e(0, 2);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int i = 0; i < 40; ++i) {
    LaurentPoly p(0);
    for (int t = 0; t < 2; ++t)
      p = p + LaurentPoly(c(rng)) * g[0].pow(e(rng)) * g[1].pow(e(rng)) * g[2].pow(e(rng));
    // At most six factors per product; the default bound may stop short but
    // must never refute.
    CHECK(test_membership(p, g).status != Membership::NotMember);
    MembershipOptions opt;
    opt.degree_bound = 6;
    const MembershipResult r = test_membership(p, g, opt);
    CHECK_MESSAGE(r.status == Membership::Member, r.reason << " " << to_string(p, kNames));
    if (r.status == Membership::Member) CHECK(evaluate_certificate(r.certificate, g) == p);
  }
}
