#include <doctest.h>

#include <fstream>
#include <httplib.h>
#include <sstream>
#include <thread>

#include "clusterkit/json_io.hpp"
#include "clusterkit/service.hpp"
#include "support.hpp"

using namespace clusterkit;
using namespace testsupport;

namespace {

const std::string kData = CLUSTERKIT_DATA_DIR;
using Query = std::multimap<std::string, std::string>;

std::string slurp(const std::string& name) {
  std::ifstream in(kData + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json body(const HttpResponse& r) { return Json::parse(r.body); }

std::string create(Service& svc, const std::string& seed_json) {
  const HttpResponse r = svc.handle("POST", "/sessions", {}, seed_json);
  REQUIRE(r.status == 201);
  return body(r).at("id");
}

bool has_variable(const Json& state, const std::string& display) {
  for (const auto& v : state.at("variables"))
    if (v.at("display") == display) return true;
  return false;
}

// The parts of a state that must agree between equivalent sessions.
Json comparable(Json state) {
  state.erase("id");
  state.erase("history");
  return state;
}

}  // namespace

TEST_CASE("create, mutate, inspect") {
  Service svc;
  const std::string id = create(svc, slurp("a2_coefficients.json"));
  const HttpResponse got = svc.handle("GET", "/sessions/" + id, {}, "");
  CHECK(got.status == 200);
  const Json state = body(got);
  CHECK(state.at("seed") == Json::parse(slurp("a2_coefficients.json")));
  CHECK(state.at("quiver").at("arrows").size() == 2);
  CHECK(state.at("dot").get<std::string>().rfind("digraph", 0) == 0);
  CHECK(state.at("variables").size() == 4);

  const HttpResponse m = svc.handle("POST", "/sessions/" + id + "/mutate", {}, "x1");
  CHECK(m.status == 200);
  CHECK(has_variable(body(m), "(1+x2)/x1"));
  CHECK(body(m).at("history").size() == 1);
  // JSON string and object bodies are accepted too.
  CHECK(svc.handle("POST", "/sessions/" + id + "/mutate", {}, "\"x2\"").status == 200);
  CHECK(svc.handle("POST", "/sessions/" + id + "/mutate", {}, R"({"variable": "x2"})").status == 200);
}

TEST_CASE("mutating twice restores the fresh session") {
  Service svc;
  const std::string a = create(svc, slurp("a2_coefficients.json"));
  const std::string b = create(svc, slurp("a2_coefficients.json"));
  CHECK(a != b);
  svc.handle("POST", "/sessions/" + a + "/mutate", {}, "x1");
  svc.handle("POST", "/sessions/" + a + "/mutate", {}, "x1");
  const Json sa = body(svc.handle("GET", "/sessions/" + a, {}, ""));
  const Json sb = body(svc.handle("GET", "/sessions/" + b, {}, ""));
  CHECK(comparable(sa) == comparable(sb));
  CHECK(sa.at("history").size() == 2);
  CHECK(sa.at("history")[0].at("digest") != sa.at("history")[1].at("digest"));
  CHECK(sa.at("history")[1].at("digest") == seed_digest(a2_with_coefficients()));
}

TEST_CASE("undo pops the history") {
  Service svc;
  const std::string id = create(svc, slurp("a3.json"));
  const Json fresh = body(svc.handle("GET", "/sessions/" + id, {}, ""));
  svc.handle("POST", "/sessions/" + id + "/mutate", {}, "x2");
  const Json one = body(svc.handle("GET", "/sessions/" + id, {}, ""));
  svc.handle("POST", "/sessions/" + id + "/mutate", {}, "x1");
  CHECK(comparable(body(svc.handle("POST", "/sessions/" + id + "/undo", {}, ""))) == comparable(one));
  CHECK(comparable(body(svc.handle("POST", "/sessions/" + id + "/undo", {}, ""))) == comparable(fresh));
  const HttpResponse empty = svc.handle("POST", "/sessions/" + id + "/undo", {}, "");
  CHECK(empty.status == 422);
  CHECK(body(empty).at("error") == "NothingToUndo");
}

TEST_CASE("errors") {
  Service svc;
  const std::string id = create(svc, slurp("a2_coefficients.json"));
  const HttpResponse frozen = svc.handle("POST", "/sessions/" + id + "/mutate", {}, "x3");
  CHECK(frozen.status == 422);
  CHECK(body(frozen).at("error") == "NotExchangeable");
  CHECK(body(frozen).contains("detail"));
  CHECK(svc.handle("GET", "/sessions/nope", {}, "").status == 404);
  CHECK(svc.handle("POST", "/sessions/nope/mutate", {}, "x1").status == 404);
  CHECK(svc.handle("GET", "/elsewhere", {}, "").status == 404);
  CHECK(svc.handle("POST", "/sessions", {}, "{").status == 400);
  CHECK(svc.handle("POST", "/sessions", {}, R"({"exchangeable": ["x1","x2"], "frozen": [], "matrix": [[0,1],[1,0]]})")
            .status == 400);
  CHECK(svc.handle("OPTIONS", "/sessions", {}, "").status == 204);
}

TEST_CASE("history replay reproduces the current seed") {
  Service svc;
  const Seed root = seven_vertex();
  const std::string id = create(svc, seed_to_json(root));
  std::mt19937_64 rng(4);
  std::vector<std::string> seq;
  for (int i = 0; i < 8; ++i) {
    const std::string x = root.name(rng() % root.exchangeable_count());
    seq.push_back(x);
    const Json state = body(svc.handle("POST", "/sessions/" + id + "/mutate", {}, x));
    const Seed expected = apply_sequence(root, seq);
    CHECK(state.at("seed") == seed_json_value(expected));
    CHECK(state.at("history").back().at("digest") == seed_digest(expected));
  }
}

TEST_CASE("exchange graph neighbourhood") {
  Service svc;
  const std::string id = create(svc, slurp("a3.json"));
  const Json g = body(svc.handle("GET", "/sessions/" + id + "/graph", {}, ""));
  CHECK(g.at("radius") == 2);
  CHECK(g.at("truncated") == false);
  // x1 and x3 commute, closing a square: five seeds at distance two.
  CHECK(g.at("seeds").size() == 1 + 3 + 5);
  const Json small = body(svc.handle("GET", "/sessions/" + id + "/graph", {{"budget", "4"}}, ""));
  CHECK(small.at("seeds").size() == 4);
  CHECK(small.at("truncated") == true);
  const Json wide = body(svc.handle("GET", "/sessions/" + id + "/graph", {{"radius", "10"}}, ""));
  CHECK(wide.at("seeds").size() == 14);
  CHECK(wide.at("edges").size() == 21);
  CHECK(svc.handle("GET", "/sessions/" + id + "/graph", {{"budget", "x"}}, "").status == 400);
}

TEST_CASE("stateless endpoints are pure") {
  Service svc;
  Json morph = Json::parse(slurp("non_ideal.json"));
  morph["source"] = Json::parse(slurp("a2_coefficients.json"));
  morph["target"] = morph["source"];
  const HttpResponse c1 = svc.handle("POST", "/check-morphism", {}, morph.dump());
  const HttpResponse c2 = svc.handle("POST", "/check-morphism", {}, morph.dump());
  CHECK(c1.status == 200);
  CHECK(c1.body == c2.body);
  CHECK(body(c1).at("is_morphism") == true);
  CHECK(body(c1).at("image_seed") == Json::parse(R"({"exchangeable": [], "frozen": ["x1"], "matrix": [[]]})"));

  const HttpResponse d = svc.handle("POST", "/decompose", {}, slurp("seven_vertex.json"));
  CHECK(d.status == 200);
  CHECK(body(d).at("components").size() == 3);
  CHECK(svc.handle("POST", "/decompose", {}, slurp("seven_vertex.json")).body == d.body);

  const HttpResponse p = svc.handle("POST", "/complete-pairs", {}, slurp("seven_vertex.json"));
  CHECK(body(p)[0].at("count") == 8);
  const HttpResponse pf = svc.handle("POST", "/complete-pairs", {{"freeze", "x2"}}, slurp("a3.json"));
  CHECK(body(pf)[0].at("count") == 4);
  const Json req = {{"seed", Json::parse(slurp("a3.json"))}, {"all", true}};
  CHECK(body(svc.handle("POST", "/complete-pairs", {}, req.dump())).size() == 8);
  CHECK(svc.handle("POST", "/complete-pairs", {{"freeze", "x9"}}, slurp("a3.json")).status == 422);
  CHECK(svc.handle("POST", "/check-morphism", {}, "{}").status == 400);
  CHECK(svc.handle("GET", "/decompose", {}, "").status == 404);
  CHECK(svc.session_count() == 0);
}

TEST_CASE("sessions are evicted least recently used first") {
  ServiceOptions opt;
  opt.max_sessions = 3;
  Service svc(opt);
  const std::string first = create(svc, slurp("a3.json"));
  const std::string second = create(svc, slurp("a3.json"));
  create(svc, slurp("a3.json"));
  CHECK(svc.handle("GET", "/sessions/" + first, {}, "").status == 200);  // touch
  create(svc, slurp("a3.json"));
  CHECK(svc.session_count() == 3);
  CHECK(svc.handle("GET", "/sessions/" + first, {}, "").status == 200);
  CHECK(svc.handle("GET", "/sessions/" + second, {}, "").status == 404);
}

TEST_CASE("concurrent mutations on one session stay consistent") {
  Service svc;
  const Seed root = a3_path();
  const std::string id = create(svc, seed_to_json(root));
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&svc, &id, t] {
      for (int i = 0; i < 10; ++i) svc.handle("POST", "/sessions/" + id + "/mutate", {}, t % 2 ? "x1" : "x3");
    });
  for (auto& th : threads) th.join();
  const Json state = body(svc.handle("GET", "/sessions/" + id, {}, ""));
  REQUIRE(state.at("history").size() == 40);
  std::vector<std::string> seq;
  for (const auto& h : state.at("history")) seq.push_back(h.at("variable"));
  CHECK(state.at("seed") == seed_json_value(apply_sequence(root, seq)));
}

TEST_CASE("HTTP round trip") {
  Service svc;
  HttpServer server(svc);
  const int port = server.start();
  REQUIRE(port > 0);
  httplib::Client cli("127.0.0.1", port);
  auto created = cli.Post("/sessions", slurp("a2_coefficients.json"), "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  CHECK(created->get_header_value("Access-Control-Allow-Origin") == "*");
  const std::string id = Json::parse(created->body).at("id");
  auto mutated = cli.Post("/sessions/" + id + "/mutate", "x1", "text/plain");
  REQUIRE(mutated);
  CHECK(mutated->status == 200);
  CHECK(has_variable(Json::parse(mutated->body), "(1+x2)/x1"));
  auto graph = cli.Get("/sessions/" + id + "/graph?budget=3");
  REQUIRE(graph);
  CHECK(Json::parse(graph->body).at("seeds").size() == 3);
  auto frozen = cli.Post("/sessions/" + id + "/mutate", "x3", "text/plain");
  REQUIRE(frozen);
  CHECK(frozen->status == 422);
  auto missing = cli.Get("/sessions/unknown");
  REQUIRE(missing);
  CHECK(missing->status == 404);
  server.stop();
}
