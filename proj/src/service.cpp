#include "clusterkit/service.hpp"

#include <httplib.h>

#include <iomanip>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "clusterkit/error.hpp"
#include "clusterkit/json_io.hpp"
#include "clusterkit/mutation_class.hpp"
#include "clusterkit/pairs.hpp"
#include "clusterkit/quiver.hpp"

namespace clusterkit {

namespace {

HttpResponse json_response(int status, const Json& j) { return HttpResponse{status, j.dump(2) + "\n"}; }

HttpResponse error_response(int status, const std::string& code, const std::string& detail) {
  return json_response(status, Json{{"error", code}, {"detail", detail}});
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidSeed:
    case ErrorCode::NotSkewSymmetrizable:
    case ErrorCode::UnknownVariable:
    case ErrorCode::InvalidMorphism:
      return 400;
    default:
      return 422;
  }
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : path) {
    if (c == '/') {
      if (!cur.empty()) parts.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(std::move(cur));
  return parts;
}

Json parse_body(const std::string& body) {
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON body: ") + e.what());
  }
}

std::string query_value(const std::multimap<std::string, std::string>& q, const std::string& key) {
  auto it = q.find(key);
  return it == q.end() ? std::string() : it->second;
}

std::size_t query_size(const std::multimap<std::string, std::string>& q, const std::string& key,
                       std::size_t fallback) {
  const std::string v = query_value(q, key);
  if (v.empty()) return fallback;
  try {
    const long long n = std::stoll(v);
    if (n <= 0) throw std::invalid_argument("non-positive");
    return static_cast<std::size_t>(n);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "query parameter " + key + " must be a positive integer");
  }
}

std::vector<std::string> comma_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Json state_json(const std::string& id, const Seed& root, const Seed& current,
                const std::vector<std::pair<std::string, std::string>>& history) {
  Json vars = Json::array();
  for (std::size_t p = 0; p < current.size(); ++p) {
    vars.push_back(Json{{"name", current.name(p)},
                        {"exchangeable", current.is_exchangeable(p)},
                        {"value", to_string(current.value(p), current.universe())},
                        {"display", to_fraction_string(current.value(p), current.universe())}});
  }
  Json hist = Json::array();
  for (const auto& [var, digest] : history) hist.push_back(Json{{"variable", var}, {"digest", digest}});
  const IceQuiver q = seed_quiver(current);
  return Json{{"id", id},
              {"root", seed_json_value(root)},
              {"seed", seed_json_value(current)},
              {"quiver", quiver_to_json(q)},
              {"dot", to_dot(q)},
              {"variables", vars},
              {"history", hist}};
}

}  // namespace

std::string seed_digest(const Seed& seed) {
  const CanonicalSeed c = canonical_form(seed);
  std::string text;
  for (const auto& v : c.exchangeable) text += to_string(v, seed.universe()) + ";";
  text += "|";
  for (const auto& v : c.frozen) text += to_string(v, seed.universe()) + ";";
  text += "|";
  for (auto e : c.entries) text += std::to_string(e) + ",";
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << h;
  return hex.str();
}

Service::Service(ServiceOptions options) : options_(options) {}

std::size_t Service::session_count() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

Service::SessionPtr Service::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return nullptr;
  lru_.splice(lru_.begin(), lru_, it->second.second);
  return it->second.first;
}

std::string Service::create(Seed root) {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  auto s = std::make_shared<Session>();
  s->root = root;
  s->current = std::move(root);
  std::lock_guard lock(mutex_);
  std::ostringstream id;
  id << std::hex << rng() << ++counter_;
  s->id = id.str();
  lru_.push_front(s->id);
  sessions_[s->id] = {s, lru_.begin()};
  while (sessions_.size() > options_.max_sessions) {
    sessions_.erase(lru_.back());
    lru_.pop_back();
  }
  return s->id;
}

HttpResponse Service::session_state(Session& s) {
  std::vector<std::pair<std::string, std::string>> hist;
  for (const auto& h : s.history) hist.emplace_back(h.variable, h.digest);
  return json_response(200, state_json(s.id, s.root, s.current, hist));
}

HttpResponse Service::mutate(Session& s, const std::string& body) {
  std::string var = body;
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (body[first] == '{' || body[first] == '"')) {
    Json j = parse_body(body);
    if (j.is_string()) {
      var = j.get<std::string>();
    } else if (j.is_object() && j.contains("variable") && j.at("variable").is_string()) {
      var = j.at("variable").get<std::string>();
    } else {
      throw Error(ErrorCode::ParseError, "expected a variable name");
    }
  }
  while (!var.empty() && std::isspace(static_cast<unsigned char>(var.back()))) var.pop_back();
  var.erase(0, var.find_first_not_of(" \t\r\n") == std::string::npos ? var.size() : var.find_first_not_of(" \t\r\n"));
  Seed next = clusterkit::mutate(s.current, var);
  s.history.push_back({var, seed_digest(next)});
  s.current = std::move(next);
  return session_state(s);
}

HttpResponse Service::undo(Session& s) {
  if (s.history.empty()) return error_response(422, "NothingToUndo", "history is empty");
  s.history.pop_back();
  std::vector<std::string> seq;
  for (const auto& h : s.history) seq.push_back(h.variable);
  s.current = apply_sequence(s.root, seq);
  return session_state(s);
}

HttpResponse Service::graph(Session& s, const std::multimap<std::string, std::string>& query) {
  const std::size_t budget = query_size(query, "budget", options_.graph_budget);
  const std::size_t radius = query_size(query, "radius", options_.graph_radius);
  std::vector<Seed> seeds{s.current};
  std::unordered_map<CanonicalSeed, std::size_t, CanonicalSeedHash> index{{canonical_form(s.current), 0}};
  std::vector<std::tuple<std::size_t, std::string, std::size_t>> edges;
  std::vector<std::size_t> frontier{0};
  bool truncated = false;
  for (std::size_t level = 0; level < radius && !frontier.empty(); ++level) {
    std::vector<std::size_t> next;
    for (std::size_t i : frontier) {
      for (std::size_t p = 0; p < seeds[i].exchangeable_count(); ++p) {
        Seed m = mutate_at(seeds[i], p);
        auto key = canonical_form(m);
        auto it = index.find(key);
        std::size_t j;
        if (it != index.end()) {
          j = it->second;
        } else if (seeds.size() >= budget) {
          truncated = true;
          continue;
        } else {
          j = seeds.size();
          index.emplace(std::move(key), j);
          seeds.push_back(std::move(m));
          next.push_back(j);
        }
        if (i < j) edges.emplace_back(i, seeds[i].name(p), j);
      }
    }
    frontier = std::move(next);
  }
  Json js = Json::array();
  for (const auto& seed : seeds) {
    Json cluster = Json::array();
    for (std::size_t p = 0; p < seed.exchangeable_count(); ++p) {
      cluster.push_back(to_fraction_string(seed.value(p), seed.universe()));
    }
    js.push_back(Json{{"cluster", cluster}, {"seed", seed_json_value(seed)}});
  }
  Json je = Json::array();
  for (const auto& [a, v, b] : edges) je.push_back(Json{{"from", a}, {"variable", v}, {"to", b}});
  return json_response(200, Json{{"current", 0},
                                 {"radius", radius},
                                 {"budget", budget},
                                 {"truncated", truncated},
                                 {"seeds", js},
                                 {"edges", je}});
}

HttpResponse Service::handle(const std::string& method, const std::string& path,
                             const std::multimap<std::string, std::string>& query, const std::string& body) {
  try {
    const auto parts = split_path(path);
    if (method == "OPTIONS") return HttpResponse{204, ""};

    if (parts.size() == 1 && parts[0] == "sessions" && method == "POST") {
      Seed root = seed_from_json(parse_body(body));
      validate(root);
      const std::string id = create(root);
      SessionPtr s = find(id);
      std::lock_guard lock(s->mutex);
      auto r = session_state(*s);
      r.status = 201;
      return r;
    }
    if (parts.size() >= 2 && parts[0] == "sessions") {
      SessionPtr s = find(parts[1]);
      if (!s) return error_response(404, "UnknownSession", "no session '" + parts[1] + "'");
      std::lock_guard lock(s->mutex);
      if (parts.size() == 2 && method == "GET") return session_state(*s);
      if (parts.size() == 3 && parts[2] == "mutate" && method == "POST") return mutate(*s, body);
      if (parts.size() == 3 && parts[2] == "undo" && method == "POST") return undo(*s);
      if (parts.size() == 3 && parts[2] == "graph" && method == "GET") return graph(*s, query);
    }
    if (parts.size() == 1 && method == "POST") {
      if (parts[0] == "check-morphism") {
        const MorphismSpec spec = morphism_from_json(parse_body(body));
        CheckOptions opts;
        opts.depth = query_size(query, "depth", 0);
        const auto verdict = check_morphism(spec, opts);
        Json out = verdict_to_json(spec, verdict);
        out["image_seed"] = seed_json_value(image_seed(spec));
        return json_response(200, out);
      }
      if (parts[0] == "decompose") {
        const Seed seed = seed_from_json(parse_body(body)).as_initial();
        validate(seed);
        return json_response(200, decomposition_to_json(decompose_seed(seed)));
      }
      if (parts[0] == "complete-pairs") {
        const Json j = parse_body(body);
        ClassifyOptions opts;
        Seed seed;
        if (j.is_object() && j.contains("seed")) {
          seed = seed_from_json(j.at("seed"));
          if (j.contains("freeze")) opts.freezings.push_back(j.at("freeze").get<std::vector<std::string>>());
          opts.force = j.value("force", false);
          if (!j.value("all", false) && opts.freezings.empty()) opts.freezings.push_back({});
        } else {
          seed = seed_from_json(j);
          opts.freezings.push_back(comma_list(query_value(query, "freeze")));
        }
        validate(seed);
        return json_response(200, pairs_to_json(classify_cotorsion_pairs(seed, opts)));
      }
    }
    return error_response(404, "NotFound", method + " " + path);
  } catch (const Error& e) {
    return error_response(status_for(e.code()), std::string(to_string(e.code())), e.detail());
  } catch (const Json::exception& e) {
    return error_response(400, "ParseError", e.what());
  }
}

// ------------------------------------------------------------------- HTTP

namespace {

void install(httplib::Server& server, Service& service) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  auto forward = [&service](const httplib::Request& req, httplib::Response& res) {
    std::multimap<std::string, std::string> query(req.params.begin(), req.params.end());
    HttpResponse r = service.handle(req.method, req.path, query, req.body);
    res.status = r.status;
    if (!r.body.empty()) res.set_content(r.body, "application/json");
  };
  server.Get(".*", forward);
  server.Post(".*", forward);
  server.Options(".*", forward);
}

}  // namespace

bool serve_http(Service& service, const std::string& host, int port, std::ostream& log,
                const std::function<void(int)>& on_ready) {
  httplib::Server server;
  install(server, service);
  int bound = port;
  if (port == 0) {
    bound = server.bind_to_any_port(host);
  } else if (!server.bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound < 0) {
    log << "cannot bind " << host << ":" << port << "\n";
    return false;
  }
  log << "listening on http://" << host << ":" << bound << "\n" << std::flush;
  if (on_ready) on_ready(bound);
  return server.listen_after_bind();
}

struct HttpServer::Impl {
  explicit Impl(Service& s) : service(s) {}
  Service& service;
  httplib::Server server;
  std::thread thread;
};

HttpServer::HttpServer(Service& service) : impl_(std::make_unique<Impl>(service)) {
  install(impl_->server, service);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::start(const std::string& host) {
  const int port = impl_->server.bind_to_any_port(host);
  if (port < 0) throw std::runtime_error("cannot bind " + host);
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return port;
}

void HttpServer::stop() {
  if (!impl_) return;
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace clusterkit
