#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "clusterkit/seed.hpp"

namespace clusterkit {

struct ServiceOptions {
  std::size_t max_sessions = 256;
  std::size_t graph_radius = 2;
  std::size_t graph_budget = 64;
};

struct HttpResponse {
  int status = 200;
  std::string body;
};

/// FNV-1a digest of a seed's canonical form, as 16 hex digits (JSON numbers
/// would lose bits in browsers).
std::string seed_digest(const Seed& seed);

/// Transport-independent request handling; the HTTP server forwards every
/// request here.
class Service {
 public:
  explicit Service(ServiceOptions options = {});

  HttpResponse handle(const std::string& method, const std::string& path,
                      const std::multimap<std::string, std::string>& query, const std::string& body);

  std::size_t session_count() const;

 private:
  struct HistoryEntry {
    std::string variable;
    std::string digest;
  };
  struct Session {
    std::mutex mutex;
    std::string id;
    Seed root;
    Seed current;
    std::vector<HistoryEntry> history;
  };
  using SessionPtr = std::shared_ptr<Session>;

  SessionPtr find(const std::string& id);
  std::string create(Seed root);

  HttpResponse session_state(Session& s);
  HttpResponse mutate(Session& s, const std::string& body);
  HttpResponse undo(Session& s);
  HttpResponse graph(Session& s, const std::multimap<std::string, std::string>& query);

  ServiceOptions options_;
  mutable std::mutex mutex_;
  std::list<std::string> lru_;  // most recent first
  std::unordered_map<std::string, std::pair<SessionPtr, std::list<std::string>::iterator>> sessions_;
  std::uint64_t counter_ = 0;
};

/// Blocking HTTP server on host:port. Returns when the server stops.
/// `on_ready` receives the bound port (useful with port 0).
bool serve_http(Service& service, const std::string& host, int port, std::ostream& log,
                const std::function<void(int)>& on_ready = {});

/// Background server handle for tests and embedding.
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds to an ephemeral port on host and starts serving; returns the port.
  int start(const std::string& host = "127.0.0.1");
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace clusterkit
