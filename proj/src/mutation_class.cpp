#include "clusterkit/mutation_class.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <span>
#include <sstream>
#include <unordered_map>

#include "clusterkit/error.hpp"
#include "clusterkit/parallel.hpp"

namespace clusterkit {

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits limits;
  if (const char* env = std::getenv("CLUSTERKIT_MAX_SEEDS")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) limits.max_seeds = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "CLUSTERKIT_MAX_SEEDS must be a positive integer");
    }
  }
  return limits;
}

namespace {

struct Candidate {
  Seed seed;
  CanonicalSeed canonical;
};

struct Task {
  std::size_t index;
  std::size_t position;
};

MutationClass run(const Seed& root, const EnumerationLimits& limits, bool parallel) {
  std::vector<Seed> seeds{root};
  std::vector<CanonicalSeed> canon{canonical_form(root)};
  std::unordered_map<CanonicalSeed, std::size_t, CanonicalSeedHash> index{{canon[0], 0}};
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> raw_edges;

  std::vector<std::size_t> frontier{0};
  std::size_t depth = 0;
  bool complete = true;
  bool full = seeds.size() >= limits.max_seeds;

  while (!frontier.empty()) {
    std::vector<Task> tasks;
    for (std::size_t i : frontier)
      for (std::size_t p = 0; p < root.exchangeable_count(); ++p) tasks.push_back({i, p});

    std::vector<Candidate> results(tasks.size());
    auto work = [&](std::size_t t) {
      Seed s = mutate_at(seeds[tasks[t].index], tasks[t].position);
      CanonicalSeed c = canonical_form(s);
      results[t] = Candidate{std::move(s), std::move(c)};
    };
    if (parallel) {
      const long count = static_cast<long>(tasks.size());
      CLUSTERKIT_OMP(omp parallel for schedule(dynamic, 4))
      for (long t = 0; t < count; ++t) work(static_cast<std::size_t>(t));
    } else {
      for (std::size_t t = 0; t < tasks.size(); ++t) work(t);
    }

    const bool may_grow = depth < limits.max_depth;
    std::vector<std::size_t> next;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      auto it = index.find(results[t].canonical);
      std::size_t target;
      if (it != index.end()) {
        target = it->second;
      } else {
        if (!may_grow || full) {
          complete = false;
          continue;
        }
        target = seeds.size();
        index.emplace(results[t].canonical, target);
        seeds.push_back(std::move(results[t].seed));
        canon.push_back(std::move(results[t].canonical));
        next.push_back(target);
        if (seeds.size() >= limits.max_seeds) full = true;
      }
      raw_edges.emplace_back(tasks[t].index, tasks[t].position, target);
    }
    if (!next.empty()) ++depth;
    frontier = std::move(next);
  }

  // Canonical output order.
  std::vector<std::size_t> order(seeds.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return canonical_less(canon[a], canon[b]); });
  std::vector<std::size_t> rank(seeds.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  MutationClass out;
  out.root = root;
  out.complete = complete;
  out.depth_reached = depth;
  out.root_index = rank[0];
  out.seeds.reserve(seeds.size());
  for (std::size_t i : order) {
    out.seeds.push_back(std::move(seeds[i]));
    out.canonical.push_back(std::move(canon[i]));
  }
  // Adjacent clusters differ in exactly one exchangeable variable; label the
  // edge by its position in the lower-ranked seed so both directions agree.
  std::set<MutationEdge> edges;
  for (auto [from, pos, to] : raw_edges) {
    std::size_t a = rank[from];
    std::size_t b = rank[to];
    if (a > b) std::swap(a, b);
    const Seed& lo = out.seeds[a];
    const Seed& hi = out.seeds[b];
    std::size_t label = pos;
    if (a != b) {
      const auto hi_ex = std::span(hi.values()).first(hi.exchangeable_count());
      for (std::size_t p = 0; p < lo.exchangeable_count(); ++p)
        if (std::find(hi_ex.begin(), hi_ex.end(), lo.value(p)) == hi_ex.end()) label = p;
    }
    edges.insert(MutationEdge{a, root.name(label), b});
  }
  out.edges.assign(edges.begin(), edges.end());
  return out;
}

}  // namespace

MutationClass enumerate_class(const Seed& seed, const EnumerationLimits& limits) {
  return run(seed, limits, parallel::enabled() && parallel::max_threads() > 1);
}

MutationClass enumerate_class_serial(const Seed& seed, const EnumerationLimits& limits) {
  return run(seed, limits, false);
}

ClusterVariables cluster_variables(const MutationClass& cls) {
  ClusterVariables out;
  out.complete = cls.complete;
  std::set<LaurentPoly, LaurentLess> ex;
  for (const auto& s : cls.seeds)
    for (std::size_t p = 0; p < s.exchangeable_count(); ++p) ex.insert(s.value(p));
  out.exchangeable.assign(ex.begin(), ex.end());
  for (std::size_t p = cls.root.exchangeable_count(); p < cls.root.size(); ++p) {
    out.frozen.push_back(cls.root.value(p));
  }
  return out;
}

std::string exchange_graph_dot(const MutationClass& cls) {
  std::ostringstream os;
  os << "graph {\n";
  for (std::size_t i = 0; i < cls.seeds.size(); ++i) {
    const Seed& s = cls.seeds[i];
    std::string label;
    for (std::size_t p = 0; p < s.exchangeable_count(); ++p) {
      if (p) label += ", ";
      label += to_fraction_string(s.value(p), s.universe());
    }
    os << "  \"s" << i << "\" [label=\"{" << label << "}\"";
    if (i == cls.root_index) os << ", peripheries=2";
    os << "];\n";
  }
  for (const auto& e : cls.edges) {
    os << "  \"s" << e.from << "\" -- \"s" << e.to << "\" [label=\"" << e.variable << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace clusterkit
