#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "clusterkit/seed.hpp"

namespace clusterkit {

struct EnumerationLimits {
  std::size_t max_seeds = 10000;
  std::size_t max_depth = 16;

  /// Defaults, with max_seeds overridden by CLUSTERKIT_MAX_SEEDS if set.
  static EnumerationLimits from_environment();
};

struct MutationEdge {
  std::size_t from = 0;
  std::string variable;
  std::size_t to = 0;

  auto operator<=>(const MutationEdge&) const = default;
};

/// Seeds reachable from a root, one representative per unordered seed,
/// sorted by canonical form. Each undirected edge is listed once with
/// from < to.
struct MutationClass {
  Seed root;
  std::vector<Seed> seeds;
  std::vector<CanonicalSeed> canonical;
  std::vector<MutationEdge> edges;
  std::size_t root_index = 0;
  bool complete = false;
  std::size_t depth_reached = 0;
};

/// Breadth-first closure under mutation. Frontier expansion runs in
/// parallel; merging is serial in frontier order so the result does not
/// depend on the thread count.
MutationClass enumerate_class(const Seed& seed, const EnumerationLimits& limits = {});
/// Single-threaded reference implementation with identical output.
MutationClass enumerate_class_serial(const Seed& seed, const EnumerationLimits& limits = {});

struct ClusterVariables {
  std::vector<LaurentPoly> exchangeable;  // sorted by compare()
  std::vector<LaurentPoly> frozen;        // position order
  bool complete = false;
};

ClusterVariables cluster_variables(const MutationClass& cls);

/// Undirected DOT rendering of the exchange graph; node labels list the
/// cluster in fraction form.
std::string exchange_graph_dot(const MutationClass& cls);

}  // namespace clusterkit
