#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clusterkit/seed.hpp"

namespace clusterkit {

/// An ordered complete pair of subseeds of the freezing at `freezing_set`.
/// Side indices refer to the components of decompose_seed(freezing).
struct CompletePair {
  std::vector<std::string> freezing_set;
  std::vector<std::size_t> side1;
  std::vector<std::size_t> side2;
  Seed seed1;
  Seed seed2;
  /// Frozen variables of the freezing (old frozen plus freezing_set).
  std::vector<std::string> coefficients;
  /// Reading a pair as a cotorsion pair assumes the core is functorially
  /// finite; nothing here checks that.
  bool assumes_functorially_finite = true;
};

/// All 2^c ordered pairs, c the number of components of the freezing. Pairs
/// are listed by the bitmask of side1 in increasing order.
std::vector<CompletePair> enumerate_complete_pairs(const Seed& seed,
                                                   const std::vector<std::string>& freezing_set);

/// Re-checks the defining conditions from scratch; returns the first violated
/// one, or nothing.
std::optional<std::string> verify_complete_pair(const Seed& seed, const CompletePair& pair);

struct ClassifyOptions {
  /// Explicit freezing sets; empty means every subset of the exchangeable
  /// variables.
  std::vector<std::vector<std::string>> freezings;
  /// Enumerating all subsets is refused above this many exchangeable
  /// variables unless `force` is set.
  std::size_t max_exchangeable = 12;
  bool force = false;
};

struct ClassEntry {
  std::vector<std::string> freezing_set;
  std::vector<CompletePair> pairs;
};

std::vector<ClassEntry> classify_cotorsion_pairs(const Seed& seed, const ClassifyOptions& options = {});
/// Single-threaded reference with identical output.
std::vector<ClassEntry> classify_cotorsion_pairs_serial(const Seed& seed,
                                                        const ClassifyOptions& options = {});

}  // namespace clusterkit
