#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "clusterkit/seed.hpp"

namespace testsupport {

using clusterkit::Seed;
using Rational = boost::multiprecision::cpp_rational;

Seed make_seed(std::vector<std::string> ex, std::vector<std::string> fx,
               const std::vector<std::vector<std::int64_t>>& rows);

// Seeds used across the suites.
Seed a2_with_coefficients();  // ex x1,x2; fx x3,x4
Seed seven_vertex();          // ex x1,x2,x5,x6,x7; fx x3,x4
Seed freezing_source();       // three exchangeable, no frozen
Seed a3_path();
Seed subalgebra_source();     // ex x1,x2; fx x3
Seed subalgebra_target();     // ex x1,x2,x3

struct RandomShape {
  std::size_t max_exchangeable = 4;
  std::size_t max_total = 6;
  std::int64_t bound = 3;
  // Probability that an off-diagonal pair is left at zero.
  double sparsity = 0.4;
};

/// Skew-symmetrizable by construction: picks d and sets b_ij = k d_j / g,
/// b_ji = -k d_i / g with g = gcd(d_i, d_j), rejecting entries past the bound.
Seed random_seed(std::mt19937_64& rng, const RandomShape& shape = {});

/// Value of a Laurent polynomial at a point keyed by universe name.
Rational evaluate(const clusterkit::LaurentPoly& p, const clusterkit::Universe& names,
                  const std::map<std::string, Rational>& point);

/// Mutation done on numbers only: the matrix rule and the exchange relation
/// evaluated at the current values.
struct NumericSeed {
  std::vector<std::vector<std::int64_t>> b;  // rows x exchangeable columns
  std::size_t n = 0;
  std::vector<Rational> x;

  NumericSeed mutate(std::size_t k) const;
};

NumericSeed numeric_seed(const Seed& seed, const std::map<std::string, Rational>& point);

/// Generic point: distinct small primes over distinct small denominators.
std::map<std::string, Rational> generic_point(const Seed& seed);

struct NumericClass {
  std::size_t seeds = 0;
  std::set<Rational> exchangeable;
  bool complete = true;
};

/// Brute-force BFS identifying clusters by the multiset of their numeric
/// values. Shares no code with the library's enumeration.
NumericClass numeric_enumerate(const Seed& root, std::size_t max_seeds);

struct PropertyOptions {
  std::size_t sequence_length = 6;
  // A mutation is skipped when the product of term counts raised to the
  // column entries (an upper bound on the exchange binomial's size) exceeds
  // this. Skips are counted, never treated as passes.
  double term_budget = 20000;
};

struct PropertyReport {
  std::size_t seeds = 0;
  std::size_t mutations = 0;
  std::size_t skipped = 0;
  std::size_t seeds_with_skips = 0;
  std::vector<std::string> failures;

  bool complete() const { return skipped == 0; }
};

/// Involution, symmetrizer preservation, Laurent shape with a numeric
/// cross-check along every admissible sequence up to the given length
/// (consecutive repeats skipped: they are covered by the involution check),
/// matrix/quiver and decompose/glue round trips.
PropertyReport run_property_suite(const std::vector<Seed>& seeds, const PropertyOptions& options = {});
/// Same checks on one thread.
PropertyReport run_property_suite_serial(const std::vector<Seed>& seeds,
                                         const PropertyOptions& options = {});

std::vector<Seed> random_seeds(std::uint64_t rng_seed, std::size_t count, const RandomShape& shape = {});

}  // namespace testsupport
