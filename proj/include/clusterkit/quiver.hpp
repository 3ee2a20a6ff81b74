#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "clusterkit/seed.hpp"

namespace clusterkit {

/// Arrow between exchangeable vertices with valuation (v1, v2).
struct ValuedArrow {
  std::string source;
  std::string target;
  std::int64_t v1 = 0;
  std::int64_t v2 = 0;

  auto operator<=>(const ValuedArrow&) const = default;
};

/// `multiplicity` parallel arrows between a frozen and an exchangeable vertex.
struct FrozenArrows {
  std::string source;
  std::string target;
  std::int64_t multiplicity = 0;

  auto operator<=>(const FrozenArrows&) const = default;
};

class IceQuiver {
 public:
  IceQuiver() = default;
  IceQuiver(std::vector<std::string> exchangeable, std::vector<std::string> frozen,
            std::vector<ValuedArrow> principal, std::vector<FrozenArrows> boundary,
            Symmetrizer d);

  const std::vector<std::string>& exchangeable() const { return exchangeable_; }
  const std::vector<std::string>& frozen() const { return frozen_; }
  const std::vector<ValuedArrow>& principal_arrows() const { return principal_; }
  const std::vector<FrozenArrows>& frozen_arrows() const { return boundary_; }
  const Symmetrizer& symmetrizer() const { return d_; }

  /// Vertex and arrow sets compared as sets; the symmetrizer is compared per
  /// vertex name.
  friend bool operator==(const IceQuiver& a, const IceQuiver& b);

 private:
  std::vector<std::string> exchangeable_;
  std::vector<std::string> frozen_;
  std::vector<ValuedArrow> principal_;
  std::vector<FrozenArrows> boundary_;
  Symmetrizer d_;
};

IceQuiver matrix_to_quiver(const std::vector<std::string>& exchangeable,
                           const std::vector<std::string>& frozen, const ExtMatrix& matrix,
                           const Symmetrizer& d);
/// Validates the seed's matrix and converts it.
IceQuiver seed_quiver(const Seed& seed);

/// Matrix with rows in exchangeable-then-frozen vertex order.
ExtMatrix quiver_to_matrix(const IceQuiver& q);
/// Initial seed whose matrix is quiver_to_matrix(q).
Seed quiver_seed(const IceQuiver& q);

bool is_indecomposable(const IceQuiver& q);

struct QuiverDecomposition {
  std::vector<IceQuiver> components;
  std::map<std::string, std::vector<FrozenCopy>> identification;
  std::vector<std::string> isolated_frozen;
};

QuiverDecomposition decompose(const IceQuiver& q);
IceQuiver glue(const IceQuiver& a, const IceQuiver& b, const FrozenPairing& pairing);
/// Glues all components along the identification, plus isolated frozen vertices.
IceQuiver glue(const QuiverDecomposition& decomposition);

std::string to_dot(const IceQuiver& q);

}  // namespace clusterkit
