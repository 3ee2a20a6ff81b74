#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "clusterkit/laurent.hpp"

namespace clusterkit {

enum class Membership { Member, NotMember, Unknown };

std::string to_string(Membership m);

struct MembershipCertificate {
  /// Exponent of each generator in the product, and its coefficient.
  std::vector<std::pair<std::vector<unsigned>, Integer>> combination;
};

struct MembershipResult {
  Membership status = Membership::Unknown;
  /// "constant", "support", "denominator", "combination", "degree-bound"
  /// or "column-budget".
  std::string reason;
  MembershipCertificate certificate;
};

struct MembershipOptions {
  /// Largest number of generator factors in one product; 0 selects twice the
  /// largest absolute degree among the generators.
  unsigned degree_bound = 0;
  std::size_t column_budget = 4000;
};

/// Decides whether p lies in the unital subring of the Laurent ring generated
/// by `generators`. NotMember is only returned with a support or denominator
/// certificate; Member only with an integral combination of products.
MembershipResult test_membership(const LaurentPoly& p, const std::vector<LaurentPoly>& generators,
                                 const MembershipOptions& options = {});

unsigned default_degree_bound(const std::vector<LaurentPoly>& generators);

/// Recomputes sum(coeff * prod g_i^e_i).
LaurentPoly evaluate_certificate(const MembershipCertificate& cert,
                                 const std::vector<LaurentPoly>& generators);

}  // namespace clusterkit
