#include "clusterkit/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "clusterkit/error.hpp"

namespace clusterkit {

namespace {

std::size_t index_of(const std::vector<std::string>& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw Error(ErrorCode::UnknownVariable, "unknown vertex '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

std::map<std::string, std::int64_t> symmetrizer_by_name(const IceQuiver& q) {
  std::map<std::string, std::int64_t> out;
  for (std::size_t i = 0; i < q.exchangeable().size(); ++i) out[q.exchangeable()[i]] = q.symmetrizer()[i];
  return out;
}

IceQuiver from_seed_unchecked(const Seed& s) {
  std::vector<std::string> ex(s.exchangeable_names().begin(), s.exchangeable_names().end());
  std::vector<std::string> fx(s.frozen_names().begin(), s.frozen_names().end());
  return matrix_to_quiver(ex, fx, s.matrix(), validate_matrix(s.matrix()));
}

}  // namespace

IceQuiver::IceQuiver(std::vector<std::string> exchangeable, std::vector<std::string> frozen,
                     std::vector<ValuedArrow> principal, std::vector<FrozenArrows> boundary,
                     Symmetrizer d)
    : exchangeable_(std::move(exchangeable)),
      frozen_(std::move(frozen)),
      principal_(std::move(principal)),
      boundary_(std::move(boundary)),
      d_(std::move(d)) {
  if (d_.size() != exchangeable_.size()) {
    throw Error(ErrorCode::InvalidSeed, "symmetrizer size does not match exchangeable vertices");
  }
  for (const auto& a : principal_) {
    const std::size_t i = index_of(exchangeable_, a.source);
    const std::size_t j = index_of(exchangeable_, a.target);
    if (i == j) throw Error(ErrorCode::InvalidSeed, "loop at '" + a.source + "'");
    if (a.v1 <= 0 || a.v2 <= 0 || d_[i] * a.v1 != a.v2 * d_[j]) {
      throw Error(ErrorCode::NotSkewSymmetrizable,
                  "valuation of " + a.source + "->" + a.target + " incompatible with symmetrizer");
    }
  }
  for (const auto& a : boundary_) {
    const bool src_frozen = std::count(frozen_.begin(), frozen_.end(), a.source) > 0;
    const bool dst_frozen = std::count(frozen_.begin(), frozen_.end(), a.target) > 0;
    if (src_frozen == dst_frozen || a.multiplicity <= 0) {
      throw Error(ErrorCode::InvalidSeed, "frozen arrow " + a.source + "->" + a.target + " is malformed");
    }
  }
}

bool operator==(const IceQuiver& a, const IceQuiver& b) {
  auto as_set = [](const auto& v) { return std::set(v.begin(), v.end()); };
  return as_set(a.exchangeable_) == as_set(b.exchangeable_) && as_set(a.frozen_) == as_set(b.frozen_) &&
         as_set(a.principal_) == as_set(b.principal_) && as_set(a.boundary_) == as_set(b.boundary_) &&
         symmetrizer_by_name(a) == symmetrizer_by_name(b);
}

IceQuiver matrix_to_quiver(const std::vector<std::string>& exchangeable,
                           const std::vector<std::string>& frozen, const ExtMatrix& matrix,
                           const Symmetrizer& d) {
  const std::size_t n = exchangeable.size();
  if (matrix.cols() != n || matrix.rows() != n + frozen.size()) {
    throw Error(ErrorCode::InvalidSeed, "matrix shape does not match the vertex lists");
  }
  std::vector<ValuedArrow> principal;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (matrix(i, j) > 0) principal.push_back({exchangeable[i], exchangeable[j], matrix(i, j), -matrix(j, i)});
  std::vector<FrozenArrows> boundary;
  for (std::size_t y = 0; y < frozen.size(); ++y) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t b = matrix(n + y, j);
      if (b > 0) boundary.push_back({frozen[y], exchangeable[j], b});
      if (b < 0) boundary.push_back({exchangeable[j], frozen[y], -b});
    }
  }
  return IceQuiver(exchangeable, frozen, std::move(principal), std::move(boundary), d);
}

IceQuiver seed_quiver(const Seed& seed) { return from_seed_unchecked(seed); }

ExtMatrix quiver_to_matrix(const IceQuiver& q) {
  const auto& ex = q.exchangeable();
  const std::size_t n = ex.size();
  ExtMatrix m(n + q.frozen().size(), n);
  for (const auto& a : q.principal_arrows()) {
    const std::size_t i = index_of(ex, a.source);
    const std::size_t j = index_of(ex, a.target);
    m(i, j) = a.v1;
    m(j, i) = -a.v2;
  }
  for (const auto& a : q.frozen_arrows()) {
    auto src = std::find(ex.begin(), ex.end(), a.source);
    if (src == ex.end()) {
      m(n + index_of(q.frozen(), a.source), index_of(ex, a.target)) += a.multiplicity;
    } else {
      m(n + index_of(q.frozen(), a.target), static_cast<std::size_t>(src - ex.begin())) -= a.multiplicity;
    }
  }
  return m;
}

Seed quiver_seed(const IceQuiver& q) {
  return Seed::initial(q.exchangeable(), q.frozen(), quiver_to_matrix(q));
}

bool is_indecomposable(const IceQuiver& q) {
  if (q.exchangeable().empty()) return false;
  auto dec = decompose_seed(quiver_seed(q));
  return dec.components.size() == 1 && dec.isolated_frozen.empty();
}

QuiverDecomposition decompose(const IceQuiver& q) {
  auto dec = decompose_seed(quiver_seed(q));
  QuiverDecomposition out;
  for (const auto& c : dec.components) out.components.push_back(from_seed_unchecked(c));
  out.identification = std::move(dec.identification);
  out.isolated_frozen = std::move(dec.isolated_frozen);
  return out;
}

IceQuiver glue(const IceQuiver& a, const IceQuiver& b, const FrozenPairing& pairing) {
  Seed glued = glue_seeds(quiver_seed(a), quiver_seed(b), pairing);
  Symmetrizer d = a.symmetrizer();
  d.insert(d.end(), b.symmetrizer().begin(), b.symmetrizer().end());
  std::vector<std::string> ex(glued.exchangeable_names().begin(), glued.exchangeable_names().end());
  std::vector<std::string> fx(glued.frozen_names().begin(), glued.frozen_names().end());
  return matrix_to_quiver(ex, fx, glued.matrix(), d);
}

IceQuiver glue(const QuiverDecomposition& decomposition) {
  SeedDecomposition dec;
  for (const auto& c : decomposition.components) dec.components.push_back(quiver_seed(c));
  dec.identification = decomposition.identification;
  dec.isolated_frozen = decomposition.isolated_frozen;
  dec.residue = Seed::initial({}, dec.isolated_frozen, ExtMatrix(dec.isolated_frozen.size(), 0));
  Seed glued = glue_decomposition(dec);
  Symmetrizer d;
  for (const auto& c : decomposition.components)
    d.insert(d.end(), c.symmetrizer().begin(), c.symmetrizer().end());
  std::vector<std::string> ex(glued.exchangeable_names().begin(), glued.exchangeable_names().end());
  std::vector<std::string> fx(glued.frozen_names().begin(), glued.frozen_names().end());
  return matrix_to_quiver(ex, fx, glued.matrix(), d);
}

std::string to_dot(const IceQuiver& q) {
  std::ostringstream os;
  os << "digraph {\n";
  for (const auto& v : q.exchangeable()) os << "  \"" << v << "\";\n";
  for (const auto& v : q.frozen()) os << "  \"" << v << "\" [shape=box];\n";
  for (const auto& a : q.principal_arrows()) {
    os << "  \"" << a.source << "\" -> \"" << a.target << "\" [label=\"" << a.v1 << "," << a.v2 << "\"];\n";
  }
  for (const auto& a : q.frozen_arrows()) {
    for (std::int64_t k = 0; k < a.multiplicity; ++k) {
      os << "  \"" << a.source << "\" -> \"" << a.target << "\";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace clusterkit
