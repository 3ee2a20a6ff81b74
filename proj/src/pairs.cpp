#include "clusterkit/pairs.hpp"

#include <algorithm>
#include <exception>
#include <set>

#include "clusterkit/error.hpp"
#include "clusterkit/parallel.hpp"

namespace clusterkit {

namespace {

constexpr std::size_t kMaxComponents = 24;

Seed side_seed(const Seed& freezing, const SeedDecomposition& dec, const std::vector<std::size_t>& side) {
  std::set<std::string> ex;
  std::set<std::string> fx(dec.isolated_frozen.begin(), dec.isolated_frozen.end());
  for (std::size_t c : side) {
    const Seed& comp = dec.components[c];
    for (const auto& n : comp.exchangeable_names()) ex.insert(n);
    for (const auto& n : comp.frozen_names()) fx.insert(dec.original_name(c, n));
  }
  std::vector<std::string> keep_ex;
  std::vector<std::string> keep_fx;
  for (const auto& n : freezing.names()) {
    if (ex.count(n)) keep_ex.push_back(n);
    if (fx.count(n)) keep_fx.push_back(n);
  }
  return subseed(freezing, keep_ex, keep_fx);
}

std::vector<ClassEntry> classify(const Seed& seed, const ClassifyOptions& options, bool parallel) {
  std::vector<std::vector<std::string>> freezings = options.freezings;
  if (freezings.empty()) {
    const std::size_t n = seed.exchangeable_count();
    if (n > options.max_exchangeable && !options.force) {
      throw Error(ErrorCode::SubsetBudgetExceeded,
                  std::to_string(n) + " exchangeable variables give 2^" + std::to_string(n) +
                      " freezing sets; pass the force flag to proceed");
    }
    if (n >= 63) throw Error(ErrorCode::SubsetBudgetExceeded, "too many exchangeable variables");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::string> set;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1U) set.push_back(seed.name(i));
      freezings.push_back(std::move(set));
    }
  }

  std::vector<ClassEntry> out(freezings.size());
  std::vector<std::exception_ptr> errors(freezings.size());
  auto work = [&](std::size_t i) {
    try {
      out[i] = ClassEntry{freezings[i], enumerate_complete_pairs(seed, freezings[i])};
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (parallel) {
    const long count = static_cast<long>(freezings.size());
    CLUSTERKIT_OMP(omp parallel for schedule(dynamic, 1))
    for (long i = 0; i < count; ++i) work(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < freezings.size(); ++i) work(i);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace

std::vector<CompletePair> enumerate_complete_pairs(const Seed& seed,
                                                   const std::vector<std::string>& freezing_set) {
  const Seed root = seed.as_initial();
  const Seed freezing = freeze(root, freezing_set);
  const SeedDecomposition dec = decompose_seed(freezing);
  const std::size_t c = dec.components.size();
  if (c > kMaxComponents) {
    throw Error(ErrorCode::SubsetBudgetExceeded, std::to_string(c) + " components give too many pairs");
  }
  std::vector<std::string> ordered_freezing;
  for (const auto& n : root.exchangeable_names()) {
    if (std::count(freezing_set.begin(), freezing_set.end(), n)) ordered_freezing.push_back(n);
  }
  const std::vector<std::string> coefficients(freezing.frozen_names().begin(),
                                              freezing.frozen_names().end());

  std::vector<CompletePair> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    CompletePair p;
    p.freezing_set = ordered_freezing;
    for (std::size_t i = 0; i < c; ++i) (mask >> i & 1U ? p.side1 : p.side2).push_back(i);
    p.seed1 = side_seed(freezing, dec, p.side1);
    p.seed2 = side_seed(freezing, dec, p.side2);
    p.coefficients = coefficients;
    out.push_back(std::move(p));
  }
  return out;
}

std::optional<std::string> verify_complete_pair(const Seed& seed, const CompletePair& pair) {
  const Seed root = seed.as_initial();
  Seed freezing;
  try {
    freezing = freeze(root, pair.freezing_set);
  } catch (const Error& e) {
    return std::string("freezing set: ") + e.what();
  }
  const std::size_t n = freezing.exchangeable_count();

  // Principal components of the freezing, by direct search.
  std::vector<int> label(n, -1);
  int count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    label[s] = count;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (label[j] < 0 && (freezing.b(i, j) != 0 || freezing.b(j, i) != 0)) {
          label[j] = count;
          stack.push_back(j);
        }
      }
    }
    ++count;
  }
  std::set<std::string> isolated;
  for (std::size_t y = n; y < freezing.size(); ++y) {
    bool adjacent = false;
    for (std::size_t x = 0; x < n; ++x) adjacent = adjacent || freezing.b(y, x) != 0;
    if (!adjacent) isolated.insert(freezing.name(y));
  }

  auto check_side = [&](const Seed& side, const char* which) -> std::optional<std::string> {
    // Same entries as the freezing on every kept row and column.
    for (std::size_t r = 0; r < side.size(); ++r) {
      auto fr = freezing.position(side.name(r));
      if (!fr || freezing.is_exchangeable(*fr) != side.is_exchangeable(r)) {
        return std::string(which) + " is not a subseed of the freezing";
      }
      for (std::size_t c = 0; c < side.exchangeable_count(); ++c) {
        if (side.b(r, c) != freezing.b(*fr, *freezing.position(side.name(c)))) {
          return std::string(which) + " has a matrix entry differing from the freezing";
        }
      }
    }
    // Union of whole components, with exactly their adjacent frozen variables
    // (isolated ones allowed).
    std::set<int> comps;
    std::set<std::string> ex(side.exchangeable_names().begin(), side.exchangeable_names().end());
    for (const auto& nm : ex) comps.insert(label[*freezing.position(nm)]);
    std::set<std::string> expected_fx;
    for (std::size_t x = 0; x < n; ++x) {
      if (!comps.count(label[x])) continue;
      if (!ex.count(freezing.name(x))) return std::string(which) + " splits a component";
      for (std::size_t y = n; y < freezing.size(); ++y)
        if (freezing.b(y, x) != 0) expected_fx.insert(freezing.name(y));
    }
    std::set<std::string> fx(side.frozen_names().begin(), side.frozen_names().end());
    for (const auto& nm : fx) {
      if (!expected_fx.count(nm) && !isolated.count(nm)) {
        return std::string(which) + " has a frozen variable outside its components";
      }
    }
    for (const auto& nm : expected_fx) {
      if (!fx.count(nm)) return std::string(which) + " misses an adjacent frozen variable";
    }
    return std::nullopt;
  };
  if (auto e = check_side(pair.seed1, "side 1")) return e;
  if (auto e = check_side(pair.seed2, "side 2")) return e;

  std::multiset<std::string> all;
  for (const auto& nm : pair.seed1.exchangeable_names()) all.insert(nm);
  for (const auto& nm : pair.seed2.exchangeable_names()) all.insert(nm);
  for (const auto& nm : pair.freezing_set) all.insert(nm);
  std::multiset<std::string> ex(root.exchangeable_names().begin(), root.exchangeable_names().end());
  if (all != ex) return std::string("exchangeable variables are not partitioned");

  for (const auto& nm : isolated) {
    if (!pair.seed1.position(nm) || !pair.seed2.position(nm)) {
      return std::string("isolated frozen variable ") + nm + " missing from a side";
    }
  }
  return std::nullopt;
}

std::vector<ClassEntry> classify_cotorsion_pairs(const Seed& seed, const ClassifyOptions& options) {
  return classify(seed, options, parallel::enabled() && parallel::max_threads() > 1);
}

std::vector<ClassEntry> classify_cotorsion_pairs_serial(const Seed& seed, const ClassifyOptions& options) {
  return classify(seed, options, false);
}

}  // namespace clusterkit
