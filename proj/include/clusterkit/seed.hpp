#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clusterkit/laurent.hpp"

namespace clusterkit {

/// Integer matrix with one row per variable (exchangeable rows first) and
/// one column per exchangeable variable.
class ExtMatrix {
 public:
  ExtMatrix() = default;
  ExtMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static ExtMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                             std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::vector<std::vector<std::int64_t>> to_rows() const;

  bool operator==(const ExtMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Positive integer per exchangeable position.
using Symmetrizer = std::vector<std::int64_t>;

/// A seed: named positions (exchangeable first), the extended exchange
/// matrix, and the current value at each position as a Laurent polynomial in
/// the variables of `universe()`. Mutation replaces a value in place, so a
/// position keeps its name for the whole mutation class.
class Seed {
 public:
  Seed() : universe_(std::make_shared<const Universe>()) {}

  /// Initial seed: values are the position variables themselves.
  static Seed initial(std::vector<std::string> exchangeable, std::vector<std::string> frozen,
                      ExtMatrix matrix);

  /// General constructor; `values[i]` is written over `universe`.
  Seed(std::vector<std::string> names, std::size_t exchangeable_count, ExtMatrix matrix,
       std::vector<LaurentPoly> values, UniversePtr universe);

  std::size_t size() const { return names_.size(); }
  std::size_t exchangeable_count() const { return n_ex_; }
  std::size_t frozen_count() const { return names_.size() - n_ex_; }
  bool is_trivial() const { return n_ex_ == 0; }

  const std::vector<std::string>& names() const { return names_; }
  std::span<const std::string> exchangeable_names() const { return {names_.data(), n_ex_}; }
  std::span<const std::string> frozen_names() const {
    return {names_.data() + n_ex_, names_.size() - n_ex_};
  }
  const std::string& name(std::size_t pos) const { return names_[pos]; }
  std::optional<std::size_t> position(std::string_view name) const;
  bool is_exchangeable(std::size_t pos) const { return pos < n_ex_; }

  const ExtMatrix& matrix() const { return matrix_; }
  std::int64_t b(std::size_t row, std::size_t col) const { return matrix_(row, col); }

  const std::vector<LaurentPoly>& values() const { return values_; }
  const LaurentPoly& value(std::size_t pos) const { return values_[pos]; }

  const Universe& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }
  /// Universe index of the variable named like position `pos`, if any.
  std::optional<std::uint32_t> universe_index(std::size_t pos) const;

  /// True when every value is the variable named by its own position.
  bool is_initial() const;
  /// Same positions and matrix, values reset to the position variables over a
  /// fresh universe equal to names().
  Seed as_initial() const;

  /// Exact positional equality: names, matrix, and values (universes compared
  /// by content).
  friend bool operator==(const Seed& a, const Seed& b);

 private:
  std::vector<std::string> names_;
  std::size_t n_ex_ = 0;
  ExtMatrix matrix_;
  std::vector<LaurentPoly> values_;
  UniversePtr universe_;
};

/// Minimal positive symmetrizer; throws NotSkewSymmetrizable.
Symmetrizer validate(const Seed& seed);
Symmetrizer validate_matrix(const ExtMatrix& matrix);

/// Structural checks only (names, dimensions); throws InvalidSeed.
void check_structure(const std::vector<std::string>& names, std::size_t exchangeable_count,
                     const ExtMatrix& matrix);

Seed mutate(const Seed& seed, std::string_view var);
Seed mutate_at(const Seed& seed, std::size_t pos);
/// New exchange-matrix after mutating in column `k`.
ExtMatrix mutate_matrix(const ExtMatrix& matrix, std::size_t k);

/// Applies the mutations in order; throws NotAdmissibleError with the first
/// offending step.
Seed apply_sequence(const Seed& seed, std::span<const std::string> sequence);

Seed subseed(const Seed& seed, const std::vector<std::string>& keep_exchangeable,
             const std::vector<std::string>& keep_frozen);
Seed opposite(const Seed& seed);
Seed freeze(const Seed& seed, const std::vector<std::string>& to_freeze);

struct FrozenCopy {
  std::size_t component = 0;
  std::string name;

  auto operator<=>(const FrozenCopy&) const = default;
};

/// Indecomposable components of a seed. Frozen variables adjacent to several
/// components are copied; `identification` maps each original frozen name to
/// all of its copies (the first copy keeps the original name).
struct SeedDecomposition {
  std::vector<Seed> components;
  std::map<std::string, std::vector<FrozenCopy>> identification;
  std::vector<std::string> isolated_frozen;
  /// Trivial seed holding the isolated frozen variables (empty if none).
  Seed residue;

  /// Original name of a (component, copy) pair.
  std::string original_name(std::size_t component, const std::string& name) const;
};

/// Components are ordered by their least position in the input seed;
/// components are initial seeds over their own names.
SeedDecomposition decompose_seed(const Seed& seed);

using FrozenPairing = std::vector<std::pair<std::string, std::string>>;

/// Glues `b` onto `a`, identifying frozen b.second with frozen a.first for
/// every pair. Names outside the pairing must be disjoint.
Seed glue_seeds(const Seed& a, const Seed& b, const FrozenPairing& pairing);

/// Inverse of decompose_seed: glues all components and the residue back.
Seed glue_decomposition(const SeedDecomposition& decomposition);

/// Exchangeable positions reordered by value, matrix permuted to match.
/// Two seeds of one mutation class are the same unordered seed iff their
/// canonical forms are equal.
struct CanonicalSeed {
  std::vector<LaurentPoly> exchangeable;
  std::vector<LaurentPoly> frozen;
  std::vector<std::int64_t> entries;
  std::size_t hash = 0;

  bool operator==(const CanonicalSeed& other) const {
    return hash == other.hash && exchangeable == other.exchangeable && frozen == other.frozen &&
           entries == other.entries;
  }
};

struct CanonicalSeedHash {
  std::size_t operator()(const CanonicalSeed& c) const { return c.hash; }
};

CanonicalSeed canonical_form(const Seed& seed);
/// Ordering of exchangeable positions used by canonical_form.
std::vector<std::size_t> canonical_order(const Seed& seed);
/// The seed with its exchangeable positions permuted into canonical order.
Seed canonicalize(const Seed& seed);
bool equivalent(const Seed& a, const Seed& b);
bool canonical_less(const CanonicalSeed& a, const CanonicalSeed& b);

/// Equality up to reordering of positions: same exchangeable and frozen name
/// sets, same entry for every (row name, column name), same value per name.
bool same_up_to_reordering(const Seed& a, const Seed& b);

/// Principal part has no oriented cycle.
bool is_acyclic(const Seed& seed);

/// True when every negative exponent of `p` sits on a variable that is an
/// exchangeable position of `root` (the Laurent phenomenon shape).
bool has_laurent_shape(const LaurentPoly& p, const Seed& root);

}  // namespace clusterkit
