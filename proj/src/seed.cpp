#include "clusterkit/seed.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "clusterkit/error.hpp"

namespace clusterkit {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "matrix entry overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "matrix entry overflow");
  return r;
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::vector<std::size_t> positions_of(const Seed& seed, const std::vector<std::string>& names,
                                      bool want_exchangeable, ErrorCode code) {
  std::vector<std::size_t> out;
  for (const auto& n : names) {
    auto pos = seed.position(n);
    if (!pos || seed.is_exchangeable(*pos) != want_exchangeable) {
      throw Error(code, "'" + n + "' is not " + (want_exchangeable ? "an exchangeable" : "a frozen") +
                            " variable of the seed");
    }
    out.push_back(*pos);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Restriction of `seed` to the given rows (in order) and exchangeable
// columns (in order), keeping values and universe.
Seed restrict(const Seed& seed, const std::vector<std::size_t>& ex_rows,
              const std::vector<std::size_t>& other_rows) {
  std::vector<std::string> names;
  std::vector<LaurentPoly> values;
  std::vector<std::size_t> rows = ex_rows;
  rows.insert(rows.end(), other_rows.begin(), other_rows.end());
  ExtMatrix m(rows.size(), ex_rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    names.push_back(seed.name(rows[r]));
    values.push_back(seed.value(rows[r]));
    for (std::size_t c = 0; c < ex_rows.size(); ++c) m(r, c) = seed.b(rows[r], ex_rows[c]);
  }
  return Seed(std::move(names), ex_rows.size(), std::move(m), std::move(values),
              seed.universe_ptr());
}

}  // namespace

// ----------------------------------------------------------------- ExtMatrix

ExtMatrix ExtMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                               std::size_t cols) {
  ExtMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::InvalidSeed, "matrix row " + std::to_string(r) + " has " +
                                              std::to_string(rows[r].size()) + " entries, expected " +
                                              std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::vector<std::int64_t>> ExtMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

// ---------------------------------------------------------------------- Seed

void check_structure(const std::vector<std::string>& names, std::size_t exchangeable_count,
                     const ExtMatrix& matrix) {
  if (exchangeable_count > names.size()) {
    throw Error(ErrorCode::InvalidSeed, "more exchangeable variables than variables");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!valid_identifier(n)) throw Error(ErrorCode::InvalidSeed, "invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw Error(ErrorCode::InvalidSeed, "duplicate variable name '" + n + "'");
  }
  if (matrix.rows() != names.size() || matrix.cols() != exchangeable_count) {
    throw Error(ErrorCode::InvalidSeed,
                "matrix is " + std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                    ", expected " + std::to_string(names.size()) + "x" +
                    std::to_string(exchangeable_count));
  }
}

Seed Seed::initial(std::vector<std::string> exchangeable, std::vector<std::string> frozen,
                   ExtMatrix matrix) {
  std::vector<std::string> names = std::move(exchangeable);
  const std::size_t n = names.size();
  names.insert(names.end(), std::make_move_iterator(frozen.begin()),
               std::make_move_iterator(frozen.end()));
  std::vector<LaurentPoly> values;
  values.reserve(names.size());
  for (std::uint32_t i = 0; i < names.size(); ++i) values.push_back(LaurentPoly::variable(i));
  auto universe = std::make_shared<const Universe>(names);
  return Seed(std::move(names), n, std::move(matrix), std::move(values), std::move(universe));
}

Seed::Seed(std::vector<std::string> names, std::size_t exchangeable_count, ExtMatrix matrix,
           std::vector<LaurentPoly> values, UniversePtr universe)
    : names_(std::move(names)),
      n_ex_(exchangeable_count),
      matrix_(std::move(matrix)),
      values_(std::move(values)),
      universe_(std::move(universe)) {
  check_structure(names_, n_ex_, matrix_);
  if (values_.size() != names_.size()) {
    throw Error(ErrorCode::InvalidSeed, "one value per variable required");
  }
  if (!universe_) throw Error(ErrorCode::InvalidSeed, "missing universe");
}

std::optional<std::size_t> Seed::position(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<std::uint32_t> Seed::universe_index(std::size_t pos) const {
  const auto& u = *universe_;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == names_[pos]) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

bool Seed::is_initial() const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    auto idx = universe_index(i);
    if (!idx || values_[i] != LaurentPoly::variable(*idx)) return false;
  }
  return true;
}

Seed Seed::as_initial() const {
  std::vector<std::string> ex(names_.begin(), names_.begin() + static_cast<std::ptrdiff_t>(n_ex_));
  std::vector<std::string> fx(names_.begin() + static_cast<std::ptrdiff_t>(n_ex_), names_.end());
  return Seed::initial(std::move(ex), std::move(fx), matrix_);
}

bool operator==(const Seed& a, const Seed& b) {
  if (a.names_ != b.names_ || a.n_ex_ != b.n_ex_ || a.matrix_ != b.matrix_ || a.values_ != b.values_) {
    return false;
  }
  return a.universe_ == b.universe_ || *a.universe_ == *b.universe_;
}

// ---------------------------------------------------------------- validation

Symmetrizer validate_matrix(const ExtMatrix& matrix) {
  using Rational = boost::multiprecision::cpp_rational;
  const std::size_t n = matrix.cols();
  if (matrix.rows() < n) throw Error(ErrorCode::InvalidSeed, "fewer rows than columns");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix(i, i) != 0) {
      throw Error(ErrorCode::NotSkewSymmetrizable, "nonzero diagonal entry at " + std::to_string(i));
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::int64_t bij = matrix(i, j);
      const std::int64_t bji = matrix(j, i);
      if ((bij == 0) != (bji == 0) || (bij > 0 && bji > 0) || (bij < 0 && bji < 0)) {
        throw Error(ErrorCode::NotSkewSymmetrizable,
                    "sign pattern violated at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  std::vector<Rational> d(n, Rational(0));
  std::vector<bool> assigned(n, false);
  Symmetrizer out(n, 1);
  for (std::size_t root = 0; root < n; ++root) {
    if (assigned[root]) continue;
    std::vector<std::size_t> component{root};
    d[root] = 1;
    assigned[root] = true;
    for (std::size_t k = 0; k < component.size(); ++k) {
      const std::size_t i = component[k];
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || matrix(i, j) == 0) continue;
        // d_i * b_ij = -d_j * b_ji
        Rational dj = d[i] * Rational(matrix(i, j)) / Rational(-matrix(j, i));
        if (!assigned[j]) {
          d[j] = dj;
          assigned[j] = true;
          component.push_back(j);
        } else if (d[j] != dj) {
          throw Error(ErrorCode::NotSkewSymmetrizable,
                      "no consistent scaling around position " + std::to_string(j));
        }
      }
    }
    Integer l = 1;
    for (std::size_t i : component) l = boost::multiprecision::lcm(l, denominator(d[i]));
    Integer g = 0;
    for (std::size_t i : component) g = boost::multiprecision::gcd(g, numerator(Rational(d[i] * l)));
    for (std::size_t i : component) {
      Integer v = numerator(Rational(d[i] * l)) / g;
      if (v > Integer(INT64_MAX)) throw Error(ErrorCode::Overflow, "symmetrizer too large");
      out[i] = static_cast<std::int64_t>(v);
    }
  }
  return out;
}

Symmetrizer validate(const Seed& seed) { return validate_matrix(seed.matrix()); }

// ------------------------------------------------------------------ mutation

ExtMatrix mutate_matrix(const ExtMatrix& matrix, std::size_t k) {
  ExtMatrix out(matrix.rows(), matrix.cols());
  for (std::size_t y = 0; y < matrix.rows(); ++y) {
    const std::int64_t byk = matrix(y, k);
    for (std::size_t z = 0; z < matrix.cols(); ++z) {
      const std::int64_t byz = matrix(y, z);
      if (y == k || z == k) {
        out(y, z) = -byz;
        continue;
      }
      const std::int64_t bkz = matrix(k, z);
      const std::int64_t twice = checked_add(checked_mul(byk < 0 ? -byk : byk, bkz),
                                             checked_mul(byk, bkz < 0 ? -bkz : bkz));
      out(y, z) = checked_add(byz, twice / 2);
    }
  }
  return out;
}

Seed mutate_at(const Seed& seed, std::size_t pos) {
  if (pos >= seed.exchangeable_count()) {
    throw Error(ErrorCode::NotExchangeable,
                pos < seed.size() ? "'" + seed.name(pos) + "' is frozen" : "position out of range");
  }
  LaurentPoly positive(1);
  LaurentPoly negative(1);
  for (std::size_t y = 0; y < seed.size(); ++y) {
    const std::int64_t b = seed.b(y, pos);
    if (b > 0) {
      positive = positive * seed.value(y).pow(static_cast<unsigned>(b));
    } else if (b < 0) {
      negative = negative * seed.value(y).pow(static_cast<unsigned>(-b));
    }
  }
  std::vector<LaurentPoly> values = seed.values();
  values[pos] = div_exact(positive + negative, seed.value(pos));
  return Seed(seed.names(), seed.exchangeable_count(), mutate_matrix(seed.matrix(), pos),
              std::move(values), seed.universe_ptr());
}

Seed mutate(const Seed& seed, std::string_view var) {
  auto pos = seed.position(var);
  if (!pos) throw Error(ErrorCode::NotExchangeable, "'" + std::string(var) + "' is not a variable of the seed");
  return mutate_at(seed, *pos);
}

Seed apply_sequence(const Seed& seed, std::span<const std::string> sequence) {
  Seed current = seed;
  for (std::size_t step = 0; step < sequence.size(); ++step) {
    auto pos = current.position(sequence[step]);
    if (!pos || !current.is_exchangeable(*pos)) {
      throw NotAdmissibleError(step, "step " + std::to_string(step) + ": '" + sequence[step] +
                                         "' is not exchangeable");
    }
    current = mutate_at(current, *pos);
  }
  return current;
}

// ---------------------------------------------------- structural operations

Seed subseed(const Seed& seed, const std::vector<std::string>& keep_exchangeable,
             const std::vector<std::string>& keep_frozen) {
  auto ex = positions_of(seed, keep_exchangeable, true, ErrorCode::NotContained);
  auto fx = positions_of(seed, keep_frozen, false, ErrorCode::NotContained);
  return restrict(seed, ex, fx);
}

Seed opposite(const Seed& seed) {
  ExtMatrix m = seed.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
  return Seed(seed.names(), seed.exchangeable_count(), std::move(m), seed.values(),
              seed.universe_ptr());
}

Seed freeze(const Seed& seed, const std::vector<std::string>& to_freeze) {
  auto frozen_now = positions_of(seed, to_freeze, true, ErrorCode::NotExchangeable);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < seed.exchangeable_count(); ++i) {
    if (!std::binary_search(frozen_now.begin(), frozen_now.end(), i)) keep.push_back(i);
  }
  std::vector<std::size_t> others;
  for (std::size_t i = seed.exchangeable_count(); i < seed.size(); ++i) others.push_back(i);
  others.insert(others.end(), frozen_now.begin(), frozen_now.end());
  return restrict(seed, keep, others);
}

// ------------------------------------------------------------- decomposition

std::string SeedDecomposition::original_name(std::size_t component, const std::string& name) const {
  for (const auto& [original, copies] : identification) {
    for (const auto& c : copies) {
      if (c.component == component && c.name == name) return original;
    }
  }
  return name;
}

SeedDecomposition decompose_seed(const Seed& seed) {
  const std::size_t n = seed.exchangeable_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && seed.b(i, j) != 0) parent[find(i)] = find(j);

  // Components ordered by least member, members in seed order.
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> group_of_root(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (group_of_root[r] == SIZE_MAX) {
      group_of_root[r] = groups.size();
      groups.emplace_back();
    }
    groups[group_of_root[r]].push_back(i);
  }

  std::set<std::string> taken(seed.names().begin(), seed.names().end());
  std::map<std::size_t, std::vector<FrozenCopy>> copies_by_pos;
  SeedDecomposition out;

  for (std::size_t c = 0; c < groups.size(); ++c) {
    const auto& ex = groups[c];
    std::vector<std::string> ex_names;
    for (std::size_t p : ex) ex_names.push_back(seed.name(p));
    std::vector<std::size_t> fx;
    for (std::size_t y = n; y < seed.size(); ++y) {
      for (std::size_t x : ex) {
        if (seed.b(y, x) != 0) {
          fx.push_back(y);
          break;
        }
      }
    }
    std::vector<std::string> fx_names;
    for (std::size_t y : fx) {
      auto& copies = copies_by_pos[y];
      std::string name = seed.name(y);
      if (!copies.empty()) {
        name += "_" + std::to_string(c + 1);
        while (taken.count(name)) name += "_";
        taken.insert(name);
      }
      copies.push_back(FrozenCopy{c, name});
      fx_names.push_back(name);
    }
    ExtMatrix m(ex.size() + fx.size(), ex.size());
    for (std::size_t r = 0; r < ex.size() + fx.size(); ++r) {
      const std::size_t row = r < ex.size() ? ex[r] : fx[r - ex.size()];
      for (std::size_t k = 0; k < ex.size(); ++k) m(r, k) = seed.b(row, ex[k]);
    }
    out.components.push_back(Seed::initial(std::move(ex_names), std::move(fx_names), std::move(m)));
  }

  for (const auto& [pos, copies] : copies_by_pos) {
    if (copies.size() > 1) out.identification[seed.name(pos)] = copies;
  }
  for (std::size_t y = n; y < seed.size(); ++y) {
    if (!copies_by_pos.count(y)) out.isolated_frozen.push_back(seed.name(y));
  }
  out.residue = Seed::initial({}, out.isolated_frozen, ExtMatrix(out.isolated_frozen.size(), 0));
  return out;
}

Seed glue_seeds(const Seed& a, const Seed& b, const FrozenPairing& pairing) {
  std::map<std::string, std::string> rename;  // b name -> a name
  std::set<std::string> used_a;
  for (const auto& [pa, pb] : pairing) {
    auto ia = a.position(pa);
    auto ib = b.position(pb);
    if (!ia || a.is_exchangeable(*ia)) throw Error(ErrorCode::NotFrozen, "'" + pa + "' is not frozen in the first seed");
    if (!ib || b.is_exchangeable(*ib)) throw Error(ErrorCode::NotFrozen, "'" + pb + "' is not frozen in the second seed");
    if (!used_a.insert(pa).second || !rename.emplace(pb, pa).second) {
      throw Error(ErrorCode::NameClash, "pairing is not a bijection");
    }
  }
  for (const auto& nb : b.names()) {
    if (!rename.count(nb) && a.position(nb)) {
      throw Error(ErrorCode::NameClash, "'" + nb + "' occurs in both seeds");
    }
  }

  const std::size_t na = a.exchangeable_count();
  const std::size_t nb = b.exchangeable_count();
  std::vector<std::string> names;
  std::vector<std::pair<int, std::size_t>> source;  // (seed 0/1, position)
  for (std::size_t i = 0; i < na; ++i) { names.push_back(a.name(i)); source.emplace_back(0, i); }
  for (std::size_t i = 0; i < nb; ++i) { names.push_back(b.name(i)); source.emplace_back(1, i); }
  for (std::size_t i = na; i < a.size(); ++i) { names.push_back(a.name(i)); source.emplace_back(0, i); }
  for (std::size_t i = nb; i < b.size(); ++i) {
    if (!rename.count(b.name(i))) { names.push_back(b.name(i)); source.emplace_back(1, i); }
  }

  ExtMatrix m(names.size(), na + nb);
  for (std::size_t r = 0; r < names.size(); ++r) {
    auto [which, pos] = source[r];
    if (which == 0) {
      for (std::size_t c = 0; c < na; ++c) m(r, c) = a.b(pos, c);
      if (pos >= na) {
        // A paired frozen row also carries b's entries.
        for (const auto& [pa, pb] : pairing) {
          if (pa == a.name(pos)) {
            const std::size_t bpos = *b.position(pb);
            for (std::size_t c = 0; c < nb; ++c) m(r, na + c) = b.b(bpos, c);
          }
        }
      }
    } else {
      for (std::size_t c = 0; c < nb; ++c) m(r, na + c) = b.b(pos, c);
    }
  }

  if (a.is_initial() && b.is_initial()) {
    std::vector<std::string> ex(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(na + nb));
    std::vector<std::string> fx(names.begin() + static_cast<std::ptrdiff_t>(na + nb), names.end());
    return Seed::initial(std::move(ex), std::move(fx), std::move(m));
  }

  // General values: merge universes by name, b's paired names renamed.
  Universe universe = a.universe();
  Universe b_renamed = b.universe();
  for (auto& nm : b_renamed) {
    if (auto it = rename.find(nm); it != rename.end()) nm = it->second;
    if (std::find(universe.begin(), universe.end(), nm) == universe.end()) universe.push_back(nm);
  }
  std::vector<LaurentPoly> values;
  for (const auto& [which, pos] : source) {
    values.push_back(which == 0 ? a.value(pos) : rebase(b.value(pos), b_renamed, universe));
  }
  return Seed(std::move(names), na + nb, std::move(m), std::move(values),
              std::make_shared<const Universe>(std::move(universe)));
}

Seed glue_decomposition(const SeedDecomposition& decomposition) {
  Seed acc = decomposition.residue;
  bool started = false;
  for (std::size_t c = 0; c < decomposition.components.size(); ++c) {
    const Seed& comp = decomposition.components[c];
    if (!started) {
      acc = comp;
      started = true;
      continue;
    }
    FrozenPairing pairing;
    for (const auto& fx : comp.frozen_names()) {
      const std::string original = decomposition.original_name(c, fx);
      if (original != fx || acc.position(fx)) {
        if (acc.position(original)) pairing.emplace_back(original, fx);
      }
    }
    acc = glue_seeds(acc, comp, pairing);
  }
  if (started) acc = glue_seeds(acc, decomposition.residue, {});
  return acc;
}

// ------------------------------------------------------------ canonical form

std::vector<std::size_t> canonical_order(const Seed& seed) {
  std::vector<std::size_t> order(seed.exchangeable_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return compare(seed.value(x), seed.value(y)) < 0;
  });
  return order;
}

CanonicalSeed canonical_form(const Seed& seed) {
  const auto order = canonical_order(seed);
  CanonicalSeed c;
  std::size_t h = seed.size();
  for (std::size_t p : order) {
    c.exchangeable.push_back(seed.value(p));
    h = mix(h, seed.value(p).hash());
  }
  for (std::size_t p = seed.exchangeable_count(); p < seed.size(); ++p) {
    c.frozen.push_back(seed.value(p));
    h = mix(h, seed.value(p).hash());
  }
  c.entries.reserve(seed.size() * order.size());
  auto push_row = [&](std::size_t row) {
    for (std::size_t col : order) {
      c.entries.push_back(seed.b(row, col));
      h = mix(h, static_cast<std::size_t>(seed.b(row, col)));
    }
  };
  for (std::size_t p : order) push_row(p);
  for (std::size_t p = seed.exchangeable_count(); p < seed.size(); ++p) push_row(p);
  c.hash = h;
  return c;
}

Seed canonicalize(const Seed& seed) {
  const auto order = canonical_order(seed);
  std::vector<std::size_t> others;
  for (std::size_t p = seed.exchangeable_count(); p < seed.size(); ++p) others.push_back(p);
  return restrict(seed, order, others);
}

bool equivalent(const Seed& a, const Seed& b) { return canonical_form(a) == canonical_form(b); }

bool canonical_less(const CanonicalSeed& a, const CanonicalSeed& b) {
  auto lex = [](const std::vector<LaurentPoly>& x, const std::vector<LaurentPoly>& y) {
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
      auto c = compare(x[i], y[i]);
      if (c != 0) return c < 0 ? -1 : 1;
    }
    return x.size() == y.size() ? 0 : (x.size() < y.size() ? -1 : 1);
  };
  if (int c = lex(a.exchangeable, b.exchangeable); c != 0) return c < 0;
  if (int c = lex(a.frozen, b.frozen); c != 0) return c < 0;
  return a.entries < b.entries;
}

bool same_up_to_reordering(const Seed& a, const Seed& b) {
  if (a.size() != b.size() || a.exchangeable_count() != b.exchangeable_count()) return false;
  std::vector<std::size_t> map(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto j = b.position(a.name(i));
    if (!j || b.is_exchangeable(*j) != a.is_exchangeable(i)) return false;
    map[i] = *j;
  }
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.exchangeable_count(); ++c)
      if (a.b(r, c) != b.b(map[r], map[c])) return false;
  try {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.value(i) != rebase(b.value(map[i]), b.universe(), a.universe())) return false;
    }
  } catch (const Error&) {
    return false;
  }
  return true;
}

bool is_acyclic(const Seed& seed) {
  const std::size_t n = seed.exchangeable_count();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (seed.b(i, j) > 0) ++indegree[j];
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push_back(i);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t i = ready.back();
    ready.pop_back();
    ++seen;
    for (std::size_t j = 0; j < n; ++j) {
      if (seed.b(i, j) > 0 && --indegree[j] == 0) ready.push_back(j);
    }
  }
  return seen == n;
}

bool has_laurent_shape(const LaurentPoly& p, const Seed& root) {
  for (std::uint32_t v : p.denominator_support()) {
    if (v >= root.universe().size()) return false;
    auto pos = root.position(root.universe()[v]);
    if (!pos || !root.is_exchangeable(*pos)) return false;
  }
  return true;
}

}  // namespace clusterkit
