#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "clusterkit/parallel.hpp"
#include "clusterkit/quiver.hpp"

namespace testsupport {

using namespace clusterkit;

Seed make_seed(std::vector<std::string> ex, std::vector<std::string> fx,
               const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = ex.size();
  return Seed::initial(std::move(ex), std::move(fx), ExtMatrix::from_rows(rows, cols));
}

Seed a2_with_coefficients() {
  return make_seed({"x1", "x2"}, {"x3", "x4"}, {{0, 1}, {-1, 0}, {0, -1}, {0, 0}});
}

Seed seven_vertex() {
  // columns x1 x2 x5 x6 x7
  return make_seed({"x1", "x2", "x5", "x6", "x7"}, {"x3", "x4"},
                   {
                       {0, 1, 0, 0, 0},    // x1
                       {-2, 0, 0, 0, 0},   // x2
                       {0, 0, 0, 0, 0},    // x5
                       {0, 0, 0, 0, -1},   // x6
                       {0, 0, 0, 1, 0},    // x7
                       {3, -2, -1, 1, 0},  // x3
                       {1, 0, 1, 0, 0},    // x4
                   });
}

Seed freezing_source() {
  return make_seed({"x1", "x2", "x3"}, {}, {{0, -2, 6}, {1, 0, -3}, {-2, 2, 0}});
}

Seed a3_path() { return make_seed({"x1", "x2", "x3"}, {}, {{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}); }

Seed subalgebra_source() { return make_seed({"x1", "x2"}, {"x3"}, {{0, 1}, {-1, 0}, {0, -1}}); }

Seed subalgebra_target() { return a3_path(); }

Seed random_seed(std::mt19937_64& rng, const RandomShape& shape) {
  std::uniform_int_distribution<std::size_t> n_dist(1, shape.max_exchangeable);
  const std::size_t n = n_dist(rng);
  std::uniform_int_distribution<std::size_t> m_dist(n, std::max(n, shape.max_total));
  const std::size_t m = m_dist(rng);
  std::uniform_int_distribution<std::int64_t> d_dist(1, 3);
  std::uniform_int_distribution<std::int64_t> k_dist(-shape.bound, shape.bound);
  std::bernoulli_distribution zero(shape.sparsity);

  std::vector<std::int64_t> d(n);
  for (auto& v : d) v = d_dist(rng);
  std::vector<std::vector<std::int64_t>> rows(m, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (zero(rng)) continue;
      const std::int64_t g = std::gcd(d[i], d[j]);
      for (int attempt = 0; attempt < 8; ++attempt) {
        const std::int64_t k = k_dist(rng);
        const std::int64_t bij = k * d[j] / g;
        const std::int64_t bji = -k * d[i] / g;
        if (std::abs(bij) <= shape.bound && std::abs(bji) <= shape.bound) {
          rows[i][j] = bij;
          rows[j][i] = bji;
          break;
        }
      }
    }
  }
  for (std::size_t r = n; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) rows[r][j] = zero(rng) ? 0 : k_dist(rng);
  }
  std::vector<std::string> ex;
  std::vector<std::string> fx;
  for (std::size_t i = 0; i < m; ++i) (i < n ? ex : fx).push_back("x" + std::to_string(i + 1));
  return make_seed(std::move(ex), std::move(fx), rows);
}

std::vector<Seed> random_seeds(std::uint64_t rng_seed, std::size_t count, const RandomShape& shape) {
  std::mt19937_64 rng(rng_seed);
  std::vector<Seed> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_seed(rng, shape));
  return out;
}

namespace {

Rational power(const Rational& base, long e) {
  Rational r = 1;
  const Rational b = e < 0 ? Rational(1 / base) : base;
  for (long i = 0; i < std::labs(e); ++i) r *= b;
  return r;
}

}  // namespace

Rational evaluate(const LaurentPoly& p, const Universe& names, const std::map<std::string, Rational>& point) {
  Rational total = 0;
  for (const auto& t : p.terms()) {
    Rational v(t.coefficient);
    for (std::uint32_t i = 0; i < t.monomial.extent(); ++i) {
      const int e = t.monomial.exponent(i);
      if (e != 0) v *= power(point.at(names[i]), e);
    }
    total += v;
  }
  return total;
}

NumericSeed NumericSeed::mutate(std::size_t k) const {
  NumericSeed out = *this;
  Rational plus = 1;
  Rational minus = 1;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i][k] > 0) plus *= power(x[i], b[i][k]);
    if (b[i][k] < 0) minus *= power(x[i], -b[i][k]);
  }
  out.x[k] = (plus + minus) / x[k];
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out.b[i][j] = -b[i][j];
      } else {
        out.b[i][j] = b[i][j] + (std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j])) / 2;
      }
    }
  }
  return out;
}

NumericSeed numeric_seed(const Seed& seed, const std::map<std::string, Rational>& point) {
  NumericSeed s;
  s.n = seed.exchangeable_count();
  s.b = seed.matrix().to_rows();
  for (std::size_t p = 0; p < seed.size(); ++p) s.x.push_back(evaluate(seed.value(p), seed.universe(), point));
  return s;
}

std::map<std::string, Rational> generic_point(const Seed& seed) {
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  std::map<std::string, Rational> point;
  const auto& u = seed.universe();
  for (std::size_t i = 0; i < u.size(); ++i) {
    point[u[i]] = Rational(primes[(2 * i) % 16], primes[(2 * i + 1) % 16]);
  }
  return point;
}

NumericClass numeric_enumerate(const Seed& root, std::size_t max_seeds) {
  NumericClass out;
  const NumericSeed start = numeric_seed(root, generic_point(root));
  auto cluster = [](const NumericSeed& s) {
    std::vector<Rational> c(s.x.begin(), s.x.begin() + static_cast<long>(s.n));
    std::sort(c.begin(), c.end());
    return c;
  };
  std::set<std::vector<Rational>> seen{cluster(start)};
  std::vector<NumericSeed> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NumericSeed cur = queue[head];
    for (std::size_t i = 0; i < cur.n; ++i) out.exchangeable.insert(cur.x[i]);
    for (std::size_t k = 0; k < cur.n; ++k) {
      NumericSeed next = cur.mutate(k);
      if (seen.insert(cluster(next)).second) {
        if (seen.size() > max_seeds) {
          out.complete = false;
          out.seeds = queue.size();
          return out;
        }
        queue.push_back(std::move(next));
      }
    }
  }
  out.seeds = queue.size();
  return out;
}

namespace {

// Arithmetic modulo the Mersenne prime 2^61 - 1.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(p & kPrime) + static_cast<std::uint64_t>(p >> 61);
  if (r >= kPrime) r -= kPrime;
  return r;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1U) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1U;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

std::uint64_t reduce(const Integer& c) {
  const Integer m = c % kPrime;
  const auto v = static_cast<std::int64_t>(m);
  return v < 0 ? static_cast<std::uint64_t>(v + static_cast<std::int64_t>(kPrime)) : static_cast<std::uint64_t>(v);
}

std::uint64_t evaluate_mod(const LaurentPoly& p, const std::vector<std::uint64_t>& point,
                           const std::vector<std::uint64_t>& inverse) {
  std::uint64_t total = 0;
  for (const auto& t : p.terms()) {
    std::uint64_t v = reduce(t.coefficient);
    for (std::uint32_t i = 0; i < t.monomial.extent(); ++i) {
      const int e = t.monomial.exponent(i);
      if (e > 0) v = mulmod(v, powmod(point[i], static_cast<std::uint64_t>(e)));
      if (e < 0) v = mulmod(v, powmod(inverse[i], static_cast<std::uint64_t>(-e)));
    }
    total = (total + v) % kPrime;
  }
  return total;
}

struct ModSeed {
  std::vector<std::vector<std::int64_t>> b;
  std::size_t n = 0;
  std::vector<std::uint64_t> x;

  ModSeed mutate(std::size_t k) const {
    ModSeed out = *this;
    std::uint64_t plus = 1;
    std::uint64_t minus = 1;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i][k] > 0) plus = mulmod(plus, powmod(x[i], static_cast<std::uint64_t>(b[i][k])));
      if (b[i][k] < 0) minus = mulmod(minus, powmod(x[i], static_cast<std::uint64_t>(-b[i][k])));
    }
    out.x[k] = mulmod((plus + minus) % kPrime, invmod(x[k]));
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == k || j == k) {
          out.b[i][j] = -b[i][j];
        } else {
          out.b[i][j] = b[i][j] + (std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j])) / 2;
        }
      }
    }
    return out;
  }
};

struct SeedOutcome {
  std::size_t mutations = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;
};

std::string describe(std::size_t index, const Seed& s, const std::vector<std::string>& seq, const std::string& what) {
  std::ostringstream os;
  os << "seed " << index << " (" << s.exchangeable_count() << "x" << s.size() << ") after [";
  for (std::size_t i = 0; i < seq.size(); ++i) os << (i ? "," : "") << seq[i];
  os << "]: " << what;
  return os.str();
}

double binomial_bound(const Seed& s, std::size_t k) {
  double plus = 1;
  double minus = 1;
  for (std::size_t y = 0; y < s.size(); ++y) {
    const double t = static_cast<double>(s.value(y).size());
    const std::int64_t b = s.b(y, k);
    if (b > 0) plus *= std::pow(t, static_cast<double>(b));
    if (b < 0) minus *= std::pow(t, static_cast<double>(-b));
  }
  return plus + minus;
}

SeedOutcome check_seed(std::size_t index, const Seed& root, const PropertyOptions& options) {
  SeedOutcome out;
  auto fail = [&](const std::vector<std::string>& seq, const std::string& what) {
    if (out.failures.size() < 5) out.failures.push_back(describe(index, root, seq, what));
  };
  Symmetrizer d;
  try {
    d = validate(root);
  } catch (const std::exception& e) {
    fail({}, std::string("generated seed rejected: ") + e.what());
    return out;
  }

  // Round trips.
  try {
    const IceQuiver q = seed_quiver(root);
    if (!(quiver_to_matrix(q) == root.matrix())) fail({}, "matrix -> quiver -> matrix changed the matrix");
    if (!(seed_quiver(quiver_seed(q)) == q)) fail({}, "quiver -> seed -> quiver changed the quiver");
    const Seed glued = glue_decomposition(decompose_seed(root));
    if (!same_up_to_reordering(glued, root)) fail({}, "decompose then glue differs from the seed");
  } catch (const std::exception& e) {
    fail({}, std::string("round trip threw: ") + e.what());
  }

  // Random evaluation point; a wrong value survives with probability about
  // degree / 2^61.
  std::mt19937_64 rng(0x5eed0000 + index);
  std::vector<std::uint64_t> point(root.size());
  std::vector<std::uint64_t> inverse(root.size());
  for (std::size_t i = 0; i < root.size(); ++i) {
    point[i] = 2 + rng() % (kPrime - 3);
    inverse[i] = invmod(point[i]);
  }
  ModSeed start{root.matrix().to_rows(), root.exchangeable_count(), point};
  struct Frame {
    Seed seed;
    ModSeed numeric;
    std::vector<std::string> seq;
    std::size_t last;
  };
  const std::size_t n = root.exchangeable_count();
  std::vector<Frame> stack{{root, start, {}, n}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    for (std::size_t k = 0; k < n; ++k) {
      if (k == f.last) continue;
      if (binomial_bound(f.seed, k) > options.term_budget) {
        ++out.skipped;
        continue;
      }
      std::vector<std::string> seq = f.seq;
      seq.push_back(root.name(k));
      try {
        Seed next = mutate_at(f.seed, k);
        ++out.mutations;
        if (!(mutate_at(next, k) == f.seed)) fail(seq, "mutating twice is not the identity");
        if (validate(next) != d) fail(seq, "symmetrizer changed");
        ModSeed num = f.numeric.mutate(k);
        if (num.b != next.matrix().to_rows()) fail(seq, "matrix disagrees with the numeric oracle");
        for (std::size_t p = 0; p < next.size(); ++p) {
          if (p != k && !(next.value(p) == f.seed.value(p))) fail(seq, "value at " + root.name(p) + " changed");
        }
        // Only the new value needs checking; the others were checked on the
        // way down.
        const LaurentPoly& v = next.value(k);
        if (!has_laurent_shape(v, root)) fail(seq, "new value is not a Laurent polynomial in the initial cluster");
        if (next.universe() != root.universe()) fail(seq, "universe changed");
        if (evaluate_mod(v, point, inverse) != num.x[k]) fail(seq, "new value disagrees with the numeric oracle");
        if (seq.size() < options.sequence_length) stack.push_back({std::move(next), std::move(num), std::move(seq), k});
      } catch (const std::exception& e) {
        fail(seq, std::string("threw: ") + e.what());
      }
    }
  }
  return out;
}

PropertyReport run(const std::vector<Seed>& seeds, const PropertyOptions& options, bool parallel) {
  std::vector<SeedOutcome> outcomes(seeds.size());
  const long count = static_cast<long>(seeds.size());
  if (parallel) {
    CLUSTERKIT_OMP(omp parallel for schedule(dynamic, 1))
    for (long i = 0; i < count; ++i) outcomes[i] = check_seed(i, seeds[i], options);
  } else {
    for (long i = 0; i < count; ++i) outcomes[i] = check_seed(i, seeds[i], options);
  }
  PropertyReport r;
  r.seeds = seeds.size();
  for (auto& o : outcomes) {
    r.mutations += o.mutations;
    r.skipped += o.skipped;
    if (o.skipped) ++r.seeds_with_skips;
    for (auto& f : o.failures) r.failures.push_back(std::move(f));
  }
  return r;
}

}  // namespace

PropertyReport run_property_suite(const std::vector<Seed>& seeds, const PropertyOptions& options) {
  return run(seeds, options, true);
}

PropertyReport run_property_suite_serial(const std::vector<Seed>& seeds, const PropertyOptions& options) {
  return run(seeds, options, false);
}

}  // namespace testsupport
