#include "clusterkit/membership.hpp"

#include <algorithm>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace clusterkit {

namespace {

using Rational = boost::multiprecision::cpp_rational;

struct Column {
  std::vector<unsigned> exponents;
  LaurentPoly value;
};

// Number of multisets of size <= d from k items, saturating at cap.
std::size_t count_products(std::size_t k, unsigned d, std::size_t cap) {
  // C(k + d, d) computed incrementally.
  long double c = 1;
  for (unsigned i = 1; i <= d; ++i) {
    c = c * static_cast<long double>(k + i) / i;
    if (c > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::size_t>(c + 0.5L);
}

void enumerate_products(const std::vector<std::size_t>& active, const std::vector<LaurentPoly>& gens,
                        unsigned remaining, std::size_t start, std::vector<unsigned>& exps,
                        const LaurentPoly& current, std::vector<Column>& out) {
  out.push_back({exps, current});
  if (remaining == 0) return;
  for (std::size_t a = start; a < active.size(); ++a) {
    ++exps[active[a]];
    enumerate_products(active, gens, remaining - 1, a, exps, current * gens[active[a]], out);
    --exps[active[a]];
  }
}

// Particular solution of sum x_j * columns[j] = target, free variables zero.
std::optional<std::vector<Rational>> solve(const std::vector<Column>& columns, const LaurentPoly& target) {
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  auto row = [&](const Monomial& m) {
    auto [it, inserted] = row_of.emplace(m, row_of.size());
    return it->second;
  };
  for (const auto& c : columns)
    for (const auto& t : c.value.terms()) row(t.monomial);
  for (const auto& t : target.terms()) row(t.monomial);

  const std::size_t n = columns.size();
  const std::size_t m = row_of.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n + 1, Rational(0)));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& t : columns[j].value.terms()) a[row_of[t.monomial]][j] = Rational(t.coefficient);
  for (const auto& t : target.terms()) a[row_of[t.monomial]][n] = Rational(t.coefficient);

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m; ++c) {
    std::size_t p = rank;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[rank]);
    const Rational inv = 1 / a[rank][c];
    for (std::size_t k = c; k <= n; ++k) a[rank][k] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = c; k <= n; ++k) {
        if (a[rank][k] != 0) a[r][k] -= f * a[rank][k];
      }
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < m; ++r) {
    if (a[r][n] != 0) return std::nullopt;
  }
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = a[r][n];
  return x;
}

}  // namespace

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Member: return "member";
    case Membership::NotMember: return "not_member";
    case Membership::Unknown: return "unknown";
  }
  return "unknown";
}

unsigned default_degree_bound(const std::vector<LaurentPoly>& generators) {
  long d = 0;
  for (const auto& g : generators) d = std::max(d, g.max_absolute_degree());
  return static_cast<unsigned>(std::max<long>(1, 2 * d));
}

LaurentPoly evaluate_certificate(const MembershipCertificate& cert,
                                 const std::vector<LaurentPoly>& generators) {
  LaurentPoly sum;
  for (const auto& [exps, coeff] : cert.combination) {
    LaurentPoly prod(coeff);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i]) prod = prod * generators[i].pow(exps[i]);
    }
    sum = sum + prod;
  }
  return sum;
}

MembershipResult test_membership(const LaurentPoly& p, const std::vector<LaurentPoly>& generators,
                                 const MembershipOptions& options) {
  MembershipResult out;
  const std::size_t k = generators.size();

  if (auto c = p.as_integer()) {
    out.status = Membership::Member;
    out.reason = "constant";
    out.certificate.combination.push_back({std::vector<unsigned>(k, 0), *c});
    return out;
  }

  std::vector<bool> in_support;
  std::vector<bool> has_negative;
  auto mark = [](std::vector<bool>& v, std::uint32_t i) {
    if (v.size() <= i) v.resize(i + 1, false);
    v[i] = true;
  };
  auto marked = [](const std::vector<bool>& v, std::uint32_t i) { return i < v.size() && v[i]; };
  for (const auto& g : generators) {
    for (auto v : g.support()) mark(in_support, v);
    for (auto v : g.denominator_support()) mark(has_negative, v);
  }
  for (auto v : p.support()) {
    if (!marked(in_support, v)) {
      out.status = Membership::NotMember;
      out.reason = "support";
      return out;
    }
  }
  for (auto v : p.denominator_support()) {
    if (!marked(has_negative, v)) {
      out.status = Membership::NotMember;
      out.reason = "denominator";
      return out;
    }
  }

  // Distinct non-constant generators.
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < k; ++i) {
    if (generators[i].is_constant()) continue;
    bool dup = false;
    for (std::size_t j : active) dup = dup || generators[j] == generators[i];
    if (!dup) active.push_back(i);
  }

  const unsigned bound = options.degree_bound ? options.degree_bound : default_degree_bound(generators);
  out.reason = "degree-bound";
  for (unsigned d = 1; d <= bound; ++d) {
    if (count_products(active.size(), d, options.column_budget) > options.column_budget) {
      out.reason = "column-budget";
      break;
    }
    std::vector<Column> columns;
    std::vector<unsigned> exps(k, 0);
    enumerate_products(active, generators, d, 0, exps, LaurentPoly(1), columns);
    auto x = solve(columns, p);
    if (!x) continue;
    bool integral = std::all_of(x->begin(), x->end(), [](const Rational& r) { return denominator(r) == 1; });
    if (!integral) continue;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if ((*x)[j] != 0) out.certificate.combination.push_back({columns[j].exponents, numerator((*x)[j])});
    }
    out.status = Membership::Member;
    out.reason = "combination";
    return out;
  }
  out.status = Membership::Unknown;
  return out;
}

}  // namespace clusterkit
