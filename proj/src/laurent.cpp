#include "clusterkit/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <map>
#include <unordered_map>

#include "clusterkit/error.hpp"

namespace clusterkit {

namespace {

int checked_exponent(long value) {
  if (value > INT_MAX || value < INT_MIN) {
    throw Error(ErrorCode::Overflow, "exponent out of range");
  }
  return static_cast<int>(value);
}

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::uint32_t var, int exponent) {
  Monomial m;
  if (exponent != 0) {
    m.exps_.resize(var + 1, 0);
    m.exps_[var] = exponent;
  }
  return m;
}

long Monomial::degree() const {
  long d = 0;
  for (int e : exps_) d += e;
  return d;
}

long Monomial::absolute_degree() const {
  long d = 0;
  for (int e : exps_) d += e < 0 ? -static_cast<long>(e) : e;
  return d;
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  const std::size_t n = std::max(exps_.size(), other.exps_.size());
  r.exps_.resize(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    r.exps_[i] = checked_exponent(static_cast<long>(exponent(static_cast<std::uint32_t>(i))) +
                                  other.exponent(static_cast<std::uint32_t>(i)));
  }
  r.trim();
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  return *this * other.inverse();
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (int& e : r.exps_) e = checked_exponent(-static_cast<long>(e));
  return r;
}

Monomial Monomial::pow(int k) const {
  Monomial r = *this;
  for (int& e : r.exps_) e = checked_exponent(static_cast<long>(e) * k);
  r.trim();
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = exps_.size();
  for (int e : exps_) h = mix(h, static_cast<std::size_t>(static_cast<unsigned>(e)));
  return h;
}

int compare_terms(const Monomial& a, const Monomial& b) {
  const long da = a.degree();
  const long db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  const std::size_t n = std::max(a.extent(), b.extent());
  for (std::uint32_t i = 0; i < n; ++i) {
    const int ea = a.exponent(i);
    const int eb = b.exponent(i);
    if (ea != eb) return ea > eb ? -1 : 1;
  }
  return 0;
}

int compare_lex(const Monomial& a, const Monomial& b) {
  const std::size_t n = std::max(a.extent(), b.extent());
  for (std::uint32_t i = 0; i < n; ++i) {
    const int ea = a.exponent(i);
    const int eb = b.exponent(i);
    if (ea != eb) return ea > eb ? 1 : -1;
  }
  return 0;
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(Integer c) {
  if (c != 0) terms_.push_back(Term{Monomial{}, std::move(c)});
}

LaurentPoly LaurentPoly::variable(std::uint32_t var) {
  return monomial(Monomial::variable(var), 1);
}

LaurentPoly LaurentPoly::monomial(Monomial m, Integer coefficient) {
  LaurentPoly p;
  if (coefficient != 0) p.terms_.push_back(Term{std::move(m), std::move(coefficient)});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_terms(a.monomial, b.monomial) < 0;
  });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

std::optional<Integer> LaurentPoly::as_integer() const {
  if (terms_.empty()) return Integer(0);
  if (terms_.size() == 1 && terms_[0].monomial.is_one()) return terms_[0].coefficient;
  return std::nullopt;
}

std::optional<std::uint32_t> LaurentPoly::as_variable() const {
  if (terms_.size() != 1 || terms_[0].coefficient != 1) return std::nullopt;
  const Monomial& m = terms_[0].monomial;
  if (m.degree() != 1 || m.absolute_degree() != 1) return std::nullopt;
  return static_cast<std::uint32_t>(m.extent() - 1);
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coefficient == 1 || terms_[0].coefficient == -1);
}

std::vector<std::uint32_t> LaurentPoly::support() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < extent(); ++i) {
    for (const auto& t : terms_) {
      if (t.monomial.exponent(i) != 0) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

std::vector<std::uint32_t> LaurentPoly::denominator_support() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < extent(); ++i) {
    for (const auto& t : terms_) {
      if (t.monomial.exponent(i) < 0) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

std::size_t LaurentPoly::extent() const {
  std::size_t n = 0;
  for (const auto& t : terms_) n = std::max(n, t.monomial.extent());
  return n;
}

long LaurentPoly::max_absolute_degree() const {
  long d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.absolute_degree());
  return d;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end()) {
      r.terms_.push_back(*i++);
    } else if (i == a.terms_.end()) {
      r.terms_.push_back(*j++);
    } else {
      const int c = compare_terms(i->monomial, j->monomial);
      if (c < 0) {
        r.terms_.push_back(*i++);
      } else if (c > 0) {
        r.terms_.push_back(*j++);
      } else {
        Integer s = i->coefficient + j->coefficient;
        if (s != 0) r.terms_.push_back(Term{i->monomial, std::move(s)});
        ++i;
        ++j;
      }
    }
  }
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
  // The term order is translation invariant, so no re-sort is needed.
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.monomial = t.monomial * m;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const LaurentPoly& single = a.terms_.size() == 1 ? a : b;
    const LaurentPoly& other = a.terms_.size() == 1 ? b : a;
    LaurentPoly r = other.shifted(single.terms_[0].monomial);
    if (single.terms_[0].coefficient != 1) {
      for (auto& t : r.terms_) t.coefficient *= single.terms_[0].coefficient;
    }
    return r;
  }
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      acc[s.monomial * t.monomial] += s.coefficient * t.coefficient;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back(Term{m, std::move(c)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = terms_.size();
  std::hash<Integer> ih;
  for (const auto& t : terms_) {
    h = mix(h, t.monomial.hash());
    h = mix(h, ih(t.coefficient));
  }
  return h;
}

std::strong_ordering compare(const LaurentPoly& a, const LaurentPoly& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = compare_terms(ta[i].monomial, tb[i].monomial);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (ta[i].coefficient != tb[i].coefficient) {
      return ta[i].coefficient < tb[i].coefficient ? std::strong_ordering::less
                                                   : std::strong_ordering::greater;
    }
  }
  return ta.size() <=> tb.size();
}

// ---------------------------------------------------------------- division

namespace {

struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_lex(a, b) > 0; }
};

LaurentPoly divide_by_term(const LaurentPoly& dividend, const Term& divisor) {
  std::vector<Term> out;
  out.reserve(dividend.size());
  const Monomial inv = divisor.monomial.inverse();
  for (const auto& t : dividend.terms()) {
    Integer q;
    Integer r;
    boost::multiprecision::divide_qr(t.coefficient, divisor.coefficient, q, r);
    if (r != 0) throw Error(ErrorCode::NotDivisible, "coefficient not divisible");
    out.push_back(Term{t.monomial * inv, std::move(q)});
  }
  // Order is translation invariant; terms are already canonical.
  LaurentPoly r;
  r = LaurentPoly::from_terms(std::move(out));
  return r;
}

}  // namespace

LaurentPoly div_exact(const LaurentPoly& dividend, const LaurentPoly& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::NotDivisible, "division by zero");
  if (dividend.is_zero()) return {};
  if (divisor.is_monomial()) return divide_by_term(dividend, divisor.terms()[0]);

  // Any quotient term must lie in the box spanned by the exponent ranges of
  // dividend and divisor; leaving it certifies non-divisibility and bounds
  // the loop.
  const std::size_t n = std::max(dividend.extent(), divisor.extent());
  std::vector<long> qmin(n), qmax(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    long amin = LONG_MAX, amax = LONG_MIN, bmin = LONG_MAX, bmax = LONG_MIN;
    for (const auto& t : dividend.terms()) {
      amin = std::min<long>(amin, t.monomial.exponent(i));
      amax = std::max<long>(amax, t.monomial.exponent(i));
    }
    for (const auto& t : divisor.terms()) {
      bmin = std::min<long>(bmin, t.monomial.exponent(i));
      bmax = std::max<long>(bmax, t.monomial.exponent(i));
    }
    qmin[i] = amin - bmin;
    qmax[i] = amax - bmax;
    if (qmin[i] > qmax[i]) throw Error(ErrorCode::NotDivisible, "exponent ranges incompatible");
  }

  const Term* lead = &divisor.terms()[0];
  for (const auto& t : divisor.terms()) {
    if (compare_lex(t.monomial, lead->monomial) > 0) lead = &t;
  }

  std::map<Monomial, Integer, LexGreater> rem;
  for (const auto& t : dividend.terms()) rem.emplace(t.monomial, t.coefficient);

  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    Monomial qm = it->first / lead->monomial;
    for (std::uint32_t i = 0; i < n; ++i) {
      const long e = qm.exponent(i);
      if (e < qmin[i] || e > qmax[i]) throw Error(ErrorCode::NotDivisible, "non-factor");
    }
    if (qm.extent() > n) throw Error(ErrorCode::NotDivisible, "non-factor");
    Integer qc;
    Integer r;
    boost::multiprecision::divide_qr(it->second, lead->coefficient, qc, r);
    if (r != 0) throw Error(ErrorCode::NotDivisible, "coefficient not divisible");
    for (const auto& t : divisor.terms()) {
      Monomial key = t.monomial * qm;
      auto [pos, inserted] = rem.try_emplace(std::move(key), 0);
      pos->second -= qc * t.coefficient;
      if (pos->second == 0) rem.erase(pos);
    }
    quotient.push_back(Term{std::move(qm), std::move(qc)});
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

// ------------------------------------------------------------ substitution

LaurentPoly substitute(const LaurentPoly& p,
                       std::span<const std::optional<LaurentPoly>> images) {
  if (p.is_zero()) return {};
  const std::size_t n = p.extent();
  std::vector<int> shift(n, 0);
  for (const auto& t : p.terms()) {
    for (std::uint32_t i = 0; i < n; ++i) {
      shift[i] = std::max(shift[i], -t.monomial.exponent(i));
    }
  }
  for (std::uint32_t i : p.support()) {
    if (i >= images.size() || !images[i]) {
      throw Error(ErrorCode::MissingImage, "no image for variable index " + std::to_string(i));
    }
    if (shift[i] > 0) {
      const LaurentPoly& img = *images[i];
      if (img.is_zero()) {
        throw Error(ErrorCode::ZeroIntoNegativePower,
                    "image 0 substituted into a negative power");
      }
      if (!img.is_unit() && !img.is_constant()) {
        throw Error(ErrorCode::NonUnitNegativePower,
                    "non-invertible image substituted into a negative power");
      }
    }
  }

  std::map<std::pair<std::uint32_t, int>, LaurentPoly> powers;
  auto power_of = [&](std::uint32_t var, int e) -> const LaurentPoly& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it == powers.end()) {
      it = powers.emplace(key, images[var]->pow(static_cast<unsigned>(e))).first;
    }
    return it->second;
  };

  LaurentPoly numerator;
  for (const auto& t : p.terms()) {
    LaurentPoly term(t.coefficient);
    for (std::uint32_t i = 0; i < n; ++i) {
      const int e = t.monomial.exponent(i) + shift[i];
      if (e > 0) term = term * power_of(i, e);
      if (term.is_zero()) break;
    }
    numerator = numerator + term;
  }
  LaurentPoly denominator(1);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (shift[i] > 0) denominator = denominator * power_of(i, shift[i]);
  }
  return div_exact(numerator, denominator);
}

// ----------------------------------------------------------------- printing

namespace {

const std::string& name_of(std::span<const std::string> names, std::uint32_t i) {
  if (i >= names.size()) {
    throw Error(ErrorCode::UnknownVariable, "variable index " + std::to_string(i) + " has no name");
  }
  return names[i];
}

std::string monomial_body(const Monomial& m, std::span<const std::string> names) {
  std::string out;
  for (std::uint32_t i = 0; i < m.extent(); ++i) {
    const int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += name_of(names, i);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// Term without its sign.
std::string unsigned_term(const Term& t, std::span<const std::string> names) {
  const Integer mag = abs(t.coefficient);
  if (t.monomial.is_one()) return mag.str();
  std::string body = monomial_body(t.monomial, names);
  if (mag == 1) return body;
  return mag.str() + "*" + body;
}

std::string join_terms(const LaurentPoly& p, std::span<const std::string> names,
                       std::string_view plus, std::string_view minus) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coefficient < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? minus : plus;
    }
    out += unsigned_term(t, names);
    first = false;
  }
  return out;
}

}  // namespace

std::string to_string(const LaurentPoly& p, std::span<const std::string> names) {
  return join_terms(p, names, " + ", " - ");
}

std::string to_fraction_string(const LaurentPoly& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  const std::size_t n = p.extent();
  Monomial denominator;
  for (std::uint32_t i = 0; i < n; ++i) {
    int lowest = 0;
    for (const auto& t : p.terms()) lowest = std::min(lowest, t.monomial.exponent(i));
    if (lowest < 0) denominator = denominator * Monomial::variable(i, -lowest);
  }
  const LaurentPoly numerator = p.shifted(denominator);
  std::string num = join_terms(numerator, names, "+", "-");
  if (denominator.is_one()) return num;
  if (numerator.size() > 1) num = "(" + num + ")";
  std::string den = monomial_body(denominator, names);
  int factors = 0;
  for (std::uint32_t i = 0; i < denominator.extent(); ++i) factors += denominator.exponent(i) != 0;
  if (factors > 1) den = "(" + den + ")";
  return num + "/" + den;
}

// ------------------------------------------------------------------ parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VariableResolver& resolve) : text_(text), resolve_(resolve) {}

  LaurentPoly parse() {
    LaurentPoly p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expression() {
    LaurentPoly acc = product();
    while (true) {
      if (accept('+')) {
        acc = acc + product();
      } else if (accept('-')) {
        acc = acc - product();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly product() {
    LaurentPoly acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        LaurentPoly d = unary();
        if (!d.is_unit()) fail("division is only permitted by unit monomials");
        acc = div_exact(acc, d);
      } else {
        return acc;
      }
    }
  }

  LaurentPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  LaurentPoly power() {
    LaurentPoly base = primary();
    if (!accept('^')) return base;
    long e = exponent();
    if (e >= 0) return base.pow(static_cast<unsigned>(e));
    if (!base.is_unit()) fail("negative powers are only permitted of unit monomials");
    const Term& t = base.terms()[0];
    Integer c = (e % 2 != 0) ? t.coefficient : Integer(1);
    return LaurentPoly::monomial(t.monomial.pow(checked_exponent(e)), c);
  }

  long exponent() {
    bool paren = accept('(');
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    if (pos_ - start > 9) fail("exponent too large");
    long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (paren && !accept(')')) fail("expected ')'");
    return negative ? -e : e;
  }

  LaurentPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return LaurentPoly(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      auto idx = resolve_(name);
      if (!idx) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
      return LaurentPoly::variable(*idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const VariableResolver& resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, const VariableResolver& resolve) {
  return Parser(text, resolve).parse();
}

LaurentPoly parse_laurent(std::string_view text, std::span<const std::string> names) {
  VariableResolver resolve = [names](std::string_view name) -> std::optional<std::uint32_t> {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return static_cast<std::uint32_t>(i);
    }
    return std::nullopt;
  };
  return parse_laurent(text, resolve);
}

LaurentPoly rebase(const LaurentPoly& p, const Universe& from, const Universe& to) {
  const std::size_t n = p.extent();
  std::vector<std::uint32_t> target(n, 0);
  for (std::uint32_t i : p.support()) {
    if (i >= from.size()) throw Error(ErrorCode::UnknownVariable, "index outside universe");
    auto it = std::find(to.begin(), to.end(), from[i]);
    if (it == to.end()) {
      throw Error(ErrorCode::UnknownVariable, "variable '" + from[i] + "' absent from target universe");
    }
    target[i] = static_cast<std::uint32_t>(it - to.begin());
  }
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::uint32_t i = 0; i < n; ++i) {
      const int e = t.monomial.exponent(i);
      if (e != 0) m = m * Monomial::variable(target[i], e);
    }
    terms.push_back(Term{std::move(m), t.coefficient});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace clusterkit
