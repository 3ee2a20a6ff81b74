#include "clusterkit/morphism.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <unordered_set>

#include "clusterkit/error.hpp"
#include "clusterkit/parallel.hpp"

namespace clusterkit {

namespace {

std::string show(const LaurentPoly& p, const Seed& over) { return to_fraction_string(p, over.universe()); }

bool is_negative_power_error(const Error& e) {
  return e.code() == ErrorCode::ZeroIntoNegativePower || e.code() == ErrorCode::NonUnitNegativePower;
}

std::vector<std::string> names_at(const Seed& s, const std::vector<std::size_t>& positions) {
  std::vector<std::string> out;
  for (std::size_t p : positions) out.push_back(s.name(p));
  return out;
}

// Positional identity of a (source, target) pair of seeds.
struct StateKey {
  std::vector<LaurentPoly> values;
  std::vector<std::int64_t> entries;
  std::size_t hash = 0;

  bool operator==(const StateKey& o) const {
    return hash == o.hash && values == o.values && entries == o.entries;
  }
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const { return k.hash; }
};

StateKey state_key(const Seed& s, const Seed& t) {
  StateKey k;
  std::size_t h = 0;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const Seed* seed : {&s, &t}) {
    for (const auto& v : seed->values()) {
      k.values.push_back(v);
      mix(v.hash());
    }
    for (std::size_t r = 0; r < seed->size(); ++r)
      for (std::size_t c = 0; c < seed->exchangeable_count(); ++c) {
        k.entries.push_back(seed->b(r, c));
        mix(static_cast<std::size_t>(seed->b(r, c)));
      }
  }
  k.hash = h;
  return k;
}

struct State {
  Seed source;
  Seed target;
  std::vector<std::size_t> sequence;
};

std::optional<Cm3Failure> check_state(const MorphismSpec& spec, const State& st) {
  for (std::size_t y = 0; y < spec.source.size(); ++y) {
    LaurentPoly rhs;
    if (auto q = spec.image_position(y)) {
      rhs = st.target.value(*q);
    } else {
      rhs = spec.images[y];
    }
    LaurentPoly lhs;
    std::string note;
    try {
      lhs = spec.apply(st.source.value(y));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotDivisible) throw;
      note = "image is not a Laurent polynomial";
    }
    if (!note.empty() || lhs != rhs) {
      Cm3Failure f;
      for (std::size_t p : st.sequence) f.sequence.push_back(spec.source.name(p));
      f.variable = spec.source.name(y);
      f.lhs = lhs;
      f.rhs = rhs;
      f.note = note;
      return f;
    }
  }
  return std::nullopt;
}

}  // namespace

// ------------------------------------------------------------- MorphismSpec

MorphismSpec MorphismSpec::make(const Seed& source, const Seed& target,
                                const std::map<std::string, LaurentPoly>& images,
                                std::vector<std::pair<LaurentPoly, LaurentPoly>> generator_table) {
  MorphismSpec spec;
  spec.source = source.is_initial() && source.universe() == source.names() ? source : source.as_initial();
  spec.target = target.is_initial() && target.universe() == target.names() ? target : target.as_initial();
  for (const auto& [name, _] : images) {
    if (!spec.source.position(name)) {
      throw Error(ErrorCode::UnknownVariable, "image given for unknown source variable '" + name + "'");
    }
  }
  for (const auto& name : spec.source.names()) {
    auto it = images.find(name);
    if (it == images.end()) throw Error(ErrorCode::MissingImage, "no image for '" + name + "'");
    if (it->second.extent() > spec.target.size()) {
      throw Error(ErrorCode::InvalidMorphism, "image of '" + name + "' uses unknown variables");
    }
    spec.images.push_back(it->second);
  }
  spec.generator_table = std::move(generator_table);
  return spec;
}

MorphismSpec MorphismSpec::identity(const Seed& seed) {
  Seed s = seed.as_initial();
  std::map<std::string, LaurentPoly> images;
  for (std::uint32_t i = 0; i < s.size(); ++i) images[s.name(i)] = LaurentPoly::variable(i);
  return make(s, s, images);
}

bool MorphismSpec::inducible() const {
  for (std::size_t p = 0; p < source.exchangeable_count(); ++p) {
    if (images[p].is_zero()) return false;
  }
  return true;
}

std::optional<std::size_t> MorphismSpec::image_position(std::size_t pos) const {
  if (auto v = images[pos].as_variable()) return *v;
  return std::nullopt;
}

LaurentPoly MorphismSpec::apply(const LaurentPoly& source_value) const {
  for (const auto& [key, value] : generator_table) {
    if (key == source_value) return value;
  }
  std::vector<std::optional<LaurentPoly>> imgs(images.begin(), images.end());
  try {
    return substitute(source_value, imgs);
  } catch (const Error& e) {
    if (!is_negative_power_error(e)) throw;
    throw Error(ErrorCode::MissingImage,
                "no image recorded for " + to_fraction_string(source_value, source.universe()));
  }
}

std::string to_string(Cm3Status s) {
  switch (s) {
    case Cm3Status::Pass: return "pass";
    case Cm3Status::Fail: return "fail";
    case Cm3Status::Exhausted: return "exhausted";
  }
  return "pass";
}

std::string to_string(IdealStatus s) {
  switch (s) {
    case IdealStatus::Ideal: return "ideal";
    case IdealStatus::NotIdeal: return "not_ideal";
    case IdealStatus::Unknown: return "unknown";
  }
  return "unknown";
}

// ----------------------------------------------------------- check_morphism

MorphismVerdict check_morphism(const MorphismSpec& spec, const CheckOptions& options) {
  MorphismVerdict v;
  v.inducible = spec.inducible();
  const Seed& src = spec.source;
  const Seed& tgt = spec.target;

  for (std::size_t p = 0; p < src.size(); ++p) {
    const LaurentPoly& img = spec.images[p];
    const bool exchangeable = src.is_exchangeable(p);
    AxiomCheck& check = exchangeable ? v.cm1 : v.cm2;
    if (!check.pass || img.as_integer()) continue;
    auto q = img.as_variable();
    if (!q || (exchangeable && !tgt.is_exchangeable(*q))) {
      check.pass = false;
      check.witness = src.name(p) + " -> " + show(img, tgt);
    }
  }

  // Steps (source position, target position) that keep both sides admissible.
  std::vector<std::pair<std::size_t, std::size_t>> moves;
  for (std::size_t p = 0; p < src.exchangeable_count(); ++p) {
    if (auto q = spec.image_position(p); q && tgt.is_exchangeable(*q)) moves.emplace_back(p, *q);
  }

  const std::size_t depth = options.depth ? options.depth : src.exchangeable_count() + 2;
  std::unordered_set<StateKey, StateKeyHash> seen;
  std::vector<State> frontier;
  frontier.push_back(State{src, tgt, {}});
  seen.insert(state_key(src, tgt));
  v.states = 1;
  if (auto f = check_state(spec, frontier[0])) {
    v.cm3 = Cm3Status::Fail;
    v.witness = std::move(f);
    return v;
  }

  const bool parallel = options.parallel && parallel::enabled() && parallel::max_threads() > 1;
  for (std::size_t level = 1; level <= depth; ++level) {
    if (frontier.empty()) break;
    const std::size_t count = frontier.size() * moves.size();
    std::vector<std::optional<State>> children(count);
    std::vector<std::optional<Cm3Failure>> failures(count);
    std::vector<std::exception_ptr> errors(count);
    auto work = [&](std::size_t t) {
      try {
        const State& parent = frontier[t / moves.size()];
        const auto [p, q] = moves[t % moves.size()];
        State child{mutate_at(parent.source, p), mutate_at(parent.target, q), parent.sequence};
        child.sequence.push_back(p);
        failures[t] = check_state(spec, child);
        children[t] = std::move(child);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    };
    if (parallel) {
      const long n = static_cast<long>(count);
      CLUSTERKIT_OMP(omp parallel for schedule(dynamic, 2))
      for (long t = 0; t < n; ++t) work(static_cast<std::size_t>(t));
    } else {
      for (std::size_t t = 0; t < count; ++t) work(t);
    }

    std::vector<State> next;
    for (std::size_t t = 0; t < count; ++t) {
      if (errors[t]) std::rethrow_exception(errors[t]);
      if (!seen.insert(state_key(children[t]->source, children[t]->target)).second) continue;
      ++v.states;
      if (failures[t]) {
        v.cm3 = Cm3Status::Fail;
        v.witness = std::move(failures[t]);
        v.checked_depth = level;
        return v;
      }
      next.push_back(std::move(*children[t]));
      if (v.states >= options.max_states) {
        v.cm3 = Cm3Status::Exhausted;
        v.checked_depth = level - 1;
        return v;
      }
    }
    frontier = std::move(next);
  }
  v.checked_depth = depth;
  if (frontier.empty()) {
    v.closed = true;
  } else {
    // Closed if the last level produces nothing new.
    bool grows = false;
    for (const auto& st : frontier) {
      for (const auto& [p, q] : moves) {
        if (!seen.count(state_key(mutate_at(st.source, p), mutate_at(st.target, q)))) {
          grows = true;
          break;
        }
      }
      if (grows) break;
    }
    v.closed = !grows;
  }
  return v;
}

std::pair<LaurentPoly, LaurentPoly> replay_cm3_failure(const MorphismSpec& spec,
                                                       const Cm3Failure& failure) {
  std::vector<std::string> target_seq;
  for (const auto& name : failure.sequence) {
    const std::size_t p = *spec.source.position(name);
    target_seq.push_back(spec.target.name(*spec.image_position(p)));
  }
  const Seed s = apply_sequence(spec.source, failure.sequence);
  const Seed t = apply_sequence(spec.target, target_seq);
  const std::size_t y = *spec.source.position(failure.variable);
  LaurentPoly rhs = spec.image_position(y) ? t.value(*spec.image_position(y)) : spec.images[y];
  LaurentPoly lhs;
  try {
    lhs = spec.apply(s.value(y));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotDivisible) throw;
  }
  return {lhs, rhs};
}

// --------------------------------------------------------------- image seed

Seed image_seed(const MorphismSpec& spec) {
  const Seed& tgt = spec.target;
  std::vector<bool> hit(tgt.size(), false);
  std::vector<bool> hit_by_ex(tgt.size(), false);
  for (std::size_t p = 0; p < spec.source.size(); ++p) {
    if (auto q = spec.image_position(p)) {
      hit[*q] = true;
      if (spec.source.is_exchangeable(p)) hit_by_ex[*q] = true;
    }
  }
  std::vector<std::size_t> ex;
  std::vector<std::size_t> fx;
  for (std::size_t q = 0; q < tgt.size(); ++q) {
    if (!hit[q]) continue;
    (tgt.is_exchangeable(q) && hit_by_ex[q] ? ex : fx).push_back(q);
  }
  ExtMatrix m(ex.size() + fx.size(), ex.size());
  for (std::size_t r = 0; r < ex.size() + fx.size(); ++r) {
    const std::size_t row = r < ex.size() ? ex[r] : fx[r - ex.size()];
    for (std::size_t c = 0; c < ex.size(); ++c) m(r, c) = tgt.b(row, ex[c]);
  }
  return Seed::initial(names_at(tgt, ex), names_at(tgt, fx), std::move(m));
}

// -------------------------------------------------------------- ideal check

IdealVerdict ideal_check(const MorphismSpec& spec, const IdealOptions& options) {
  IdealVerdict out;
  const Seed& src = spec.source;
  const Seed& tgt = spec.target;

  bool ex_into_ex = true;
  for (std::size_t p = 0; p < src.exchangeable_count(); ++p) {
    auto q = spec.image_position(p);
    ex_into_ex = ex_into_ex && q && tgt.is_exchangeable(*q);
  }
  if (ex_into_ex) {
    out.status = IdealStatus::Ideal;
    out.fast_path = "a";
    out.reason = "exchangeable variables map to exchangeable variables";
    return out;
  }
  if (spec.inducible() && is_acyclic(src)) {
    out.status = IdealStatus::Ideal;
    out.fast_path = "b";
    out.reason = "inducible with acyclic source";
    return out;
  }
  const Seed img = image_seed(spec);
  if (img.exchangeable_count() == tgt.exchangeable_count() && img.size() == tgt.size()) {
    // The image seed is the whole target, so both algebras coincide.
    out.status = IdealStatus::Ideal;
    out.fast_path = "c";
    out.reason = "image seed equals the target";
    return out;
  }

  const auto src_class = enumerate_class(src, options.limits);
  const auto src_vars = cluster_variables(src_class);
  std::vector<LaurentPoly> f_gens;
  try {
    for (const auto& v : src_vars.exchangeable) f_gens.push_back(spec.apply(v));
    for (const auto& v : src_vars.frozen) f_gens.push_back(spec.apply(v));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MissingImage && e.code() != ErrorCode::NotDivisible) throw;
    out.reason = e.detail();
    return out;
  }
  out.source_generators = f_gens.size();

  // Every element of A(f(Sigma)) is Laurent in the image variables with
  // denominators in its exchangeable ones.
  std::vector<bool> allowed(tgt.size(), false);
  std::vector<bool> invertible(tgt.size(), false);
  for (std::size_t i = 0; i < img.size(); ++i) {
    const std::size_t q = *tgt.position(img.name(i));
    allowed[q] = true;
    invertible[q] = img.is_exchangeable(i);
  }
  for (const auto& g : f_gens) {
    for (auto v : g.support()) {
      if (v >= allowed.size() || !allowed[v]) {
        out.status = IdealStatus::NotIdeal;
        out.witness = g;
        out.reason = "support outside the image seed";
        return out;
      }
    }
    for (auto v : g.denominator_support()) {
      if (!invertible[v]) {
        out.status = IdealStatus::NotIdeal;
        out.witness = g;
        out.reason = "denominator outside the image seed's exchangeable variables";
        return out;
      }
    }
  }

  const auto img_class = enumerate_class(img, options.limits);
  const auto img_vars = cluster_variables(img_class);
  std::vector<LaurentPoly> img_gens;
  for (const auto& v : img_vars.exchangeable) img_gens.push_back(rebase(v, img.universe(), tgt.universe()));
  for (const auto& v : img_vars.frozen) img_gens.push_back(rebase(v, img.universe(), tgt.universe()));
  out.image_generators = img_gens.size();

  bool certified = src_vars.complete && img_vars.complete;
  for (const auto& g : f_gens) {
    auto r = test_membership(g, img_gens, options.membership);
    if (r.status == Membership::Member) continue;
    if (r.status == Membership::NotMember && img_vars.complete) {
      out.status = IdealStatus::NotIdeal;
      out.witness = g;
      out.reason = "not in the algebra of the image seed (" + r.reason + ")";
      return out;
    }
    certified = false;
    if (out.reason.empty()) out.reason = "membership undecided for " + show(g, tgt) + " (" + r.reason + ")";
  }
  for (const auto& h : img_gens) {
    auto r = test_membership(h, f_gens, options.membership);
    if (r.status == Membership::Member) continue;
    certified = false;
    if (out.reason.empty()) out.reason = "membership undecided for " + show(h, tgt) + " (" + r.reason + ")";
  }
  if (certified) {
    out.status = IdealStatus::Ideal;
    out.reason = "both generator sets certified";
  } else if (out.reason.empty()) {
    out.reason = "enumeration budget reached";
  }
  return out;
}

// ------------------------------------------------------- injection analysis

InjectionReport analyze_injection(const MorphismSpec& spec) {
  const Seed& src = spec.source;
  const Seed& tgt = spec.target;
  std::vector<std::string> image_name(src.size());
  std::set<std::size_t> used;
  for (std::size_t p = 0; p < src.size(); ++p) {
    auto q = spec.image_position(p);
    if (!q) throw Error(ErrorCode::NotInjective, src.name(p) + " is not sent to a variable");
    if (!used.insert(*q).second) {
      throw Error(ErrorCode::NotInjective, "two variables are sent to " + tgt.name(*q));
    }
    if (src.is_exchangeable(p) && !tgt.is_exchangeable(*q)) {
      throw Error(ErrorCode::NotComponentEmbedding,
                  src.name(p) + " is exchangeable but its image " + tgt.name(*q) + " is frozen");
    }
    image_name[p] = tgt.name(*q);
  }

  InjectionReport rep;
  std::set<std::string> ex0, ex2, fx0;
  for (std::size_t p = 0; p < src.size(); ++p) {
    const std::size_t q = *spec.image_position(p);
    if (src.is_exchangeable(p)) ex0.insert(tgt.name(q));
    else if (tgt.is_exchangeable(q)) ex2.insert(tgt.name(q));
    else fx0.insert(tgt.name(q));
  }
  for (std::size_t q = 0; q < tgt.size(); ++q) {
    const std::string& n = tgt.name(q);
    if (ex0.count(n)) rep.ex0.push_back(n);
    else if (ex2.count(n)) rep.ex2.push_back(n);
    else if (fx0.count(n)) rep.fx0.push_back(n);
    else if (tgt.is_exchangeable(q)) rep.ex1.push_back(n);
    else rep.fx1.push_back(n);
  }
  rep.freezing = freeze(tgt, rep.ex2);
  rep.is_section = rep.ex2.empty();

  const auto dec_s = decompose_seed(src);
  const auto dec_f = decompose_seed(rep.freezing);
  auto frozen_set = [](const SeedDecomposition& d, std::size_t c, auto&& rename) {
    std::set<std::string> out;
    for (const auto& n : d.components[c].frozen_names()) out.insert(rename(d.original_name(c, n)));
    return out;
  };
  auto to_target = [&](const std::string& source_name) { return image_name[*src.position(source_name)]; };
  auto same = [](const std::string& n) { return n; };

  std::vector<bool> matched(dec_f.components.size(), false);
  for (std::size_t c = 0; c < dec_s.components.size(); ++c) {
    const Seed& sc = dec_s.components[c];
    std::set<std::string> ex;
    for (const auto& n : sc.exchangeable_names()) ex.insert(to_target(n));
    std::optional<std::size_t> k;
    for (std::size_t j = 0; j < dec_f.components.size(); ++j) {
      const auto& fe = dec_f.components[j].exchangeable_names();
      if (std::set<std::string>(fe.begin(), fe.end()) == ex) k = j;
    }
    if (!k || frozen_set(dec_s, c, to_target) != frozen_set(dec_f, *k, same)) {
      throw Error(ErrorCode::NotComponentEmbedding,
                  "source component " + std::to_string(c + 1) + " is not a component of the freezing");
    }
    const Seed& fc = dec_f.components[*k];
    // Compare entries by target name; allow a global sign flip.
    int sign = 0;
    bool ok = true;
    for (std::size_t r = 0; r < sc.size() && ok; ++r) {
      const std::string rn = to_target(dec_s.original_name(c, sc.name(r)));
      std::size_t fr = 0;
      for (std::size_t i = 0; i < fc.size(); ++i) {
        if (dec_f.original_name(*k, fc.name(i)) == rn) fr = i;
      }
      for (std::size_t col = 0; col < sc.exchangeable_count(); ++col) {
        const std::size_t fcol = *fc.position(to_target(sc.name(col)));
        const std::int64_t a = sc.b(r, col);
        const std::int64_t b = fc.b(fr, fcol);
        if (a == 0 && b == 0) continue;
        const int s = a == b ? 1 : (a == -b ? -1 : 0);
        if (s == 0 || (sign != 0 && s != sign)) ok = false;
        sign = s;
      }
    }
    if (!ok) {
      throw Error(ErrorCode::NotComponentEmbedding,
                  "source component " + std::to_string(c + 1) + " has a different matrix");
    }
    matched[*k] = true;
    rep.components.push_back(ComponentMatch{c, *k, sign < 0});
  }
  for (std::size_t j = 0; j < matched.size(); ++j) {
    if (!matched[j]) rep.complement_components.push_back(j);
  }
  return rep;
}

// ---------------------------------------------------------- factorizations

Factorization factorize_ideal(const MorphismSpec& spec, const IdealOptions& options) {
  const IdealVerdict verdict = ideal_check(spec, options);
  if (verdict.status != IdealStatus::Ideal) {
    throw Error(ErrorCode::NotIdeal, "ideal check returned " + to_string(verdict.status));
  }
  const Seed img = image_seed(spec);
  std::map<std::string, LaurentPoly> surj;
  for (std::size_t p = 0; p < spec.source.size(); ++p) {
    surj[spec.source.name(p)] = rebase(spec.images[p], spec.target.universe(), img.universe());
  }
  std::vector<std::pair<LaurentPoly, LaurentPoly>> table;
  for (const auto& [k, v] : spec.generator_table) {
    table.emplace_back(k, rebase(v, spec.target.universe(), img.universe()));
  }
  std::map<std::string, LaurentPoly> inj;
  for (std::size_t i = 0; i < img.size(); ++i) {
    inj[img.name(i)] = LaurentPoly::variable(static_cast<std::uint32_t>(*spec.target.position(img.name(i))));
  }
  return Factorization{MorphismSpec::make(spec.source, img, surj, std::move(table)),
                       MorphismSpec::make(img, spec.target, inj)};
}

MorphismSpec specialize(const Seed& seed, const std::map<std::string, Integer>& drop) {
  const Seed s = seed.as_initial();
  for (const auto& [name, _] : drop) {
    if (!s.position(name)) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + name + "'");
  }
  std::vector<std::string> ex;
  std::vector<std::string> fx;
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (drop.count(s.name(p))) continue;
    (s.is_exchangeable(p) ? ex : fx).push_back(s.name(p));
  }
  const Seed target = subseed(s, ex, fx).as_initial();
  std::map<std::string, LaurentPoly> images;
  for (std::size_t p = 0; p < s.size(); ++p) {
    const std::string& n = s.name(p);
    if (auto it = drop.find(n); it != drop.end()) {
      images[n] = LaurentPoly(it->second);
    } else {
      images[n] = LaurentPoly::variable(static_cast<std::uint32_t>(*target.position(n)));
    }
  }
  return MorphismSpec::make(s, target, images);
}

// --------------------------------------------------------- tensor report

TensorReport tensor_decomposition_report(const Seed& seed, const EnumerationLimits& limits) {
  const Seed s = seed.as_initial();
  const auto dec = decompose_seed(s);
  TensorReport rep;
  rep.components = dec.components.size();
  const std::size_t t = dec.components.size();

  auto factor = [t](const FrozenCopy& c) {
    std::string out;
    for (std::size_t i = 0; i < t; ++i) {
      if (i) out += "⊗";
      out += i == c.component ? c.name : "1";
    }
    return out;
  };
  for (const auto& [original, copies] : dec.identification) {
    for (std::size_t i = 1; i < copies.size(); ++i) {
      TensorGenerator g{original, copies[0], copies[i], factor(copies[0]) + " - " + factor(copies[i])};
      rep.generators.push_back(std::move(g));
    }
  }
  std::sort(rep.generators.begin(), rep.generators.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first, a.other) < std::tie(b.first, b.other);
  });

  const auto whole = cluster_variables(enumerate_class(s, limits));
  bool complete = whole.complete;
  std::set<LaurentPoly, LaurentLess> whole_ex(whole.exchangeable.begin(), whole.exchangeable.end());
  std::set<LaurentPoly, LaurentLess> parts;
  std::set<std::string> frozen_names(dec.isolated_frozen.begin(), dec.isolated_frozen.end());
  std::size_t part_count = 0;
  for (std::size_t c = 0; c < t; ++c) {
    const Seed& comp = dec.components[c];
    Universe renamed = comp.universe();
    for (auto& n : renamed) n = dec.original_name(c, n);
    for (const auto& n : comp.frozen_names()) frozen_names.insert(dec.original_name(c, n));
    const auto vars = cluster_variables(enumerate_class(comp, limits));
    complete = complete && vars.complete;
    for (const auto& v : vars.exchangeable) {
      parts.insert(rebase(v, renamed, s.universe()));
      ++part_count;
    }
  }
  rep.complete = complete;
  rep.whole_exchangeable = whole_ex.size();
  rep.component_exchangeable = part_count;
  rep.frozen = s.frozen_count();
  std::set<std::string> fx(s.frozen_names().begin(), s.frozen_names().end());
  rep.partition_holds = complete && part_count == parts.size() && parts == whole_ex && frozen_names == fx;
  return rep;
}

}  // namespace clusterkit
