#include "clusterkit/json_io.hpp"

#include <sstream>

#include "clusterkit/error.hpp"

namespace clusterkit {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::vector<std::string> string_list(const Json& j, const char* key) {
  if (!j.contains(key)) {
    if (std::string(key) == "frozen") return {};
    parse_error(std::string("missing \"") + key + "\"");
  }
  const Json& v = j.at(key);
  if (!v.is_array()) parse_error(std::string("\"") + key + "\" must be an array of names");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) parse_error(std::string("\"") + key + "\" must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::string expression_text(const Json& v, const std::string& what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  parse_error(what + " must be a string or an integer");
}

Json copy_json(const FrozenCopy& c) { return Json{{"component", c.component}, {"name", c.name}}; }

}  // namespace

Seed seed_from_json(const Json& j) {
  if (!j.is_object()) parse_error("seed must be a JSON object");
  auto ex = string_list(j, "exchangeable");
  auto fx = string_list(j, "frozen");
  if (!j.contains("matrix") || !j.at("matrix").is_array()) parse_error("missing \"matrix\" array");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : j.at("matrix")) {
    if (!r.is_array()) parse_error("matrix rows must be arrays");
    std::vector<std::int64_t> row;
    for (const auto& e : r) {
      if (!e.is_number_integer()) parse_error("matrix entries must be integers");
      row.push_back(e.get<std::int64_t>());
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() != ex.size() + fx.size()) {
    throw Error(ErrorCode::InvalidSeed, "matrix has " + std::to_string(rows.size()) + " rows, expected " +
                                            std::to_string(ex.size() + fx.size()));
  }
  ExtMatrix m = ExtMatrix::from_rows(rows, ex.size());
  Seed initial = Seed::initial(std::move(ex), std::move(fx), std::move(m));
  validate(initial);
  if (!j.contains("values")) return initial;

  const Json& values = j.at("values");
  if (!values.is_object()) parse_error("\"values\" must be an object");
  auto universe = std::make_shared<Universe>(initial.names());
  VariableResolver resolve = [&universe](std::string_view name) -> std::optional<std::uint32_t> {
    for (std::size_t i = 0; i < universe->size(); ++i)
      if ((*universe)[i] == name) return static_cast<std::uint32_t>(i);
    universe->emplace_back(name);
    return static_cast<std::uint32_t>(universe->size() - 1);
  };
  std::vector<LaurentPoly> vals = initial.values();
  for (const auto& [name, text] : values.items()) {
    auto pos = initial.position(name);
    if (!pos) throw Error(ErrorCode::UnknownVariable, "value given for unknown variable '" + name + "'");
    vals[*pos] = parse_laurent(expression_text(text, "value of " + name), resolve);
  }
  return Seed(initial.names(), initial.exchangeable_count(), initial.matrix(), std::move(vals),
              std::shared_ptr<const Universe>(std::move(universe)));
}

Seed parse_seed(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  return seed_from_json(j);
}

std::string seed_to_json(const Seed& seed) {
  std::ostringstream os;
  auto list = [&os](std::span<const std::string> names) {
    os << '[';
    for (std::size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << Json(names[i]).dump();
    os << ']';
  };
  os << "{\"exchangeable\": ";
  list(seed.exchangeable_names());
  os << ", \"frozen\": ";
  list(seed.frozen_names());
  os << ", \"matrix\": [";
  for (std::size_t r = 0; r < seed.size(); ++r) {
    os << (r ? "," : "") << '[';
    for (std::size_t c = 0; c < seed.exchangeable_count(); ++c) os << (c ? "," : "") << seed.b(r, c);
    os << ']';
  }
  os << ']';
  bool first = true;
  for (std::size_t p = 0; p < seed.size(); ++p) {
    auto idx = seed.universe_index(p);
    if (idx && seed.value(p) == LaurentPoly::variable(*idx)) continue;
    os << (first ? ", \"values\": {" : ", ") << Json(seed.name(p)).dump() << ": "
       << Json(to_string(seed.value(p), seed.universe())).dump();
    first = false;
  }
  if (!first) os << '}';
  os << '}';
  return os.str();
}

Json seed_json_value(const Seed& seed) { return Json::parse(seed_to_json(seed)); }

// ------------------------------------------------------------------ morphisms

MorphismSpec morphism_from_json(const Json& j, const DocumentLoader& load) {
  if (!j.is_object()) parse_error("morphism must be a JSON object");
  auto seed_of = [&](const char* key) {
    if (!j.contains(key)) parse_error(std::string("missing \"") + key + "\"");
    const Json& v = j.at(key);
    if (v.is_string()) {
      if (!load) parse_error(std::string("\"") + key + "\" must be an inline seed here");
      return seed_from_json(load(v.get<std::string>())).as_initial();
    }
    return seed_from_json(v).as_initial();
  };
  const Seed source = seed_of("source");
  const Seed target = seed_of("target");
  if (!j.contains("images") || !j.at("images").is_object()) parse_error("missing \"images\" object");
  std::map<std::string, LaurentPoly> images;
  for (const auto& [name, v] : j.at("images").items()) {
    images[name] = parse_laurent(expression_text(v, "image of " + name), target.names());
  }
  std::vector<std::pair<LaurentPoly, LaurentPoly>> table;
  if (j.contains("generator_table")) {
    const Json& t = j.at("generator_table");
    if (!t.is_object()) parse_error("\"generator_table\" must be an object");
    for (const auto& [key, v] : t.items()) {
      table.emplace_back(parse_laurent(key, source.names()),
                         parse_laurent(expression_text(v, "table entry " + key), target.names()));
    }
  }
  MorphismSpec spec = MorphismSpec::make(source, target, images, std::move(table));
  if (j.contains("explicit")) spec.explicit_flag = j.at("explicit").get<bool>();
  return spec;
}

Json morphism_to_json(const MorphismSpec& spec) {
  Json images = Json::object();
  for (std::size_t p = 0; p < spec.source.size(); ++p) {
    images[spec.source.name(p)] = to_string(spec.images[p], spec.target.universe());
  }
  Json out{{"source", seed_json_value(spec.source)}, {"target", seed_json_value(spec.target)}, {"images", images}};
  if (!spec.generator_table.empty()) {
    Json table = Json::object();
    for (const auto& [k, v] : spec.generator_table) {
      table[to_fraction_string(k, spec.source.universe())] = to_fraction_string(v, spec.target.universe());
    }
    out["generator_table"] = table;
  }
  return out;
}

Json verdict_to_json(const MorphismSpec& spec, const MorphismVerdict& v) {
  auto axiom = [](const AxiomCheck& a) {
    Json j{{"pass", a.pass}};
    if (!a.pass) j["witness"] = a.witness;
    return j;
  };
  Json cm3{{"status", to_string(v.cm3)}, {"checked_depth", v.checked_depth}, {"closed", v.closed},
           {"states", v.states}};
  if (v.witness) {
    const auto& w = *v.witness;
    Json wj{{"sequence", w.sequence},
            {"variable", w.variable},
            {"lhs", to_fraction_string(w.lhs, spec.target.universe())},
            {"rhs", to_fraction_string(w.rhs, spec.target.universe())}};
    if (!w.note.empty()) wj["note"] = w.note;
    cm3["witness"] = wj;
  }
  return Json{{"cm1", axiom(v.cm1)},
              {"cm2", axiom(v.cm2)},
              {"cm3", cm3},
              {"inducible", v.inducible},
              {"is_morphism", v.is_morphism()}};
}

Json ideal_to_json(const MorphismSpec& spec, const IdealVerdict& v) {
  Json j{{"verdict", to_string(v.status)},
         {"reason", v.reason},
         {"source_generators", v.source_generators},
         {"image_generators", v.image_generators}};
  j["fast_path"] = v.fast_path ? Json(*v.fast_path) : Json(nullptr);
  j["witness"] = v.witness ? Json(to_fraction_string(*v.witness, spec.target.universe())) : Json(nullptr);
  return j;
}

Json injection_to_json(const InjectionReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components) {
    comps.push_back(Json{{"source", c.source_component}, {"freezing", c.freezing_component}, {"opposite", c.opposite}});
  }
  return Json{{"ex0", r.ex0},
              {"ex1", r.ex1},
              {"ex2", r.ex2},
              {"fx0", r.fx0},
              {"fx1", r.fx1},
              {"is_section", r.is_section},
              {"freezing", seed_json_value(r.freezing)},
              {"components", comps},
              {"complement", r.complement_components}};
}

Json decomposition_to_json(const SeedDecomposition& d) {
  Json comps = Json::array();
  for (const auto& c : d.components) comps.push_back(seed_json_value(c));
  Json ident = Json::object();
  for (const auto& [name, copies] : d.identification) {
    Json list = Json::array();
    for (const auto& c : copies) list.push_back(copy_json(c));
    ident[name] = list;
  }
  return Json{{"components", comps},
              {"identification", ident},
              {"isolated_frozen", d.isolated_frozen},
              {"residue", seed_json_value(d.residue)}};
}

Json pairs_to_json(const std::vector<ClassEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    Json pairs = Json::array();
    std::vector<std::string> coefficients;
    for (const auto& p : e.pairs) {
      coefficients = p.coefficients;
      pairs.push_back(Json{{"side1", p.side1},
                           {"side2", p.side2},
                           {"seed1", seed_json_value(p.seed1)},
                           {"seed2", seed_json_value(p.seed2)},
                           {"assumes_functorially_finite_core", p.assumes_functorially_finite}});
    }
    out.push_back(Json{{"freezing_set", e.freezing_set},
                       {"coefficients", coefficients},
                       {"count", e.pairs.size()},
                       {"pairs", pairs}});
  }
  return out;
}

Json tensor_to_json(const TensorReport& r) {
  Json gens = Json::array();
  for (const auto& g : r.generators) {
    gens.push_back(Json{{"original", g.original}, {"first", copy_json(g.first)}, {"other", copy_json(g.other)}, {"text", g.text}});
  }
  return Json{{"components", r.components},
              {"ideal_generators", gens},
              {"complete", r.complete},
              {"partition_holds", r.partition_holds},
              {"whole_exchangeable", r.whole_exchangeable},
              {"component_exchangeable", r.component_exchangeable},
              {"frozen", r.frozen}};
}

Json variables_to_json(const Seed& root, const ClusterVariables& vars) {
  Json ex = Json::array();
  Json ex_display = Json::array();
  for (const auto& v : vars.exchangeable) {
    ex.push_back(to_string(v, root.universe()));
    ex_display.push_back(to_fraction_string(v, root.universe()));
  }
  Json fx = Json::array();
  for (const auto& v : vars.frozen) fx.push_back(to_string(v, root.universe()));
  return Json{{"complete", vars.complete},
              {"exchangeable", ex},
              {"exchangeable_display", ex_display},
              {"frozen", fx}};
}

Json exchange_graph_to_json(const MutationClass& cls) {
  Json seeds = Json::array();
  for (const auto& s : cls.seeds) {
    Json cluster = Json::array();
    for (std::size_t p = 0; p < s.exchangeable_count(); ++p) {
      cluster.push_back(to_fraction_string(s.value(p), s.universe()));
    }
    seeds.push_back(Json{{"cluster", cluster}, {"seed", seed_json_value(s)}});
  }
  Json edges = Json::array();
  for (const auto& e : cls.edges) edges.push_back(Json{{"from", e.from}, {"variable", e.variable}, {"to", e.to}});
  return Json{{"complete", cls.complete},
              {"depth", cls.depth_reached},
              {"root", cls.root_index},
              {"seeds", seeds},
              {"edges", edges}};
}

Json quiver_to_json(const IceQuiver& q) {
  Json j = seed_json_value(quiver_seed(q));
  Json d = Json::object();
  for (std::size_t i = 0; i < q.exchangeable().size(); ++i) d[q.exchangeable()[i]] = q.symmetrizer()[i];
  Json arrows = Json::array();
  for (const auto& a : q.principal_arrows()) {
    arrows.push_back(Json{{"source", a.source}, {"target", a.target}, {"valuation", {a.v1, a.v2}}});
  }
  for (const auto& a : q.frozen_arrows()) {
    arrows.push_back(Json{{"source", a.source}, {"target", a.target}, {"multiplicity", a.multiplicity}});
  }
  j["symmetrizer"] = d;
  j["arrows"] = arrows;
  return j;
}

}  // namespace clusterkit
