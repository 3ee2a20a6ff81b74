#include "clusterkit/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "clusterkit/error.hpp"
#include "clusterkit/json_io.hpp"
#include "clusterkit/morphism.hpp"
#include "clusterkit/mutation_class.hpp"
#include "clusterkit/pairs.hpp"
#include "clusterkit/quiver.hpp"
#include "clusterkit/service.hpp"

namespace clusterkit {

namespace {

namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

// Raised for problems with the invocation itself rather than the math.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

class Inputs {
 public:
  explicit Inputs(std::istream& in) : in_(in) {}

  std::string text(const std::string& path) {
    if (path.empty() || path == "-") {
      if (stdin_used_) throw UsageError("standard input can only be read once");
      stdin_used_ = true;
      return std::string(std::istreambuf_iterator<char>(in_), {});
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read " + path);
    return std::string(std::istreambuf_iterator<char>(f), {});
  }

  Json json(const std::string& path) {
    try {
      return Json::parse(text(path));
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::ParseError, (path.empty() ? std::string("<stdin>") : path) + ": " + e.what());
    }
  }

  Seed seed(const std::string& path) {
    Seed s = seed_from_json(json(path));
    validate(s);
    return s;
  }

  MorphismSpec morphism(const std::string& path) {
    const fs::path base = (path.empty() || path == "-") ? fs::current_path() : fs::path(path).parent_path();
    DocumentLoader load = [this, base](const std::string& rel) {
      fs::path p(rel);
      if (p.is_relative()) p = base / p;
      return json(p.string());
    };
    MorphismSpec spec = morphism_from_json(json(path), load);
    validate(spec.source);
    validate(spec.target);
    return spec;
  }

 private:
  std::istream& in_;
  bool stdin_used_ = false;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw UsageError("cannot write " + p.string());
  f << text;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotInjective:
    case ErrorCode::NotComponentEmbedding:
    case ErrorCode::NotIdeal:
      return kNegative;
    default:
      return kUsage;
  }
}

bool wants_dot(bool dot, const std::string& format) {
  if (format != "json" && format != "dot") throw UsageError("--format must be json or dot");
  return dot || format == "dot";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with rooted cluster algebras", "clusterkit"};
  app.require_subcommand(1);
  app.allow_extras(false);

  std::string input;
  std::string input2;
  std::string format = "json";
  bool dot = false;
  std::string at;
  std::vector<std::string> seq;
  std::vector<std::string> names;
  std::vector<std::string> pairs;
  std::vector<std::string> drops;
  std::size_t max_depth = 0;
  std::size_t max_seeds = 0;
  std::size_t depth = 0;
  std::size_t max_states = 0;
  std::size_t degree_bound = 0;
  std::string out_dir;
  bool all = false;
  bool force = false;
  int port = 8080;
  std::string host = "127.0.0.1";

  auto input_arg = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", input, std::string(what) + " file (default: standard input)");
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check a seed and print its symmetrizer");
  input_arg(validate_cmd, "seed");

  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate a seed");
  input_arg(mutate_cmd, "seed");
  auto* at_opt = mutate_cmd->add_option("--at", at, "variable to mutate");
  auto* seq_opt = mutate_cmd->add_option("--seq", seq, "comma-separated mutation sequence")->delimiter(',')->allow_extra_args(false);
  at_opt->excludes(seq_opt);

  auto* variables_cmd = app.add_subcommand("variables", "Enumerate cluster variables");
  input_arg(variables_cmd, "seed");
  variables_cmd->add_option("--max-depth", max_depth, "breadth-first depth limit");
  variables_cmd->add_option("--max-seeds", max_seeds, "seed budget");

  auto* graph_cmd = app.add_subcommand("exchange-graph", "Enumerate the exchange graph");
  input_arg(graph_cmd, "seed");
  graph_cmd->add_flag("--dot", dot, "DOT output");
  graph_cmd->add_option("--format", format, "json or dot");
  graph_cmd->add_option("--max-depth", max_depth, "breadth-first depth limit");
  graph_cmd->add_option("--max-seeds", max_seeds, "seed budget");

  auto* decompose_cmd = app.add_subcommand("decompose", "Split a seed into indecomposable components");
  input_arg(decompose_cmd, "seed");
  decompose_cmd->add_option("--out-dir", out_dir, "write one file per component plus identification.json");

  auto* glue_cmd = app.add_subcommand("glue", "Glue two seeds along frozen variables");
  glue_cmd->add_option("first", input, "first seed file")->required();
  glue_cmd->add_option("second", input2, "second seed file")->required();
  glue_cmd->add_option("--pair", pairs, "a:b identifies frozen b of the second with frozen a of the first")
      ->allow_extra_args(false);

  auto* freeze_cmd = app.add_subcommand("freeze", "Freeze exchangeable variables");
  input_arg(freeze_cmd, "seed");
  freeze_cmd->add_option("--at", names, "variables to freeze")->required()->delimiter(',')->allow_extra_args(false);

  auto* specialize_cmd = app.add_subcommand("specialize", "Send variables to integers");
  input_arg(specialize_cmd, "seed");
  specialize_cmd->add_option("--drop", drops, "var=int")->required()->allow_extra_args(false);

  auto* quiver_cmd = app.add_subcommand("quiver", "Ice valued quiver of a seed");
  input_arg(quiver_cmd, "seed");
  quiver_cmd->add_flag("--dot", dot, "DOT output");
  quiver_cmd->add_option("--format", format, "json or dot");

  auto* check_cmd = app.add_subcommand("check-morphism", "Check the morphism axioms");
  input_arg(check_cmd, "morphism");
  check_cmd->add_option("--depth", depth, "longest mutation sequence to test");
  check_cmd->add_option("--max-states", max_states, "state budget");

  auto* image_cmd = app.add_subcommand("image-seed", "Image seed of a morphism");
  input_arg(image_cmd, "morphism");

  auto* ideal_cmd = app.add_subcommand("ideal-check", "Decide whether a morphism is ideal");
  input_arg(ideal_cmd, "morphism");
  ideal_cmd->add_option("--depth", depth, "enumeration depth limit");
  ideal_cmd->add_option("--max-seeds", max_seeds, "seed budget");
  ideal_cmd->add_option("--degree-bound", degree_bound, "membership degree bound");

  auto* injection_cmd = app.add_subcommand("analyze-injection", "Partition data of an injective morphism");
  input_arg(injection_cmd, "morphism");

  auto* factor_cmd = app.add_subcommand("factorize", "Split an ideal morphism through its image seed");
  input_arg(factor_cmd, "morphism");

  auto* pairs_cmd = app.add_subcommand("complete-pairs", "Enumerate complete pairs");
  input_arg(pairs_cmd, "seed");
  auto* freeze_opt = pairs_cmd->add_option("--freeze", names, "freezing set")->delimiter(',')->allow_extra_args(false);
  auto* all_opt = pairs_cmd->add_flag("--all", all, "every freezing set");
  pairs_cmd->add_flag("--force", force, "lift the subset budget");
  freeze_opt->excludes(all_opt);

  auto* tensor_cmd = app.add_subcommand("tensor-report", "Tensor decomposition report");
  input_arg(tensor_cmd, "seed");
  tensor_cmd->add_option("--max-seeds", max_seeds, "seed budget");

  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  serve_cmd->add_option("--port", port, "port (0 picks one)");
  serve_cmd->add_option("--host", host, "bind address");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kUsage;
  }

  auto limits = [&] {
    EnumerationLimits l = EnumerationLimits::from_environment();
    if (max_depth) l.max_depth = max_depth;
    if (max_seeds) l.max_seeds = max_seeds;
    return l;
  };

  Inputs files(in);
  try {
    if (*validate_cmd) {
      const Seed s = files.seed(input);
      Json d = Json::object();
      const Symmetrizer sym = validate(s);
      for (std::size_t i = 0; i < s.exchangeable_count(); ++i) d[s.name(i)] = sym[i];
      emit(out, Json{{"valid", true},
                     {"exchangeable", s.exchangeable_count()},
                     {"frozen", s.frozen_count()},
                     {"symmetrizer", d}});
      return kOk;
    }
    if (*mutate_cmd) {
      if (at.empty() && seq.empty()) throw UsageError("mutate needs --at or --seq");
      const Seed s = files.seed(input);
      const Seed r = at.empty() ? apply_sequence(s, seq) : mutate(s, at);
      out << seed_to_json(r) << "\n";
      return kOk;
    }
    if (*variables_cmd) {
      const Seed s = files.seed(input);
      const MutationClass cls = enumerate_class(s, limits());
      emit(out, variables_to_json(s, cluster_variables(cls)));
      return kOk;
    }
    if (*graph_cmd) {
      const bool as_dot = wants_dot(dot, format);
      const MutationClass cls = enumerate_class(files.seed(input), limits());
      if (as_dot) {
        out << exchange_graph_dot(cls);
      } else {
        emit(out, exchange_graph_to_json(cls));
      }
      return kOk;
    }
    if (*decompose_cmd) {
      const SeedDecomposition d = decompose_seed(files.seed(input).as_initial());
      const Json j = decomposition_to_json(d);
      if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        for (std::size_t i = 0; i < d.components.size(); ++i) {
          write_file(fs::path(out_dir) / ("component_" + std::to_string(i + 1) + ".json"),
                     seed_to_json(d.components[i]) + "\n");
        }
        write_file(fs::path(out_dir) / "identification.json",
                   Json{{"identification", j.at("identification")}, {"isolated_frozen", j.at("isolated_frozen")}}.dump(2) +
                       "\n");
      }
      emit(out, j);
      return kOk;
    }
    if (*glue_cmd) {
      const Seed a = files.seed(input);
      const Seed b = files.seed(input2);
      FrozenPairing pairing;
      for (const auto& p : pairs) {
        const auto colon = p.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == p.size()) {
          throw UsageError("--pair expects a:b, got " + p);
        }
        pairing.emplace_back(p.substr(0, colon), p.substr(colon + 1));
      }
      out << seed_to_json(glue_seeds(a, b, pairing)) << "\n";
      return kOk;
    }
    if (*freeze_cmd) {
      out << seed_to_json(freeze(files.seed(input), names)) << "\n";
      return kOk;
    }
    if (*specialize_cmd) {
      std::map<std::string, Integer> drop;
      for (const auto& d : drops) {
        const auto eq = d.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--drop expects var=int, got " + d);
        try {
          drop[d.substr(0, eq)] = Integer(d.substr(eq + 1));
        } catch (const std::exception&) {
          throw UsageError("--drop expects an integer value, got " + d);
        }
      }
      const MorphismSpec spec = specialize(files.seed(input), drop);
      emit(out, morphism_to_json(spec));
      return kOk;
    }
    if (*quiver_cmd) {
      const bool as_dot = wants_dot(dot, format);
      const IceQuiver q = seed_quiver(files.seed(input));
      if (as_dot) {
        out << to_dot(q);
      } else {
        emit(out, quiver_to_json(q));
      }
      return kOk;
    }
    if (*check_cmd) {
      const MorphismSpec spec = files.morphism(input);
      CheckOptions opts;
      opts.depth = depth;
      if (max_states) opts.max_states = max_states;
      const MorphismVerdict v = check_morphism(spec, opts);
      emit(out, verdict_to_json(spec, v));
      return v.is_morphism() ? kOk : kNegative;
    }
    if (*image_cmd) {
      out << seed_to_json(image_seed(files.morphism(input))) << "\n";
      return kOk;
    }
    if (*ideal_cmd) {
      const MorphismSpec spec = files.morphism(input);
      IdealOptions opts;
      if (depth) max_depth = depth;
      opts.limits = limits();
      opts.membership.degree_bound = degree_bound;
      const IdealVerdict v = ideal_check(spec, opts);
      emit(out, ideal_to_json(spec, v));
      return v.status == IdealStatus::Ideal ? kOk : kNegative;
    }
    if (*injection_cmd) {
      emit(out, injection_to_json(analyze_injection(files.morphism(input))));
      return kOk;
    }
    if (*factor_cmd) {
      const Factorization f = factorize_ideal(files.morphism(input));
      emit(out, Json{{"surjection", morphism_to_json(f.surjection)}, {"injection", morphism_to_json(f.injection)}});
      return kOk;
    }
    if (*pairs_cmd) {
      const Seed s = files.seed(input);
      ClassifyOptions opts;
      opts.force = force;
      if (!all) opts.freezings.push_back(names);
      emit(out, pairs_to_json(classify_cotorsion_pairs(s, opts)));
      return kOk;
    }
    if (*tensor_cmd) {
      const TensorReport r = tensor_decomposition_report(files.seed(input), limits());
      emit(out, tensor_to_json(r));
      return r.complete && !r.partition_holds ? kNegative : kOk;
    }
    if (*serve_cmd) {
      if (port < 0 || port > 65535) throw UsageError("--port out of range");
      Service service;
      return serve_http(service, host, port, err) ? kOk : kUsage;
    }
  } catch (const UsageError& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << one_line(e.detail()) << "\n";
    return exit_for(e.code());
  } catch (const Json::exception& e) {
    err << "error: ParseError: " << one_line(e.what()) << "\n";
    return kUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kUsage;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace clusterkit
