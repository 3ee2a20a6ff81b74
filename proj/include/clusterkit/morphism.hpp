#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clusterkit/membership.hpp"
#include "clusterkit/mutation_class.hpp"
#include "clusterkit/seed.hpp"

namespace clusterkit {

/// A candidate rooted cluster morphism. Source and target are taken as
/// initial seeds. Images are written over the target's names; table keys over
/// the source's names.
struct MorphismSpec {
  Seed source;
  Seed target;
  /// One entry per source position: an integer or a target variable.
  std::vector<LaurentPoly> images;
  /// Images of further source cluster variables, for maps that do not lift
  /// to the ambient Laurent rings.
  std::vector<std::pair<LaurentPoly, LaurentPoly>> generator_table;
  /// User assertion only; never decided.
  bool explicit_flag = false;

  /// Builds a spec from images keyed by source variable name. Throws
  /// MissingImage if a source variable has no image.
  static MorphismSpec make(const Seed& source, const Seed& target,
                           const std::map<std::string, LaurentPoly>& images,
                           std::vector<std::pair<LaurentPoly, LaurentPoly>> generator_table = {});

  /// Identity on a seed.
  static MorphismSpec identity(const Seed& seed);

  /// No exchangeable variable is sent to 0.
  bool inducible() const;
  /// Target position of the image of source position `pos`, if it is a
  /// variable.
  std::optional<std::size_t> image_position(std::size_t pos) const;
  /// Image of a source cluster variable: table lookup, else substitution.
  /// Throws MissingImage when neither applies.
  LaurentPoly apply(const LaurentPoly& source_value) const;
};

struct AxiomCheck {
  bool pass = true;
  std::string witness;
};

enum class Cm3Status { Pass, Fail, Exhausted };
std::string to_string(Cm3Status s);

struct Cm3Failure {
  std::vector<std::string> sequence;  // source positions
  std::string variable;               // source position y
  LaurentPoly lhs;                    // f(mu(y)), over the target's names
  LaurentPoly rhs;                    // mu'(f(y))
  /// Set when the left side could not be formed inside the Laurent ring.
  std::string note;
};

struct MorphismVerdict {
  AxiomCheck cm1;
  AxiomCheck cm2;
  Cm3Status cm3 = Cm3Status::Pass;
  std::optional<Cm3Failure> witness;
  bool inducible = true;
  std::size_t checked_depth = 0;
  /// Every biadmissible sequence of every length was covered.
  bool closed = false;
  std::size_t states = 0;

  bool is_morphism() const { return cm1.pass && cm2.pass && cm3 == Cm3Status::Pass; }
};

struct CheckOptions {
  /// 0 selects the number of source exchangeable variables plus two.
  std::size_t depth = 0;
  std::size_t max_states = 200000;
  bool parallel = true;
};

MorphismVerdict check_morphism(const MorphismSpec& spec, const CheckOptions& options = {});

/// Recomputes both sides of a reported failure from the initial seeds.
std::pair<LaurentPoly, LaurentPoly> replay_cm3_failure(const MorphismSpec& spec,
                                                       const Cm3Failure& failure);

/// Subseed of the target on the image variables: exchangeable part is the
/// target exchangeable variables hit by source exchangeable ones, everything
/// else hit becomes frozen. Positions keep target order.
Seed image_seed(const MorphismSpec& spec);

enum class IdealStatus { Ideal, NotIdeal, Unknown };
std::string to_string(IdealStatus s);

struct IdealVerdict {
  IdealStatus status = IdealStatus::Unknown;
  /// "a", "b" or "c" when a sufficient condition decided the verdict.
  std::optional<std::string> fast_path;
  std::optional<LaurentPoly> witness;  // over the target's names
  std::string reason;
  std::size_t source_generators = 0;
  std::size_t image_generators = 0;
};

struct IdealOptions {
  EnumerationLimits limits;
  MembershipOptions membership;
};

IdealVerdict ideal_check(const MorphismSpec& spec, const IdealOptions& options = {});

struct ComponentMatch {
  std::size_t source_component = 0;
  std::size_t freezing_component = 0;
  bool opposite = false;
};

struct InjectionReport {
  std::vector<std::string> ex0, ex1, ex2, fx0, fx1;  // target names
  Seed freezing;  // target frozen at ex2
  std::vector<ComponentMatch> components;
  /// Components of the freezing not hit by the source.
  std::vector<std::size_t> complement_components;
  bool is_section = false;
};

InjectionReport analyze_injection(const MorphismSpec& spec);

struct Factorization {
  MorphismSpec surjection;  // source -> image seed
  MorphismSpec injection;   // image seed -> target
};

/// Requires ideal_check to report ideal; throws NotIdeal otherwise.
Factorization factorize_ideal(const MorphismSpec& spec, const IdealOptions& options = {});

/// Map to the subseed on the kept variables sending each dropped variable to
/// its integer.
MorphismSpec specialize(const Seed& seed, const std::map<std::string, Integer>& drop);

struct TensorGenerator {
  std::string original;
  FrozenCopy first;
  FrozenCopy other;
  std::string text;
};

struct TensorReport {
  std::size_t components = 0;
  std::vector<TensorGenerator> generators;
  bool complete = false;
  bool partition_holds = false;
  std::size_t whole_exchangeable = 0;
  std::size_t component_exchangeable = 0;
  std::size_t frozen = 0;
};

TensorReport tensor_decomposition_report(const Seed& seed, const EnumerationLimits& limits = {});

}  // namespace clusterkit
