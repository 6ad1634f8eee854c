#ifndef INDGEN_SEMANTICS_HPP
#define INDGEN_SEMANTICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "indgen/ast.hpp"
#include "indgen/generator.hpp"

namespace indgen {

// Finite carriers instantiating the type parameters of a declaration.
struct GroundEnv {
  std::map<Identifier, std::vector<std::string>> carriers;

  // Carrier of `per_param` atoms for every parameter: a -> {a1, a2, ...}.
  static GroundEnv uniform(const DataDecl& decl, std::size_t per_param);
};

struct GroundTerm {
  enum class Kind { kAtom, kNode, kBottom };

  static GroundTerm atom(std::string label, Identifier param);
  static GroundTerm node(Identifier ctor, std::vector<GroundTerm> children = {});
  static GroundTerm bottom();

  Kind kind = Kind::kBottom;
  std::string name;  // atom label or constructor name
  Identifier param;  // atoms only
  std::vector<GroundTerm> children;

  // Atoms and ⊥ have depth 1; a node is one deeper than its deepest child.
  std::size_t depth() const;
  std::string str() const;

  bool operator==(const GroundTerm&) const = default;
};

class OracleError : public std::runtime_error {
 public:
  enum class Kind { kUnsupportedType, kExhaustiveRefused, kTooLarge, kMalformed };
  OracleError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline constexpr std::size_t kExhaustiveLimit = 20;
inline constexpr std::uint64_t kDefaultSeed = 271828;

// All ground terms of the declared type with depth <= depth_bound, ordered by
// depth, then constructor order (⊥ first), then children. In pointed mode ⊥
// is an extra nullary constructor. When recursive occurrences permute the
// type arguments (SwapTree), the terms of every reachable instantiation are
// included. Throws OracleError(kUnsupportedType) for argument types other
// than parameters and recursive applications to parameters.
std::vector<GroundTerm> enumerate_terms(const DataDecl& decl,
                                        const GroundEnv& env,
                                        std::size_t depth_bound, bool pointed);

// Children of the declared type (atoms are excluded).
std::vector<GroundTerm> immediate_subterms(const GroundTerm& t);

struct CheckMode {
  enum class Kind { kExhaustive, kSampled };
  static CheckMode exhaustive() { return {Kind::kExhaustive, 0, 0}; }
  static CheckMode sampled(std::size_t count, std::uint64_t seed = kDefaultSeed) {
    return {Kind::kSampled, count, seed};
  }

  Kind kind;
  std::size_t count;
  std::uint64_t seed;

  bool operator==(const CheckMode&) const = default;
};

struct Counterexample {
  std::vector<GroundTerm> predicate;  // the terms P holds for
  GroundTerm failing;                 // a term of the universe outside P

  bool operator==(const Counterexample&) const = default;
};

struct SoundnessReport {
  Identifier decl_name;
  std::size_t universe_size = 0;
  std::size_t predicates_checked = 0;
  CheckMode mode = CheckMode::exhaustive();
  std::optional<Counterexample> counterexample;

  bool passed() const { return !counterexample.has_value(); }
  // "Nat: pass (universe 3, exhaustive 8 predicates)"
  std::string summary() const;

  bool operator==(const SoundnessReport&) const = default;
};

// Evaluates the principle relativized to the enumerated universe U for each
// predicate P ⊆ U. A clause instance is considered only when every term it
// constructs lies in U. Records the first predicate that satisfies the
// antecedent but not the conclusion.
SoundnessReport check_principle(const Principle& principle, const GroundEnv& env,
                                std::size_t depth_bound, const CheckMode& mode);

// check_principle on the generator's output.
SoundnessReport check_soundness(const DataDecl& decl, const GenOptions& opts,
                                const GroundEnv& env, std::size_t depth_bound,
                                const CheckMode& mode);

}  // namespace indgen

#endif  // INDGEN_SEMANTICS_HPP
