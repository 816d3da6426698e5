#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "smtk/bicayley.hpp"
#include "smtk/biset.hpp"
#include "smtk/special.hpp"

namespace smtk {

// A finiteness level or dimension: a natural number or infinity.
struct Level {
  bool infinite = false;
  std::size_t n = 0;

  static Level inf() { return {true, 0}; }
  static Level of(std::size_t n) { return {false, n}; }
  [[nodiscard]] std::string str() const { return infinite ? "∞" : std::to_string(n); }
  [[nodiscard]] std::string json() const { return infinite ? "inf" : std::to_string(n); }
  friend bool operator==(const Level&, const Level&) = default;
};

[[nodiscard]] Level max(Level a, Level b);

struct GroupAssumption {
  enum class Kind { Trivial, Finite, Free, Asserted, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<Level> fp;  // G is of type FP_n
  std::optional<Level> cd;  // cohomological dimension of G
  std::string description;
};

[[nodiscard]] const char* to_string(GroupAssumption::Kind k) noexcept;

// "fp=inf cd=2"; either key may be omitted. Throws SyntaxError.
[[nodiscard]] GroupAssumption parse_assumption(const std::string& text);

// Recognises trivial, finite and free unit groups by completing the units
// presentation as a group presentation; anything else is Unknown.
[[nodiscard]] GroupAssumption derive_group_assumption(const UnitAnalyzer& units, std::size_t max_order = 100000);

struct FinitenessReport {
  GroupAssumption assumption;
  std::optional<Level> bi_fp;
  std::optional<Level> hochschild_lower;
  std::optional<Level> hochschild_upper;
  std::vector<std::string> caveats;
};

[[nodiscard]] FinitenessReport theorem_a_report(const GroupAssumption& g);

struct OneRelatorReport {
  Word relator;
  bool proper_power = false;
  Word root;
  std::size_t exponent = 1;
  Level bi_fp = Level::inf();
  Level hochschild_lower = Level::of(0);
  Level hochschild_upper = Level::of(2);
};

// Throws NotOneRelator.
[[nodiscard]] OneRelatorReport theorem_b_classify(const SpecialPresentation& pres);

// Shortest p with w = p^k; k = 1 when w is primitive.
[[nodiscard]] std::pair<Word, std::size_t> primitive_root(const Word& w);

struct Compressibility {
  bool compressible = false;
  Word r;  // longest common border of u and v
};

// Throws std::invalid_argument unless u, v are nonempty and distinct.
[[nodiscard]] Compressibility compressibility(const Word& u, const Word& v);

struct ResolutionSummary {
  std::vector<Word> delta;
  std::size_t letter_basis_size = 0;
  std::size_t edge_basis_size = 0;
  std::size_t x_size = 0;
  std::size_t y_size = 0;
  std::vector<EdgeBasisElement> edge_basis;
  UnitsPresentation units;
  GroupAssumption group;
  FinitenessReport finiteness;
  std::optional<OneRelatorReport> one_relator;
};

[[nodiscard]] ResolutionSummary resolution_summary(const Biset& n, const BiCayley& g,
                                                   std::optional<GroupAssumption> assumed = std::nullopt);

struct ExactnessReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::size_t boundary_rank = 0;
  bool injective = false;  // boundary rank equals the number of edges
  bool exact = false;      // edges = vertices - components

  [[nodiscard]] bool passed() const noexcept { return injective && exact; }
};

// Throws NotAForest.
[[nodiscard]] ExactnessReport exactness_spotcheck(const QuotientForest& q);

// {delta, x_size, c_size, classification: {bi_fp, hochschild: {lower, upper}}}
[[nodiscard]] nlohmann::ordered_json summary_json(const ResolutionSummary& s, const Alphabet& a);
[[nodiscard]] nlohmann::ordered_json classification_json(std::optional<Level> bi_fp, std::optional<Level> lower,
                                                         std::optional<Level> upper);

}  // namespace smtk
