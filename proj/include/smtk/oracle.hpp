#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "smtk/integer_lattice.hpp"
#include "smtk/presentation.hpp"
#include "smtk/rewriting.hpp"
#include "smtk/words.hpp"

namespace smtk {

// Three-valued answer. NotEqual is only produced with a sound refutation and
// Unknown carries a report of the budget that ran out.
class Verdict {
 public:
  enum class Kind { Equal, NotEqual, Unknown };

  static Verdict equal(std::string detail = {}) { return {Kind::Equal, std::move(detail)}; }
  static Verdict not_equal(std::string witness) { return {Kind::NotEqual, std::move(witness)}; }
  static Verdict unknown(std::string report) { return {Kind::Unknown, std::move(report)}; }

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }
  [[nodiscard]] bool is_equal() const noexcept { return kind_ == Kind::Equal; }
  [[nodiscard]] bool is_not_equal() const noexcept { return kind_ == Kind::NotEqual; }
  [[nodiscard]] bool is_unknown() const noexcept { return kind_ == Kind::Unknown; }

  friend bool operator==(const Verdict& a, const Verdict& b) { return a.kind_ == b.kind_; }

 private:
  Verdict(Kind k, std::string d) : kind_(k), detail_(std::move(d)) {}
  Kind kind_;
  std::string detail_;
};

[[nodiscard]] const char* to_string(Verdict::Kind k) noexcept;

// Conjunction in three-valued logic: NotEqual dominates, then Unknown.
[[nodiscard]] Verdict both(const Verdict& a, const Verdict& b);

struct OracleConfig {
  CompletionLimits completion;
  // Total number of elementary steps the two search frontiers may take.
  std::size_t search_radius = 10;
  // Cap on intermediate word length during search; 0 means 4 x max relator length.
  std::size_t max_word_len = 0;
  std::size_t max_search_states = 200000;
  bool record_traces = false;

  // Multiplies every budget by `factor`, rounding to the nearest integer.
  [[nodiscard]] OracleConfig scaled(double factor) const;
};

// A chain of words in which neighbours differ by one application of a
// relator (w = 1, either direction) or of a rule of the session's system.
struct Derivation {
  std::vector<Word> words;
};

// Semi-decides equality in M = <A | w_1 = 1, ...> for one frozen
// presentation. Queries are logically pure; the memo caches are guarded by
// a mutex so concurrent callers see identical answers.
class Oracle {
 public:
  explicit Oracle(SpecialPresentation pres, OracleConfig config = {});

  Oracle(const Oracle&) = delete;
  Oracle& operator=(const Oracle&) = delete;

  [[nodiscard]] const SpecialPresentation& presentation() const noexcept { return pres_; }
  [[nodiscard]] const OracleConfig& config() const noexcept { return config_; }
  [[nodiscard]] const CompletionOutcome& completion() const noexcept { return completion_; }
  // True when completion produced a confluent system, making normal forms canonical.
  [[nodiscard]] bool complete() const noexcept { return completion_.completed(); }

  // Irreducible form under the (possibly partial) completed system.
  [[nodiscard]] Word normal_form(const Word& w) const;

  [[nodiscard]] Verdict decide_equal(const Word& u, const Word& v) const;
  [[nodiscard]] Verdict is_identity(const Word& w) const { return decide_equal(w, Word{}); }

  // Recorded only when config.record_traces is set and the verdict was Equal.
  [[nodiscard]] std::optional<Derivation> derivation(const Word& u, const Word& v) const;
  [[nodiscard]] bool verify_derivation(const Derivation& d) const;

  // Letter counts reduced modulo the lattice spanned by the relator counts.
  [[nodiscard]] IntVector abelianization_vector(const Word& w) const;

  [[nodiscard]] std::size_t max_word_len() const noexcept { return max_word_len_; }

 private:
  struct SearchResult {
    bool met = false;
    std::size_t states = 0;
    Derivation path;
  };
  [[nodiscard]] Verdict decide_uncached(const Word& u, const Word& v, Derivation* trace) const;
  [[nodiscard]] SearchResult bidirectional_search(const Word& u, const Word& v) const;
  [[nodiscard]] std::vector<Word> neighbours(const Word& w) const;

  SpecialPresentation pres_;
  OracleConfig config_;
  CompletionOutcome completion_;
  IntegerLattice relator_lattice_;
  std::size_t max_word_len_;

  mutable std::mutex mutex_;
  mutable std::unordered_map<Word, Word> nf_cache_;
  mutable std::unordered_map<std::pair<Word, Word>, Verdict> verdict_cache_;
  mutable std::unordered_map<std::pair<Word, Word>, Derivation> traces_;
};

}  // namespace smtk
