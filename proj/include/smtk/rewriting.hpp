#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "smtk/presentation.hpp"
#include "smtk/words.hpp"

namespace smtk {

struct Rule {
  Word lhs;
  Word rhs;
  friend bool operator==(const Rule&, const Rule&) = default;
};

// A finite string rewriting system whose rules are oriented by short-lex
// (rhs < lhs), hence terminating.
class RewriteSystem {
 public:
  RewriteSystem() = default;
  explicit RewriteSystem(std::vector<Rule> rules);

  // Throws std::invalid_argument unless rhs <_s lhs.
  void add(Rule rule);

  [[nodiscard]] const std::vector<Rule>& rules() const noexcept { return rules_; }
  [[nodiscard]] std::size_t size() const noexcept { return rules_.size(); }
  [[nodiscard]] bool empty() const noexcept { return rules_.empty(); }

  // Leftmost-innermost normalisation: the word is read left to right and the
  // earliest-ending redex is contracted first, ties broken by rule order.
  [[nodiscard]] Word reduce(const Word& w) const;
  [[nodiscard]] bool is_irreducible(const Word& w) const;

  // The successive words visited by reduce(w), w first and reduce(w) last.
  [[nodiscard]] std::vector<Word> reduction_trace(const Word& w) const;

 private:
  void reindex();

  std::vector<Rule> rules_;
  std::vector<std::vector<std::size_t>> by_last_;
};

[[nodiscard]] inline Word reduce_with(const RewriteSystem& system, const Word& w) {
  return system.reduce(w);
}

// All overlap and containment critical pairs, unreduced: each pair holds the
// two one-step results of rewriting the overlap word.
[[nodiscard]] std::vector<std::pair<Word, Word>> critical_pairs(const RewriteSystem& system);

struct CompletionLimits {
  std::size_t max_rules = 4000;
  std::size_t max_rule_length = 64;
  std::size_t max_iterations = 64;
};

enum class CompletionStatus { Completed, TimedOut };

struct CompletionStats {
  std::size_t rule_count = 0;
  std::size_t critical_pairs_processed = 0;
  std::size_t iterations = 0;
};

struct CompletionOutcome {
  CompletionStatus status = CompletionStatus::TimedOut;
  RewriteSystem system;
  CompletionStats stats;
  std::string reason;

  [[nodiscard]] bool completed() const noexcept { return status == CompletionStatus::Completed; }
};

// Short-lex Knuth-Bendix completion. Each relation is oriented by short-lex
// and critical pairs are resolved pass by pass until a pass adds nothing.
// A pass counts as one iteration; exhausting any limit yields TimedOut with
// the partial (still sound) system.
[[nodiscard]] CompletionOutcome knuth_bendix(const std::vector<Relation>& relations,
                                             const CompletionLimits& limits);
[[nodiscard]] CompletionOutcome knuth_bendix(const SpecialPresentation& pres,
                                             const CompletionLimits& limits);

}  // namespace smtk
