#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "smtk/oracle.hpp"
#include "smtk/words.hpp"

namespace smtk {

struct InvertibilityVerdict {
  Verdict right = Verdict::unknown("not computed");
  Verdict left = Verdict::unknown("not computed");
  Verdict invertible = Verdict::unknown("not computed");
  std::optional<Word> witness_right;  // v with w v = 1
  std::optional<Word> witness_left;   // v with v w = 1
};

// The finite set Delta of minimal invertible words together with their
// reduced inverses and the piece factorisation of every relator.
struct DeltaTable {
  std::vector<Word> delta;  // relator pieces in order of appearance, then the rest in short-lex
  std::map<Word, Word, ShortlexLess> inverse;
  std::vector<std::vector<Span>> pieces;  // per relator, spans of w_i
  bool partial = false;
  std::string detail;
  std::size_t candidates_examined = 0;

  [[nodiscard]] bool contains(const Word& w) const { return inverse.contains(w); }
  [[nodiscard]] std::size_t index_of(const Word& w) const;
  [[nodiscard]] std::vector<Word> piece_words(std::size_t relator, const Word& w) const;
  // Throws PartialDelta when the table is partial.
  void require_complete() const;
};

// u_0 a_1 u_1 ... a_m u_m with the u_i maximal invertible subwords.
struct OttoZhangForm {
  std::vector<Word> parts;      // m + 1 entries
  std::vector<Letter> letters;  // m entries
  std::vector<Span> part_spans;

  [[nodiscard]] std::size_t m() const noexcept { return letters.size(); }
  [[nodiscard]] Word concat() const;
  // Index of the block (0..m) owning position `pos`, or npos when pos is a separator.
  [[nodiscard]] std::size_t part_containing(std::size_t pos) const;
  // Number of separator letters strictly before `pos`.
  [[nodiscard]] std::size_t separators_before(std::size_t pos) const;
};

// Invertible subwords of an ambient word that contain a fixed anchor,
// ordered by inclusion.
struct CutLattice {
  Word ambient;
  Span anchor;
  std::vector<Span> elements;  // sorted by length, then start
  Span bottom;
  Span top;
  std::size_t height = 0;  // edges in the longest chain

  // Intersections and unions of crossing pairs are elements again.
  [[nodiscard]] bool closed_under_meet_and_join() const;
};

struct UnitsPresentation {
  std::vector<Word> generators;                  // the Delta words as symbols
  std::vector<std::vector<std::size_t>> relations;  // each relator as a piece sequence
  std::vector<std::pair<std::size_t, std::size_t>> identifications;  // equal in M
};

struct UnitLimits {
  // Cap on |v| when searching for an inverse witness without Delta; 0 means
  // 2 x max relator length.
  std::size_t witness_cap = 0;
  std::size_t max_witness_states = 100000;
  std::size_t max_delta_candidates = 5'000'000;
  std::size_t max_delta_star_words = 200'000;
};

// Computes Delta from the presentation: greedy piece factorisation of every
// relator, then exhaustive enumeration of A^{<=L} for indecomposable words
// equal to some piece.
[[nodiscard]] DeltaTable compute_delta(const Oracle& oracle, const UnitLimits& limits = {});

// Invertibility analysis for one session. Results are cached per word;
// Delta is computed on first use.
class UnitAnalyzer {
 public:
  explicit UnitAnalyzer(const Oracle& oracle, UnitLimits limits = {});

  UnitAnalyzer(const UnitAnalyzer&) = delete;
  UnitAnalyzer& operator=(const UnitAnalyzer&) = delete;

  [[nodiscard]] const Oracle& oracle() const noexcept { return oracle_; }
  [[nodiscard]] const SpecialPresentation& presentation() const noexcept {
    return oracle_.presentation();
  }
  [[nodiscard]] const DeltaTable& delta() const;
  // Delta is complete and normal forms are canonical.
  [[nodiscard]] bool decisive() const;

  [[nodiscard]] InvertibilityVerdict invertibility(const Word& w) const;
  [[nodiscard]] Verdict is_invertible(const Word& w) const { return invertibility(w).invertible; }
  // Throws NonInvertibleInput unless w is certified invertible.
  [[nodiscard]] Verdict is_indecomposable(const Word& w) const;
  [[nodiscard]] Word inverse_of(const Word& w) const;

  // The reduced (short-lex least) word equal to w in M. Uses the complete
  // system's normal form when available, zhang_reduce otherwise.
  [[nodiscard]] Word reduce(const Word& w) const;
  // Otto-Zhang route: reduce each maximal invertible part to its least
  // Delta*-representative and keep the separators.
  [[nodiscard]] Word zhang_reduce(const Word& w) const;
  // Least word of Delta* equal in M to the invertible word w.
  [[nodiscard]] Word least_delta_star_representative(const Word& w) const;
  // Parses w as a concatenation of Delta words, if possible.
  [[nodiscard]] std::optional<std::vector<std::size_t>> parse_delta_star(const Word& w) const;

  [[nodiscard]] OttoZhangForm otto_zhang(const Word& w) const;
  // Throws NoCuttingWord when no invertible word straddles the junction.
  [[nodiscard]] CutLattice cutting_lattice(const Word& u, const Word& v) const;
  // Throws NoContainingInvertible when no invertible subword contains anchor.
  [[nodiscard]] Span min_invertible_containing(const Word& w, Span anchor) const;
  [[nodiscard]] Verdict has_invertible_suffix(const Word& w) const;
  [[nodiscard]] Verdict has_invertible_prefix(const Word& w) const;

  [[nodiscard]] UnitsPresentation units_presentation() const;

 private:
  [[nodiscard]] InvertibilityVerdict invertibility_uncached(const Word& w) const;
  [[nodiscard]] std::optional<Word> right_inverse_by_prefixes(const Word& reduced) const;
  [[nodiscard]] std::optional<Word> left_inverse_by_suffixes(const Word& reduced) const;
  [[nodiscard]] std::optional<Word> search_witness(const Word& w, bool right) const;
  [[nodiscard]] Verdict require_decided(const Word& w) const;
  [[nodiscard]] std::vector<Span> invertible_spans_containing(const Word& w, Span anchor) const;
  [[nodiscard]] const std::vector<Word>& delta_star_words(std::size_t length) const;

  const Oracle& oracle_;
  UnitLimits limits_;

  mutable std::mutex mutex_;
  mutable std::mutex delta_mutex_;
  mutable std::unique_ptr<DeltaTable> delta_;
  mutable std::unordered_map<Word, InvertibilityVerdict> inv_cache_;
  mutable std::unordered_map<Word, Word> least_cache_;
  mutable std::vector<std::vector<Word>> delta_star_by_length_;
};

}  // namespace smtk
