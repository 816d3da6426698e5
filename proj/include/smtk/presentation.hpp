#pragma once

#include <string>
#include <utility>
#include <vector>

#include "smtk/words.hpp"

namespace smtk {

using Relation = std::pair<Word, Word>;

// A finite monoid presentation <A | u_1 = v_1, ...>.
struct Presentation {
  Alphabet alphabet;
  std::vector<Relation> relations;

  [[nodiscard]] bool is_special() const noexcept {
    for (const auto& r : relations) {
      if (!r.second.empty()) return false;
    }
    return true;
  }
};

// <A | w_1 = 1, ..., w_k = 1> with every w_i nonempty.
class SpecialPresentation {
 public:
  SpecialPresentation(Alphabet alphabet, std::vector<Word> relators);
  // Throws NonSpecialRelator when some relation has a nonempty right side.
  static SpecialPresentation from(const Presentation& p);

  [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] const std::vector<Word>& relators() const noexcept { return relators_; }
  [[nodiscard]] std::size_t k() const noexcept { return relators_.size(); }
  [[nodiscard]] std::size_t max_relator_length() const noexcept;
  [[nodiscard]] std::vector<Relation> relations() const;

  [[nodiscard]] std::string format(const Word& w) const { return alphabet_.format(w); }
  [[nodiscard]] Word parse(std::string_view s) const { return alphabet_.parse(s); }

 private:
  Alphabet alphabet_;
  std::vector<Word> relators_;
};

}  // namespace smtk
