#include "smtk/presentation.hpp"

#include <algorithm>

#include "smtk/error.hpp"

namespace smtk {

SpecialPresentation::SpecialPresentation(Alphabet alphabet, std::vector<Word> relators)
    : alphabet_(std::move(alphabet)), relators_(std::move(relators)) {
  for (const Word& w : relators_) {
    if (w.empty()) throw SyntaxError("relator must be nonempty");
    if (!alphabet_.contains(w)) throw AlphabetMismatch("relator uses an undeclared letter");
  }
}

SpecialPresentation SpecialPresentation::from(const Presentation& p) {
  std::vector<Word> relators;
  for (const auto& [lhs, rhs] : p.relations) {
    if (!rhs.empty() && !lhs.empty()) {
      throw NonSpecialRelator(p.alphabet.format(lhs) + " = " + p.alphabet.format(rhs));
    }
    relators.push_back(lhs.empty() ? rhs : lhs);
  }
  return SpecialPresentation(p.alphabet, std::move(relators));
}

std::size_t SpecialPresentation::max_relator_length() const noexcept {
  std::size_t m = 0;
  for (const Word& w : relators_) m = std::max(m, w.size());
  return m;
}

std::vector<Relation> SpecialPresentation::relations() const {
  std::vector<Relation> out;
  for (const Word& w : relators_) out.emplace_back(w, Word{});
  return out;
}

}  // namespace smtk
