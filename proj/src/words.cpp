#include "smtk/words.hpp"

#include <algorithm>
#include <cctype>

#include "smtk/error.hpp"

namespace smtk {

Word::Word(std::initializer_list<Letter> letters) {
  for (Letter a : letters) data_.push_back(static_cast<char>(a));
}

Word::Word(std::vector<Letter> const& letters) {
  for (Letter a : letters) data_.push_back(static_cast<char>(a));
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i]);
  return out;
}

Ordering shortlex_cmp(const Word& u, const Word& v) noexcept {
  if (u.size() != v.size()) return u.size() < v.size() ? Ordering::Less : Ordering::Greater;
  // char_traits<char> compares as unsigned char, which is the letter order.
  int c = u.raw().compare(v.raw());
  if (c == 0) return Ordering::Equal;
  return c < 0 ? Ordering::Less : Ordering::Greater;
}

Ordering shortlex_cmp(const Alphabet& alphabet, const Word& u, const Word& v) {
  if (!alphabet.contains(u) || !alphabet.contains(v)) {
    throw AlphabetMismatch("word contains a letter outside the alphabet");
  }
  return shortlex_cmp(u, v);
}

std::vector<std::pair<Word, Word>> splits(const Word& w) {
  std::vector<std::pair<Word, Word>> out;
  out.reserve(w.size() + 1);
  for (std::size_t i = 0; i <= w.size(); ++i) out.emplace_back(w.prefix(i), w.sub(i));
  return out;
}

std::vector<Span> subword_spans(const Word& w) {
  std::vector<Span> out;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    for (std::size_t j = i; j <= w.size(); ++j) out.push_back({i, j});
  }
  return out;
}

std::vector<Word> words_of_length(std::size_t rank, std::size_t length) {
  std::vector<Word> level{Word{}};
  for (std::size_t l = 0; l < length; ++l) {
    std::vector<Word> next;
    next.reserve(level.size() * rank);
    for (const Word& w : level) {
      for (std::size_t a = 0; a < rank; ++a) next.push_back(w + static_cast<Letter>(a));
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Word> words_up_to(std::size_t rank, std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t l = 0; l <= max_length; ++l) {
    auto level = words_of_length(rank, l);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw SyntaxError("alphabet must be nonempty");
  if (names_.size() > 255) throw SyntaxError("alphabet has more than 255 letters");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& n = names_[i];
    if (n.empty()) throw SyntaxError("empty generator name");
    if (!index_.emplace(n, static_cast<Letter>(i)).second) {
      throw SyntaxError("duplicate generator '" + n + "'");
    }
    max_name_length_ = std::max(max_name_length_, n.size());
    if (n.size() != 1) single_char_ = false;
  }
}

bool Alphabet::contains(const Word& w) const noexcept {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= names_.size()) return false;
  }
  return true;
}

Word Alphabet::parse(std::string_view text) const {
  Word out;
  std::size_t bad = scan(text, &out);
  if (bad != std::string_view::npos) {
    throw SyntaxError("unknown generator at '" + std::string(text.substr(bad, text.find_first_of(" \t\r\n", bad) - bad)) + "'");
  }
  return out;
}

std::size_t Alphabet::first_unknown(std::string_view text) const { return scan(text, nullptr); }

std::size_t Alphabet::scan(std::string_view text, Word* out) const {
  std::size_t i = 0;
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    std::string_view token = text.substr(i, j - i);
    if ((token == "1" || token == "ε") && !index_.contains(std::string(token))) {
      i = j;
      continue;
    }
    std::size_t k = 0;
    while (k < token.size()) {
      bool matched = false;
      for (std::size_t len = std::min(max_name_length_, token.size() - k); len > 0; --len) {
        auto it = index_.find(std::string(token.substr(k, len)));
        if (it != index_.end()) {
          if (out) *out += it->second;
          k += len;
          matched = true;
          break;
        }
      }
      if (!matched) return i + k;
    }
    i = j;
  }
  return std::string_view::npos;
}

std::string Alphabet::format(const Word& w, std::string_view empty) const {
  if (w.empty()) return std::string(empty);
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !single_char_) out += ' ';
    out += name(w[i]);
  }
  return out;
}

}  // namespace smtk
