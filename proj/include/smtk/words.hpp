#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace smtk {

// Letters are interned generator indices; the index order is the alphabet
// order and therefore the order underlying short-lex.
using Letter = std::uint8_t;

// Half-open range [start, end) of letter positions.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  [[nodiscard]] std::size_t length() const noexcept { return end - start; }
  [[nodiscard]] bool contains(const Span& other) const noexcept {
    return start <= other.start && other.end <= end;
  }
  [[nodiscard]] bool contains(std::size_t pos) const noexcept {
    return start <= pos && pos < end;
  }
  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

// An immutable finite sequence of letters. Equality is graphical equality;
// equality in a monoid is the oracle's business.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> const& letters);

  static Word from_raw(std::string raw) {
    Word w;
    w.data_ = std::move(raw);
    return w;
  }
  static Word letter(Letter a) { return from_raw(std::string(1, static_cast<char>(a))); }

  [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
  [[nodiscard]] bool empty() const noexcept { return data_.empty(); }
  [[nodiscard]] Letter operator[](std::size_t i) const noexcept {
    return static_cast<Letter>(data_[i]);
  }
  [[nodiscard]] Letter front() const noexcept { return (*this)[0]; }
  [[nodiscard]] Letter back() const noexcept { return (*this)[size() - 1]; }

  [[nodiscard]] Word sub(std::size_t pos, std::size_t len = std::string::npos) const {
    return from_raw(data_.substr(pos, len));
  }
  [[nodiscard]] Word sub(Span s) const { return sub(s.start, s.length()); }
  [[nodiscard]] Word prefix(std::size_t len) const { return sub(0, len); }
  [[nodiscard]] Word suffix(std::size_t len) const { return sub(size() - len); }

  [[nodiscard]] bool starts_with(const Word& w) const noexcept {
    return data_.compare(0, w.size(), w.data_) == 0 && w.size() <= size();
  }
  [[nodiscard]] bool ends_with(const Word& w) const noexcept {
    return w.size() <= size() && data_.compare(size() - w.size(), w.size(), w.data_) == 0;
  }
  // Position of the first occurrence of w at or after pos, or npos.
  [[nodiscard]] std::size_t find(const Word& w, std::size_t pos = 0) const noexcept {
    return data_.find(w.data_, pos);
  }
  static constexpr std::size_t npos = std::string::npos;

  [[nodiscard]] Word replaced(std::size_t pos, std::size_t len, const Word& with) const {
    std::string s = data_;
    s.replace(pos, len, with.data_);
    return from_raw(std::move(s));
  }

  [[nodiscard]] const std::string& raw() const noexcept { return data_; }
  [[nodiscard]] std::vector<Letter> letters() const;

  Word& operator+=(const Word& w) {
    data_ += w.data_;
    return *this;
  }
  Word& operator+=(Letter a) {
    data_.push_back(static_cast<char>(a));
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }
  friend Word operator+(Word a, Letter b) { return a += b; }
  friend Word operator+(Letter a, const Word& b) { return Word::letter(a) += b; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string data_;
};

enum class Ordering { Less, Equal, Greater };

// Short-lex: shorter words first, equal lengths compared letter by letter
// in alphabet order.
[[nodiscard]] Ordering shortlex_cmp(const Word& u, const Word& v) noexcept;
[[nodiscard]] inline bool shortlex_less(const Word& u, const Word& v) noexcept {
  return shortlex_cmp(u, v) == Ordering::Less;
}

struct ShortlexLess {
  bool operator()(const Word& u, const Word& v) const noexcept { return shortlex_less(u, v); }
};

// All |w|+1 factorisations w = p.s, left to right.
[[nodiscard]] std::vector<std::pair<Word, Word>> splits(const Word& w);

// All contiguous spans of w including the empty ones, ordered by start then end.
[[nodiscard]] std::vector<Span> subword_spans(const Word& w);

// Every word of the given length over an alphabet of `rank` letters, in
// lexicographic order.
[[nodiscard]] std::vector<Word> words_of_length(std::size_t rank, std::size_t length);
// Every word of length <= max_length, in short-lex order.
[[nodiscard]] std::vector<Word> words_up_to(std::size_t rank, std::size_t max_length);

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
  [[nodiscard]] const std::string& name(Letter a) const { return names_.at(a); }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
  [[nodiscard]] bool contains(const Word& w) const noexcept;
  [[nodiscard]] bool single_char_names() const noexcept { return single_char_; }

  // Tokens separated by whitespace; each token is split by longest match
  // against the generator names. "1", "ε" and "e" (when not a generator)
  // denote the empty word. Throws SyntaxError on an unknown symbol.
  [[nodiscard]] Word parse(std::string_view text) const;
  // Byte offset of the first symbol parse() would reject, or npos.
  [[nodiscard]] std::size_t first_unknown(std::string_view text) const;
  [[nodiscard]] std::string format(const Word& w, std::string_view empty = "ε") const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::size_t scan(std::string_view text, Word* out) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, Letter> index_;
  std::size_t max_name_length_ = 0;
  bool single_char_ = true;
};

// Validating short-lex: both words must be over `alphabet`, otherwise
// AlphabetMismatch is thrown.
[[nodiscard]] Ordering shortlex_cmp(const Alphabet& alphabet, const Word& u, const Word& v);

}  // namespace smtk

template <>
struct std::hash<smtk::Word> {
  std::size_t operator()(const smtk::Word& w) const noexcept {
    return std::hash<std::string>{}(w.raw());
  }
};

template <>
struct std::hash<std::pair<smtk::Word, smtk::Word>> {
  std::size_t operator()(const std::pair<smtk::Word, smtk::Word>& p) const noexcept {
    std::size_t h = std::hash<smtk::Word>{}(p.first);
    return h ^ (std::hash<smtk::Word>{}(p.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};
