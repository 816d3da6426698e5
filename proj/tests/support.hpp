#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "smtk/cli.hpp"
#include "smtk/presentation.hpp"
#include "smtk/words.hpp"

namespace smtk::test {

inline std::string fixture_path(const std::string& name) { return std::string(SMTK_FIXTURE_DIR) + "/" + name; }

inline SpecialPresentation load(const std::string& name) {
  return cli::parse_presentation(cli::read_file(fixture_path(name + ".pres")));
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"bicyclic", "cyclic2", "abab", "abcd_bc", "abcdab"};
  return names;
}

// Words spelled over single-character names, for brevity in tests.
inline Word w(const SpecialPresentation& p, const std::string& s) { return p.parse(s); }

// Independent oracles: nothing below touches the library's rewriting or
// search code.

// Erases relator occurrences until none is left. A normal form whenever the
// relators, read as rules r -> 1, are confluent (ab, aa).
inline Word erase_relators(const std::vector<Word>& relators, Word u) {
  for (bool again = true; again;) {
    again = false;
    for (const Word& r : relators) {
      std::size_t at = u.find(r);
      if (at != Word::npos) {
        u = u.replaced(at, r.size(), Word{});
        again = true;
      }
    }
  }
  return u;
}

// Words reachable from u by inserting or deleting relators, never exceeding
// length cap.
inline std::unordered_set<Word> thue_class(const std::vector<Word>& relators, const Word& u, std::size_t cap) {
  std::unordered_set<Word> seen{u};
  std::deque<Word> queue{u};
  while (!queue.empty()) {
    Word x = queue.front();
    queue.pop_front();
    auto visit = [&](Word y) {
      if (seen.insert(y).second) queue.push_back(std::move(y));
    };
    for (const Word& r : relators) {
      for (std::size_t at = x.find(r); at != Word::npos; at = x.find(r, at + 1)) visit(x.replaced(at, r.size(), Word{}));
      if (x.size() + r.size() <= cap) {
        for (std::size_t i = 0; i <= x.size(); ++i) visit(x.replaced(i, 0, r));
      }
    }
  }
  return seen;
}

inline Word shortlex_min(const std::unordered_set<Word>& s) {
  return *std::min_element(s.begin(), s.end(), ShortlexLess{});
}

// Words with no factor from `forbidden`, up to max_length.
inline std::vector<Word> avoiding(std::size_t rank, std::size_t max_length, const std::vector<Word>& forbidden) {
  std::vector<Word> out;
  for (const Word& x : words_up_to(rank, max_length)) {
    bool ok = std::none_of(forbidden.begin(), forbidden.end(), [&](const Word& f) { return x.find(f) != Word::npos; });
    if (ok) out.push_back(x);
  }
  return out;
}

// Splits u into words of `pieces`, if possible (dynamic programming).
inline bool parses_over(const Word& u, const std::vector<Word>& pieces) {
  std::vector<bool> ok(u.size() + 1, false);
  ok[0] = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!ok[i]) continue;
    for (const Word& p : pieces) {
      if (!p.empty() && u.sub(i, p.size()) == p) ok[i + p.size()] = true;
    }
  }
  return ok[u.size()];
}

}  // namespace smtk::test
