#include "smtk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace smtk {

const char* to_string(Verdict::Kind k) noexcept {
  switch (k) {
    case Verdict::Kind::Equal: return "Equal";
    case Verdict::Kind::NotEqual: return "NotEqual";
    case Verdict::Kind::Unknown: return "Unknown";
  }
  return "?";
}

Verdict both(const Verdict& a, const Verdict& b) {
  if (a.is_not_equal()) return a;
  if (b.is_not_equal()) return b;
  if (a.is_unknown()) return a;
  if (b.is_unknown()) return b;
  return Verdict::equal();
}

OracleConfig OracleConfig::scaled(double factor) const {
  auto s = [factor](std::size_t x) {
    return static_cast<std::size_t>(std::llround(static_cast<double>(x) * factor));
  };
  OracleConfig c = *this;
  c.completion.max_rules = s(completion.max_rules);
  c.completion.max_rule_length = s(completion.max_rule_length);
  c.completion.max_iterations = s(completion.max_iterations);
  c.search_radius = s(search_radius);
  c.max_word_len = s(max_word_len);
  c.max_search_states = s(max_search_states);
  return c;
}

namespace {

IntVector letter_counts(const Word& w, std::size_t rank) {
  IntVector v(rank, 0);
  for (std::size_t i = 0; i < w.size(); ++i) ++v[w[i]];
  return v;
}

IntMatrix relator_counts(const SpecialPresentation& p) {
  IntMatrix m;
  for (const Word& w : p.relators()) m.push_back(letter_counts(w, p.alphabet().size()));
  return m;
}

std::pair<Word, Word> key(const Word& u, const Word& v) {
  return shortlex_less(v, u) ? std::pair{v, u} : std::pair{u, v};
}

// One application of lhs -> rhs or rhs -> lhs turns x into y.
bool one_step(const Word& x, const Word& y, const Word& lhs, const Word& rhs) {
  for (int dir = 0; dir < 2; ++dir) {
    const Word& from = dir == 0 ? lhs : rhs;
    const Word& to = dir == 0 ? rhs : lhs;
    if (x.size() + to.size() != y.size() + from.size()) continue;
    for (std::size_t p = 0; p + from.size() <= x.size(); ++p) {
      if (x.sub(p, from.size()) == from && x.replaced(p, from.size(), to) == y) return true;
    }
  }
  return false;
}

}  // namespace

Oracle::Oracle(SpecialPresentation pres, OracleConfig config)
    : pres_(std::move(pres)),
      config_(config),
      completion_(knuth_bendix(pres_, config_.completion)),
      relator_lattice_(pres_.alphabet().size(), relator_counts(pres_)),
      max_word_len_(config_.max_word_len != 0 ? config_.max_word_len
                                               : 4 * pres_.max_relator_length()) {}

Word Oracle::normal_form(const Word& w) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = nf_cache_.find(w); it != nf_cache_.end()) return it->second;
  }
  Word nf = completion_.system.reduce(w);
  std::lock_guard lock(mutex_);
  nf_cache_.emplace(w, nf);
  return nf;
}

IntVector Oracle::abelianization_vector(const Word& w) const {
  return relator_lattice_.reduce(letter_counts(w, pres_.alphabet().size()));
}

Verdict Oracle::decide_equal(const Word& u, const Word& v) const {
  auto k = key(u, v);
  {
    std::lock_guard lock(mutex_);
    if (auto it = verdict_cache_.find(k); it != verdict_cache_.end()) return it->second;
  }
  Derivation trace;
  Verdict verdict = decide_uncached(k.first, k.second, config_.record_traces ? &trace : nullptr);
  std::lock_guard lock(mutex_);
  verdict_cache_.emplace(k, verdict);
  if (config_.record_traces && verdict.is_equal()) traces_.emplace(k, std::move(trace));
  return verdict;
}

Verdict Oracle::decide_uncached(const Word& u, const Word& v, Derivation* trace) const {
  const Alphabet& A = pres_.alphabet();
  if (u == v) {
    if (trace) trace->words = {u};
    return Verdict::equal("graphically equal");
  }
  Word nu = normal_form(u);
  Word nv = normal_form(v);
  if (nu == nv) {
    if (trace) {
      trace->words = completion_.system.reduction_trace(u);
      auto back = completion_.system.reduction_trace(v);
      trace->words.insert(trace->words.end(), back.rbegin() + 1, back.rend());
    }
    return Verdict::equal("common normal form " + A.format(nu));
  }
  if (complete()) {
    return Verdict::not_equal("distinct normal forms " + A.format(nu) + " and " + A.format(nv) +
                              " of a complete system");
  }
  if (abelianization_vector(u) != abelianization_vector(v)) {
    return Verdict::not_equal("letter counts differ modulo the relator lattice");
  }
  SearchResult s = bidirectional_search(nu, nv);
  if (s.met) {
    if (trace) {
      trace->words = completion_.system.reduction_trace(u);
      trace->words.pop_back();
      trace->words.insert(trace->words.end(), s.path.words.begin(), s.path.words.end());
      auto back = completion_.system.reduction_trace(v);
      trace->words.insert(trace->words.end(), back.rbegin() + 1, back.rend());
    }
    return Verdict::equal("bidirectional search met after " + std::to_string(s.states) + " states");
  }
  return Verdict::unknown("completion timed out (" + completion_.reason + "); search radius " +
                          std::to_string(config_.search_radius) + ", word length cap " +
                          std::to_string(max_word_len_) + ", " + std::to_string(s.states) +
                          " states explored");
}

std::vector<Word> Oracle::neighbours(const Word& w) const {
  std::vector<Word> out;
  auto apply = [&](const Word& from, const Word& to) {
    if (w.size() - std::min(w.size(), from.size()) + to.size() > max_word_len_) return;
    if (from.empty()) {
      for (std::size_t p = 0; p <= w.size(); ++p) out.push_back(w.replaced(p, 0, to));
      return;
    }
    for (std::size_t p = w.find(from); p != Word::npos; p = w.find(from, p + 1)) {
      out.push_back(w.replaced(p, from.size(), to));
    }
  };
  for (const Word& r : pres_.relators()) {
    apply(r, Word{});
    apply(Word{}, r);
  }
  for (const Rule& r : completion_.system.rules()) {
    apply(r.lhs, r.rhs);
    apply(r.rhs, r.lhs);
  }
  return out;
}

Oracle::SearchResult Oracle::bidirectional_search(const Word& u, const Word& v) const {
  SearchResult result;
  if (config_.search_radius == 0) return result;
  // parent maps: word -> predecessor on its side
  std::unordered_map<Word, Word> seen[2];
  std::vector<Word> frontier[2] = {{u}, {v}};
  seen[0].emplace(u, u);
  seen[1].emplace(v, v);
  std::size_t depth = 0;
  auto path_to_root = [&](int side, Word w) {
    std::vector<Word> path{w};
    while (!(seen[side].at(w) == w)) {
      w = seen[side].at(w);
      path.push_back(w);
    }
    return path;
  };
  while (depth < config_.search_radius) {
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    if (frontier[side].empty()) side = 1 - side;
    if (frontier[side].empty()) break;
    std::vector<Word> next;
    for (const Word& w : frontier[side]) {
      for (Word& n : neighbours(w)) {
        if (seen[side].contains(n)) continue;
        seen[side].emplace(n, w);
        ++result.states;
        if (seen[1 - side].contains(n)) {
          auto a = path_to_root(0, n);
          auto b = path_to_root(1, n);
          std::reverse(a.begin(), a.end());
          a.insert(a.end(), b.begin() + 1, b.end());
          result.met = true;
          result.path.words = std::move(a);
          return result;
        }
        if (result.states >= config_.max_search_states) return result;
        next.push_back(std::move(n));
      }
    }
    frontier[side] = std::move(next);
    ++depth;
  }
  return result;
}

std::optional<Derivation> Oracle::derivation(const Word& u, const Word& v) const {
  if (!decide_equal(u, v).is_equal()) return std::nullopt;
  std::lock_guard lock(mutex_);
  auto it = traces_.find(key(u, v));
  if (it == traces_.end()) return std::nullopt;
  Derivation d = it->second;
  if (!d.words.empty() && d.words.front() != u) std::reverse(d.words.begin(), d.words.end());
  return d;
}

bool Oracle::verify_derivation(const Derivation& d) const {
  for (std::size_t i = 0; i + 1 < d.words.size(); ++i) {
    const Word& x = d.words[i];
    const Word& y = d.words[i + 1];
    bool ok = false;
    for (const Word& r : pres_.relators()) ok = ok || one_step(x, y, r, Word{});
    for (const Rule& r : completion_.system.rules()) ok = ok || one_step(x, y, r.lhs, r.rhs);
    if (!ok) return false;
  }
  return true;
}

}  // namespace smtk
