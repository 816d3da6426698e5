#include "smtk/special.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "smtk/error.hpp"

namespace smtk {

std::size_t DeltaTable::index_of(const Word& w) const {
  auto it = std::find(delta.begin(), delta.end(), w);
  return it == delta.end() ? delta.size() : static_cast<std::size_t>(it - delta.begin());
}

std::vector<Word> DeltaTable::piece_words(std::size_t relator, const Word& w) const {
  std::vector<Word> out;
  for (const Span& s : pieces.at(relator)) out.push_back(w.sub(s));
  return out;
}

void DeltaTable::require_complete() const {
  if (partial) throw PartialDelta(detail);
}

Word OttoZhangForm::concat() const {
  Word w = parts.front();
  for (std::size_t i = 0; i < letters.size(); ++i) w = w + letters[i] + parts[i + 1];
  return w;
}

std::size_t OttoZhangForm::part_containing(std::size_t pos) const {
  for (std::size_t i = 0; i < part_spans.size(); ++i) {
    if (part_spans[i].contains(pos)) return i;
  }
  return Word::npos;
}

std::size_t OttoZhangForm::separators_before(std::size_t pos) const {
  std::size_t n = 0;
  for (std::size_t i = 1; i < part_spans.size(); ++i) {
    if (part_spans[i].start <= pos) ++n;
  }
  return n;
}

bool CutLattice::closed_under_meet_and_join() const {
  auto has = [this](Span s) { return std::find(elements.begin(), elements.end(), s) != elements.end(); };
  for (const Span& x : elements) {
    for (const Span& y : elements) {
      Span meet{std::max(x.start, y.start), std::min(x.end, y.end)};
      Span join{std::min(x.start, y.start), std::max(x.end, y.end)};
      if (!has(meet) || !has(join)) return false;
    }
  }
  return true;
}

namespace {

Word cyclic_complement(const Word& relator, Span piece) {
  return relator.sub(piece.end) + relator.prefix(piece.start);
}

// Odometer over A^len.
bool next_word(std::string& s, std::size_t rank) {
  for (std::size_t i = s.size(); i-- > 0;) {
    auto c = static_cast<unsigned char>(s[i]);
    if (c + 1u < rank) {
      s[i] = static_cast<char>(c + 1);
      return true;
    }
    s[i] = 0;
  }
  return false;
}

}  // namespace

DeltaTable compute_delta(const Oracle& oracle, const UnitLimits& limits) {
  const SpecialPresentation& pres = oracle.presentation();
  DeltaTable table;
  auto mark_partial = [&table](std::string why) {
    if (!table.partial) table.detail = std::move(why);
    table.partial = true;
  };

  // Pieces: repeatedly split off the shortest invertible prefix.
  struct Piece {
    Word word;
    Word inverse_word;
  };
  std::vector<Piece> pieces;
  for (const Word& w : pres.relators()) {
    std::vector<Span> spans;
    std::size_t pos = 0;
    while (pos < w.size()) {
      std::size_t q = pos + 1;
      for (; q < w.size(); ++q) {
        Verdict v = oracle.is_identity(w.sub(q) + w.prefix(pos) + w.sub(pos, q - pos));
        if (v.is_equal()) break;
        if (v.is_unknown()) mark_partial("piece factorisation: " + v.detail());
      }
      spans.push_back({pos, q});
      pos = q;
    }
    for (const Span& s : spans) pieces.push_back({w.sub(s), cyclic_complement(w, s)});
    table.pieces.push_back(std::move(spans));
  }

  // Every word of length <= L equal to a piece, minus the decomposable ones.
  const std::size_t L = pres.max_relator_length();
  const std::size_t rank = pres.alphabet().size();
  double total = 0;
  for (std::size_t len = 1; len <= L; ++len) total = total * static_cast<double>(rank) + rank;
  if (total > static_cast<double>(limits.max_delta_candidates)) {
    mark_partial("enumeration of A^{<=" + std::to_string(L) + "} exceeds " +
                 std::to_string(limits.max_delta_candidates) + " candidates");
    for (const Piece& p : pieces) table.delta.push_back(p.word);
    for (const Piece& p : pieces) table.inverse.emplace(p.word, oracle.normal_form(p.inverse_word));
    return table;
  }

  std::vector<Word> piece_nf;
  std::vector<IntVector> piece_ab;
  for (const Piece& p : pieces) {
    piece_nf.push_back(oracle.normal_form(p.word));
    piece_ab.push_back(oracle.abelianization_vector(p.word));
  }
  const RewriteSystem& sys = oracle.completion().system;

  std::vector<std::pair<Word, std::size_t>> candidates;  // word, matching piece
  for (std::size_t len = 1; len <= L; ++len) {
    std::string raw(len, 0);
    do {
      Word x = Word::from_raw(raw);
      ++table.candidates_examined;
      if (oracle.complete()) {
        Word nf = sys.reduce(x);
        for (std::size_t i = 0; i < pieces.size(); ++i) {
          if (nf == piece_nf[i]) {
            candidates.emplace_back(x, i);
            break;
          }
        }
        continue;
      }
      IntVector ab = oracle.abelianization_vector(x);
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (ab != piece_ab[i]) continue;
        Verdict v = oracle.decide_equal(x, pieces[i].word);
        if (v.is_equal()) {
          candidates.emplace_back(x, i);
          break;
        }
        if (v.is_unknown()) mark_partial("candidate " + pres.alphabet().format(x) + ": " + v.detail());
      }
    } while (next_word(raw, rank));
  }

  std::vector<Word> extra;
  for (const auto& [x, i] : candidates) {
    bool indecomposable = true;
    for (std::size_t j = 1; j < x.size() && indecomposable; ++j) {
      Verdict v = oracle.is_identity(x.sub(j) + pieces[i].inverse_word + x.prefix(j));
      if (v.is_equal()) indecomposable = false;
      if (v.is_unknown()) mark_partial("indecomposability of " + pres.alphabet().format(x) + ": " + v.detail());
    }
    if (!indecomposable || table.inverse.contains(x)) continue;
    table.inverse.emplace(x, oracle.normal_form(pieces[i].inverse_word));
    extra.push_back(x);
  }
  for (const Piece& p : pieces) {
    if (std::find(table.delta.begin(), table.delta.end(), p.word) == table.delta.end()) {
      table.delta.push_back(p.word);
    }
  }
  std::sort(extra.begin(), extra.end(), ShortlexLess{});
  for (const Word& x : extra) {
    if (std::find(table.delta.begin(), table.delta.end(), x) == table.delta.end()) table.delta.push_back(x);
  }
  if (!oracle.complete()) {
    mark_partial("no complete rewriting system; inverses are not certified reduced");
  }
  return table;
}

UnitAnalyzer::UnitAnalyzer(const Oracle& oracle, UnitLimits limits)
    : oracle_(oracle), limits_(limits) {
  if (limits_.witness_cap == 0) limits_.witness_cap = 2 * oracle.presentation().max_relator_length();
}

const DeltaTable& UnitAnalyzer::delta() const {
  std::lock_guard lock(delta_mutex_);
  if (!delta_) delta_ = std::make_unique<DeltaTable>(compute_delta(oracle_, limits_));
  return *delta_;
}

bool UnitAnalyzer::decisive() const { return oracle_.complete() && !delta().partial; }

InvertibilityVerdict UnitAnalyzer::invertibility(const Word& w) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = inv_cache_.find(w); it != inv_cache_.end()) return it->second;
  }
  InvertibilityVerdict v = invertibility_uncached(w);
  std::lock_guard lock(mutex_);
  inv_cache_.emplace(w, v);
  return v;
}

std::optional<Word> UnitAnalyzer::right_inverse_by_prefixes(const Word& r) const {
  const DeltaTable& d = delta();
  const std::size_t n = r.size();
  // choice[i]: (delta index, prefix length) of the piece starting at i
  std::vector<std::pair<std::size_t, std::size_t>> choice(n + 1, {Word::npos, 0});
  std::vector<bool> ok(n + 1, false);
  ok[n] = true;
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t k = 0; k < d.delta.size() && !ok[i]; ++k) {
      const Word& dw = d.delta[k];
      for (std::size_t len = 1; len <= dw.size() && i + len <= n; ++len) {
        if (r[i + len - 1] != dw[len - 1]) break;
        if (ok[i + len]) {
          ok[i] = true;
          choice[i] = {k, len};
          break;
        }
      }
    }
  }
  if (!ok[0]) return std::nullopt;
  Word inv;
  for (std::size_t i = 0; i < n;) {
    auto [k, len] = choice[i];
    const Word& dw = d.delta[k];
    inv = dw.sub(len) + d.inverse.at(dw) + inv;
    i += len;
  }
  return inv;
}

std::optional<Word> UnitAnalyzer::left_inverse_by_suffixes(const Word& r) const {
  const DeltaTable& d = delta();
  const std::size_t n = r.size();
  std::vector<std::pair<std::size_t, std::size_t>> choice(n + 1, {Word::npos, 0});
  std::vector<bool> ok(n + 1, false);
  ok[0] = true;
  for (std::size_t e = 1; e <= n; ++e) {
    for (std::size_t k = 0; k < d.delta.size() && !ok[e]; ++k) {
      const Word& dw = d.delta[k];
      for (std::size_t len = 1; len <= dw.size() && len <= e; ++len) {
        if (r[e - len] != dw[dw.size() - len]) break;
        if (ok[e - len]) {
          ok[e] = true;
          choice[e] = {k, len};
          break;
        }
      }
    }
  }
  if (!ok[n]) return std::nullopt;
  Word inv;
  for (std::size_t e = n; e > 0;) {
    auto [k, len] = choice[e];
    const Word& dw = d.delta[k];
    inv += d.inverse.at(dw) + dw.prefix(dw.size() - len);
    e -= len;
  }
  return inv;
}

std::optional<Word> UnitAnalyzer::search_witness(const Word& w, bool right) const {
  const std::size_t rank = presentation().alphabet().size();
  std::unordered_set<Word> seen;
  std::deque<std::pair<Word, Word>> queue;  // (normal form of the product, v)
  Word start = oracle_.normal_form(w);
  queue.emplace_back(start, Word{});
  seen.insert(start);
  while (!queue.empty()) {
    auto [s, v] = queue.front();
    queue.pop_front();
    if (s.empty()) return v;
    if (v.size() >= limits_.witness_cap) continue;
    for (std::size_t a = 0; a < rank; ++a) {
      Letter l = static_cast<Letter>(a);
      Word t = oracle_.normal_form(right ? s + l : l + s);
      if (!seen.insert(t).second) continue;
      if (seen.size() > limits_.max_witness_states) return std::nullopt;
      queue.emplace_back(std::move(t), right ? v + l : l + v);
    }
  }
  return std::nullopt;
}

InvertibilityVerdict UnitAnalyzer::invertibility_uncached(const Word& w) const {
  InvertibilityVerdict r;
  if (w.empty()) {
    r.right = r.left = r.invertible = Verdict::equal("empty word");
    r.witness_right = r.witness_left = Word{};
    return r;
  }
  const Alphabet& A = presentation().alphabet();
  if (decisive()) {
    Word nf = oracle_.normal_form(w);
    if (auto v = right_inverse_by_prefixes(nf)) {
      if (!oracle_.is_identity(w + *v).is_equal()) throw std::logic_error("prefix witness failed");
      r.witness_right = oracle_.normal_form(*v);
      r.right = Verdict::equal("w " + A.format(*r.witness_right) + " = 1");
    } else {
      r.right = Verdict::not_equal("reduced form " + A.format(nf) + " is not a product of prefixes of Delta");
    }
    if (auto v = left_inverse_by_suffixes(nf)) {
      if (!oracle_.is_identity(*v + w).is_equal()) throw std::logic_error("suffix witness failed");
      r.witness_left = oracle_.normal_form(*v);
      r.left = Verdict::equal(A.format(*r.witness_left) + " w = 1");
    } else {
      r.left = Verdict::not_equal("reduced form " + A.format(nf) + " is not a product of suffixes of Delta");
    }
  } else {
    std::string budget = "no witness of length <= " + std::to_string(limits_.witness_cap);
    if (auto v = search_witness(w, true)) {
      r.witness_right = *v;
      r.right = Verdict::equal("w " + A.format(*v) + " = 1");
    } else {
      r.right = Verdict::unknown(budget);
    }
    if (auto v = search_witness(w, false)) {
      r.witness_left = *v;
      r.left = Verdict::equal(A.format(*v) + " w = 1");
    } else {
      r.left = Verdict::unknown(budget);
    }
  }

  if (r.right.is_equal() && r.left.is_equal()) {
    r.invertible = Verdict::equal("two-sided inverse " + A.format(*r.witness_right));
  } else if (r.right.is_equal()) {
    Verdict t = oracle_.is_identity(*r.witness_right + w);
    if (t.is_equal()) {
      r.left = Verdict::equal("right inverse is also a left inverse");
      r.witness_left = r.witness_right;
      r.invertible = Verdict::equal("two-sided inverse " + A.format(*r.witness_right));
    } else if (t.is_not_equal()) {
      r.left = Verdict::not_equal("any left inverse would coincide with the right inverse");
      r.invertible = r.left;
    } else {
      r.invertible = t;
    }
  } else if (r.left.is_equal()) {
    Verdict t = oracle_.is_identity(w + *r.witness_left);
    if (t.is_equal()) {
      r.right = Verdict::equal("left inverse is also a right inverse");
      r.witness_right = r.witness_left;
      r.invertible = Verdict::equal("two-sided inverse " + A.format(*r.witness_left));
    } else if (t.is_not_equal()) {
      r.right = Verdict::not_equal("any right inverse would coincide with the left inverse");
      r.invertible = r.right;
    } else {
      r.invertible = t;
    }
  } else if (r.right.is_not_equal()) {
    r.invertible = r.right;
  } else if (r.left.is_not_equal()) {
    r.invertible = r.left;
  } else {
    r.invertible = Verdict::unknown(r.right.detail());
  }
  return r;
}

Verdict UnitAnalyzer::require_decided(const Word& w) const {
  Verdict v = is_invertible(w);
  if (v.is_unknown()) {
    throw OracleInconclusive("invertibility of " + presentation().alphabet().format(w) + ": " + v.detail());
  }
  return v;
}

Verdict UnitAnalyzer::is_indecomposable(const Word& w) const {
  Verdict inv = require_decided(w);
  if (!inv.is_equal()) throw NonInvertibleInput(presentation().alphabet().format(w));
  if (w.empty()) return Verdict::not_equal("the empty word");
  std::optional<Verdict> unknown;
  for (std::size_t j = 1; j < w.size(); ++j) {
    Verdict v = is_invertible(w.prefix(j));
    if (v.is_equal()) {
      return Verdict::not_equal("proper prefix " + presentation().alphabet().format(w.prefix(j)) +
                                " is invertible");
    }
    if (v.is_unknown() && !unknown) unknown = v;
  }
  if (unknown) return *unknown;
  return Verdict::equal("no proper prefix is invertible");
}

Word UnitAnalyzer::inverse_of(const Word& w) const {
  InvertibilityVerdict v = invertibility(w);
  if (v.invertible.is_unknown()) {
    throw OracleInconclusive("invertibility of " + presentation().alphabet().format(w) + ": " +
                             v.invertible.detail());
  }
  if (!v.invertible.is_equal()) {
    throw NonInvertibleInput(presentation().alphabet().format(w) + ": " + v.invertible.detail());
  }
  return reduce(*v.witness_right);
}

Word UnitAnalyzer::reduce(const Word& w) const {
  if (oracle_.complete()) return oracle_.normal_form(w);
  return zhang_reduce(w);
}

const std::vector<Word>& UnitAnalyzer::delta_star_words(std::size_t length) const {
  const DeltaTable& d = delta();
  std::lock_guard lock(mutex_);
  if (delta_star_by_length_.empty()) delta_star_by_length_.push_back({Word{}});
  std::size_t total = 0;
  for (const auto& level : delta_star_by_length_) total += level.size();
  while (delta_star_by_length_.size() <= length) {
    std::size_t len = delta_star_by_length_.size();
    std::vector<Word> level;
    for (const Word& dw : d.delta) {
      if (dw.size() > len) continue;
      for (const Word& x : delta_star_by_length_[len - dw.size()]) level.push_back(x + dw);
    }
    std::sort(level.begin(), level.end(), ShortlexLess{});
    level.erase(std::unique(level.begin(), level.end()), level.end());
    total += level.size();
    if (total > limits_.max_delta_star_words) {
      throw OracleInconclusive("more than " + std::to_string(limits_.max_delta_star_words) +
                               " Delta*-words up to length " + std::to_string(len));
    }
    delta_star_by_length_.push_back(std::move(level));
  }
  return delta_star_by_length_[length];
}

Word UnitAnalyzer::least_delta_star_representative(const Word& w) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = least_cache_.find(w); it != least_cache_.end()) return it->second;
  }
  delta().require_complete();
  const Alphabet& A = presentation().alphabet();
  for (std::size_t len = 0; len <= w.size(); ++len) {
    for (const Word& x : delta_star_words(len)) {
      Verdict v = oracle_.decide_equal(x, w);
      if (v.is_unknown()) throw OracleInconclusive("comparing " + A.format(x) + " with " + A.format(w) + ": " + v.detail());
      if (v.is_equal()) {
        std::lock_guard lock(mutex_);
        least_cache_.emplace(w, x);
        return x;
      }
    }
  }
  throw NonInvertibleInput(A.format(w) + " equals no Delta*-word of length <= " + std::to_string(w.size()));
}

std::optional<std::vector<std::size_t>> UnitAnalyzer::parse_delta_star(const Word& w) const {
  const DeltaTable& d = delta();
  const std::size_t n = w.size();
  std::vector<std::size_t> pick(n + 1, Word::npos);
  std::vector<bool> ok(n + 1, false);
  ok[n] = true;
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t k = 0; k < d.delta.size(); ++k) {
      const Word& dw = d.delta[k];
      if (i + dw.size() <= n && ok[i + dw.size()] && w.sub(i, dw.size()) == dw) {
        ok[i] = true;
        pick[i] = k;
        break;
      }
    }
  }
  if (!ok[0]) return std::nullopt;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; i += d.delta[pick[i]].size()) out.push_back(pick[i]);
  return out;
}

OttoZhangForm UnitAnalyzer::otto_zhang(const Word& w) const {
  const std::size_t n = w.size();
  // reach[i]: end of the longest invertible subword starting at i (i if none)
  std::vector<std::size_t> reach(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    reach[i] = i;
    for (std::size_t j = n; j > i; --j) {
      if (require_decided(w.sub(i, j - i)).is_equal()) {
        reach[i] = j;
        break;
      }
    }
  }
  std::vector<bool> covered(n, false);
  std::size_t frontier = 0;
  for (std::size_t i = 0; i < n; ++i) {
    frontier = std::max(frontier, reach[i]);
    if (frontier > i) covered[i] = true;
  }
  OttoZhangForm f;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i == n || !covered[i]) {
      f.part_spans.push_back({start, i});
      f.parts.push_back(w.sub(start, i - start));
      if (i < n) f.letters.push_back(w[i]);
      start = i + 1;
    }
  }
  return f;
}

Word UnitAnalyzer::zhang_reduce(const Word& w) const {
  OttoZhangForm f = otto_zhang(w);
  Word out = least_delta_star_representative(f.parts[0]);
  for (std::size_t i = 0; i < f.m(); ++i) out = out + f.letters[i] + least_delta_star_representative(f.parts[i + 1]);
  return out;
}

std::vector<Span> UnitAnalyzer::invertible_spans_containing(const Word& w, Span anchor) const {
  std::vector<Span> out;
  for (std::size_t i = 0; i <= anchor.start; ++i) {
    for (std::size_t j = anchor.end; j <= w.size(); ++j) {
      if (j == i) continue;
      if (require_decided(w.sub(i, j - i)).is_equal()) out.push_back({i, j});
    }
  }
  std::sort(out.begin(), out.end(), [](Span a, Span b) {
    return a.length() != b.length() ? a.length() < b.length() : a.start < b.start;
  });
  return out;
}

CutLattice UnitAnalyzer::cutting_lattice(const Word& u, const Word& v) const {
  const Alphabet& A = presentation().alphabet();
  if (u.empty() || v.empty()) throw NoCuttingWord("both factors must be nonempty");
  CutLattice lat;
  lat.ambient = u + v;
  lat.anchor = {u.size() - 1, u.size() + 1};
  lat.elements = invertible_spans_containing(lat.ambient, lat.anchor);
  if (lat.elements.empty()) {
    throw NoCuttingWord("no invertible subword of " + A.format(u) + "." + A.format(v) + " crosses the cut");
  }
  lat.bottom = lat.elements.front();
  lat.top = lat.elements.back();
  std::vector<std::size_t> depth(lat.elements.size(), 0);
  for (std::size_t i = 0; i < lat.elements.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (lat.elements[i].contains(lat.elements[j]) && lat.elements[i] != lat.elements[j]) {
        depth[i] = std::max(depth[i], depth[j] + 1);
      }
    }
    lat.height = std::max(lat.height, depth[i]);
  }
  return lat;
}

Span UnitAnalyzer::min_invertible_containing(const Word& w, Span anchor) const {
  if (anchor.length() == 0 || anchor.end > w.size()) throw std::invalid_argument("anchor must be a nonempty span of w");
  std::vector<Span> spans = invertible_spans_containing(w, anchor);
  if (spans.empty()) {
    throw NoContainingInvertible("no invertible subword of " + presentation().alphabet().format(w) +
                                 " contains positions [" + std::to_string(anchor.start) + ", " +
                                 std::to_string(anchor.end) + ")");
  }
  return spans.front();
}

Verdict UnitAnalyzer::has_invertible_suffix(const Word& w) const {
  std::optional<Verdict> unknown;
  for (std::size_t len = 1; len <= w.size(); ++len) {
    Verdict v = is_invertible(w.suffix(len));
    if (v.is_equal()) return Verdict::equal("invertible suffix " + presentation().alphabet().format(w.suffix(len)));
    if (v.is_unknown() && !unknown) unknown = v;
  }
  if (unknown) return *unknown;
  return Verdict::not_equal("no nonempty suffix is invertible");
}

Verdict UnitAnalyzer::has_invertible_prefix(const Word& w) const {
  std::optional<Verdict> unknown;
  for (std::size_t len = 1; len <= w.size(); ++len) {
    Verdict v = is_invertible(w.prefix(len));
    if (v.is_equal()) return Verdict::equal("invertible prefix " + presentation().alphabet().format(w.prefix(len)));
    if (v.is_unknown() && !unknown) unknown = v;
  }
  if (unknown) return *unknown;
  return Verdict::not_equal("no nonempty prefix is invertible");
}

UnitsPresentation UnitAnalyzer::units_presentation() const {
  const DeltaTable& d = delta();
  UnitsPresentation up;
  up.generators = d.delta;
  const auto& rels = presentation().relators();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    std::vector<std::size_t> rel;
    for (const Word& p : d.piece_words(i, rels[i])) rel.push_back(d.index_of(p));
    up.relations.push_back(std::move(rel));
  }
  for (std::size_t i = 0; i < d.delta.size(); ++i) {
    for (std::size_t j = i + 1; j < d.delta.size(); ++j) {
      Verdict v = oracle_.decide_equal(d.delta[i], d.delta[j]);
      if (v.is_unknown()) throw OracleInconclusive("identifying Delta words: " + v.detail());
      if (v.is_equal()) up.identifications.emplace_back(i, j);
    }
  }
  return up;
}

}  // namespace smtk
