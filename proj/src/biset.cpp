#include "smtk/biset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "smtk/error.hpp"

namespace smtk {

std::size_t GeneratorSets::x_index(const NElement& p) const {
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (X[i].element == p) return i;
  }
  return Word::npos;
}

bool AuditReport::passed() const {
  return inconclusive.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.passed; });
}

Biset::Biset(const UnitAnalyzer& units) : units_(units) {}

bool Biset::is_member(const NElement& p) const {
  Verdict v = units_.oracle().is_identity(p.right_part + p.left_part);
  if (v.is_unknown()) throw OracleInconclusive(v.detail());
  return v.is_equal();
}

NElement Biset::make(const Word& u, const Word& v) const {
  NElement p{units_.reduce(u), units_.reduce(v)};
  if (!is_member(p)) {
    const Alphabet& A = units_.presentation().alphabet();
    throw NonInvertibleInput("(" + A.format(u) + ", " + A.format(v) + ") is not in N");
  }
  return p;
}

NElement Biset::mul(const NElement& p, const NElement& q) const {
  return {units_.reduce(p.right_part + q.right_part), units_.reduce(q.left_part + p.left_part)};
}

NElement n_mul(const Biset& n, const NElement& p, const NElement& q) { return n.mul(p, q); }

NElement Biset::power(const NElement& p, std::size_t k) const {
  NElement r;
  for (std::size_t i = 0; i < k; ++i) r = mul(r, p);
  return r;
}

NElement Biset::from_unit(const Word& g) const { return {units_.reduce(g), units_.inverse_of(g)}; }

std::vector<XElement> Biset::gen_X() const {
  const DeltaTable& dt = units_.delta();
  dt.require_complete();
  std::vector<XElement> out;
  for (const Word& d : dt.delta) {
    for (std::size_t k = 1; k < d.size(); ++k) {
      Word d1 = d.prefix(k);
      Word d2 = d.sub(k);
      if (units_.reduce(d1) != d1 || units_.reduce(d2) != d2) continue;
      if (units_.cutting_lattice(d1, d2).height != 0) continue;
      Verdict suffix = units_.has_invertible_suffix(d1);
      if (suffix.is_unknown()) throw OracleInconclusive(suffix.detail());
      if (suffix.is_equal()) continue;
      NElement x{d1, units_.zhang_reduce(d2 + dt.inverse.at(d))};
      if (std::none_of(out.begin(), out.end(), [&](const XElement& e) { return e.element == x; })) {
        out.push_back({x, d, k});
      }
    }
  }
  return out;
}

std::vector<YElement> Biset::gen_Y() const {
  const DeltaTable& dt = units_.delta();
  dt.require_complete();
  std::vector<YElement> out;
  for (const Word& d : dt.delta) {
    NElement y{units_.reduce(d), dt.inverse.at(d)};
    if (std::any_of(out.begin(), out.end(), [&](const YElement& e) { return e.element == y; })) continue;
    out.push_back({y, d, y.right_part.empty()});
  }
  return out;
}

const GeneratorSets& Biset::generators() const {
  if (!gens_) gens_ = GeneratorSets{gen_X(), gen_Y()};
  return *gens_;
}

FpNormalForm Biset::normal_form(const NElement& p0) const {
  const GeneratorSets& gens = generators();
  const Alphabet& A = units_.presentation().alphabet();
  std::vector<Syllable> rev;  // peeled right to left
  NElement p = p0;
  while (!p.right_part.empty()) {
    const Word& u = p.right_part;
    const Word& v = p.left_part;
    CutLattice lat = units_.cutting_lattice(u, v);
    Span d = lat.bottom;
    Word d1 = u.sub(d.start);
    Verdict suffix = units_.has_invertible_suffix(d1);
    if (suffix.is_unknown()) throw OracleInconclusive(suffix.detail());
    if (suffix.is_not_equal()) {
      Word delta = lat.ambient.sub(d);
      Word d2 = v.prefix(d.end - u.size());
      NElement x{d1, units_.reduce(d2 + units_.inverse_of(delta))};
      std::size_t xi = gens.x_index(x);
      if (xi == Word::npos) throw std::logic_error("peeled generator " + format(x) + " is not in X");
      rev.push_back(XSyllable{xi, 1});
      p = {u.prefix(d.start), units_.reduce(delta + v.sub(d2.size()))};
    } else {
      std::size_t len = 0;
      for (std::size_t k = u.size(); k > 0; --k) {
        if (units_.is_invertible(u.suffix(k)).is_equal()) {
          len = k;
          break;
        }
      }
      if (len == 0) throw std::logic_error("no invertible suffix in " + A.format(u));
      Word g = u.suffix(len);
      rev.push_back(GSyllable{g});
      p = {u.prefix(u.size() - len), units_.reduce(g + v)};
    }
  }
  if (!p.left_part.empty()) throw std::logic_error("element " + format(p0) + " is not in N");

  // Fuse neighbours of the same type; a trivial G-syllable disappears and may
  // let two X-syllables meet.
  FpNormalForm nf;
  auto& out = nf.syllables;
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
    if (out.empty()) {
      out.push_back(*it);
      continue;
    }
    if (auto* g = std::get_if<GSyllable>(&*it)) {
      if (auto* last = std::get_if<GSyllable>(&out.back())) {
        Word fused = units_.reduce(last->g + g->g);
        out.pop_back();
        if (!fused.empty()) out.push_back(GSyllable{fused});
        continue;
      }
      out.push_back(*it);
      continue;
    }
    auto x = std::get<XSyllable>(*it);
    if (auto* last = std::get_if<XSyllable>(&out.back()); last && last->x == x.x) {
      last->power += x.power;
      continue;
    }
    out.push_back(x);
  }
  for (Syllable& s : out) {
    if (auto* g = std::get_if<GSyllable>(&s)) g->g = units_.reduce(g->g);
  }
  return nf;
}

NElement Biset::evaluate(const FpNormalForm& nf) const {
  const GeneratorSets& gens = generators();
  NElement r;
  for (const Syllable& s : nf.syllables) {
    if (const auto* g = std::get_if<GSyllable>(&s)) {
      r = mul(r, from_unit(g->g));
    } else {
      const auto& x = std::get<XSyllable>(s);
      r = mul(r, power(gens.X.at(x.x).element, x.power));
    }
  }
  return r;
}

std::string Biset::format(const NElement& p) const {
  const Alphabet& A = units_.presentation().alphabet();
  return "(" + A.format(p.right_part) + ", " + A.format(p.left_part) + ")";
}

std::string Biset::format(const FpNormalForm& nf) const {
  if (nf.syllables.empty()) return "1";
  const Alphabet& A = units_.presentation().alphabet();
  std::string s;
  for (const Syllable& syl : nf.syllables) {
    if (!s.empty()) s += " · ";
    if (const auto* g = std::get_if<GSyllable>(&syl)) {
      s += "[" + A.format(g->g) + "]";
    } else {
      const auto& x = std::get<XSyllable>(syl);
      s += "x" + std::to_string(x.x + 1);
      if (x.power > 1) s += "^" + std::to_string(x.power);
    }
  }
  return s;
}

std::optional<NElement> Biset::right_quotient(const NElement& p, const NElement& x) const {
  NElement q{units_.reduce(p.right_part + x.left_part), units_.reduce(x.right_part + p.left_part)};
  if (!is_member(q)) return std::nullopt;
  if (mul(q, x) != p) return std::nullopt;
  return q;
}

namespace {

// Words built from pieces (prefixes or suffixes of Delta words) up to `max` letters.
std::set<Word, ShortlexLess> piece_closure(const std::vector<Word>& pieces, std::size_t max) {
  std::set<Word, ShortlexLess> out{Word{}};
  std::vector<Word> frontier{Word{}};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (const Word& p : pieces) {
        if (w.size() + p.size() > max) continue;
        Word x = w + p;
        if (out.insert(x).second) next.push_back(x);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<NElement> Biset::ball(std::size_t radius) const {
  const DeltaTable& dt = units_.delta();
  dt.require_complete();
  std::vector<Word> prefixes, suffixes;
  for (const Word& d : dt.delta) {
    for (std::size_t k = 1; k <= d.size(); ++k) {
      prefixes.push_back(d.prefix(k));
      suffixes.push_back(d.suffix(k));
    }
  }
  std::vector<Word> U, V;
  for (const Word& w : piece_closure(prefixes, radius)) {
    if (units_.reduce(w) == w) U.push_back(w);
  }
  for (const Word& w : piece_closure(suffixes, radius)) {
    if (units_.reduce(w) == w) V.push_back(w);
  }
  std::vector<NElement> out;
  for (const Word& u : U) {
    for (const Word& v : V) {
      if (units_.reduce(u + v).empty()) out.push_back({u, v});
    }
  }
  return out;
}

AuditReport Biset::ping_pong_audit(std::size_t radius, std::size_t g_sample_length) const {
  const GeneratorSets& gens = generators();
  AuditReport report;
  report.radius = radius;
  std::vector<NElement> elems = ball(radius);
  report.ball_size = elems.size();

  // Reduced products of at most g_sample_length Delta words, nontrivial in G.
  std::vector<Word> sample;
  const DeltaTable& dt = units_.delta();
  std::set<Word, ShortlexLess> gs;
  std::vector<Word> level{Word{}};
  for (std::size_t len = 1; len <= g_sample_length; ++len) {
    std::vector<Word> next;
    for (const Word& w : level) {
      for (const Word& d : dt.delta) next.push_back(w + d);
    }
    for (const Word& w : next) {
      Word r = units_.reduce(w);
      if (!r.empty()) gs.insert(r);
    }
    level = std::move(next);
  }
  sample.assign(gs.begin(), gs.end());
  report.g_sample_size = sample.size();

  const std::size_t cap = 10;
  auto note = [cap](AuditCheck& c, std::string w) {
    c.passed = false;
    if (c.witnesses.size() < cap) c.witnesses.push_back(std::move(w));
  };

  AuditCheck disjoint;
  disjoint.name = "cosets N x pairwise disjoint";
  AuditCheck translates;
  translates.name = "nontrivial units map every N x outside all N x'";
  AuditCheck proper;
  proper.name = "identity lies outside every N x";
  AuditCheck recovery;
  recovery.name = "minimal cut recovers the last generator";

  std::vector<std::vector<std::size_t>> member_of(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    try {
      for (std::size_t xi = 0; xi < gens.X.size(); ++xi) {
        ++disjoint.tested;
        if (right_quotient(elems[i], gens.X[xi].element)) member_of[i].push_back(xi);
      }
      if (member_of[i].size() > 1) {
        note(disjoint, format(elems[i]) + " lies in N x" + std::to_string(member_of[i][0] + 1) + " and N x" +
                           std::to_string(member_of[i][1] + 1));
      }
      if (member_of[i].size() == 1) {
        ++recovery.tested;
        FpNormalForm nf = normal_form(elems[i]);
        const auto* last = nf.syllables.empty() ? nullptr : std::get_if<XSyllable>(&nf.syllables.back());
        if (!last || last->x != member_of[i][0]) note(recovery, format(elems[i]) + " ~ " + format(nf));
      }
      if (member_of[i].empty()) continue;
      for (const Word& g : sample) {
        NElement t = mul(elems[i], from_unit(g));
        for (std::size_t xi = 0; xi < gens.X.size(); ++xi) {
          ++translates.tested;
          if (right_quotient(t, gens.X[xi].element)) {
            note(translates, format(elems[i]) + " · [" + units_.presentation().alphabet().format(g) +
                                 "] lies in N x" + std::to_string(xi + 1));
          }
        }
      }
    } catch (const Inconclusive& e) {
      report.inconclusive.push_back(format(elems[i]) + ": " + e.what());
    }
  }
  for (std::size_t xi = 0; xi < gens.X.size(); ++xi) {
    ++proper.tested;
    if (right_quotient(NElement{}, gens.X[xi].element)) note(proper, "identity lies in N x" + std::to_string(xi + 1));
  }
  report.checks = {disjoint, translates, proper, recovery};
  return report;
}

}  // namespace smtk
