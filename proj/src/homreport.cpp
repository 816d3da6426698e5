#include "smtk/homreport.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "smtk/error.hpp"
#include "smtk/rewriting.hpp"

namespace smtk {

Level max(Level a, Level b) {
  if (a.infinite || b.infinite) return Level::inf();
  return Level::of(std::max(a.n, b.n));
}

const char* to_string(GroupAssumption::Kind k) noexcept {
  switch (k) {
    case GroupAssumption::Kind::Trivial: return "trivial";
    case GroupAssumption::Kind::Finite: return "finite";
    case GroupAssumption::Kind::Free: return "free";
    case GroupAssumption::Kind::Asserted: return "asserted";
    case GroupAssumption::Kind::Unknown: return "unknown";
  }
  return "?";
}

namespace {

Level parse_level(const std::string& key, const std::string& value) {
  if (value == "inf" || value == "∞") return Level::inf();
  try {
    std::size_t used = 0;
    unsigned long n = std::stoul(value, &used);
    if (used == value.size()) return Level::of(n);
  } catch (const std::exception&) {
  }
  throw SyntaxError("bad value '" + value + "' for " + key);
}

// Letters of a group word: +(i+1) for generator i, -(i+1) for its inverse.
using GroupWord = std::vector<int>;

GroupWord free_reduce(const GroupWord& w) {
  GroupWord out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  while (out.size() >= 2 && out.front() == -out.back()) out = GroupWord(out.begin() + 1, out.end() - 1);
  return out;
}

// Repeatedly drops a generator occurring exactly once in some relator.
// Returns the number of surviving generators, or nothing if relators remain.
std::optional<std::size_t> tietze_free_rank(std::size_t generators, std::vector<GroupWord> rels) {
  std::vector<bool> gone(generators, false);
  std::size_t alive = generators;
  while (true) {
    for (auto& r : rels) r = free_reduce(r);
    std::erase_if(rels, [](const GroupWord& r) { return r.empty(); });
    if (rels.empty()) return alive;
    bool progress = false;
    for (std::size_t k = 0; k < rels.size() && !progress; ++k) {
      const GroupWord& r = rels[k];
      for (std::size_t p = 0; p < r.size() && !progress; ++p) {
        int g = std::abs(r[p]);
        if (std::count_if(r.begin(), r.end(), [g](int x) { return std::abs(x) == g; }) != 1) continue;
        // r = A s B = 1 gives s = A^{-1} B^{-1}, or its inverse for s^{-1}.
        GroupWord value;
        for (std::size_t i = p; i-- > 0;) value.push_back(-r[i]);
        for (std::size_t i = r.size(); i-- > p + 1;) value.push_back(-r[i]);
        if (r[p] < 0) {
          std::reverse(value.begin(), value.end());
          for (int& x : value) x = -x;
        }
        std::vector<GroupWord> next;
        for (std::size_t j = 0; j < rels.size(); ++j) {
          if (j == k) continue;
          GroupWord w;
          for (int x : rels[j]) {
            if (x == g) {
              w.insert(w.end(), value.begin(), value.end());
            } else if (x == -g) {
              for (auto it = value.rbegin(); it != value.rend(); ++it) w.push_back(-*it);
            } else {
              w.push_back(x);
            }
          }
          next.push_back(std::move(w));
        }
        rels = std::move(next);
        gone[static_cast<std::size_t>(g - 1)] = true;
        --alive;
        progress = true;
      }
    }
    if (!progress) return std::nullopt;
  }
}

}  // namespace

GroupAssumption parse_assumption(const std::string& text) {
  GroupAssumption g;
  g.kind = GroupAssumption::Kind::Asserted;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw SyntaxError("expected key=value, got '" + tok + "'");
    std::string key = tok.substr(0, eq);
    std::string value = tok.substr(eq + 1);
    if (key == "fp") {
      g.fp = parse_level(key, value);
    } else if (key == "cd") {
      g.cd = parse_level(key, value);
    } else {
      throw SyntaxError("unknown key '" + key + "'");
    }
  }
  g.description = "asserted: " + text;
  return g;
}

GroupAssumption derive_group_assumption(const UnitAnalyzer& units, std::size_t max_order) {
  UnitsPresentation up = units.units_presentation();
  const std::size_t n = up.generators.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("g" + std::to_string(i));
    names.push_back("G" + std::to_string(i));
  }
  Alphabet A(names);
  auto sym = [](std::size_t i, bool inverse) { return static_cast<Letter>(2 * i + (inverse ? 1 : 0)); };
  std::vector<Relation> rels;
  for (std::size_t i = 0; i < n; ++i) {
    rels.emplace_back(Word{sym(i, false), sym(i, true)}, Word{});
    rels.emplace_back(Word{sym(i, true), sym(i, false)}, Word{});
  }
  for (const auto& r : up.relations) {
    Word w;
    for (std::size_t i : r) w += sym(i, false);
    rels.emplace_back(w, Word{});
  }
  for (const auto& [i, j] : up.identifications) rels.emplace_back(Word{sym(i, false)}, Word{sym(j, false)});

  GroupAssumption g;
  std::vector<GroupWord> group_rels;
  for (const auto& r : up.relations) {
    GroupWord w;
    for (std::size_t i : r) w.push_back(static_cast<int>(i) + 1);
    group_rels.push_back(std::move(w));
  }
  for (const auto& [i, j] : up.identifications) {
    group_rels.push_back({static_cast<int>(i) + 1, -static_cast<int>(j) - 1});
  }
  if (auto rank = tietze_free_rank(n, group_rels); rank && *rank > 0) {
    g.kind = GroupAssumption::Kind::Free;
    g.fp = Level::inf();
    g.cd = Level::of(1);
    g.description = "free of rank " + std::to_string(*rank);
    return g;
  }

  CompletionOutcome kb = knuth_bendix(rels, CompletionLimits{});
  if (!kb.completed()) {
    g.description = "completion of the units presentation stopped: " + kb.reason;
    return g;
  }
  const RewriteSystem& sys = kb.system;

  std::set<Letter> alive;
  for (std::size_t a = 0; a < 2 * n; ++a) {
    if (sys.is_irreducible(Word{static_cast<Letter>(a)})) alive.insert(static_cast<Letter>(a));
  }
  bool free = true;
  for (const Rule& r : sys.rules()) {
    if (r.lhs.size() == 1) continue;
    bool cancel = r.lhs.size() == 2 && r.rhs.empty() && (r.lhs[0] ^ 1) == r.lhs[1];
    if (!cancel) free = false;
  }
  for (Letter a : alive) free = free && alive.contains(static_cast<Letter>(a ^ 1));
  if (free && !alive.empty()) {
    std::size_t rank = alive.size() / 2;
    g.kind = GroupAssumption::Kind::Free;
    g.fp = Level::inf();
    g.cd = Level::of(1);
    g.description = "free of rank " + std::to_string(rank);
    return g;
  }

  // Irreducible words are prefix closed, so an empty level ends the enumeration.
  std::size_t order = 1;
  std::vector<Word> level{Word{}};
  for (std::size_t len = 0; !level.empty(); ++len) {
    if (len > 64) {
      g.description = "irreducible words of every length up to 64; not recognised";
      return g;
    }
    std::vector<Word> next;
    for (const Word& w : level) {
      for (std::size_t a = 0; a < 2 * n; ++a) {
        Word x = w + static_cast<Letter>(a);
        if (sys.is_irreducible(x)) next.push_back(std::move(x));
      }
    }
    order += next.size();
    if (order > max_order) {
      g.description = "more than " + std::to_string(max_order) + " elements; not recognised";
      return g;
    }
    level = std::move(next);
  }
  g.fp = Level::inf();
  if (order == 1) {
    g.kind = GroupAssumption::Kind::Trivial;
    g.cd = Level::of(0);
    g.description = "trivial";
  } else {
    g.kind = GroupAssumption::Kind::Finite;
    g.cd = Level::inf();
    g.description = "finite of order " + std::to_string(order);
  }
  return g;
}

FinitenessReport theorem_a_report(const GroupAssumption& g) {
  FinitenessReport r;
  r.assumption = g;
  if (g.fp) {
    r.bi_fp = *g.fp;
  } else {
    r.caveats.push_back("no finiteness type known for the group of units; bi-FP level not concluded");
  }
  if (g.cd) {
    r.hochschild_lower = *g.cd;
    r.hochschild_upper = max(Level::of(2), *g.cd);
  } else {
    r.caveats.push_back("cohomological dimension of the group of units unknown; Hochschild bounds not concluded");
  }
  return r;
}

std::pair<Word, std::size_t> primitive_root(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return {w, 1};
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  std::size_t period = n - fail[n - 1];
  if (period < n && n % period == 0) return {w.prefix(period), n / period};
  return {w, 1};
}

OneRelatorReport theorem_b_classify(const SpecialPresentation& pres) {
  if (pres.k() != 1) throw NotOneRelator(std::to_string(pres.k()) + " relators");
  OneRelatorReport r;
  r.relator = pres.relators().front();
  std::tie(r.root, r.exponent) = primitive_root(r.relator);
  r.proper_power = r.exponent >= 2;
  r.bi_fp = Level::inf();
  if (r.proper_power) {
    r.hochschild_lower = Level::inf();
    r.hochschild_upper = Level::inf();
  }
  return r;
}

Compressibility compressibility(const Word& u, const Word& v) {
  if (u.empty() || v.empty() || u == v) throw std::invalid_argument("compressibility needs distinct nonempty words");
  Compressibility c;
  for (std::size_t len = std::min(u.size(), v.size()); len > 0; --len) {
    Word r = u.prefix(len);
    if (u.ends_with(r) && v.starts_with(r) && v.ends_with(r)) {
      c.compressible = true;
      c.r = r;
      break;
    }
  }
  return c;
}

ResolutionSummary resolution_summary(const Biset& n, const BiCayley& g, std::optional<GroupAssumption> assumed) {
  const UnitAnalyzer& units = n.units();
  units.delta().require_complete();
  ResolutionSummary s;
  s.delta = units.delta().delta;
  s.letter_basis_size = units.presentation().alphabet().size();
  s.edge_basis = g.compute_C();
  s.edge_basis_size = s.edge_basis.size();
  s.x_size = n.generators().X.size();
  s.y_size = n.generators().Y.size();
  s.units = units.units_presentation();
  s.group = assumed ? *assumed : derive_group_assumption(units);
  s.finiteness = theorem_a_report(s.group);
  if (units.presentation().k() == 1) s.one_relator = theorem_b_classify(units.presentation());
  return s;
}

ExactnessReport exactness_spotcheck(const QuotientForest& q) {
  if (!q.forest) throw NotAForest(q.detail);
  ExactnessReport r;
  r.vertices = q.vertex_count;
  r.edges = q.edge_count;
  r.components = q.components.size();
  IntMatrix boundary;
  for (const auto& [s, t] : q.quotient_edges) {
    IntVector row(q.vertex_count, 0);
    row[t] += 1;
    row[s] -= 1;
    boundary.push_back(std::move(row));
  }
  r.boundary_rank = integer_rank(boundary);
  r.injective = r.boundary_rank == r.edges;
  r.exact = r.edges + r.components == r.vertices;
  return r;
}

nlohmann::ordered_json classification_json(std::optional<Level> bi_fp, std::optional<Level> lower,
                                           std::optional<Level> upper) {
  auto level = [](const std::optional<Level>& l) -> nlohmann::ordered_json {
    if (!l) return nullptr;
    return l->json();
  };
  nlohmann::ordered_json j;
  j["bi_fp"] = level(bi_fp);
  j["hochschild"]["lower"] = level(lower);
  j["hochschild"]["upper"] = level(upper);
  return j;
}

nlohmann::ordered_json summary_json(const ResolutionSummary& s, const Alphabet& a) {
  nlohmann::ordered_json j;
  j["delta"] = nlohmann::ordered_json::array();
  for (const Word& d : s.delta) j["delta"].push_back(a.format(d, ""));
  j["x_size"] = s.x_size;
  j["c_size"] = s.edge_basis_size;
  std::optional<Level> bi_fp = s.finiteness.bi_fp;
  std::optional<Level> lower = s.finiteness.hochschild_lower;
  std::optional<Level> upper = s.finiteness.hochschild_upper;
  if (s.one_relator) {
    if (!bi_fp) bi_fp = s.one_relator->bi_fp;
    if (!upper) upper = s.one_relator->hochschild_upper;
    if (!lower && s.one_relator->proper_power) lower = s.one_relator->hochschild_lower;
  }
  j["classification"] = classification_json(bi_fp, lower, upper);
  return j;
}

}  // namespace smtk
