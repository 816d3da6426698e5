// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "smtk/bicayley.hpp"
#include "smtk/biset.hpp"
#include "smtk/cli.hpp"
#include "smtk/homreport.hpp"
#include "support.hpp"

using namespace smtk;
using smtk::test::load;

namespace {

constexpr double kWorkedExampleSeconds = 60.0;
constexpr double kFactorizeSeconds = 10.0;
constexpr std::size_t kPairsPerFixture = 500;
constexpr std::size_t kMaxApplications = 3;
constexpr std::size_t kPairBaseLength = 8;
constexpr std::uint32_t kSeed = 0;
constexpr std::size_t kFactorizeBound = 6;    // |x| + |y|
constexpr std::size_t kForestCenterLength = 4;
constexpr std::size_t kEdgeRadius = 5;
constexpr std::size_t kPingPongRadius = 6;
constexpr std::size_t kOracleWordLength = 6;

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Session {
  Oracle oracle;
  UnitAnalyzer units;
  Biset n;
  BiCayley g;
  explicit Session(const std::string& name) : oracle(load(name)), units(oracle), n(units), g(units) {}
  [[nodiscard]] Word w(const std::string& s) const { return oracle.presentation().parse(s); }
  [[nodiscard]] std::string fmt(const Word& x) const { return oracle.presentation().format(x); }
};

// Reduced words for the 2-letter fixtures by the independent eraser.
std::vector<Word> reduced_words(const Session& s, std::size_t max_length) {
  return test::avoiding(s.oracle.presentation().alphabet().size(), max_length, s.oracle.presentation().relators());
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

Outcome worked_example() {
  Outcome o;
  auto fail = [&](const std::string& why) {
    o.passed = false;
    o.detail += (o.detail.empty() ? "" : "; ") + why;
  };
  Session s("abcd_bc");
  int code = 0;
  std::string line = run_cli({"delta", test::fixture_path("abcd_bc.pres")}, code);
  line = line.substr(0, line.find('\n'));
  if (code != 0 || line.rfind("Δ = {abcd, bc};", 0) != 0) fail("delta printed '" + line + "'");
  if (s.units.delta().delta != std::vector<Word>{s.w("abcd"), s.w("bc")}) fail("delta table differs");

  std::set<std::pair<std::string, std::size_t>> splits;
  for (const XElement& x : s.n.generators().X) splits.insert({s.fmt(x.delta), x.split});
  if (!splits.contains({"abcd", 1})) fail("missing split (a, bcd)");
  if (!splits.contains({"bc", 1})) fail("missing split (b, c)");
  if (splits.contains({"abcd", 2})) fail("split (ab, cd) present");

  Word inv_abcd = s.units.inverse_of(s.w("abcd"));
  Word inv_bc = s.units.inverse_of(s.w("bc"));
  NElement lhs = n_mul(s.n, s.n.make(s.w("a"), s.w("bcd") + inv_abcd), s.n.make(s.w("b"), s.w("c") + inv_bc));
  NElement rhs = s.n.make(s.w("ab"), s.w("cd") + inv_abcd);
  if (lhs != rhs) fail("product " + s.n.format(lhs) + " != " + s.n.format(rhs));
  if (o.passed) o.detail = "Δ = {abcd, bc}; product " + s.n.format(lhs);
  return o;
}

Outcome oz_stability() {
  std::size_t failures = 0, pairs = 0;
  std::string first;
  for (const auto& name : test::fixture_names()) {
    Session s(name);
    const auto& pres = s.oracle.presentation();
    const auto& rel = pres.relators();
    std::mt19937 rng(kSeed);
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    const auto& delta = s.units.delta().delta;
    for (std::size_t t = 0; t < kPairsPerFixture; ++t, ++pairs) {
      Word u;
      std::size_t len = pick(kPairBaseLength + 1);
      for (std::size_t i = 0; i < len; ++i) u += static_cast<Letter>(pick(pres.alphabet().size()));
      Word v = u;
      std::size_t steps = pick(kMaxApplications + 1);
      for (std::size_t k = 0; k < steps; ++k) {
        const Word& r = rel[pick(rel.size())];
        std::vector<std::size_t> hits;
        for (std::size_t at = v.find(r); at != Word::npos; at = v.find(r, at + 1)) hits.push_back(at);
        if (!hits.empty() && pick(2) == 0) v = v.replaced(hits[pick(hits.size())], r.size(), Word{});
        else v = v.replaced(pick(v.size() + 1), 0, r);
      }
      OttoZhangForm fu = s.units.otto_zhang(u);
      OttoZhangForm fv = s.units.otto_zhang(v);
      bool ok = fu.m() == fv.m() && fu.letters == fv.letters;
      for (std::size_t i = 0; ok && i < fu.parts.size(); ++i) ok = s.oracle.decide_equal(fu.parts[i], fv.parts[i]).is_equal();
      for (const Word& x : {u, v}) {
        OttoZhangForm z = s.units.otto_zhang(s.units.zhang_reduce(x));
        for (const Word& part : z.parts) ok = ok && test::parses_over(part, delta);
      }
      if (!ok) {
        ++failures;
        if (first.empty()) first = name + ": " + s.fmt(u) + " ~ " + s.fmt(v);
      }
    }
  }
  Outcome o{failures == 0, std::to_string(pairs) + " pairs, " + std::to_string(failures) + " failures"};
  if (!first.empty()) o.detail += " (first " + first + ")";
  return o;
}

Outcome factorize_injective() {
  std::size_t vertices = 0, failures = 0;
  for (const std::string name : {"bicyclic", "cyclic2"}) {
    Session s(name);
    auto words = reduced_words(s, kFactorizeBound);
    std::map<std::string, std::string> image;
    for (const Word& x : words) {
      for (const Word& y : words) {
        if (x.size() + y.size() > kFactorizeBound) continue;
        ++vertices;
        BiVertex v{x, y};
        auto [b, n] = s.g.n_factorize_vertex(v);
        bool ok = s.g.act(b, n) == v;
        std::string key = b.left.raw() + "|" + b.right.raw() + "|" + n.right_part.raw() + "|" + n.left_part.raw();
        ok = image.emplace(key, x.raw() + "|" + y.raw()).second && ok;
        if (!ok) ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(vertices) + " vertices, " + std::to_string(failures) + " failures"};
}

Outcome forests() {
  std::size_t balls = 0, failures = 0, edges = 0;
  std::string first;
  for (const auto& name : test::fixture_names()) {
    Session s(name);
    std::size_t rank = s.oracle.presentation().alphabet().size();
    std::size_t radius = rank == 4 ? 2 : 4;
    std::set<Word, ShortlexLess> centers;
    for (const Word& c : words_up_to(rank, kForestCenterLength)) centers.insert(s.units.reduce(c));
    for (const Word& c : centers) {
      ++balls;
      BiCayleyBall ball = s.g.build_ball(c, radius);
      QuotientForest q = s.g.quotient_forest(ball);
      Word skeleton;
      for (Letter a : s.units.otto_zhang(c).letters) skeleton += a;
      bool ok = q.forest && !q.components.empty();
      for (const QuotientComponent& k : q.components) ok = ok && k.linear && k.skeleton_word == skeleton;
      for (const BiEdge& e : ball.edges) {
        ++edges;
        ok = ok && (e.cls == EdgeClass::SameOrbit) == s.g.letter_inside_invertible(e);
      }
      if (!ok) {
        ++failures;
        if (first.empty()) first = name + " center " + s.fmt(c) + ": " + q.detail;
      }
    }
  }
  Outcome o{failures == 0, std::to_string(balls) + " balls, " + std::to_string(edges) + " edges, " +
                               std::to_string(failures) + " failures"};
  if (!first.empty()) o.detail += " (first " + first + ")";
  return o;
}

Outcome edge_basis() {
  Outcome o;
  auto fail = [&](const std::string& why) {
    o.passed = false;
    o.detail += (o.detail.empty() ? "" : "; ") + why;
  };
  auto as_strings = [](const Session& s, const std::vector<EdgeBasisElement>& c) {
    std::set<std::string> out;
    for (const auto& e : c) {
      out.insert("(" + s.fmt(e.pre) + "," + s.oracle.presentation().alphabet().name(e.letter) + "," + s.fmt(e.post) + ")");
    }
    return out;
  };
  {
    Session s("bicyclic");
    if (as_strings(s, s.g.compute_C()) != std::set<std::string>{"(ε,a,b)", "(a,b,ε)"}) fail("bicyclic C differs");
  }
  {
    Session s("abcd_bc");
    auto c = s.g.compute_C();
    if (as_strings(s, c) != std::set<std::string>{"(ε,a,bcd)", "(abc,d,ε)", "(ε,b,c)", "(b,c,ε)"}) fail("abcd_bc C differs");
    for (const auto& e : c) {
      if (!s.units.delta().contains(e.word())) fail(s.fmt(e.word()) + " not in Δ");
    }
  }
  std::size_t same = 0, failures = 0;
  for (const auto& name : test::fixture_names()) {
    Session s(name);
    std::size_t rank = s.oracle.presentation().alphabet().size();
    std::set<Word, ShortlexLess> centers;
    for (const Word& c : words_up_to(rank, 2)) centers.insert(s.units.reduce(c));
    for (const Word& c : centers) {
      BiCayleyBall ball = s.g.build_ball(c, kEdgeRadius);
      std::map<std::string, std::string> image;
      for (const BiEdge& e : ball.edges) {
        if (e.cls != EdgeClass::SameOrbit) continue;
        ++same;
        auto [actor, basis] = s.g.edge_c_factorize(e);
        bool ok = s.units.reduce(actor.left + basis.pre) == e.left && basis.letter == e.letter &&
                  s.units.reduce(basis.post + actor.right) == e.right;
        std::string key = actor.left.raw() + "|" + actor.right.raw() + "|" + basis.word().raw() + "|" +
                          std::to_string(basis.pre.size());
        ok = image.emplace(key, e.left.raw()).second && ok;
        if (!ok) ++failures;
      }
    }
  }
  if (failures) fail(std::to_string(failures) + " factorisation failures");
  std::string summary = std::to_string(same) + " SameOrbit edges, " + std::to_string(failures) + " failures";
  o.detail = o.detail.empty() ? summary : o.detail + "; " + summary;
  return o;
}

Outcome ping_pong() {
  Outcome o;
  std::size_t tested = 0;
  for (const auto& name : test::fixture_names()) {
    Session s(name);
    AuditReport r = s.n.ping_pong_audit(kPingPongRadius);
    for (const AuditCheck& c : r.checks) {
      tested += c.tested;
      if (!c.passed) {
        o.passed = false;
        o.detail += name + " " + c.name + "; ";
      }
    }
    if (!r.inconclusive.empty()) {
      o.passed = false;
      o.detail += name + " inconclusive; ";
    }
  }
  o.detail += std::to_string(tested) + " checks at radius " + std::to_string(kPingPongRadius);
  return o;
}

Outcome classifier() {
  struct Case {
    std::string file;
    std::string key;
    std::string expected;
  };
  const std::vector<Case> cases = {
      {"abab.pres", "classification", R"({"bi_fp":"inf","hochschild":{"lower":"inf","upper":"inf"}})"},
      {"abcd_bc.pres", "classification", R"({"bi_fp":"inf","hochschild":{"lower":null,"upper":"2"}})"},
      {"ab_ba.rel", "branch", R"("incompressible")"},
      {"ab_ba.rel", "classification", R"({"bi_fp":"inf","hochschild":{"lower":null,"upper":"2"}})"},
  };
  Outcome o;
  for (const Case& c : cases) {
    int code = 0;
    std::string out = run_cli({"classify", test::fixture_path(c.file), "--format", "json"}, code);
    std::string got = code == 0 ? nlohmann::ordered_json::parse(out)[c.key].dump() : "exit " + std::to_string(code);
    if (got != c.expected) {
      o.passed = false;
      o.detail += c.file + " " + c.key + " = " + got + "; ";
    }
  }
  if (o.passed) o.detail = std::to_string(cases.size()) + " strings matched";
  return o;
}

Outcome oracle_soundness() {
  std::size_t pairs = 0, disagreements = 0;
  for (const std::string name : {"bicyclic", "cyclic2"}) {
    Session s(name);
    if (!s.oracle.complete()) return {false, name + " did not complete"};
    const auto& rel = s.oracle.presentation().relators();
    auto words = words_up_to(s.oracle.presentation().alphabet().size(), kOracleWordLength);
    std::vector<Word> nf;
    for (const Word& x : words) nf.push_back(test::erase_relators(rel, x));
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = 0; j < words.size(); ++j) {
        ++pairs;
        Verdict v = s.oracle.decide_equal(words[i], words[j]);
        bool expected = nf[i] == nf[j];
        if (v.is_unknown() || v.is_equal() != expected) ++disagreements;
      }
    }
  }
  return {disagreements == 0, std::to_string(pairs) + " pairs, " + std::to_string(disagreements) + " disagreements"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double limit_seconds;  // 0 means untimed
  };
  const std::vector<Criterion> criteria = {
      {"worked example: delta, X splits, product identity", worked_example, kWorkedExampleSeconds},
      {"Otto-Zhang stability on seeded pairs", oz_stability, 0},
      {"n_factorize_vertex injective, |x|+|y| <= 6", factorize_injective, kFactorizeSeconds},
      {"quotient forests for centers of length <= 4", forests, 0},
      {"edge basis C and edge factorisation", edge_basis, 0},
      {"ping-pong audit", ping_pong, 0},
      {"classifier JSON", classifier, 0},
      {"oracle soundness, words of length <= 6", oracle_soundness, 0},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].limit_seconds > 0 && secs > criteria[i].limit_seconds) {
      o.passed = false;
      o.detail += "; over time limit";
    }
    all = all && o.passed;
    std::printf("%s %zu %s: %s (%.2f s)\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str(), secs);
  }
  return all ? 0 : 1;
}
