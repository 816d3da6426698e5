#include <doctest.h>

#include <sstream>

#include "smtk/error.hpp"
#include "smtk/homreport.hpp"
#include "support.hpp"

using namespace smtk;
using smtk::test::load;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("primitive roots") {
  Alphabet ab({"a", "b"});
  CHECK(primitive_root(ab.parse("abab")) == std::pair{ab.parse("ab"), std::size_t{2}});
  CHECK(primitive_root(ab.parse("aaa")) == std::pair{ab.parse("a"), std::size_t{3}});
  CHECK(primitive_root(ab.parse("aab")) == std::pair{ab.parse("aab"), std::size_t{1}});
}

TEST_CASE("one-relator classification") {
  auto abab = theorem_b_classify(load("abab"));
  CHECK(abab.proper_power);
  CHECK(abab.hochschild_upper == Level::inf());
  auto r = theorem_b_classify(load("abcd_bc"));
  CHECK_FALSE(r.proper_power);
  CHECK(r.hochschild_upper == Level::of(2));
  CHECK(r.bi_fp == Level::inf());
  CHECK(theorem_b_classify(load("cyclic2")).proper_power);
  SpecialPresentation two(Alphabet({"a", "b"}), {Word{0, 1}, Word{1, 0}});
  CHECK_THROWS_AS((void)theorem_b_classify(two), NotOneRelator);
}

TEST_CASE("compressibility") {
  Alphabet ab({"a", "b", "c"});
  auto c1 = compressibility(ab.parse("aba"), ab.parse("a"));
  CHECK(c1.compressible);
  CHECK(c1.r == ab.parse("a"));
  CHECK_FALSE(compressibility(ab.parse("ab"), ab.parse("ba")).compressible);
  auto c3 = compressibility(ab.parse("abcab"), ab.parse("abab"));
  CHECK(c3.r == ab.parse("ab"));
  CHECK_THROWS_AS((void)compressibility(ab.parse("ab"), ab.parse("ab")), std::invalid_argument);
}

TEST_CASE("group assumptions") {
  auto a = parse_assumption("fp=3");
  CHECK(a.fp == Level::of(3));
  CHECK_FALSE(a.cd.has_value());
  CHECK(theorem_a_report(a).bi_fp == Level::of(3));
  auto b = parse_assumption("fp=inf cd=2");
  CHECK(b.cd == Level::of(2));
  CHECK_THROWS_AS((void)parse_assumption("depth=4"), SyntaxError);

  for (const auto& [name, kind] : std::vector<std::pair<std::string, GroupAssumption::Kind>>{
           {"bicyclic", GroupAssumption::Kind::Trivial},
           {"cyclic2", GroupAssumption::Kind::Finite},
           {"abab", GroupAssumption::Kind::Finite},
           {"abcd_bc", GroupAssumption::Kind::Free},
           {"abcdab", GroupAssumption::Kind::Free}}) {
    Oracle o(load(name));
    UnitAnalyzer u(o);
    CHECK_MESSAGE(derive_group_assumption(u).kind == kind, name);
  }
}

TEST_CASE("finiteness reports") {
  GroupAssumption trivial{GroupAssumption::Kind::Trivial, Level::inf(), Level::of(0), "trivial"};
  auto t = theorem_a_report(trivial);
  CHECK(t.bi_fp == Level::inf());
  CHECK(t.hochschild_lower == Level::of(0));
  CHECK(t.hochschild_upper == Level::of(2));
  GroupAssumption z2{GroupAssumption::Kind::Finite, Level::inf(), Level::inf(), "finite of order 2"};
  CHECK(theorem_a_report(z2).hochschild_upper == Level::inf());
}

TEST_CASE("resolution summaries") {
  auto summary = [](const std::string& name) {
    Oracle o(load(name));
    UnitAnalyzer u(o);
    Biset n(u);
    BiCayley g(u);
    return resolution_summary(n, g);
  };
  auto b = summary("bicyclic");
  CHECK(b.edge_basis_size == 2);
  CHECK(b.letter_basis_size == 2);
  CHECK(b.x_size == 1);
  CHECK(b.group.kind == GroupAssumption::Kind::Trivial);
  auto c = summary("cyclic2");
  CHECK(c.edge_basis_size == 1);
  CHECK(c.x_size == 0);
  auto r = summary("abcd_bc");
  CHECK(r.edge_basis_size == 4);
  CHECK(r.delta.size() == 2);
}

TEST_CASE("exactness spot checks") {
  Oracle o(load("bicyclic"));
  UnitAnalyzer u(o);
  BiCayley g(u);
  auto path = exactness_spotcheck(g.quotient_forest(g.build_ball(Word{0, 0}, 4)));
  CHECK(path.boundary_rank == 2);
  CHECK(path.passed());
  auto point = exactness_spotcheck(g.quotient_forest(g.build_ball(Word{}, 4)));
  CHECK(point.edges == 0);
  CHECK(point.passed());
}

TEST_CASE("presentation parsing") {
  auto p = cli::parse_presentation("alphabet: a b\nrelator: ab = 1\n");
  CHECK(p.k() == 1);
  CHECK(p.relators()[0] == Word{0, 1});
  auto q = cli::parse_presentation("# comment\nalphabet: a b c d\nrelator: abcdbcabcd = 1  # trailing\n");
  CHECK(q.relators()[0].size() == 10);
  try {
    (void)cli::parse_presentation("alphabet: a\nrelator: ab = 1\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(std::string(e.what()).find("line 2, column 11") != std::string::npos);
  }
  CHECK_THROWS_AS((void)cli::parse_presentation("alphabet: a b\nrelator: ab = ba\n"), NonSpecialRelator);
  CHECK(cli::parse_presentation_text("alphabet: a b\nrelator: ab = ba\n").relations.size() == 1);
  CHECK_THROWS_AS((void)cli::parse_presentation("relator: ab = 1\n"), SyntaxError);
  CHECK_THROWS_AS((void)cli::parse_presentation("alphabet: a\nrule: a = 1\n"), SyntaxError);
}

TEST_CASE("command line") {
  auto bic = test::fixture_path("bicyclic.pres");
  auto rem = test::fixture_path("abcd_bc.pres");
  auto d = run({"delta", bic});
  CHECK(d.code == 0);
  CHECK(first_line(d.out) == "Δ = {ab}; (ab)^{-1} = ε");
  CHECK(first_line(run({"delta", rem}).out) == "Δ = {abcd, bc}; (abcd)^{-1} = abcdbc; (bc)^{-1} = abcdabcd");
  CHECK(first_line(run({"classify", rem}).out) == "one-relator special; not a proper power; bi-FP_∞; Hochschild ≤ 2");
  CHECK(first_line(run({"forest", bic, "--center", "aa", "--radius", "4"}).out) ==
        "Forest: yes; component skeleton: aa");
  CHECK(first_line(run({"reduce", bic, "aabba"}).out) == "a");
  CHECK(first_line(run({"nnf", rem, "ab", "cdabcdbc"}).out) == "(ab, cdabcdbc) = x1 · x2");
  CHECK(first_line(run({"compress", bic, "aba", "a"}).out) == "Compressible(r = a)");
  CHECK(run({"pingpong", rem, "--radius", "4"}).code == 0);

  auto bad = run({"reduce", bic, "abz"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("SyntaxError") != std::string::npos);
  CHECK(run({"delta", "/nonexistent.pres"}).code == 1);
  CHECK(run({"delta"}).code == 1);
  CHECK(run({"--format", "xml", "delta", bic}).code == 1);

  // Inconclusive surfaces as exit status 2.
  CHECK(run({"units", rem, "--kb-max-iters", "1", "--search-radius", "2"}).code == 2);

  // Deterministic output.
  CHECK(run({"ball", rem, "bc", "--format", "dot", "--radius", "3"}).out ==
        run({"ball", rem, "bc", "--format", "dot", "--radius", "3"}).out);
}
