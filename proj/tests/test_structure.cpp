#include <doctest.h>

#include <map>
#include <set>

#include <json.hpp>

#include "smtk/bicayley.hpp"
#include "smtk/biset.hpp"
#include "smtk/error.hpp"
#include "support.hpp"

using namespace smtk;
using smtk::test::load;

namespace {

struct Session {
  Oracle oracle;
  UnitAnalyzer units;
  Biset n;
  BiCayley g;
  explicit Session(const std::string& name) : oracle(load(name)), units(oracle), n(units), g(units) {}
  Word w(const std::string& s) const { return oracle.presentation().parse(s); }
  NElement p(const std::string& u, const std::string& v) const { return n.make(w(u), w(v)); }
};

std::string key(const NElement& p) { return p.right_part.raw() + "|" + p.left_part.raw(); }

}  // namespace

TEST_CASE("N membership and products") {
  Session b("bicyclic");
  NElement one = b.p("", "");
  NElement x = b.p("a", "b");
  CHECK(b.n.mul(one, x) == x);
  CHECK(b.n.mul(x, x) == b.p("aa", "bb"));
  CHECK(b.n.power(x, 3) == b.p("aaa", "bbb"));
  CHECK_THROWS_AS((void)b.n.make(b.w("b"), b.w("a")), NonInvertibleInput);
  CHECK_THROWS_AS((void)b.n.make(b.w("a"), b.w("bb")), NonInvertibleInput);
  CHECK(b.n.is_member(x));

  Session r("abcd_bc");
  Word inv_abcd = r.units.inverse_of(r.w("abcd"));
  Word inv_bc = r.units.inverse_of(r.w("bc"));
  NElement lhs = n_mul(r.n, r.n.make(r.w("a"), r.w("bcd") + inv_abcd), r.n.make(r.w("b"), r.w("c") + inv_bc));
  CHECK(lhs == r.n.make(r.w("ab"), r.w("cd") + inv_abcd));
}

TEST_CASE("generators of N") {
  Session b("bicyclic");
  auto X = b.n.gen_X();
  REQUIRE(X.size() == 1);
  CHECK(X[0].element == b.p("a", "b"));
  auto Y = b.n.gen_Y();
  REQUIRE(Y.size() == 1);
  CHECK(Y[0].delta == b.w("ab"));
  CHECK(Y[0].element == NElement{Word{}, Word{}});
  CHECK(Y[0].identity);

  Session c("cyclic2");
  CHECK(c.n.gen_X().empty());
  REQUIRE(c.n.gen_Y().size() == 1);
  CHECK(c.n.gen_Y()[0].element == c.p("a", "a"));

  Session r("abcd_bc");
  auto rx = r.n.gen_X();
  std::set<std::pair<std::string, std::size_t>> splits;
  for (const auto& x : rx) splits.insert({r.oracle.presentation().format(x.delta), x.split});
  CHECK(splits == std::set<std::pair<std::string, std::size_t>>{{"abcd", 1}, {"bc", 1}});
  CHECK(rx[0].element == r.p("a", "bcdabcdbc"));
  CHECK(rx[1].element == r.p("b", "cabcdabcd"));
  auto ry = r.n.gen_Y();
  REQUIRE(ry.size() == 2);
  CHECK(ry[0].element == r.p("abcd", "abcdbc"));
  CHECK(ry[1].element == r.p("bc", "abcdabcd"));
}

TEST_CASE("free product normal forms") {
  Session b("bicyclic");
  CHECK(b.n.normal_form(b.p("", "")).syllables.empty());
  auto nf = b.n.normal_form(b.p("aa", "bb"));
  REQUIRE(nf.syllables.size() == 1);
  REQUIRE(std::holds_alternative<XSyllable>(nf.syllables[0]));
  CHECK(std::get<XSyllable>(nf.syllables[0]).power == 2);
  CHECK(b.n.format(nf) == "x1^2");

  Session r("abcd_bc");
  auto rnf = r.n.normal_form(r.p("ab", "cdabcdbc"));
  CHECK(r.n.format(rnf) == "x1 · x2");
}

TEST_CASE("normal forms are unique and re-evaluate on balls") {
  for (const auto& name : test::fixture_names()) {
    Session s(name);
    std::size_t radius = s.oracle.presentation().alphabet().size() == 4 ? 6 : 8;
    std::map<std::string, std::string> seen;
    for (const NElement& p : s.n.ball(radius)) {
      FpNormalForm nf = s.n.normal_form(p);
      CHECK_MESSAGE(s.n.evaluate(nf) == p, name, " ", s.n.format(p));
      auto [it, fresh] = seen.emplace(s.n.format(nf), key(p));
      CHECK_MESSAGE(fresh, name, " ", s.n.format(nf));
      // Syllables alternate between X and G and no G syllable is trivial.
      for (std::size_t i = 0; i < nf.syllables.size(); ++i) {
        if (const auto* g = std::get_if<GSyllable>(&nf.syllables[i])) {
          CHECK_FALSE(g->g.empty());
          if (i + 1 < nf.syllables.size()) CHECK(std::holds_alternative<XSyllable>(nf.syllables[i + 1]));
        }
      }
    }
  }
}

TEST_CASE("right quotients") {
  Session b("bicyclic");
  NElement x = b.p("a", "b");
  auto q = b.n.right_quotient(b.p("aa", "bb"), x);
  REQUIRE(q);
  CHECK(*q == x);
  CHECK_FALSE(b.n.right_quotient(b.p("", ""), x).has_value());
}

TEST_CASE("ping-pong audits") {
  Session b("bicyclic");
  auto rb = b.n.ping_pong_audit(4);
  CHECK(rb.passed());
  Session c("cyclic2");
  CHECK(c.n.ping_pong_audit(4).passed());
  Session r("abcd_bc");
  auto rr = r.n.ping_pong_audit(8);
  CHECK(rr.passed());
  CHECK(rr.inconclusive.empty());
  for (const auto& check : rr.checks) CHECK_MESSAGE(check.tested > 0, check.name);
}

TEST_CASE("orbit basis and N-factorisation") {
  Session b("bicyclic");
  CHECK(b.g.orbit_basis_element({b.w("a"), b.w("b")}) == OrbitBasisElement{Word{}, Word{}, 0});
  CHECK(b.g.orbit_basis_element({b.w("a"), Word{}}) == OrbitBasisElement{b.w("a"), Word{}, 1});
  CHECK(b.g.orbit_basis_element({Word{}, Word{}}) == OrbitBasisElement{Word{}, Word{}, 0});
  auto [basis, n] = b.g.n_factorize_vertex({b.w("aa"), b.w("bb")});
  CHECK(basis == OrbitBasisElement{Word{}, Word{}, 0});
  CHECK(n == b.p("aa", "bb"));
  auto [b0, n0] = b.g.n_factorize_vertex({Word{}, Word{}});
  CHECK(n0 == b.p("", ""));
}

TEST_CASE("bi-Cayley balls") {
  Session b("bicyclic");
  auto single = b.g.build_ball(Word{}, 0);
  CHECK(single.vertices.size() == 1);
  CHECK(single.edges.empty());

  auto e2 = b.g.build_ball(Word{}, 2);
  REQUIRE(e2.vertices.size() == 2);
  REQUIRE(e2.edges.size() == 2);
  for (const auto& e : e2.edges) CHECK(e.cls == EdgeClass::SameOrbit);

  auto a2 = b.g.build_ball(b.w("a"), 2);
  bool found = false;
  for (const auto& e : a2.edges) {
    if (e.left.empty() && e.right.empty()) {
      found = true;
      CHECK(e.cls == EdgeClass::Crossing);
    }
  }
  CHECK(found);
  for (const auto& e : a2.edges) CHECK((e.cls == EdgeClass::SameOrbit) == b.g.letter_inside_invertible(e));
}

TEST_CASE("quotient forests") {
  Session b("bicyclic");
  auto q0 = b.g.quotient_forest(b.g.build_ball(Word{}, 4));
  CHECK(q0.forest);
  CHECK(q0.vertex_count == 1);
  auto q1 = b.g.quotient_forest(b.g.build_ball(b.w("a"), 4));
  REQUIRE(q1.components.size() == 1);
  CHECK(q1.components[0].skeleton_word == b.w("a"));
  CHECK(q1.components[0].linear);
  auto q2 = b.g.quotient_forest(b.g.build_ball(b.w("aa"), 4));
  CHECK(q2.vertex_count == 3);
  CHECK(q2.edge_count == 2);
  CHECK(q2.components[0].skeleton_word == b.w("aa"));
}

TEST_CASE("edge basis") {
  Session b("bicyclic");
  CHECK(b.g.compute_C() == std::vector<EdgeBasisElement>{{Word{}, 0, b.w("b")}, {b.w("a"), 1, Word{}}});
  Session c("cyclic2");
  CHECK(c.g.compute_C() == std::vector<EdgeBasisElement>{{Word{}, 0, Word{}}});
  Session r("abcd_bc");
  auto rc = r.g.compute_C();
  std::set<std::string> got;
  for (const auto& e : rc) {
    got.insert(r.oracle.presentation().format(e.pre) + "," + r.oracle.presentation().alphabet().name(e.letter) + "," +
               r.oracle.presentation().format(e.post));
  }
  CHECK(got == std::set<std::string>{"ε,a,bcd", "abc,d,ε", "ε,b,c", "b,c,ε"});
}

TEST_CASE("edge factorisation") {
  Session b("bicyclic");
  auto f1 = b.g.edge_c_factorize({Word{}, 0, b.w("b"), EdgeClass::SameOrbit});
  CHECK(f1.first == BiVertex{Word{}, Word{}});
  CHECK(f1.second == EdgeBasisElement{Word{}, 0, b.w("b")});
  auto f2 = b.g.edge_c_factorize({b.w("a"), 0, b.w("bb"), EdgeClass::SameOrbit});
  CHECK(f2.first == BiVertex{b.w("a"), b.w("b")});
  CHECK(f2.second == EdgeBasisElement{Word{}, 0, b.w("b")});
  auto f3 = b.g.edge_c_factorize({b.w("a"), 1, Word{}, EdgeClass::SameOrbit});
  CHECK(f3.first == BiVertex{Word{}, Word{}});
  CHECK_THROWS_AS((void)b.g.edge_c_factorize({Word{}, 0, Word{}, EdgeClass::Crossing}), NotCollapsedEdge);
}

TEST_CASE("ball exports") {
  Session b("bicyclic");
  auto ball = b.g.build_ball(b.w("a"), 2);
  std::string dot = b.g.to_dot(ball);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("style=dashed") != std::string::npos);
  auto j = nlohmann::json::parse(b.g.to_json(ball));
  CHECK(j["vertices"].size() == ball.vertices.size());
  CHECK(j["edges"].size() == ball.edges.size());
  CHECK(j["edges"][0].contains("class"));
  CHECK(b.g.to_dot(ball) == dot);
}
