#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "smtk/biset.hpp"
#include "smtk/special.hpp"

namespace smtk {

// A pair (m1, m2) of M x M, both components reduced.
struct BiVertex {
  Word left;
  Word right;

  friend bool operator==(const BiVertex&, const BiVertex&) = default;
};

enum class EdgeClass { SameOrbit, Crossing, Unknown };
[[nodiscard]] const char* to_string(EdgeClass c) noexcept;

// (left, letter, right) runs from (left, letter.right) to (left.letter, right).
struct BiEdge {
  Word left;
  Letter letter = 0;
  Word right;
  EdgeClass cls = EdgeClass::Unknown;
  std::size_t from = 0;  // vertex indices within the ball
  std::size_t to = 0;
};

struct OrbitBasisElement {
  Word left;
  Word right;
  std::size_t split = 0;  // number of separators in left

  friend bool operator==(const OrbitBasisElement& a, const OrbitBasisElement& b) {
    return a.left == b.left && a.right == b.right;
  }
};

struct EdgeBasisElement {
  Word pre;
  Letter letter = 0;
  Word post;

  friend bool operator==(const EdgeBasisElement&, const EdgeBasisElement&) = default;
  [[nodiscard]] Word word() const { return pre + letter + post; }
};

struct BiCayleyBall {
  Word center;  // reduced
  std::size_t radius = 0;
  std::vector<BiVertex> vertices;           // short-lex on (left, right)
  std::vector<std::size_t> orbit;           // per vertex, index into orbits
  std::vector<OrbitBasisElement> orbits;    // distinct basis images, short-lex
  std::vector<BiEdge> edges;
  std::vector<std::string> unknown;         // reports for Unknown edges

  [[nodiscard]] std::size_t index_of(const BiVertex& v) const;
};

struct QuotientComponent {
  Word skeleton_word;
  std::vector<std::size_t> vertices;  // orbit indices along the path
  std::vector<Letter> labels;
  bool linear = false;  // path whose labels spell skeleton_word
};

struct QuotientForest {
  bool forest = false;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> quotient_edges;  // orbit indices
  std::vector<Letter> quotient_labels;
  std::vector<QuotientComponent> components;
  std::string detail;
};

class BiCayley {
 public:
  explicit BiCayley(const UnitAnalyzer& units);

  [[nodiscard]] const UnitAnalyzer& units() const noexcept { return units_; }

  [[nodiscard]] OrbitBasisElement orbit_basis_element(const BiVertex& v) const;
  // v = b . n under (m1, m2) . (n1, n2) = (m1 n1, n2 m2).
  [[nodiscard]] std::pair<OrbitBasisElement, NElement> n_factorize_vertex(const BiVertex& v) const;
  [[nodiscard]] BiVertex act(const OrbitBasisElement& b, const NElement& n) const;

  // Vertices (x, y) with xy = center and |x| + |y| <= |center| + radius.
  [[nodiscard]] BiCayleyBall build_ball(const Word& center, std::size_t radius) const;
  // Throws UnclassifiedEdges when the ball has Unknown edges.
  [[nodiscard]] QuotientForest quotient_forest(const BiCayleyBall& ball) const;

  [[nodiscard]] std::vector<EdgeBasisElement> compute_C() const;
  // Throws NotCollapsedEdge unless e is SameOrbit.
  [[nodiscard]] std::pair<BiVertex, EdgeBasisElement> edge_c_factorize(const BiEdge& e) const;
  // The distinguished letter lies inside a maximal invertible subword of left.letter.right.
  [[nodiscard]] bool letter_inside_invertible(const BiEdge& e) const;

  [[nodiscard]] std::string to_dot(const BiCayleyBall& ball) const;
  [[nodiscard]] std::string to_json(const BiCayleyBall& ball) const;

 private:
  [[nodiscard]] std::vector<Word> reduced_words(std::size_t max_length) const;

  const UnitAnalyzer& units_;
};

}  // namespace smtk
