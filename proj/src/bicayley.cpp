#include "smtk/bicayley.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "smtk/error.hpp"

namespace smtk {

const char* to_string(EdgeClass c) noexcept {
  switch (c) {
    case EdgeClass::SameOrbit: return "SameOrbit";
    case EdgeClass::Crossing: return "Crossing";
    case EdgeClass::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

bool vertex_less(const BiVertex& a, const BiVertex& b) {
  Ordering o = shortlex_cmp(a.left, b.left);
  if (o != Ordering::Equal) return o == Ordering::Less;
  return shortlex_less(a.right, b.right);
}

bool basis_less(const OrbitBasisElement& a, const OrbitBasisElement& b) {
  return vertex_less({a.left, a.right}, {b.left, b.right});
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

std::size_t BiCayleyBall::index_of(const BiVertex& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v, vertex_less);
  return it != vertices.end() && *it == v ? static_cast<std::size_t>(it - vertices.begin()) : Word::npos;
}

BiCayley::BiCayley(const UnitAnalyzer& units) : units_(units) {}

OrbitBasisElement BiCayley::orbit_basis_element(const BiVertex& v) const {
  Word w = v.left + v.right;
  OttoZhangForm f = units_.otto_zhang(w);
  std::size_t j = f.separators_before(v.left.size());
  Span part = f.part_spans[j];
  return {w.prefix(part.start), units_.reduce(f.parts[j]) + w.sub(part.end), j};
}

std::pair<OrbitBasisElement, NElement> BiCayley::n_factorize_vertex(const BiVertex& v) const {
  OrbitBasisElement b = orbit_basis_element(v);
  Word w = v.left + v.right;
  std::size_t start = b.left.size();
  Word part = units_.otto_zhang(w).parts[b.split];
  Word head = v.left.sub(start);                           // w'
  Word tail = v.right.prefix(part.size() - head.size());  // w''
  NElement n{units_.reduce(head), units_.reduce(tail + units_.inverse_of(part))};
  return {b, n};
}

BiVertex BiCayley::act(const OrbitBasisElement& b, const NElement& n) const {
  return {units_.reduce(b.left + n.right_part), units_.reduce(n.left_part + b.right)};
}

std::vector<Word> BiCayley::reduced_words(std::size_t max_length) const {
  const std::size_t rank = units_.presentation().alphabet().size();
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t a = 0; a < rank; ++a) {
        Word w = out[i] + static_cast<Letter>(a);
        if (units_.reduce(w) == w) out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

BiCayleyBall BiCayley::build_ball(const Word& center, std::size_t radius) const {
  BiCayleyBall ball;
  ball.center = units_.reduce(center);
  ball.radius = radius;
  const std::size_t L = ball.center.size() + radius;
  std::vector<Word> words = reduced_words(L);  // short-lex order
  for (const Word& x : words) {
    for (const Word& y : words) {
      if (x.size() + y.size() > L) break;
      if (units_.reduce(x + y) == ball.center) ball.vertices.push_back({x, y});
    }
  }
  std::sort(ball.vertices.begin(), ball.vertices.end(), vertex_less);

  std::vector<OrbitBasisElement> images;
  std::vector<bool> decided;
  for (const BiVertex& v : ball.vertices) {
    try {
      images.push_back(orbit_basis_element(v));
      decided.push_back(true);
    } catch (const Inconclusive& e) {
      images.push_back({});
      decided.push_back(false);
      ball.unknown.push_back("vertex (" + units_.presentation().alphabet().format(v.left) + ", " +
                             units_.presentation().alphabet().format(v.right) + "): " + e.what());
    }
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (decided[i]) ball.orbits.push_back(images[i]);
  }
  std::sort(ball.orbits.begin(), ball.orbits.end(), basis_less);
  ball.orbits.erase(std::unique(ball.orbits.begin(), ball.orbits.end()), ball.orbits.end());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!decided[i]) {
      ball.orbit.push_back(Word::npos);
      continue;
    }
    auto it = std::lower_bound(ball.orbits.begin(), ball.orbits.end(), images[i], basis_less);
    ball.orbit.push_back(static_cast<std::size_t>(it - ball.orbits.begin()));
  }

  // Edges (x, a, y): initial (x, ay), terminal (xa, y).
  std::map<Word, std::vector<std::size_t>, ShortlexLess> by_left;
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) by_left[ball.vertices[i].left].push_back(i);
  const std::size_t rank = units_.presentation().alphabet().size();
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    const BiVertex& init = ball.vertices[i];
    for (std::size_t a = 0; a < rank; ++a) {
      Letter l = static_cast<Letter>(a);
      auto it = by_left.find(units_.reduce(init.left + l));
      if (it == by_left.end()) continue;
      for (std::size_t t : it->second) {
        const Word& y = ball.vertices[t].right;
        if (units_.reduce(l + y) != init.right) continue;
        BiEdge e{init.left, l, y, EdgeClass::Unknown, i, t};
        if (ball.orbit[i] != Word::npos && ball.orbit[t] != Word::npos) {
          e.cls = ball.orbit[i] == ball.orbit[t] ? EdgeClass::SameOrbit : EdgeClass::Crossing;
        } else {
          ball.unknown.push_back("edge with an unclassified endpoint");
        }
        ball.edges.push_back(std::move(e));
      }
    }
  }
  return ball;
}

QuotientForest BiCayley::quotient_forest(const BiCayleyBall& ball) const {
  for (const BiEdge& e : ball.edges) {
    if (e.cls == EdgeClass::Unknown) {
      throw UnclassifiedEdges(std::to_string(ball.unknown.size()) + " unclassified items in the ball");
    }
  }
  QuotientForest q;
  q.vertex_count = ball.orbits.size();
  // A quotient edge is the triple (source orbit, label, target orbit).
  std::vector<std::tuple<std::size_t, Letter, std::size_t>> triples;
  for (const BiEdge& e : ball.edges) {
    if (e.cls == EdgeClass::Crossing) triples.emplace_back(ball.orbit[e.from], e.letter, ball.orbit[e.to]);
  }
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  q.edge_count = triples.size();

  DisjointSets ds(q.vertex_count);
  q.forest = true;
  for (const auto& [s, l, t] : triples) {
    q.quotient_edges.emplace_back(s, t);
    q.quotient_labels.push_back(l);
    if (!ds.unite(s, t)) {
      q.forest = false;
      if (q.detail.empty()) q.detail = "cycle through orbit classes " + std::to_string(s) + " and " + std::to_string(t);
    }
  }

  const OttoZhangForm oz = units_.otto_zhang(ball.center);
  const Word skeleton = Word::from_raw(std::string(oz.letters.begin(), oz.letters.end()));
  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t v = 0; v < q.vertex_count; ++v) members[ds.find(v)].push_back(v);
  for (const auto& [root, vs] : members) {
    QuotientComponent c;
    c.skeleton_word = skeleton;
    std::map<std::size_t, std::size_t> in_deg, out_deg;
    std::map<std::size_t, std::pair<std::size_t, Letter>> next;
    for (std::size_t k = 0; k < triples.size(); ++k) {
      auto [s, l, t] = triples[k];
      if (ds.find(s) != root) continue;
      ++out_deg[s];
      ++in_deg[t];
      next[s] = {t, l};
    }
    std::vector<std::size_t> sources;
    bool degrees_ok = true;
    for (std::size_t v : vs) {
      if (in_deg[v] == 0) sources.push_back(v);
      if (in_deg[v] > 1 || out_deg[v] > 1) degrees_ok = false;
    }
    if (degrees_ok && sources.size() == 1) {
      std::size_t v = sources.front();
      c.vertices.push_back(v);
      while (next.contains(v) && c.vertices.size() <= vs.size()) {
        c.labels.push_back(next[v].second);
        v = next[v].first;
        c.vertices.push_back(v);
      }
    }
    Word spelled = Word::from_raw(std::string(c.labels.begin(), c.labels.end()));
    c.linear = degrees_ok && sources.size() == 1 && c.vertices.size() == vs.size() && spelled == skeleton;
    q.components.push_back(std::move(c));
  }
  return q;
}

std::vector<EdgeBasisElement> BiCayley::compute_C() const {
  const DeltaTable& dt = units_.delta();
  dt.require_complete();
  std::vector<EdgeBasisElement> out;
  for (const Word& d : dt.delta) {
    for (std::size_t p = 0; p < d.size(); ++p) {
      Span s = units_.min_invertible_containing(d, {p, p + 1});
      if (s != Span{0, d.size()}) continue;
      EdgeBasisElement c{d.prefix(p), d[p], d.sub(p + 1)};
      if (units_.reduce(c.pre) != c.pre || units_.reduce(c.post) != c.post) continue;
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
    }
  }
  return out;
}

std::pair<BiVertex, EdgeBasisElement> BiCayley::edge_c_factorize(const BiEdge& e) const {
  const Alphabet& A = units_.presentation().alphabet();
  if (e.cls != EdgeClass::SameOrbit) {
    throw NotCollapsedEdge("(" + A.format(e.left) + ", " + A.name(e.letter) + ", " + A.format(e.right) +
                           ") is " + to_string(e.cls));
  }
  Word w = e.left + e.letter + e.right;
  const std::size_t p = e.left.size();
  Span s = units_.min_invertible_containing(w, {p, p + 1});
  BiVertex actor{e.left.prefix(s.start), e.right.sub(s.end - p - 1)};
  EdgeBasisElement c{e.left.sub(s.start), e.letter, e.right.prefix(s.end - p - 1)};
  return {actor, c};
}

bool BiCayley::letter_inside_invertible(const BiEdge& e) const {
  Word w = e.left + e.letter + e.right;
  return units_.otto_zhang(w).part_containing(e.left.size()) != Word::npos;
}

std::string BiCayley::to_dot(const BiCayleyBall& ball) const {
  const Alphabet& A = units_.presentation().alphabet();
  auto pair = [&A](const Word& l, const Word& r) { return "(" + A.format(l) + ", " + A.format(r) + ")"; };
  std::ostringstream out;
  out << "digraph ball {\n  node [shape=box];\n";
  for (std::size_t o = 0; o < ball.orbits.size(); ++o) {
    out << "  subgraph cluster_" << o << " {\n    label=\"" << pair(ball.orbits[o].left, ball.orbits[o].right)
        << "\";\n";
    for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
      if (ball.orbit[i] == o) {
        out << "    v" << i << " [label=\"" << pair(ball.vertices[i].left, ball.vertices[i].right) << "\"];\n";
      }
    }
    out << "  }\n";
  }
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    if (ball.orbit[i] == Word::npos) {
      out << "  v" << i << " [label=\"" << pair(ball.vertices[i].left, ball.vertices[i].right) << "\"];\n";
    }
  }
  for (const BiEdge& e : ball.edges) {
    const char* style = e.cls == EdgeClass::SameOrbit ? "dashed" : e.cls == EdgeClass::Crossing ? "solid" : "dotted";
    out << "  v" << e.from << " -> v" << e.to << " [label=\"" << A.name(e.letter) << "\", style=" << style
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string BiCayley::to_json(const BiCayleyBall& ball) const {
  const Alphabet& A = units_.presentation().alphabet();
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    nlohmann::ordered_json v;
    v["l"] = A.format(ball.vertices[i].left, "");
    v["r"] = A.format(ball.vertices[i].right, "");
    if (ball.orbit[i] == Word::npos) {
      v["orbit"] = nullptr;
    } else {
      v["orbit"] = ball.orbit[i];
    }
    j["vertices"].push_back(std::move(v));
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const BiEdge& e : ball.edges) {
    nlohmann::ordered_json x;
    x["l"] = A.format(e.left, "");
    x["a"] = A.name(e.letter);
    x["r"] = A.format(e.right, "");
    x["class"] = to_string(e.cls);
    j["edges"].push_back(std::move(x));
  }
  return j.dump(2);
}

}  // namespace smtk
