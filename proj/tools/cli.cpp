#include "smtk/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "smtk/bicayley.hpp"
#include "smtk/biset.hpp"
#include "smtk/error.hpp"
#include "smtk/homreport.hpp"
#include "smtk/oracle.hpp"
#include "smtk/special.hpp"

namespace smtk::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string where(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
}

}  // namespace

Presentation parse_presentation_text(const std::string& text) {
  Presentation p;
  bool have_alphabet = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    if (trim(line).empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw SyntaxError(where(lineno, 1) + "expected 'alphabet:' or 'relator:'");
    std::string key = trim(line.substr(0, colon));
    std::size_t body = colon + 1;
    if (key == "alphabet") {
      if (have_alphabet) throw SyntaxError(where(lineno, 1) + "second alphabet line");
      std::istringstream names(line.substr(body));
      std::vector<std::string> v;
      for (std::string n; names >> n;) v.push_back(n);
      try {
        p.alphabet = Alphabet(v);
      } catch (const std::exception& e) {
        throw SyntaxError(where(lineno, body + 1) + e.what());
      }
      have_alphabet = true;
    } else if (key == "relator" || key == "relation") {
      if (!have_alphabet) throw SyntaxError(where(lineno, 1) + "relator before alphabet");
      auto eq = line.find('=', body);
      if (eq == std::string::npos) throw SyntaxError(where(lineno, line.size() + 1) + "expected '= 1'");
      std::string lhs = line.substr(body, eq - body);
      std::string rhs = line.substr(eq + 1);
      auto side = [&](const std::string& s, std::size_t offset) {
        std::size_t bad = p.alphabet.first_unknown(s);
        if (bad != std::string::npos) {
          std::size_t end = s.find_first_of(" \t\r", bad);
          throw SyntaxError(where(lineno, offset + bad + 1) + "undeclared symbol '" + s.substr(bad, end - bad) + "'");
        }
        return p.alphabet.parse(s);
      };
      Word u = side(lhs, body);
      Word v = side(rhs, eq + 1);
      if (u.empty() && v.empty()) throw SyntaxError(where(lineno, body + 1) + "empty relation");
      if (u.empty()) std::swap(u, v);
      p.relations.emplace_back(std::move(u), std::move(v));
    } else {
      throw SyntaxError(where(lineno, 1) + "unknown key '" + key + "'");
    }
  }
  if (!have_alphabet) throw SyntaxError(where(lineno + 1, 1) + "missing alphabet line");
  return p;
}

SpecialPresentation parse_presentation(const std::string& text) {
  return SpecialPresentation::from(parse_presentation_text(text));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

namespace {

struct Settings {
  std::string format = "text";
  std::optional<std::size_t> radius;
  std::string dot;
  std::string center;
  std::optional<std::size_t> kb_max_rules;
  std::optional<std::size_t> kb_max_iters;
  std::optional<std::size_t> search_radius;
  std::optional<std::size_t> max_word_len;
  std::string assume_units;
};

double budget_scale() {
  const char* env = std::getenv("SMTK_BUDGET_SCALE");
  if (!env || !*env) return 1.0;
  char* end = nullptr;
  double s = std::strtod(env, &end);
  if (*end != '\0' || !(s > 0)) throw Error("SMTK_BUDGET_SCALE must be a positive number");
  return s;
}

struct Session {
  std::unique_ptr<Oracle> oracle;
  std::unique_ptr<UnitAnalyzer> units;
  std::unique_ptr<Biset> n;
  std::unique_ptr<BiCayley> g;

  [[nodiscard]] const Alphabet& alphabet() const { return oracle->presentation().alphabet(); }
  [[nodiscard]] std::string fmt(const Word& w) const { return alphabet().format(w); }
  [[nodiscard]] Word word(const std::string& s) const { return alphabet().parse(s); }
};

Session open_session(const std::string& path, const Settings& s) {
  OracleConfig cfg;
  if (s.kb_max_rules) cfg.completion.max_rules = *s.kb_max_rules;
  if (s.kb_max_iters) cfg.completion.max_iterations = *s.kb_max_iters;
  if (s.search_radius) cfg.search_radius = *s.search_radius;
  if (s.max_word_len) cfg.max_word_len = *s.max_word_len;
  double scale = budget_scale();
  cfg = cfg.scaled(scale);
  UnitLimits lim;
  auto mul = [scale](std::size_t x) { return static_cast<std::size_t>(static_cast<double>(x) * scale + 0.5); };
  lim.max_witness_states = mul(lim.max_witness_states);
  lim.max_delta_candidates = mul(lim.max_delta_candidates);
  lim.max_delta_star_words = mul(lim.max_delta_star_words);

  Session ss;
  ss.oracle = std::make_unique<Oracle>(parse_presentation(read_file(path)), cfg);
  ss.units = std::make_unique<UnitAnalyzer>(*ss.oracle, lim);
  ss.n = std::make_unique<Biset>(*ss.units);
  ss.g = std::make_unique<BiCayley>(*ss.units);
  return ss;
}

std::string inverse_label(const Session& s, const Word& d) {
  std::string w = s.fmt(d);
  return (d.size() > 1 ? "(" + w + ")" : w) + "^{-1}";
}

nlohmann::ordered_json verdict_json(const Verdict& v) {
  return {{"verdict", to_string(v.kind())}, {"detail", v.detail()}};
}

int cmd_delta(const Session& s, const Settings& st, std::ostream& out) {
  const DeltaTable& dt = s.units->delta();
  if (st.format == "json") {
    nlohmann::ordered_json j;
    j["delta"] = nlohmann::ordered_json::array();
    j["inverse"] = nlohmann::ordered_json::object();
    for (const Word& d : dt.delta) {
      j["delta"].push_back(s.alphabet().format(d, ""));
      j["inverse"][s.alphabet().format(d, "")] = s.alphabet().format(dt.inverse.at(d), "");
    }
    j["partial"] = dt.partial;
    if (dt.partial) j["detail"] = dt.detail;
    out << j.dump(2) << "\n";
  } else {
    std::string line = "Δ = {";
    for (std::size_t i = 0; i < dt.delta.size(); ++i) line += (i ? ", " : "") + s.fmt(dt.delta[i]);
    line += "}";
    for (const Word& d : dt.delta) line += "; " + inverse_label(s, d) + " = " + s.fmt(dt.inverse.at(d));
    out << line << "\n";
    if (dt.partial) out << "partial: " << dt.detail << "\n";
  }
  return dt.partial ? 2 : 0;
}

int cmd_units(const Session& s, const Settings& st, std::ostream& out) {
  s.units->delta().require_complete();
  UnitsPresentation up = s.units->units_presentation();
  GroupAssumption g = derive_group_assumption(*s.units);
  if (st.format == "json") {
    nlohmann::ordered_json j;
    j["generators"] = nlohmann::ordered_json::array();
    for (const Word& d : up.generators) j["generators"].push_back(s.alphabet().format(d, ""));
    j["relations"] = up.relations;
    j["identifications"] = up.identifications;
    j["group"] = g.description;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "generators:";
  for (const Word& d : up.generators) out << " [" << s.fmt(d) << "]";
  out << "\n";
  for (const auto& r : up.relations) {
    out << "relation: ";
    for (std::size_t i : r) out << "[" << s.fmt(up.generators[i]) << "]";
    out << " = 1\n";
  }
  if (up.identifications.empty()) out << "identifications: none\n";
  for (const auto& [i, j] : up.identifications) {
    out << "identification: [" << s.fmt(up.generators[i]) << "] = [" << s.fmt(up.generators[j]) << "]\n";
  }
  out << "group of units: " << g.description << "\n";
  return 0;
}

int cmd_reduce(const Session& s, const Settings& st, const std::vector<std::string>& args, std::ostream& out) {
  if (args.size() != 1) throw Error("reduce expects one word");
  Word w = s.word(args[0]);
  Word r = s.units->reduce(w);
  if (st.format == "json") {
    out << nlohmann::ordered_json{{"word", s.alphabet().format(w, "")}, {"reduced", s.alphabet().format(r, "")}}.dump(2)
        << "\n";
  } else {
    out << s.fmt(r) << "\n";
  }
  return 0;
}

int cmd_ozf(const Session& s, const Settings& st, const std::vector<std::string>& args, std::ostream& out) {
  if (args.size() != 1) throw Error("ozf expects one word");
  OttoZhangForm f = s.units->otto_zhang(s.word(args[0]));
  if (st.format == "json") {
    nlohmann::ordered_json j;
    j["m"] = f.m();
    j["parts"] = nlohmann::ordered_json::array();
    for (const Word& p : f.parts) j["parts"].push_back(s.alphabet().format(p, ""));
    j["letters"] = nlohmann::ordered_json::array();
    for (Letter a : f.letters) j["letters"].push_back(s.alphabet().name(a));
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "m = " << f.m() << ": [" << s.fmt(f.parts[0]) << "]";
  for (std::size_t i = 0; i < f.m(); ++i) out << " " << s.alphabet().name(f.letters[i]) << " [" << s.fmt(f.parts[i + 1]) << "]";
  out << "\n";
  return 0;
}

int cmd_invert(const Session& s, const Settings& st, const std::vector<std::string>& args, std::ostream& out) {
  if (args.size() != 1) throw Error("invert expects one word");
  Word w = s.word(args[0]);
  InvertibilityVerdict v = s.units->invertibility(w);
  std::optional<Word> inverse;
  if (v.invertible.is_equal()) inverse = s.units->inverse_of(w);
  if (st.format == "json") {
    nlohmann::ordered_json j;
    j["word"] = s.alphabet().format(w, "");
    j["right"] = verdict_json(v.right);
    j["left"] = verdict_json(v.left);
    j["invertible"] = verdict_json(v.invertible);
    j["inverse"] = inverse ? nlohmann::ordered_json(s.alphabet().format(*inverse, "")) : nlohmann::ordered_json();
    out << j.dump(2) << "\n";
  } else {
    out << "right-invertible: " << to_string(v.right.kind()) << " (" << v.right.detail() << ")\n";
    out << "left-invertible: " << to_string(v.left.kind()) << " (" << v.left.detail() << ")\n";
    out << "invertible: " << to_string(v.invertible.kind()) << " (" << v.invertible.detail() << ")\n";
    if (inverse) out << "inverse: " << s.fmt(*inverse) << "\n";
  }
  return v.invertible.is_unknown() ? 2 : 0;
}

int cmd_ngens(const Session& s, const Settings& st, std::ostream& out) {
  const GeneratorSets& gs = s.n->generators();
  if (st.format == "json") {
    nlohmann::ordered_json j;
    j["X"] = nlohmann::ordered_json::array();
    for (const XElement& x : gs.X) {
      j["X"].push_back({{"u", s.alphabet().format(x.element.right_part, "")},
                        {"v", s.alphabet().format(x.element.left_part, "")},
                        {"delta", s.alphabet().format(x.delta, "")},
                        {"split", x.split}});
    }
    j["Y"] = nlohmann::ordered_json::array();
    for (const YElement& y : gs.Y) {
      j["Y"].push_back({{"u", s.alphabet().format(y.element.right_part, "")},
                        {"v", s.alphabet().format(y.element.left_part, "")},
                        {"delta", s.alphabet().format(y.delta, "")},
                        {"identity", y.identity}});
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "X (" << gs.X.size() << "):\n";
  for (std::size_t i = 0; i < gs.X.size(); ++i) {
    const XElement& x = gs.X[i];
    out << "  x" << i + 1 << " = " << s.n->format(x.element) << "  from " << s.fmt(x.delta.prefix(x.split)) << "."
        << s.fmt(x.delta.sub(x.split)) << "\n";
  }
  out << "Y (" << gs.Y.size() << "):\n";
  for (std::size_t i = 0; i < gs.Y.size(); ++i) {
    const YElement& y = gs.Y[i];
    out << "  y" << i + 1 << " = (" << s.fmt(y.delta) << ", " << s.fmt(y.element.left_part) << ")"
        << (y.identity ? "  identity of N" : "") << "\n";
  }
  return 0;
}

int cmd_nnf(const Session& s, const Settings& st, const std::vector<std::string>& args, std::ostream& out) {
  if (args.size() != 2) throw Error("nnf expects two words u v");
  NElement p = s.n->make(s.word(args[0]), s.word(args[1]));
  FpNormalForm nf = s.n->normal_form(p);
  if (st.format == "json") {
    out << nlohmann::ordered_json{{"element", s.n->format(p)}, {"normal_form", s.n->format(nf)}}.dump(2) << "\n";
  } else {
    out << s.n->format(p) << " = " << s.n->format(nf) << "\n";
  }
  return 0;
}

int cmd_pingpong(const Session& s, const Settings& st, std::ostream& out) {
  AuditReport r = s.n->ping_pong_audit(st.radius.value_or(6));
  if (st.format == "json") {
    nlohmann::ordered_json j;
    j["radius"] = r.radius;
    j["ball_size"] = r.ball_size;
    j["g_sample_size"] = r.g_sample_size;
    j["checks"] = nlohmann::ordered_json::array();
    for (const AuditCheck& c : r.checks) {
      j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"tested", c.tested}, {"witnesses", c.witnesses}});
    }
    j["inconclusive"] = r.inconclusive;
    out << j.dump(2) << "\n";
  } else {
    out << "radius " << r.radius << ": " << r.ball_size << " elements of N, " << r.g_sample_size << " sampled units\n";
    for (const AuditCheck& c : r.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.tested << " tests)\n";
      for (const std::string& w : c.witnesses) out << "  " << w << "\n";
    }
    for (const std::string& w : r.inconclusive) out << "INCONCLUSIVE " << w << "\n";
  }
  if (!r.inconclusive.empty()) return 2;
  return r.passed() ? 0 : 1;
}

int cmd_ball(const Session& s, const Settings& st, const std::vector<std::string>& args, std::ostream& out) {
  std::string m = !args.empty() ? args[0] : st.center;
  if (args.size() > 1) throw Error("ball expects one center word");
  BiCayleyBall ball = s.g->build_ball(s.word(m), st.radius.value_or(2));
  if (!st.dot.empty()) {
    std::ofstream f(st.dot);
    if (!f) throw Error("cannot write " + st.dot);
    f << s.g->to_dot(ball);
  }
  if (st.format == "json") {
    out << s.g->to_json(ball) << "\n";
  } else if (st.format == "dot") {
    out << s.g->to_dot(ball);
  } else {
    std::size_t same = 0, crossing = 0, unknown = 0;
    for (const BiEdge& e : ball.edges) {
      if (e.cls == EdgeClass::SameOrbit) ++same;
      if (e.cls == EdgeClass::Crossing) ++crossing;
      if (e.cls == EdgeClass::Unknown) ++unknown;
    }
    out << "center " << s.fmt(ball.center) << ", radius " << ball.radius << ": " << ball.vertices.size()
        << " vertices, " << ball.edges.size() << " edges (" << same << " SameOrbit, " << crossing << " Crossing, "
        << unknown << " Unknown), " << ball.orbits.size() << " orbit classes\n";
  }
  return ball.unknown.empty() ? 0 : 2;
}

int cmd_forest(const Session& s, const Settings& st, const std::vector<std::string>& args, std::ostream& out) {
  std::string m = !args.empty() ? args[0] : st.center;
  if (args.size() > 1) throw Error("forest expects one center word");
  BiCayleyBall ball = s.g->build_ball(s.word(m), st.radius.value_or(4));
  QuotientForest q = s.g->quotient_forest(ball);
  bool linear = q.forest;
  for (const QuotientComponent& c : q.components) linear = linear && c.linear;
  std::optional<ExactnessReport> ex;
  if (q.forest) ex = exactness_spotcheck(q);
  if (st.format == "json") {
    nlohmann::ordered_json j;
    j["forest"] = q.forest;
    j["vertices"] = q.vertex_count;
    j["edges"] = q.edge_count;
    j["components"] = nlohmann::ordered_json::array();
    for (const QuotientComponent& c : q.components) {
      j["components"].push_back({{"skeleton", s.alphabet().format(c.skeleton_word, "")}, {"linear", c.linear}});
    }
    if (ex) j["exact"] = ex->passed();
    out << j.dump(2) << "\n";
  } else {
    out << "Forest: " << (q.forest ? "yes" : "no");
    for (const QuotientComponent& c : q.components) {
      out << "; component skeleton: " << s.fmt(c.skeleton_word) << (c.linear ? "" : " (not linear)");
    }
    out << "\n";
    if (!q.forest) out << q.detail << "\n";
    if (ex) {
      out << "exactness: " << ex->vertices << " vertices, " << ex->edges << " edges, " << ex->components
          << " components, boundary rank " << ex->boundary_rank << ": " << (ex->passed() ? "pass" : "fail") << "\n";
    }
  }
  return linear && ex && ex->passed() ? 0 : 1;
}

int cmd_cbasis(const Session& s, const Settings& st, std::ostream& out) {
  std::vector<EdgeBasisElement> c = s.g->compute_C();
  if (st.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const EdgeBasisElement& e : c) {
      j.push_back({{"pre", s.alphabet().format(e.pre, "")},
                   {"a", s.alphabet().name(e.letter)},
                   {"post", s.alphabet().format(e.post, "")}});
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  for (const EdgeBasisElement& e : c) {
    out << "(" << s.fmt(e.pre) << ", " << s.alphabet().name(e.letter) << ", " << s.fmt(e.post) << ")\n";
  }
  return 0;
}

std::string bounds_text(const std::optional<Level>& lower, const std::optional<Level>& upper) {
  if (upper && upper->infinite) return "Hochschild ∞";
  std::string t = upper ? "Hochschild ≤ " + upper->str() : "Hochschild unknown";
  if (lower && upper) t += " (≥ " + lower->str() + ")";
  return t;
}

int cmd_summary(const Session& s, const Settings& st, std::ostream& out) {
  std::optional<GroupAssumption> assumed;
  if (!st.assume_units.empty()) assumed = parse_assumption(st.assume_units);
  ResolutionSummary r = resolution_summary(*s.n, *s.g, assumed);
  nlohmann::ordered_json j = summary_json(r, s.alphabet());
  if (st.format == "json") {
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "Δ = {";
  for (std::size_t i = 0; i < r.delta.size(); ++i) out << (i ? ", " : "") << s.fmt(r.delta[i]);
  out << "}\n";
  out << "|A| = " << r.letter_basis_size << ", |X| = " << r.x_size << ", |Y| = " << r.y_size
      << ", |C| = " << r.edge_basis_size << "\n";
  out << "group of units: " << r.group.description << "\n";
  auto level = [](const nlohmann::ordered_json& v) -> std::optional<Level> {
    if (v.is_null()) return std::nullopt;
    std::string t = v.get<std::string>();
    return t == "inf" ? Level::inf() : Level::of(std::stoul(t));
  };
  const auto& c = j["classification"];
  std::optional<Level> fp = level(c["bi_fp"]);
  out << (fp ? "bi-FP_" + fp->str() : std::string("bi-FP unknown")) << "; "
      << bounds_text(level(c["hochschild"]["lower"]), level(c["hochschild"]["upper"])) << "\n";
  for (const std::string& cv : r.finiteness.caveats) out << "caveat: " << cv << "\n";
  return 0;
}

int cmd_classify(const std::string& path, const Settings& st, std::ostream& out) {
  Presentation p = parse_presentation_text(read_file(path));
  const Alphabet& A = p.alphabet;
  nlohmann::ordered_json j;
  std::string text;
  if (p.is_special() && p.relations.size() == 1) {
    OneRelatorReport r = theorem_b_classify(SpecialPresentation::from(p));
    j["branch"] = "one-relator special";
    j["relator"] = A.format(r.relator, "");
    j["proper_power"] = r.proper_power;
    std::optional<Level> lower;
    if (r.proper_power) lower = r.hochschild_lower;
    j["classification"] = classification_json(r.bi_fp, lower, r.hochschild_upper);
    text = "one-relator special; ";
    text += r.proper_power ? "proper power " + (r.root.size() > 1 ? "(" + A.format(r.root) + ")" : A.format(r.root)) + "^" + std::to_string(r.exponent)
                         : "not a proper power";
    text += "; bi-FP_" + r.bi_fp.str() + "; " + bounds_text(std::nullopt, r.hochschild_upper);
  } else if (p.relations.size() == 1) {
    const auto& [u, v] = p.relations.front();
    Compressibility c = compressibility(u, v);
    j["branch"] = c.compressible ? "compressible" : "incompressible";
    j["relation"] = A.format(u, "") + " = " + A.format(v, "");
    if (c.compressible) {
      j["r"] = A.format(c.r, "");
      j["classification"] = classification_json(std::nullopt, std::nullopt, std::nullopt);
      text = "one-relator nonspecial; compressible with r = " + A.format(c.r) + "; no conclusion";
    } else {
      j["classification"] = classification_json(Level::inf(), std::nullopt, Level::of(2));
      text = "one-relator nonspecial; incompressible; bi-FP_∞; Hochschild ≤ 2";
    }
  } else if (p.is_special()) {
    OracleConfig cfg = OracleConfig{}.scaled(budget_scale());
    Oracle oracle(SpecialPresentation::from(p), cfg);
    UnitAnalyzer units(oracle);
    GroupAssumption g = st.assume_units.empty() ? derive_group_assumption(units) : parse_assumption(st.assume_units);
    FinitenessReport r = theorem_a_report(g);
    j["branch"] = "special";
    j["group"] = g.description;
    j["classification"] = classification_json(r.bi_fp, r.hochschild_lower, r.hochschild_upper);
    text = "special; group of units: " + g.description + "; " +
           (r.bi_fp ? "bi-FP_" + r.bi_fp->str() : std::string("bi-FP unknown")) + "; " +
           bounds_text(r.hochschild_lower, r.hochschild_upper);
  } else {
    j["branch"] = "none";
    j["classification"] = classification_json(std::nullopt, std::nullopt, std::nullopt);
    text = "no classification applies to several nonspecial relations";
  }
  if (st.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << text << "\n";
  }
  return 0;
}

int cmd_compress(const std::string& path, const Settings& st, const std::vector<std::string>& args, std::ostream& out) {
  if (args.size() != 2) throw Error("compress expects two words u v");
  Presentation p = parse_presentation_text(read_file(path));
  Word u = p.alphabet.parse(args[0]);
  Word v = p.alphabet.parse(args[1]);
  Compressibility c = compressibility(u, v);
  if (st.format == "json") {
    nlohmann::ordered_json j{{"compressible", c.compressible}};
    j["r"] = c.compressible ? nlohmann::ordered_json(p.alphabet.format(c.r, "")) : nlohmann::ordered_json();
    out << j.dump(2) << "\n";
  } else if (c.compressible) {
    out << "Compressible(r = " << p.alphabet.format(c.r) << ")\n";
  } else {
    out << "Incompressible\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"special monoid toolkit", "smtk"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings st;
  app.add_option("--format", st.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--radius", st.radius, "ball or audit radius");
  app.add_option("--dot", st.dot, "write the ball as DOT to this file");
  app.add_option("--center", st.center, "center word for ball and forest");
  app.add_option("--kb-max-rules", st.kb_max_rules)->check(CLI::PositiveNumber);
  app.add_option("--kb-max-iters", st.kb_max_iters)->check(CLI::PositiveNumber);
  app.add_option("--search-radius", st.search_radius)->check(CLI::PositiveNumber);
  app.add_option("--max-word-len", st.max_word_len)->check(CLI::PositiveNumber);
  app.add_option("--assume-units", st.assume_units, "assertion about the group of units, e.g. \"fp=inf cd=2\"");

  std::string path;
  std::vector<std::string> words;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"delta", "minimal invertible words and their inverses"},
      {"units", "presentation of the group of units"},
      {"reduce", "reduced form of a word"},
      {"ozf", "Otto-Zhang normal form of a word"},
      {"invert", "invertibility of a word"},
      {"ngens", "generators X and Y of N"},
      {"nnf", "free product normal form of (u, v) in N"},
      {"pingpong", "ping-pong audit on a ball of N"},
      {"ball", "ball of the two-sided Cayley graph"},
      {"forest", "quotient forest check of a ball"},
      {"cbasis", "edge basis C"},
      {"summary", "resolution summary and finiteness report"},
      {"classify", "one-relator classification"},
      {"compress", "compressibility of a pair of words"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("presentation", path, "presentation file")->required();
    sub->add_option("words", words, "word arguments");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  try {
    if (cmd == "classify") return cmd_classify(path, st, out);
    if (cmd == "compress") return cmd_compress(path, st, words, out);
    Session s = open_session(path, st);
    if (cmd == "delta") return cmd_delta(s, st, out);
    if (cmd == "units") return cmd_units(s, st, out);
    if (cmd == "reduce") return cmd_reduce(s, st, words, out);
    if (cmd == "ozf") return cmd_ozf(s, st, words, out);
    if (cmd == "invert") return cmd_invert(s, st, words, out);
    if (cmd == "ngens") return cmd_ngens(s, st, out);
    if (cmd == "nnf") return cmd_nnf(s, st, words, out);
    if (cmd == "pingpong") return cmd_pingpong(s, st, out);
    if (cmd == "ball") return cmd_ball(s, st, words, out);
    if (cmd == "forest") return cmd_forest(s, st, words, out);
    if (cmd == "cbasis") return cmd_cbasis(s, st, out);
    if (cmd == "summary") return cmd_summary(s, st, out);
  } catch (const Inconclusive& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  err << "unknown command " << cmd << "\n";
  return 1;
}

}  // namespace smtk::cli
