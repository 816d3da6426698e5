#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "smtk/special.hpp"

namespace smtk {

// (u, v) with u right-invertible, v left-invertible and uv = 1; both parts
// are kept reduced so equality is graphical.
struct NElement {
  Word right_part;
  Word left_part;

  friend bool operator==(const NElement&, const NElement&) = default;
};

struct XElement {
  NElement element;  // (delta_1, reduce(delta_2 delta^{-1}))
  Word delta;        // delta_1 delta_2
  std::size_t split = 0;  // |delta_1|
};

struct YElement {
  NElement element;  // (reduce(delta), delta^{-1})
  Word delta;
  bool identity = false;  // delta = 1 in M
};

struct GeneratorSets {
  std::vector<XElement> X;
  std::vector<YElement> Y;

  // Index of p in X, or npos.
  [[nodiscard]] std::size_t x_index(const NElement& p) const;
};

struct GSyllable {
  Word g;  // reduced invertible word, not equal to 1
};
struct XSyllable {
  std::size_t x = 0;  // index into GeneratorSets::X
  std::size_t power = 1;
};
using Syllable = std::variant<GSyllable, XSyllable>;

struct FpNormalForm {
  std::vector<Syllable> syllables;
};

struct AuditCheck {
  std::string name;
  bool passed = true;
  std::size_t tested = 0;
  std::vector<std::string> witnesses;  // violations, capped
};

struct AuditReport {
  std::size_t radius = 0;
  std::size_t ball_size = 0;
  std::size_t g_sample_size = 0;
  std::vector<AuditCheck> checks;
  std::vector<std::string> inconclusive;

  [[nodiscard]] bool passed() const;
};

class Biset {
 public:
  explicit Biset(const UnitAnalyzer& units);

  [[nodiscard]] const UnitAnalyzer& units() const noexcept { return units_; }

  // Reduces both parts and certifies membership in N; throws NonInvertibleInput.
  [[nodiscard]] NElement make(const Word& u, const Word& v) const;
  [[nodiscard]] bool is_member(const NElement& p) const;
  // (a, b)(x, y) = (ax, yb)
  [[nodiscard]] NElement mul(const NElement& p, const NElement& q) const;
  [[nodiscard]] NElement power(const NElement& p, std::size_t k) const;
  // (g, g^{-1}) for an invertible g.
  [[nodiscard]] NElement from_unit(const Word& g) const;

  [[nodiscard]] std::vector<XElement> gen_X() const;
  [[nodiscard]] std::vector<YElement> gen_Y() const;
  [[nodiscard]] const GeneratorSets& generators() const;

  [[nodiscard]] FpNormalForm normal_form(const NElement& p) const;
  [[nodiscard]] NElement evaluate(const FpNormalForm& nf) const;
  [[nodiscard]] std::string format(const FpNormalForm& nf) const;
  [[nodiscard]] std::string format(const NElement& p) const;

  // p = q x for some q in N; q is unique when it exists.
  [[nodiscard]] std::optional<NElement> right_quotient(const NElement& p, const NElement& x) const;

  // Every element of N with |u|, |v| <= radius, in short-lex order of (u, v).
  [[nodiscard]] std::vector<NElement> ball(std::size_t radius) const;

  // g_sample_length bounds the reduced Delta*-words used as nontrivial units.
  [[nodiscard]] AuditReport ping_pong_audit(std::size_t radius, std::size_t g_sample_length = 2) const;

 private:
  const UnitAnalyzer& units_;
  mutable std::optional<GeneratorSets> gens_;
};

[[nodiscard]] NElement n_mul(const Biset& n, const NElement& p, const NElement& q);

}  // namespace smtk
