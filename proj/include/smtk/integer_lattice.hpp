#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace smtk {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;  // row-major

// A sublattice of Z^n kept in row Hermite normal form. Reducing a vector
// yields a canonical representative of its coset, so two vectors are
// congruent modulo the lattice iff their reductions coincide.
class IntegerLattice {
 public:
  IntegerLattice(std::size_t dimension, const IntMatrix& generators);

  [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
  [[nodiscard]] std::size_t rank() const noexcept { return basis_.size(); }
  [[nodiscard]] const IntMatrix& basis() const noexcept { return basis_; }

  [[nodiscard]] IntVector reduce(IntVector v) const;
  [[nodiscard]] bool contains(const IntVector& v) const;

 private:
  std::size_t dimension_;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

// Rank over Q of an integer matrix, by fraction-free elimination.
[[nodiscard]] std::size_t integer_rank(IntMatrix m);

}  // namespace smtk
