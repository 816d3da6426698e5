#include "smtk/integer_lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace smtk {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void axpy(IntVector& y, std::int64_t a, const IntVector& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

}  // namespace

IntegerLattice::IntegerLattice(std::size_t dimension, const IntMatrix& generators)
    : dimension_(dimension) {
  IntMatrix rows;
  for (const IntVector& g : generators) {
    if (g.size() != dimension) throw std::invalid_argument("generator dimension mismatch");
    rows.push_back(g);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < dimension && r < rows.size(); ++c) {
    // Euclid on column c among rows r.. until a single nonzero entry remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] != 0 && (best == rows.size() || std::llabs(rows[i][c]) < std::llabs(rows[best][c]))) {
          best = i;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        axpy(rows[i], -(rows[i][c] / rows[r][c]), rows[r]);
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0) {
      for (auto& x : rows[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) axpy(rows[i], -floor_div(rows[i][c], rows[r][c]), rows[r]);
    pivots_.push_back(c);
    ++r;
  }
  rows.resize(r);
  basis_ = std::move(rows);
}

IntVector IntegerLattice::reduce(IntVector v) const {
  if (v.size() != dimension_) throw std::invalid_argument("vector dimension mismatch");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    std::size_t c = pivots_[i];
    axpy(v, -floor_div(v[c], basis_[i][c]), basis_[i]);
  }
  return v;
}

bool IntegerLattice::contains(const IntVector& v) const {
  IntVector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
}

std::size_t integer_rank(IntMatrix m) {
  std::size_t rank = 0;
  std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[rank], m[p]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      std::int64_t a = m[rank][c];
      std::int64_t b = m[i][c];
      std::int64_t g = std::gcd(a, b);
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = (a / g) * m[i][j] - (b / g) * m[rank][j];
      std::int64_t row_gcd = 0;
      for (std::int64_t x : m[i]) row_gcd = std::gcd(row_gcd, x);
      if (row_gcd > 1) {
        for (auto& x : m[i]) x /= row_gcd;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace smtk
