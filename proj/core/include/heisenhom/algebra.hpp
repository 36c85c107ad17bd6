#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heisenhom/errors.hpp"
#include "heisenhom/field.hpp"

namespace heisenhom {

/// Basis monomial of the exterior algebra: a wedge of distinct generators in
/// canonical (ascending index) order, stored as a bitmask.
class Cell {
 public:
  constexpr Cell() = default;
  constexpr explicit Cell(std::uint64_t mask) : mask_(mask) {}

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int degree() const { return std::popcount(mask_); }
  constexpr bool contains(std::size_t generator) const { return (mask_ >> generator) & 1u; }

  friend constexpr auto operator<=>(Cell, Cell) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Sparse GF(p) combination of cells of a single degree. Zero scalars are
/// never stored.
class ChainVector {
 public:
  explicit ChainVector(FieldChar field) : field_(field) {}

  FieldChar field() const { return field_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  /// Degree of the stored cells; empty for the zero chain.
  std::optional<int> degree() const;

  /// Adds `value * cell`, dropping the entry if it cancels to zero.
  void add(Cell cell, Scalar value);
  Scalar coefficient(Cell cell) const;
  void scale(Scalar factor);
  void add_scaled(const ChainVector& other, Scalar factor);

  const std::map<Cell, Scalar>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const ChainVector&, const ChainVector&) = default;

 private:
  FieldChar field_;
  std::map<Cell, Scalar> entries_;
};

struct BracketTerm {
  std::size_t generator;
  std::int64_t coefficient;
};

/// One structure-constant entry: [left, right] = sum of terms.
struct BracketEntry {
  std::size_t left;
  std::size_t right;
  std::vector<BracketTerm> terms;
};

/// Finite-dimensional Lie algebra given by integer structure constants.
///
/// Brackets are stored for every ordered pair; the antisymmetric closure of
/// the supplied entries is filled in at construction. An optional grading
/// assigns an integer weight vector to each generator such that every bracket
/// is homogeneous; the chain complex then splits by weight, which the rank
/// computation exploits.
class LieAlgebra {
 public:
  /// Largest dimension representable by 64-bit cell masks.
  static constexpr std::size_t kMaxDim = 63;

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& generator_names() const { return names_; }

  std::span<const BracketTerm> bracket(std::size_t a, std::size_t b) const {
    return table_[a * dim_ + b];
  }
  /// Ordered pairs (a, b), a < b, with a nonzero bracket.
  const std::vector<std::pair<std::size_t, std::size_t>>& nonzero_pairs() const {
    return nonzero_pairs_;
  }

  bool graded() const { return !weights_.empty(); }
  const std::vector<std::vector<int>>& weights() const { return weights_; }

  friend LieAlgebra make_lie_algebra(std::size_t, const std::vector<BracketEntry>&,
                                     std::vector<std::string>, std::vector<std::vector<int>>);
  friend LieAlgebra make_lie_algebra_unchecked(std::size_t, const std::vector<BracketEntry>&,
                                               std::vector<std::string>);

 private:
  LieAlgebra() = default;

  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<BracketTerm>> table_;
  std::vector<std::pair<std::size_t, std::size_t>> nonzero_pairs_;
  std::vector<std::vector<int>> weights_;
};

/// Builds an algebra from structure constants, validating antisymmetry,
/// the Jacobi identity and (when weights are supplied) homogeneity.
LieAlgebra make_lie_algebra(std::size_t dim, const std::vector<BracketEntry>& entries,
                            std::vector<std::string> names = {},
                            std::vector<std::vector<int>> weights = {});

/// Same as make_lie_algebra but skips the antisymmetry-consistency and Jacobi
/// checks. Only useful for exercising failure paths of the complex.
LieAlgebra make_lie_algebra_unchecked(std::size_t dim, const std::vector<BracketEntry>& entries,
                                      std::vector<std::string> names = {});

/// The Heisenberg algebra h_n with generator order z < x_1 < ... < x_n <
/// y_1 < ... < y_n and the single family of brackets [x_i, y_i] = z.
/// Graded by weight(x_i) = e_i, weight(y_i) = -e_i, weight(z) = 0.
LieAlgebra heisenberg_algebra(std::size_t n);

/// Calls fn(target_cell, signed_integer_coefficient) for each term of the
/// Chevalley-Eilenberg differential of `cell`, before reduction. A target may
/// be reported more than once; callers sum the contributions.
template <typename Fn>
void visit_differential(const LieAlgebra& alg, Cell cell, Fn&& fn) {
  const std::uint64_t mask = cell.mask();
  for (auto [a, b] : alg.nonzero_pairs()) {
    if (!cell.contains(a) || !cell.contains(b)) continue;
    // 1-based positions of a < b inside the sorted wedge.
    const int pos_a = std::popcount(mask & ((std::uint64_t{1} << a) - 1)) + 1;
    const int pos_b = std::popcount(mask & ((std::uint64_t{1} << b) - 1)) + 1;
    const bool odd = ((pos_a + pos_b) & 1) != 0;
    const std::uint64_t rest = mask & ~(std::uint64_t{1} << a) & ~(std::uint64_t{1} << b);
    for (const auto& t : alg.bracket(a, b)) {
      if ((rest >> t.generator) & 1u) continue;
      // Moving the new generator to its sorted slot passes the generators below it.
      const int passes = std::popcount(rest & ((std::uint64_t{1} << t.generator) - 1));
      const bool negative = odd != ((passes & 1) != 0);
      fn(Cell(rest | (std::uint64_t{1} << t.generator)),
         negative ? -t.coefficient : t.coefficient);
    }
  }
}

/// Chevalley-Eilenberg differential of a single cell, reduced mod p.
ChainVector differential(const LieAlgebra& alg, Cell cell, FieldChar field);

/// Differential extended linearly to chains.
ChainVector differential(const LieAlgebra& alg, const ChainVector& chain);

/// Calls fn(cell) for every cell of the given degree, ascending by mask.
/// Throws IndexOutOfRange unless 0 <= degree <= dim.
template <typename Fn>
void for_each_cell(const LieAlgebra& alg, int degree, Fn&& fn) {
  const auto dim = static_cast<int>(alg.dim());
  if (degree < 0 || degree > dim) throw IndexOutOfRange("degree outside [0, dim]");
  if (degree == 0) {
    fn(Cell(0));
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << dim;
  std::uint64_t v = (std::uint64_t{1} << degree) - 1;
  // Gosper's hack walks same-popcount masks in ascending order.
  while (v < limit) {
    fn(Cell(v));
    const std::uint64_t c = v & -v;
    const std::uint64_t r = v + c;
    if (r == 0) break;
    v = (((r ^ v) >> 2) / c) | r;
  }
}

/// All cells of the given degree, ascending by mask. This order fixes the
/// row and column indexing of every boundary matrix.
std::vector<Cell> enumerate_cells(const LieAlgebra& alg, int degree);

/// Matrix of d: Lambda^degree -> Lambda^(degree-1) in coordinate form.
struct BoundaryMap {
  struct Entry {
    std::size_t row;
    std::size_t col;
    Scalar value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  int degree = 0;
  FieldChar field{2};
  std::vector<Cell> row_cells;
  std::vector<Cell> col_cells;
  /// Column-major, rows ascending within a column, values in [1, p-1].
  std::vector<Entry> entries;

  std::size_t rows() const { return row_cells.size(); }
  std::size_t cols() const { return col_cells.size(); }
};

BoundaryMap boundary_matrix(const LieAlgebra& alg, int degree, FieldChar field);

struct DSquaredReport {
  /// Cells c with d(d(c)) != 0.
  std::vector<Cell> witnesses;
  bool ok() const { return witnesses.empty(); }
};

/// Checks d o d = 0 on every cell of every degree.
DSquaredReport verify_d_squared(const LieAlgebra& alg, FieldChar field);

/// Binomial coefficient for small arguments; 0 when k is out of range.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace heisenhom
