#include "heisenhom/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "heisenhom/errors.hpp"

namespace heisenhom {

std::size_t rank(const DenseMatrixGFp& input) {
  DenseMatrixGFp m = input;
  const FieldChar f = m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(r).begin());

    auto pivot_row = m.row(r);
    const Scalar inv = f.inverse(pivot_row[c]);
    for (std::size_t k = c; k < m.cols(); ++k) pivot_row[k] = f.mul(pivot_row[k], inv);

    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      auto target = m.row(i);
      const Scalar factor = target[c];
      if (factor == 0) continue;
      for (std::size_t k = c; k < m.cols(); ++k) {
        target[k] = f.sub(target[k], f.mul(factor, pivot_row[k]));
      }
    }
    ++r;
  }
  return r;
}

std::size_t rank_gf2(const BitMatrix& input) {
  BitMatrix m = input;
  const std::size_t wpr = m.words_per_row();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    const std::size_t word = c / BitMatrix::kWordBits;
    const BitMatrix::Word bit = BitMatrix::Word{1} << (c % BitMatrix::kWordBits);
    std::size_t pivot = r;
    while (pivot < m.rows() && (m.row(pivot)[word] & bit) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(r).begin());

    auto pivot_row = m.row(r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      auto target = m.row(i);
      if ((target[word] & bit) == 0) continue;
      // Words left of `word` are already zero in the pivot row.
      for (std::size_t k = word; k < wpr; ++k) target[k] ^= pivot_row[k];
    }
    ++r;
  }
  return r;
}

DenseMatrixGFp to_dense(const BoundaryMap& map) {
  DenseMatrixGFp m(map.field, map.rows(), map.cols());
  for (const auto& e : map.entries) m.set(e.row, e.col, e.value);
  return m;
}

BitMatrix to_bits(const BoundaryMap& map) {
  if (!map.field.is_two()) throw Error("bit-packed matrices require characteristic 2");
  BitMatrix m(map.rows(), map.cols());
  for (const auto& e : map.entries) m.set(e.row, e.col, (e.value & 1u) != 0);
  return m;
}

std::size_t rank(const BoundaryMap& map) {
  return map.field.is_two() ? rank_gf2(to_bits(map)) : rank(to_dense(map));
}

namespace {

// A cell together with a hash of its weight. The hash is linear in the
// weight, so equal weights give equal keys; distinct weights that collide
// only merge two diagonal blocks, which leaves the rank unchanged.
struct KeyedCell {
  std::uint64_t key;
  Cell cell;
  friend auto operator<=>(const KeyedCell&, const KeyedCell&) = default;
};

std::vector<std::uint64_t> generator_keys(const LieAlgebra& alg) {
  std::vector<std::uint64_t> keys(alg.dim(), 0);
  if (!alg.graded()) return keys;
  for (std::size_t g = 0; g < alg.dim(); ++g) {
    const auto& w = alg.weights()[g];
    for (std::size_t k = 0; k < w.size(); ++k) {
      // splitmix64 of the coordinate index as the random multiplier
      std::uint64_t r = (k + 1) * 0x9E3779B97F4A7C15ull;
      r = (r ^ (r >> 30)) * 0xBF58476D1CE4E5B9ull;
      r = (r ^ (r >> 27)) * 0x94D049BB133111EBull;
      r ^= r >> 31;
      keys[g] += static_cast<std::uint64_t>(static_cast<std::int64_t>(w[k])) * r;
    }
  }
  return keys;
}

std::vector<KeyedCell> keyed_cells(const LieAlgebra& alg, int degree,
                                   const std::vector<std::uint64_t>& gen_keys) {
  std::vector<KeyedCell> out;
  out.reserve(binomial(static_cast<std::int64_t>(alg.dim()), degree));
  for_each_cell(alg, degree, [&](Cell c) {
    std::uint64_t key = 0;
    for (std::uint64_t m = c.mask(); m != 0; m &= m - 1) {
      key += gen_keys[static_cast<std::size_t>(std::countr_zero(m))];
    }
    out.push_back({key, c});
  });
  std::sort(out.begin(), out.end());
  return out;
}

using Range = std::span<const KeyedCell>;

std::size_t block_rank(const LieAlgebra& alg, Range rows, Range cols, FieldChar field) {
  if (rows.empty() || cols.empty()) return 0;
  auto row_index = [&](Cell c) {
    const KeyedCell probe{rows.front().key, c};
    return static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), probe) -
                                    rows.begin());
  };
  // Rank is transpose invariant; put the shorter side along the rows so the
  // elimination touches fewer words per row operation.
  const bool transpose = cols.size() < rows.size();
  const std::size_t nr = transpose ? cols.size() : rows.size();
  const std::size_t nc = transpose ? rows.size() : cols.size();
  if (field.is_two()) {
    BitMatrix m(nr, nc);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      visit_differential(alg, cols[j].cell, [&](Cell target, std::int64_t coeff) {
        if ((coeff & 1) == 0) return;
        const auto i = row_index(target);
        transpose ? m.flip(j, i) : m.flip(i, j);
      });
    }
    return rank_gf2(m);
  }
  DenseMatrixGFp m(field, nr, nc);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    visit_differential(alg, cols[j].cell, [&](Cell target, std::int64_t coeff) {
      const auto i = row_index(target);
      const std::size_t r = transpose ? j : i;
      const std::size_t c = transpose ? i : j;
      m.set(r, c, static_cast<std::int64_t>(m.at(r, c)) + field.reduce(coeff));
    });
  }
  return rank(m);
}

}  // namespace

std::size_t differential_rank(const LieAlgebra& alg, int degree, FieldChar field) {
  if (degree < 1 || degree > static_cast<int>(alg.dim())) return 0;
  const auto gen_keys = generator_keys(alg);
  const auto cols = keyed_cells(alg, degree, gen_keys);
  const auto rows = keyed_cells(alg, degree - 1, gen_keys);
  auto by_key = [](const KeyedCell& a, const KeyedCell& b) { return a.key < b.key; };
  std::size_t total = 0;
  for (auto it = cols.begin(); it != cols.end();) {
    auto block_end = std::upper_bound(it, cols.end(), *it, by_key);
    // Rows of another weight cannot receive these columns.
    auto [row_begin, row_end] = std::equal_range(rows.begin(), rows.end(), *it, by_key);
    total += block_rank(alg, Range(row_begin, row_end), Range(it, block_end), field);
    it = block_end;
  }
  return total;
}

std::vector<std::uint64_t> betti_numbers(const LieAlgebra& alg, FieldChar field,
                                         std::size_t dim_cap) {
  if (alg.dim() > dim_cap) {
    throw ResourceCap("algebra dimension " + std::to_string(alg.dim()) + " exceeds cap " +
                      std::to_string(dim_cap));
  }
  const int dim = static_cast<int>(alg.dim());
  // ranks[k] = rank of d_k; d_0 and d_(dim+1) are zero maps.
  std::vector<std::uint64_t> ranks(static_cast<std::size_t>(dim) + 2, 0);
  for (int k = 1; k <= dim; ++k) ranks[k] = differential_rank(alg, k, field);
  std::vector<std::uint64_t> betti;
  for (int i = 0; i <= dim; ++i) betti.push_back(binomial(dim, i) - ranks[i] - ranks[i + 1]);
  return betti;
}

}  // namespace heisenhom
