#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "heisenhom/algebra.hpp"
#include "heisenhom/field.hpp"

namespace heisenhom {

/// Row-major matrix over GF(p) with entries reduced into [0, p-1].
class DenseMatrixGFp {
 public:
  DenseMatrixGFp(FieldChar field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  FieldChar field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = field_.reduce(v); }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

 private:
  FieldChar field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// GF(2) matrix with each row packed into 64-bit words. Pad bits past the
/// last column are kept zero.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_per_row_((cols + kWordBits - 1) / kWordBits),
        data_(rows * words_per_row_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_per_row_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_per_row_ + c / kWordBits] >> (c % kWordBits)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    auto& w = data_[r * words_per_row_ + c / kWordBits];
    const Word bit = Word{1} << (c % kWordBits);
    w = v ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t r, std::size_t c) {
    data_[r * words_per_row_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  std::span<Word> row(std::size_t r) { return {data_.data() + r * words_per_row_, words_per_row_}; }
  std::span<const Word> row(std::size_t r) const {
    return {data_.data() + r * words_per_row_, words_per_row_};
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_per_row_;
  std::vector<Word> data_;
};

/// Rank over GF(p) by Gaussian elimination on a private copy.
std::size_t rank(const DenseMatrixGFp& m);

/// Rank over GF(2) by word-parallel XOR elimination on a private copy.
std::size_t rank_gf2(const BitMatrix& m);

DenseMatrixGFp to_dense(const BoundaryMap& map);
/// Requires map.field to be GF(2).
BitMatrix to_bits(const BoundaryMap& map);

/// Rank of a boundary map, using the packed kernel in characteristic 2.
std::size_t rank(const BoundaryMap& map);

/// Default cap on the algebra dimension accepted by the rank route.
inline constexpr std::size_t kDefaultDimCap = 29;

/// Rank of d: Lambda^degree -> Lambda^(degree-1), computed block by block
/// when the algebra carries a grading (the differential preserves weight).
std::size_t differential_rank(const LieAlgebra& alg, int degree, FieldChar field);

/// b_i = C(dim, i) - rank d_i - rank d_(i+1) for i = 0..dim.
/// Throws ResourceCap when alg.dim() > dim_cap.
std::vector<std::uint64_t> betti_numbers(const LieAlgebra& alg, FieldChar field,
                                         std::size_t dim_cap = kDefaultDimCap);

}  // namespace heisenhom
