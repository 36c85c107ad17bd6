#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "heisenhom/algebra.hpp"
#include "heisenhom/morse.hpp"
#include "heisenhom/polynomial.hpp"

namespace heisenhom::heisenberg {

/// Subset of [n] = {1..n} stored as a bitmask; element i lives in bit i-1.
using IndexSet = std::uint32_t;

/// Largest n whose cells still fit the IndexSet and Cell encodings.
inline constexpr std::size_t kMaxN = 31;

/// The cell z^x_I^y_J (with_z) or x_I^y_J of h_n.
struct IJPair {
  IndexSet I = 0;
  IndexSet J = 0;
  bool with_z = false;
  friend bool operator==(const IJPair&, const IJPair&) = default;
};

Cell to_cell(std::size_t n, IJPair pair);
IJPair from_cell(std::size_t n, Cell cell);

/// Cell in z, x_i, y_i notation joined by '^'; the empty cell prints as "1".
std::string format_cell(std::size_t n, Cell cell);

/// Largest element of a nonempty index set, 0 for the empty set (read as
/// minus infinity; real elements start at 1).
int max_element(IndexSet s);

/// Edges x_I^y_J -> z^x_(I-k)^y_(J-k), k = max(I n J), whenever I n J is
/// nonempty and max(I^c n J^c) < k.
MorseMatching heisenberg_matching(std::size_t n);

enum class CellRole { MatchedSource, MatchedTarget, CriticalZ, CriticalPlain };

std::string to_string(CellRole role);

/// Role of a cell computed directly from the max-conditions, without
/// building the matching.
CellRole classify_cell(std::size_t n, IJPair pair);

/// Explicit projection of a critical plain cell over GF(2):
/// x_I^y_J + sum over i in I n J of x_((I-i)+m)^y_((J-i)+m), m = max(I^c n J^c).
/// Throws NotCritical for matched cells.
ChainVector projection_pi(std::size_t n, IndexSet I, IndexSet J);

struct PiReport {
  std::size_t plain_checked = 0;
  std::size_t z_checked = 0;
  std::vector<Cell> witnesses;  // critical cells with d(pi(c)) != 0
  bool ok() const { return witnesses.empty(); }
};

/// Applies the differential (p = 2) to pi of every critical cell of h_n.
PiReport verify_pi_closed(std::size_t n);

/// Stratum contribution for L = I u J in the u_i = x_i^y_i coordinates:
/// (1+t)(2t)^n when L = [n], otherwise (1+t^3)(2t)^|L|(1+t^2)^(n-|L|-1).
IntPolynomial critical_count_stratified(std::size_t n, IndexSet L);

/// Per-stratum census of the given critical cells: for each L, the sum of
/// t^degree over critical cells whose x/y-unpaired indices form L.
std::map<IndexSet, IntPolynomial> critical_census_by_stratum(
    std::size_t n, const std::vector<std::vector<VertexId>>& critical);

/// ((1+t^3)(1+t)^(2n) + (t+t^2)(2t)^n) / (1+t^2), divided exactly.
IntPolynomial betti_generating_function(std::size_t n);

/// The numerator of betti_generating_function before division.
IntPolynomial generating_function_numerator(std::size_t n);

/// C(2n, i) - C(2n, i-2) for 0 <= i <= n; throws OutOfStatedRange otherwise.
BigInt betti_char0(std::size_t n, std::size_t i);

}  // namespace heisenhom::heisenberg
