#include "heisenhom/heisenberg.hpp"

#include <bit>

#include "heisenhom/errors.hpp"

namespace heisenhom::heisenberg {

namespace {

IndexSet full_set(std::size_t n) {
  return n == 0 ? 0 : static_cast<IndexSet>((std::uint64_t{1} << n) - 1);
}

BigInt big_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_n(std::size_t n) {
  if (n > kMaxN) throw ResourceCap("Heisenberg parameter n must not exceed 31");
}

}  // namespace

Cell to_cell(std::size_t n, IJPair pair) {
  std::uint64_t mask = pair.with_z ? 1u : 0u;
  mask |= std::uint64_t{pair.I} << 1;
  mask |= std::uint64_t{pair.J} << (n + 1);
  return Cell(mask);
}

IJPair from_cell(std::size_t n, Cell cell) {
  const std::uint64_t full = full_set(n);
  return IJPair{static_cast<IndexSet>((cell.mask() >> 1) & full),
                static_cast<IndexSet>((cell.mask() >> (n + 1)) & full), (cell.mask() & 1u) != 0};
}

std::string format_cell(std::size_t n, Cell cell) {
  if (cell.mask() == 0) return "1";
  const IJPair p = from_cell(n, cell);
  std::string out;
  auto append = [&](const std::string& s) {
    if (!out.empty()) out += '^';
    out += s;
  };
  if (p.with_z) append("z");
  for (std::size_t i = 1; i <= n; ++i) {
    if ((p.I >> (i - 1)) & 1u) append("x" + std::to_string(i));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if ((p.J >> (i - 1)) & 1u) append("y" + std::to_string(i));
  }
  return out;
}

int max_element(IndexSet s) { return s == 0 ? 0 : std::bit_width(s); }

MorseMatching heisenberg_matching(std::size_t n) {
  require_n(n);
  MorseMatching m;
  const IndexSet full = full_set(n);
  for (std::uint64_t I = 0; I <= full; ++I) {
    for (std::uint64_t J = 0; J <= full; ++J) {
      const auto i = static_cast<IndexSet>(I);
      const auto j = static_cast<IndexSet>(J);
      const IndexSet both = i & j;
      if (both == 0) continue;
      const int k = max_element(both);
      if (max_element(full & ~(i | j)) >= k) continue;
      const IndexSet drop = IndexSet{1} << (k - 1);
      m.edges.push_back({to_cell(n, {i, j, false}).mask(),
                         to_cell(n, {i & ~drop, j & ~drop, true}).mask()});
    }
  }
  return m;
}

std::string to_string(CellRole role) {
  switch (role) {
    case CellRole::MatchedSource: return "MatchedSource";
    case CellRole::MatchedTarget: return "MatchedTarget";
    case CellRole::CriticalZ: return "CriticalZ";
    case CellRole::CriticalPlain: return "CriticalPlain";
  }
  return "?";
}

CellRole classify_cell(std::size_t n, IJPair pair) {
  const IndexSet both = pair.I & pair.J;
  const IndexSet neither = full_set(n) & ~(pair.I | pair.J);
  // J = complement of I: both sets empty, the cell lies in the L = [n] stratum.
  const bool degenerate = both == 0 && neither == 0;
  const bool below = max_element(neither) < max_element(both);
  if (pair.with_z) return degenerate || below ? CellRole::CriticalZ : CellRole::MatchedTarget;
  return !degenerate && below ? CellRole::MatchedSource : CellRole::CriticalPlain;
}

ChainVector projection_pi(std::size_t n, IndexSet I, IndexSet J) {
  if (classify_cell(n, {I, J, false}) != CellRole::CriticalPlain) {
    throw NotCritical("x_I^y_J is matched; projection is defined on critical cells only");
  }
  ChainVector out(FieldChar(2));
  out.add(to_cell(n, {I, J, false}), 1);
  const IndexSet both = I & J;
  if (both == 0) return out;
  const int m = max_element(full_set(n) & ~(I | J));
  const IndexSet add = IndexSet{1} << (m - 1);
  for (IndexSet rest = both; rest != 0; rest &= rest - 1) {
    const IndexSet drop = rest & -rest;
    out.add(to_cell(n, {(I & ~drop) | add, (J & ~drop) | add, false}), 1);
  }
  return out;
}

PiReport verify_pi_closed(std::size_t n) {
  require_n(n);
  const LieAlgebra alg = heisenberg_algebra(n);
  const FieldChar gf2(2);
  PiReport report;
  const IndexSet full = full_set(n);
  for (std::uint64_t I = 0; I <= full; ++I) {
    for (std::uint64_t J = 0; J <= full; ++J) {
      const auto i = static_cast<IndexSet>(I);
      const auto j = static_cast<IndexSet>(J);
      if (classify_cell(n, {i, j, false}) == CellRole::CriticalPlain) {
        ++report.plain_checked;
        if (!differential(alg, projection_pi(n, i, j)).is_zero()) {
          report.witnesses.push_back(to_cell(n, {i, j, false}));
        }
      }
      if (classify_cell(n, {i, j, true}) == CellRole::CriticalZ) {
        ++report.z_checked;
        const Cell c = to_cell(n, {i, j, true});
        if (!differential(alg, c, gf2).is_zero()) report.witnesses.push_back(c);
      }
    }
  }
  return report;
}

IntPolynomial critical_count_stratified(std::size_t n, IndexSet L) {
  const IndexSet full = full_set(n);
  if ((L & ~full) != 0) throw IndexOutOfRange("stratum L must be a subset of [n]");
  const auto size = static_cast<unsigned>(std::popcount(L));
  const IntPolynomial two_t = IntPolynomial::monomial(2, 1);
  if (L == full) return IntPolynomial{1, 1} * poly_pow(two_t, size);
  return IntPolynomial{1, 0, 0, 1} * poly_pow(two_t, size) *
         poly_pow(IntPolynomial{1, 0, 1}, static_cast<unsigned>(n) - size - 1);
}

std::map<IndexSet, IntPolynomial> critical_census_by_stratum(
    std::size_t n, const std::vector<std::vector<VertexId>>& critical) {
  std::map<IndexSet, IntPolynomial> census;
  for (std::size_t k = 0; k < critical.size(); ++k) {
    for (VertexId v : critical[k]) {
      const IJPair p = from_cell(n, Cell(v));
      census[p.I ^ p.J] += IntPolynomial::monomial(1, k);
    }
  }
  return census;
}

IntPolynomial generating_function_numerator(std::size_t n) {
  const auto nn = static_cast<unsigned>(n);
  return IntPolynomial{1, 0, 0, 1} * poly_pow(IntPolynomial{1, 1}, 2 * nn) +
         IntPolynomial{0, 1, 1} * poly_pow(IntPolynomial::monomial(2, 1), nn);
}

IntPolynomial betti_generating_function(std::size_t n) {
  return poly_exact_div(generating_function_numerator(n), IntPolynomial{1, 0, 1});
}

BigInt betti_char0(std::size_t n, std::size_t i) {
  if (i > n) {
    throw OutOfStatedRange("char-0 formula is only used for i <= n; reflect via b_i = b_(2n+1-i)");
  }
  const auto nn = static_cast<std::int64_t>(2 * n);
  const auto ii = static_cast<std::int64_t>(i);
  return big_binomial(nn, ii) - big_binomial(nn, ii - 2);
}

}  // namespace heisenhom::heisenberg
