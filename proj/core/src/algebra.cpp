#include "heisenhom/algebra.hpp"

#include <algorithm>
#include <string>

#include "heisenhom/errors.hpp"

namespace heisenhom {

std::optional<int> ChainVector::degree() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.begin()->first.degree();
}

void ChainVector::add(Cell cell, Scalar value) {
  value %= field_.p();
  if (value == 0) return;
  if (!entries_.empty() && entries_.begin()->first.degree() != cell.degree()) {
    throw Error("chain vector cells must share one degree");
  }
  auto [it, inserted] = entries_.try_emplace(cell, value);
  if (!inserted) {
    it->second = field_.add(it->second, value);
    if (it->second == 0) entries_.erase(it);
  }
}

Scalar ChainVector::coefficient(Cell cell) const {
  auto it = entries_.find(cell);
  return it == entries_.end() ? 0 : it->second;
}

void ChainVector::scale(Scalar factor) {
  factor %= field_.p();
  if (factor == 0) {
    entries_.clear();
    return;
  }
  for (auto& [cell, value] : entries_) value = field_.mul(value, factor);
}

void ChainVector::add_scaled(const ChainVector& other, Scalar factor) {
  for (const auto& [cell, value] : other.entries_) add(cell, field_.mul(value, factor));
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

namespace {

using Combination = std::vector<std::int64_t>;

void accumulate(Combination& acc, std::span<const BracketTerm> terms, std::int64_t factor) {
  for (const auto& t : terms) acc[t.generator] += factor * t.coefficient;
}

// [a, v] for a generator a and an integer combination v.
Combination bracket_with(const LieAlgebra& alg, std::size_t a, const Combination& v) {
  Combination out(alg.dim(), 0);
  for (std::size_t g = 0; g < alg.dim(); ++g) {
    if (v[g] != 0) accumulate(out, alg.bracket(a, g), v[g]);
  }
  return out;
}

Combination as_combination(const LieAlgebra& alg, std::size_t a, std::size_t b) {
  Combination out(alg.dim(), 0);
  accumulate(out, alg.bracket(a, b), 1);
  return out;
}

void check_jacobi(const LieAlgebra& alg) {
  const auto dim = alg.dim();
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = a + 1; b < dim; ++b) {
      for (std::size_t c = b + 1; c < dim; ++c) {
        auto sum = bracket_with(alg, a, as_combination(alg, b, c));
        auto t2 = bracket_with(alg, b, as_combination(alg, c, a));
        auto t3 = bracket_with(alg, c, as_combination(alg, a, b));
        for (std::size_t g = 0; g < dim; ++g) {
          if (sum[g] + t2[g] + t3[g] != 0) throw JacobiViolation(a, b, c);
        }
      }
    }
  }
}

std::vector<BracketTerm> normalized(std::span<const BracketTerm> terms, std::size_t dim) {
  std::map<std::size_t, std::int64_t> merged;
  for (const auto& t : terms) {
    if (t.generator >= dim) {
      throw IndexOutOfRange("bracket term references generator " + std::to_string(t.generator));
    }
    merged[t.generator] += t.coefficient;
  }
  std::vector<BracketTerm> out;
  for (auto [g, c] : merged) {
    if (c != 0) out.push_back({g, c});
  }
  return out;
}

std::vector<BracketTerm> negated(std::vector<BracketTerm> terms) {
  for (auto& t : terms) t.coefficient = -t.coefficient;
  return terms;
}

bool same_terms(const std::vector<BracketTerm>& a, const std::vector<BracketTerm>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
    return x.generator == y.generator && x.coefficient == y.coefficient;
  });
}

std::vector<std::string> default_names(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  return names;
}

}  // namespace

LieAlgebra make_lie_algebra_unchecked(std::size_t dim, const std::vector<BracketEntry>& entries,
                                      std::vector<std::string> names) {
  if (dim > LieAlgebra::kMaxDim) throw ResourceCap("dimension exceeds 63 generators");
  LieAlgebra alg;
  alg.dim_ = dim;
  alg.names_ = names.empty() ? default_names(dim) : std::move(names);
  alg.table_.assign(dim * dim, {});
  for (const auto& e : entries) {
    if (e.left >= dim || e.right >= dim) {
      throw IndexOutOfRange("bracket entry references a generator outside [0, dim)");
    }
    auto terms = normalized(e.terms, dim);
    alg.table_[e.left * dim + e.right] = terms;
    alg.table_[e.right * dim + e.left] = negated(terms);
  }
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = a + 1; b < dim; ++b) {
      if (!alg.table_[a * dim + b].empty()) alg.nonzero_pairs_.emplace_back(a, b);
    }
  }
  return alg;
}

LieAlgebra make_lie_algebra(std::size_t dim, const std::vector<BracketEntry>& entries,
                            std::vector<std::string> names,
                            std::vector<std::vector<int>> weights) {
  if (!names.empty() && names.size() != dim) {
    throw IndexOutOfRange("generator name count does not match dimension");
  }
  // Antisymmetry is checked over the integers on the raw entries: a pair given
  // in both orders must carry opposite values and [g, g] must vanish.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<BracketTerm>> seen;
  for (const auto& e : entries) {
    if (e.left >= dim || e.right >= dim) {
      throw IndexOutOfRange("bracket entry references a generator outside [0, dim)");
    }
    auto terms = normalized(e.terms, dim);
    if (e.left == e.right) {
      if (!terms.empty()) {
        throw AntisymmetryViolation("[g, g] must vanish for generator " +
                                    std::to_string(e.left));
      }
      continue;
    }
    auto key = std::minmax(e.left, e.right);
    auto oriented = e.left < e.right ? terms : negated(terms);
    auto [it, inserted] = seen.try_emplace({key.first, key.second}, oriented);
    if (!inserted && !same_terms(it->second, oriented)) {
      throw AntisymmetryViolation("inconsistent brackets for generators " +
                                  std::to_string(key.first) + " and " +
                                  std::to_string(key.second));
    }
  }
  std::vector<BracketEntry> canonical;
  for (auto& [key, terms] : seen) canonical.push_back({key.first, key.second, terms});

  LieAlgebra alg = make_lie_algebra_unchecked(dim, canonical, std::move(names));
  check_jacobi(alg);

  if (!weights.empty()) {
    if (weights.size() != dim) throw IndexOutOfRange("one weight vector per generator required");
    for (const auto& w : weights) {
      if (w.size() != weights.front().size()) throw Error("weight vectors differ in length");
    }
    for (auto [a, b] : alg.nonzero_pairs()) {
      for (const auto& t : alg.bracket(a, b)) {
        for (std::size_t k = 0; k < weights[a].size(); ++k) {
          if (weights[t.generator][k] != weights[a][k] + weights[b][k]) {
            throw Error("bracket [" + alg.names_[a] + ", " + alg.names_[b] +
                        "] is not homogeneous for the supplied grading");
          }
        }
      }
    }
    alg.weights_ = std::move(weights);
  }
  return alg;
}

LieAlgebra heisenberg_algebra(std::size_t n) {
  const std::size_t dim = 2 * n + 1;
  std::vector<std::string> names{"z"};
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));

  std::vector<BracketEntry> entries;
  for (std::size_t i = 1; i <= n; ++i) entries.push_back({i, n + i, {{0, 1}}});

  std::vector<std::vector<int>> weights(dim, std::vector<int>(std::max<std::size_t>(n, 1), 0));
  for (std::size_t i = 1; i <= n; ++i) {
    weights[i][i - 1] = 1;
    weights[n + i][i - 1] = -1;
  }
  return make_lie_algebra(dim, entries, std::move(names), std::move(weights));
}

ChainVector differential(const LieAlgebra& alg, Cell cell, FieldChar field) {
  ChainVector out(field);
  visit_differential(alg, cell, [&](Cell target, std::int64_t coeff) {
    out.add(target, field.reduce(coeff));
  });
  return out;
}

ChainVector differential(const LieAlgebra& alg, const ChainVector& chain) {
  ChainVector out(chain.field());
  for (const auto& [cell, value] : chain) {
    out.add_scaled(differential(alg, cell, chain.field()), value);
  }
  return out;
}

std::vector<Cell> enumerate_cells(const LieAlgebra& alg, int degree) {
  std::vector<Cell> cells;
  if (degree >= 0) cells.reserve(binomial(static_cast<std::int64_t>(alg.dim()), degree));
  for_each_cell(alg, degree, [&](Cell c) { cells.push_back(c); });
  return cells;
}

BoundaryMap boundary_matrix(const LieAlgebra& alg, int degree, FieldChar field) {
  if (degree < 1 || degree > static_cast<int>(alg.dim())) {
    throw IndexOutOfRange("boundary degree outside [1, dim]");
  }
  BoundaryMap m;
  m.degree = degree;
  m.field = field;
  m.col_cells = enumerate_cells(alg, degree);
  m.row_cells = enumerate_cells(alg, degree - 1);
  for (std::size_t col = 0; col < m.col_cells.size(); ++col) {
    for (const auto& [cell, value] : differential(alg, m.col_cells[col], field)) {
      auto it = std::lower_bound(m.row_cells.begin(), m.row_cells.end(), cell);
      m.entries.push_back({static_cast<std::size_t>(it - m.row_cells.begin()), col, value});
    }
  }
  return m;
}

DSquaredReport verify_d_squared(const LieAlgebra& alg, FieldChar field) {
  DSquaredReport report;
  for (int k = 2; k <= static_cast<int>(alg.dim()); ++k) {
    for (Cell c : enumerate_cells(alg, k)) {
      if (!differential(alg, differential(alg, c, field)).is_zero()) report.witnesses.push_back(c);
    }
  }
  return report;
}

}  // namespace heisenhom
