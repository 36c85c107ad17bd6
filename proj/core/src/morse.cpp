#include "heisenhom/morse.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_set>

#include "heisenhom/errors.hpp"
#include "heisenhom/linalg.hpp"

namespace heisenhom {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

ComplexDigraph::ComplexDigraph(FieldChar field, std::vector<std::vector<VertexId>> cells_by_degree,
                               const std::vector<DigraphEdge>& edges)
    : field_(field), cells_by_degree_(std::move(cells_by_degree)) {
  for (std::size_t k = 0; k < cells_by_degree_.size(); ++k) {
    for (VertexId v : cells_by_degree_[k]) {
      if (!index_.try_emplace(v, ids_.size()).second) {
        throw Error("vertex " + std::to_string(v) + " listed twice");
      }
      ids_.push_back(v);
      degrees_.push_back(static_cast<int>(k));
    }
  }
  out_.resize(ids_.size());
  for (const auto& e : edges) {
    const auto s = index_of(e.source);
    const auto t = index_of(e.target);
    if (degrees_[t] + 1 != degrees_[s]) throw Error("digraph edges must drop degree by one");
    const Scalar label = e.label % field_.p();
    if (label == 0) throw Error("digraph edge labels must be nonzero");
    out_[s].push_back({t, label});
    ++edge_count_;
  }
}

std::size_t ComplexDigraph::index_of(VertexId v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw IndexOutOfRange("unknown vertex " + std::to_string(v));
  return it->second;
}

Scalar ComplexDigraph::label(VertexId source, VertexId target) const {
  auto s = index_.find(source);
  auto t = index_.find(target);
  if (s == index_.end() || t == index_.end()) return 0;
  for (const auto& a : out_[s->second]) {
    if (a.target == t->second) return a.label;
  }
  return 0;
}

ComplexDigraph build_digraph(const LieAlgebra& alg, FieldChar field, std::size_t dim_cap) {
  if (alg.dim() > dim_cap) {
    throw ResourceCap("algebra dimension " + std::to_string(alg.dim()) + " exceeds cap " +
                      std::to_string(dim_cap));
  }
  std::vector<std::vector<VertexId>> cells(alg.dim() + 1);
  std::vector<DigraphEdge> edges;
  for (int k = 0; k <= static_cast<int>(alg.dim()); ++k) {
    for (Cell c : enumerate_cells(alg, k)) {
      cells[k].push_back(c.mask());
      for (const auto& [target, value] : differential(alg, c, field)) {
        edges.push_back({c.mask(), target.mask(), value});
      }
    }
  }
  return ComplexDigraph(field, std::move(cells), edges);
}

std::string to_string(MatchingStatus status) {
  switch (status) {
    case MatchingStatus::Valid: return "Valid";
    case MatchingStatus::NotAMatching: return "NotAMatching";
    case MatchingStatus::NonInvertibleEdge: return "NonInvertibleEdge";
    case MatchingStatus::CyclicMorseGraph: return "CyclicMorseGraph";
  }
  return "?";
}

MatchingReport validate_matching(const ComplexDigraph& g, const MorseMatching& m) {
  MatchingReport report;
  std::unordered_set<VertexId> used;
  for (const auto& e : m.edges) {
    if (!used.insert(e.source).second || !used.insert(e.target).second) {
      report.status = MatchingStatus::NotAMatching;
      report.witness = {e.source, e.target};
      return report;
    }
  }
  // A missing edge has coefficient zero, which is not invertible.
  for (const auto& e : m.edges) {
    if (!g.contains(e.source) || !g.contains(e.target) || g.label(e.source, e.target) == 0) {
      report.status = MatchingStatus::NonInvertibleEdge;
      report.witness = {e.source, e.target};
      return report;
    }
  }

  // Morse graph: digraph with one copy of each matched edge reversed.
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> matched_target(n, npos);
  std::vector<std::size_t> matched_source(n, npos);
  for (const auto& e : m.edges) {
    matched_target[g.index_of(e.source)] = g.index_of(e.target);
    matched_source[g.index_of(e.target)] = g.index_of(e.source);
  }
  auto morse_successors = [&](std::size_t v) {
    std::vector<std::size_t> next;
    bool skipped = false;
    for (const auto& a : g.successors(v)) {
      if (!skipped && a.target == matched_target[v]) {
        skipped = true;
        continue;
      }
      next.push_back(a.target);
    }
    if (matched_source[v] != npos) next.push_back(matched_source[v]);
    return next;
  };

  enum : unsigned char { White, Grey, Black };
  std::vector<unsigned char> colour(n, White);
  struct Frame {
    std::size_t vertex;
    std::vector<std::size_t> next;
    std::size_t pos = 0;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != White) continue;
    std::vector<Frame> stack;
    stack.push_back({root, morse_successors(root)});
    colour[root] = Grey;
    while (!stack.empty()) {
      auto& top = stack.back();
      if (top.pos == top.next.size()) {
        colour[top.vertex] = Black;
        stack.pop_back();
        continue;
      }
      const std::size_t w = top.next[top.pos++];
      if (colour[w] == Grey) {
        auto first = std::find_if(stack.begin(), stack.end(),
                                  [&](const Frame& f) { return f.vertex == w; });
        report.status = MatchingStatus::CyclicMorseGraph;
        for (auto it = first; it != stack.end(); ++it) report.witness.push_back(g.id_of(it->vertex));
        return report;
      }
      if (colour[w] == White) {
        colour[w] = Grey;
        stack.push_back({w, morse_successors(w)});
      }
    }
  }
  return report;
}

std::vector<std::vector<VertexId>> critical_cells(const ComplexDigraph& g, const MorseMatching& m) {
  std::unordered_set<VertexId> matched;
  for (const auto& e : m.edges) {
    matched.insert(e.source);
    matched.insert(e.target);
  }
  std::vector<std::vector<VertexId>> out(g.cells_by_degree().size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (VertexId v : g.cells_by_degree()[k]) {
      if (!matched.contains(v)) out[k].push_back(v);
    }
  }
  return out;
}

MorseDifferential::MorseDifferential(const ComplexDigraph& g, const MorseMatching& m)
    : g_(g),
      up_partner_(g.vertex_count(), npos),
      down_partner_(g.vertex_count(), npos),
      up_label_(g.vertex_count(), 0) {
  for (const auto& e : m.edges) {
    const auto s = g.index_of(e.source);
    const auto t = g.index_of(e.target);
    down_partner_[s] = t;
    up_partner_[t] = s;
    up_label_[t] = g.label(e.source, e.target);
  }
}

bool MorseDifferential::is_critical(VertexId v) const {
  const auto i = g_.index_of(v);
  return up_partner_[i] == npos && down_partner_[i] == npos;
}

namespace {
void accumulate(MorseChain& acc, const MorseChain& add, Scalar factor, FieldChar f) {
  for (const auto& [v, c] : add) {
    auto [it, inserted] = acc.try_emplace(v, 0);
    it->second = f.add(it->second, f.mul(c, factor));
    if (it->second == 0) acc.erase(it);
  }
}
}  // namespace

const MorseChain& MorseDifferential::flow_from(std::size_t index) const {
  if (auto it = memo_.find(index); it != memo_.end()) return it->second;
  const FieldChar f = g_.field();
  MorseChain result;
  if (up_partner_[index] == npos && down_partner_[index] == npos) {
    result.emplace(g_.id_of(index), 1);
  } else if (up_partner_[index] != npos) {
    const std::size_t above = up_partner_[index];
    const Scalar factor = f.neg(f.inverse(up_label_[index]));
    bool skipped = false;
    for (const auto& a : g_.successors(above)) {
      if (!skipped && a.target == index) {
        skipped = true;
        continue;
      }
      accumulate(result, flow_from(a.target), f.mul(factor, a.label), f);
    }
  }
  // Matched sources lead only further down: no contribution.
  return memo_.emplace(index, std::move(result)).first->second;
}

MorseChain MorseDifferential::operator()(VertexId critical) const {
  const auto i = g_.index_of(critical);
  if (up_partner_[i] != npos || down_partner_[i] != npos) {
    throw NotCritical("vertex " + std::to_string(critical) + " is matched");
  }
  MorseChain out;
  for (const auto& a : g_.successors(i)) accumulate(out, flow_from(a.target), a.label, g_.field());
  return out;
}

MorseChain morse_differential(const ComplexDigraph& g, const MorseMatching& m, VertexId critical) {
  return MorseDifferential(g, m)(critical);
}

std::vector<std::uint64_t> morse_betti_numbers(const ComplexDigraph& g, const MorseMatching& m) {
  const auto critical = critical_cells(g, m);
  const MorseDifferential dm(g, m);
  const std::size_t top = critical.size();
  std::vector<std::uint64_t> ranks(top + 1, 0);  // ranks[k]: Morse d from degree k
  for (std::size_t k = 1; k < top; ++k) {
    const auto& cols = critical[k];
    const auto& rows = critical[k - 1];
    if (cols.empty() || rows.empty()) continue;
    std::unordered_map<VertexId, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
    DenseMatrixGFp mat(g.field(), rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (const auto& [v, c] : dm(cols[j])) mat.set(row_index.at(v), j, c);
    }
    ranks[k] = rank(mat);
  }
  std::vector<std::uint64_t> betti;
  for (std::size_t k = 0; k < top; ++k) betti.push_back(critical[k].size() - ranks[k] - ranks[k + 1]);
  return betti;
}

std::vector<VertexId> unique_successor_violations(const ComplexDigraph& g, const MorseMatching& m) {
  std::unordered_set<VertexId> matched;
  for (const auto& e : m.edges) {
    matched.insert(e.source);
    matched.insert(e.target);
  }
  std::vector<VertexId> violations;
  for (const auto& e : m.edges) {
    std::set<VertexId> non_critical;
    for (const auto& a : g.successors(g.index_of(e.source))) {
      const VertexId w = g.id_of(a.target);
      if (matched.contains(w)) non_critical.insert(w);
    }
    if (non_critical != std::set<VertexId>{e.target}) violations.push_back(e.source);
  }
  return violations;
}

}  // namespace heisenhom
