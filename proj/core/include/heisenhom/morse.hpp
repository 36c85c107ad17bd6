#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "heisenhom/algebra.hpp"
#include "heisenhom/field.hpp"

namespace heisenhom {

/// Vertex key in a complex digraph. For Chevalley-Eilenberg complexes this
/// is the cell mask; synthetic complexes may use any distinct ids.
using VertexId = std::uint64_t;

/// Sparse chain over vertices of one degree.
using MorseChain = std::map<VertexId, Scalar>;

struct DigraphEdge {
  VertexId source;
  VertexId target;
  Scalar label;
};

/// Directed graph of a based chain complex: an edge c -> c' for every nonzero
/// coefficient of c' in d(c). Edges always drop degree by one.
class ComplexDigraph {
 public:
  struct Arrow {
    std::size_t target;  // vertex index
    Scalar label;
  };

  /// `cells_by_degree[k]` lists the degree-k vertices. Parallel edges are
  /// kept as given; zero labels and degree mismatches are rejected.
  ComplexDigraph(FieldChar field, std::vector<std::vector<VertexId>> cells_by_degree,
                 const std::vector<DigraphEdge>& edges);

  FieldChar field() const { return field_; }
  std::size_t vertex_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  int max_degree() const { return static_cast<int>(cells_by_degree_.size()) - 1; }

  const std::vector<std::vector<VertexId>>& cells_by_degree() const { return cells_by_degree_; }
  bool contains(VertexId v) const { return index_.contains(v); }
  std::size_t index_of(VertexId v) const;
  VertexId id_of(std::size_t index) const { return ids_[index]; }
  int degree_of_index(std::size_t index) const { return degrees_[index]; }
  int degree(VertexId v) const { return degrees_[index_of(v)]; }

  std::span<const Arrow> successors(std::size_t index) const { return out_[index]; }
  /// Label of the first edge source -> target, 0 when absent.
  Scalar label(VertexId source, VertexId target) const;

 private:
  FieldChar field_;
  std::vector<std::vector<VertexId>> cells_by_degree_;
  std::vector<VertexId> ids_;
  std::vector<int> degrees_;
  std::unordered_map<VertexId, std::size_t> index_;
  std::vector<std::vector<Arrow>> out_;
  std::size_t edge_count_ = 0;
};

/// Digraph of the Chevalley-Eilenberg complex, vertices keyed by cell mask.
/// Throws ResourceCap when alg.dim() > dim_cap.
ComplexDigraph build_digraph(const LieAlgebra& alg, FieldChar field, std::size_t dim_cap = 29);

struct MatchedEdge {
  VertexId source;  // degree k
  VertexId target;  // degree k-1
  friend bool operator==(const MatchedEdge&, const MatchedEdge&) = default;
};

/// A set of matched digraph edges. Construction does not validate; use
/// validate_matching.
struct MorseMatching {
  std::vector<MatchedEdge> edges;
};

enum class MatchingStatus { Valid, NotAMatching, NonInvertibleEdge, CyclicMorseGraph };

std::string to_string(MatchingStatus status);

struct MatchingReport {
  MatchingStatus status = MatchingStatus::Valid;
  /// Offending vertex pair, or the vertices of a directed cycle in order.
  std::vector<VertexId> witness;
  bool ok() const { return status == MatchingStatus::Valid; }
};

/// Checks that m is a matching of digraph edges with invertible labels whose
/// reversal leaves the graph acyclic.
MatchingReport validate_matching(const ComplexDigraph& g, const MorseMatching& m);

/// Vertices incident to no matched edge, grouped by degree.
std::vector<std::vector<VertexId>> critical_cells(const ComplexDigraph& g, const MorseMatching& m);

/// Evaluates the Morse differential over a validated matching. Gradient-path
/// sums are memoized per instance, so one evaluator should not be shared
/// between threads; separate instances are independent.
class MorseDifferential {
 public:
  MorseDifferential(const ComplexDigraph& g, const MorseMatching& m);

  /// Sum over gradient paths from critical c to critical cells one degree
  /// lower. Forward edges contribute their label; a matched edge walked
  /// backwards contributes -(label)^-1.
  MorseChain operator()(VertexId critical) const;

  bool is_critical(VertexId v) const;

 private:
  const MorseChain& flow_from(std::size_t index) const;

  const ComplexDigraph& g_;
  // partner index through a matched edge, or npos
  std::vector<std::size_t> up_partner_;    // for targets: matched source above
  std::vector<std::size_t> down_partner_;  // for sources: matched target below
  std::vector<Scalar> up_label_;
  mutable std::unordered_map<std::size_t, MorseChain> memo_;
};

MorseChain morse_differential(const ComplexDigraph& g, const MorseMatching& m, VertexId critical);

/// Betti numbers of the Morse complex: critical-cell counts minus the ranks
/// of the Morse differential between consecutive degrees.
std::vector<std::uint64_t> morse_betti_numbers(const ComplexDigraph& g, const MorseMatching& m);

/// Matched sources whose non-critical digraph successors are anything other
/// than exactly their matched partner.
std::vector<VertexId> unique_successor_violations(const ComplexDigraph& g, const MorseMatching& m);

}  // namespace heisenhom
