#pragma once

#include <memory>
#include <vector>

#include "pbundle/complex.hpp"
#include "pbundle/group.hpp"

namespace pbundle {

/// Milnor path on the vertices of a simplicial complex.
///
/// Stored in traversal order x_0, x_1, ..., x_n; `tuple()` gives the written
/// order (x_n, ..., x_0). Consecutive vertices are equal or span an edge.
class EdgePath {
public:
  EdgePath(ComplexPtr complex, std::vector<Vertex> traversal);
  static EdgePath constant(ComplexPtr complex, Vertex v);
  /// From the written order (x_n, ..., x_0).
  static EdgePath from_tuple(ComplexPtr complex, std::vector<Vertex> tuple);

  const ComplexPtr& complex() const { return complex_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::vector<Vertex> tuple() const;
  Vertex start() const { return vertices_.front(); }
  Vertex end() const { return vertices_.back(); }
  std::size_t size() const { return vertices_.size(); }
  bool is_loop_at(Vertex v) const { return start() == v && end() == v; }

  bool operator==(const EdgePath& other) const { return vertices_ == other.vertices_; }

private:
  ComplexPtr complex_;
  std::vector<Vertex> vertices_;
};

/// Traverse q, then p. Requires q to end where p starts.
EdgePath concat(const EdgePath& p, const EdgePath& q);
EdgePath invert(const EdgePath& p);

/// Which end of the written tuple is searched first for a deletion.
enum class ReductionOrder { leftmost, rightmost };

/// Deletes x_i when x_i = x_{i-1}, or when x_{i-1} = x_{i+1}, until neither
/// applies. Endpoints are preserved.
EdgePath reduce(const EdgePath& p, ReductionOrder order = ReductionOrder::leftmost);
bool is_reduced(const EdgePath& p);

/// Every normal form reachable by some sequence of single deletions, in
/// traversal order, sorted. A singleton result means the rules are confluent
/// on `p`. Exponential; meant for short paths.
std::vector<std::vector<Vertex>> normal_forms(const EdgePath& p);

/// Spanning-tree presentation of the edge-path group of a based Δ-complex.
///
/// Generators are the 1-cells outside the tree, named g0, g1, ... in cell
/// order; each 2-cell gives the relator e01 e12 e02^-1 with tree cells
/// dropped (relators that become empty are kept, so relator i is 2-cell i).
struct EdgePathPresentation {
  DeltaPtr base;
  Vertex basepoint = 0;
  TreeOrder order = TreeOrder::breadth_first;
  std::vector<bool> in_tree;                  // per 1-cell
  std::vector<std::int32_t> generator_of_cell;  // -1 for tree cells
  std::vector<std::size_t> cell_of_generator;
  /// Cells from the basepoint to each vertex along the tree.
  std::vector<std::vector<DeltaComplex::EdgeRef>> tree_path;
  PresentationPtr group;

  /// Signed generator of a traversed 1-cell; empty for tree cells.
  Word letter(const DeltaComplex::EdgeRef& step) const;
  /// Product of the letters of a cell path, freely reduced.
  Word word(const std::vector<DeltaComplex::EdgeRef>& steps) const;
  /// Tree path to u, the cell, tree path back from v.
  std::vector<DeltaComplex::EdgeRef> tree_loop(std::size_t cell) const;
};

using EdgePathPresentationPtr = std::shared_ptr<const EdgePathPresentation>;

/// Throws when the complex is disconnected or has no basepoint.
EdgePathPresentationPtr edge_path_group(const DeltaPtr& k,
                                        TreeOrder order = TreeOrder::breadth_first);
/// Uses the Δ-form of a simplicial complex.
EdgePathPresentationPtr edge_path_group(const ComplexPtr& k,
                                        TreeOrder order = TreeOrder::breadth_first);

/// Coordinates of a based loop: signed generators of the non-tree edges it
/// crosses, freely reduced. The presentation must come from the path's
/// complex.
Word loop_word(const EdgePathPresentation& pres, const EdgePath& loop);

/// Cell path through the consecutive distinct vertices of `p` in `pres.base`.
std::vector<DeltaComplex::EdgeRef> cell_path(const DeltaComplex& base, const EdgePath& p);

}  // namespace pbundle
