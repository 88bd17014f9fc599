#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pbundle/group.hpp"

namespace pbundle {

/// Index of a vertex in load order. All enumerations iterate in this order.
using Vertex = std::int32_t;
/// Vertex indices in ascending order.
using Simplex = std::vector<Vertex>;

/// Finite abstract simplicial complex, stored as its full downward closure.
///
/// Vertices carry string labels and a total order fixed at construction. The
/// simplex lists of every dimension are sorted lexicographically, so the
/// position of a simplex in `simplices(d)` is a stable index.
class SimplicialComplex {
public:
  SimplicialComplex() = default;

  /// Downward closure of `facets` (vertex indices, any order). Throws on an
  /// empty facet, an out-of-range vertex or a bad basepoint.
  static SimplicialComplex from_facets(std::vector<std::string> labels,
                                       const std::vector<std::vector<Vertex>>& facets,
                                       std::optional<Vertex> basepoint = std::nullopt);

  /// Label-based entry point used by the file loader.
  static SimplicialComplex validate(std::vector<std::string> labels,
                                    const std::vector<std::vector<std::string>>& facets,
                                    const std::optional<std::string>& basepoint);

  std::size_t vertex_count() const { return labels_.size(); }
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<Simplex>& simplices(int d) const;
  std::size_t simplex_count() const;
  /// Maximal simplices, sorted.
  const std::vector<Simplex>& facets() const { return facets_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  std::optional<Vertex> find_vertex(std::string_view label) const;
  std::optional<Vertex> basepoint() const { return basepoint_; }
  SimplicialComplex with_basepoint(std::optional<Vertex> v) const;

  /// `s` need not be sorted.
  bool contains(std::span<const Vertex> s) const;
  std::optional<std::size_t> index_of(const Simplex& sorted) const;
  /// Sorted neighbours in the 1-skeleton.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }

  bool operator==(const SimplicialComplex& other) const {
    return labels_ == other.labels_ && facets_ == other.facets_ && basepoint_ == other.basepoint_;
  }

private:
  std::vector<std::string> labels_;
  std::vector<Simplex> facets_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::optional<Vertex> basepoint_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

/// Connected components of the 1-skeleton, each sorted, ordered by least vertex.
std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex& k);

enum class TreeOrder { breadth_first, depth_first };
using Edge = std::pair<Vertex, Vertex>;  // first < second

/// Spanning tree of a connected complex grown from `root` in vertex order.
/// Throws when the complex is disconnected.
std::vector<Edge> spanning_tree(const SimplicialComplex& k, Vertex root,
                                TreeOrder order = TreeOrder::breadth_first);

/// Vertex map between complexes that sends simplices to simplices.
class SimplicialMap {
public:
  SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<Vertex> image);
  static SimplicialMap identity(const ComplexPtr& k);
  static SimplicialMap constant(const ComplexPtr& source, const ComplexPtr& target, Vertex v);

  const ComplexPtr& source() const { return source_; }
  const ComplexPtr& target() const { return target_; }
  const std::vector<Vertex>& image() const { return image_; }
  Vertex operator()(Vertex v) const { return image_.at(v); }
  /// Sorted, deduplicated image of a simplex.
  Simplex apply(std::span<const Vertex> s) const;
  /// Both complexes based and the basepoint goes to the basepoint.
  bool is_pointed() const;

private:
  ComplexPtr source_;
  ComplexPtr target_;
  std::vector<Vertex> image_;
};

SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner);

/// True iff f(s) u g(s) spans a simplex of the target for every simplex s.
bool are_contiguous(const SimplicialMap& f, const SimplicialMap& g);

/// Join A * B. Labels are kept when disjoint, otherwise prefixed "a." / "b.".
/// The basepoint of A (if any) is kept.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

// ------------------------------------------------------------- Δ-complexes

/// A cell of a Δ-complex: ordered vertices and, for d >= 1, the d+1 face
/// indices into the (d-1)-cells, face i omitting vertex i.
struct Cell {
  std::vector<Vertex> vertices;
  std::vector<std::size_t> faces;
  bool operator==(const Cell&) const = default;
};

/// Finite Δ-complex. Distinct cells may share a vertex tuple.
class DeltaComplex {
public:
  DeltaComplex() = default;
  /// `cells[d]` lists the d-cells; cells[0][i] must be the vertex i with
  /// vertices {i}. Checks face dimensions, vertex consistency and the
  /// simplicial identities d_i d_j = d_{j-1} d_i (i < j).
  DeltaComplex(std::vector<std::vector<Cell>> cells, std::optional<Vertex> basepoint,
               std::vector<std::string> vertex_labels = {});

  /// Cells in the order of the sorted simplex lists of `k`.
  static DeltaComplex from_simplicial(const ComplexPtr& k);

  int dimension() const { return static_cast<int>(cells_.size()) - 1; }
  std::size_t count(int d) const;
  std::size_t vertex_count() const { return count(0); }
  const Cell& cell(int d, std::size_t i) const { return cells_.at(d).at(i); }
  const std::vector<Cell>& cells(int d) const;
  std::optional<Vertex> basepoint() const { return basepoint_; }
  DeltaComplex with_basepoint(std::optional<Vertex> v) const;
  const std::vector<std::string>& vertex_labels() const { return labels_; }

  /// The simplicial complex this was converted from, if any.
  const ComplexPtr& origin() const { return origin_; }

  /// First 1-cell joining u and v; `reversed` when it runs v -> u.
  struct EdgeRef {
    std::size_t cell;
    bool reversed;
  };
  std::optional<EdgeRef> find_edge(Vertex u, Vertex v) const;
  /// 1-cells incident to v, ascending.
  const std::vector<std::size_t>& incident_edges(Vertex v) const { return incident_.at(v); }

  bool operator==(const DeltaComplex& other) const {
    return cells_ == other.cells_ && basepoint_ == other.basepoint_;
  }

private:
  void index();

  std::vector<std::vector<Cell>> cells_;
  std::optional<Vertex> basepoint_;
  std::vector<std::string> labels_;
  ComplexPtr origin_;
  std::multimap<std::pair<Vertex, Vertex>, std::size_t> edge_lookup_;
  std::vector<std::vector<std::size_t>> incident_;
};

using DeltaPtr = std::shared_ptr<const DeltaComplex>;

/// Image of a 1-cell under a cellular map: a 1-cell traversed forwards or
/// backwards, or collapsed to a vertex (cell == npos).
struct EdgeImage {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t cell = npos;
  bool reversed = false;
  bool collapsed() const { return cell == npos; }
  bool operator==(const EdgeImage&) const = default;
};

/// Map of Δ-complexes on the 1-skeleton: vertices to vertices, 1-cells to
/// 1-cells or collapsed, with matching endpoints.
class CellMap {
public:
  CellMap(DeltaPtr source, DeltaPtr target, std::vector<Vertex> vertex_image,
          std::vector<EdgeImage> edge_image);
  /// A simplicial map between complexes whose Δ-forms are given.
  static CellMap from_simplicial(const SimplicialMap& f, DeltaPtr source, DeltaPtr target);

  const DeltaPtr& source() const { return source_; }
  const DeltaPtr& target() const { return target_; }
  Vertex vertex(Vertex v) const { return vertex_image_.at(v); }
  const EdgeImage& edge(std::size_t e) const { return edge_image_.at(e); }
  bool is_pointed() const;

private:
  DeltaPtr source_;
  DeltaPtr target_;
  std::vector<Vertex> vertex_image_;
  std::vector<EdgeImage> edge_image_;
};

// ---------------------------------------------------------- group actions

/// Right action of a finite group on the vertices of a complex by
/// simplicial automorphisms.
class GroupAction {
public:
  /// `table[v * |G| + g]` is v·g. Checks the action laws and that every
  /// element acts by an automorphism.
  GroupAction(ComplexPtr complex, GroupPtr group, std::vector<Vertex> table);

  const ComplexPtr& complex() const { return complex_; }
  const GroupPtr& group() const { return group_; }
  Vertex act(Vertex v, Elem g) const {
    return table_[static_cast<std::size_t>(v) * group_->order() + g];
  }
  /// Sorted image of a simplex.
  Simplex act(std::span<const Vertex> s, Elem g) const;
  /// No non-identity element fixes a vertex.
  bool is_free() const;

private:
  ComplexPtr complex_;
  GroupPtr group_;
  std::vector<Vertex> table_;
};

/// Orbit space of a free action as a Δ-complex.
struct Quotient {
  DeltaComplex delta;
  /// Vertex orbit of each source vertex.
  std::vector<Vertex> vertex_orbit;
  /// Ordered representative of each cell, per dimension.
  std::vector<std::vector<std::vector<Vertex>>> representative;
  /// For each dimension, sorted source simplex -> (cell, g) with the simplex
  /// equal to representative·g.
  std::vector<std::map<Simplex, std::pair<std::size_t, Elem>>> orbit_of;
  /// Oriented source edge (u, v) -> quotient 1-cell and orientation.
  std::map<std::pair<Vertex, Vertex>, DeltaComplex::EdgeRef> oriented_edges;

  /// Quotient 1-cell through the source edge u -> v, with orientation.
  DeltaComplex::EdgeRef edge_through(Vertex u, Vertex v) const;
};

/// Throws when the action fixes a simplex, or when representatives'
/// vertex orders cannot be transported compatibly to faces.
Quotient quotient_by_action(const GroupAction& action);

}  // namespace pbundle
