#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pbundle/complex.hpp"
#include "pbundle/group.hpp"
#include "pbundle/kernels.hpp"
#include "pbundle/loops.hpp"

namespace pbundle {

/// Edges and triangles of a Δ-complex in the layout the kernels expect.
kernels::CellSystem cell_system(const DeltaComplex& k);

/// A principal G-bundle over a Δ-complex, as one group element per 1-cell
/// read from its vertex 0 to its vertex 1. Traversing a cell backwards gives
/// the inverse. Construction checks the triangle condition
/// value(e01) * value(e12) = value(e02) on every 2-cell.
class Cocycle {
public:
  Cocycle(DeltaPtr base, GroupPtr group, std::vector<Elem> values);
  static Cocycle trivial(DeltaPtr base, GroupPtr group);
  /// Values on oriented vertex pairs of a simplicial base; unlisted edges get
  /// the identity, and (v, u, x) stands for (u, v, x^-1).
  static Cocycle from_edges(DeltaPtr base, GroupPtr group,
                            const std::vector<std::tuple<Vertex, Vertex, Elem>>& values);

  const DeltaPtr& base() const { return base_; }
  const GroupPtr& group() const { return group_; }
  const std::vector<Elem>& values() const { return values_; }
  Elem value(std::size_t cell) const { return values_.at(cell); }
  Elem along(const DeltaComplex::EdgeRef& step) const;
  /// Value read from u to v through the first 1-cell joining them; identity
  /// when u == v.
  Elem value(Vertex u, Vertex v) const;

  bool operator==(const Cocycle& other) const;

private:
  DeltaPtr base_;
  GroupPtr group_;
  std::vector<Elem> values_;
};

/// Index of the first 2-cell violating the triangle condition.
std::optional<std::size_t> triangle_violation(const DeltaComplex& base, const FiniteGroup& g,
                                              const std::vector<Elem>& values);

/// A cocycle valued in a presented group. The triangle condition holds when
/// e01 e12 e02^-1 freely reduces to the empty word or is, up to cyclic
/// rotation and inversion, a relator.
class WordCocycle {
public:
  WordCocycle(DeltaPtr base, PresentationPtr group, std::vector<Word> values);
  /// Skips the triangle check; for images under word homomorphisms, whose
  /// relators are not checked either.
  static WordCocycle unchecked(DeltaPtr base, PresentationPtr group, std::vector<Word> values);

  const DeltaPtr& base() const { return base_; }
  const PresentationPtr& group() const { return group_; }
  const std::vector<Word>& values() const { return values_; }
  Word along(const DeltaComplex::EdgeRef& step) const;

  bool operator==(const WordCocycle& other) const;

private:
  WordCocycle() = default;

  DeltaPtr base_;
  PresentationPtr group_;
  std::vector<Word> values_;
};

/// Identity on tree cells, the generator on every other cell.
WordCocycle universal_cocycle(const EdgePathPresentation& pres);

// ------------------------------------------------------------------ gauges

/// One group element per vertex.
using GaugeTransform = std::vector<Elem>;

/// value'(u -> v) = t(u)^-1 value(u -> v) t(v)
Cocycle apply_gauge(const Cocycle& c, const GaugeTransform& t);
/// Pointwise product t1 t2: gauging by t1 then by t2.
GaugeTransform compose_gauges(const FiniteGroup& g, const GaugeTransform& t1,
                              const GaugeTransform& t2);
GaugeTransform inverse_gauge(const FiniteGroup& g, const GaugeTransform& t);

/// h_v: product of the values along the tree path from the basepoint to v.
GaugeTransform tree_holonomy(const Cocycle& c, const EdgePathPresentation& pres);
/// Gauge by h^-1: tree cells become the identity and every other cell
/// carries its holonomy.
Cocycle tree_normalize(const Cocycle& c, const EdgePathPresentation& pres);

enum class GaugeMethod { tree, oracle };

/// The lexicographically first gauge t with apply_gauge(c1, t) = c2, if any.
/// `tree` checks the |G| candidates fixed by the value at the basepoint
/// (every gauge between cocycles on a connected base is one of them);
/// `oracle` searches all |G|^|V| gauges.
std::optional<GaugeTransform> gauge_equivalent(const Cocycle& c1, const Cocycle& c2,
                                               GaugeMethod method = GaugeMethod::tree,
                                               const SearchBudget& budget = SearchBudget::from_env());

// ------------------------------------------------------------------ holonomy

/// Generator of the non-tree cell u -> w goes to h_u value h_w^-1.
PresentedHom holonomy(const Cocycle& c, const EdgePathPresentationPtr& pres);
PresentedHom holonomy(const Cocycle& c);
WordHom holonomy(const WordCocycle& c, const EdgePathPresentationPtr& pres);

// --------------------------------------------------- pushforward / pullback

Cocycle pushforward(const FiniteHom& a, const Cocycle& c);
Cocycle pushforward(const PresentedHom& a, const WordCocycle& c);
WordCocycle pushforward(const WordHom& a, const WordCocycle& c);

/// value'(e) = value(f(e)), identity on collapsed cells.
Cocycle pullback(const CellMap& f, const Cocycle& c);
WordCocycle pullback(const CellMap& f, const WordCocycle& c);
/// The base of `c` must be the Δ-form of f's target.
Cocycle pullback(const SimplicialMap& f, const Cocycle& c);

/// a_*(f^* c) and f^*(a_* c) agree edge for edge.
bool pushforward_pullback_commute(const FiniteHom& a, const SimplicialMap& f, const Cocycle& c);

// --------------------------------------------------------------- total space

/// Total space of a cocycle over a simplicial base. Vertex (v, g) has index
/// v * |G| + g and label "v|g". The simplex {v0 < ... < vd} lifted at g is
/// {(vi, c(vi -> v0) g)}; G acts by (v, g) k = (v, g k).
struct TotalSpace {
  ComplexPtr complex;
  std::shared_ptr<const GroupAction> action;
  std::shared_ptr<const SimplicialMap> projection;
  GroupPtr group() const { return action->group(); }
};

TotalSpace total_space(const Cocycle& c);

// -------------------------------------------------------------- finite G-sets

enum class Side { right, left };

/// Finite set with a G-action; `table[x * |G| + g]` is x·g (right) or g·x
/// (left).
class FiniteGSet {
public:
  FiniteGSet(GroupPtr group, Side side, std::vector<std::string> labels, std::vector<int> table);
  /// G acting on itself by multiplication.
  static FiniteGSet regular(GroupPtr group, Side side);
  static FiniteGSet point(GroupPtr group, Side side);
  /// Vertices of a total space with the right action.
  static FiniteGSet of_total_space(const TotalSpace& q);
  /// The same set with g acting as g^-1 on the other side.
  FiniteGSet opposite() const;

  const GroupPtr& group() const { return group_; }
  Side side() const { return side_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  int act(int x, Elem g) const { return table_[static_cast<std::size_t>(x) * group_->order() + g]; }

private:
  GroupPtr group_;
  Side side_;
  std::vector<std::string> labels_;
  std::vector<int> table_;
};

/// M ⊗_G N: pairs (m, n) modulo (m·g, n) ~ (m, g·n).
struct TensorProduct {
  std::size_t size = 0;
  /// Class of (m, n) at index m * |N| + n; classes numbered by least pair.
  std::vector<std::size_t> class_of;
};
TensorProduct tensor(const FiniteGSet& m, const FiniteGSet& n);

/// Finite set with a projection to the vertices of a base.
struct SetOverBase {
  std::size_t base_size = 0;
  std::vector<Vertex> projection;
  std::size_t size() const { return projection.size(); }
};
SetOverBase base_as_set(std::size_t base_size);
SetOverBase total_space_over_base(const TotalSpace& q);

/// M ×_X M': pairs agreeing under the projections, in lexicographic order.
struct Cotensor {
  SetOverBase set;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};
Cotensor cotensor(const SetOverBase& m, const SetOverBase& n);

// -------------------------------------------- equivariant maps and sections

/// The associated covering Q ⊗_G Z for a right G-set Z, at vertex level:
/// classes of (p, z) under (p·g, z·g) ~ (p, z).
struct AssociatedBundle {
  std::size_t size = 0;
  std::vector<std::size_t> class_of;  // index p * |Z| + z
  std::vector<Vertex> over;           // base vertex of each class
  /// Unordered pairs of classes joined by an edge of the total space.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};
AssociatedBundle associated_bundle(const TotalSpace& q, const FiniteGSet& z);

/// Continuous equivariant maps Q -> Z (Z discrete, right action): value per
/// total-space vertex, constant along edges. Lexicographic order.
std::vector<std::vector<int>> equivariant_maps(const TotalSpace& q, const FiniteGSet& z,
                                               const SearchBudget& budget = SearchBudget::from_env());
/// Sections of Q ⊗_G Z -> X: one class per base vertex, classes over
/// adjacent vertices joined by an edge. Lexicographic order.
std::vector<std::vector<std::size_t>> sections_of_associated(
    const TotalSpace& q, const FiniteGSet& z, const SearchBudget& budget = SearchBudget::from_env());

/// σ_φ(x) = [p, φ(p)] for any p over x.
std::vector<std::size_t> section_of_map(const TotalSpace& q, const FiniteGSet& z,
                                        const AssociatedBundle& assoc, const std::vector<int>& phi);
/// φ(p) = the unique z with [p, z] = σ(π(p)).
std::vector<int> map_of_section(const TotalSpace& q, const FiniteGSet& z,
                                const AssociatedBundle& assoc,
                                const std::vector<std::size_t>& section);

}  // namespace pbundle
