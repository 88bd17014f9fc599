#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pbundle/bundle.hpp"
#include "pbundle/complex.hpp"
#include "pbundle/group.hpp"
#include "pbundle/loops.hpp"

namespace pbundle {

/// Stage n of the Milnor join: n+1 copies of G, vertex (i, g) at index
/// i * |G| + g with label "i:g", simplices the vertex sets with pairwise
/// distinct levels. G acts by (i, g) k = (i, g k).
///
/// `skeleton` >= 0 keeps only simplices of dimension <= skeleton; the
/// edge-path machinery needs no more than the 2-skeleton.
struct JoinStage {
  GroupPtr group;
  int n = 0;
  int skeleton = -1;
  ComplexPtr complex;
  std::shared_ptr<const GroupAction> action;

  Vertex vertex(int level, Elem g) const {
    return static_cast<Vertex>(level * static_cast<int>(group->order()) + g);
  }
  int level_of(Vertex v) const { return v / static_cast<int>(group->order()); }
  Elem element_of(Vertex v) const { return v % static_cast<int>(group->order()); }
};

/// Throws search_cap when the simplex count exceeds the budget.
JoinStage milnor_join(const GroupPtr& g, int n, int skeleton = -1,
                      const SearchBudget& budget = SearchBudget::from_env());

/// d-simplices of the full stage: choose(n+1, d+1) |G|^(d+1).
std::uint64_t join_simplex_count(std::size_t group_order, int n, int d);

/// Orbit space of a join stage with the universal values: the 1-cell with
/// representative ((i, x), (j, y)), i < j, carries x y^-1. The vertex i of
/// the quotient is the orbit of level i.
struct ClassifyingStage {
  JoinStage join;
  Quotient quotient;
  DeltaPtr delta;
  std::shared_ptr<const Cocycle> universal;
};

ClassifyingStage classifying_stage(const GroupPtr& g, int n, int skeleton = -1,
                                   const SearchBudget& budget = SearchBudget::from_env());

/// ε_G: holonomy of the universal values on stage n.
struct CounitResult {
  std::shared_ptr<const ClassifyingStage> stage;
  EdgePathPresentationPtr presentation;
  std::optional<PresentedHom> hom;
  bool surjective = false;
  /// The join stage, the covering attached to the kernel, has an edge-path
  /// group that Tietze elimination reduces to the trivial group.
  bool injective_certified = false;
  std::string reason;
  bool is_isomorphism() const { return surjective && injective_certified; }
};

CounitResult counit(const GroupPtr& g, int n, const SearchBudget& budget = SearchBudget::from_env());

// ------------------------------------------------------- classifying maps

/// Equivariant map from a total space into a join stage, given by a level
/// and an element x_v per base vertex: φ(v, g) = (level_v, x_v g).
struct EquivariantMap {
  std::shared_ptr<const TotalSpace> source;
  std::shared_ptr<const JoinStage> target;
  std::vector<int> level;
  std::vector<Elem> offset;

  Vertex operator()(Vertex p) const;
};

/// Empty when φ is simplicial and equivariant, otherwise the first problem.
std::optional<std::string> check_equivariant_map(const EquivariantMap& m);

/// Levels: the basepoint first at level 0, then the other vertices in index
/// order; x_v is the tree holonomy h_v. Target stage |V| - 1 unless a
/// larger stage of the same group is supplied.
EquivariantMap classifying_map(const Cocycle& c, std::shared_ptr<const JoinStage> target = nullptr);

/// Partial data over a vertex set A: total-space vertex -> join vertex.
/// Keeps it, and gives each vertex outside A (index order) the next unused
/// level with x_v = h_v. The target stage is the highest level used.
EquivariantMap extend_classifying_map(const Cocycle& c, const std::vector<Vertex>& subcomplex,
                                      const std::vector<std::pair<Vertex, Vertex>>& partial);

/// The map of orbit spaces X -> stage induced by φ, on 1-cells.
CellMap orbit_map(const EquivariantMap& m, const Cocycle& c, const ClassifyingStage& stage);

/// Pullback of the universal values along the orbit map of φ.
Cocycle classifying_pullback(const EquivariantMap& m, const Cocycle& c,
                             const ClassifyingStage& stage);

// --------------------------------------------------- algebraic equivalence

/// a ≡ b: their pushforwards of the universal cocycle are gauge equivalent.
bool algebraically_equivalent(const PresentedHom& a, const PresentedHom& b,
                              const EdgePathPresentation& pres,
                              GaugeMethod method = GaugeMethod::tree);

/// Ω̃f: generator of the non-tree cell e of X goes to the word of the image
/// of X's tree loop through e.
WordHom omega_on_map(const CellMap& f, const EdgePathPresentation& source,
                     const EdgePathPresentation& target);
WordHom omega_on_map(const SimplicialMap& f, const EdgePathPresentationPtr& source,
                     const EdgePathPresentationPtr& target);

/// B̃a on matched stages: orbit of ((i, x), (j, y)) goes to the orbit of
/// ((i, a x), (j, a y)).
CellMap induced_stage_map(const FiniteHom& a, const ClassifyingStage& bg,
                          const ClassifyingStage& bh);

// ---------------------------------------------------------- classification

struct ClassificationRow {
  PresentedHom hom;
  std::size_t class_size = 0;
  Cocycle cocycle;
  EquivariantMap map;
  Cocycle pulled_back;
  GaugeTransform witness;  // pulled_back -> cocycle
};

struct Classification {
  ComplexPtr base;
  GroupPtr group;
  EdgePathPresentationPtr presentation;
  std::size_t hom_count = 0;
  std::vector<ClassificationRow> rows;
  std::shared_ptr<const ClassifyingStage> stage;

  bool oracle_run = false;
  std::size_t oracle_cocycles = 0;
  std::size_t oracle_classes = 0;
  /// Pulled-back cocycles of distinct rows are pairwise inequivalent.
  bool pullbacks_distinct = false;
  bool verified() const {
    return pullbacks_distinct && (!oracle_run || oracle_classes == rows.size());
  }
};

struct ClassifyOptions {
  bool oracle = true;
  GaugeMethod method = GaugeMethod::tree;
};

Classification classify_bundles(const ComplexPtr& x, const GroupPtr& g,
                                const ClassifyOptions& options = {},
                                const SearchBudget& budget = SearchBudget::from_env());

/// Gauge classes of all cocycles on X, by exhaustive search.
struct OracleCount {
  std::size_t cocycles = 0;
  std::size_t classes = 0;
};
OracleCount cocycle_class_oracle(const DeltaComplex& x, const FiniteGroup& g,
                                 const SearchBudget& budget = SearchBudget::from_env());

// -------------------------------------------------------------- naturality

struct NaturalityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct NaturalityReport {
  std::vector<NaturalityCheck> checks;
  bool ok() const;
};

/// Unit, counit, both classification squares, the B̃a square and the
/// triangle identity for f: X -> Y (pointed) and a: G -> H, at stage n for
/// the B̃a and counit comparisons.
NaturalityReport verify_naturality(const SimplicialMap& f, const FiniteHom& a, int stage = 2,
                                   const SearchBudget& budget = SearchBudget::from_env());

}  // namespace pbundle
