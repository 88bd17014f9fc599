#pragma once

// Brute-force search kernels.
//
// Each search exists in a serial reference form and an OpenMP form; both
// return identical results in identical order. The serial forms are kept for
// tests and for the benchmark in bench/.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pbundle/group.hpp"
#include "pbundle/search_budget.hpp"

namespace pbundle::kernels {

enum class Exec { serial, parallel };

/// Flat view of the 1- and 2-cells of a base: edges oriented v0 -> v1 and
/// triangles listed by their edge indices (e01, e12, e02). A value vector
/// satisfies the triangle condition when v[e01] * v[e12] * v[e02]^-1 = 1.
struct CellSystem {
  int vertices = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 3>> triangles;
};

// -- homomorphisms P -> G -------------------------------------------------

/// Literal enumeration of all |G|^#gens image tuples, filtered by relators.
std::vector<std::vector<Elem>> hom_images_literal(const FinitelyPresentedGroup& p,
                                                  const FiniteGroup& g,
                                                  const SearchBudget& budget, Exec exec);

/// Backtracking over generators with relator propagation: once a relator
/// has a single unassigned generator occurring once, that image is forced.
/// Same result set and order as the literal enumeration.
std::vector<std::vector<Elem>> hom_images_search(const FinitelyPresentedGroup& p,
                                                 const FiniteGroup& g,
                                                 const SearchBudget& budget, Exec exec);

// -- cocycles and gauges --------------------------------------------------

bool satisfies_triangles(const CellSystem& cells, const FiniteGroup& g,
                         std::span<const Elem> values);

/// values'(u -> v) = t(u)^-1 values(u -> v) t(v)
std::vector<Elem> apply_gauge(const CellSystem& cells, const FiniteGroup& g,
                              std::span<const Elem> values, std::span<const Elem> gauge);

/// Lexicographically first gauge t (vertex 0 most significant) taking `from`
/// to `to`, by exhausting all |G|^#vertices candidates.
std::optional<std::vector<Elem>> gauge_search(const CellSystem& cells, const FiniteGroup& g,
                                              std::span<const Elem> from,
                                              std::span<const Elem> to,
                                              const SearchBudget& budget, Exec exec);

/// Every valid cocycle, sorted lexicographically. Literal form filters all
/// |G|^#edges assignments.
std::vector<std::vector<Elem>> cocycles_literal(const CellSystem& cells, const FiniteGroup& g,
                                                const SearchBudget& budget);

/// Every valid cocycle, sorted lexicographically, by edge backtracking with
/// triangle forcing.
std::vector<std::vector<Elem>> cocycles_search(const CellSystem& cells, const FiniteGroup& g,
                                               const SearchBudget& budget, Exec exec);

/// Number of gauge orbits among `cocycles` (sorted, closed under gauge), by
/// union-find under the single-vertex generator gauges.
std::size_t gauge_orbit_count(const CellSystem& cells, const FiniteGroup& g,
                              const std::vector<std::vector<Elem>>& cocycles,
                              const SearchBudget& budget, Exec exec);

/// Number of gauge orbits by applying all |G|^#vertices gauges to each
/// unvisited cocycle. Serial; for small inputs only.
std::size_t gauge_orbit_count_literal(const CellSystem& cells, const FiniteGroup& g,
                                      const std::vector<std::vector<Elem>>& cocycles,
                                      const SearchBudget& budget);

/// Number of worker threads the parallel kernels will use.
int worker_count();

}  // namespace pbundle::kernels
