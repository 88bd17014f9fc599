#include "pbundle/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "pbundle/error.hpp"

namespace pbundle {

namespace {

std::string describe(const std::vector<std::string>& labels, std::span<const Vertex> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += labels.at(s[i]);
  }
  return out + "}";
}

}  // namespace

// ------------------------------------------------------- SimplicialComplex

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> labels,
                                                 const std::vector<std::vector<Vertex>>& facets,
                                                 std::optional<Vertex> basepoint) {
  SimplicialComplex k;
  k.labels_ = std::move(labels);
  const auto n = static_cast<Vertex>(k.labels_.size());
  {
    auto sorted = k.labels_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) fail("duplicate vertex label '" + *dup + "'");
  }
  if (basepoint && (*basepoint < 0 || *basepoint >= n)) fail("basepoint is not a vertex");
  k.basepoint_ = basepoint;

  std::vector<std::set<Simplex>> by_dim(1);
  for (Vertex v = 0; v < n; ++v) by_dim[0].insert({v});
  for (const auto& raw : facets) {
    if (raw.empty()) fail("empty facet");
    Simplex f = raw;
    for (Vertex v : f)
      if (v < 0 || v >= n) fail("facet references unknown vertex index " + std::to_string(v));
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.size() > 24) fail("facet dimension too large");
    const std::size_t d = f.size() - 1;
    if (by_dim.size() <= d) by_dim.resize(d + 1);
    if (by_dim[d].count(f)) continue;
    // every nonempty subset
    const std::uint32_t subsets = 1u << f.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask & (1u << i)) s.push_back(f[i]);
      by_dim[s.size() - 1].insert(std::move(s));
    }
  }
  while (by_dim.size() > 1 && by_dim.back().empty()) by_dim.pop_back();
  if (n == 0) by_dim.clear();
  for (auto& level : by_dim) k.by_dim_.emplace_back(level.begin(), level.end());

  // facets: simplices not a face of a simplex one dimension up
  std::vector<std::set<Simplex>> covered(k.by_dim_.size());
  for (std::size_t d = 1; d < k.by_dim_.size(); ++d)
    for (const auto& s : k.by_dim_[d])
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        covered[d - 1].insert(std::move(face));
      }
  for (std::size_t d = 0; d < k.by_dim_.size(); ++d)
    for (const auto& s : k.by_dim_[d])
      if (!covered[d].count(s)) k.facets_.push_back(s);
  std::sort(k.facets_.begin(), k.facets_.end());

  k.adjacency_.assign(static_cast<std::size_t>(n), {});
  if (k.by_dim_.size() > 1)
    for (const auto& e : k.by_dim_[1]) {
      k.adjacency_[e[0]].push_back(e[1]);
      k.adjacency_[e[1]].push_back(e[0]);
    }
  for (auto& a : k.adjacency_) std::sort(a.begin(), a.end());
  return k;
}

SimplicialComplex SimplicialComplex::validate(std::vector<std::string> labels,
                                              const std::vector<std::vector<std::string>>& facets,
                                              const std::optional<std::string>& basepoint) {
  std::map<std::string, Vertex> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) fail("empty vertex label");
    if (!index.emplace(labels[i], static_cast<Vertex>(i)).second)
      fail("duplicate vertex label '" + labels[i] + "'");
  }
  std::vector<std::vector<Vertex>> idx_facets;
  for (const auto& f : facets) {
    if (f.empty()) fail("empty facet");
    std::vector<Vertex> s;
    for (const auto& name : f) {
      auto it = index.find(name);
      if (it == index.end()) {
        std::string listed;
        for (const auto& x : f) listed += (listed.empty() ? "" : ",") + x;
        fail("facet {" + listed + "} references unknown vertex '" + name + "'");
      }
      s.push_back(it->second);
    }
    idx_facets.push_back(std::move(s));
  }
  std::optional<Vertex> bp;
  if (basepoint) {
    auto it = index.find(*basepoint);
    if (it == index.end()) fail("basepoint '" + *basepoint + "' is not a vertex");
    bp = it->second;
  }
  return from_facets(std::move(labels), idx_facets, bp);
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
  static const std::vector<Simplex> none;
  if (d < 0 || d >= static_cast<int>(by_dim_.size())) return none;
  return by_dim_[d];
}

std::size_t SimplicialComplex::simplex_count() const {
  std::size_t n = 0;
  for (const auto& level : by_dim_) n += level.size();
  return n;
}

std::optional<Vertex> SimplicialComplex::find_vertex(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<Vertex>(i);
  return std::nullopt;
}

SimplicialComplex SimplicialComplex::with_basepoint(std::optional<Vertex> v) const {
  if (v && (*v < 0 || static_cast<std::size_t>(*v) >= vertex_count()))
    fail("basepoint is not a vertex");
  SimplicialComplex k = *this;
  k.basepoint_ = v;
  return k;
}

bool SimplicialComplex::contains(std::span<const Vertex> s) const {
  Simplex sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return index_of(sorted).has_value();
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& sorted) const {
  if (sorted.empty()) return std::nullopt;
  const auto& level = simplices(static_cast<int>(sorted.size()) - 1);
  auto it = std::lower_bound(level.begin(), level.end(), sorted);
  if (it == level.end() || *it != sorted) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex& k) {
  const auto n = k.vertex_count();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : k.simplices(1)) {
    const Vertex a = find(e[0]);
    const Vertex b = find(e[1]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<Vertex, std::vector<Vertex>> groups;
  for (std::size_t v = 0; v < n; ++v)
    groups[find(static_cast<Vertex>(v))].push_back(static_cast<Vertex>(v));
  std::vector<std::vector<Vertex>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::vector<Edge> spanning_tree(const SimplicialComplex& k, Vertex root, TreeOrder order) {
  const auto n = k.vertex_count();
  if (root < 0 || static_cast<std::size_t>(root) >= n) fail("spanning tree root is not a vertex");
  std::vector<bool> seen(n, false);
  std::vector<Edge> tree;
  seen[root] = true;
  if (order == TreeOrder::breadth_first) {
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (Vertex w : k.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          tree.emplace_back(std::min(v, w), std::max(v, w));
          queue.push(w);
        }
    }
  } else {
    // iterative preorder depth-first search
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& nbrs = k.neighbors(v);
      if (next == nbrs.size()) {
        stack.pop_back();
        continue;
      }
      const Vertex w = nbrs[next++];
      if (seen[w]) continue;
      seen[w] = true;
      tree.emplace_back(std::min(v, w), std::max(v, w));
      stack.emplace_back(w, 0);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    fail("complex is disconnected; no spanning tree");
  std::sort(tree.begin(), tree.end());
  return tree;
}

// ------------------------------------------------------------ SimplicialMap

SimplicialMap::SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<Vertex> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (!source_ || !target_) fail("simplicial map needs a source and a target");
  if (image_.size() != source_->vertex_count()) fail("simplicial map must give one image per vertex");
  for (Vertex v : image_)
    if (v < 0 || static_cast<std::size_t>(v) >= target_->vertex_count())
      fail("simplicial map image is not a vertex of the target");
  for (int d = 1; d <= source_->dimension(); ++d)
    for (const auto& s : source_->simplices(d))
      if (!target_->contains(apply(s)))
        fail("vertex map sends simplex " + describe(source_->labels(), s) +
             " outside the target complex");
}

SimplicialMap SimplicialMap::identity(const ComplexPtr& k) {
  std::vector<Vertex> image(k->vertex_count());
  std::iota(image.begin(), image.end(), 0);
  return SimplicialMap(k, k, std::move(image));
}

SimplicialMap SimplicialMap::constant(const ComplexPtr& source, const ComplexPtr& target, Vertex v) {
  return SimplicialMap(source, target, std::vector<Vertex>(source->vertex_count(), v));
}

Simplex SimplicialMap::apply(std::span<const Vertex> s) const {
  Simplex out;
  for (Vertex v : s) out.push_back(image_.at(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool SimplicialMap::is_pointed() const {
  return source_->basepoint() && target_->basepoint() &&
         image_[*source_->basepoint()] == *target_->basepoint();
}

SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner) {
  if (!(*inner.target() == *outer.source())) fail("compose: target of inner is not source of outer");
  std::vector<Vertex> image;
  for (Vertex v : inner.image()) image.push_back(outer(v));
  return SimplicialMap(inner.source(), outer.target(), std::move(image));
}

bool are_contiguous(const SimplicialMap& f, const SimplicialMap& g) {
  if (!(*f.source() == *g.source()) || !(*f.target() == *g.target()))
    fail("are_contiguous: maps have different source or target");
  for (int d = 0; d <= f.source()->dimension(); ++d)
    for (const auto& s : f.source()->simplices(d)) {
      Simplex u = f.apply(s);
      const Simplex w = g.apply(s);
      u.insert(u.end(), w.begin(), w.end());
      if (!f.target()->contains(u)) return false;
    }
  return true;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::set<std::string> names(a.labels().begin(), a.labels().end());
  bool clash = false;
  for (const auto& l : b.labels()) clash = clash || names.count(l);
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(clash ? "a." + l : l);
  for (const auto& l : b.labels()) labels.push_back(clash ? "b." + l : l);
  const auto shift = static_cast<Vertex>(a.vertex_count());

  std::vector<std::vector<Vertex>> facets;
  if (a.vertex_count() == 0) {
    for (const auto& fb : b.facets()) {
      std::vector<Vertex> f;
      for (Vertex v : fb) f.push_back(v + shift);
      facets.push_back(std::move(f));
    }
  } else if (b.vertex_count() == 0) {
    facets = {a.facets().begin(), a.facets().end()};
  } else {
    for (const auto& fa : a.facets())
      for (const auto& fb : b.facets()) {
        std::vector<Vertex> f = fa;
        for (Vertex v : fb) f.push_back(v + shift);
        facets.push_back(std::move(f));
      }
  }
  return SimplicialComplex::from_facets(std::move(labels), facets, a.basepoint());
}

// -------------------------------------------------------------- DeltaComplex

DeltaComplex::DeltaComplex(std::vector<std::vector<Cell>> cells, std::optional<Vertex> basepoint,
                           std::vector<std::string> vertex_labels)
    : cells_(std::move(cells)), basepoint_(basepoint), labels_(std::move(vertex_labels)) {
  const std::size_t nv = cells_.empty() ? 0 : cells_[0].size();
  for (std::size_t i = 0; i < nv; ++i) {
    const Cell& c = cells_[0][i];
    if (c.vertices != std::vector<Vertex>{static_cast<Vertex>(i)} || !c.faces.empty())
      fail("0-cell " + std::to_string(i) + " must be the vertex " + std::to_string(i));
  }
  for (std::size_t d = 1; d < cells_.size(); ++d)
    for (std::size_t i = 0; i < cells_[d].size(); ++i) {
      const Cell& c = cells_[d][i];
      const std::string where = std::to_string(d) + "-cell " + std::to_string(i);
      if (c.vertices.size() != d + 1 || c.faces.size() != d + 1)
        fail(where + " must have " + std::to_string(d + 1) + " vertices and faces");
      for (std::size_t k = 0; k <= d; ++k) {
        if (c.faces[k] >= cells_[d - 1].size()) fail(where + " has a face out of range");
        auto expect = c.vertices;
        expect.erase(expect.begin() + static_cast<std::ptrdiff_t>(k));
        if (cells_[d - 1][c.faces[k]].vertices != expect)
          fail(where + ": face " + std::to_string(k) + " has inconsistent vertices");
      }
      if (d >= 2)
        for (std::size_t a = 0; a < d + 1; ++a)
          for (std::size_t b = a + 1; b < d + 1; ++b) {
            const auto lhs = cells_[d - 1][c.faces[b]].faces[a];
            const auto rhs = cells_[d - 1][c.faces[a]].faces[b - 1];
            if (lhs != rhs) fail(where + " violates a simplicial identity");
          }
    }
  if (basepoint_ && (*basepoint_ < 0 || static_cast<std::size_t>(*basepoint_) >= nv))
    fail("basepoint is not a vertex");
  if (labels_.empty())
    for (std::size_t i = 0; i < nv; ++i) labels_.push_back(std::to_string(i));
  if (labels_.size() != nv) fail("Δ-complex needs one label per vertex");
  index();
}

void DeltaComplex::index() {
  incident_.assign(vertex_count(), {});
  edge_lookup_.clear();
  for (std::size_t e = 0; e < count(1); ++e) {
    const auto& v = cells_[1][e].vertices;
    edge_lookup_.emplace(std::make_pair(v[0], v[1]), e);
    incident_[v[0]].push_back(e);
    if (v[1] != v[0]) incident_[v[1]].push_back(e);
  }
}

DeltaComplex DeltaComplex::from_simplicial(const ComplexPtr& k) {
  std::vector<std::vector<Cell>> cells(static_cast<std::size_t>(std::max(k->dimension() + 1, 0)));
  for (int d = 0; d <= k->dimension(); ++d)
    for (const auto& s : k->simplices(d)) {
      Cell c{s, {}};
      if (d > 0)
        for (std::size_t i = 0; i < s.size(); ++i) {
          Simplex face = s;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          c.faces.push_back(*k->index_of(face));
        }
      cells[d].push_back(std::move(c));
    }
  DeltaComplex out(std::move(cells), k->basepoint(), k->labels());
  out.origin_ = k;
  return out;
}

std::size_t DeltaComplex::count(int d) const {
  if (d < 0 || d >= static_cast<int>(cells_.size())) return 0;
  return cells_[d].size();
}

const std::vector<Cell>& DeltaComplex::cells(int d) const {
  static const std::vector<Cell> none;
  if (d < 0 || d >= static_cast<int>(cells_.size())) return none;
  return cells_[d];
}

DeltaComplex DeltaComplex::with_basepoint(std::optional<Vertex> v) const {
  if (v && (*v < 0 || static_cast<std::size_t>(*v) >= vertex_count()))
    fail("basepoint is not a vertex");
  DeltaComplex out = *this;
  out.basepoint_ = v;
  if (origin_) out.origin_ = std::make_shared<const SimplicialComplex>(origin_->with_basepoint(v));
  return out;
}

std::optional<DeltaComplex::EdgeRef> DeltaComplex::find_edge(Vertex u, Vertex v) const {
  if (auto it = edge_lookup_.find({u, v}); it != edge_lookup_.end()) return EdgeRef{it->second, false};
  if (auto it = edge_lookup_.find({v, u}); it != edge_lookup_.end()) return EdgeRef{it->second, true};
  return std::nullopt;
}

// ------------------------------------------------------------------ CellMap

CellMap::CellMap(DeltaPtr source, DeltaPtr target, std::vector<Vertex> vertex_image,
                 std::vector<EdgeImage> edge_image)
    : source_(std::move(source)), target_(std::move(target)),
      vertex_image_(std::move(vertex_image)), edge_image_(std::move(edge_image)) {
  if (!source_ || !target_) fail("cell map needs a source and a target");
  if (vertex_image_.size() != source_->vertex_count() || edge_image_.size() != source_->count(1))
    fail("cell map must give one image per vertex and per 1-cell");
  for (Vertex v : vertex_image_)
    if (v < 0 || static_cast<std::size_t>(v) >= target_->vertex_count())
      fail("cell map vertex image out of range");
  for (std::size_t e = 0; e < edge_image_.size(); ++e) {
    const auto& src = source_->cell(1, e).vertices;
    const Vertex a = vertex_image_[src[0]];
    const Vertex b = vertex_image_[src[1]];
    const auto& img = edge_image_[e];
    if (img.collapsed()) {
      if (a != b) fail("cell map collapses a 1-cell whose endpoints have different images");
      continue;
    }
    if (img.cell >= target_->count(1)) fail("cell map edge image out of range");
    auto tv = target_->cell(1, img.cell).vertices;
    if (img.reversed) std::swap(tv[0], tv[1]);
    if (tv[0] != a || tv[1] != b) fail("cell map edge image does not match the vertex images");
  }
}

CellMap CellMap::from_simplicial(const SimplicialMap& f, DeltaPtr source, DeltaPtr target) {
  std::vector<EdgeImage> edges;
  for (std::size_t e = 0; e < source->count(1); ++e) {
    const auto& v = source->cell(1, e).vertices;
    const Vertex a = f(v[0]);
    const Vertex b = f(v[1]);
    if (a == b) {
      edges.push_back({});
      continue;
    }
    auto ref = target->find_edge(a, b);
    if (!ref) fail("simplicial map image edge is missing from the target Δ-complex");
    edges.push_back({ref->cell, ref->reversed});
  }
  return CellMap(std::move(source), std::move(target), f.image(), std::move(edges));
}

bool CellMap::is_pointed() const {
  return source_->basepoint() && target_->basepoint() &&
         vertex_image_[*source_->basepoint()] == *target_->basepoint();
}

// -------------------------------------------------------------- GroupAction

GroupAction::GroupAction(ComplexPtr complex, GroupPtr group, std::vector<Vertex> table)
    : complex_(std::move(complex)), group_(std::move(group)), table_(std::move(table)) {
  const auto nv = complex_->vertex_count();
  const auto ng = group_->order();
  if (table_.size() != nv * ng) fail("action table must have |V| x |G| entries");
  for (Vertex v : table_)
    if (v < 0 || static_cast<std::size_t>(v) >= nv) fail("action table entry is not a vertex");
  for (std::size_t v = 0; v < nv; ++v) {
    const auto x = static_cast<Vertex>(v);
    if (act(x, group_->identity()) != x) fail("identity does not act trivially");
    for (Elem g = 0; g < static_cast<Elem>(ng); ++g)
      for (Elem h = 0; h < static_cast<Elem>(ng); ++h)
        if (act(act(x, g), h) != act(x, group_->mul(g, h)))
          fail("action is not compatible with the group law");
  }
  for (Elem g = 0; g < static_cast<Elem>(ng); ++g)
    for (int d = 1; d <= complex_->dimension(); ++d)
      for (const auto& s : complex_->simplices(d))
        if (!complex_->index_of(act(s, g)))
          fail("group element " + group_->element_name(g) + " does not act simplicially");
}

Simplex GroupAction::act(std::span<const Vertex> s, Elem g) const {
  Simplex out;
  for (Vertex v : s) out.push_back(act(v, g));
  std::sort(out.begin(), out.end());
  return out;
}

bool GroupAction::is_free() const {
  for (std::size_t v = 0; v < complex_->vertex_count(); ++v)
    for (Elem g = 0; g < static_cast<Elem>(group_->order()); ++g)
      if (g != group_->identity() && act(static_cast<Vertex>(v), g) == static_cast<Vertex>(v))
        return false;
  return true;
}

DeltaComplex::EdgeRef Quotient::edge_through(Vertex u, Vertex v) const {
  auto it = oriented_edges.find({u, v});
  if (it == oriented_edges.end()) fail("edge is not in the acted-on complex");
  return it->second;
}

Quotient quotient_by_action(const GroupAction& action) {
  if (!action.is_free()) fail("quotient requires a free action");
  const auto& k = *action.complex();
  const auto& g = *action.group();
  const auto ng = static_cast<Elem>(g.order());
  Quotient q;

  q.vertex_orbit.assign(k.vertex_count(), -1);
  Vertex orbits = 0;
  for (std::size_t v = 0; v < k.vertex_count(); ++v) {
    if (q.vertex_orbit[v] >= 0) continue;
    for (Elem x = 0; x < ng; ++x) q.vertex_orbit[action.act(static_cast<Vertex>(v), x)] = orbits;
    ++orbits;
  }

  const int dim = k.dimension();
  std::vector<std::vector<Cell>> cells(static_cast<std::size_t>(std::max(dim + 1, 0)));
  q.representative.resize(cells.size());
  q.orbit_of.resize(cells.size());
  for (int d = 0; d <= dim; ++d) {
    auto& orbit_of = q.orbit_of[d];
    for (const auto& s : k.simplices(d)) {
      if (orbit_of.count(s)) continue;
      const std::size_t c = q.representative[d].size();
      std::vector<Vertex> rep = s;
      std::sort(rep.begin(), rep.end(), [&](Vertex a, Vertex b) {
        return std::pair(q.vertex_orbit[a], a) < std::pair(q.vertex_orbit[b], b);
      });
      for (Elem x = 0; x < ng; ++x) {
        auto [it, fresh] = orbit_of.emplace(action.act(s, x), std::pair(c, x));
        if (!fresh)
          fail("action fixes the simplex " + describe(k.labels(), s) + "; quotient is not a Δ-complex");
      }
      Cell cell;
      for (Vertex v : rep) cell.vertices.push_back(q.vertex_orbit[v]);
      if (d > 0)
        for (std::size_t i = 0; i < rep.size(); ++i) {
          std::vector<Vertex> face = rep;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          Simplex sorted = face;
          std::sort(sorted.begin(), sorted.end());
          const auto [fc, fx] = q.orbit_of[d - 1].at(sorted);
          const auto& frep = q.representative[d - 1][fc];
          for (std::size_t j = 0; j < face.size(); ++j)
            if (action.act(frep[j], fx) != face[j])
              fail("no invariant vertex order on " + describe(k.labels(), s) +
                   "; quotient is not a Δ-complex");
          cell.faces.push_back(fc);
        }
      q.representative[d].push_back(std::move(rep));
      cells[d].push_back(std::move(cell));
    }
  }

  if (dim >= 1)
    for (const auto& [s, ref] : q.orbit_of[1]) {
      const auto& rep = q.representative[1][ref.first];
      const Vertex a = action.act(rep[0], ref.second);
      const Vertex b = action.act(rep[1], ref.second);
      q.oriented_edges[{a, b}] = {ref.first, false};
      q.oriented_edges[{b, a}] = {ref.first, true};
    }

  std::optional<Vertex> bp;
  if (k.basepoint()) bp = q.vertex_orbit[*k.basepoint()];
  std::vector<std::string> labels;
  for (const auto& rep : q.representative.empty() ? std::vector<std::vector<Vertex>>{}
                                                  : q.representative[0])
    labels.push_back("[" + k.label(rep[0]) + "]");
  q.delta = DeltaComplex(std::move(cells), bp, std::move(labels));
  return q;
}

}  // namespace pbundle
