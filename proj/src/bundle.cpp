#include "pbundle/bundle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pbundle/error.hpp"

namespace pbundle {

namespace {

bool same_base(const DeltaPtr& a, const DeltaPtr& b) { return a == b || *a == *b; }
bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || *a == *b; }

std::string cell_name(const DeltaComplex& k, int d, std::size_t i) {
  std::string out = "{";
  const auto& v = k.cell(d, i).vertices;
  for (std::size_t j = 0; j < v.size(); ++j) out += (j ? "," : "") + k.vertex_labels().at(v[j]);
  return out + "}";
}

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  /// Class ids numbered by least member.
  std::pair<std::size_t, std::vector<std::size_t>> classes() {
    std::vector<std::size_t> id(parent_.size(), static_cast<std::size_t>(-1));
    std::vector<std::size_t> out(parent_.size());
    std::size_t next = 0;
    for (std::size_t x = 0; x < parent_.size(); ++x) {
      const auto r = find(x);
      if (id[r] == static_cast<std::size_t>(-1)) id[r] = next++;
      out[x] = id[r];
    }
    return {next, out};
  }

private:
  std::vector<std::size_t> parent_;
};

std::size_t connected_count(const DeltaComplex& k) {
  UnionFind uf(k.vertex_count());
  for (const auto& e : k.cells(1)) uf.unite(e.vertices[0], e.vertices[1]);
  return uf.classes().first;
}

}  // namespace

kernels::CellSystem cell_system(const DeltaComplex& k) {
  kernels::CellSystem out;
  out.vertices = static_cast<int>(k.vertex_count());
  for (const auto& e : k.cells(1)) out.edges.push_back({e.vertices[0], e.vertices[1]});
  for (const auto& t : k.cells(2))
    out.triangles.push_back(
        {static_cast<int>(t.faces[2]), static_cast<int>(t.faces[0]), static_cast<int>(t.faces[1])});
  return out;
}

// ------------------------------------------------------------------ Cocycle

std::optional<std::size_t> triangle_violation(const DeltaComplex& base, const FiniteGroup& g,
                                              const std::vector<Elem>& values) {
  const auto& tris = base.cells(2);
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const auto& f = tris[i].faces;
    if (g.mul(values[f[2]], values[f[0]]) != values[f[1]]) return i;
  }
  return std::nullopt;
}

Cocycle::Cocycle(DeltaPtr base, GroupPtr group, std::vector<Elem> values)
    : base_(std::move(base)), group_(std::move(group)), values_(std::move(values)) {
  if (!base_ || !group_) fail("cocycle needs a base and a group");
  if (values_.size() != base_->count(1)) fail("cocycle needs one value per 1-cell");
  for (Elem x : values_)
    if (x < 0 || static_cast<std::size_t>(x) >= group_->order())
      fail("cocycle value is not an element of " + group_->name());
  if (auto bad = triangle_violation(*base_, *group_, values_))
    fail("triangle condition fails on the 2-cell " + cell_name(*base_, 2, *bad));
}

Cocycle Cocycle::trivial(DeltaPtr base, GroupPtr group) {
  const auto n = base->count(1);
  const Elem e = group->identity();
  return Cocycle(std::move(base), std::move(group), std::vector<Elem>(n, e));
}

Cocycle Cocycle::from_edges(DeltaPtr base, GroupPtr group,
                            const std::vector<std::tuple<Vertex, Vertex, Elem>>& values) {
  std::vector<Elem> out(base->count(1), group->identity());
  std::vector<bool> set(out.size(), false);
  for (const auto& [u, v, x] : values) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= base->vertex_count() ||
        static_cast<std::size_t>(v) >= base->vertex_count())
      fail("cocycle value on an unknown vertex");
    if (x < 0 || static_cast<std::size_t>(x) >= group->order())
      fail("cocycle value is not an element of " + group->name());
    auto ref = base->find_edge(u, v);
    if (!ref || u == v)
      fail("no edge " + base->vertex_labels()[u] + " - " + base->vertex_labels()[v] + " in the base");
    const Elem val = ref->reversed ? group->inv(x) : x;
    if (set[ref->cell] && out[ref->cell] != val)
      fail("conflicting values on the edge " + cell_name(*base, 1, ref->cell));
    out[ref->cell] = val;
    set[ref->cell] = true;
  }
  return Cocycle(std::move(base), std::move(group), std::move(out));
}

Elem Cocycle::along(const DeltaComplex::EdgeRef& step) const {
  const Elem x = values_.at(step.cell);
  return step.reversed ? group_->inv(x) : x;
}

Elem Cocycle::value(Vertex u, Vertex v) const {
  if (u == v) return group_->identity();
  auto ref = base_->find_edge(u, v);
  if (!ref) fail("no edge between the given vertices");
  return along(*ref);
}

bool Cocycle::operator==(const Cocycle& other) const {
  return same_base(base_, other.base_) && same_group(group_, other.group_) &&
         values_ == other.values_;
}

// -------------------------------------------------------------- WordCocycle

namespace {

bool is_rotation(const Word& w, const Word& r) {
  if (w.size() != r.size()) return false;
  const auto& a = w.letters();
  const auto& b = r.letters();
  for (std::size_t shift = 0; shift < a.size(); ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a[i] == b[(i + shift) % b.size()];
    if (ok) return true;
  }
  return false;
}

}  // namespace

WordCocycle::WordCocycle(DeltaPtr base, PresentationPtr group, std::vector<Word> values)
    : base_(std::move(base)), group_(std::move(group)), values_(std::move(values)) {
  if (!base_ || !group_) fail("cocycle needs a base and a group");
  if (values_.size() != base_->count(1)) fail("cocycle needs one value per 1-cell");
  for (const auto& w : values_)
    for (const auto& l : w.letters())
      if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= group_->generator_count())
        fail("cocycle word uses an unknown generator");
  std::vector<Word> rels;
  for (const auto& r : group_->relators()) {
    rels.push_back(r.cyclically_reduced());
    rels.push_back(r.inverse().cyclically_reduced());
  }
  const auto& tris = base_->cells(2);
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const auto& f = tris[i].faces;
    const Word w = (values_[f[2]] * values_[f[0]] * values_[f[1]].inverse()).cyclically_reduced();
    if (w.empty()) continue;
    if (std::none_of(rels.begin(), rels.end(), [&](const Word& r) { return is_rotation(w, r); }))
      fail("triangle condition fails on the 2-cell " + cell_name(*base_, 2, i));
  }
}

WordCocycle WordCocycle::unchecked(DeltaPtr base, PresentationPtr group, std::vector<Word> values) {
  WordCocycle c;
  c.base_ = std::move(base);
  c.group_ = std::move(group);
  c.values_ = std::move(values);
  return c;
}

Word WordCocycle::along(const DeltaComplex::EdgeRef& step) const {
  const Word& w = values_.at(step.cell);
  return step.reversed ? w.inverse() : w;
}

bool WordCocycle::operator==(const WordCocycle& other) const {
  return same_base(base_, other.base_) && *group_ == *other.group_ && values_ == other.values_;
}

WordCocycle universal_cocycle(const EdgePathPresentation& pres) {
  std::vector<Word> values;
  for (std::size_t e = 0; e < pres.base->count(1); ++e)
    values.push_back(pres.letter({e, false}));
  return WordCocycle(pres.base, pres.group, std::move(values));
}

// ------------------------------------------------------------------- gauges

Cocycle apply_gauge(const Cocycle& c, const GaugeTransform& t) {
  if (t.size() != c.base()->vertex_count()) fail("gauge needs one element per vertex");
  for (Elem x : t)
    if (x < 0 || static_cast<std::size_t>(x) >= c.group()->order()) fail("gauge value out of range");
  return Cocycle(c.base(), c.group(),
                 kernels::apply_gauge(cell_system(*c.base()), *c.group(), c.values(), t));
}

GaugeTransform compose_gauges(const FiniteGroup& g, const GaugeTransform& t1,
                              const GaugeTransform& t2) {
  if (t1.size() != t2.size()) fail("gauges live on different bases");
  GaugeTransform out(t1.size());
  for (std::size_t v = 0; v < t1.size(); ++v) out[v] = g.mul(t1[v], t2[v]);
  return out;
}

GaugeTransform inverse_gauge(const FiniteGroup& g, const GaugeTransform& t) {
  GaugeTransform out(t.size());
  for (std::size_t v = 0; v < t.size(); ++v) out[v] = g.inv(t[v]);
  return out;
}

GaugeTransform tree_holonomy(const Cocycle& c, const EdgePathPresentation& pres) {
  if (!same_base(c.base(), pres.base)) fail("presentation is for a different base");
  const auto& g = *c.group();
  GaugeTransform h(c.base()->vertex_count(), g.identity());
  for (std::size_t v = 0; v < h.size(); ++v)
    for (const auto& step : pres.tree_path[v]) h[v] = g.mul(h[v], c.along(step));
  return h;
}

Cocycle tree_normalize(const Cocycle& c, const EdgePathPresentation& pres) {
  return apply_gauge(c, inverse_gauge(*c.group(), tree_holonomy(c, pres)));
}

std::optional<GaugeTransform> gauge_equivalent(const Cocycle& c1, const Cocycle& c2,
                                               GaugeMethod method, const SearchBudget& budget) {
  if (!same_base(c1.base(), c2.base())) fail("gauge_equivalent: cocycles on different bases");
  if (!same_group(c1.group(), c2.group())) fail("gauge_equivalent: cocycles in different groups");
  const auto& g = *c1.group();
  const auto cells = cell_system(*c1.base());
  if (method == GaugeMethod::oracle)
    return kernels::gauge_search(cells, g, c1.values(), c2.values(), budget,
                                 kernels::Exec::parallel);

  DeltaPtr based = c1.base();
  if (!based->basepoint()) based = std::make_shared<const DeltaComplex>(based->with_basepoint(0));
  if (based->vertex_count() == 0) return GaugeTransform{};
  if (connected_count(*based) != 1)
    return kernels::gauge_search(cells, g, c1.values(), c2.values(), budget,
                                 kernels::Exec::parallel);
  const auto pres = edge_path_group(based);
  const Cocycle b1(based, c1.group(), c1.values());
  const Cocycle b2(based, c2.group(), c2.values());
  const auto h1 = tree_holonomy(b1, *pres);
  const auto h2 = tree_holonomy(b2, *pres);
  std::optional<GaugeTransform> best;
  for (Elem k = 0; k < static_cast<Elem>(g.order()); ++k) {
    GaugeTransform t(h1.size());
    for (std::size_t v = 0; v < t.size(); ++v) t[v] = g.mul(g.mul(g.inv(h1[v]), k), h2[v]);
    if (kernels::apply_gauge(cells, g, c1.values(), t) != c2.values()) continue;
    if (!best || t < *best) best = std::move(t);
  }
  return best;
}

// ----------------------------------------------------------------- holonomy

PresentedHom holonomy(const Cocycle& c, const EdgePathPresentationPtr& pres) {
  if (!same_base(c.base(), pres->base)) fail("presentation is for a different base");
  const auto& g = *c.group();
  std::vector<Elem> images;
  for (std::size_t cell : pres->cell_of_generator) {
    Elem x = g.identity();
    for (const auto& step : pres->tree_loop(cell)) x = g.mul(x, c.along(step));
    images.push_back(x);
  }
  return PresentedHom(pres->group, c.group(), std::move(images));
}

PresentedHom holonomy(const Cocycle& c) { return holonomy(c, edge_path_group(c.base())); }

WordHom holonomy(const WordCocycle& c, const EdgePathPresentationPtr& pres) {
  if (!same_base(c.base(), pres->base)) fail("presentation is for a different base");
  std::vector<Word> images;
  for (std::size_t cell : pres->cell_of_generator) {
    Word w;
    for (const auto& step : pres->tree_loop(cell)) w = w * c.along(step);
    images.push_back(std::move(w));
  }
  return WordHom(pres->group, c.group(), std::move(images));
}

// ------------------------------------------------- pushforward and pullback

Cocycle pushforward(const FiniteHom& a, const Cocycle& c) {
  if (!same_group(a.source(), c.group())) fail("pushforward: hom source is not the cocycle group");
  std::vector<Elem> values;
  for (Elem x : c.values()) values.push_back(a.apply(x));
  return Cocycle(c.base(), a.target(), std::move(values));
}

Cocycle pushforward(const PresentedHom& a, const WordCocycle& c) {
  if (!(*a.source() == *c.group())) fail("pushforward: hom source is not the cocycle group");
  std::vector<Elem> values;
  for (const auto& w : c.values()) values.push_back(a.apply(w));
  return Cocycle(c.base(), a.target(), std::move(values));
}

WordCocycle pushforward(const WordHom& a, const WordCocycle& c) {
  if (!(*a.source() == *c.group())) fail("pushforward: hom source is not the cocycle group");
  std::vector<Word> values;
  for (const auto& w : c.values()) values.push_back(a.apply(w));
  return WordCocycle::unchecked(c.base(), a.target(), std::move(values));
}

Cocycle pullback(const CellMap& f, const Cocycle& c) {
  if (!same_base(f.target(), c.base())) fail("pullback: map target is not the cocycle base");
  std::vector<Elem> values;
  for (std::size_t e = 0; e < f.source()->count(1); ++e) {
    const auto& img = f.edge(e);
    values.push_back(img.collapsed() ? c.group()->identity() : c.along({img.cell, img.reversed}));
  }
  return Cocycle(f.source(), c.group(), std::move(values));
}

WordCocycle pullback(const CellMap& f, const WordCocycle& c) {
  if (!same_base(f.target(), c.base())) fail("pullback: map target is not the cocycle base");
  std::vector<Word> values;
  for (std::size_t e = 0; e < f.source()->count(1); ++e) {
    const auto& img = f.edge(e);
    values.push_back(img.collapsed() ? Word{} : c.along({img.cell, img.reversed}));
  }
  return WordCocycle(f.source(), c.group(), std::move(values));
}

Cocycle pullback(const SimplicialMap& f, const Cocycle& c) {
  if (!c.base()->origin() || !(*c.base()->origin() == *f.target()))
    fail("pullback: map target is not the cocycle base");
  auto source = std::make_shared<const DeltaComplex>(DeltaComplex::from_simplicial(f.source()));
  return pullback(CellMap::from_simplicial(f, source, c.base()), c);
}

bool pushforward_pullback_commute(const FiniteHom& a, const SimplicialMap& f, const Cocycle& c) {
  return pushforward(a, pullback(f, c)).values() == pullback(f, pushforward(a, c)).values();
}

// -------------------------------------------------------------- total space

TotalSpace total_space(const Cocycle& c) {
  const auto& base = c.base()->origin();
  if (!base) fail("total space needs a simplicial base");
  const auto& g = *c.group();
  const auto ng = static_cast<Vertex>(g.order());
  std::vector<std::string> labels;
  for (const auto& l : base->labels())
    for (Elem x = 0; x < ng; ++x) labels.push_back(l + "|" + g.element_name(x));
  std::vector<std::vector<Vertex>> facets;
  for (const auto& f : base->facets())
    for (Elem x = 0; x < ng; ++x) {
      std::vector<Vertex> lift;
      for (Vertex v : f) lift.push_back(v * ng + g.mul(c.value(v, f[0]), x));
      facets.push_back(std::move(lift));
    }
  TotalSpace q;
  q.complex = std::make_shared<const SimplicialComplex>(
      SimplicialComplex::from_facets(std::move(labels), facets));
  std::vector<Vertex> table;
  std::vector<Vertex> proj;
  for (Vertex v = 0; v < static_cast<Vertex>(base->vertex_count()); ++v)
    for (Elem x = 0; x < ng; ++x) {
      proj.push_back(v);
      for (Elem k = 0; k < ng; ++k) table.push_back(v * ng + g.mul(x, k));
    }
  q.action = std::make_shared<const GroupAction>(q.complex, c.group(), std::move(table));
  q.projection = std::make_shared<const SimplicialMap>(q.complex, base, std::move(proj));
  return q;
}

// ---------------------------------------------------------------- G-sets

FiniteGSet::FiniteGSet(GroupPtr group, Side side, std::vector<std::string> labels,
                       std::vector<int> table)
    : group_(std::move(group)), side_(side), labels_(std::move(labels)), table_(std::move(table)) {
  const auto n = labels_.size();
  const auto ng = static_cast<Elem>(group_->order());
  if (table_.size() != n * group_->order()) fail("G-set table must have |X| x |G| entries");
  for (int x : table_)
    if (x < 0 || static_cast<std::size_t>(x) >= n) fail("G-set table entry out of range");
  for (int x = 0; x < static_cast<int>(n); ++x) {
    if (act(x, group_->identity()) != x) fail("identity does not act trivially on the G-set");
    for (Elem g = 0; g < ng; ++g)
      for (Elem h = 0; h < ng; ++h) {
        const Elem both = side_ == Side::right ? group_->mul(g, h) : group_->mul(h, g);
        if (act(act(x, g), h) != act(x, both)) fail("G-set action is not compatible with the group law");
      }
  }
}

FiniteGSet FiniteGSet::regular(GroupPtr group, Side side) {
  const auto ng = static_cast<Elem>(group->order());
  std::vector<int> table;
  for (Elem x = 0; x < ng; ++x)
    for (Elem g = 0; g < ng; ++g) table.push_back(side == Side::right ? group->mul(x, g) : group->mul(g, x));
  auto labels = group->element_names();
  return FiniteGSet(std::move(group), side, std::move(labels), std::move(table));
}

FiniteGSet FiniteGSet::point(GroupPtr group, Side side) {
  std::vector<int> table(group->order(), 0);
  return FiniteGSet(std::move(group), side, {"*"}, std::move(table));
}

FiniteGSet FiniteGSet::of_total_space(const TotalSpace& q) {
  const auto& g = *q.group();
  std::vector<int> table;
  for (std::size_t p = 0; p < q.complex->vertex_count(); ++p)
    for (Elem x = 0; x < static_cast<Elem>(g.order()); ++x)
      table.push_back(q.action->act(static_cast<Vertex>(p), x));
  return FiniteGSet(q.group(), Side::right, q.complex->labels(), std::move(table));
}

FiniteGSet FiniteGSet::opposite() const {
  std::vector<int> table;
  for (int x = 0; x < static_cast<int>(size()); ++x)
    for (Elem g = 0; g < static_cast<Elem>(group_->order()); ++g) table.push_back(act(x, group_->inv(g)));
  return FiniteGSet(group_, side_ == Side::right ? Side::left : Side::right, labels_, std::move(table));
}

TensorProduct tensor(const FiniteGSet& m, const FiniteGSet& n) {
  if (!same_group(m.group(), n.group())) fail("tensor: G-sets over different groups");
  if (m.side() != Side::right || n.side() != Side::left)
    fail("tensor needs a right G-set and a left G-set");
  const auto nn = n.size();
  UnionFind uf(m.size() * nn);
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < nn; ++b)
      for (Elem g = 0; g < static_cast<Elem>(m.group()->order()); ++g)
        uf.unite(static_cast<std::size_t>(m.act(static_cast<int>(a), g)) * nn + b,
                 a * nn + static_cast<std::size_t>(n.act(static_cast<int>(b), g)));
  auto [size, ids] = uf.classes();
  return {size, std::move(ids)};
}

SetOverBase base_as_set(std::size_t base_size) {
  SetOverBase s{base_size, {}};
  for (std::size_t v = 0; v < base_size; ++v) s.projection.push_back(static_cast<Vertex>(v));
  return s;
}

SetOverBase total_space_over_base(const TotalSpace& q) {
  return {q.projection->target()->vertex_count(), q.projection->image()};
}

Cotensor cotensor(const SetOverBase& m, const SetOverBase& n) {
  if (m.base_size != n.base_size) fail("cotensor: sets over different bases");
  Cotensor out;
  out.set.base_size = m.base_size;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < n.size(); ++b)
      if (m.projection[a] == n.projection[b]) {
        out.pairs.emplace_back(a, b);
        out.set.projection.push_back(m.projection[a]);
      }
  return out;
}

// ------------------------------------------------ equivariant maps, sections

AssociatedBundle associated_bundle(const TotalSpace& q, const FiniteGSet& z) {
  if (!same_group(q.group(), z.group())) fail("associated bundle: different groups");
  if (z.side() != Side::right) fail("associated bundle needs a right G-set");
  const auto np = q.complex->vertex_count();
  const auto nz = z.size();
  UnionFind uf(np * nz);
  for (std::size_t p = 0; p < np; ++p)
    for (std::size_t x = 0; x < nz; ++x)
      for (Elem g = 0; g < static_cast<Elem>(q.group()->order()); ++g)
        uf.unite(p * nz + x, static_cast<std::size_t>(q.action->act(static_cast<Vertex>(p), g)) * nz +
                                 static_cast<std::size_t>(z.act(static_cast<int>(x), g)));
  AssociatedBundle out;
  std::tie(out.size, out.class_of) = uf.classes();
  out.over.assign(out.size, -1);
  for (std::size_t p = 0; p < np; ++p)
    for (std::size_t x = 0; x < nz; ++x)
      out.over[out.class_of[p * nz + x]] = (*q.projection)(static_cast<Vertex>(p));
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : q.complex->simplices(1))
    for (std::size_t x = 0; x < nz; ++x) {
      const auto a = out.class_of[static_cast<std::size_t>(e[0]) * nz + x];
      const auto b = out.class_of[static_cast<std::size_t>(e[1]) * nz + x];
      edges.emplace(std::min(a, b), std::max(a, b));
    }
  out.edges.assign(edges.begin(), edges.end());
  return out;
}

namespace {

// Backtracking over base vertices in order; `fits(v, choice)` checks the
// constraints between v and the earlier vertices.
template <class Fits>
std::vector<std::vector<std::size_t>> backtrack(std::size_t vertices,
                                                const std::vector<std::vector<std::size_t>>& options,
                                                Fits fits, const SearchBudget& budget,
                                                std::string_view what) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> choice(vertices);
  std::uint64_t nodes = 0;
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == vertices) {
      out.push_back(choice);
      return;
    }
    for (std::size_t o : options[v]) {
      if (++nodes > budget.cap()) budget.require(nodes, what);
      choice[v] = o;
      if (fits(v, choice)) self(self, v + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::vector<std::vector<int>> equivariant_maps(const TotalSpace& q, const FiniteGSet& z,
                                               const SearchBudget& budget) {
  if (!same_group(q.group(), z.group())) fail("equivariant maps: different groups");
  if (z.side() != Side::right) fail("equivariant maps need a right G-set");
  const auto& g = *q.group();
  const auto ng = static_cast<Vertex>(g.order());
  const auto nb = q.projection->target()->vertex_count();
  // f(v) = φ(v, e); an edge {(u, x), (w, y)} forces f(u)·x = f(w)·y.
  std::vector<std::vector<std::array<Vertex, 4>>> constraints(nb);
  for (const auto& e : q.complex->simplices(1)) {
    std::array<Vertex, 4> c{e[0] / ng, e[0] % ng, e[1] / ng, e[1] % ng};
    if (c[0] > c[2]) c = {c[2], c[3], c[0], c[1]};
    constraints[c[2]].push_back(c);
  }
  std::vector<std::vector<std::size_t>> options(nb);
  for (auto& o : options)
    for (std::size_t x = 0; x < z.size(); ++x) o.push_back(x);
  auto fits = [&](std::size_t v, const std::vector<std::size_t>& f) {
    for (const auto& c : constraints[v])
      if (z.act(static_cast<int>(f[c[0]]), c[1]) != z.act(static_cast<int>(f[c[2]]), c[3]))
        return false;
    return true;
  };
  std::vector<std::vector<int>> out;
  for (const auto& f : backtrack(nb, options, fits, budget, "equivariant map search")) {
    std::vector<int> phi;
    for (std::size_t v = 0; v < nb; ++v)
      for (Elem x = 0; x < ng; ++x)
        phi.push_back(z.act(static_cast<int>(f[v]), x));
    out.push_back(std::move(phi));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> sections_of_associated(const TotalSpace& q,
                                                             const FiniteGSet& z,
                                                             const SearchBudget& budget) {
  const auto assoc = associated_bundle(q, z);
  const auto& base = *q.projection->target();
  const auto nb = base.vertex_count();
  std::vector<std::vector<std::size_t>> options(nb);
  for (std::size_t c = 0; c < assoc.size; ++c) options[assoc.over[c]].push_back(c);
  const std::set<std::pair<std::size_t, std::size_t>> edges(assoc.edges.begin(), assoc.edges.end());
  auto fits = [&](std::size_t v, const std::vector<std::size_t>& s) {
    for (Vertex u : base.neighbors(static_cast<Vertex>(v))) {
      if (static_cast<std::size_t>(u) >= v) break;
      if (!edges.count({std::min(s[u], s[v]), std::max(s[u], s[v])})) return false;
    }
    return true;
  };
  return backtrack(nb, options, fits, budget, "section search");
}

std::vector<std::size_t> section_of_map(const TotalSpace& q, const FiniteGSet& z,
                                        const AssociatedBundle& assoc,
                                        const std::vector<int>& phi) {
  const auto ng = static_cast<Vertex>(q.group()->order());
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < q.projection->target()->vertex_count(); ++v) {
    const auto p = static_cast<std::size_t>(v) * ng + q.group()->identity();
    out.push_back(assoc.class_of[p * z.size() + phi.at(p)]);
  }
  return out;
}

std::vector<int> map_of_section(const TotalSpace& q, const FiniteGSet& z,
                                const AssociatedBundle& assoc,
                                const std::vector<std::size_t>& section) {
  std::vector<int> out;
  for (std::size_t p = 0; p < q.complex->vertex_count(); ++p) {
    const auto want = section.at((*q.projection)(static_cast<Vertex>(p)));
    int found = -1;
    for (std::size_t x = 0; x < z.size(); ++x)
      if (assoc.class_of[p * z.size() + x] == want) {
        if (found >= 0) fail("section does not determine a unique fibre element");
        found = static_cast<int>(x);
      }
    if (found < 0) fail("section misses the fibre over a total-space vertex");
    out.push_back(found);
  }
  return out;
}

}  // namespace pbundle
