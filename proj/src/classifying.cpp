#include "pbundle/classifying.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pbundle/error.hpp"

namespace pbundle {

namespace {

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || *a == *b; }
bool same_base(const DeltaPtr& a, const DeltaPtr& b) { return a == b || *a == *b; }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Next k-subset of {0..n-1} in lexicographic order.
bool next_subset(std::vector<int>& s, int n) {
  const int k = static_cast<int>(s.size());
  int i = k - 1;
  while (i >= 0 && s[i] == n - k + i) --i;
  if (i < 0) return false;
  ++s[i];
  for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  return true;
}

DeltaPtr based_delta(const ComplexPtr& x) {
  auto k = x;
  if (!k->basepoint()) k = std::make_shared<const SimplicialComplex>(k->with_basepoint(0));
  return std::make_shared<const DeltaComplex>(DeltaComplex::from_simplicial(k));
}

std::string format_hom(const PresentedHom& h) {
  std::string out = "[";
  for (std::size_t i = 0; i < h.images().size(); ++i)
    out += (i ? " " : "") + h.target()->element_name(h.images()[i]);
  return out + "]";
}

}  // namespace

// ---------------------------------------------------------------- join

std::uint64_t join_simplex_count(std::size_t group_order, int n, int d) {
  if (d < 0 || d > n) return 0;
  return binomial(static_cast<std::uint64_t>(n + 1), static_cast<std::uint64_t>(d + 1)) *
         saturating_pow(group_order, static_cast<std::uint64_t>(d + 1));
}

JoinStage milnor_join(const GroupPtr& g, int n, int skeleton, const SearchBudget& budget) {
  if (n < 0) fail("join stage must be nonnegative");
  const int top = skeleton < 0 ? n : std::min(skeleton, n);
  std::uint64_t total = 0;
  for (int d = 0; d <= top; ++d) total += join_simplex_count(g->order(), n, d);
  budget.require(total, "join stage");

  const auto ng = static_cast<Elem>(g->order());
  JoinStage j;
  j.group = g;
  j.n = n;
  j.skeleton = skeleton;
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i)
    for (Elem x = 0; x < ng; ++x) labels.push_back(std::to_string(i) + ":" + g->element_name(x));

  std::vector<std::vector<Vertex>> facets;
  std::vector<int> levels(static_cast<std::size_t>(top + 1));
  for (int i = 0; i <= top; ++i) levels[i] = i;
  do {
    std::vector<Elem> pick(levels.size(), 0);
    for (;;) {
      std::vector<Vertex> f;
      for (std::size_t i = 0; i < levels.size(); ++i) f.push_back(j.vertex(levels[i], pick[i]));
      facets.push_back(std::move(f));
      std::size_t i = pick.size();
      while (i > 0 && pick[i - 1] == ng - 1) pick[--i] = 0;
      if (i == 0) break;
      ++pick[i - 1];
    }
  } while (next_subset(levels, n + 1));

  j.complex = std::make_shared<const SimplicialComplex>(
      SimplicialComplex::from_facets(std::move(labels), facets, j.vertex(0, g->identity())));
  std::vector<Vertex> table;
  for (int i = 0; i <= n; ++i)
    for (Elem x = 0; x < ng; ++x)
      for (Elem k = 0; k < ng; ++k) table.push_back(j.vertex(i, g->mul(x, k)));
  j.action = std::make_shared<const GroupAction>(j.complex, g, std::move(table));
  return j;
}

ClassifyingStage classifying_stage(const GroupPtr& g, int n, int skeleton,
                                   const SearchBudget& budget) {
  ClassifyingStage s;
  s.join = milnor_join(g, n, skeleton, budget);
  s.quotient = quotient_by_action(*s.join.action);
  s.delta = std::make_shared<const DeltaComplex>(s.quotient.delta);
  std::vector<Elem> values;
  if (s.quotient.representative.size() > 1)
    for (const auto& rep : s.quotient.representative[1])
      values.push_back(g->mul(s.join.element_of(rep[0]), g->inv(s.join.element_of(rep[1]))));
  s.universal = std::make_shared<const Cocycle>(s.delta, g, std::move(values));
  return s;
}

CounitResult counit(const GroupPtr& g, int n, const SearchBudget& budget) {
  CounitResult r;
  auto stage = std::make_shared<ClassifyingStage>(classifying_stage(g, n, 2, budget));
  r.stage = stage;
  r.presentation = edge_path_group(stage->delta);
  r.hom = holonomy(*stage->universal, r.presentation);
  r.surjective = g->generated_subgroup(r.hom->images()).size() == g->order();

  const auto order = presented_order(*r.presentation->group);
  if (order.kind == GroupOrder::Kind::finite && order.value == g->order()) {
    r.injective_certified = true;
  } else if (order.kind == GroupOrder::Kind::finite && order.value == 1) {
    r.injective_certified = true;
  } else if (connected_components(*stage->join.complex).size() == 1 &&
             simplify(*edge_path_group(stage->join.complex)->group).group.generator_count() == 0) {
    r.injective_certified = true;
  }
  if (!r.surjective) {
    r.reason = "holonomy of the universal values is not onto " + g->name();
  } else if (!r.injective_certified) {
    r.reason = order.kind == GroupOrder::Kind::infinite
                   ? "edge-path group of the stage is infinite"
                   : "kernel not certified trivial";
  }
  return r;
}

// ------------------------------------------------------- classifying maps

Vertex EquivariantMap::operator()(Vertex p) const {
  const auto& g = *target->group;
  const auto ng = static_cast<Vertex>(g.order());
  return target->vertex(level.at(p / ng), g.mul(offset.at(p / ng), p % ng));
}

std::optional<std::string> check_equivariant_map(const EquivariantMap& m) {
  const auto& q = *m.source;
  const auto& g = *q.group();
  if (!same_group(q.group(), m.target->group)) return "source and target groups differ";
  for (int l : m.level)
    if (l < 0 || l > m.target->n) return "level outside the target stage";
  for (std::size_t p = 0; p < q.complex->vertex_count(); ++p)
    for (Elem k = 0; k < static_cast<Elem>(g.order()); ++k) {
      const auto lhs = m(q.action->act(static_cast<Vertex>(p), k));
      const auto rhs = m.target->action->act(m(static_cast<Vertex>(p)), k);
      if (lhs != rhs) return "not equivariant at " + q.complex->label(static_cast<Vertex>(p));
    }
  for (int d = 1; d <= q.complex->dimension(); ++d)
    for (const auto& s : q.complex->simplices(d)) {
      std::vector<Vertex> img;
      for (Vertex p : s) img.push_back(m(p));
      if (!m.target->complex->contains(img)) {
        std::string where;
        for (Vertex p : s) where += (where.empty() ? "" : ",") + q.complex->label(p);
        return "not simplicial on {" + where + "}";
      }
    }
  return std::nullopt;
}

namespace {

std::shared_ptr<const JoinStage> join_for(const GroupPtr& g, int n, const SimplicialComplex& x) {
  return std::make_shared<const JoinStage>(milnor_join(g, n, std::max(2, x.dimension())));
}

}  // namespace

EquivariantMap classifying_map(const Cocycle& c, std::shared_ptr<const JoinStage> target) {
  const auto& x = c.base()->origin();
  if (!x) fail("classifying map needs a simplicial base");
  const auto pres = edge_path_group(c.base());
  const int n = static_cast<int>(x->vertex_count()) - 1;
  if (!target) {
    target = join_for(c.group(), n, *x);
  } else if (!same_group(target->group, c.group()) || target->n < n) {
    fail("classifying map target must be a stage >= |V| - 1 of the same group");
  }
  EquivariantMap m;
  m.source = std::make_shared<const TotalSpace>(total_space(c));
  m.target = std::move(target);
  m.offset = tree_holonomy(c, *pres);
  m.level.assign(x->vertex_count(), 0);
  int next = 1;
  for (Vertex v = 0; v < static_cast<Vertex>(x->vertex_count()); ++v)
    if (v != pres->basepoint) m.level[v] = next++;
  return m;
}

EquivariantMap extend_classifying_map(const Cocycle& c, const std::vector<Vertex>& subcomplex,
                                      const std::vector<std::pair<Vertex, Vertex>>& partial) {
  const auto& x = c.base()->origin();
  if (!x) fail("classifying map needs a simplicial base");
  const auto& g = *c.group();
  const auto ng = static_cast<Vertex>(g.order());
  const auto nv = x->vertex_count();
  const auto pres = edge_path_group(c.base());

  std::vector<bool> in_a(nv, false);
  for (Vertex v : subcomplex) {
    if (v < 0 || static_cast<std::size_t>(v) >= nv) fail("subcomplex vertex out of range");
    in_a[v] = true;
  }
  if (!in_a[pres->basepoint]) fail("subcomplex must contain the basepoint");

  std::map<Vertex, Vertex> given;
  for (const auto& [p, j] : partial) {
    if (p < 0 || static_cast<std::size_t>(p) >= nv * g.order()) fail("partial map on an unknown vertex");
    if (!in_a[p / ng]) fail("partial map defined outside the subcomplex");
    if (j < 0) fail("partial map image out of range");
    if (!given.emplace(p, j).second) fail("partial map assigns a vertex twice");
  }

  EquivariantMap m;
  m.source = std::make_shared<const TotalSpace>(total_space(c));
  m.level.assign(nv, -1);
  m.offset = tree_holonomy(c, *pres);
  int max_level = -1;
  for (std::size_t v = 0; v < nv; ++v) {
    if (!in_a[v]) continue;
    for (Elem k = 0; k < ng; ++k)
      if (!given.count(static_cast<Vertex>(v) * ng + k))
        fail("partial map must be defined on the whole fibre over " + x->label(static_cast<Vertex>(v)));
    const Vertex j = given.at(static_cast<Vertex>(v) * ng + g.identity());
    m.level[v] = j / ng;
    m.offset[v] = j % ng;
    max_level = std::max(max_level, m.level[v]);
  }
  for (std::size_t v = 0; v < nv; ++v)
    if (!in_a[v]) m.level[v] = ++max_level;
  m.target = join_for(c.group(), std::max(max_level, 0), *x);

  for (const auto& [p, j] : given)
    if (m(p) != j) fail("partial map is not equivariant");
  if (auto problem = check_equivariant_map(m)) fail("partial map is " + *problem);
  return m;
}

CellMap orbit_map(const EquivariantMap& m, const Cocycle& c, const ClassifyingStage& stage) {
  if (!same_group(stage.join.group, m.target->group) || stage.join.n != m.target->n)
    fail("orbit map: stage does not match the map's target");
  const auto& g = *c.group();
  const auto ng = static_cast<Vertex>(g.order());
  const auto& x = *c.base();
  std::vector<Vertex> vertices;
  for (std::size_t v = 0; v < x.vertex_count(); ++v)
    vertices.push_back(stage.quotient.vertex_orbit.at(m(static_cast<Vertex>(v) * ng + g.identity())));
  std::vector<EdgeImage> edges;
  for (const auto& e : x.cells(1)) {
    const Vertex u = e.vertices[0];
    const Vertex w = e.vertices[1];
    const Vertex p = m(u * ng + g.identity());
    const Vertex q = m(w * ng + c.value(w, u));
    if (p == q) {
      edges.push_back({});
      continue;
    }
    const auto ref = stage.quotient.edge_through(p, q);
    edges.push_back({ref.cell, ref.reversed});
  }
  return CellMap(c.base(), stage.delta, std::move(vertices), std::move(edges));
}

Cocycle classifying_pullback(const EquivariantMap& m, const Cocycle& c,
                             const ClassifyingStage& stage) {
  return pullback(orbit_map(m, c, stage), *stage.universal);
}

// ---------------------------------------------------- algebraic equivalence

bool algebraically_equivalent(const PresentedHom& a, const PresentedHom& b,
                              const EdgePathPresentation& pres, GaugeMethod method) {
  if (!(*a.source() == *pres.group) || !(*b.source() == *pres.group))
    fail("algebraically_equivalent: homs must start at the edge-path group");
  if (!same_group(a.target(), b.target())) fail("algebraically_equivalent: different targets");
  const auto u = universal_cocycle(pres);
  return gauge_equivalent(pushforward(a, u), pushforward(b, u), method).has_value();
}

WordHom omega_on_map(const CellMap& f, const EdgePathPresentation& source,
                     const EdgePathPresentation& target) {
  if (!same_base(f.source(), source.base) || !same_base(f.target(), target.base))
    fail("omega_on_map: presentations do not match the map");
  if (f.vertex(source.basepoint) != target.basepoint) fail("omega_on_map needs a pointed map");
  std::vector<Word> images;
  for (std::size_t cell : source.cell_of_generator) {
    std::vector<DeltaComplex::EdgeRef> steps;
    for (const auto& s : source.tree_loop(cell)) {
      const auto& img = f.edge(s.cell);
      if (!img.collapsed()) steps.push_back({img.cell, img.reversed != s.reversed});
    }
    images.push_back(target.word(steps));
  }
  return WordHom(source.group, target.group, std::move(images));
}

WordHom omega_on_map(const SimplicialMap& f, const EdgePathPresentationPtr& source,
                     const EdgePathPresentationPtr& target) {
  return omega_on_map(CellMap::from_simplicial(f, source->base, target->base), *source, *target);
}

CellMap induced_stage_map(const FiniteHom& a, const ClassifyingStage& bg,
                          const ClassifyingStage& bh) {
  if (!same_group(a.source(), bg.join.group) || !same_group(a.target(), bh.join.group))
    fail("induced stage map: hom does not match the stages");
  if (bg.join.n != bh.join.n) fail("induced stage map needs matched stages");
  std::vector<Vertex> vertices;
  for (std::size_t v = 0; v < bg.delta->vertex_count(); ++v) vertices.push_back(static_cast<Vertex>(v));
  std::vector<EdgeImage> edges;
  for (const auto& rep : bg.quotient.representative.at(1)) {
    const Vertex p = bh.join.vertex(bg.join.level_of(rep[0]), a.apply(bg.join.element_of(rep[0])));
    const Vertex q = bh.join.vertex(bg.join.level_of(rep[1]), a.apply(bg.join.element_of(rep[1])));
    const auto ref = bh.quotient.edge_through(p, q);
    edges.push_back({ref.cell, ref.reversed});
  }
  return CellMap(bg.delta, bh.delta, std::move(vertices), std::move(edges));
}

// ------------------------------------------------------------ classification

OracleCount cocycle_class_oracle(const DeltaComplex& x, const FiniteGroup& g,
                                 const SearchBudget& budget) {
  const auto cells = cell_system(x);
  const auto all = kernels::cocycles_search(cells, g, budget, kernels::Exec::parallel);
  return {all.size(), kernels::gauge_orbit_count(cells, g, all, budget, kernels::Exec::parallel)};
}

Classification classify_bundles(const ComplexPtr& x, const GroupPtr& g,
                                const ClassifyOptions& options, const SearchBudget& budget) {
  Classification out;
  const auto delta = based_delta(x);
  out.base = delta->origin();
  out.group = g;
  out.presentation = edge_path_group(delta);
  const auto homs = conjugacy_classes_of_homs(out.presentation->group, g, budget);
  out.hom_count = homs.homs.size();
  const auto u = universal_cocycle(*out.presentation);
  const int n = static_cast<int>(out.base->vertex_count()) - 1;
  const int skeleton = std::max(2, out.base->dimension());
  auto stage = std::make_shared<ClassifyingStage>(classifying_stage(g, n, skeleton, budget));
  out.stage = stage;
  auto join = std::make_shared<const JoinStage>(stage->join);

  for (const auto& cls : homs.classes) {
    const auto& hom = homs.homs[cls.representative];
    Cocycle c = pushforward(hom, u);
    EquivariantMap m = classifying_map(c, join);
    if (auto problem = check_equivariant_map(m))
      throw Error(ErrorKind::verification, "classifying map " + *problem);
    Cocycle pulled = classifying_pullback(m, c, *stage);
    auto witness = gauge_equivalent(pulled, c, options.method, budget);
    if (!witness)
      throw Error(ErrorKind::verification,
                  "pullback of the universal values is not equivalent to the class of " +
                      format_hom(hom));
    out.rows.push_back({hom, cls.members.size(), std::move(c), std::move(m), std::move(pulled),
                        std::move(*witness)});
  }

  out.pullbacks_distinct = true;
  for (std::size_t i = 0; i < out.rows.size() && out.pullbacks_distinct; ++i)
    for (std::size_t j = i + 1; j < out.rows.size(); ++j)
      if (gauge_equivalent(out.rows[i].pulled_back, out.rows[j].pulled_back, options.method, budget)) {
        out.pullbacks_distinct = false;
        break;
      }

  if (options.oracle) {
    const auto o = cocycle_class_oracle(*delta, *g, budget);
    out.oracle_run = true;
    out.oracle_cocycles = o.cocycles;
    out.oracle_classes = o.classes;
  }
  return out;
}

// --------------------------------------------------------------- naturality

bool NaturalityReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

NaturalityReport verify_naturality(const SimplicialMap& f, const FiniteHom& a, int stage,
                                   const SearchBudget& budget) {
  if (!f.is_pointed()) fail("naturality needs a pointed map");
  NaturalityReport report;
  auto add = [&](std::string name, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  const auto dx = based_delta(f.source());
  const auto dy = based_delta(f.target());
  const auto px = edge_path_group(dx);
  const auto py = edge_path_group(dy);
  const auto ux = universal_cocycle(*px);
  const auto uy = universal_cocycle(*py);
  const auto fc = CellMap::from_simplicial(f, dx, dy);
  const auto omega = omega_on_map(fc, *px, *py);

  add("unit identity (source)", holonomy(ux, px) == identity_hom(px->group),
      std::to_string(px->group->generator_count()) + " generators");
  add("unit identity (target)", holonomy(uy, py) == identity_hom(py->group),
      std::to_string(py->group->generator_count()) + " generators");
  add("unit naturality", holonomy(pullback(fc, uy), px) == omega, "hol(f*U_Y) = Ω̃f");

  for (const auto& grp : {a.source(), a.target()}) {
    const auto cls = conjugacy_classes_of_homs(py->group, grp, budget);
    std::size_t bad = 0;
    for (const auto& k : cls.classes) {
      const auto& b = cls.homs[k.representative];
      const auto pulled = pullback(fc, pushforward(b, uy));
      const auto classified = compose(b, omega);
      const bool conj = are_conjugate(holonomy(pulled, px), classified).has_value();
      const bool gauge = gauge_equivalent(pulled, pushforward(classified, ux), GaugeMethod::tree,
                                          budget).has_value();
      if (!conj || !gauge) ++bad;
    }
    add("pullback square (" + grp->name() + ")", bad == 0,
        std::to_string(cls.classes.size()) + " classes, " + std::to_string(bad) + " failures");
  }

  {
    const auto cls = conjugacy_classes_of_homs(px->group, a.source(), budget);
    std::size_t bad = 0;
    for (const auto& k : cls.classes) {
      const auto& b = cls.homs[k.representative];
      const auto pushed = pushforward(a, pushforward(b, ux));
      const auto classified = compose(a, b);
      const bool conj = are_conjugate(holonomy(pushed, px), classified).has_value();
      const bool gauge = gauge_equivalent(pushed, pushforward(classified, ux), GaugeMethod::tree,
                                          budget).has_value();
      if (!conj || !gauge) ++bad;
    }
    add("pushforward square", bad == 0,
        std::to_string(cls.classes.size()) + " classes, " + std::to_string(bad) + " failures");
  }

  const auto eg = counit(a.source(), stage, budget);
  const auto eh = counit(a.target(), stage, budget);
  add("counit iso (" + a.source()->name() + ")", eg.is_isomorphism(),
      eg.is_isomorphism() ? "stage " + std::to_string(stage) : eg.reason);
  add("counit iso (" + a.target()->name() + ")", eh.is_isomorphism(),
      eh.is_isomorphism() ? "stage " + std::to_string(stage) : eh.reason);

  const auto ba = induced_stage_map(a, *eg.stage, *eh.stage);
  {
    const auto lhs = pushforward(a, *eg.stage->universal);
    const auto rhs = pullback(ba, *eh.stage->universal);
    add("naturality1", gauge_equivalent(lhs, rhs, GaugeMethod::tree, budget).has_value(),
        "a_*U_G vs (B̃a)^*U_H at stage " + std::to_string(stage));
  }
  {
    const auto omega_ba = omega_on_map(ba, *eg.presentation, *eh.presentation);
    const auto lhs = compose(*eh.hom, omega_ba);
    const auto rhs = compose(a, *eg.hom);
    const bool conj = are_conjugate(lhs, rhs).has_value();
    const bool alg = algebraically_equivalent(lhs, rhs, *eg.presentation);
    add("counit naturality", conj && alg,
        std::string("conjugate: ") + (conj ? "yes" : "no") + ", ≡: " + (alg ? "yes" : "no"));
  }

  {
    ClassifyOptions opts;
    opts.oracle = false;
    const auto cls = classify_bundles(f.source(), a.source(), opts, budget);
    const auto& st = *cls.stage;
    const auto ps = edge_path_group(st.delta);
    const auto eps = holonomy(*st.universal, ps);
    std::size_t bad = 0;
    for (const auto& row : cls.rows) {
      const auto omega_fc = omega_on_map(orbit_map(row.map, row.cocycle, st), *cls.presentation, *ps);
      const auto lhs = compose(eps, omega_fc);
      const auto rhs = holonomy(row.cocycle, cls.presentation);
      if (!are_conjugate(lhs, rhs)) ++bad;
    }
    add("triangle identity", bad == 0,
        std::to_string(cls.rows.size()) + " classes, " + std::to_string(bad) + " failures");
  }
  return report;
}

}  // namespace pbundle
