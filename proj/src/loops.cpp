#include "pbundle/loops.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "pbundle/error.hpp"

namespace pbundle {

EdgePath::EdgePath(ComplexPtr complex, std::vector<Vertex> traversal)
    : complex_(std::move(complex)), vertices_(std::move(traversal)) {
  if (!complex_) fail("edge path needs a complex");
  if (vertices_.empty()) fail("edge path must be nonempty");
  for (Vertex v : vertices_)
    if (v < 0 || static_cast<std::size_t>(v) >= complex_->vertex_count())
      fail("edge path visits an unknown vertex");
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    const Vertex pair[2] = {vertices_[i], vertices_[i + 1]};
    if (pair[0] != pair[1] && !complex_->contains(pair))
      fail("consecutive path vertices " + complex_->label(pair[0]) + ", " +
           complex_->label(pair[1]) + " do not share a simplex");
  }
}

EdgePath EdgePath::constant(ComplexPtr complex, Vertex v) {
  return EdgePath(std::move(complex), {v});
}

EdgePath EdgePath::from_tuple(ComplexPtr complex, std::vector<Vertex> tuple) {
  std::reverse(tuple.begin(), tuple.end());
  return EdgePath(std::move(complex), std::move(tuple));
}

std::vector<Vertex> EdgePath::tuple() const { return {vertices_.rbegin(), vertices_.rend()}; }

EdgePath concat(const EdgePath& p, const EdgePath& q) {
  if (!(*p.complex() == *q.complex())) fail("concat: paths live on different complexes");
  if (q.end() != p.start()) fail("concat: the second path must end where the first starts");
  std::vector<Vertex> out = q.vertices();
  out.insert(out.end(), p.vertices().begin() + 1, p.vertices().end());
  return EdgePath(p.complex(), std::move(out));
}

EdgePath invert(const EdgePath& p) {
  std::vector<Vertex> out(p.vertices().rbegin(), p.vertices().rend());
  return EdgePath(p.complex(), std::move(out));
}

namespace {

// Entry i of the written tuple is deletable when it repeats its left
// neighbour or sits between two equal entries. Deleting it never changes the
// endpoint values.
std::optional<std::size_t> deletable(const std::vector<Vertex>& t, std::size_t i) {
  if (i >= 1 && t[i] == t[i - 1]) return i;
  if (i >= 1 && i + 1 < t.size() && t[i - 1] == t[i + 1]) return i;
  return std::nullopt;
}

std::vector<std::size_t> all_deletions(const std::vector<Vertex>& t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < t.size(); ++i)
    if (deletable(t, i)) out.push_back(i);
  return out;
}

}  // namespace

EdgePath reduce(const EdgePath& p, ReductionOrder order) {
  std::vector<Vertex> t = p.tuple();
  for (;;) {
    std::optional<std::size_t> hit;
    if (order == ReductionOrder::leftmost) {
      for (std::size_t i = 1; i < t.size() && !hit; ++i) hit = deletable(t, i);
    } else {
      for (std::size_t i = t.size(); i-- > 1 && !hit;) hit = deletable(t, i);
    }
    if (!hit) break;
    t.erase(t.begin() + static_cast<std::ptrdiff_t>(*hit));
  }
  return EdgePath::from_tuple(p.complex(), std::move(t));
}

bool is_reduced(const EdgePath& p) { return all_deletions(p.tuple()).empty(); }

std::vector<std::vector<Vertex>> normal_forms(const EdgePath& p) {
  std::set<std::vector<Vertex>> seen;
  std::set<std::vector<Vertex>> forms;
  std::vector<std::vector<Vertex>> stack{p.tuple()};
  while (!stack.empty()) {
    auto t = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(t).second) continue;
    const auto dels = all_deletions(t);
    if (dels.empty()) {
      forms.insert(std::vector<Vertex>(t.rbegin(), t.rend()));
      continue;
    }
    for (std::size_t i : dels) {
      auto next = t;
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
      stack.push_back(std::move(next));
    }
  }
  return {forms.begin(), forms.end()};
}

// ------------------------------------------------------------ presentation

Word EdgePathPresentation::letter(const DeltaComplex::EdgeRef& step) const {
  const auto g = generator_of_cell.at(step.cell);
  if (g < 0) return {};
  return Word::generator(g, step.reversed ? -1 : 1);
}

Word EdgePathPresentation::word(const std::vector<DeltaComplex::EdgeRef>& steps) const {
  std::vector<Letter> letters;
  for (const auto& s : steps) {
    const auto g = generator_of_cell.at(s.cell);
    if (g >= 0) letters.push_back({g, s.reversed ? -1 : 1});
  }
  return Word(std::move(letters)).reduced();
}

std::vector<DeltaComplex::EdgeRef> EdgePathPresentation::tree_loop(std::size_t cell) const {
  const auto& v = base->cell(1, cell).vertices;
  std::vector<DeltaComplex::EdgeRef> out = tree_path.at(v[0]);
  out.push_back({cell, false});
  const auto& back = tree_path.at(v[1]);
  for (auto it = back.rbegin(); it != back.rend(); ++it) out.push_back({it->cell, !it->reversed});
  return out;
}

EdgePathPresentationPtr edge_path_group(const DeltaPtr& k, TreeOrder order) {
  if (!k->basepoint()) fail("edge-path group needs a based complex");
  auto pres = std::make_shared<EdgePathPresentation>();
  pres->base = k;
  pres->basepoint = *k->basepoint();
  pres->order = order;
  const std::size_t nv = k->vertex_count();
  const std::size_t ne = k->count(1);
  pres->in_tree.assign(ne, false);
  pres->tree_path.assign(nv, {});

  std::vector<bool> seen(nv, false);
  auto step_from = [&](Vertex v, std::size_t e) -> std::pair<Vertex, bool> {
    const auto& cv = k->cell(1, e).vertices;
    return cv[0] == v ? std::pair{cv[1], false} : std::pair{cv[0], true};
  };
  auto attach = [&](Vertex v, std::size_t e, Vertex w, bool reversed) {
    seen[w] = true;
    pres->in_tree[e] = true;
    pres->tree_path[w] = pres->tree_path[v];
    pres->tree_path[w].push_back({e, reversed});
  };
  seen[pres->basepoint] = true;
  if (order == TreeOrder::breadth_first) {
    std::queue<Vertex> queue;
    queue.push(pres->basepoint);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (std::size_t e : k->incident_edges(v)) {
        const auto [w, rev] = step_from(v, e);
        if (seen[w]) continue;
        attach(v, e, w, rev);
        queue.push(w);
      }
    }
  } else {
    std::vector<std::pair<Vertex, std::size_t>> stack{{pres->basepoint, 0}};
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& inc = k->incident_edges(v);
      if (next == inc.size()) {
        stack.pop_back();
        continue;
      }
      const std::size_t e = inc[next++];
      const Vertex from = v;
      const auto [w, rev] = step_from(from, e);
      if (seen[w]) continue;
      attach(from, e, w, rev);
      stack.emplace_back(w, 0);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    fail("complex is disconnected; no edge-path group");

  pres->generator_of_cell.assign(ne, -1);
  std::vector<std::string> names;
  for (std::size_t e = 0; e < ne; ++e)
    if (!pres->in_tree[e]) {
      pres->generator_of_cell[e] = static_cast<std::int32_t>(names.size());
      pres->cell_of_generator.push_back(e);
      names.push_back("g" + std::to_string(names.size()));
    }
  std::vector<Word> relators;
  for (const auto& t : k->cells(2)) {
    // faces: 0 = e12, 1 = e02, 2 = e01
    relators.push_back(pres->word({{t.faces[2], false}, {t.faces[0], false}, {t.faces[1], true}}));
  }
  pres->group = std::make_shared<const FinitelyPresentedGroup>(std::move(names), std::move(relators));
  return pres;
}

EdgePathPresentationPtr edge_path_group(const ComplexPtr& k, TreeOrder order) {
  return edge_path_group(std::make_shared<const DeltaComplex>(DeltaComplex::from_simplicial(k)),
                         order);
}

std::vector<DeltaComplex::EdgeRef> cell_path(const DeltaComplex& base, const EdgePath& p) {
  std::vector<DeltaComplex::EdgeRef> out;
  const auto& v = p.vertices();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] == v[i + 1]) continue;
    auto ref = base.find_edge(v[i], v[i + 1]);
    if (!ref) fail("path edge is missing from the Δ-complex");
    out.push_back(*ref);
  }
  return out;
}

Word loop_word(const EdgePathPresentation& pres, const EdgePath& loop) {
  if (!loop.is_loop_at(pres.basepoint)) fail("loop_word needs a loop at the basepoint");
  return pres.word(cell_path(*pres.base, loop));
}

}  // namespace pbundle
