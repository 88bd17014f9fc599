#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "pbundle/classifying.hpp"
#include "pbundle/corpus.hpp"
#include "pbundle/error.hpp"

using namespace pbundle;

namespace {

ComplexPtr cycle(int n) {
  std::vector<std::string> labels;
  std::vector<std::vector<Vertex>> facets;
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    facets.push_back({i, (i + 1) % n});
  }
  return std::make_shared<const SimplicialComplex>(
      SimplicialComplex::from_facets(labels, facets, 0));
}

std::vector<std::size_t> f_vector(const SimplicialComplex& k) {
  std::vector<std::size_t> f;
  for (int d = 0; d <= k.dimension(); ++d) f.push_back(k.simplices(d).size());
  return f;
}

std::vector<std::size_t> f_vector(const DeltaComplex& k) {
  std::vector<std::size_t> f;
  for (int d = 0; d <= k.dimension(); ++d) f.push_back(k.count(d));
  return f;
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("corpus f-vectors and Euler characteristics") {
  using V = std::vector<std::size_t>;
  CHECK(f_vector(*corpus::complex("circle")) == V{3, 3});
  CHECK(f_vector(*corpus::complex("disc")) == V{3, 3, 1});
  CHECK(f_vector(*corpus::complex("sphere")) == V{4, 6, 4});
  CHECK(f_vector(*corpus::complex("hexagon")) == V{6, 6});
  CHECK(f_vector(*corpus::complex("torus")) == V{7, 21, 14});
  CHECK(f_vector(*corpus::complex("rp2")) == V{6, 15, 10});
  CHECK(f_vector(*corpus::complex("figure_eight")) == V{5, 6});
  for (const auto& name : corpus::complex_names()) {
    const auto& k = *corpus::complex(name);
    CHECK(k.basepoint() == Vertex{0});
    CHECK(oracle::components(k) == 1);
  }
}

TEST_CASE("downward closure is idempotent") {
  for (const auto& name : corpus::complex_names()) {
    const auto& k = *corpus::complex(name);
    std::vector<std::vector<std::string>> all;
    for (int d = 0; d <= k.dimension(); ++d)
      for (const auto& s : k.simplices(d)) {
        std::vector<std::string> ls;
        for (Vertex v : s) ls.push_back(k.label(v));
        all.push_back(ls);
      }
    auto again = SimplicialComplex::validate(k.labels(), all, k.label(0));
    CHECK(again == k);
    for (int d = 0; d <= k.dimension(); ++d) CHECK(again.simplices(d) == k.simplices(d));
  }
}

TEST_CASE("facets of a closure are exactly the maximal simplices") {
  auto k = SimplicialComplex::from_facets({"a", "b", "c", "d"}, {{0, 1, 2}, {0, 1}, {2, 3}, {1}});
  CHECK(k.facets() == std::vector<Simplex>{{0, 1, 2}, {2, 3}});
  CHECK(k.contains(std::vector<Vertex>{2, 0}));
  CHECK_FALSE(k.contains(std::vector<Vertex>{0, 3}));
  CHECK(k.index_of({1, 2}) == std::size_t{2});
  CHECK(k.neighbors(2) == std::vector<Vertex>{0, 1, 3});
}

TEST_CASE("validation errors name the offending data") {
  CHECK(error_of([] { SimplicialComplex::validate({"a", "b"}, {{"a", "z"}}, std::nullopt); }) ==
        "facet {a,z} references unknown vertex 'z'");
  CHECK(error_of([] { SimplicialComplex::validate({"a"}, {{}}, std::nullopt); }) == "empty facet");
  CHECK(error_of([] { SimplicialComplex::validate({"a"}, {{"a"}}, std::string("q")); }) ==
        "basepoint 'q' is not a vertex");
  CHECK_THROWS_AS(SimplicialComplex::from_facets({"a"}, {{0, 1}}), Error);
}

TEST_CASE("spanning trees") {
  for (const auto& name : corpus::complex_names()) {
    const auto& k = *corpus::complex(name);
    for (auto order : {TreeOrder::breadth_first, TreeOrder::depth_first}) {
      auto tree = spanning_tree(k, 0, order);
      REQUIRE(tree.size() == k.vertex_count() - 1);
      std::vector<std::vector<std::string>> edges;
      for (auto [u, v] : tree) {
        CHECK(u < v);
        CHECK(k.contains(std::vector<Vertex>{u, v}));
        edges.push_back({k.label(u), k.label(v)});
      }
      CHECK(oracle::components(SimplicialComplex::validate(k.labels(), edges, std::nullopt)) == 1);
    }
  }
  auto two = SimplicialComplex::from_facets({"a", "b", "c"}, {{0, 1}, {2}});
  CHECK(connected_components(two).size() == 2);
  CHECK_THROWS_WITH(spanning_tree(two, 0), "complex is disconnected; no spanning tree");
}

TEST_CASE("simplicial maps") {
  auto hex = corpus::complex("hexagon");
  auto circle = corpus::complex("circle");
  SimplicialMap wrap(hex, circle, {0, 1, 2, 0, 1, 2});
  CHECK(wrap.is_pointed());
  CHECK(wrap.apply(std::vector<Vertex>{5, 0}) == Simplex{0, 2});
  CHECK_THROWS_AS(SimplicialMap(hex, circle, {0, 1, 2}), Error);
  // degenerate on {1,2}
  CHECK_NOTHROW(SimplicialMap(hex, circle, {0, 1, 1, 0, 0, 0}));
  auto disc = corpus::complex("disc");
  auto inc = SimplicialMap(circle, disc, {0, 1, 2});
  auto composite = compose(inc, wrap);
  CHECK(composite.image() == std::vector<Vertex>{0, 1, 2, 0, 1, 2});
  auto sphere = corpus::complex("sphere");
  CHECK_THROWS_AS(SimplicialMap(disc, hex, {0, 1, 3}), Error);
  CHECK_NOTHROW(SimplicialMap(disc, sphere, {0, 1, 3}));
}

TEST_CASE("contiguity is reflexive and symmetric on the corpus") {
  for (const auto& m : corpus::maps()) CHECK(are_contiguous(m.map, m.map));
  for (const auto& p : corpus::contiguous_pairs()) {
    CHECK(are_contiguous(p.f, p.g));
    CHECK(are_contiguous(p.g, p.f));
  }
  auto hex = corpus::complex("hexagon");
  SimplicialMap r0(hex, hex, {0, 1, 2, 3, 4, 5});
  SimplicialMap r3(hex, hex, {3, 4, 5, 0, 1, 2});
  CHECK_FALSE(are_contiguous(r0, r3));
}

TEST_CASE("joins") {
  const auto& circle = *corpus::complex("circle");
  auto point = SimplicialComplex::from_facets({"p"}, {{0}});
  auto cone = join(circle, point);
  CHECK(f_vector(cone) == std::vector<std::size_t>{4, 6, 3});
  CHECK(cone.basepoint() == Vertex{0});

  auto clash = join(circle, circle);
  CHECK(clash.label(0) == "a.0");
  CHECK(clash.label(3) == "b.0");
  // circle * circle is a 3-sphere: f = (6, 15, 18, 9)
  CHECK(f_vector(clash) == std::vector<std::size_t>{6, 15, 18, 9});

  const auto& disc = *corpus::complex("disc");
  const auto& hex = *corpus::complex("hexagon");
  auto left = join(join(circle, disc), hex);
  auto right = join(circle, join(disc, hex));
  CHECK(f_vector(left) == f_vector(right));
}

TEST_CASE("quotient of the 4-cycle by the antipodal action") {
  auto c4 = cycle(4);
  auto z2 = corpus::group("Z2");
  GroupAction act(c4, z2, {0, 2, 1, 3, 2, 0, 3, 1});
  CHECK(act.is_free());
  auto q = quotient_by_action(act);
  CHECK(f_vector(q.delta) == std::vector<std::size_t>{2, 2});
  CHECK(q.vertex_orbit == std::vector<Vertex>{0, 1, 0, 1});
  // both 1-cells join the two vertices, so the quotient is not simplicial
  CHECK(q.delta.cell(1, 0).vertices == q.delta.cell(1, 1).vertices);
}

TEST_CASE("quotient of the 6-cycle by the half turn is the 3-cycle") {
  auto c6 = cycle(6);
  auto z2 = corpus::group("Z2");
  std::vector<Vertex> table;
  for (Vertex v = 0; v < 6; ++v) {
    table.push_back(v);
    table.push_back((v + 3) % 6);
  }
  auto q = quotient_by_action(GroupAction(c6, z2, table));
  CHECK(f_vector(q.delta) == std::vector<std::size_t>{3, 3});
  std::set<std::pair<Vertex, Vertex>> ends;
  for (const auto& c : q.delta.cells(1)) ends.insert({c.vertices[0], c.vertices[1]});
  CHECK(ends == std::set<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("orbit counting on free actions") {
  for (const auto& gname : corpus::group_names()) {
    auto g = corpus::group(gname);
    for (int n = 0; n <= 2; ++n) {
      auto stage = milnor_join(g, n);
      auto q = quotient_by_action(*stage.action);
      for (int d = 0; d <= stage.complex->dimension(); ++d)
        CHECK(q.delta.count(d) * g->order() == stage.complex->simplices(d).size());
    }
  }
}

TEST_CASE("actions that fix a simplex are rejected") {
  auto c4 = cycle(4);
  auto z2 = corpus::group("Z2");
  // reflection fixing vertices 0 and 2
  GroupAction flip(c4, z2, {0, 0, 1, 3, 2, 2, 3, 1});
  CHECK_FALSE(flip.is_free());
  CHECK_THROWS_AS(quotient_by_action(flip), Error);
  // not an automorphism
  CHECK_THROWS_AS(GroupAction(c4, z2, {0, 1, 1, 0, 2, 2, 3, 3}), Error);
}

TEST_CASE("delta complexes check the simplicial identities") {
  std::vector<std::vector<Cell>> cells(3);
  for (Vertex v = 0; v < 3; ++v) cells[0].push_back({{v}, {}});
  cells[1] = {{{0, 1}, {1, 0}}, {{1, 2}, {2, 1}}, {{0, 2}, {2, 0}}};
  cells[2] = {{{0, 1, 2}, {1, 2, 0}}};
  CHECK_NOTHROW(DeltaComplex(cells, 0));
  auto bad = cells;
  bad[2][0].faces = {2, 1, 0};
  CHECK_THROWS_AS(DeltaComplex(bad, 0), Error);
  auto wrong_vertex = cells;
  wrong_vertex[1][0].faces = {0, 1};
  CHECK_THROWS_AS(DeltaComplex(wrong_vertex, 0), Error);
}

TEST_CASE("delta form of a simplicial complex") {
  auto torus = corpus::complex("torus");
  auto d = DeltaComplex::from_simplicial(torus);
  CHECK(f_vector(d) == std::vector<std::size_t>{7, 21, 14});
  CHECK(d.origin() == torus);
  auto e = d.find_edge(3, 1);
  REQUIRE(e);
  CHECK(e->reversed);
  CHECK(d.cell(1, e->cell).vertices == std::vector<Vertex>{1, 3});
  for (Vertex v = 0; v < 7; ++v) CHECK(d.incident_edges(v).size() == 6);
}
