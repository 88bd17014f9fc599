#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "pbundle/classifying.hpp"
#include "pbundle/corpus.hpp"
#include "pbundle/error.hpp"

using namespace pbundle;

namespace {

const SearchBudget big(1'000'000'000);

std::vector<std::size_t> f_vector(const SimplicialComplex& k) {
  std::vector<std::size_t> f;
  for (int d = 0; d <= k.dimension(); ++d) f.push_back(k.simplices(d).size());
  return f;
}

Cocycle random_cocycle(const EdgePathPresentationPtr& pres, const GroupPtr& g, std::mt19937& rng) {
  auto homs = enumerate_homs(pres->group, g, big);
  std::uniform_int_distribution<std::size_t> pick(0, homs.size() - 1);
  std::uniform_int_distribution<Elem> elem(0, static_cast<Elem>(g->order()) - 1);
  auto c = pushforward(homs[pick(rng)], universal_cocycle(*pres));
  GaugeTransform t(pres->base->vertex_count());
  for (auto& x : t) x = elem(rng);
  return apply_gauge(c, t);
}

/// Pairs whose cocycle oracle stays well under a million evaluations.
std::vector<std::pair<std::string, std::string>> small_pairs() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& x : {"circle", "disc", "sphere", "hexagon", "figure_eight"})
    for (const auto& g : corpus::group_names()) out.push_back({x, g});
  out.push_back({"rp2", "Z2"});
  out.push_back({"rp2", "Z3"});
  return out;
}

}  // namespace

TEST_CASE("the first join stage of Z2 is the 4-cycle") {
  auto s = milnor_join(corpus::group("Z2"), 1);
  CHECK(f_vector(*s.complex) == std::vector<std::size_t>{4, 4});
  for (Vertex v = 0; v < 4; ++v) CHECK(s.complex->neighbors(v).size() == 2);
  CHECK(s.action->is_free());
  CHECK(s.complex->label(s.vertex(1, 1)) == "1:1");
  CHECK(s.level_of(3) == 1);
  CHECK(s.element_of(3) == 1);
}

TEST_CASE("join stage simplex counts") {
  CHECK(f_vector(*milnor_join(corpus::group("Z2"), 2).complex) ==
        std::vector<std::size_t>{6, 12, 8});
  for (const auto& gname : corpus::group_names()) {
    auto g = corpus::group(gname);
    for (int n = 0; n <= 2; ++n) {
      auto s = milnor_join(g, n);
      for (int d = 0; d <= n; ++d) {
        const auto want = oracle::binomial(n + 1, d + 1) * oracle::power(g->order(), d + 1);
        CHECK(join_simplex_count(g->order(), n, d) == want);
        CHECK(s.complex->simplices(d).size() == want);
      }
    }
  }
  auto skel = milnor_join(corpus::group("Z3"), 4, 2);
  CHECK(skel.complex->dimension() == 2);
  CHECK(skel.complex->simplices(2).size() == join_simplex_count(3, 4, 2));
  CHECK_THROWS_AS(milnor_join(corpus::group("S3"), 6, -1, SearchBudget(1000)), Error);
}

TEST_CASE("second classifying stage of Z2") {
  auto s = classifying_stage(corpus::group("Z2"), 2);
  CHECK(s.delta->count(0) == 3);
  CHECK(s.delta->count(1) == 6);
  CHECK(s.delta->count(2) == 4);
  auto pres = edge_path_group(s.delta);
  auto order = presented_order(*pres->group);
  CHECK(order.kind == GroupOrder::Kind::finite);
  CHECK(order.value == 2);
}

TEST_CASE("counit") {
  for (const auto& gname : corpus::group_names()) {
    CAPTURE(gname);
    auto r = counit(corpus::group(gname), 2);
    CHECK(r.surjective);
    CHECK(r.is_isomorphism());
    CHECK(r.reason.empty());
  }
  auto low = counit(corpus::group("Z2"), 1);
  CHECK(low.surjective);
  CHECK_FALSE(low.is_isomorphism());
  CHECK(low.reason == "edge-path group of the stage is infinite");
}

TEST_CASE("classifying maps are equivariant and pull back the class") {
  std::mt19937 rng(3);
  for (const auto& [xname, gname] : small_pairs()) {
    CAPTURE(xname);
    CAPTURE(gname);
    auto x = corpus::complex(xname);
    auto g = corpus::group(gname);
    auto pres = edge_path_group(x);
    const int n = static_cast<int>(x->vertex_count()) - 1;
    auto stage = classifying_stage(g, n, std::max(2, x->dimension()));
    auto join = std::make_shared<const JoinStage>(stage.join);
    for (int trial = 0; trial < 4; ++trial) {
      auto c = random_cocycle(pres, g, rng);
      auto m = classifying_map(c, join);
      CHECK_FALSE(check_equivariant_map(m));
      CHECK(m.level[*x->basepoint()] == 0);
      auto pulled = classifying_pullback(m, c, stage);
      auto w = gauge_equivalent(pulled, c, GaugeMethod::tree, big);
      REQUIRE(w);
      CHECK(apply_gauge(pulled, *w) == c);
      if (x->vertex_count() <= 5) CHECK(gauge_equivalent(pulled, c, GaugeMethod::oracle, big));
    }
  }
}

TEST_CASE("classifying maps into a larger stage") {
  auto x = corpus::complex("circle");
  auto g = corpus::group("S3");
  auto pres = edge_path_group(x);
  auto c = pushforward(enumerate_homs(pres->group, g, big)[4], universal_cocycle(*pres));
  auto small = classifying_map(c);
  CHECK(small.target->n == 2);
  for (int n : {2, 3, 4}) {
    auto stage = classifying_stage(g, n, 2);
    auto m = classifying_map(c, std::make_shared<const JoinStage>(stage.join));
    CHECK_FALSE(check_equivariant_map(m));
    CHECK(m.level == small.level);
    CHECK(m.offset == small.offset);
    CHECK(gauge_equivalent(classifying_pullback(m, c, stage), c));
  }
  auto low = std::make_shared<const JoinStage>(milnor_join(g, 1));
  CHECK_THROWS_AS(classifying_map(c, low), Error);
  auto other = std::make_shared<const JoinStage>(milnor_join(corpus::group("Z2"), 3));
  CHECK_THROWS_AS(classifying_map(c, other), Error);
}

TEST_CASE("extending a classifying map from a subcomplex") {
  auto x = corpus::complex("hexagon");
  auto g = corpus::group("Z3");
  auto pres = edge_path_group(x);
  auto c = pushforward(enumerate_homs(pres->group, g, big)[1], universal_cocycle(*pres));
  const auto ng = static_cast<Vertex>(g->order());

  // over {0, 1}: vertex 0 at level 2 with offset 1, vertex 1 at level 0
  std::vector<std::pair<Vertex, Vertex>> partial;
  const Elem h1 = c.value(0, 1);
  for (Elem k = 0; k < 3; ++k) {
    partial.push_back({0 * ng + k, 2 * ng + g->mul(1, k)});
    partial.push_back({1 * ng + k, 0 * ng + g->mul(g->mul(1, h1), k)});
  }
  auto m = extend_classifying_map(c, {0, 1}, partial);
  CHECK_FALSE(check_equivariant_map(m));
  for (const auto& [p, j] : partial) CHECK(m(p) == j);
  CHECK(m.level == std::vector<int>{2, 0, 3, 4, 5, 6});
  CHECK(m.target->n == 6);
  auto stage = classifying_stage(g, m.target->n, 2);
  CHECK(gauge_equivalent(classifying_pullback(m, c, stage), c));

  auto broken = partial;
  broken[2].second = broken[0].second;
  CHECK_THROWS_AS(extend_classifying_map(c, {0, 1}, broken), Error);
  CHECK_THROWS_AS(extend_classifying_map(c, {1}, {}), Error);
  std::vector<std::pair<Vertex, Vertex>> thin(partial.begin(), partial.begin() + 2);
  CHECK_THROWS_AS(extend_classifying_map(c, {0, 1}, thin), Error);
  auto empty = extend_classifying_map(c, {0}, {{0, 0}, {1, 1}, {2, 2}});
  CHECK(empty.level == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("omega is functorial on composable corpus maps") {
  auto maps = corpus::maps();
  std::size_t pairs = 0;
  for (const auto& f : maps)
    for (const auto& h : maps) {
      if (!(*f.map.target() == *h.map.source())) continue;
      ++pairs;
      CAPTURE(f.name);
      CAPTURE(h.name);
      auto px = edge_path_group(f.map.source());
      auto py = edge_path_group(f.map.target());
      auto pz = edge_path_group(h.map.target());
      auto direct = omega_on_map(compose(h.map, f.map), px, pz);
      auto staged = compose(omega_on_map(h.map, py, pz), omega_on_map(f.map, px, py));
      for (const auto& gname : corpus::group_names()) {
        auto g = corpus::group(gname);
        for (const auto& b : enumerate_homs(pz->group, g, big))
          CHECK(compose(b, direct) == compose(b, staged));
      }
    }
  CHECK(pairs >= 10);

  auto hex = corpus::complex("hexagon");
  auto circle = corpus::complex("circle");
  auto ph = edge_path_group(hex);
  auto pc = edge_path_group(circle);
  auto wrap = omega_on_map(SimplicialMap(hex, circle, {0, 1, 2, 0, 1, 2}), ph, pc);
  CHECK(pc->group->format_word(wrap.images()[0].reduced()) == "g0 g0");
  for (const auto& name : corpus::complex_names()) {
    auto p = edge_path_group(corpus::complex(name));
    CHECK(omega_on_map(SimplicialMap::identity(corpus::complex(name)), p, p) ==
          identity_hom(p->group));
  }
  SimplicialMap moved(circle, circle, {1, 2, 0});
  CHECK_THROWS_AS(omega_on_map(moved, pc, pc), Error);
}

TEST_CASE("holonomy of the universal cocycle is the identity") {
  for (const auto& name : corpus::complex_names()) {
    for (auto order : {TreeOrder::breadth_first, TreeOrder::depth_first}) {
      auto pres = edge_path_group(corpus::complex(name), order);
      CHECK(holonomy(universal_cocycle(*pres), pres) == identity_hom(pres->group));
    }
  }
}

TEST_CASE("algebraic equivalence is conjugacy") {
  for (const auto& [xname, gname] : small_pairs()) {
    auto pres = edge_path_group(corpus::complex(xname));
    auto g = corpus::group(gname);
    auto homs = enumerate_homs(pres->group, g, big);
    if (homs.size() > 40) homs.erase(homs.begin() + 40, homs.end());
    for (const auto& a : homs)
      for (const auto& b : homs)
        CHECK(algebraically_equivalent(a, b, *pres) == are_conjugate(a, b).has_value());
  }
}

TEST_CASE("classification agrees with the counting oracles") {
  for (const auto& [xname, gname] : small_pairs()) {
    CAPTURE(xname);
    CAPTURE(gname);
    auto x = corpus::complex(xname);
    auto g = corpus::group(gname);
    auto cls = classify_bundles(x, g, {}, big);
    CHECK(cls.verified());
    CHECK(cls.pullbacks_distinct);
    CHECK(cls.oracle_classes == cls.rows.size());
    CHECK(cls.oracle_cocycles == oracle::cocycles(*x, *g).values.size());
    if (x->vertex_count() <= 5) CHECK(cls.rows.size() == oracle::gauge_class_count(*x, *g));
    auto homs = oracle::homs(*cls.presentation->group, *g);
    CHECK(cls.hom_count == homs.size());
    CHECK(cls.rows.size() == oracle::conjugacy_class_count(homs, *g));
    std::size_t members = 0;
    for (const auto& row : cls.rows) {
      members += row.class_size;
      CHECK(apply_gauge(row.pulled_back, row.witness) == row.cocycle);
      CHECK(holonomy(row.cocycle, cls.presentation) == row.hom);
    }
    CHECK(members == cls.hom_count);
  }
}

TEST_CASE("classification does not depend on the spanning tree") {
  for (const auto& name : {"circle", "figure_eight", "rp2", "sphere"}) {
    auto x = corpus::complex(name);
    auto bfs = edge_path_group(x, TreeOrder::breadth_first);
    auto dfs = edge_path_group(x, TreeOrder::depth_first);
    for (const auto& gname : {"Z2", "Z3", "S3"}) {
      auto g = corpus::group(gname);
      auto a = conjugacy_classes_of_homs(bfs->group, g, big);
      auto b = conjugacy_classes_of_homs(dfs->group, g, big);
      CHECK(a.classes.size() == b.classes.size());
      CHECK(a.classes.size() == classify_bundles(x, g, {false}, big).rows.size());
    }
  }
}

TEST_CASE("naturality on a sample of maps and homs") {
  const std::vector<std::string> map_names = {"wrap_hexagon_circle", "include_circle_disc",
                                              "include_disc_rp2", "fold_figure_eight_circle"};
  const std::vector<std::string> hom_names = {"Z2_to_Z4", "sign_S3", "id_Z3"};
  for (const auto& m : corpus::maps()) {
    if (std::find(map_names.begin(), map_names.end(), m.name) == map_names.end()) continue;
    for (const auto& h : corpus::homs()) {
      if (std::find(hom_names.begin(), hom_names.end(), h.name) == hom_names.end()) continue;
      CAPTURE(m.name);
      CAPTURE(h.name);
      auto report = verify_naturality(m.map, h.hom, 2, big);
      CHECK(report.ok());
      CHECK(report.checks.size() == 11);
      for (const auto& c : report.checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.passed);
      }
    }
  }
  auto circle = corpus::complex("circle");
  SimplicialMap moved(circle, circle, {1, 2, 0});
  CHECK_THROWS_AS(verify_naturality(moved, FiniteHom::identity(corpus::group("Z2"))), Error);
  auto low = verify_naturality(SimplicialMap::identity(circle),
                               FiniteHom::identity(corpus::group("Z2")), 1, big);
  CHECK_FALSE(low.ok());
}
