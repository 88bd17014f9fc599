#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "pbundle/bundle.hpp"
#include "pbundle/corpus.hpp"
#include "pbundle/error.hpp"

using namespace pbundle;

namespace {

const SearchBudget big(1'000'000'000);

DeltaPtr delta_of(const std::string& name) {
  return edge_path_group(corpus::complex(name))->base;
}

GaugeTransform random_gauge(std::size_t n, const FiniteGroup& g, std::mt19937& rng) {
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.order()) - 1);
  GaugeTransform t(n);
  for (auto& x : t) x = pick(rng);
  return t;
}

/// Pushforward of a random hom out of the edge-path group, randomly gauged.
Cocycle random_cocycle(const EdgePathPresentationPtr& pres, const GroupPtr& g, std::mt19937& rng) {
  auto homs = enumerate_homs(pres->group, g, big);
  std::uniform_int_distribution<std::size_t> pick(0, homs.size() - 1);
  auto c = pushforward(homs[pick(rng)], universal_cocycle(*pres));
  return apply_gauge(c, random_gauge(pres->base->vertex_count(), *g, rng));
}

std::vector<std::string> small_complexes() {
  return {"circle", "disc", "sphere", "hexagon", "rp2", "figure_eight", "torus"};
}

/// Right cosets Hx of the subgroup generated by `gens`, with (Hx)·g = H(xg).
FiniteGSet cosets(const GroupPtr& g, const std::vector<Elem>& gens) {
  auto h = g->generated_subgroup(gens);
  std::vector<std::vector<Elem>> classes;
  std::vector<int> class_of(g->order(), -1);
  for (Elem x = 0; x < static_cast<Elem>(g->order()); ++x) {
    if (class_of[x] >= 0) continue;
    std::vector<Elem> c;
    for (Elem y : h) c.push_back(g->mul(y, x));
    std::sort(c.begin(), c.end());
    for (Elem y : c) class_of[y] = static_cast<int>(classes.size());
    classes.push_back(c);
  }
  std::vector<std::string> labels;
  std::vector<int> table;
  for (const auto& c : classes) {
    labels.push_back("H" + g->element_name(c.front()));
    for (Elem k = 0; k < static_cast<Elem>(g->order()); ++k)
      table.push_back(class_of[g->mul(c.front(), k)]);
  }
  return FiniteGSet(g, Side::right, labels, table);
}

}  // namespace

TEST_CASE("cocycle validation") {
  auto disc = delta_of("disc");
  auto z3 = corpus::group("Z3");
  // cells in order 01, 02, 12
  CHECK_NOTHROW(Cocycle(disc, z3, {1, 0, 2}));
  CHECK_THROWS_WITH(Cocycle(disc, z3, {1, 1, 1}), "triangle condition fails on the 2-cell {0,1,2}");
  CHECK_THROWS_AS(Cocycle(disc, z3, {1, 1}), Error);
  CHECK_THROWS_AS(Cocycle(disc, z3, {1, 1, 7}), Error);
  auto c = Cocycle::from_edges(disc, z3, {{1, 0, 2}, {2, 1, 1}});
  CHECK(c.values() == std::vector<Elem>{1, 0, 2});
  CHECK(c.value(2, 0) == 0);
  CHECK(c.value(1, 0) == 2);
  CHECK_THROWS_AS(Cocycle::from_edges(disc, z3, {{0, 1, 1}, {1, 0, 1}}), Error);
}

TEST_CASE("triangle check agrees with the oracle on random assignments") {
  std::mt19937 rng(3);
  for (const auto& name : {"disc", "sphere", "rp2", "torus"}) {
    auto d = delta_of(name);
    const auto& k = *corpus::complex(name);
    for (const auto& gname : corpus::group_names()) {
      const auto& g = *corpus::group(gname);
      for (int trial = 0; trial < 200; ++trial) {
        auto v = random_gauge(d->count(1), g, rng);
        bool want = true;
        for (const auto& t : k.simplices(2)) {
          auto val = [&](Vertex a, Vertex b) { return v[*k.index_of({a, b})]; };
          if (g.mul(val(t[0], t[1]), val(t[1], t[2])) != val(t[0], t[2])) want = false;
        }
        CHECK(triangle_violation(*d, g, v).has_value() == !want);
      }
    }
  }
}

TEST_CASE("gauge transformations form a right action") {
  std::mt19937 rng(17);
  for (const auto& name : small_complexes()) {
    auto pres = edge_path_group(corpus::complex(name));
    for (const auto& gname : corpus::group_names()) {
      auto g = corpus::group(gname);
      for (int trial = 0; trial < 5; ++trial) {
        auto c = random_cocycle(pres, g, rng);
        auto t1 = random_gauge(c.base()->vertex_count(), *g, rng);
        auto t2 = random_gauge(c.base()->vertex_count(), *g, rng);
        CHECK(apply_gauge(apply_gauge(c, t1), t2) == apply_gauge(c, compose_gauges(*g, t1, t2)));
        CHECK(apply_gauge(apply_gauge(c, t1), inverse_gauge(*g, t1)) == c);
        auto n = tree_normalize(c, *pres);
        for (std::size_t e = 0; e < n.values().size(); ++e)
          if (pres->in_tree[e]) CHECK(n.value(e) == g->identity());
      }
    }
  }
}

TEST_CASE("tree gauge search agrees with the exhaustive search") {
  std::mt19937 rng(23);
  for (const auto& name : {"circle", "disc", "sphere", "hexagon", "rp2", "figure_eight"}) {
    auto pres = edge_path_group(corpus::complex(name));
    for (const auto& gname : corpus::group_names()) {
      auto g = corpus::group(gname);
      for (int trial = 0; trial < 8; ++trial) {
        auto c1 = random_cocycle(pres, g, rng);
        auto c2 = trial % 2 ? apply_gauge(c1, random_gauge(c1.base()->vertex_count(), *g, rng))
                            : random_cocycle(pres, g, rng);
        auto tree = gauge_equivalent(c1, c2, GaugeMethod::tree, big);
        auto brute = gauge_equivalent(c1, c2, GaugeMethod::oracle, big);
        CHECK(tree == brute);
        if (tree) CHECK(apply_gauge(c1, *tree) == c2);
        if (trial % 2) CHECK(tree.has_value());
        // equivalence is decided by conjugacy of holonomies
        bool conj = are_conjugate(holonomy(c1, pres), holonomy(c2, pres)).has_value();
        CHECK(conj == tree.has_value());
      }
    }
  }
}

TEST_CASE("holonomy inverts the pushforward of the universal cocycle") {
  for (const auto& name : small_complexes()) {
    auto pres = edge_path_group(corpus::complex(name));
    auto u = universal_cocycle(*pres);
    for (const auto& gname : {"Z2", "Z3", "S3"}) {
      auto g = corpus::group(gname);
      for (const auto& h : enumerate_homs(pres->group, g, big))
        CHECK(holonomy(pushforward(h, u), pres) == h);
    }
  }
}

TEST_CASE("pushforward and pullback commute and are functorial") {
  std::mt19937 rng(29);
  auto maps = corpus::maps();
  auto homs = corpus::homs();
  int triples = 0;
  for (int trial = 0; trial < 400 && triples < 100; ++trial) {
    const auto& m = maps[rng() % maps.size()];
    const auto& h = homs[rng() % homs.size()];
    auto pres = edge_path_group(m.map.target());
    auto c = random_cocycle(pres, h.hom.source(), rng);
    CHECK(pushforward_pullback_commute(h.hom, m.map, c));
    CHECK(pushforward(h.hom, pullback(m.map, c)) == pullback(m.map, pushforward(h.hom, c)));
    ++triples;
  }
  CHECK(triples == 100);

  // push (b a) = push b . push a
  auto z2 = corpus::group("Z2"), z4 = corpus::group("Z4");
  auto up = extend_hom(z2, z4, {{1, 2}});
  auto down = extend_hom(z4, z2, {{1, 1}});
  auto pres = edge_path_group(corpus::complex("figure_eight"));
  for (int i = 0; i < 10; ++i) {
    auto c = random_cocycle(pres, z2, rng);
    CHECK(pushforward(compose(down, up), c) == pushforward(down, pushforward(up, c)));
    CHECK(pushforward(FiniteHom::identity(z2), c) == c);
  }
  // pull (g f) = pull f . pull g
  auto hex = corpus::complex("hexagon"), circle = corpus::complex("circle"),
       disc = corpus::complex("disc");
  SimplicialMap wrap(hex, circle, {0, 1, 2, 0, 1, 2});
  SimplicialMap inc(circle, disc, {0, 1, 2});
  auto dpres = edge_path_group(disc);
  for (const auto& gname : corpus::group_names()) {
    auto c = random_cocycle(dpres, corpus::group(gname), rng);
    CHECK(pullback(compose(inc, wrap), c) == pullback(wrap, pullback(inc, c)));
  }
}

TEST_CASE("total spaces: free action and components equal the holonomy index") {
  std::mt19937 rng(31);
  for (const auto& name : {"circle", "disc", "hexagon", "rp2", "figure_eight", "torus"}) {
    auto pres = edge_path_group(corpus::complex(name));
    for (const auto& gname : corpus::group_names()) {
      auto g = corpus::group(gname);
      for (int trial = 0; trial < 3; ++trial) {
        auto c = random_cocycle(pres, g, rng);
        auto q = total_space(c);
        CHECK(q.action->is_free());
        CHECK(q.complex->vertex_count() == c.base()->vertex_count() * g->order());
        for (int d = 0; d <= q.complex->dimension(); ++d)
          CHECK(q.complex->simplices(d).size() == corpus::complex(name)->simplices(d).size() * g->order());
        auto image = g->generated_subgroup(holonomy(c, pres).images());
        CHECK(oracle::components(*q.complex) == g->order() / image.size());
      }
    }
  }
  auto triv = total_space(Cocycle::trivial(delta_of("circle"), corpus::group("S3")));
  CHECK(oracle::components(*triv.complex) == 6);
  CHECK(triv.complex->label(4) == "0|" + corpus::group("S3")->element_name(4));
  CHECK(triv.complex->label(6) == "1|()");
}

TEST_CASE("tensor and cotensor unit laws") {
  for (const auto& gname : corpus::group_names()) {
    auto g = corpus::group(gname);
    auto right = FiniteGSet::regular(g, Side::right);
    auto left = FiniteGSet::regular(g, Side::left);
    auto t = tensor(right, left);
    REQUIRE(t.size == g->order());
    // [a, b] <-> a b is a bijection
    std::vector<int> seen(g->order(), -1);
    bool bijective = true;
    for (Elem a = 0; a < static_cast<Elem>(g->order()); ++a)
      for (Elem b = 0; b < static_cast<Elem>(g->order()); ++b) {
        auto cls = t.class_of[a * g->order() + b];
        auto ab = g->mul(a, b);
        if (seen[ab] < 0) seen[ab] = static_cast<int>(cls);
        if (seen[ab] != static_cast<int>(cls)) bijective = false;
      }
    CHECK(bijective);
    std::set<int> distinct(seen.begin(), seen.end());
    CHECK(distinct.size() == g->order());

    auto pt = FiniteGSet::point(g, Side::left);
    CHECK(tensor(right, pt).size == 1);
    auto hcos = cosets(g, {g->generators().front()});
    CHECK(tensor(hcos, pt).size == 1);
    CHECK(tensor(hcos, left).size == hcos.size());
    CHECK(tensor(right, right.opposite()).size == g->order());
  }

  std::mt19937 rng(37);
  for (const auto& name : {"circle", "rp2", "torus"}) {
    auto pres = edge_path_group(corpus::complex(name));
    auto c = random_cocycle(pres, corpus::group("S3"), rng);
    auto q = total_space(c);
    auto m = total_space_over_base(q);
    auto x = base_as_set(c.base()->vertex_count());
    auto ct = cotensor(m, x);
    REQUIRE(ct.pairs.size() == m.size());
    for (std::size_t i = 0; i < ct.pairs.size(); ++i) {
      CHECK(ct.pairs[i].first == i);
      CHECK(static_cast<Vertex>(ct.pairs[i].second) == m.projection[i]);
    }
    CHECK(cotensor(x, x).pairs.size() == x.size());
    CHECK(cotensor(m, m).pairs.size() == m.size() * c.group()->order());
  }
}

TEST_CASE("equivariant maps correspond to sections of the associated bundle") {
  std::mt19937 rng(41);
  int instances = 0;
  for (const auto& name : {"circle", "disc", "rp2", "figure_eight", "hexagon"}) {
    auto pres = edge_path_group(corpus::complex(name));
    for (const auto& gname : {"Z2", "Z4", "S3"}) {
      auto g = corpus::group(gname);
      auto c = random_cocycle(pres, g, rng);
      auto q = total_space(c);
      auto image = holonomy(c, pres).images();
      for (const auto& z : {FiniteGSet::regular(g, Side::right), FiniteGSet::point(g, Side::right),
                            cosets(g, {g->generators().front()})}) {
        auto maps = equivariant_maps(q, z, big);
        auto secs = sections_of_associated(q, z, big);
        CHECK(maps.size() == secs.size());
        // fixed points of the holonomy image
        std::size_t fixed = 0;
        for (int p = 0; p < static_cast<int>(z.size()); ++p) {
          bool f = true;
          for (Elem x : image) f = f && z.act(p, x) == p;
          fixed += f;
        }
        CHECK(maps.size() == fixed);
        auto assoc = associated_bundle(q, z);
        std::set<std::vector<std::size_t>> images;
        for (const auto& phi : maps) {
          auto s = section_of_map(q, z, assoc, phi);
          CHECK(map_of_section(q, z, assoc, s) == phi);
          images.insert(s);
        }
        CHECK(images == std::set<std::vector<std::size_t>>(secs.begin(), secs.end()));
        ++instances;
      }
    }
  }
  CHECK(instances >= 5);
}

TEST_CASE("word cocycles") {
  auto pres = edge_path_group(corpus::complex("rp2"));
  auto u = universal_cocycle(*pres);
  CHECK(u.values().size() == pres->base->count(1));
  for (std::size_t e = 0; e < u.values().size(); ++e)
    CHECK(u.values()[e].empty() == pres->in_tree[e]);
  auto bad = u.values();
  bad[pres->cell_of_generator[1]] = bad[pres->cell_of_generator[2]];
  CHECK_THROWS_AS(WordCocycle(pres->base, pres->group, bad), Error);
  auto id = identity_hom(pres->group);
  CHECK(pushforward(id, u) == u);
  CHECK(holonomy(u, pres) == id);
}
