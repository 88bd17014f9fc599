#include "pbundle/corpus.hpp"

#include <map>

#include "pbundle/error.hpp"

namespace pbundle::corpus {

namespace {

ComplexPtr make(std::size_t n, const std::vector<std::vector<Vertex>>& facets) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return std::make_shared<const SimplicialComplex>(
      SimplicialComplex::from_facets(std::move(labels), facets, 0));
}

ComplexPtr build_complex(std::string_view name) {
  if (name == "circle") return make(3, {{0, 1}, {1, 2}, {0, 2}});
  if (name == "disc") return make(3, {{0, 1, 2}});
  if (name == "sphere") return make(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  if (name == "hexagon") return make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  if (name == "torus") {
    std::vector<std::vector<Vertex>> f;
    for (Vertex i = 0; i < 7; ++i) {
      f.push_back({i, (i + 1) % 7, (i + 3) % 7});
      f.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return make(7, f);
  }
  if (name == "rp2")
    return make(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                    {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
  if (name == "figure_eight") return make(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  fail("unknown corpus complex '" + std::string(name) + "'");
}

GroupPtr build_group(std::string_view name) {
  if (name == "Z2") return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
  if (name == "Z3") return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(3));
  if (name == "Z4") return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(4));
  if (name == "Z2xZ2")
    return std::make_shared<const FiniteGroup>(
        FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
  if (name == "S3")
    return std::make_shared<const FiniteGroup>(
        FiniteGroup::from_permutations("S3", {{1, 0, 2}, {1, 2, 0}}));
  fail("unknown corpus group '" + std::string(name) + "'");
}

Elem elem(const GroupPtr& g, std::string_view name) {
  auto x = g->find(name);
  if (!x) fail("corpus: no element " + std::string(name) + " in " + g->name());
  return *x;
}

FiniteHom hom(std::string_view from, std::string_view to,
              const std::vector<std::pair<std::string, std::string>>& images) {
  auto s = group(from);
  auto t = group(to);
  std::vector<std::pair<Elem, Elem>> pairs;
  for (const auto& [x, y] : images) pairs.emplace_back(elem(s, x), elem(t, y));
  return extend_hom(s, t, pairs);
}

SimplicialMap vmap(std::string_view from, std::string_view to, std::vector<Vertex> image) {
  return SimplicialMap(complex(from), complex(to), std::move(image));
}

}  // namespace

std::vector<std::string> complex_names() {
  return {"circle", "disc", "sphere", "hexagon", "torus", "rp2", "figure_eight"};
}

ComplexPtr complex(std::string_view name) {
  static std::map<std::string, ComplexPtr, std::less<>> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(std::string(name), build_complex(name)).first;
  return it->second;
}

std::vector<std::string> group_names() { return {"Z2", "Z3", "Z4", "Z2xZ2", "S3"}; }

GroupPtr group(std::string_view name) {
  static std::map<std::string, GroupPtr, std::less<>> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(std::string(name), build_group(name)).first;
  return it->second;
}

std::vector<NamedMap> maps() {
  std::vector<NamedMap> out;
  for (const auto& name : complex_names())
    out.push_back({"id_" + name, SimplicialMap::identity(complex(name))});
  out.push_back({"wrap_hexagon_circle", vmap("hexagon", "circle", {0, 1, 2, 0, 1, 2})});
  out.push_back({"reflect_circle", vmap("circle", "circle", {0, 2, 1})});
  out.push_back({"include_circle_disc", vmap("circle", "disc", {0, 1, 2})});
  out.push_back({"include_circle_sphere", vmap("circle", "sphere", {0, 1, 2})});
  out.push_back({"include_circle_torus", vmap("circle", "torus", {0, 1, 2})});
  out.push_back({"include_circle_figure_eight", vmap("circle", "figure_eight", {0, 1, 2})});
  out.push_back({"fold_figure_eight_circle", vmap("figure_eight", "circle", {0, 1, 2, 1, 2})});
  out.push_back({"include_disc_rp2", vmap("disc", "rp2", {0, 1, 2})});
  out.push_back({"squash_sphere_disc", vmap("sphere", "disc", {0, 1, 2, 2})});
  out.push_back({"constant_torus_circle", SimplicialMap::constant(complex("torus"), complex("circle"), 0)});
  out.push_back({"constant_rp2_hexagon", SimplicialMap::constant(complex("rp2"), complex("hexagon"), 0)});
  return out;
}

std::vector<NamedHom> homs() {
  std::vector<NamedHom> out;
  for (const auto& name : group_names())
    out.push_back({"id_" + name, FiniteHom::identity(group(name))});
  out.push_back({"Z2_to_Z4", hom("Z2", "Z4", {{"1", "2"}})});
  out.push_back({"Z4_to_Z2", hom("Z4", "Z2", {{"1", "1"}})});
  out.push_back({"Z2_to_S3", hom("Z2", "S3", {{"1", "(0 1)"}})});
  out.push_back({"Z3_to_S3", hom("Z3", "S3", {{"1", "(0 1 2)"}})});
  out.push_back({"sign_S3", hom("S3", "Z2", {{"(0 1)", "1"}, {"(0 1 2)", "0"}})});
  out.push_back({"trivial_Z3_Z2", FiniteHom::trivial(group("Z3"), group("Z2"))});
  out.push_back({"Z2_to_Z2xZ2", hom("Z2", "Z2xZ2", {{"1", "(1,0)"}})});
  out.push_back({"first_Z2xZ2", hom("Z2xZ2", "Z2", {{"(1,0)", "1"}, {"(0,1)", "0"}})});
  return out;
}

std::vector<ContiguousPair> contiguous_pairs() {
  std::vector<ContiguousPair> out;
  out.push_back({"disc_slide", vmap("disc", "disc", {0, 1, 2}), vmap("disc", "disc", {1, 1, 2})});
  out.push_back({"circle_disc_contract", vmap("circle", "disc", {0, 1, 2}),
                 vmap("circle", "disc", {0, 0, 0})});
  out.push_back({"circle_sphere_push_1", vmap("circle", "sphere", {0, 1, 2}),
                 vmap("circle", "sphere", {0, 1, 3})});
  out.push_back({"circle_sphere_push_2", vmap("circle", "sphere", {0, 1, 2}),
                 vmap("circle", "sphere", {0, 3, 2})});
  out.push_back({"hexagon_disc_contract", vmap("hexagon", "disc", {0, 1, 2, 0, 1, 2}),
                 vmap("hexagon", "disc", {0, 0, 0, 0, 0, 0})});
  out.push_back({"circle_torus_triangle", vmap("circle", "torus", {0, 1, 3}),
                 vmap("circle", "torus", {0, 0, 0})});
  out.push_back({"torus_identity", SimplicialMap::identity(complex("torus")),
                 SimplicialMap::identity(complex("torus"))});
  return out;
}

}  // namespace pbundle::corpus
