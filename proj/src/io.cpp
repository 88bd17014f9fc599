#include "pbundle/io.hpp"

#include <fstream>
#include <sstream>

#include "pbundle/corpus.hpp"
#include "pbundle/error.hpp"

namespace pbundle::io {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view corpus_prefix = "corpus:";

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object()) fail(std::string(what) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string(what) + ": missing field '" + key + "'");
  return *it;
}

template <typename T>
T as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    fail(std::string(what) + ": " + e.what());
  }
}

}  // namespace

json parse(std::string_view text, const std::string& origin) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte);
    std::string msg = e.what();
    auto pos = msg.find("syntax error");
    if (pos != std::string::npos) msg = msg.substr(pos);
    fail(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
}

json read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path.generic_string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path.generic_string());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write '" + path.generic_string() + "'");
  out << text;
}

// ---------------------------------------------------------------- complexes

SimplicialComplex complex_from_json(const json& j) {
  auto labels = as<std::vector<std::string>>(field(j, "vertices", "complex"), "complex vertices");
  auto facets = as<std::vector<std::vector<std::string>>>(field(j, "facets", "complex"),
                                                          "complex facets");
  std::optional<std::string> base;
  if (auto it = j.find("basepoint"); it != j.end() && !it->is_null())
    base = as<std::string>(*it, "complex basepoint");
  return SimplicialComplex::validate(std::move(labels), facets, base);
}

json complex_to_json(const SimplicialComplex& k) {
  json facets = json::array();
  for (const auto& f : k.facets()) {
    json row = json::array();
    for (Vertex v : f) row.push_back(k.label(v));
    facets.push_back(row);
  }
  json out = {{"vertices", k.labels()}, {"facets", facets}};
  if (k.basepoint()) out["basepoint"] = k.label(*k.basepoint());
  return out;
}

// ------------------------------------------------------------------- groups

FiniteGroup group_from_json(const json& j) {
  std::string name = j.contains("name") ? as<std::string>(j["name"], "group name") : "G";
  if (j.contains("permutations"))
    return FiniteGroup::from_permutations(
        name, as<std::vector<std::vector<int>>>(j["permutations"], "group permutations"));
  const json& table = field(j, "table", "group");
  auto elements = as<std::vector<std::string>>(field(table, "elements", "group table"),
                                               "group elements");
  auto mul = as<std::vector<std::vector<Elem>>>(field(table, "mul", "group table"), "group mul");
  return FiniteGroup::from_table(name, std::move(elements), mul);
}

json group_to_json(const FiniteGroup& g) {
  std::vector<std::vector<Elem>> rows(g.order(), std::vector<Elem>(g.order()));
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      rows[a][b] = g.mul(static_cast<Elem>(a), static_cast<Elem>(b));
  return {{"name", g.name()}, {"table", {{"elements", g.element_names()}, {"mul", rows}}}};
}

FinitelyPresentedGroup presented_from_json(const json& j) {
  auto gens = as<std::vector<std::string>>(field(j, "generators", "presentation"),
                                           "presentation generators");
  FinitelyPresentedGroup shell(gens, {});
  std::vector<Word> relators;
  if (j.contains("relators"))
    for (const auto& r : as<std::vector<std::string>>(j["relators"], "presentation relators"))
      relators.push_back(shell.parse_word(r));
  return FinitelyPresentedGroup(std::move(gens), std::move(relators));
}

json presented_to_json(const FinitelyPresentedGroup& p) {
  json rels = json::array();
  for (const auto& r : p.relators()) rels.push_back(p.format_word(r));
  return {{"generators", p.generators()}, {"relators", rels}};
}

// ------------------------------------------------------------------- loader

Loader::Loader(fs::path base_dir) : base_(std::move(base_dir)) {}

json Loader::resolve(const json& ref, fs::path& dir) {
  if (ref.is_object()) return ref;
  if (!ref.is_string()) fail("expected a file path, 'corpus:NAME' or an object");
  fs::path path = (dir / ref.get<std::string>()).lexically_normal();
  dir = path.parent_path();
  return read_file(path);
}

namespace {

bool is_corpus(const json& ref) {
  return ref.is_string() && ref.get<std::string>().starts_with(corpus_prefix);
}

std::string corpus_name(const json& ref) {
  return ref.get<std::string>().substr(corpus_prefix.size());
}

}  // namespace

ComplexPtr Loader::complex(const json& ref) {
  if (is_corpus(ref)) return corpus::complex(corpus_name(ref));
  fs::path dir = base_;
  json j = resolve(ref, dir);
  return std::make_shared<const SimplicialComplex>(complex_from_json(j));
}

GroupPtr Loader::group(const json& ref) {
  if (is_corpus(ref)) return corpus::group(corpus_name(ref));
  fs::path dir = base_;
  json j = resolve(ref, dir);
  return std::make_shared<const FiniteGroup>(group_from_json(j));
}

Elem Loader::element(const FiniteGroup& g, const json& j) {
  if (j.is_number_integer()) {
    auto i = j.get<long long>();
    if (i < 0 || i >= static_cast<long long>(g.order()))
      fail("element index " + std::to_string(i) + " out of range for " + g.name());
    return static_cast<Elem>(i);
  }
  if (j.is_string()) {
    auto x = g.find(j.get<std::string>());
    if (!x) fail("no element '" + j.get<std::string>() + "' in " + g.name());
    return *x;
  }
  fail("group element must be a name or an index");
}

namespace {

Vertex vertex_of(const SimplicialComplex& k, const json& j) {
  auto label = as<std::string>(j, "vertex");
  auto v = k.find_vertex(label);
  if (!v) fail("unknown vertex '" + label + "'");
  return *v;
}

}  // namespace

Cocycle Loader::cocycle(const json& ref) {
  fs::path dir = base_;
  json j = resolve(ref, dir);
  Loader sub(dir);
  auto x = sub.complex(field(j, "complex", "cocycle"));
  auto g = sub.group(field(j, "group", "cocycle"));
  auto delta = std::make_shared<const DeltaComplex>(DeltaComplex::from_simplicial(x));
  std::vector<std::tuple<Vertex, Vertex, Elem>> values;
  if (j.contains("values")) {
    for (const auto& t : j["values"]) {
      if (!t.is_array() || t.size() != 3) fail("cocycle values: expected [u, v, element]");
      values.emplace_back(vertex_of(*x, t[0]), vertex_of(*x, t[1]), element(*g, t[2]));
    }
  }
  return Cocycle::from_edges(delta, g, values);
}

FiniteHom Loader::hom(const json& ref) {
  if (is_corpus(ref)) {
    for (const auto& h : corpus::homs())
      if (h.name == corpus_name(ref)) return h.hom;
    fail("unknown corpus hom '" + corpus_name(ref) + "'");
  }
  fs::path dir = base_;
  json j = resolve(ref, dir);
  Loader sub(dir);
  auto s = sub.group(field(j, "source", "hom"));
  auto t = sub.group(field(j, "target", "hom"));
  const json& images = field(j, "images", "hom");
  std::vector<std::pair<Elem, Elem>> pairs;
  if (images.is_object()) {
    for (const auto& [k, v] : images.items()) pairs.emplace_back(element(*s, json(k)), element(*t, v));
  } else if (images.is_array()) {
    if (images.size() != s->order()) fail("hom images: expected one image per element");
    for (std::size_t i = 0; i < images.size(); ++i)
      pairs.emplace_back(static_cast<Elem>(i), element(*t, images[i]));
  } else {
    fail("hom images: expected an object or an array");
  }
  return extend_hom(s, t, pairs);
}

SimplicialMap Loader::map(const json& ref) {
  if (is_corpus(ref)) {
    for (const auto& m : corpus::maps())
      if (m.name == corpus_name(ref)) return m.map;
    fail("unknown corpus map '" + corpus_name(ref) + "'");
  }
  fs::path dir = base_;
  json j = resolve(ref, dir);
  Loader sub(dir);
  auto s = sub.complex(field(j, "source", "map"));
  auto t = sub.complex(field(j, "target", "map"));
  const json& vs = field(j, "vertices", "map");
  if (!vs.is_object()) fail("map vertices: expected an object");
  std::vector<Vertex> image(s->vertex_count(), -1);
  for (const auto& [k, v] : vs.items()) image[vertex_of(*s, json(k))] = vertex_of(*t, v);
  for (std::size_t v = 0; v < image.size(); ++v)
    if (image[v] < 0) fail("map has no image for vertex '" + s->label(static_cast<Vertex>(v)) + "'");
  SimplicialMap f(s, t, std::move(image));
  if (j.value("pointed", false) && !f.is_pointed()) fail("map is marked pointed but is not");
  return f;
}

json cocycle_to_json(const Cocycle& c, const json& complex_ref, const json& group_ref) {
  const auto& base = *c.base();
  const auto& g = *c.group();
  json values = json::array();
  for (std::size_t e = 0; e < base.count(1); ++e) {
    if (c.value(e) == g.identity()) continue;
    const auto& v = base.cell(1, e).vertices;
    values.push_back({base.vertex_labels().at(v[0]), base.vertex_labels().at(v[1]),
                      g.element_name(c.value(e))});
  }
  return {{"complex", complex_ref}, {"group", group_ref}, {"values", values}};
}

}  // namespace pbundle::io
