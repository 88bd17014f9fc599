#include "pbundle/cli.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pbundle/bundle.hpp"
#include "pbundle/classifying.hpp"
#include "pbundle/corpus.hpp"
#include "pbundle/error.hpp"

namespace pbundle::cli {

namespace fs = std::filesystem;
using io::json;

namespace {

// ----------------------------------------------------------------- output

class Table {
public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (width.size() <= i) width.push_back(0);
        width[i] = std::max(width[i], r[i].size());
      }
    std::string out;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::string line;
      for (std::size_t i = 0; i < rows_[k].size(); ++i) {
        line += rows_[k][i];
        if (i + 1 < rows_[k].size()) line += std::string(width[i] - rows_[k][i].size() + 2, ' ');
      }
      out += line + "\n";
      if (k == 0) {
        std::size_t total = 0;
        for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i + 1 < width.size() ? 2 : 0);
        out += std::string(total, '-') + "\n";
      }
    }
    return out;
  }

private:
  std::vector<std::vector<std::string>> rows_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_strings(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

const std::string& vlabel(const DeltaComplex& k, Vertex v) { return k.vertex_labels().at(v); }

json cocycle_values(const Cocycle& c) {
  const auto& base = *c.base();
  const auto& g = *c.group();
  json out = json::array();
  for (std::size_t e = 0; e < base.count(1); ++e) {
    const auto& v = base.cell(1, e).vertices;
    out.push_back({vlabel(base, v[0]), vlabel(base, v[1]), g.element_name(c.value(e))});
  }
  return out;
}

std::string cocycle_text(const Cocycle& c) {
  const auto& base = *c.base();
  const auto& g = *c.group();
  std::vector<std::string> parts;
  for (std::size_t e = 0; e < base.count(1); ++e) {
    if (c.value(e) == g.identity()) continue;
    const auto& v = base.cell(1, e).vertices;
    parts.push_back(vlabel(base, v[0]) + "->" + vlabel(base, v[1]) + "=" + g.element_name(c.value(e)));
  }
  return parts.empty() ? "trivial" : join_strings(parts, " ");
}

json gauge_json(const DeltaComplex& base, const FiniteGroup& g, const GaugeTransform& t) {
  json out = json::object();
  for (std::size_t v = 0; v < t.size(); ++v)
    out[vlabel(base, static_cast<Vertex>(v))] = g.element_name(t[v]);
  return out;
}

std::string gauge_text(const DeltaComplex& base, const FiniteGroup& g, const GaugeTransform& t) {
  std::vector<std::string> parts;
  for (std::size_t v = 0; v < t.size(); ++v)
    parts.push_back(vlabel(base, static_cast<Vertex>(v)) + ":" + g.element_name(t[v]));
  return join_strings(parts, " ");
}

json hom_json(const PresentedHom& h) {
  json out = json::object();
  const auto& gens = h.source()->generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    out[gens[i]] = h.target()->element_name(h.images()[i]);
  return out;
}

std::string hom_text(const PresentedHom& h) {
  std::vector<std::string> parts;
  const auto& gens = h.source()->generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    parts.push_back(gens[i] + "->" + h.target()->element_name(h.images()[i]));
  return parts.empty() ? "(no generators)" : join_strings(parts, " ");
}

std::string presentation_text(const FinitelyPresentedGroup& p) {
  std::vector<std::string> rels;
  for (const auto& r : p.relators()) rels.push_back(r.empty() ? "1" : p.format_word(r));
  std::string out = "< " + join_strings(p.generators(), ", ") + " |";
  if (!rels.empty()) out += " " + join_strings(rels, ", ");
  return out + " >";
}

json order_json(const GroupOrder& o) {
  switch (o.kind) {
    case GroupOrder::Kind::finite: return o.value;
    case GroupOrder::Kind::infinite: return "infinite";
    case GroupOrder::Kind::unknown: break;
  }
  return "unknown";
}

std::string order_text(const GroupOrder& o) {
  json j = order_json(o);
  return j.is_string() ? j.get<std::string>() : std::to_string(j.get<std::uint64_t>());
}

json presentation_json(const FinitelyPresentedGroup& p) {
  const auto simple = simplify(p);
  return {{"presentation", io::presented_to_json(p)},
          {"simplified", io::presented_to_json(simple.group)},
          {"order", order_json(presented_order(p))}};
}

void mark_failed(Report& r, const std::string& what) {
  r.status = Status::verification_failure;
  r.text += "FAILED: " + what + "\n";
}

io::Loader loader(const Options& opt) { return io::Loader(opt.dir); }
GaugeMethod method(const Options& opt) { return opt.oracle ? GaugeMethod::oracle : GaugeMethod::tree; }

DeltaPtr based(const DeltaPtr& d) {
  if (d->basepoint()) return d;
  return std::make_shared<const DeltaComplex>(d->with_basepoint(0));
}

Cocycle rebase(const Cocycle& c) {
  auto d = based(c.base());
  if (d == c.base()) return c;
  return Cocycle(d, c.group(), c.values());
}

bool connected(const DeltaComplex& d) {
  if (d.origin()) return connected_components(*d.origin()).size() == 1;
  return true;
}

}  // namespace

// ---------------------------------------------------------------- classify

Report classify(const std::string& complex_arg, const std::string& group_arg, const Options& opt) {
  auto ld = loader(opt);
  auto x = ld.complex(io::Loader::ref(complex_arg));
  auto g = ld.group(io::Loader::ref(group_arg));
  ClassifyOptions co;
  co.method = method(opt);
  const auto cl = classify_bundles(x, g, co, opt.budget);
  const auto& pres = *cl.presentation;
  const auto& delta = *pres.base;

  Report r;
  std::ostringstream t;
  t << "base " << complex_arg << " (" << x->vertex_count() << " vertices), group " << g->name()
    << " (order " << g->order() << ")\n";
  t << "edge-path group " << presentation_text(*pres.group) << "\n";
  t << "homomorphisms " << cl.hom_count << ", conjugacy classes " << cl.rows.size() << "\n\n";

  Table table({"class", "size", "holonomy", "cocycle", "pulled back", "witness"});
  json rows = json::array();
  for (std::size_t i = 0; i < cl.rows.size(); ++i) {
    const auto& row = cl.rows[i];
    table.add({std::to_string(i), std::to_string(row.class_size), hom_text(row.hom),
               cocycle_text(row.cocycle), cocycle_text(row.pulled_back),
               gauge_text(delta, *g, row.witness)});
    json levels = json::object(), offsets = json::object();
    for (std::size_t v = 0; v < row.map.level.size(); ++v) {
      levels[vlabel(delta, static_cast<Vertex>(v))] = row.map.level[v];
      offsets[vlabel(delta, static_cast<Vertex>(v))] = g->element_name(row.map.offset[v]);
    }
    rows.push_back({{"holonomy", hom_json(row.hom)},
                    {"class_size", row.class_size},
                    {"cocycle", cocycle_values(row.cocycle)},
                    {"classifying_map", {{"stage", row.map.target->n},
                                         {"level", levels},
                                         {"offset", offsets}}},
                    {"pulled_back", cocycle_values(row.pulled_back)},
                    {"witness", gauge_json(delta, *g, row.witness)}});
  }
  t << table.str() << "\n";
  t << "oracle: " << cl.oracle_cocycles << " cocycles in " << cl.oracle_classes
    << " gauge classes\n";
  t << "pullbacks pairwise inequivalent: " << yes_no(cl.pullbacks_distinct) << "\n";
  r.text = t.str();
  r.data = {{"command", "classify"},
            {"complex", complex_arg},
            {"group", group_arg},
            {"edge_path_group", io::presented_to_json(*pres.group)},
            {"hom_count", cl.hom_count},
            {"classes", rows},
            {"oracle", {{"cocycles", cl.oracle_cocycles}, {"classes", cl.oracle_classes}}},
            {"pullbacks_distinct", cl.pullbacks_distinct},
            {"gauge_method", opt.oracle ? "oracle" : "tree"},
            {"verified", cl.verified()}};
  if (!cl.verified())
    mark_failed(r, "hom classes, cocycle classes and pullback classes do not agree");
  return r;
}

// -------------------------------------------------------------- join stages

Report join(const std::string& group_arg, int n, const Options& opt) {
  if (n < 0) fail("stage must be >= 0");
  auto g = loader(opt).group(io::Loader::ref(group_arg));
  const auto stage = milnor_join(g, n, opt.skeleton, opt.budget);
  const auto& k = *stage.complex;

  Report r;
  json fvec = json::array();
  bool counts_ok = true;
  Table table({"dim", "simplices", "expected"});
  for (int d = 0; d <= k.dimension(); ++d) {
    const auto have = k.simplices(d).size();
    const auto want = join_simplex_count(g->order(), n, d);
    counts_ok = counts_ok && have == want;
    fvec.push_back(have);
    table.add({std::to_string(d), std::to_string(have), std::to_string(want)});
  }
  const bool free = stage.action->is_free();
  r.text = "join stage " + std::to_string(n) + " of " + g->name() +
           (opt.skeleton >= 0 ? ", " + std::to_string(opt.skeleton) + "-skeleton" : "") + "\n" +
           table.str() + "free action: " + yes_no(free) + "\n";
  r.data = {{"command", "join"},
            {"group", group_arg},
            {"n", n},
            {"skeleton", opt.skeleton},
            {"f_vector", fvec},
            {"free", free},
            {"counts_match", counts_ok},
            {"complex", io::complex_to_json(k)}};
  if (!counts_ok) mark_failed(r, "simplex counts differ from choose(n+1, d+1) |G|^(d+1)");
  if (!free) mark_failed(r, "the action is not free");
  return r;
}

Report bstage(const std::string& group_arg, int n, const Options& opt) {
  if (n < 0) fail("stage must be >= 0");
  auto g = loader(opt).group(io::Loader::ref(group_arg));
  const auto stage = classifying_stage(g, n, opt.skeleton, opt.budget);
  const auto& d = *stage.delta;
  const auto pres = edge_path_group(stage.delta);
  const auto eps = counit(g, n, opt.budget);

  Report r;
  std::ostringstream t;
  json cells = json::array();
  t << "classifying stage " << n << " of " << g->name() << "\ncells";
  for (int k = 0; k <= d.dimension(); ++k) {
    cells.push_back(d.count(k));
    t << " " << d.count(k);
  }
  const auto order = presented_order(*pres->group);
  t << "\nedge-path group " << presentation_text(*pres->group) << "\n";
  t << "simplified " << presentation_text(simplify(*pres->group).group) << ", order "
    << order_text(order) << "\n";
  t << "counit " << hom_text(*eps.hom) << "\n";
  t << "surjective " << yes_no(eps.surjective) << ", injective " << yes_no(eps.injective_certified)
    << "\n";
  r.text = t.str();
  r.data = {{"command", "bstage"},
            {"group", group_arg},
            {"n", n},
            {"skeleton", opt.skeleton},
            {"cells", cells},
            {"edge_path_group", presentation_json(*pres->group)},
            {"counit", {{"images", hom_json(*eps.hom)},
                        {"surjective", eps.surjective},
                        {"injective_certified", eps.injective_certified},
                        {"isomorphism", eps.is_isomorphism()},
                        {"reason", eps.reason}}}};
  if (!eps.is_isomorphism()) mark_failed(r, "counit is not an isomorphism: " + eps.reason);
  return r;
}

// -------------------------------------------------------------------- pi1

Report pi1(const std::string& complex_arg, const Options& opt) {
  auto x = loader(opt).complex(io::Loader::ref(complex_arg));
  if (!x->basepoint()) x = std::make_shared<const SimplicialComplex>(x->with_basepoint(0));
  const auto pres = edge_path_group(x);
  const auto& d = *pres->base;
  const auto simple = simplify(*pres->group);
  const auto order = presented_order(*pres->group);

  json tree = json::array();
  std::vector<std::string> tree_text;
  for (std::size_t e = 0; e < d.count(1); ++e) {
    if (!pres->in_tree[e]) continue;
    const auto& v = d.cell(1, e).vertices;
    tree.push_back({vlabel(d, v[0]), vlabel(d, v[1])});
    tree_text.push_back(vlabel(d, v[0]) + "-" + vlabel(d, v[1]));
  }
  json gens = json::object();
  Table table({"generator", "edge"});
  for (std::size_t i = 0; i < pres->cell_of_generator.size(); ++i) {
    const auto& v = d.cell(1, pres->cell_of_generator[i]).vertices;
    const auto& name = pres->group->generators()[i];
    gens[name] = {vlabel(d, v[0]), vlabel(d, v[1])};
    table.add({name, vlabel(d, v[0]) + "->" + vlabel(d, v[1])});
  }

  Report r;
  r.text = "edge-path group of " + complex_arg + " at " + vlabel(d, pres->basepoint) + "\n" +
           "tree " + join_strings(tree_text, " ") + "\n" + table.str() +
           "presentation " + presentation_text(*pres->group) + "\n" +
           "simplified " + presentation_text(simple.group) + "\n" +
           "order " + order_text(order) + "\n";
  r.data = {{"command", "pi1"},
            {"complex", complex_arg},
            {"basepoint", vlabel(d, pres->basepoint)},
            {"tree", tree},
            {"generators", gens},
            {"edge_path_group", presentation_json(*pres->group)}};
  return r;
}

// --------------------------------------------------------------- holonomy

Report holonomy(const std::string& cocycle_arg, const Options& opt) {
  const Cocycle c = rebase(loader(opt).cocycle(io::Loader::ref(cocycle_arg)));
  if (!connected(*c.base())) fail("holonomy needs a connected base");
  const auto& g = *c.group();
  const auto pres = edge_path_group(c.base());
  const auto h = pbundle::holonomy(c, pres);
  const auto hv = tree_holonomy(c, *pres);
  const auto image = g.generated_subgroup(h.images());
  const auto q = total_space(c);
  const auto components = connected_components(*q.complex).size();
  const auto index = g.order() / image.size();

  Report r;
  std::vector<std::string> image_names;
  for (Elem x : image) image_names.push_back(g.element_name(x));
  r.text = "holonomy of " + cocycle_arg + "\n" + "edge-path group " +
           presentation_text(*pres->group) + "\n" + "images " + hom_text(h) + "\n" +
           "tree holonomy " + gauge_text(*c.base(), g, hv) + "\n" + "image {" +
           join_strings(image_names, ", ") + "}, order " + std::to_string(image.size()) +
           ", index " + std::to_string(index) + "\n" + "total space components " +
           std::to_string(components) + "\n";
  r.data = {{"command", "holonomy"},
            {"cocycle", cocycle_arg},
            {"edge_path_group", io::presented_to_json(*pres->group)},
            {"images", hom_json(h)},
            {"tree_holonomy", gauge_json(*c.base(), g, hv)},
            {"image", image_names},
            {"image_order", image.size()},
            {"total_space_components", components}};
  if (components != index) mark_failed(r, "total space components differ from the image index");
  return r;
}

// ------------------------------------------------------- push / pull / equiv

Report push(const std::string& hom_arg, const std::string& cocycle_arg, const Options& opt) {
  auto ld = loader(opt);
  const auto a = ld.hom(io::Loader::ref(hom_arg));
  const Cocycle c = rebase(ld.cocycle(io::Loader::ref(cocycle_arg)));
  if (!(*a.source() == *c.group())) fail("hom source is not the structure group of the cocycle");
  const Cocycle out = pushforward(a, c);

  Report r;
  r.text = "pushforward along " + hom_arg + ": " + a.source()->name() + " -> " +
           a.target()->name() + "\n" + "input  " + cocycle_text(c) + "\n" + "result " +
           cocycle_text(out) + "\n";
  json check = nullptr;
  if (connected(*c.base())) {
    const auto pres = edge_path_group(c.base());
    const auto lhs = pbundle::holonomy(out, pres);
    const bool ok = lhs == compose(a, pbundle::holonomy(c, pres));
    check = ok;
    r.text += "holonomy of result = a o holonomy: " + yes_no(ok) + "\n";
    if (!ok) mark_failed(r, "holonomy of the pushforward is not a o holonomy");
  }
  r.data = {{"command", "push"},
            {"hom", hom_arg},
            {"cocycle", cocycle_arg},
            {"result", cocycle_values(out)},
            {"holonomy_check", check}};
  return r;
}

Report pull(const std::string& map_arg, const std::string& cocycle_arg, const Options& opt) {
  auto ld = loader(opt);
  const auto f = ld.map(io::Loader::ref(map_arg));
  const Cocycle c = ld.cocycle(io::Loader::ref(cocycle_arg));
  const Cocycle out = pullback(f, c);

  Report r;
  r.text = "pullback along " + map_arg + "\n" + "input  " + cocycle_text(c) + "\n" + "result " +
           cocycle_text(out) + "\n";
  json check = nullptr;
  if (f.is_pointed() && connected_components(*f.source()).size() == 1 &&
      connected_components(*f.target()).size() == 1) {
    const auto ps = edge_path_group(out.base());
    const auto pt = edge_path_group(c.base());
    const auto omega = omega_on_map(f, ps, pt);
    const bool ok = pbundle::holonomy(out, ps) == compose(pbundle::holonomy(c, pt), omega);
    check = ok;
    r.text += "holonomy of result = holonomy o edge-path map: " + yes_no(ok) + "\n";
    if (!ok) mark_failed(r, "holonomy of the pullback does not factor through the edge-path map");
  }
  r.data = {{"command", "pull"},
            {"map", map_arg},
            {"cocycle", cocycle_arg},
            {"result", cocycle_values(out)},
            {"holonomy_check", check}};
  return r;
}

Report equiv(const std::string& c1_arg, const std::string& c2_arg, const Options& opt) {
  auto ld = loader(opt);
  const Cocycle c1 = rebase(ld.cocycle(io::Loader::ref(c1_arg)));
  const Cocycle c2 = rebase(ld.cocycle(io::Loader::ref(c2_arg)));
  if (!(*c1.base() == *c2.base())) fail("the cocycles live on different bases");
  if (!(*c1.group() == *c2.group())) fail("the cocycles have different structure groups");
  const Cocycle c2s(c1.base(), c1.group(), c2.values());
  const auto witness = gauge_equivalent(c1, c2s, method(opt), opt.budget);
  const auto& g = *c1.group();

  Report r;
  r.text = "gauge equivalence of " + c1_arg + " and " + c2_arg + "\n" + "equivalent " +
           yes_no(witness.has_value()) + "\n";
  if (witness) r.text += "witness " + gauge_text(*c1.base(), g, *witness) + "\n";
  json conj = nullptr;
  if (connected(*c1.base())) {
    const auto pres = edge_path_group(c1.base());
    const auto h = are_conjugate(pbundle::holonomy(c1, pres), pbundle::holonomy(c2s, pres));
    conj = h.has_value();
    r.text += "holonomies conjugate " + yes_no(h.has_value()) + "\n";
    if (h.has_value() != witness.has_value())
      mark_failed(r, "gauge equivalence and conjugacy of holonomies disagree");
  }
  if (witness && !(apply_gauge(c1, *witness) == c2s)) mark_failed(r, "witness does not transform");
  r.data = {{"command", "equiv"},
            {"cocycles", {c1_arg, c2_arg}},
            {"equivalent", witness.has_value()},
            {"witness", witness ? gauge_json(*c1.base(), g, *witness) : json(nullptr)},
            {"holonomies_conjugate", conj},
            {"gauge_method", opt.oracle ? "oracle" : "tree"}};
  return r;
}

// -------------------------------------------------------------- naturality

Report naturality(const std::string& square_arg, const Options& opt) {
  const fs::path path = (opt.dir / square_arg).lexically_normal();
  const json sq = io::read_file(path);
  if (!sq.is_object() || !sq.contains("map") || !sq.contains("hom"))
    fail(path.generic_string() + ": a square needs 'map' and 'hom'");
  io::Loader ld(path.parent_path());
  const auto f = ld.map(sq["map"]);
  const auto a = ld.hom(sq["hom"]);
  int stage = 2;
  if (sq.contains("stage")) {
    if (!sq["stage"].is_number_integer()) fail("square stage must be an integer");
    stage = sq["stage"].get<int>();
  }
  const auto rep = verify_naturality(f, a, stage, opt.budget);

  Report r;
  Table table({"check", "result", "detail"});
  json checks = json::array();
  for (const auto& c : rep.checks) {
    table.add({c.name, c.passed ? "pass" : "FAIL", c.detail});
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  r.text = "naturality of " + square_arg + " (stage " + std::to_string(stage) + ")\n" + table.str();
  r.data = {{"command", "naturality"},
            {"square", square_arg},
            {"stage", stage},
            {"checks", checks},
            {"ok", rep.ok()}};
  if (!rep.ok()) mark_failed(r, "naturality checks failed");
  return r;
}

// ------------------------------------------------------------------ corpus

Report corpus(const std::string& export_dir, const Options& opt) {
  Report r;
  Table cx({"complex", "vertices", "f-vector"});
  json complexes = json::object(), groups = json::object();
  for (const auto& name : corpus::complex_names()) {
    const auto k = corpus::complex(name);
    std::vector<std::string> f;
    json fv = json::array();
    for (int d = 0; d <= k->dimension(); ++d) {
      f.push_back(std::to_string(k->simplices(d).size()));
      fv.push_back(k->simplices(d).size());
    }
    cx.add({name, std::to_string(k->vertex_count()), "(" + join_strings(f, ",") + ")"});
    complexes[name] = fv;
  }
  Table gx({"group", "order", "abelian"});
  for (const auto& name : corpus::group_names()) {
    const auto g = corpus::group(name);
    gx.add({name, std::to_string(g->order()), yes_no(g->is_abelian())});
    groups[name] = g->order();
  }
  json maps = json::array(), homs = json::array(), pairs = json::array();
  for (const auto& m : corpus::maps()) maps.push_back(m.name);
  for (const auto& h : corpus::homs()) homs.push_back(h.name);
  for (const auto& p : corpus::contiguous_pairs()) pairs.push_back(p.name);
  r.text = cx.str() + "\n" + gx.str() + "\n" + std::to_string(maps.size()) + " maps, " +
           std::to_string(homs.size()) + " homomorphisms, " + std::to_string(pairs.size()) +
           " contiguous pairs\n";
  r.data = {{"command", "corpus"},
            {"complexes", complexes},
            {"groups", groups},
            {"maps", maps},
            {"homs", homs},
            {"contiguous_pairs", pairs}};

  if (!export_dir.empty()) {
    const fs::path out = opt.dir / export_dir;
    for (const auto& name : corpus::complex_names())
      io::write_file(out / "complexes" / (name + ".cx"),
                     io::dump(io::complex_to_json(*corpus::complex(name))));
    for (const auto& name : corpus::group_names())
      io::write_file(out / "groups" / (name + ".grp"),
                     io::dump(io::group_to_json(*corpus::group(name))));
    auto complex_name = [](const ComplexPtr& k) {
      for (const auto& name : corpus::complex_names())
        if (*corpus::complex(name) == *k) return name;
      fail("not a corpus complex");
    };
    auto group_name = [](const GroupPtr& g) {
      for (const auto& name : corpus::group_names())
        if (*corpus::group(name) == *g) return name;
      fail("not a corpus group");
    };
    for (const auto& m : corpus::maps()) {
      json vs = json::object();
      for (std::size_t v = 0; v < m.map.image().size(); ++v)
        vs[m.map.source()->label(static_cast<Vertex>(v))] = m.map.target()->label(m.map.image()[v]);
      io::write_file(out / "maps" / (m.name + ".map"),
                     io::dump({{"source", "../complexes/" + complex_name(m.map.source()) + ".cx"},
                               {"target", "../complexes/" + complex_name(m.map.target()) + ".cx"},
                               {"vertices", vs},
                               {"pointed", m.map.is_pointed()}}));
    }
    for (const auto& h : corpus::homs()) {
      json images = json::object();
      for (std::size_t x = 0; x < h.hom.table().size(); ++x)
        images[h.hom.source()->element_name(static_cast<Elem>(x))] =
            h.hom.target()->element_name(h.hom.table()[x]);
      io::write_file(out / "homs" / (h.name + ".hom"),
                     io::dump({{"source", "../groups/" + group_name(h.hom.source()) + ".grp"},
                               {"target", "../groups/" + group_name(h.hom.target()) + ".grp"},
                               {"images", images}}));
    }
    r.text += "exported to " + export_dir + "\n";
  }
  return r;
}

// ---------------------------------------------------------------- dispatch

namespace {

struct CommandSpec {
  std::size_t arity;
  std::vector<std::size_t> file_args;
};

const std::map<std::string, CommandSpec>& command_specs() {
  static const std::map<std::string, CommandSpec> specs = {
      {"classify", {2, {0, 1}}}, {"join", {2, {0}}},       {"bstage", {2, {0}}},
      {"pi1", {1, {0}}},         {"holonomy", {1, {0}}},   {"push", {2, {0, 1}}},
      {"pull", {2, {0, 1}}},     {"equiv", {2, {0, 1}}},   {"naturality", {1, {0}}},
      {"corpus", {0, {}}},
  };
  return specs;
}

int parse_stage(const std::string& s) {
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) fail("stage must be an integer, got '" + s + "'");
  return n;
}

}  // namespace

Report run_command(const std::string& command, const std::vector<std::string>& args,
                   const Options& opt) {
  const auto& specs = command_specs();
  auto it = specs.find(command);
  if (it == specs.end()) fail("unknown command '" + command + "'");
  if (args.size() != it->second.arity)
    fail(command + " takes " + std::to_string(it->second.arity) + " arguments, got " +
         std::to_string(args.size()));
  if (command == "classify") return classify(args[0], args[1], opt);
  if (command == "join") return join(args[0], parse_stage(args[1]), opt);
  if (command == "bstage") return bstage(args[0], parse_stage(args[1]), opt);
  if (command == "pi1") return pi1(args[0], opt);
  if (command == "holonomy") return holonomy(args[0], opt);
  if (command == "push") return push(args[0], args[1], opt);
  if (command == "pull") return pull(args[0], args[1], opt);
  if (command == "equiv") return equiv(args[0], args[1], opt);
  if (command == "naturality") return naturality(args[0], opt);
  return corpus("", opt);
}

Report run_manifest(const fs::path& manifest, const Options& opt) {
  const fs::path path = (opt.dir / manifest).lexically_normal();
  const json m = io::read_file(path);
  const fs::path dir = path.parent_path().empty() ? fs::path(".") : path.parent_path();
  const std::string origin = manifest.generic_string();
  if (!m.is_object() || !m.contains("jobs") || !m["jobs"].is_array())
    fail(origin + ": expected {\"jobs\": [...]}");

  struct Job {
    std::string command;
    std::vector<std::string> args;
    std::string output;
    Options opt;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < m["jobs"].size(); ++i) {
    const json& j = m["jobs"][i];
    const std::string where = origin + ": job " + std::to_string(i);
    if (!j.is_object() || !j.contains("command") || !j["command"].is_string())
      fail(where + ": missing command");
    Job job;
    job.command = j["command"].get<std::string>();
    auto spec = command_specs().find(job.command);
    if (spec == command_specs().end()) fail(where + ": unknown command '" + job.command + "'");
    if (j.contains("args")) {
      if (!j["args"].is_array()) fail(where + ": args must be a list");
      for (const auto& a : j["args"]) {
        if (a.is_string()) job.args.push_back(a.get<std::string>());
        else if (a.is_number_integer()) job.args.push_back(std::to_string(a.get<long long>()));
        else fail(where + ": arguments must be strings or integers");
      }
    }
    if (job.args.size() != spec->second.arity)
      fail(where + ": " + job.command + " takes " + std::to_string(spec->second.arity) +
           " arguments");
    for (std::size_t k : spec->second.file_args) {
      const auto& a = job.args[k];
      if (a.starts_with("corpus:")) continue;
      if (!fs::exists(dir / a)) fail(where + ": missing file '" + a + "'");
    }
    if (j.contains("output")) {
      if (!j["output"].is_string()) fail(where + ": output must be a path");
      job.output = j["output"].get<std::string>();
    }
    job.opt = opt;
    job.opt.dir = dir;
    if (j.contains("oracle")) job.opt.oracle = j["oracle"].get<bool>();
    if (j.contains("skeleton")) job.opt.skeleton = j["skeleton"].get<int>();
    jobs.push_back(std::move(job));
  }

  Report r;
  json results = json::array();
  std::size_t passed = 0, failed = 0, errors = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& job = jobs[i];
    json entry = {{"command", job.command}, {"args", job.args}};
    std::string head = "[" + std::to_string(i) + "] " + job.command + " " +
                       join_strings(job.args, " ");
    try {
      Report sub = run_command(job.command, job.args, job.opt);
      const bool ok = sub.status == Status::ok;
      (ok ? passed : failed)++;
      entry["status"] = ok ? "pass" : "fail";
      entry["report"] = sub.data;
      if (!job.output.empty()) {
        io::write_file(dir / job.output, io::dump(sub.data));
        entry["output"] = job.output;
      }
      r.text += head + ": " + (ok ? "pass" : "FAIL") + "\n" + sub.text + "\n";
      if (!ok && r.status == Status::ok) r.status = Status::verification_failure;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::verification) {
        ++failed;
        entry["status"] = "fail";
        if (r.status == Status::ok) r.status = Status::verification_failure;
      } else {
        ++errors;
        entry["status"] = "error";
        r.status = Status::input_error;
      }
      entry["error"] = e.what();
      r.text += head + ": " + (e.kind() == ErrorKind::verification ? "FAIL" : "ERROR") + "\n" +
                e.what() + "\n\n";
    }
    results.push_back(entry);
  }
  r.text += std::to_string(jobs.size()) + " jobs: " + std::to_string(passed) + " passed, " +
            std::to_string(failed) + " failed, " + std::to_string(errors) + " errors\n";
  r.data = {{"manifest", origin},
            {"jobs", results},
            {"passed", passed},
            {"failed", failed},
            {"errors", errors},
            {"ok", failed == 0 && errors == 0}};
  return r;
}

int exit_code(Status s) { return static_cast<int>(s); }

}  // namespace pbundle::cli
