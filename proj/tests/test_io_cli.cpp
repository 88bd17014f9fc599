#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "pbundle/classifying.hpp"
#include "pbundle/cli.hpp"
#include "pbundle/corpus.hpp"
#include "pbundle/error.hpp"
#include "pbundle/io.hpp"

using namespace pbundle;
namespace fs = std::filesystem;
using io::json;

namespace {

const fs::path source_dir = PBUNDLE_SOURCE_DIR;
const fs::path data_dir = source_dir / "data";

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

/// A fresh copy of data/ under the build tree.
fs::path scratch(const std::string& name) {
  const fs::path dir = fs::path(PBUNDLE_WORK_DIR) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  fs::copy(data_dir, dir / "data", fs::copy_options::recursive);
  return dir / "data";
}

cli::Options options_in(const fs::path& dir) {
  cli::Options o;
  o.dir = dir;
  o.budget = SearchBudget(1'000'000'000);
  return o;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::invalid_input;
}

}  // namespace

TEST_CASE("shipped complexes and groups round-trip byte for byte") {
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(data_dir / "corpus" / "complexes")) {
    const auto text = slurp(entry.path());
    const auto k = io::complex_from_json(io::parse(text, entry.path().string()));
    CHECK(io::dump(io::complex_to_json(k)) == text);
    CHECK(k == *corpus::complex(entry.path().stem().string()));
    ++files;
  }
  for (const auto& entry : fs::directory_iterator(data_dir / "corpus" / "groups")) {
    const auto text = slurp(entry.path());
    const auto g = io::group_from_json(io::parse(text, entry.path().string()));
    CHECK(io::dump(io::group_to_json(g)) == text);
    CHECK(g == *corpus::group(entry.path().stem().string()));
    ++files;
  }
  CHECK(files == corpus::complex_names().size() + corpus::group_names().size());
}

TEST_CASE("corpus export matches the shipped copy") {
  const fs::path out = fs::path(PBUNDLE_WORK_DIR) / "export";
  fs::remove_all(out);
  cli::Options o;
  auto r = cli::corpus(out.string(), o);
  CHECK(r.status == cli::Status::ok);
  std::size_t files = 0;
  for (const auto& entry : fs::recursive_directory_iterator(out)) {
    if (!entry.is_regular_file()) continue;
    const auto rel = fs::relative(entry.path(), out);
    CAPTURE(rel.string());
    CHECK(slurp(entry.path()) == slurp(data_dir / "corpus" / rel));
    ++files;
  }
  CHECK(files == corpus::complex_names().size() + corpus::group_names().size() +
                     corpus::maps().size() + corpus::homs().size());
}

TEST_CASE("loader reads every shipped map and hom") {
  io::Loader load(data_dir / "corpus");
  for (const auto& m : corpus::maps()) {
    auto f = load.map(json("maps/" + m.name + ".map"));
    CHECK(f.image() == m.map.image());
    CHECK(*f.source() == *m.map.source());
    CHECK(*f.target() == *m.map.target());
  }
  for (const auto& h : corpus::homs()) {
    auto a = load.hom(json("homs/" + h.name + ".hom"));
    CHECK(a.table() == h.hom.table());
    CHECK(load.hom(json("corpus:" + h.name)).table() == h.hom.table());
  }
}

TEST_CASE("example files") {
  io::Loader load(data_dir / "examples");
  CHECK(*load.group(json("s3.grp")) == *corpus::group("S3"));
  CHECK(load.group(json("z2.grp"))->order() == 2);
  auto c = load.cocycle(json("circle_z2.coc"));
  auto gauged = load.cocycle(json("circle_z2_gauged.coc"));
  auto trivial = load.cocycle(json("circle_z2_trivial.coc"));
  CHECK(gauge_equivalent(c, gauged));
  CHECK_FALSE(gauge_equivalent(c, trivial));
  auto a = load.hom(json("z2_to_z4.hom"));
  CHECK(a.table() == std::vector<Elem>{0, 2});

  const auto text = io::dump(io::cocycle_to_json(c, "circle.cx", "z2.grp"));
  const fs::path tmp = fs::path(PBUNDLE_WORK_DIR) / "roundtrip" / "c.coc";
  io::write_file(tmp, text);
  fs::copy_file(data_dir / "examples" / "circle.cx", tmp.parent_path() / "circle.cx",
                fs::copy_options::overwrite_existing);
  fs::copy_file(data_dir / "examples" / "z2.grp", tmp.parent_path() / "z2.grp",
                fs::copy_options::overwrite_existing);
  io::Loader again(tmp.parent_path());
  CHECK(again.cocycle(json("c.coc")) == c);

  json inline_ref = {{"vertices", {"x", "y"}},
                     {"facets", json::array({json::array({"x", "y"})})},
                     {"basepoint", "y"}};
  auto k = load.complex(inline_ref);
  CHECK(k->vertex_count() == 2);
  CHECK(k->basepoint() == Vertex{1});
}

TEST_CASE("input errors") {
  try {
    io::parse(slurp(source_dir / "tests" / "data" / "bad_syntax.json"), "bad_syntax.json");
    FAIL("parsed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_input);
    CHECK(std::string(e.what()).rfind("bad_syntax.json:4:5:", 0) == 0);
  }
  io::Loader load(source_dir / "tests" / "data");
  CHECK(kind_of([&] { load.complex(json("nowhere.cx")); }) == ErrorKind::invalid_input);
  CHECK(kind_of([&] { load.complex(json("bad_facet.cx")); }) == ErrorKind::invalid_input);
  CHECK(kind_of([&] { load.cocycle(json("bad_triangle.coc")); }) == ErrorKind::invalid_input);
  CHECK(kind_of([&] { load.group(json("corpus:Z7")); }) == ErrorKind::invalid_input);
  cli::Options o;
  o.dir = source_dir / "tests" / "data";
  for (const auto& name : {"missing_file.json", "unknown_command.json"})
    CHECK(kind_of([&] { cli::run_manifest(name, o); }) == ErrorKind::invalid_input);
  CHECK(kind_of([&] { cli::run_command("classify", {"corpus:circle"}, o); }) ==
        ErrorKind::invalid_input);
}

TEST_CASE("a small budget stops the search with search_cap") {
  cli::Options o;
  o.budget = SearchBudget(1000);
  CHECK(kind_of([&] { cli::classify("corpus:torus", "corpus:S3", o); }) == ErrorKind::search_cap);
  // the default cap is below what torus x S3 needs
  cli::Options d;
  d.budget = SearchBudget();
  CHECK(kind_of([&] { cli::classify("corpus:torus", "corpus:S3", d); }) == ErrorKind::search_cap);
  auto m = cli::run_manifest(source_dir / "tests" / "data" / "cap_manifest.json", o);
  CHECK(m.status == cli::Status::input_error);
  CHECK(m.data["errors"] == 1);
}

TEST_CASE("exit codes") {
  CHECK(cli::exit_code(cli::Status::ok) == 0);
  CHECK(cli::exit_code(cli::Status::input_error) == 1);
  CHECK(cli::exit_code(cli::Status::verification_failure) == 2);
}

TEST_CASE("the classify manifest reproduces the library classification") {
  const auto dir = scratch("classify_circle");
  auto o = options_in(dir);
  auto r = cli::run_manifest(dir / "manifests" / "classify_circle.json", o);
  CHECK(r.status == cli::Status::ok);
  const auto out = io::read_file(dir / "manifests" / "out" / "classify_circle.json");
  CHECK(out["verified"] == true);
  REQUIRE(out["classes"].size() == 2);

  io::Loader load(dir / "examples");
  auto cls = classify_bundles(load.complex(json("circle.cx")), load.group(json("z2.grp")), {},
                              o.budget);
  REQUIRE(cls.rows.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& row = cls.rows[i];
    const auto& j = out["classes"][i];
    CHECK(j["class_size"] == row.class_size);
    CHECK(j["holonomy"]["g0"] == cls.group->element_name(row.hom.images()[0]));
    CHECK(j["cocycle"].size() == row.cocycle.values().size());
  }
  CHECK(out["oracle"]["classes"] == cls.oracle_classes);
}

TEST_CASE("manifest runs are reproducible") {
  const auto dir = scratch("all_commands");
  auto o = options_in(dir);
  auto first = cli::run_manifest(dir / "manifests" / "all_commands.json", o);
  CHECK(first.status == cli::Status::ok);
  std::map<std::string, std::string> outputs;
  for (const auto& entry : fs::directory_iterator(dir / "manifests" / "out"))
    outputs[entry.path().filename().string()] = slurp(entry.path());
  std::size_t with_output = 0;
  for (const auto& job : first.data["jobs"]) with_output += job.contains("output");
  CHECK(outputs.size() == with_output);
  auto second = cli::run_manifest(dir / "manifests" / "all_commands.json", o);
  CHECK(io::dump(first.data) == io::dump(second.data));
  CHECK(first.text == second.text);
  for (const auto& [name, text] : outputs) {
    CAPTURE(name);
    CHECK(slurp(dir / "manifests" / "out" / name) == text);
  }
}

TEST_CASE("the shipped manifests cover every subcommand") {
  std::set<std::string> seen;
  for (const auto& entry : fs::directory_iterator(data_dir / "manifests")) {
    if (entry.path().extension() != ".json") continue;
    const auto manifest = io::read_file(entry.path());
    for (const auto& job : manifest["jobs"]) seen.insert(job["command"].get<std::string>());
  }
  const std::set<std::string> all = {"classify", "join", "bstage", "pi1", "holonomy",
                                     "push", "pull", "equiv", "naturality", "corpus"};
  for (const auto& c : all) {
    CAPTURE(c);
    CHECK(seen.count(c) == 1);
  }
  CHECK(seen.size() == all.size());

  cli::Options o;
  o.dir = data_dir / "manifests";
  auto empty = cli::run_manifest("empty.json", o);
  CHECK(empty.status == cli::Status::ok);
  CHECK(empty.data["jobs"].empty());
}

TEST_CASE("subcommand statuses") {
  cli::Options o;
  o.dir = data_dir / "examples";
  CHECK(cli::bstage("corpus:Z2", 1, o).status == cli::Status::verification_failure);
  CHECK(cli::bstage("corpus:S3", 2, o).status == cli::Status::ok);
  auto eq = cli::equiv("circle_z2.coc", "circle_z2_gauged.coc", o);
  CHECK(eq.status == cli::Status::ok);
  CHECK(eq.data["equivalent"] == true);
  auto ne = cli::equiv("circle_z2.coc", "circle_z2_trivial.coc", o);
  CHECK(ne.status == cli::Status::ok);
  CHECK(ne.data["equivalent"] == false);
  auto push = cli::push("z2_to_z4.hom", "corpus_circle_z2.coc", o);
  CHECK(push.data["holonomy_check"] == true);
  auto nat = cli::naturality("wrap_z2_z4.sq", o);
  CHECK(nat.status == cli::Status::ok);
  CHECK(nat.data["ok"] == true);
  auto join = cli::join("corpus:Z3", 2, o);
  CHECK(join.data["counts_match"] == true);
  auto pi = cli::pi1("corpus:rp2", o);
  CHECK(pi.data["edge_path_group"]["order"] == 2);
}
