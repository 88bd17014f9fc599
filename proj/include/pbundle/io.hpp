#pragma once

// JSON file formats.
//
// A reference to a complex or group is either a path (relative to the file
// that mentions it), "corpus:NAME", or an inline object.
//
//   complex   {"vertices": ["a", ...], "facets": [["a", "b"], ...], "basepoint": "a"}
//   group     {"name": "Z2", "table": {"elements": ["0", "1"], "mul": [[0, 1], [1, 0]]}}
//             {"name": "S3", "permutations": [[1, 0, 2], [1, 2, 0]]}
//   presented {"generators": ["a", "b"], "relators": ["a b A B"]}
//   cocycle   {"complex": REF, "group": REF, "values": [["u", "v", "g"], ...]}
//   hom       {"source": REF, "target": REF, "images": {"g": "h", ...}}
//   map       {"source": REF, "target": REF, "vertices": {"u": "v", ...}}
//   square    {"map": REF, "hom": REF, "stage": 2}
//   manifest  {"jobs": [{"command": "classify", "args": [...], "output": "out.json"}]}
//
// Group elements in cocycles and homs may be given by name or by index.
// Hom images on a generating set are extended to the whole group.

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "pbundle/bundle.hpp"
#include "pbundle/complex.hpp"
#include "pbundle/group.hpp"

namespace pbundle::io {

using nlohmann::json;

/// Throws invalid_input with "origin:line:column: message" on bad syntax.
json parse(std::string_view text, const std::string& origin);
json read_file(const std::filesystem::path& path);
/// Two-space indented dump with sorted keys and a trailing newline.
std::string dump(const json& j);
void write_file(const std::filesystem::path& path, const std::string& text);

SimplicialComplex complex_from_json(const json& j);
json complex_to_json(const SimplicialComplex& k);

FiniteGroup group_from_json(const json& j);
/// Table form.
json group_to_json(const FiniteGroup& g);

FinitelyPresentedGroup presented_from_json(const json& j);
json presented_to_json(const FinitelyPresentedGroup& p);

/// Resolves references relative to a directory and caches loaded files.
class Loader {
public:
  explicit Loader(std::filesystem::path base_dir = ".");

  ComplexPtr complex(const json& ref);
  GroupPtr group(const json& ref);
  /// The cocycle lives on the Δ-form of its complex.
  Cocycle cocycle(const json& ref);
  FiniteHom hom(const json& ref);
  SimplicialMap map(const json& ref);

  /// Command-line argument: "corpus:NAME" or a path.
  static json ref(const std::string& arg) { return json(arg); }

private:
  json resolve(const json& ref, std::filesystem::path& dir);
  Elem element(const FiniteGroup& g, const json& j);

  std::filesystem::path base_;
};

json cocycle_to_json(const Cocycle& c, const json& complex_ref, const json& group_ref);

}  // namespace pbundle::io
