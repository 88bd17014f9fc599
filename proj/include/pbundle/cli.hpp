#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pbundle/io.hpp"
#include "pbundle/search_budget.hpp"

namespace pbundle::cli {

enum class Status { ok = 0, input_error = 1, verification_failure = 2 };

/// Output of one subcommand: a human-readable table and the structured
/// report. Neither contains timings or absolute paths.
struct Report {
  std::string text;
  io::json data;
  Status status = Status::ok;
};

struct Options {
  /// Directory that relative file arguments are resolved against.
  std::filesystem::path dir = ".";
  SearchBudget budget = SearchBudget::from_env();
  /// Brute-force gauge search instead of the tree method.
  bool oracle = false;
  /// Skeleton cut for join and bstage; -1 keeps every dimension.
  int skeleton = -1;
};

Report classify(const std::string& complex, const std::string& group, const Options& opt);
Report join(const std::string& group, int n, const Options& opt);
Report bstage(const std::string& group, int n, const Options& opt);
Report pi1(const std::string& complex, const Options& opt);
Report holonomy(const std::string& cocycle, const Options& opt);
Report push(const std::string& hom, const std::string& cocycle, const Options& opt);
Report pull(const std::string& map, const std::string& cocycle, const Options& opt);
Report equiv(const std::string& c1, const std::string& c2, const Options& opt);
Report naturality(const std::string& square, const Options& opt);
Report corpus(const std::string& export_dir, const Options& opt);

/// Dispatch by name; `args` are the positional arguments of the subcommand.
Report run_command(const std::string& command, const std::vector<std::string>& args,
                   const Options& opt);

/// Runs every job of a manifest in order. Missing input files, unknown
/// commands and wrong arities are reported before any job runs. Job outputs
/// are written relative to the manifest's directory.
Report run_manifest(const std::filesystem::path& manifest, const Options& opt);

/// Input errors and search-cap errors are 1, verification failures 2.
int exit_code(Status s);

}  // namespace pbundle::cli
