#include <iostream>

#include "CLI11.hpp"
#include "pbundle/cli.hpp"
#include "pbundle/error.hpp"

using namespace pbundle;

int main(int argc, char** argv) {
  CLI::App app{"Principal G-bundles over finite simplicial complexes"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string report_path;
  bool json_out = false;
  bool oracle = false;
  int skeleton = -1;
  app.add_option("--report", report_path, "Write the structured report to FILE");
  app.add_flag("--json", json_out, "Print the structured report instead of the table");

  std::vector<std::string> args(2);
  std::string export_dir;
  std::string command;
  std::size_t arity = 0;

  auto sub = [&](const char* name, const char* help, std::vector<const char*> params) {
    auto* s = app.add_subcommand(name, help);
    for (std::size_t i = 0; i < params.size(); ++i)
      s->add_option(params[i], args[i])->required();
    s->callback([&command, &arity, name, n = params.size()] {
      command = name;
      arity = n;
    });
    return s;
  };

  sub("classify", "Classify bundles: hom classes, cocycle classes, pullbacks", {"complex", "group"})
      ->add_flag("--oracle", oracle, "Brute-force gauge search instead of the tree method");
  sub("join", "Stage n of the Milnor join", {"group", "n"})
      ->add_option("--skeleton", skeleton, "Keep simplices up to this dimension");
  sub("bstage", "Classifying stage and counit", {"group", "n"})
      ->add_option("--skeleton", skeleton, "Keep cells up to this dimension");
  sub("pi1", "Edge-path group presentation", {"complex"});
  sub("holonomy", "Holonomy of a cocycle", {"cocycle"});
  sub("push", "Pushforward along a homomorphism", {"hom", "cocycle"});
  sub("pull", "Pullback along a simplicial map", {"map", "cocycle"});
  sub("equiv", "Gauge equivalence of two cocycles", {"cocycle1", "cocycle2"})
      ->add_flag("--oracle", oracle, "Brute-force gauge search instead of the tree method");
  sub("naturality", "Naturality checks for a map and a homomorphism", {"square"});
  sub("run", "Run a manifest of jobs", {"manifest"});
  sub("corpus", "List the built-in corpus", {})
      ->add_option("--export", export_dir, "Write the corpus as data files under DIR");

  CLI11_PARSE(app, argc, argv);

  cli::Options opt;
  opt.oracle = oracle;
  opt.skeleton = skeleton;
  try {
    opt.budget = SearchBudget::from_env();
    cli::Report r;
    if (command == "run") {
      r = cli::run_manifest(args[0], opt);
    } else if (command == "corpus") {
      r = cli::corpus(export_dir, opt);
    } else {
      args.resize(arity);
      r = cli::run_command(command, args, opt);
    }
    if (!report_path.empty()) io::write_file(report_path, io::dump(r.data));
    std::cout << (json_out ? io::dump(r.data) : r.text);
    return cli::exit_code(r.status);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::verification ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
