#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "esgames/workbench.hpp"

namespace wb = esgames::workbench;

namespace {

int emit(const wb::Outcome& o, const std::string& out_path = {}) {
  if (!o.err.empty()) std::cerr << o.err;
  if (out_path.empty() || o.code != wb::pass) {
    std::cout << o.out;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << out_path << "\n";
      return wb::input_error;
    }
    f << o.out;
  }
  return o.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for event structures, games with symmetry and uniform strategies"};
  app.require_subcommand(1);

  std::vector<std::string> paths;
  std::string kind_name, report = "text";
  auto* validate = app.add_subcommand("validate", "Run the validator suite on document bundles");
  validate->add_option("paths", paths, "Bundle files")->required()->check(CLI::ExistingFile);
  validate->add_option("--kind", kind_name, "Only documents of this kind");
  validate->add_option("--report", report, "Report format")->check(CLI::IsMember({"text", "json"}));

  wb::BuildArgs build_args;
  std::string build_out;
  auto* build = app.add_subcommand("build", "Apply a construction to documents of a bundle");
  build->add_option("construction", build_args.construction, "dual, par, bang, copycat, uniform-copycat, lift, colift or tcg")
      ->required()
      ->check(CLI::IsMember({"dual", "par", "bang", "copycat", "uniform-copycat", "lift", "colift", "tcg"}));
  build->add_option("--in", build_args.input, "Input bundle")->required()->check(CLI::ExistingFile);
  build->add_option("--ref", build_args.refs, "Input document id (twice for par)");
  build->add_option("--copies", build_args.copies, "Copies for bang")->check(CLI::PositiveNumber);
  build->add_option("--id", build_args.id, "Id of the built document");
  build->add_option("--out", build_out, "Output file (default stdout)");

  wb::SearchArgs search_args;
  std::uint64_t bound = 0;
  std::string search_out, certificate_path;
  auto* search = app.add_subcommand("search-uniform", "Search a uniform structure for a strategy");
  search->add_option("path", search_args.input, "Bundle file")->required()->check(CLI::ExistingFile);
  search->add_option("--ref", search_args.ref, "Strategy document id");
  auto* bound_opt = search->add_option("--bound", bound, "Largest search size to attempt");
  search->add_option("--certificate", certificate_path, "Also write the search certificate here");
  search->add_option("--out", search_out, "Output file (default stdout)");

  std::string dot_path, dot_ref, view = "causality";
  auto* dot = app.add_subcommand("export-dot", "Print a Graphviz rendering of a document");
  dot->add_option("path", dot_path, "Bundle file")->required()->check(CLI::ExistingFile);
  dot->add_option("--ref", dot_ref, "Document id (default the last one)");
  dot->add_option("--view", view, "What to draw")->check(CLI::IsMember({"causality", "conflict", "family"}));

  std::string catalog_dir = "data/fixtures";
  auto* catalog = app.add_subcommand("catalog", "Write the fixture catalog");
  catalog->add_option("--out-dir", catalog_dir, "Target directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : wb::input_error;
  }

  if (*validate) {
    std::optional<esgames::DocKind> kind;
    if (!kind_name.empty()) {
      kind = esgames::parse_kind(kind_name);
      if (!kind) {
        std::cerr << "unknown kind '" << kind_name << "'\n";
        return wb::input_error;
      }
    }
    return emit(wb::validate(paths, kind, report == "json" ? wb::ReportFormat::json : wb::ReportFormat::text));
  }
  if (*build) return emit(wb::build(build_args), build_out);
  if (*search) {
    if (*bound_opt) search_args.bound = bound;
    const wb::SearchOutcome o = wb::search_uniform(search_args);
    if (o.code == wb::pass && !certificate_path.empty()) {
      std::ofstream f(certificate_path, std::ios::binary);
      f << o.certificate;
    }
    return emit(o, search_out);
  }
  if (*dot) return emit(wb::export_dot(dot_path, dot_ref, *esgames::parse_view(view)));
  if (*catalog) return emit(wb::write_catalog(catalog_dir));
  return wb::input_error;
}
