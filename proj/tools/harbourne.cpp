// harbourne: Harbourne constants, cover Chern numbers and Hirzebruch-type
// bounds for curve arrangements, in exact arithmetic.
//
// Exit codes: 0 success, 1 a check or bound failed (or was refused),
// 2 malformed input.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "render.hpp"

namespace {

using namespace harbourne;
using namespace harbourne::cli;

Format default_format() {
  if (const char* env = std::getenv("HARBOURNE_FORMAT")) {
    const std::string value(env);
    if (value == "json") return Format::json;
    if (value == "csv") return Format::csv;
  }
  return Format::table;
}

struct DocumentInput {
  std::string path;
  std::string catalog_name;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", path, "Arrangement document (JSON), '-' for stdin");
    cmd->add_option("--catalog", catalog_name, "Use a catalog entry instead of a file");
  }

  ArrangementDocument load() const { return load_document(path, catalog_name); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Harbourne constants, cover Chern numbers and Hirzebruch-type bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  bool as_csv = false;
  app.add_flag("--json", as_json, "JSON output");
  app.add_flag("--csv", as_csv, "CSV output");

  DocumentInput validate_in, hconst_in, chern_in, bounds_in;

  auto* validate = app.add_subcommand("validate", "Check the identities and hypotheses of a document");
  validate_in.attach(validate);

  auto* hconst = app.add_subcommand("hconst", "Harbourne constant, D~^2 and s");
  hconst_in.attach(hconst);

  auto* chern = app.add_subcommand("chern", "Normalized Chern numbers of the branched cover");
  chern_in.attach(chern);
  std::int64_t chern_n = 2;
  std::string chern_mode = "auto";
  bool unnormalized = false;
  chern->add_option("--n", chern_n, "Branching order")->check(CLI::Range(2, 1000));
  chern->add_option("--mode", chern_mode, "general | p2 | auto")->check(CLI::IsMember({"auto", "general", "p2"}));
  chern->add_flag("--unnormalized", unnormalized, "Also print the unnormalized values");

  auto* bounds = app.add_subcommand("bounds", "Evaluate bounds with exact slack");
  bounds_in.attach(bounds);
  std::vector<std::string> bound_names;
  bool all_bounds = false;
  bool formal = false;
  bounds->add_option("--name", bound_names, "Bound to evaluate (repeatable)")
      ->allow_extra_args(false);
  bounds->add_flag("--all", all_bounds, "Every applicable bound (the default)");
  bounds->add_flag("--formal", formal, "Evaluate even when hypotheses are not met");
  bounds->add_flag_callback(
      "--list", [] {
        for (const auto& entry : bound_registry()) std::cout << entry.name << '\n';
        std::exit(0);
      },
      "List bound names");

  auto* search = app.add_subcommand("search", "Minimize h over admissible multiplicity vectors");
  std::string d_text = "3";
  std::string tau_text = "4";
  std::vector<std::string> constraints;
  std::vector<std::string> caps;
  unsigned jobs = 1;
  std::uint64_t budget = 0;
  std::uint64_t enumerate = 0;
  search->add_option("--d", d_text, "Curve degree (>= 3)");
  search->add_option("--tau", tau_text, "Number of curves, N or A..B");
  search->add_option("--constraints", constraints, "hirzebruch, point-count (incidence and no-tau-fold always apply)")
      ->delimiter(',')
      ->allow_extra_args(false);
  search->add_option("--cap", caps, "Bound on t_r as r=lo:hi (either end optional; repeatable)")
      ->allow_extra_args(false);
  search->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  search->add_option("--budget", budget, "Node budget (0 = unlimited)");
  search->add_option("--enumerate", enumerate, "List up to this many admissible vectors instead");

  auto* geom = app.add_subcommand("geom", "Singular points and combinatorics of a rational line arrangement");
  std::string lines_path;
  geom->add_option("file", lines_path, "Lines file ('a b c' per row), '-' for stdin")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "Known arrangements");
  std::string catalog_name;
  bool list = false;
  catalog_cmd->add_option("name", catalog_name, "Entry name");
  catalog_cmd->add_flag("--list", list, "List all entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ExitCode::ok : ExitCode::input_error;
  }

  Format format = default_format();
  if (as_json) format = Format::json;
  if (as_csv) format = Format::csv;

  try {
    Outcome outcome;
    if (*validate) {
      outcome = cmd_validate(validate_in.load());
    } else if (*hconst) {
      outcome = cmd_hconst(hconst_in.load());
    } else if (*chern) {
      const ChernMode mode = chern_mode == "general" ? ChernMode::general
                             : chern_mode == "p2"    ? ChernMode::plane
                                                     : ChernMode::automatic;
      outcome = cmd_chern(chern_in.load(), chern_n, mode, unnormalized);
    } else if (*bounds) {
      if (all_bounds && !bound_names.empty()) throw InputError("--all and --name are exclusive");
      outcome = cmd_bounds(bounds_in.load(), bound_names, formal);
    } else if (*search) {
      SearchRequest req;
      req.d = parse_integer(d_text);
      std::tie(req.tau_min, req.tau_max) = parse_tau_range(tau_text);
      for (const auto& c : constraints) {
        if (c == "hirzebruch") {
          req.hirzebruch = true;
        } else if (c == "point-count") {
          req.point_count = true;
        } else if (c != "incidence" && c != "no-tau-fold") {
          throw InputError("unknown constraint '" + c + "' (known: incidence, no-tau-fold, hirzebruch, point-count)");
        }
      }
      for (const auto& cap : caps) {
        auto [r, range] = parse_cap(cap);
        req.caps[r] = range;
      }
      req.options.jobs = jobs;
      if (budget > 0) req.options.node_budget = budget;
      if (enumerate > 0) req.enumerate = enumerate;
      outcome = cmd_search(req);
    } else if (*geom) {
      outcome = cmd_geom(lines_path);
    } else if (*catalog_cmd) {
      if (list == !catalog_name.empty()) throw InputError("give either --list or an entry name");
      outcome = cmd_catalog(list ? std::nullopt : std::optional<std::string>(catalog_name));
    }
    for (const auto& w : outcome.warnings) std::cerr << "warning: " << w << '\n';
    write_output(std::cout, outcome.output, format);
    return outcome.exit_code;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitCode::input_error;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitCode::check_failed;
  }
}
