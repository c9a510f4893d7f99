#include "modal/cli.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "modal/catalog.hpp"
#include "modal/cube_report.hpp"
#include "modal/formula.hpp"
#include "modal/kripke.hpp"
#include "modal/search.hpp"
#include "modal/semantics.hpp"

namespace modal {

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

// ---------------------------------------------------------------------------
// Option plumbing
// ---------------------------------------------------------------------------

struct BudgetOptions {
  int max_worlds = 4;
  bool prune_iso = false;
  int threads = 0;  // 0 = number of hardware threads
};

void add_budget_options(CLI::App* cmd, BudgetOptions* opts) {
  cmd->add_option("--max-worlds", opts->max_worlds,
                  "Largest frame size to search (default 4)");
  cmd->add_flag("--prune-iso", opts->prune_iso,
                "Search only canonical representatives of isomorphism classes");
  cmd->add_option("--threads", opts->threads,
                  "Worker threads for the frame scan (0 = all hardware threads)");
}

SearchBudget make_budget(const BudgetOptions& opts, std::ostream& err) {
  SearchBudget budget;
  budget.max_worlds = opts.max_worlds;
  budget.use_canonical_pruning = opts.prune_iso;
  budget.parallelism_hint =
      opts.threads > 0
          ? opts.threads
          : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  budget.validate();
  if (budget.max_worlds == 5 && !budget.use_canonical_pruning)
    err << "warning: a 5-world bound enumerates 33554432 relations per claim\n";
  return budget;
}

// ---------------------------------------------------------------------------
// Input helpers
// ---------------------------------------------------------------------------

Frame load_frame(const std::string& source, std::istream& in) {
  std::ostringstream text;
  if (source == "-") {
    text << in.rdbuf();
  } else {
    std::ifstream file(source);
    if (!file) throw std::invalid_argument("cannot open frame file '" + source + "'");
    text << file.rdbuf();
  }
  return frame_parse(text.str());
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path);
  if (!file) throw std::invalid_argument("cannot write file '" + path + "'");
  file << content;
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

std::string valuation_text(const Valuation& valuation) {
  if (valuation.assignments().empty()) return "the empty valuation";
  std::string out;
  for (const auto& [name, worlds] : valuation.assignments()) {
    if (!out.empty()) out += ", ";
    out += name + "=" + world_set_to_string(worlds);
  }
  return out;
}

std::string witness_text(const Witness& witness) {
  std::string out = frame_print(witness.frame);
  out += "\nfailed condition: ";
  out += condition_name(witness.failed_condition);
  if (witness.failing_instance) {
    out += "\naxiom ";
    out += axiom_name(witness.failing_instance->axiom);
    out += " fails at world " + world_name(witness.failing_instance->world) + " under " +
           valuation_text(witness.failing_instance->valuation);
  }
  return out;
}

std::string report_text(const VerificationReport& report) {
  if (report.result == Outcome::Holds)
    return "holds: " + report.claim + " (" + std::to_string(report.frames_checked) +
           " frames)";
  return "refuted: " + report.claim + "\n" + witness_text(*report.witness);
}

std::string edge_text(const EdgeResult& edge) {
  std::string out = edge.id + " " + edge.stronger + " > " + edge.weaker + ": ";
  if (!edge.witness) {
    out += "no witness within bound (paper " + std::to_string(edge.paper_expected_size) +
           ") -- MISMATCH";
    return out;
  }
  out += "witness size " + std::to_string(edge.witness_size) + " (paper " +
         std::to_string(edge.paper_expected_size) + ")";
  if (edge.witness_size > 1) {
    out += ", minimal at " + std::to_string(edge.minimality_verified_at) + ": " +
           (edge.minimality_holds ? "holds" : "FAILS");
  } else {
    out += ", minimal trivially";
  }
  out += edge.match ? " -- match" : " -- MISMATCH";
  if (edge.canonical) {
    out += "; canonical sets " + edge.canonical->antecedent.to_string() + " => " +
           edge.canonical->consequent.to_string() + " give size " +
           (edge.canonical->witness_size > 0 ? std::to_string(edge.canonical->witness_size)
                                             : std::string("none"));
  }
  return out;
}

void print_cube_text(const CubeReport& report, std::ostream& out) {
  for (size_t i = 0; i < report.correspondences.size(); ++i) {
    out << correspondence_id(static_cast<Condition>(i)) << " "
        << report_text(report.correspondences[i]) << "\n";
  }
  const std::vector<EquivalenceFact>& facts = equivalence_table();
  for (size_t i = 0; i < report.equivalences.size(); ++i)
    out << facts[i].id << " " << report_text(report.equivalences[i]) << "\n";
  int matches = 0;
  for (const EdgeResult& edge : report.edges) {
    out << edge_text(edge) << "\n";
    if (!edge.match || !edge.minimality_holds)
      if (edge.witness) out << witness_text(*edge.witness) << "\n";
    if (edge.match) ++matches;
  }
  out << "cube: " << (report.green ? "GREEN" : "RED") << " (bound " << report.bound
      << ", " << matches << "/" << report.edges.size() << " edges match)\n";
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int cmd_check_frame(const std::string& frame_source, const std::string& conditions_csv,
                    std::istream& in, std::ostream& out) {
  const Frame frame = load_frame(frame_source, in);
  const ConditionSet conditions = condition_set_from_names(conditions_csv);
  bool all_hold = true;
  for (Condition c : conditions.items()) {
    const bool holds = check_condition(frame, 0, c);
    out << condition_name(c) << ": " << (holds ? "true" : "false") << "\n";
    all_hold = all_hold && holds;
  }
  return all_hold ? kExitHolds : kExitRefuted;
}

int cmd_valid(const std::string& frame_source, const std::string& formula_text,
              bool json, std::istream& in, std::ostream& out) {
  const Frame frame = load_frame(frame_source, in);
  const Formula formula = formula_parse(formula_text);
  const std::optional<EvalFailure> failure = frame_find_failure(frame, formula);

  if (json) {
    nlohmann::json doc;
    doc["result"] = failure ? "invalid" : "valid";
    if (failure) {
      nlohmann::json valuation = nlohmann::json::object();
      for (const auto& [name, worlds] : failure->valuation.assignments()) {
        nlohmann::json names = nlohmann::json::array();
        Word bits = worlds;
        while (bits) {
          const int w = std::countr_zero(bits);
          bits &= bits - 1;
          names.push_back(world_name(w));
        }
        valuation[name] = names;
      }
      doc["witness"] = nlohmann::json{{"world", world_name(failure->world)},
                                      {"valuation", valuation}};
    } else {
      doc["witness"] = nullptr;
    }
    out << doc.dump(2) << "\n";
  } else if (failure) {
    out << "INVALID at world " << world_name(failure->world) << " under "
        << valuation_text(failure->valuation) << "\n";
  } else {
    out << "VALID\n";
  }
  return failure ? kExitRefuted : kExitHolds;
}

int cmd_cube(const SearchBudget& budget, bool json, const std::string& out_file,
             const std::string& dot_file, std::ostream& out) {
  const CubeReport report = run_cube(budget);
  if (!out_file.empty()) write_file(out_file, cube_report_json(report).dump(2) + "\n");
  if (!dot_file.empty()) write_file(dot_file, cube_report_dot(report));
  if (json)
    out << cube_report_json(report).dump(2) << "\n";
  else
    print_cube_text(report, out);
  return report.green ? kExitHolds : kExitRefuted;
}

int cmd_witness(const std::string& holds_csv, const std::string& fails_csv,
                const SearchBudget& budget, bool json, std::ostream& out) {
  const ConditionSet antecedent = condition_set_from_names(holds_csv);
  const ConditionSet consequent = condition_set_from_names(fails_csv);
  const std::optional<Witness> witness = find_countermodel(antecedent, consequent, budget);

  if (json) {
    nlohmann::json doc{{"bound", budget.max_worlds}, {"found", witness.has_value()}};
    doc["witness"] = witness ? witness_json(*witness) : nlohmann::json();
    out << doc.dump(2) << "\n";
  } else if (witness) {
    out << "witness: " << witness->frame.n_worlds() << " worlds\n"
        << witness_text(*witness) << "\n";
  } else {
    out << "no witness within bound " << budget.max_worlds << "\n";
  }
  return witness ? kExitHolds : kExitRefuted;
}

int cmd_correspond(const std::string& axiom_label, const SearchBudget& budget, bool json,
                   std::ostream& out) {
  const std::optional<Axiom> axiom = axiom_from_name(axiom_label);
  if (!axiom)
    throw std::invalid_argument("unknown axiom '" + axiom_label +
                                "' (expected M, B, D, 4 or 5)");
  const Condition condition = axiom_condition(*axiom);
  const VerificationReport report = verify_correspondence(condition, *axiom, budget);

  if (json) {
    nlohmann::json doc = report_json(report, correspondence_id(condition));
    doc["elapsed_ms"] = report.elapsed.count();
    out << doc.dump(2) << "\n";
  } else {
    out << report_text(report) << "\n";
  }
  return report.result == Outcome::Holds ? kExitHolds : kExitRefuted;
}

int cmd_equiv(const std::string& left_csv, const std::string& right_csv,
              const SearchBudget& budget, bool json, std::ostream& out) {
  const ConditionSet left = condition_set_from_names(left_csv);
  const ConditionSet right = condition_set_from_names(right_csv);
  const VerificationReport report = verify_equivalence(left, right, budget);

  // Reuse the catalog id when the pair is one of the known facts.
  std::string id;
  for (const EquivalenceFact& fact : equivalence_table())
    if ((fact.left == left && fact.right == right) ||
        (fact.left == right && fact.right == left))
      id = fact.id;

  if (json) {
    nlohmann::json doc = report_json(report, id);
    if (id.empty()) doc.erase("id");
    doc["elapsed_ms"] = report.elapsed.count();
    out << doc.dump(2) << "\n";
  } else {
    out << report_text(report) << "\n";
  }
  return report.result == Outcome::Holds ? kExitHolds : kExitRefuted;
}

int cmd_catalog(const std::string& out_file, std::ostream& out) {
  const std::string text = catalog_json().dump(2) + "\n";
  if (out_file.empty())
    out << text;
  else
    write_file(out_file, text);
  return kExitHolds;
}

}  // namespace

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Kripke frame toolkit: checks frame conditions and modal validity, "
               "and re-derives the modal logic cube by bounded countermodel search"};
  app.require_subcommand(1);

  std::string frame_source;
  std::string formula_text;
  std::string conditions_csv;
  std::string holds_csv;
  std::string fails_csv;
  std::string left_csv;
  std::string right_csv;
  std::string axiom_label;
  std::string out_file;
  std::string dot_file;
  bool json = false;
  BudgetOptions budget_opts;

  CLI::App* check_frame = app.add_subcommand(
      "check-frame", "Check frame conditions on a frame (relation 0)");
  check_frame->add_option("--frame", frame_source, "Frame file, or - for stdin")
      ->required();
  check_frame
      ->add_option("conditions", conditions_csv,
                   "Comma-separated conditions: refl,sym,ser,trans,eucl")
      ->required();

  CLI::App* valid = app.add_subcommand(
      "valid", "Decide frame validity of a formula (all valuations, all worlds)");
  valid->add_option("--frame", frame_source, "Frame file, or - for stdin")->required();
  valid->add_option("--formula", formula_text, "Formula, e.g. '[]p -> p'")->required();
  valid->add_flag("--json", json, "Emit JSON");

  CLI::App* cube = app.add_subcommand(
      "cube", "Re-derive the modal cube: correspondences, equivalences, all "
              "25 inclusion edges with minimal countermodels");
  add_budget_options(cube, &budget_opts);
  cube->add_flag("--json", json, "Emit the full report as JSON");
  cube->add_option("--out", out_file, "Also write the JSON report to a file");
  cube->add_option("--dot", dot_file, "Also write the cube as a Graphviz digraph");

  CLI::App* witness = app.add_subcommand(
      "witness", "Find the least frame satisfying one condition set but not another");
  witness->add_option("--holds", holds_csv, "Conditions the frame must satisfy")
      ->required();
  witness->add_option("--fails", fails_csv, "Conditions the frame must violate (one of)")
      ->required();
  add_budget_options(witness, &budget_opts);
  witness->add_flag("--json", json, "Emit JSON");

  CLI::App* correspond = app.add_subcommand(
      "correspond", "Check one condition/axiom correspondence on all frames in bound");
  correspond->add_option("--axiom", axiom_label, "Axiom tag: M, B, D, 4 or 5")
      ->required();
  add_budget_options(correspond, &budget_opts);
  correspond->add_flag("--json", json, "Emit JSON");

  CLI::App* equiv = app.add_subcommand(
      "equiv", "Check two condition sets pick out the same frames in bound");
  equiv->add_option("--left", left_csv, "Left condition set")->required();
  equiv->add_option("--right", right_csv, "Right condition set")->required();
  add_budget_options(equiv, &budget_opts);
  equiv->add_flag("--json", json, "Emit JSON");

  CLI::App* catalog = app.add_subcommand(
      "catalog", "Export the logic/equivalence/edge catalog as JSON");
  catalog->add_option("--out", out_file, "Write to a file instead of stdout");

  // CLI11 wants argv-style input.
  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("modalcube");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_store.size());
  for (const std::string& arg : argv_store) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(check_frame))
      return cmd_check_frame(frame_source, conditions_csv, in, out);
    if (app.got_subcommand(valid))
      return cmd_valid(frame_source, formula_text, json, in, out);
    if (app.got_subcommand(cube))
      return cmd_cube(make_budget(budget_opts, err), json, out_file, dot_file, out);
    if (app.got_subcommand(witness))
      return cmd_witness(holds_csv, fails_csv, make_budget(budget_opts, err), json, out);
    if (app.got_subcommand(correspond))
      return cmd_correspond(axiom_label, make_budget(budget_opts, err), json, out);
    if (app.got_subcommand(equiv))
      return cmd_equiv(left_csv, right_csv, make_budget(budget_opts, err), json, out);
    if (app.got_subcommand(catalog)) return cmd_catalog(out_file, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace modal
