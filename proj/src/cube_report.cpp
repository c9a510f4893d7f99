#include "modal/cube_report.hpp"

#include <bit>
#include <stdexcept>

namespace modal {

std::string correspondence_id(Condition c) {
  return "A" + std::to_string(static_cast<int>(c) + 1);
}

CubeReport run_cube(const SearchBudget& budget) {
  budget.validate();
  const auto start = std::chrono::steady_clock::now();

  CubeReport report;
  report.bound = budget.max_worlds;
  report.pruned = budget.use_canonical_pruning;

  // A1..A5: each frame condition matches validity of its axiom schema.
  for (int i = 0; i < kConditionCount; ++i) {
    const auto c = static_cast<Condition>(i);
    report.correspondences.push_back(verify_correspondence(c, condition_axiom(c), budget));
  }

  // B1..B9: the alternative axiomatizations pick out the same frames.
  for (const EquivalenceFact& fact : equivalence_table())
    report.equivalences.push_back(verify_equivalence(fact.left, fact.right, budget));

  // C1..C25: find each countermodel, check no smaller one exists, compare
  // against the published size.
  for (const InclusionEdge& edge : edge_table()) {
    EdgeResult result;
    result.id = edge.id;
    result.stronger = edge.stronger;
    result.weaker = edge.weaker;
    result.antecedent = edge.antecedent;
    result.consequent = edge.consequent;
    result.paper_expected_size = edge.paper_witness_size;
    result.conds_match_canonical = edge.conds_match_canonical();

    result.witness = find_countermodel(edge.antecedent, edge.consequent, budget);
    if (result.witness) {
      result.witness_size = result.witness->frame.n_worlds();
      if (result.witness_size > 1) {
        const VerificationReport minimality = verify_minimality(
            edge.antecedent, edge.consequent, result.witness_size - 1, budget);
        result.minimality_verified_at = result.witness_size - 1;
        result.minimality_holds = minimality.result == Outcome::Holds;
      } else {
        // A one-world witness has no smaller frame to rule out.
        result.minimality_holds = true;
      }
    }
    result.match = result.witness && result.witness_size == edge.paper_witness_size;

    if (!result.conds_match_canonical) {
      EdgeResult::CanonicalRun canonical;
      canonical.antecedent = edge.canonical_antecedent();
      canonical.consequent = edge.canonical_consequent();
      const auto witness =
          find_countermodel(canonical.antecedent, canonical.consequent, budget);
      canonical.witness_size = witness ? witness->frame.n_worlds() : 0;
      result.canonical = canonical;
    }

    report.edges.push_back(std::move(result));
  }

  report.green = true;
  for (const VerificationReport& r : report.correspondences)
    if (r.result != Outcome::Holds) report.green = false;
  for (const VerificationReport& r : report.equivalences)
    if (r.result != Outcome::Holds) report.green = false;
  for (const EdgeResult& e : report.edges)
    if (!e.match || !e.minimality_holds) report.green = false;

  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

// ===========================================================================
// JSON
// ===========================================================================

namespace {

nlohmann::json condition_set_json(const ConditionSet& set) {
  nlohmann::json out = nlohmann::json::array();
  for (Condition c : set.items()) out.push_back(condition_name(c));
  return out;
}

nlohmann::json valuation_json(const Valuation& valuation) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [name, worlds] : valuation.assignments()) {
    nlohmann::json world_names = nlohmann::json::array();
    Word bits = worlds;
    while (bits) {
      const int w = std::countr_zero(bits);
      bits &= bits - 1;
      world_names.push_back(world_name(w));
    }
    out[name] = world_names;
  }
  return out;
}

}  // namespace

nlohmann::json witness_json(const Witness& witness) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [s, t] : witness.frame.relation(0).edges())
    edges.push_back(nlohmann::json::array({s + 1, t + 1}));

  nlohmann::json out{
      {"n_worlds", witness.frame.n_worlds()},
      {"frame_text", frame_print(witness.frame)},
      {"edges", edges},
      {"failed_condition", condition_name(witness.failed_condition)},
  };
  if (witness.failing_instance) {
    out["failing_instance"] =
        nlohmann::json{{"axiom", axiom_name(witness.failing_instance->axiom)},
                       {"valuation", valuation_json(witness.failing_instance->valuation)},
                       {"world", world_name(witness.failing_instance->world)}};
  } else {
    out["failing_instance"] = nullptr;
  }
  return out;
}

nlohmann::json report_json(const VerificationReport& report, const std::string& id) {
  nlohmann::json out{
      {"id", id},
      {"claim", report.claim},
      {"bound", report.bound},
      {"frames_checked", report.frames_checked},
      {"result", report.result == Outcome::Holds ? "holds" : "refuted"},
  };
  out["witness"] = report.witness ? witness_json(*report.witness) : nlohmann::json();
  return out;
}

nlohmann::json cube_report_json(const CubeReport& report) {
  nlohmann::json correspondences = nlohmann::json::array();
  for (size_t i = 0; i < report.correspondences.size(); ++i) {
    nlohmann::json record =
        report_json(report.correspondences[i], correspondence_id(static_cast<Condition>(i)));
    record["condition"] = condition_name(static_cast<Condition>(i));
    record["axiom"] = axiom_name(condition_axiom(static_cast<Condition>(i)));
    correspondences.push_back(std::move(record));
  }

  nlohmann::json equivalences = nlohmann::json::array();
  const std::vector<EquivalenceFact>& facts = equivalence_table();
  for (size_t i = 0; i < report.equivalences.size(); ++i) {
    nlohmann::json record = report_json(report.equivalences[i], facts[i].id);
    record["left"] = condition_set_json(facts[i].left);
    record["right"] = condition_set_json(facts[i].right);
    equivalences.push_back(std::move(record));
  }

  nlohmann::json edges = nlohmann::json::array();
  for (const EdgeResult& edge : report.edges) {
    nlohmann::json record{
        {"id", edge.id},
        {"stronger", edge.stronger},
        {"weaker", edge.weaker},
        {"antecedent", condition_set_json(edge.antecedent)},
        {"consequent", condition_set_json(edge.consequent)},
        {"witness_size", edge.witness_size},
        {"minimality_verified_at", edge.minimality_verified_at},
        {"minimality_holds", edge.minimality_holds},
        {"paper_expected_size", edge.paper_expected_size},
        {"match", edge.match},
        {"conds_match_canonical", edge.conds_match_canonical},
    };
    record["witness"] = edge.witness ? witness_json(*edge.witness) : nlohmann::json();
    if (edge.canonical) {
      record["canonical"] =
          nlohmann::json{{"antecedent", condition_set_json(edge.canonical->antecedent)},
                         {"consequent", condition_set_json(edge.canonical->consequent)},
                         {"witness_size", edge.canonical->witness_size}};
    } else {
      record["canonical"] = nullptr;
    }
    edges.push_back(std::move(record));
  }

  return nlohmann::json{
      {"bound", report.bound},
      {"pruned", report.pruned},
      {"correspondences", correspondences},
      {"equivalences", equivalences},
      {"edges", edges},
      {"green", report.green},
      {"elapsed_ms", report.elapsed.count()},
  };
}

// ===========================================================================
// DOT
// ===========================================================================

std::string cube_report_dot(const CubeReport& report) {
  std::string out = "digraph modal_cube {\n  rankdir=BT;\n";
  for (const Logic& logic : logic_table()) out += "  \"" + logic.name + "\";\n";
  for (const EdgeResult& edge : report.edges) {
    const std::string label =
        edge.witness_size > 0 ? std::to_string(edge.witness_size) : "?";
    out += "  \"" + edge.stronger + "\" -> \"" + edge.weaker + "\" [label=\"" +
           label + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace modal
