#include "modal/catalog.hpp"

#include <array>
#include <stdexcept>

namespace modal {

AxiomSet::AxiomSet(std::initializer_list<Axiom> axioms) {
  for (Axiom a : axioms) insert(a);
}

std::vector<Axiom> AxiomSet::items() const {
  std::vector<Axiom> out;
  for (int i = 0; i < kAxiomCount; ++i) {
    const auto a = static_cast<Axiom>(i);
    if (contains(a)) out.push_back(a);
  }
  return out;
}

ConditionSet AxiomSet::conditions() const {
  ConditionSet out;
  for (Axiom a : items()) out.insert(axiom_condition(a));
  return out;
}

// ===========================================================================
// Logics
// ===========================================================================

namespace {

Logic make_logic(std::string name, AxiomSet axioms) {
  ConditionSet conditions = axioms.conditions();
  return Logic{std::move(name), axioms, conditions};
}

constexpr Axiom kM = Axiom::M;
constexpr Axiom kB = Axiom::B;
constexpr Axiom kD = Axiom::D;
constexpr Axiom k4 = Axiom::Four;
constexpr Axiom k5 = Axiom::Five;

}  // namespace

const std::vector<Logic>& logic_table() {
  static const std::vector<Logic> table = {
      make_logic("K", {}),
      make_logic("D", {kD}),
      make_logic("M", {kM}),
      make_logic("KB", {kB}),
      make_logic("K4", {k4}),
      make_logic("K5", {k5}),
      make_logic("K45", {k4, k5}),
      make_logic("KB5", {kB, k5}),
      make_logic("DB", {kD, kB}),
      make_logic("D4", {kD, k4}),
      make_logic("D5", {kD, k5}),
      make_logic("D45", {kD, k4, k5}),
      make_logic("B", {kM, kB}),
      make_logic("S4", {kM, k4}),
      make_logic("S5", {kM, k5}),
  };
  return table;
}

const Logic& logic_by_name(std::string_view name) {
  if (name == "T") name = "M";  // the common alternative name
  for (const Logic& logic : logic_table())
    if (logic.name == name) return logic;
  throw std::invalid_argument("unknown logic '" + std::string(name) + "'");
}

// ===========================================================================
// Equivalence facts
// ===========================================================================

namespace {

constexpr Condition kRefl = Condition::Refl;
constexpr Condition kSym = Condition::Sym;
constexpr Condition kSer = Condition::Ser;
constexpr Condition kTrans = Condition::Trans;
constexpr Condition kEucl = Condition::Eucl;

}  // namespace

const std::vector<EquivalenceFact>& equivalence_table() {
  // B1-B7 restate S5 = M5; B8/B9 restate KB5.
  static const std::vector<EquivalenceFact> table = {
      {"B1", {kRefl, kEucl}, {kRefl, kSym, kEucl}},
      {"B2", {kRefl, kEucl}, {kRefl, kSym, kTrans, kEucl}},
      {"B3", {kRefl, kEucl}, {kRefl, kTrans, kEucl}},
      {"B4", {kRefl, kEucl}, {kRefl, kSym, kTrans}},
      {"B5", {kRefl, kEucl}, {kSym, kSer, kTrans}},
      {"B6", {kRefl, kEucl}, {kSym, kSer, kTrans, kEucl}},
      {"B7", {kRefl, kEucl}, {kSym, kSer, kEucl}},
      {"B8", {kSym, kEucl}, {kSym, kTrans, kEucl}},
      {"B9", {kSym, kEucl}, {kSym, kTrans}},
  };
  return table;
}

bool condition_sets_equivalent(const ConditionSet& lhs, const ConditionSet& rhs) {
  if (lhs == rhs) return true;

  // Union-find over the 32 possible condition sets, seeded once with the
  // equivalence facts.
  static const std::array<unsigned, 32> classes = [] {
    std::array<unsigned, 32> parent{};
    for (unsigned i = 0; i < 32; ++i) parent[i] = i;
    const auto find = [&parent](unsigned x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    const auto mask = [](const ConditionSet& set) {
      unsigned m = 0;
      for (Condition c : set.items()) m |= 1u << static_cast<unsigned>(c);
      return m;
    };
    for (const EquivalenceFact& fact : equivalence_table()) {
      const unsigned a = find(mask(fact.left));
      const unsigned b = find(mask(fact.right));
      if (a != b) parent[a] = b;
    }
    for (unsigned i = 0; i < 32; ++i) parent[i] = find(i);
    return parent;
  }();

  const auto mask = [](const ConditionSet& set) {
    unsigned m = 0;
    for (Condition c : set.items()) m |= 1u << static_cast<unsigned>(c);
    return m;
  };
  return classes[mask(lhs)] == classes[mask(rhs)];
}

// ===========================================================================
// Inclusion edges
// ===========================================================================

namespace {

// Countermodels are recorded with 1-based edges, matching the text format.
Frame witness_frame(int n_worlds, std::vector<std::pair<int, int>> edges) {
  RelationMatrix rel(n_worlds);
  for (const auto& [s, t] : edges) rel.set(s - 1, t - 1);
  return Frame::single(std::move(rel));
}

InclusionEdge make_edge(std::string id, std::string stronger, std::string weaker,
                        ConditionSet antecedent, ConditionSet consequent,
                        std::optional<Frame> paper_witness, int paper_witness_size,
                        int paper_min_size) {
  return InclusionEdge{std::move(id),       std::move(stronger),
                       std::move(weaker),   antecedent,
                       consequent,          std::move(paper_witness),
                       paper_witness_size,  paper_min_size};
}

}  // namespace

const std::vector<InclusionEdge>& edge_table() {
  static const std::vector<InclusionEdge> table = {
      // id, stronger, weaker, antecedent, consequent, witness, size, min size
      make_edge("C1", "K4", "K", {}, {kTrans},
                witness_frame(2, {{1, 1}, {1, 2}, {2, 1}}), 2, 1),
      make_edge("C2", "K5", "K", {}, {kEucl}, std::nullopt, 2, 1),
      make_edge("C3", "KB", "K", {}, {kSym}, std::nullopt, 2, 1),
      make_edge("C4", "K45", "K4", {kSer}, {kSer, kEucl},
                witness_frame(2, {{1, 2}, {2, 1}}), 2, 1),
      make_edge("C5", "K45", "K5", {kEucl}, {kSer, kEucl},
                witness_frame(1, {}), 1, 1),
      make_edge("C6", "KB5", "KB", {kSym}, {kSym, kEucl}, std::nullopt, 2, 1),
      make_edge("C7", "KB5", "K45", {kSer, kEucl}, {kSym, kEucl},
                witness_frame(2, {{1, 1}, {2, 1}}), 2, 1),
      make_edge("C8", "D", "K", {}, {kSer}, witness_frame(1, {}), 1, 1),
      make_edge("C9", "D4", "K4", {kTrans}, {kSer, kTrans}, std::nullopt, 1, 1),
      make_edge("C10", "D5", "K5", {kEucl}, {kSer, kEucl}, std::nullopt, 1, 1),
      make_edge("C11", "D45", "K45", {kTrans, kEucl}, {kSer, kTrans, kEucl},
                std::nullopt, 1, 1),
      make_edge("C12", "DB", "KB", {kSym}, {kSym, kSer}, std::nullopt, 1, 1),
      make_edge("C13", "S5", "KB5", {kSym, kEucl}, {kRefl, kEucl}, std::nullopt, 1, 1),
      make_edge("C14", "D4", "D", {kSer}, {kSer, kTrans}, std::nullopt, 2, 1),
      make_edge("C15", "D5", "D", {kSer}, {kSer, kEucl}, std::nullopt, 2, 1),
      make_edge("C16", "DB", "D", {kSer}, {kSym, kSer}, std::nullopt, 2, 1),
      make_edge("C17", "D45", "D4", {kSer, kTrans}, {kSer, kTrans, kEucl},
                witness_frame(2, {{1, 1}, {1, 2}, {2, 2}}), 2, 1),
      make_edge("C18", "D45", "D5", {kSer, kEucl}, {kSer, kTrans, kEucl},
                witness_frame(3, {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 2}}), 3, 2),
      make_edge("C19", "M", "D", {kSer}, {kRefl}, std::nullopt, 2, 1),
      make_edge("C20", "S4", "D4", {kSer, kTrans}, {kRefl, kTrans},
                witness_frame(2, {{1, 1}, {2, 1}}), 2, 1),
      make_edge("C21", "S5", "D45", {kSer, kTrans, kEucl}, {kRefl, kEucl},
                witness_frame(2, {{1, 1}, {2, 1}}), 2, 1),
      make_edge("C22", "B", "DB", {kSym, kSer}, {kRefl, kSym},
                witness_frame(2, {{1, 1}, {1, 2}, {2, 1}}), 2, 1),
      make_edge("C23", "B", "M", {kRefl}, {kRefl, kSym},
                witness_frame(2, {{1, 1}, {1, 2}, {2, 2}}), 2, 1),
      make_edge("C24", "S5", "S4", {kRefl, kTrans}, {kRefl, kEucl},
                witness_frame(2, {{1, 1}, {1, 2}, {2, 2}}), 2, 1),
      make_edge("C25", "S5", "B", {kRefl, kSym}, {kRefl, kEucl},
                witness_frame(3, {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}),
                3, 2),
  };
  return table;
}

const InclusionEdge& edge_by_id(std::string_view id) {
  for (const InclusionEdge& edge : edge_table())
    if (edge.id == id) return edge;
  throw std::invalid_argument("unknown edge '" + std::string(id) + "'");
}

ConditionSet InclusionEdge::canonical_antecedent() const {
  return logic_by_name(weaker).conditions;
}

ConditionSet InclusionEdge::canonical_consequent() const {
  return logic_by_name(stronger).conditions;
}

bool InclusionEdge::conds_match_canonical() const {
  return condition_sets_equivalent(antecedent, canonical_antecedent()) &&
         condition_sets_equivalent(consequent, canonical_consequent());
}

// ===========================================================================
// JSON export
// ===========================================================================

namespace {

nlohmann::json condition_set_json(const ConditionSet& set) {
  nlohmann::json out = nlohmann::json::array();
  for (Condition c : set.items()) out.push_back(condition_name(c));
  return out;
}

nlohmann::json frame_json(const Frame& frame) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [s, t] : frame.relation(0).edges())
    edges.push_back(nlohmann::json::array({s + 1, t + 1}));
  return nlohmann::json{{"n_worlds", frame.n_worlds()}, {"edges", edges}};
}

}  // namespace

nlohmann::json catalog_json() {
  nlohmann::json logics = nlohmann::json::array();
  for (const Logic& logic : logic_table()) {
    nlohmann::json axioms = nlohmann::json::array();
    for (Axiom a : logic.axioms.items()) axioms.push_back(axiom_name(a));
    logics.push_back({{"name", logic.name},
                      {"axioms", axioms},
                      {"conditions", condition_set_json(logic.conditions)}});
  }

  nlohmann::json equivalences = nlohmann::json::array();
  for (const EquivalenceFact& fact : equivalence_table())
    equivalences.push_back({{"id", fact.id},
                            {"left", condition_set_json(fact.left)},
                            {"right", condition_set_json(fact.right)}});

  nlohmann::json edges = nlohmann::json::array();
  for (const InclusionEdge& edge : edge_table()) {
    nlohmann::json record = {
        {"id", edge.id},
        {"stronger", edge.stronger},
        {"weaker", edge.weaker},
        {"antecedent", condition_set_json(edge.antecedent)},
        {"consequent", condition_set_json(edge.consequent)},
        {"canonical_antecedent", condition_set_json(edge.canonical_antecedent())},
        {"canonical_consequent", condition_set_json(edge.canonical_consequent())},
        {"conds_match_canonical", edge.conds_match_canonical()},
        {"paper_witness_size", edge.paper_witness_size},
        {"paper_min_size", edge.paper_min_size},
    };
    record["paper_witness"] =
        edge.paper_witness ? frame_json(*edge.paper_witness) : nlohmann::json();
    edges.push_back(std::move(record));
  }

  return nlohmann::json{
      {"logics", logics}, {"equivalences", equivalences}, {"edges", edges}};
}

}  // namespace modal
