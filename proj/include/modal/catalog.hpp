#pragma once

// The modal cube catalog: the fifteen logics between K and S5 generated by
// the axioms M, B, D, 4, 5, the nine classical equivalences between
// condition sets, and the twenty-five proper-inclusion edges with their
// published countermodel data.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modal/formula.hpp"
#include "modal/kripke.hpp"

#include <json.hpp>

namespace modal {

// Duplicate-free set of axiom tags; iteration follows tag order M,B,D,4,5.
class AxiomSet {
 public:
  AxiomSet() = default;
  AxiomSet(std::initializer_list<Axiom> axioms);

  bool contains(Axiom a) const { return (bits_ >> index(a)) & 1u; }
  void insert(Axiom a) { bits_ |= 1u << index(a); }

  bool empty() const { return bits_ == 0; }
  std::vector<Axiom> items() const;

  // The frame conditions the member axioms correspond to.
  ConditionSet conditions() const;

  bool operator==(const AxiomSet&) const = default;

 private:
  static unsigned index(Axiom a) { return static_cast<unsigned>(a); }
  unsigned bits_ = 0;
};

struct Logic {
  std::string name;
  AxiomSet axioms;
  ConditionSet conditions;  // derived from the axioms
};

// The fifteen logics in fixed catalog order (also the report order).
const std::vector<Logic>& logic_table();

// Accepts "T" as an alias for M; unknown names raise std::invalid_argument.
const Logic& logic_by_name(std::string_view name);

// One provable equivalence between two frame-condition sets, e.g.
// B1: {refl,eucl} <=> {refl,sym,eucl}.
struct EquivalenceFact {
  std::string id;  // "B1" .. "B9"
  ConditionSet left;
  ConditionSet right;
};

const std::vector<EquivalenceFact>& equivalence_table();

// One proper inclusion between neighbouring logics.  The antecedent and
// consequent condition sets are stored exactly as the source derivations
// state them, which for a few edges differs from the axiomatic condition
// sets of the two logics (see conds_match_canonical below); both variants
// are kept so reports can show the discrepancy.
struct InclusionEdge {
  std::string id;  // "C1" .. "C25"
  std::string stronger;
  std::string weaker;
  ConditionSet antecedent;   // conditions assumed (the weaker side)
  ConditionSet consequent;   // conditions to refute (the stronger side)
  std::optional<Frame> paper_witness;  // published countermodel, when given
  int paper_witness_size;    // world count of the published countermodel
  int paper_min_size;        // size the published minimality claim is checked at:
                             // witness size minus one (no smaller countermodel
                             // exists), or one when the witness is a single world
                             // and minimality is definitional

  // The condition sets read off the two logics' axioms.
  ConditionSet canonical_antecedent() const;
  ConditionSet canonical_consequent() const;

  // True when the stored sets equal the canonical ones up to the equivalence
  // facts; a false value is informational, not an error.
  bool conds_match_canonical() const;
};

const std::vector<InclusionEdge>& edge_table();
const InclusionEdge& edge_by_id(std::string_view id);

// Whether two condition sets are provably interchangeable: equal, or linked
// by a chain of the nine equivalence facts.
bool condition_sets_equivalent(const ConditionSet& lhs, const ConditionSet& rhs);

// The whole catalog as one JSON document (logics, equivalences, edges with
// 1-based witness edge lists).
nlohmann::json catalog_json();

}  // namespace modal
