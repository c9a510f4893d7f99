#pragma once

// Multimodal propositional formulas.
//
// Surface grammar (ASCII):
//
//   phi := var | true | false | ~phi | phi & phi | phi | phi
//        | phi -> phi | phi <-> phi | []phi | <>phi | [k]phi | <k>phi
//
// Variables match [a-z][a-z0-9_]* with "true"/"false" reserved.  [] and <>
// address relation 0; [k]/<k> address relation k.  Precedence, tightest
// first: unary (~, [], <>), &, |, ->, <->.  -> and <-> associate to the
// right, & and | to the left.

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "modal/kripke.hpp"

namespace modal {

class Formula {
 public:
  enum class Kind { PropVar, Top, Bottom, Not, And, Or, Implies, Iff, Box, Dia };

  static Formula prop(std::string name);
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);
  static Formula box(Formula f);
  static Formula box(int rel_index, Formula f);
  static Formula dia(Formula f);
  static Formula dia(int rel_index, Formula f);

  Kind kind() const { return node_->kind; }

  // PropVar only.
  const std::string& var_name() const;

  // Box / Dia only.
  int rel_index() const;

  // child() for the unary connectives, left()/right() for the binary ones.
  const Formula& child() const;
  const Formula& left() const;
  const Formula& right() const;

  // Structural equality.
  bool operator==(const Formula& other) const;

  // Free variable names in lexicographic order.
  std::set<std::string> free_vars() const;

  int depth() const;

  static const char* kind_name(Kind k);

 private:
  struct Node {
    Kind kind;
    std::string name;        // PropVar
    int rel_index = 0;       // Box / Dia
    std::vector<Formula> children;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static Formula make(Node node);

  std::shared_ptr<const Node> node_;
};

// ===========================================================================
// Axiom schemata
// ===========================================================================

// The five schemata, each over the single variable p and relation 0:
//
//   M  []p -> p        B  p -> []<>p      D  []p -> <>p
//   4  []p -> [][]p    5  <>p -> []<>p
//
// Enum order matches Condition order, which is also the correspondence:
// M~refl, B~sym, D~ser, 4~trans, 5~eucl.
enum class Axiom { M, B, D, Four, Five };

inline constexpr int kAxiomCount = 5;

const char* axiom_name(Axiom a);  // "M", "B", "D", "4", "5"
std::optional<Axiom> axiom_from_name(std::string_view name);

Condition axiom_condition(Axiom a);
Axiom condition_axiom(Condition c);

Formula axiom_schema(Axiom a);

// ===========================================================================
// Parser / printer
// ===========================================================================

// Raises ParseError with a 1-based position on malformed input.
Formula formula_parse(std::string_view text);

// Minimal parentheses; formula_parse(formula_print(f)) == f.
std::string formula_print(const Formula& f);

}  // namespace modal
