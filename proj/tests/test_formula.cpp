#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "modal/formula.hpp"

using namespace modal;

TEST_CASE("axiom schemata print to their textbook forms") {
  CHECK(formula_print(axiom_schema(Axiom::M)) == "[]p -> p");
  CHECK(formula_print(axiom_schema(Axiom::B)) == "p -> []<>p");
  CHECK(formula_print(axiom_schema(Axiom::D)) == "[]p -> <>p");
  CHECK(formula_print(axiom_schema(Axiom::Four)) == "[]p -> [][]p");
  CHECK(formula_print(axiom_schema(Axiom::Five)) == "<>p -> []<>p");
}

TEST_CASE("axiom names and the condition correspondence") {
  CHECK(std::string(axiom_name(Axiom::Four)) == "4");
  CHECK(axiom_from_name("5") == Axiom::Five);
  CHECK_FALSE(axiom_from_name("T").has_value());

  CHECK(axiom_condition(Axiom::M) == Condition::Refl);
  CHECK(axiom_condition(Axiom::B) == Condition::Sym);
  CHECK(axiom_condition(Axiom::D) == Condition::Ser);
  CHECK(axiom_condition(Axiom::Four) == Condition::Trans);
  CHECK(axiom_condition(Axiom::Five) == Condition::Eucl);
  for (int i = 0; i < kAxiomCount; ++i) {
    const auto a = static_cast<Axiom>(i);
    CHECK(condition_axiom(axiom_condition(a)) == a);
  }
}

TEST_CASE("parser: structure and precedence") {
  const Formula p = Formula::prop("p");
  const Formula q = Formula::prop("q");
  const Formula r = Formula::prop("r");

  CHECK(formula_parse("[]p -> p") == axiom_schema(Axiom::M));
  CHECK(formula_parse("p -> []<>p") == axiom_schema(Axiom::B));

  // Unary binds tightest.
  CHECK(formula_parse("~p & q") == Formula::conjunction(Formula::negation(p), q));
  CHECK(formula_parse("~(p & q)") ==
        Formula::negation(Formula::conjunction(p, q)));
  CHECK(formula_parse("[]p & q") == Formula::conjunction(Formula::box(p), q));
  CHECK(formula_parse("~[]<>p") ==
        Formula::negation(Formula::box(Formula::dia(p))));

  // & over |, | over ->, -> over <->.
  CHECK(formula_parse("p | q & r") ==
        Formula::disjunction(p, Formula::conjunction(q, r)));
  CHECK(formula_parse("p & q | r") ==
        Formula::disjunction(Formula::conjunction(p, q), r));
  CHECK(formula_parse("p | q -> r") ==
        Formula::implication(Formula::disjunction(p, q), r));
  CHECK(formula_parse("p -> q <-> r") ==
        Formula::equivalence(Formula::implication(p, q), r));

  // -> and <-> associate right, & and | left.
  CHECK(formula_parse("p -> q -> r") ==
        Formula::implication(p, Formula::implication(q, r)));
  CHECK(formula_parse("p <-> q <-> r") ==
        Formula::equivalence(p, Formula::equivalence(q, r)));
  CHECK(formula_parse("p & q & r") ==
        Formula::conjunction(Formula::conjunction(p, q), r));
  CHECK(formula_parse("p | q | r") ==
        Formula::disjunction(Formula::disjunction(p, q), r));
}

TEST_CASE("parser: modalities and indexed relations") {
  const Formula x = Formula::prop("x_1");
  CHECK(formula_parse("[2]<3>x_1") == Formula::box(2, Formula::dia(3, x)));
  CHECK(formula_parse("[0]p") == Formula::box(Formula::prop("p")));
  CHECK(formula_parse("<>p") == Formula::dia(Formula::prop("p")));
  CHECK(formula_parse("[] p") == Formula::box(Formula::prop("p")));
}

TEST_CASE("parser: literals and variable names") {
  CHECK(formula_parse("true") == Formula::top());
  CHECK(formula_parse("false") == Formula::bottom());
  // Only the exact words are reserved.
  CHECK(formula_parse("true1") == Formula::prop("true1"));
  CHECK(formula_parse("falsehood") == Formula::prop("falsehood"));
  CHECK(formula_parse("ab_9z") == Formula::prop("ab_9z"));
}

TEST_CASE("parser: malformed input") {
  const auto fails = [](std::string_view text) {
    CHECK_THROWS_AS(formula_parse(text), ParseError);
  };
  fails("");
  fails("p &");
  fails("& p");
  fails("(p");
  fails("p)");
  fails("p q");
  fails("P");        // upper case is not a variable
  fails("p -> -> q");
  fails("[p");
  fails("<p>");
  fails("p <- q");
  fails("~");

  try {
    formula_parse("p & (q |)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.column == 9);
  }
}

TEST_CASE("free variables and depth") {
  const Formula f = formula_parse("[]p -> (q & <>p)");
  CHECK(f.free_vars() == std::set<std::string>{"p", "q"});
  CHECK(formula_parse("true").free_vars().empty());
  CHECK(formula_parse("p").depth() == 1);
  CHECK(formula_parse("[]p").depth() == 2);
  CHECK(axiom_schema(Axiom::Four).depth() == 4);
}

TEST_CASE("printer needs parentheses only where structure demands them") {
  CHECK(formula_print(formula_parse("p | q & r")) == "p | q & r");
  CHECK(formula_print(formula_parse("(p | q) & r")) == "(p | q) & r");
  CHECK(formula_print(formula_parse("p -> q -> r")) == "p -> q -> r");
  CHECK(formula_print(formula_parse("(p -> q) -> r")) == "(p -> q) -> r");
  CHECK(formula_print(formula_parse("~(p & q)")) == "~(p & q)");
  CHECK(formula_print(formula_parse("[](p -> q)")) == "[](p -> q)");
  CHECK(formula_print(Formula::conjunction(Formula::prop("a"),
                                           Formula::conjunction(Formula::prop("b"),
                                                                Formula::prop("c")))) ==
        "a & (b & c)");
}

TEST_CASE("print/parse round-trip on random formulas") {
  std::mt19937_64 rng(20240813);
  const std::vector<std::string> names{"p", "q", "r_2"};
  for (int round = 0; round < 3000; ++round) {
    const Formula f = testgen::random_formula(rng, 6, names, 3);
    CAPTURE(formula_print(f));
    REQUIRE(formula_parse(formula_print(f)) == f);
  }
}
