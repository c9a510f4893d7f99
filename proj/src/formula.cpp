#include "modal/formula.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace modal {

// ===========================================================================
// Construction
// ===========================================================================

Formula Formula::make(Node node) {
  return Formula(std::make_shared<const Node>(std::move(node)));
}

Formula Formula::prop(std::string name) {
  if (name.empty()) throw std::invalid_argument("variable name must not be empty");
  return make({Kind::PropVar, std::move(name), 0, {}});
}

Formula Formula::top() { return make({Kind::Top, "", 0, {}}); }
Formula Formula::bottom() { return make({Kind::Bottom, "", 0, {}}); }

Formula Formula::negation(Formula f) {
  return make({Kind::Not, "", 0, {std::move(f)}});
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make({Kind::And, "", 0, {std::move(lhs), std::move(rhs)}});
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return make({Kind::Or, "", 0, {std::move(lhs), std::move(rhs)}});
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return make({Kind::Implies, "", 0, {std::move(lhs), std::move(rhs)}});
}

Formula Formula::equivalence(Formula lhs, Formula rhs) {
  return make({Kind::Iff, "", 0, {std::move(lhs), std::move(rhs)}});
}

Formula Formula::box(Formula f) { return box(0, std::move(f)); }

Formula Formula::box(int rel_index, Formula f) {
  if (rel_index < 0) throw std::invalid_argument("relation index must be >= 0");
  return make({Kind::Box, "", rel_index, {std::move(f)}});
}

Formula Formula::dia(Formula f) { return dia(0, std::move(f)); }

Formula Formula::dia(int rel_index, Formula f) {
  if (rel_index < 0) throw std::invalid_argument("relation index must be >= 0");
  return make({Kind::Dia, "", rel_index, {std::move(f)}});
}

// ===========================================================================
// Accessors
// ===========================================================================

const std::string& Formula::var_name() const {
  if (node_->kind != Kind::PropVar)
    throw std::logic_error("var_name() on a non-variable node");
  return node_->name;
}

int Formula::rel_index() const {
  if (node_->kind != Kind::Box && node_->kind != Kind::Dia)
    throw std::logic_error("rel_index() on a non-modal node");
  return node_->rel_index;
}

const Formula& Formula::child() const {
  if (node_->children.size() != 1)
    throw std::logic_error("child() on a non-unary node");
  return node_->children[0];
}

const Formula& Formula::left() const {
  if (node_->children.size() != 2)
    throw std::logic_error("left() on a non-binary node");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (node_->children.size() != 2)
    throw std::logic_error("right() on a non-binary node");
  return node_->children[1];
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  if (node_->name != other.node_->name) return false;
  if (node_->rel_index != other.node_->rel_index) return false;
  if (node_->children.size() != other.node_->children.size()) return false;
  for (size_t i = 0; i < node_->children.size(); ++i)
    if (!(node_->children[i] == other.node_->children[i])) return false;
  return true;
}

std::set<std::string> Formula::free_vars() const {
  std::set<std::string> out;
  std::vector<const Node*> stack{node_.get()};
  while (!stack.empty()) {
    const Node* node = stack.back();
    stack.pop_back();
    if (node->kind == Kind::PropVar) out.insert(node->name);
    for (const Formula& c : node->children) stack.push_back(c.node_.get());
  }
  return out;
}

int Formula::depth() const {
  int best = 0;
  for (const Formula& c : node_->children) best = std::max(best, c.depth());
  return best + 1;
}

const char* Formula::kind_name(Kind k) {
  switch (k) {
    case Kind::PropVar: return "var";
    case Kind::Top: return "true";
    case Kind::Bottom: return "false";
    case Kind::Not: return "not";
    case Kind::And: return "and";
    case Kind::Or: return "or";
    case Kind::Implies: return "implies";
    case Kind::Iff: return "iff";
    case Kind::Box: return "box";
    case Kind::Dia: return "dia";
  }
  return "?";
}

// ===========================================================================
// Axioms
// ===========================================================================

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::M: return "M";
    case Axiom::B: return "B";
    case Axiom::D: return "D";
    case Axiom::Four: return "4";
    case Axiom::Five: return "5";
  }
  throw std::invalid_argument("unknown axiom tag");
}

std::optional<Axiom> axiom_from_name(std::string_view name) {
  for (int i = 0; i < kAxiomCount; ++i) {
    const auto a = static_cast<Axiom>(i);
    if (name == axiom_name(a)) return a;
  }
  return std::nullopt;
}

Condition axiom_condition(Axiom a) { return static_cast<Condition>(a); }
Axiom condition_axiom(Condition c) { return static_cast<Axiom>(c); }

Formula axiom_schema(Axiom a) {
  const Formula p = Formula::prop("p");
  switch (a) {
    case Axiom::M:
      return Formula::implication(Formula::box(p), p);
    case Axiom::B:
      return Formula::implication(p, Formula::box(Formula::dia(p)));
    case Axiom::D:
      return Formula::implication(Formula::box(p), Formula::dia(p));
    case Axiom::Four:
      return Formula::implication(Formula::box(p), Formula::box(Formula::box(p)));
    case Axiom::Five:
      return Formula::implication(Formula::dia(p), Formula::box(Formula::dia(p)));
  }
  throw std::invalid_argument("unknown axiom tag");
}

// ===========================================================================
// Parser
// ===========================================================================

namespace {

// Recursive descent over a single-line buffer.  Error columns are 1-based;
// a newline in the input bumps the line count like any other whitespace.
class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = parse_iff();
    skip_spaces();
    if (pos_ < text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    int line = 1;
    int column = 1;
    for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what, line, column);
  }

  void skip_spaces() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_spaces();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool try_symbol(std::string_view sym) {
    skip_spaces();
    if (text_.substr(pos_, sym.size()) != sym) return false;
    pos_ += sym.size();
    return true;
  }

  int parse_rel_index(char close) {
    // Caller consumed the opening '[' or '<'; an index is optional.
    int rel = 0;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const char* begin = text_.data() + pos_;
      const char* end = text_.data() + text_.size();
      const auto [ptr, ec] = std::from_chars(begin, end, rel);
      if (ec != std::errc()) fail("relation index out of range");
      pos_ += static_cast<size_t>(ptr - begin);
    }
    if (pos_ >= text_.size() || text_[pos_] != close)
      fail(std::string("expected '") + close + "' after relation index");
    ++pos_;
    return rel;
  }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    if (try_symbol("<->")) return Formula::equivalence(std::move(lhs), parse_iff());
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (try_symbol("->")) return Formula::implication(std::move(lhs), parse_implies());
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (true) {
      skip_spaces();
      if (peek() != '|') return lhs;
      ++pos_;
      lhs = Formula::disjunction(std::move(lhs), parse_and());
    }
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (peek() == '&') {
      ++pos_;
      lhs = Formula::conjunction(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Formula parse_unary() {
    const char c = peek();
    if (c == '~') {
      ++pos_;
      return Formula::negation(parse_unary());
    }
    if (c == '[') {
      ++pos_;
      const int rel = parse_rel_index(']');
      return Formula::box(rel, parse_unary());
    }
    if (c == '<') {
      // '<' is either '<->' (handled above) or a diamond; at unary position
      // only the diamond is legal.
      ++pos_;
      const int rel = parse_rel_index('>');
      return Formula::dia(rel, parse_unary());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Formula inner = parse_iff();
      skip_spaces();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c >= 'a' && c <= 'z') {
      const size_t start = pos_;
      ++pos_;
      while (pos_ < text_.size()) {
        const char d = text_[pos_];
        if ((d >= 'a' && d <= 'z') || (d >= '0' && d <= '9') || d == '_')
          ++pos_;
        else
          break;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (name == "true") return Formula::top();
      if (name == "false") return Formula::bottom();
      return Formula::prop(std::move(name));
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

Formula formula_parse(std::string_view text) { return FormulaParser(text).parse(); }

// ===========================================================================
// Printer
// ===========================================================================

namespace {

// Binding strength; parentheses are emitted when a child binds looser than
// its context requires.
enum Level : int { kIff = 1, kImplies, kOr, kAnd, kUnary, kAtom };

int level_of(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff: return kIff;
    case Formula::Kind::Implies: return kImplies;
    case Formula::Kind::Or: return kOr;
    case Formula::Kind::And: return kAnd;
    case Formula::Kind::Not:
    case Formula::Kind::Box:
    case Formula::Kind::Dia: return kUnary;
    default: return kAtom;
  }
}

void print_to(const Formula& f, int min_level, std::string& out) {
  const int level = level_of(f.kind());
  const bool parens = level < min_level;
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::PropVar:
      out += f.var_name();
      break;
    case Formula::Kind::Top:
      out += "true";
      break;
    case Formula::Kind::Bottom:
      out += "false";
      break;
    case Formula::Kind::Not:
      out += '~';
      print_to(f.child(), kUnary, out);
      break;
    case Formula::Kind::Box:
      out += f.rel_index() == 0 ? "[]" : "[" + std::to_string(f.rel_index()) + "]";
      print_to(f.child(), kUnary, out);
      break;
    case Formula::Kind::Dia:
      out += f.rel_index() == 0 ? "<>" : "<" + std::to_string(f.rel_index()) + ">";
      print_to(f.child(), kUnary, out);
      break;
    case Formula::Kind::And:
      // Left-associative: the right child needs parens at equal level.
      print_to(f.left(), kAnd, out);
      out += " & ";
      print_to(f.right(), kAnd + 1, out);
      break;
    case Formula::Kind::Or:
      print_to(f.left(), kOr, out);
      out += " | ";
      print_to(f.right(), kOr + 1, out);
      break;
    case Formula::Kind::Implies:
      // Right-associative: the left child needs parens at equal level.
      print_to(f.left(), kImplies + 1, out);
      out += " -> ";
      print_to(f.right(), kImplies, out);
      break;
    case Formula::Kind::Iff:
      print_to(f.left(), kIff + 1, out);
      out += " <-> ";
      print_to(f.right(), kIff, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string formula_print(const Formula& f) {
  std::string out;
  print_to(f, kIff, out);
  return out;
}

}  // namespace modal
