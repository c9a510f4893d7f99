#pragma once

// Finite Kripke frames.
//
// Worlds are dense indices 0..n-1 and every world subset -- a relation row,
// a valuation entry, an evaluation result -- is a single 64-bit word, so a
// frame holds at most 64 worlds.  All internal indices are 0-based; the text
// format and every human-facing rendering are 1-based.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace modal {

using Word = std::uint64_t;

inline constexpr int kMaxWorlds = 64;

// Bitmask with one bit per world of an n-world frame.
constexpr Word world_mask(int n_worlds) {
  return n_worlds >= kMaxWorlds ? ~Word{0} : (Word{1} << n_worlds) - 1;
}

// Raised by the text parsers; positions are 1-based.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line, int column);
  int line;
  int column;
};

// Raised when a request would enumerate more states than the configured cap.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ===========================================================================
// Frame conditions
// ===========================================================================

// Tag order is fixed and used as a tie-break wherever a single condition has
// to be picked out of a set (witness reporting, set rendering).
enum class Condition { Refl, Sym, Ser, Trans, Eucl };

inline constexpr int kConditionCount = 5;

const char* condition_name(Condition c);
std::optional<Condition> condition_from_name(std::string_view name);

// Duplicate-free set of condition tags; iteration follows tag order.
class ConditionSet {
 public:
  ConditionSet() = default;
  ConditionSet(std::initializer_list<Condition> conditions);

  static ConditionSet all();

  bool contains(Condition c) const { return (bits_ >> index(c)) & 1u; }
  void insert(Condition c) { bits_ |= 1u << index(c); }
  void erase(Condition c) { bits_ &= ~(1u << index(c)); }

  bool empty() const { return bits_ == 0; }
  int size() const;
  std::vector<Condition> items() const;

  bool operator==(const ConditionSet&) const = default;

  // "{refl,eucl}"; the empty set renders as "{}".
  std::string to_string() const;

 private:
  static unsigned index(Condition c) { return static_cast<unsigned>(c); }
  unsigned bits_ = 0;
};

// Parses a comma-separated tag list such as "refl,eucl".  The empty string
// (or one that is all spaces) denotes the empty set.  Unknown or repeated
// tags raise std::invalid_argument.
ConditionSet condition_set_from_names(std::string_view csv);

// ===========================================================================
// Frames
// ===========================================================================

// One accessibility relation over n worlds, stored row-major with one word
// per source world: bit t of row(s) is the edge s -> t.
class RelationMatrix {
 public:
  explicit RelationMatrix(int n_worlds);

  // Edges are 0-based (s, t) pairs; out-of-range indices raise
  // std::invalid_argument.
  static RelationMatrix from_edges(int n_worlds,
                                   const std::vector<std::pair<int, int>>& edges);
  static RelationMatrix from_rows(int n_worlds, std::span<const Word> rows);

  int n_worlds() const { return n_; }

  bool at(int s, int t) const;
  void set(int s, int t, bool value = true);

  Word row(int s) const;
  std::span<const Word> rows() const { return rows_; }

  // Edges in row-major order, 0-based.
  std::vector<std::pair<int, int>> edges() const;

  // The relation as one integer: bit (s*n + t) is the edge s -> t.  Only
  // defined while n*n <= 64; larger matrices raise std::invalid_argument.
  std::uint64_t encoding() const;

  bool operator==(const RelationMatrix&) const = default;

 private:
  void check_world(int w, const char* what) const;

  int n_;
  std::vector<Word> rows_;
};

// A frame: a world count plus one or more accessibility relations.  Relation
// 0 is the one every single-relation operation acts on.
class Frame {
 public:
  Frame(int n_worlds, std::vector<RelationMatrix> relations);

  // Convenience wrapper for the common single-relation case.
  static Frame single(RelationMatrix relation);

  int n_worlds() const { return n_worlds_; }
  int relation_count() const { return static_cast<int>(relations_.size()); }

  // Raises std::invalid_argument when the index is out of range.
  const RelationMatrix& relation(int rel_index) const;

  const std::vector<RelationMatrix>& relations() const { return relations_; }

  bool operator==(const Frame&) const = default;

 private:
  int n_worlds_;
  std::vector<RelationMatrix> relations_;
};

// ===========================================================================
// Condition checks
// ===========================================================================

// Word-parallel kernels over raw relation rows.  `rows` must hold n_worlds
// entries with no bits at or above n_worlds.
//
//   refl   every world reaches itself
//   sym    s -> t implies t -> s
//   ser    every world reaches something
//   trans  s -> t implies row(t) is a subset of row(s)
//   eucl   s -> t implies row(s) is a subset of row(t)
bool condition_holds(int n_worlds, std::span<const Word> rows, Condition c);

bool check_condition(const Frame& frame, int rel_index, Condition c);
bool check_condition_set(const Frame& frame, int rel_index, const ConditionSet& conditions);

// ===========================================================================
// Valuations
// ===========================================================================

// Assignment of world sets to propositional variable names.  Iteration is in
// lexicographic name order, which every deterministic enumeration relies on.
class Valuation {
 public:
  Valuation() = default;

  void assign(std::string name, Word worlds);

  // nullptr when the variable is unbound.
  const Word* find(std::string_view name) const;

  const std::map<std::string, Word, std::less<>>& assignments() const {
    return assignments_;
  }

  bool operator==(const Valuation&) const = default;

 private:
  std::map<std::string, Word, std::less<>> assignments_;
};

// Builds a world set from 0-based indices.
Word world_set(std::initializer_list<int> worlds);

// 1-based display name of a world: 0 -> "i1".
std::string world_name(int world);

// "{i1,i3}"; the empty set renders as "{}".
std::string world_set_to_string(Word worlds);

// ===========================================================================
// Frame text format
// ===========================================================================

// Grammar (uses 1-based world indices):
//
//   worlds: 3
//   rel 0: (1,1) (1,2) (2,1)
//   rel 1: (3,3)
//
// '#' starts a comment; blank lines are ignored; relation indices must be
// consecutive from 0 and at least one relation is required.  Malformed
// syntax, out-of-range worlds and duplicate edges raise ParseError with a
// 1-based line and column.
Frame frame_parse(std::string_view text);

// Inverse of frame_parse: emits the exact format above, edges in row-major
// order, an empty relation as "rel k:", no trailing newline.
std::string frame_print(const Frame& frame);

}  // namespace modal
