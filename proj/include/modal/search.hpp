#pragma once

// Bounded countermodel search over all finite single-relation frames.
//
// Frames of size n are identified with the 2^(n^2) encodings of their
// relation: bit (s*n + t) of the encoding is the edge s -> t.  Every search
// walks sizes 1..max_worlds and, within a size, encodings ascending, so
// "first hit" is a total order and results are reproducible bit for bit --
// including under internal parallelism, which partitions the encoding space
// and merges chunk results back in encoding order.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "modal/formula.hpp"
#include "modal/kripke.hpp"
#include "modal/semantics.hpp"

namespace modal {

// Enumeration works on the integer encoding, so n*n must fit one word; the
// practical ceiling is lower still (2^49 frames at n = 7).
inline constexpr int kMaxSearchWorlds = 7;

struct SearchBudget {
  // Largest frame size to enumerate.  Sizes 6 and 7 are permitted only with
  // canonical pruning switched on; even then they are enormous.
  int max_worlds = 4;

  // Skip every frame that is not the encoding-least representative of its
  // isomorphism class.  Changes which representative a search reports, never
  // whether one exists or how many worlds it has.
  bool use_canonical_pruning = false;

  // Worker count for partitioned scans; values below 2 mean sequential.
  // Results do not depend on it.
  int parallelism_hint = 1;

  // Raises std::invalid_argument when the combination is unusable.
  void validate() const;
};

// Number of single-relation frames with exactly n worlds: 2^(n^2).
std::uint64_t relation_space_size(int n_worlds);

Frame frame_from_encoding(int n_worlds, std::uint64_t encoding);

// Streams all frames of one size in encoding order.
class RelationEnumerator {
 public:
  explicit RelationEnumerator(int n_worlds, const SearchBudget& budget = {});

  std::optional<Frame> next();

  std::uint64_t produced() const { return produced_; }

 private:
  int n_;
  std::uint64_t produced_ = 0;
  std::uint64_t total_;
};

// Encoding-least frame isomorphic to the input (single-relation frames of at
// most 7 worlds): the minimum of the encoding over all world permutations.
// Two frames are isomorphic exactly when their canonical forms are equal.
Frame canonical_form(const Frame& frame);
std::uint64_t canonical_encoding(int n_worlds, std::uint64_t encoding);

// A frame refuting some claim, together with the condition it violates and,
// when the violated condition corresponds to an axiom that fails on the
// frame, a concrete failing instance of that axiom's schema.
struct FailingInstance {
  Axiom axiom;
  Valuation valuation;
  int world;
};

struct Witness {
  Frame frame;
  Condition failed_condition;
  std::optional<FailingInstance> failing_instance;
};

enum class Outcome { Holds, Refuted };

struct VerificationReport {
  std::string claim;
  int bound;  // largest size enumerated (exact size for minimality checks)
  std::uint64_t frames_checked;
  Outcome result;
  std::optional<Witness> witness;
  std::chrono::milliseconds elapsed{0};
};

// First frame (by size, then encoding) satisfying every antecedent condition
// while violating some consequent condition.  The reported failed_condition
// is the violated consequent member least in tag order; the failing instance
// comes from frame_find_failure on that condition's axiom schema.
std::optional<Witness> find_countermodel(const ConditionSet& antecedent,
                                         const ConditionSet& consequent,
                                         const SearchBudget& budget);

// Like find_countermodel but reporting the work done: holds when every frame
// up to the bound satisfying the antecedent also satisfies the consequent,
// refuted (with the countermodel as witness) otherwise.
VerificationReport verify_implication(const ConditionSet& antecedent,
                                      const ConditionSet& consequent,
                                      const SearchBudget& budget);

// Checks that every frame with exactly `size` worlds satisfying the
// antecedent also satisfies the consequent -- i.e. that no countermodel of
// that exact size exists.
VerificationReport verify_minimality(const ConditionSet& antecedent,
                                     const ConditionSet& consequent, int size,
                                     const SearchBudget& budget);

// Checks check_condition(F, c) == frame_valid(F, schema(a)) on every frame
// up to the bound.
VerificationReport verify_correspondence(Condition condition, Axiom axiom,
                                         const SearchBudget& budget);

// Checks that two condition sets hold on exactly the same frames up to the
// bound.
VerificationReport verify_equivalence(const ConditionSet& left,
                                      const ConditionSet& right,
                                      const SearchBudget& budget);

}  // namespace modal
