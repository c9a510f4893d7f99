#pragma once

// Forcing and frame validity.
//
// Two independent evaluation routes are kept on purpose: eval recurses
// pointwise over successor worlds, eval_set computes all worlds at once with
// word operations.  They must agree everywhere; the test suite leans on that.

#include <cstdint>
#include <optional>

#include "modal/formula.hpp"
#include "modal/kripke.hpp"

namespace modal {

// Truth at a single world.  Unbound variables and out-of-range worlds or
// relation indices raise std::invalid_argument -- never a silent default.
bool eval(const Frame& frame, const Valuation& valuation, int world, const Formula& f);

// Truth at every world in one pass: bit w of the result is the truth value
// at world w.  Box is a row-subset test per world, Dia a row intersection.
Word eval_set(const Frame& frame, const Valuation& valuation, const Formula& f);

struct EvalFailure {
  Valuation valuation;
  int world;

  bool operator==(const EvalFailure&) const = default;
};

// Frame validity quantifies over every valuation of the free variables with
// world sets.  That enumerates (2^n)^k candidates; anything past 2^24 raises
// ResourceLimitError.
inline constexpr int kValuationBits = 24;

// Least (valuation, world) where the formula fails, or nullopt when it is
// frame-valid.  Valuations are ordered as integer tuples, one world-set mask
// per variable in lexicographic name order (first name most significant);
// ties break on the world index.
std::optional<EvalFailure> frame_find_failure(const Frame& frame, const Formula& f);

bool frame_valid(const Frame& frame, const Formula& f);

}  // namespace modal
