#include "modal/semantics.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace modal {

bool eval(const Frame& frame, const Valuation& valuation, int world, const Formula& f) {
  if (world < 0 || world >= frame.n_worlds())
    throw std::invalid_argument("world " + std::to_string(world) +
                                " out of range for " +
                                std::to_string(frame.n_worlds()) + " worlds");
  switch (f.kind()) {
    case Formula::Kind::PropVar: {
      const Word* worlds = valuation.find(f.var_name());
      if (!worlds)
        throw std::invalid_argument("unbound propositional variable '" + f.var_name() + "'");
      return (*worlds >> world) & 1u;
    }
    case Formula::Kind::Top:
      return true;
    case Formula::Kind::Bottom:
      return false;
    case Formula::Kind::Not:
      return !eval(frame, valuation, world, f.child());
    case Formula::Kind::And:
      return eval(frame, valuation, world, f.left()) &&
             eval(frame, valuation, world, f.right());
    case Formula::Kind::Or:
      return eval(frame, valuation, world, f.left()) ||
             eval(frame, valuation, world, f.right());
    case Formula::Kind::Implies:
      return !eval(frame, valuation, world, f.left()) ||
             eval(frame, valuation, world, f.right());
    case Formula::Kind::Iff:
      return eval(frame, valuation, world, f.left()) ==
             eval(frame, valuation, world, f.right());
    case Formula::Kind::Box: {
      Word succ = frame.relation(f.rel_index()).row(world);
      while (succ) {
        const int v = std::countr_zero(succ);
        succ &= succ - 1;
        if (!eval(frame, valuation, v, f.child())) return false;
      }
      return true;
    }
    case Formula::Kind::Dia: {
      Word succ = frame.relation(f.rel_index()).row(world);
      while (succ) {
        const int v = std::countr_zero(succ);
        succ &= succ - 1;
        if (eval(frame, valuation, v, f.child())) return true;
      }
      return false;
    }
  }
  throw std::logic_error("unhandled formula kind");
}

Word eval_set(const Frame& frame, const Valuation& valuation, const Formula& f) {
  const int n = frame.n_worlds();
  const Word full = world_mask(n);
  switch (f.kind()) {
    case Formula::Kind::PropVar: {
      const Word* worlds = valuation.find(f.var_name());
      if (!worlds)
        throw std::invalid_argument("unbound propositional variable '" + f.var_name() + "'");
      return *worlds & full;
    }
    case Formula::Kind::Top:
      return full;
    case Formula::Kind::Bottom:
      return 0;
    case Formula::Kind::Not:
      return full & ~eval_set(frame, valuation, f.child());
    case Formula::Kind::And:
      return eval_set(frame, valuation, f.left()) & eval_set(frame, valuation, f.right());
    case Formula::Kind::Or:
      return eval_set(frame, valuation, f.left()) | eval_set(frame, valuation, f.right());
    case Formula::Kind::Implies:
      return (full & ~eval_set(frame, valuation, f.left())) |
             eval_set(frame, valuation, f.right());
    case Formula::Kind::Iff: {
      const Word lhs = eval_set(frame, valuation, f.left());
      const Word rhs = eval_set(frame, valuation, f.right());
      return full & ~(lhs ^ rhs);
    }
    case Formula::Kind::Box: {
      const Word inner = eval_set(frame, valuation, f.child());
      const RelationMatrix& rel = frame.relation(f.rel_index());
      Word out = 0;
      for (int w = 0; w < n; ++w)
        if ((rel.row(w) & ~inner) == 0) out |= Word{1} << w;
      return out;
    }
    case Formula::Kind::Dia: {
      const Word inner = eval_set(frame, valuation, f.child());
      const RelationMatrix& rel = frame.relation(f.rel_index());
      Word out = 0;
      for (int w = 0; w < n; ++w)
        if (rel.row(w) & inner) out |= Word{1} << w;
      return out;
    }
  }
  throw std::logic_error("unhandled formula kind");
}

std::optional<EvalFailure> frame_find_failure(const Frame& frame, const Formula& f) {
  const int n = frame.n_worlds();
  const Word full = world_mask(n);

  const std::set<std::string> vars = f.free_vars();
  const int k = static_cast<int>(vars.size());
  if (k * n > kValuationBits)
    throw ResourceLimitError("frame validity would enumerate (2^" + std::to_string(n) +
                             ")^" + std::to_string(k) + " valuations, past the 2^" +
                             std::to_string(kValuationBits) + " cap");

  Valuation valuation;
  for (const std::string& name : vars) valuation.assign(name, 0);

  // One counter drives all variable masks: the first name takes the most
  // significant n bits, so counter order is exactly the documented
  // (valuation, world) order.
  const std::uint64_t total = std::uint64_t{1} << (n * k);
  for (std::uint64_t counter = 0; counter < total; ++counter) {
    int slot = k - 1;
    for (const std::string& name : vars) {
      valuation.assign(name, (counter >> (slot * n)) & full);
      --slot;
    }
    const Word truth = eval_set(frame, valuation, f);
    if (truth != full) {
      const int world = std::countr_one(truth);
      return EvalFailure{valuation, world};
    }
  }
  return std::nullopt;
}

bool frame_valid(const Frame& frame, const Formula& f) {
  return !frame_find_failure(frame, f).has_value();
}

}  // namespace modal
