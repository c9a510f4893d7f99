#pragma once

// Deliberately naive reference implementations used only by tests.  These
// follow the textbook definitions with plain loops and per-world recursion
// -- no bit tricks, no sharing with the production code paths -- so that
// agreement between the two is meaningful.

#include <stdexcept>
#include <vector>

#include "modal/formula.hpp"
#include "modal/kripke.hpp"

namespace oracle {

using modal::Condition;
using modal::Formula;
using modal::Frame;
using modal::Valuation;

inline bool condition_holds(const Frame& frame, int rel, Condition c) {
  const int n = frame.n_worlds();
  const auto r = [&](int s, int t) { return frame.relation(rel).at(s, t); };
  switch (c) {
    case Condition::Refl:
      for (int s = 0; s < n; ++s)
        if (!r(s, s)) return false;
      return true;
    case Condition::Sym:
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
          if (r(s, t) && !r(t, s)) return false;
      return true;
    case Condition::Ser:
      for (int s = 0; s < n; ++s) {
        bool any = false;
        for (int t = 0; t < n; ++t) any = any || r(s, t);
        if (!any) return false;
      }
      return true;
    case Condition::Trans:
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
          for (int u = 0; u < n; ++u)
            if (r(s, t) && r(t, u) && !r(s, u)) return false;
      return true;
    case Condition::Eucl:
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
          for (int u = 0; u < n; ++u)
            if (r(s, t) && r(s, u) && !r(t, u)) return false;
      return true;
  }
  throw std::logic_error("unknown condition");
}

// Denotation as a plain vector of per-world truth values.
inline std::vector<bool> denotation(const Frame& frame, const Valuation& valuation,
                                    const Formula& f) {
  const int n = frame.n_worlds();
  std::vector<bool> out(static_cast<size_t>(n), false);
  switch (f.kind()) {
    case Formula::Kind::PropVar: {
      const modal::Word* worlds = valuation.find(f.var_name());
      if (!worlds) throw std::invalid_argument("unbound variable");
      for (int w = 0; w < n; ++w) out[static_cast<size_t>(w)] = (*worlds >> w) & 1u;
      return out;
    }
    case Formula::Kind::Top:
      out.assign(static_cast<size_t>(n), true);
      return out;
    case Formula::Kind::Bottom:
      return out;
    case Formula::Kind::Not: {
      const auto inner = denotation(frame, valuation, f.child());
      for (int w = 0; w < n; ++w) out[static_cast<size_t>(w)] = !inner[static_cast<size_t>(w)];
      return out;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff: {
      const auto lhs = denotation(frame, valuation, f.left());
      const auto rhs = denotation(frame, valuation, f.right());
      for (int w = 0; w < n; ++w) {
        const bool a = lhs[static_cast<size_t>(w)];
        const bool b = rhs[static_cast<size_t>(w)];
        bool v = false;
        switch (f.kind()) {
          case Formula::Kind::And: v = a && b; break;
          case Formula::Kind::Or: v = a || b; break;
          case Formula::Kind::Implies: v = !a || b; break;
          default: v = a == b; break;
        }
        out[static_cast<size_t>(w)] = v;
      }
      return out;
    }
    case Formula::Kind::Box: {
      const auto inner = denotation(frame, valuation, f.child());
      for (int w = 0; w < n; ++w) {
        bool all = true;
        for (int v = 0; v < n; ++v)
          if (frame.relation(f.rel_index()).at(w, v) && !inner[static_cast<size_t>(v)])
            all = false;
        out[static_cast<size_t>(w)] = all;
      }
      return out;
    }
    case Formula::Kind::Dia: {
      const auto inner = denotation(frame, valuation, f.child());
      for (int w = 0; w < n; ++w) {
        bool any = false;
        for (int v = 0; v < n; ++v)
          if (frame.relation(f.rel_index()).at(w, v) && inner[static_cast<size_t>(v)])
            any = true;
        out[static_cast<size_t>(w)] = any;
      }
      return out;
    }
  }
  throw std::logic_error("unknown formula kind");
}

inline bool eval(const Frame& frame, const Valuation& valuation, int world,
                 const Formula& f) {
  return denotation(frame, valuation, f)[static_cast<size_t>(world)];
}

}  // namespace oracle
