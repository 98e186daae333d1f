#include "streamfix/entailment.h"

#include <algorithm>

#include "streamfix/errors.h"

namespace streamfix {

void ValidateBackground(const AtomSet& gamma) {
  for (const auto& a : gamma) {
    if (a.empty() || a == "true") {
      throw DomainError("background data must consist of atoms, got '" + a +
                        "'");
    }
  }
}

bool Entails(const StreamView& view, TimePoint t, const Formula& f,
             const AtomSet& gamma) {
  switch (f.kind()) {
    case FormulaKind::kTop:
      return true;
    case FormulaKind::kAtom:
      return gamma.count(f.atom()) > 0 || view.Holds(t, f.atom());
    case FormulaKind::kNeg:
      return !Entails(view, t, f.operand(), gamma);
    case FormulaKind::kAnd:
      return Entails(view, t, f.lhs(), gamma) &&
             Entails(view, t, f.rhs(), gamma);
    case FormulaKind::kOr:
      return Entails(view, t, f.lhs(), gamma) ||
             Entails(view, t, f.rhs(), gamma);
    case FormulaKind::kImplies:
      return !Entails(view, t, f.lhs(), gamma) ||
             Entails(view, t, f.rhs(), gamma);
    case FormulaKind::kDiamond: {
      const Interval support = view.Support();
      if (support.empty()) return false;
      for (TimePoint u = support.lo(); u <= support.hi().value(); ++u) {
        if (Entails(view, u, f.operand(), gamma)) return true;
      }
      return false;
    }
    case FormulaKind::kBox: {
      const Interval support = view.Support();
      if (support.empty()) return true;
      for (TimePoint u = support.lo(); u <= support.hi().value(); ++u) {
        if (!Entails(view, u, f.operand(), gamma)) return false;
      }
      return true;
    }
    case FormulaKind::kAt:
      return Entails(view, f.time(), f.operand(), gamma);
    case FormulaKind::kWindow:
      return Entails(view.Window(f.left(), f.right(), t), t, f.operand(),
                     gamma);
  }
  return false;
}

bool Entails(const Stream& stream, TimePoint t, const Formula& f,
             const AtomSet& gamma) {
  return Entails(StreamView(stream), t, f, gamma);
}

namespace {

bool EntailsFixedView(const StreamView& view, const Interval& range,
                      TimePoint t, const Formula& f, const AtomSet& gamma) {
  switch (f.kind()) {
    case FormulaKind::kTop:
      return true;
    case FormulaKind::kAtom:
      return gamma.count(f.atom()) > 0 || view.Holds(t, f.atom());
    case FormulaKind::kNeg:
      return !EntailsFixedView(view, range, t, f.operand(), gamma);
    case FormulaKind::kAnd:
      return EntailsFixedView(view, range, t, f.lhs(), gamma) &&
             EntailsFixedView(view, range, t, f.rhs(), gamma);
    case FormulaKind::kOr:
      return EntailsFixedView(view, range, t, f.lhs(), gamma) ||
             EntailsFixedView(view, range, t, f.rhs(), gamma);
    case FormulaKind::kImplies:
      return !EntailsFixedView(view, range, t, f.lhs(), gamma) ||
             EntailsFixedView(view, range, t, f.rhs(), gamma);
    case FormulaKind::kDiamond:
      for (TimePoint u : range.Points()) {
        if (EntailsFixedView(view, range, u, f.operand(), gamma)) return true;
      }
      return false;
    case FormulaKind::kBox:
      for (TimePoint u : range.Points()) {
        if (!EntailsFixedView(view, range, u, f.operand(), gamma)) return false;
      }
      return true;
    case FormulaKind::kAt:
      return range.Contains(f.time()) &&
             EntailsFixedView(view, range, f.time(), f.operand(), gamma);
    case FormulaKind::kWindow:
      return EntailsFixedView(view.Window(f.left(), f.right(), t), range, t,
                              f.operand(), gamma);
  }
  return false;
}

}  // namespace

bool EntailsFixed(const Stream& stream, const Interval& range, TimePoint t,
                  const Formula& f, const AtomSet& gamma) {
  if (!range.bounded()) {
    throw DomainError("fixed-interval entailment needs a bounded interval, got " +
                      ToString(range));
  }
  if (!range.Contains(t)) {
    throw DomainError("time point " + std::to_string(t) + " is not in " +
                      ToString(range));
  }
  return EntailsFixedView(StreamView(stream), range, t, f, gamma);
}

namespace {

Truth Not(Truth v) {
  switch (v) {
    case Truth::kTrue: return Truth::kFalse;
    case Truth::kFalse: return Truth::kTrue;
    default: return Truth::kUnknown;
  }
}

Truth And(Truth a, Truth b) {
  if (a == Truth::kFalse || b == Truth::kFalse) return Truth::kFalse;
  if (a == Truth::kTrue && b == Truth::kTrue) return Truth::kTrue;
  return Truth::kUnknown;
}

Truth Or(Truth a, Truth b) { return Not(And(Not(a), Not(b))); }

// The lower and upper view share one window range.
Truth Bounds(const StreamView& lower, const StreamView& upper, TimePoint t,
             const Formula& f, const AtomSet& gamma) {
  switch (f.kind()) {
    case FormulaKind::kTop:
      return Truth::kTrue;
    case FormulaKind::kAtom:
      if (gamma.count(f.atom()) > 0 || lower.Holds(t, f.atom()))
        return Truth::kTrue;
      return upper.Holds(t, f.atom()) ? Truth::kUnknown : Truth::kFalse;
    case FormulaKind::kNeg:
      return Not(Bounds(lower, upper, t, f.operand(), gamma));
    case FormulaKind::kAnd:
      return And(Bounds(lower, upper, t, f.lhs(), gamma),
                 Bounds(lower, upper, t, f.rhs(), gamma));
    case FormulaKind::kOr:
      return Or(Bounds(lower, upper, t, f.lhs(), gamma),
                Bounds(lower, upper, t, f.rhs(), gamma));
    case FormulaKind::kImplies:
      return Or(Not(Bounds(lower, upper, t, f.lhs(), gamma)),
                Bounds(lower, upper, t, f.rhs(), gamma));
    case FormulaKind::kBox:
    case FormulaKind::kDiamond: {
      // Every K has lower.Support() <= supp K <= upper.Support().
      const bool is_box = f.is(FormulaKind::kBox);
      const Interval inner = lower.Support();
      const Interval outer = upper.Support();
      bool all_decided = true;  // value at every outer point is the neutral one
      bool forced = false;      // an inner point carries the absorbing value
      const Truth neutral = is_box ? Truth::kTrue : Truth::kFalse;
      const Truth absorbing = is_box ? Truth::kFalse : Truth::kTrue;
      for (TimePoint u : outer.Points()) {
        const Truth v = Bounds(lower, upper, u, f.operand(), gamma);
        if (v != neutral) all_decided = false;
        if (v == absorbing && inner.Contains(u)) forced = true;
      }
      if (all_decided) return neutral;
      if (forced) return absorbing;
      return Truth::kUnknown;
    }
    case FormulaKind::kAt:
      return Bounds(lower, upper, f.time(), f.operand(), gamma);
    case FormulaKind::kWindow:
      return Bounds(lower.Window(f.left(), f.right(), t),
                    upper.Window(f.left(), f.right(), t), t, f.operand(),
                    gamma);
  }
  return Truth::kUnknown;
}

bool AllExtensionsEntail(const ThreeValuedStream& p, TimePoint t,
                         const Formula& f, const AtomSet& gamma,
                         const std::vector<Cell>& open, std::size_t bound) {
  if (open.size() > bound) {
    throw BoundExceeded("3-valued entailment enumeration", open.size(), bound);
  }
  return ForEachCellSubset(open, bound, [&](const std::vector<Cell>& chosen) {
    Stream k = p.lower();
    for (const auto& c : chosen) k.Insert(c.time, c.atom);
    return Entails(k, t, f, gamma);
  });
}

bool Entails3Conjunct(const ThreeValuedStream& p, TimePoint t,
                      const Formula& f, const AtomSet& gamma,
                      std::size_t bound) {
  if (IsMonotone(f)) return Entails(p.lower(), t, f, gamma);
  if (f.is(FormulaKind::kNeg) && IsMonotone(f.operand())) {
    return !Entails(p.upper(), t, f.operand(), gamma);
  }
  const Truth v = EvaluateBounds(p, t, f, gamma);
  if (v != Truth::kUnknown) return v == Truth::kTrue;

  std::vector<Cell> open = Difference(p.upper(), p.lower()).Cells();
  if (!ContainsKind(f, FormulaKind::kBox) &&
      !ContainsKind(f, FormulaKind::kDiamond)) {
    // Without box and diamond only memberships of f's own atoms are read.
    const AtomSet atoms = AtomsOf(f);
    std::erase_if(open, [&](const Cell& c) { return atoms.count(c.atom) == 0; });
  }
  return AllExtensionsEntail(p, t, f, gamma, open, bound);
}

}  // namespace

Truth EvaluateBounds(const ThreeValuedStream& p, TimePoint t, const Formula& f,
                     const AtomSet& gamma) {
  return Bounds(StreamView(p.lower()), StreamView(p.upper()), t, f, gamma);
}

bool Entails3(const ThreeValuedStream& p, TimePoint t, const Formula& f,
              const AtomSet& gamma, std::size_t bound) {
  if (p.IsExact()) return Entails(p.lower(), t, f, gamma);
  for (const auto& conjunct : Conjuncts(f)) {
    if (!Entails3Conjunct(p, t, conjunct, gamma, bound)) return false;
  }
  return true;
}

bool Entails3Exhaustive(const ThreeValuedStream& p, TimePoint t,
                        const Formula& f, const AtomSet& gamma,
                        std::size_t bound) {
  return AllExtensionsEntail(p, t, f, gamma,
                             Difference(p.upper(), p.lower()).Cells(), bound);
}

}  // namespace streamfix
