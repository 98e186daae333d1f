#include "streamfix/operators.h"

#include <algorithm>

#include "streamfix/errors.h"

namespace streamfix {
namespace {

[[noreturn]] void RejectNonNormal(const Formula& f) {
  throw DomainError("model operator requires a normal formula: " +
                    ToString(f));
}

void CollectPartialModel(const StreamView& view, TimePoint t, const Formula& f,
                         const AtomSet& gamma, Stream& out) {
  switch (f.kind()) {
    case FormulaKind::kTop:
      return;
    case FormulaKind::kAtom:
      if (gamma.count(f.atom()) == 0) out.Insert(t, f.atom());
      return;
    case FormulaKind::kAnd:
      CollectPartialModel(view, t, f.lhs(), gamma, out);
      CollectPartialModel(view, t, f.rhs(), gamma, out);
      return;
    case FormulaKind::kBox: {
      const Interval support = view.Support();
      for (TimePoint u : support.Points()) {
        CollectPartialModel(view, u, f.operand(), gamma, out);
      }
      return;
    }
    case FormulaKind::kAt:
      CollectPartialModel(view, f.time(), f.operand(), gamma, out);
      return;
    case FormulaKind::kWindow:
      CollectPartialModel(view.Window(f.left(), f.right(), t), t, f.operand(),
                          gamma, out);
      return;
    default:
      RejectNonNormal(f);
  }
}

Formula TranslateView(const Formula& f, const StreamView& view, TimePoint t) {
  switch (f.kind()) {
    case FormulaKind::kTop:
    case FormulaKind::kAtom:
      return f;
    case FormulaKind::kAnd:
      return Formula::And(TranslateView(f.lhs(), view, t),
                          TranslateView(f.rhs(), view, t));
    case FormulaKind::kBox: {
      std::vector<Formula> conjuncts;
      for (TimePoint u : view.Support().Points()) {
        conjuncts.push_back(Formula::At(u, TranslateView(f.operand(), view, u)));
      }
      return Formula::Conjunction(conjuncts);
    }
    case FormulaKind::kAt:
      return Formula::At(f.time(), TranslateView(f.operand(), view, f.time()));
    case FormulaKind::kWindow:
      return Formula::Window(
          f.left(), f.right(),
          TranslateView(f.operand(), view.Window(f.left(), f.right(), t), t));
    default:
      RejectNonNormal(f);
  }
}

}  // namespace

Stream PartialModel(const StreamView& view, TimePoint t, const Formula& f,
                    const AtomSet& gamma) {
  Stream out;
  CollectPartialModel(view, t, f, gamma, out);
  return out;
}

Stream PartialModel(const Stream& stream, TimePoint t, const Formula& f,
                    const AtomSet& gamma) {
  return PartialModel(StreamView(stream), t, f, gamma);
}

Stream ModelOp(const Stream& stream, TimePoint t, const Formula& f,
               const AtomSet& gamma) {
  const Stream first = PartialModel(stream, t, f, gamma);
  return PartialModel(first, t, f, gamma);
}

Formula Translate(const Formula& f, const Stream& stream, TimePoint t) {
  return TranslateView(f, StreamView(stream), t);
}

std::vector<std::size_t> FiredRules(const Program& program,
                                    const Stream& stream, TimePoint t,
                                    const AtomSet& gamma) {
  std::vector<std::size_t> fired;
  for (std::size_t i = 0; i < program.rules.size(); ++i) {
    if (Entails(stream, t, BodyFormula(program.rules[i]), gamma)) {
      fired.push_back(i);
    }
  }
  return fired;
}

std::vector<std::size_t> FiredRules(const Program& program,
                                    const ThreeValuedStream& p, TimePoint t,
                                    const AtomSet& gamma, std::size_t bound) {
  std::vector<std::size_t> fired;
  for (std::size_t i = 0; i < program.rules.size(); ++i) {
    if (Entails3(p, t, BodyFormula(program.rules[i]), gamma, bound)) {
      fired.push_back(i);
    }
  }
  return fired;
}

Formula HeadConjunction(const Program& program,
                        const std::vector<std::size_t>& rules) {
  std::vector<std::size_t> order(rules);
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  std::vector<Formula> heads;
  heads.reserve(order.size());
  for (std::size_t i : order) heads.push_back(program.rules.at(i).head);
  return Formula::Conjunction(heads);
}

Stream Tp(const Program& program, const Stream& data, const AtomSet& gamma,
          TimePoint t, const Stream& stream) {
  if (!IsSubstream(data, stream)) {
    throw DomainError("T_P requires an interpretation stream containing D");
  }
  const Formula heads =
      HeadConjunction(program, FiredRules(program, stream, t, gamma));
  return Union(data, ModelOp(stream, t, heads, gamma));
}

Stream Phi(const Program& program, const Stream& data, const AtomSet& gamma,
           TimePoint t, const ThreeValuedStream& p, std::size_t bound) {
  const Formula heads =
      HeadConjunction(program, FiredRules(program, p, t, gamma, bound));
  return Union(data, ModelOp(p.lower(), t, heads, gamma));
}

FixpointTrace PhiDagger(const Program& program, const Stream& data,
                        const AtomSet& gamma, TimePoint t, const Stream& model,
                        std::size_t bound) {
  if (!IsSubstream(data, model) ||
      !IsSubstream(Tp(program, data, gamma, t, model), model)) {
    throw DomainError(ToString(model) + " is not a " + std::to_string(t) +
                      "-model of the program");
  }
  FixpointTrace trace;
  trace.stages.push_back(Stream());
  // Every stage lies in [{}, model], so the chain stops after at most
  // |model| + 1 strict increases.
  const std::size_t limit = model.Size() + 2;
  for (std::size_t i = 0; i < limit; ++i) {
    const Stream& current = trace.stages.back();
    if (!IsSubstream(current, model)) {
      throw DomainError("Fitting iteration left the interval below " +
                        ToString(model) + "; is every head t-consistent?");
    }
    Stream next =
        Phi(program, data, gamma, t, ThreeValuedStream(current, model), bound);
    const bool done = next == current;
    trace.stages.push_back(std::move(next));
    if (done) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

}  // namespace streamfix
