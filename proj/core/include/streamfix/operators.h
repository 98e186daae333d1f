#ifndef STREAMFIX_OPERATORS_H_
#define STREAMFIX_OPERATORS_H_

#include <cstddef>
#include <vector>

#include "streamfix/entailment.h"
#include "streamfix/formula.h"
#include "streamfix/stream.h"

namespace streamfix {

// Partial model operator M_{I,t}. Atoms outside Γ become {a}_t, Γ-atoms and
// true contribute nothing, conjunction is union, box collects the operand
// over the support of I, @ moves the evaluation point and a window narrows
// the view of I. Throws DomainError for non-normal formulas.
Stream PartialModel(const Stream& stream, TimePoint t, const Formula& f,
                    const AtomSet& gamma);
Stream PartialModel(const StreamView& view, TimePoint t, const Formula& f,
                    const AtomSet& gamma);

// Model operator MM_{I,t}(f) = M_{M_{I,t}(f),t}(f).
Stream ModelOp(const Stream& stream, TimePoint t, const Formula& f,
               const AtomSet& gamma);

// Box elimination relative to I: box g becomes the conjunction of @u g_{I,u}
// over u in supp I (true when the support is empty); windows translate their
// operand against the windowed view. The result is box-free.
Formula Translate(const Formula& f, const Stream& stream, TimePoint t);

// Indices of the rules whose bodies hold.
std::vector<std::size_t> FiredRules(const Program& program,
                                    const Stream& stream, TimePoint t,
                                    const AtomSet& gamma);
std::vector<std::size_t> FiredRules(const Program& program,
                                    const ThreeValuedStream& p, TimePoint t,
                                    const AtomSet& gamma,
                                    std::size_t bound = kDefaultThreeValuedBound);

// Conjunction of the heads of the selected rules, in source order.
Formula HeadConjunction(const Program& program,
                        const std::vector<std::size_t>& rules);

// Van Emden-Kowalski operator: D ∪ MM_{I,t}(heads of rules firing in I).
// Throws DomainError unless D is a substream of I.
Stream Tp(const Program& program, const Stream& data, const AtomSet& gamma,
          TimePoint t, const Stream& stream);

// Fitting operator: D ∪ MM_{lower,t}(heads of rules whose bodies hold in the
// 3-valued stream).
Stream Phi(const Program& program, const Stream& data, const AtomSet& gamma,
           TimePoint t, const ThreeValuedStream& p,
           std::size_t bound = kDefaultThreeValuedBound);

// Stages K_0 = {}, K_{n+1} = Phi(K_n, I), ending with the repeated stage.
struct FixpointTrace {
  std::vector<Stream> stages;
  bool converged = false;

  const Stream& Fixpoint() const { return stages.back(); }
};

// Least fixed point of Phi(., I). Throws DomainError when I is not a t-model
// of the program (T_P(I) not contained in I).
FixpointTrace PhiDagger(const Program& program, const Stream& data,
                        const AtomSet& gamma, TimePoint t, const Stream& model,
                        std::size_t bound = kDefaultThreeValuedBound);

}  // namespace streamfix

#endif  // STREAMFIX_OPERATORS_H_
