#ifndef STREAMFIX_ENTAILMENT_H_
#define STREAMFIX_ENTAILMENT_H_

#include <cstddef>

#include "streamfix/formula.h"
#include "streamfix/stream.h"

namespace streamfix {

// Background data Γ and data stream D of an evaluation.
struct Context {
  Stream data;
  AtomSet gamma;
};

// Throws DomainError when Γ contains something that is not a plain atom name
// (in particular the keyword for true).
void ValidateBackground(const AtomSet& gamma);

// Refined entailment I,t |= f: box and diamond range over the support of the
// (windowed) stream, @ over every time point >= 1.
bool Entails(const Stream& stream, TimePoint t, const Formula& f,
             const AtomSet& gamma);
bool Entails(const StreamView& view, TimePoint t, const Formula& f,
             const AtomSet& gamma);

// Entailment I,T,t |= f relative to a fixed bounded interval T: box and
// diamond range over T and @t' requires t' in T. Throws DomainError unless T
// is bounded and contains t.
bool EntailsFixed(const Stream& stream, const Interval& range, TimePoint t,
                  const Formula& f, const AtomSet& gamma);

enum class Truth { kFalse, kTrue, kUnknown };

// Sound bounds for a 3-valued stream: kTrue (kFalse) only if every stream K
// between lower and upper entails (does not entail) f.
Truth EvaluateBounds(const ThreeValuedStream& p, TimePoint t, const Formula& f,
                     const AtomSet& gamma);

inline constexpr std::size_t kDefaultThreeValuedBound = 20;

// (I,J),t |= f iff K,t |= f for every K with I <= K <= J. Conjuncts are
// decided separately: monotone ones on the lower bound, negated monotone ones
// on the upper bound, others by EvaluateBounds and, if still open, by
// enumerating the undecided occurrences. Throws BoundExceeded when that
// enumeration would exceed `bound` occurrences.
bool Entails3(const ThreeValuedStream& p, TimePoint t, const Formula& f,
              const AtomSet& gamma,
              std::size_t bound = kDefaultThreeValuedBound);

// Reference implementation enumerating every K in [lower, upper].
bool Entails3Exhaustive(const ThreeValuedStream& p, TimePoint t,
                        const Formula& f, const AtomSet& gamma,
                        std::size_t bound = kDefaultThreeValuedBound);

}  // namespace streamfix

#endif  // STREAMFIX_ENTAILMENT_H_
