#ifndef STREAMFIX_ANSWER_H_
#define STREAMFIX_ANSWER_H_

#include <cstddef>
#include <string>
#include <vector>

#include "streamfix/entailment.h"
#include "streamfix/formula.h"
#include "streamfix/operators.h"
#include "streamfix/stream.h"

namespace streamfix {

// Caps for the exhaustive searches.
struct SearchBounds {
  // Atom occurrences enumerated by substream/universe searches.
  std::size_t enumeration = kDefaultSubstreamBound;
  // Undecided occurrences enumerated by 3-valued entailment.
  std::size_t three_valued = kDefaultThreeValuedBound;
  // Rules for which every reduct is guessed.
  std::size_t reduct_rules = 20;
};

// Finite search space: every atom at every time point of a bounded horizon.
struct Universe {
  AtomSet atoms;
  Interval horizon;

  std::size_t CellCount() const;
  Stream Full() const;
};

// Atoms of the program and of D minus Γ; time points spanning supp D, t and
// every @ time point, widened by the largest finite window bound.
Universe DefaultUniverse(const Program& program, const Stream& data,
                         TimePoint t, const AtomSet& gamma);

std::vector<std::size_t> ReductIndices(const Program& program,
                                       const Stream& stream, TimePoint t,
                                       const AtomSet& gamma);
// P^{I,t}: the rules whose bodies I entails at t. May be empty.
Program Reduct(const Program& program, const Stream& stream, TimePoint t,
               const AtomSet& gamma);

bool IsTModelDirect(const Program& program, const Stream& stream, TimePoint t,
                    const Stream& data, const AtomSet& gamma);
bool IsTModelViaTp(const Program& program, const Stream& stream, TimePoint t,
                   const Stream& data, const AtomSet& gamma);
// D <= I and I,t |= B(r) -> H(r) for every rule. Evaluates both routes and
// throws DomainError if they disagree, which only happens for heads that are
// not t-consistent.
bool IsTModel(const Program& program, const Stream& stream, TimePoint t,
              const Stream& data, const AtomSet& gamma);

// Substream-minimal t-model of its own reduct, by exhaustive enumeration of
// the streams between D and I.
bool IsTAnswerStream(const Program& program, const Stream& stream, TimePoint t,
                     const Stream& data, const AtomSet& gamma,
                     const SearchBounds& bounds = {});

// The fixed-interval counterparts: model and answer stream relative to T.
bool IsTTModel(const Program& program, const Stream& stream,
               const Interval& range, TimePoint t, const Stream& data,
               const AtomSet& gamma);
bool IsTTAnswerStream(const Program& program, const Stream& stream,
                      const Interval& range, TimePoint t, const Stream& data,
                      const AtomSet& gamma, const SearchBounds& bounds = {});

// A t-model that is the least fixed point of Phi(., I).
bool IsPhiAnswerStream(const Program& program, const Stream& stream,
                       TimePoint t, const Stream& data, const AtomSet& gamma,
                       const SearchBounds& bounds = {});

enum class AnswerMode { kFlp, kFixpoint, kBeck };

std::string ToString(AnswerMode mode);

struct AnswerQuery {
  AnswerMode mode = AnswerMode::kFlp;
  Interval interval;  // the fixed interval T, kBeck only
};

// All answer streams I with D <= I <= U of the selected kind, sorted.
//
// kFlp and kFixpoint guess the reduct R: every model above D of the heads of
// R contains the least stream L with L = D ∪ M_{L,t}(H(R)), so when L already
// satisfies H(R) it is the only candidate with reduct R; otherwise the
// streams between L and U are searched. Candidates are then checked against
// the full definition. kBeck searches the cells inside T. Occurrences of
// atoms that no head mentions are never needed for minimal models and are
// not searched.
std::vector<Stream> EnumerateAnswerStreams(const Program& program, TimePoint t,
                                           const Stream& data,
                                           const AtomSet& gamma,
                                           const Universe& universe,
                                           const AnswerQuery& query,
                                           const SearchBounds& bounds = {});

// Reference search testing every stream between D and U.
std::vector<Stream> EnumerateAnswerStreamsExhaustive(
    const Program& program, TimePoint t, const Stream& data,
    const AtomSet& gamma, const Universe& universe, const AnswerQuery& query,
    const SearchBounds& bounds = {});

struct BoxplusTranslation {
  Program program;
  Atom marker;
};

// Wraps every head and body literal in the window selecting T = [t1, t2] at
// evaluation point t, i.e. [t - t1, t2 - t], and adds the facts @u marker
// for u in T. Throws DomainError for an empty or unbounded T, t outside T, or
// a marker already used by the program.
BoxplusTranslation BoxplusTranslate(const Program& program,
                                    const Interval& range, TimePoint t,
                                    const Atom& marker = "#");

// Gelfond-Lifschitz answer sets of an ordinary program by enumerating subsets
// of its atoms. Throws DomainError for non-ordinary programs and
// BoundExceeded above `bound` atoms.
std::vector<AtomSet> OrdinaryAnswerSets(const Program& program,
                                        std::size_t bound = 20);

}  // namespace streamfix

#endif  // STREAMFIX_ANSWER_H_
