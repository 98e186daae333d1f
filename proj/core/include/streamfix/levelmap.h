#ifndef STREAMFIX_LEVELMAP_H_
#define STREAMFIX_LEVELMAP_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "streamfix/answer.h"
#include "streamfix/formula.h"
#include "streamfix/stream.h"

namespace streamfix {

// (S_0, S_1, ..., S_m) with S_0 empty, the other parts nonempty and pairwise
// disjoint. The partitioning of the empty stream is (S_0) alone.
struct Partitioning {
  std::vector<Stream> parts;

  // Number of levels m.
  std::size_t Levels() const { return parts.empty() ? 0 : parts.size() - 1; }
  // S_1 ∪ ... ∪ S_m.
  Stream Union() const;
  // S_1 ∪ ... ∪ S_{level - 1}.
  Stream Prefix(std::size_t level) const;

  friend bool operator==(const Partitioning&, const Partitioning&) = default;
};

// Throws DomainError when the partitioning is structurally invalid.
void ValidatePartitioning(const Partitioning& s);

// The consecutive differences of the Phi trace of I with empty differences
// dropped, or nothing when I is not the least fixed point of Phi(., I).
// Throws DomainError when I is not a t-model.
std::optional<Partitioning> ExtractLevelMapping(const Program& program,
                                                const Stream& data,
                                                const AtomSet& gamma,
                                                TimePoint t,
                                                const Stream& stream,
                                                const SearchBounds& bounds = {});

struct LevelMappingReport {
  bool valid = false;
  bool total = false;
  // Smallest level i whose part is not justified by the levels below it.
  std::optional<std::size_t> first_violation;
  // Cells of that level lacking a justification.
  std::vector<Cell> offending;
};

// Checks S_i ⊆ Phi(S_1 ∪ ... ∪ S_{i-1}, I) for every level, I the union of
// all parts; total additionally requires I to be a t-model. Throws
// DomainError for a structurally invalid partitioning.
LevelMappingReport VerifyLevelMapping(const Partitioning& s,
                                      const Program& program,
                                      const Stream& data, const AtomSet& gamma,
                                      TimePoint t,
                                      const SearchBounds& bounds = {});

// Same verdicts via the head-by-head form: each level must be covered by D
// and MM over the prefix of the heads whose bodies every stream between the
// prefix and I entails, decided by exhaustive enumeration.
LevelMappingReport VerifyLevelMappingExpanded(const Partitioning& s,
                                              const Program& program,
                                              const Stream& data,
                                              const AtomSet& gamma,
                                              TimePoint t,
                                              const SearchBounds& bounds = {});

// I is a t-answer stream but not a Phi-answer stream.
bool DetectCircular(const Program& program, const Stream& data,
                    const AtomSet& gamma, TimePoint t, const Stream& stream,
                    const SearchBounds& bounds = {});

}  // namespace streamfix

#endif  // STREAMFIX_LEVELMAP_H_
