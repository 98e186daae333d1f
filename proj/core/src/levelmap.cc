#include "streamfix/levelmap.h"

#include <string>

#include "streamfix/entailment.h"
#include "streamfix/errors.h"
#include "streamfix/operators.h"

namespace streamfix {

Stream Partitioning::Union() const { return Prefix(parts.size()); }

Stream Partitioning::Prefix(std::size_t level) const {
  Stream result;
  for (std::size_t i = 1; i < level && i < parts.size(); ++i) {
    result = streamfix::Union(result, parts[i]);
  }
  return result;
}

void ValidatePartitioning(const Partitioning& s) {
  if (s.parts.empty()) throw DomainError("partitioning has no level 0");
  if (!s.parts[0].empty()) throw DomainError("level 0 must be empty");
  Stream seen;
  for (std::size_t i = 1; i < s.parts.size(); ++i) {
    if (s.parts[i].empty()) {
      throw DomainError("level " + std::to_string(i) + " is empty");
    }
    for (const auto& c : s.parts[i].Cells()) {
      if (seen.Contains(c.time, c.atom)) {
        throw DomainError("level " + std::to_string(i) + " repeats " + c.atom +
                          " at " + std::to_string(c.time));
      }
    }
    seen = Union(seen, s.parts[i]);
  }
}

std::optional<Partitioning> ExtractLevelMapping(const Program& program,
                                                const Stream& data,
                                                const AtomSet& gamma,
                                                TimePoint t,
                                                const Stream& stream,
                                                const SearchBounds& bounds) {
  if (!IsTModel(program, stream, t, data, gamma)) {
    throw DomainError(ToString(stream) + " is not a " + std::to_string(t) +
                      "-model of the program");
  }
  const FixpointTrace trace =
      PhiDagger(program, data, gamma, t, stream, bounds.three_valued);
  if (trace.Fixpoint() != stream) return std::nullopt;
  Partitioning s{{Stream()}};
  for (std::size_t i = 1; i < trace.stages.size(); ++i) {
    Stream diff = Difference(trace.stages[i], trace.stages[i - 1]);
    if (!diff.empty()) s.parts.push_back(std::move(diff));
  }
  return s;
}

namespace {

template <typename Justified>
LevelMappingReport Verify(const Partitioning& s, const Program& program,
                          const Stream& data, const AtomSet& gamma,
                          TimePoint t, Justified&& justified) {
  ValidatePartitioning(s);
  const Stream whole = s.Union();
  LevelMappingReport report;
  for (std::size_t i = 1; i < s.parts.size(); ++i) {
    const Stream reach = justified(s.Prefix(i), whole);
    const Stream missing = Difference(s.parts[i], reach);
    if (!missing.empty()) {
      report.first_violation = i;
      report.offending = missing.Cells();
      return report;
    }
  }
  report.valid = true;
  report.total = IsTModel(program, whole, t, data, gamma);
  return report;
}

}  // namespace

LevelMappingReport VerifyLevelMapping(const Partitioning& s,
                                      const Program& program,
                                      const Stream& data, const AtomSet& gamma,
                                      TimePoint t,
                                      const SearchBounds& bounds) {
  return Verify(s, program, data, gamma, t,
                [&](const Stream& prefix, const Stream& whole) {
                  return Phi(program, data, gamma, t,
                             ThreeValuedStream(prefix, whole),
                             bounds.three_valued);
                });
}

LevelMappingReport VerifyLevelMappingExpanded(const Partitioning& s,
                                              const Program& program,
                                              const Stream& data,
                                              const AtomSet& gamma,
                                              TimePoint t,
                                              const SearchBounds& bounds) {
  return Verify(
      s, program, data, gamma, t,
      [&](const Stream& prefix, const Stream& whole) {
        const ThreeValuedStream p(prefix, whole);
        std::vector<Formula> heads;
        for (const auto& rule : program.rules) {
          if (Entails3Exhaustive(p, t, BodyFormula(rule), gamma,
                                 bounds.enumeration)) {
            heads.push_back(rule.head);
          }
        }
        return Union(data, ModelOp(prefix, t, Formula::Conjunction(heads),
                                   gamma));
      });
}

bool DetectCircular(const Program& program, const Stream& data,
                    const AtomSet& gamma, TimePoint t, const Stream& stream,
                    const SearchBounds& bounds) {
  return IsTAnswerStream(program, stream, t, data, gamma, bounds) &&
         !IsPhiAnswerStream(program, stream, t, data, gamma, bounds);
}

}  // namespace streamfix
