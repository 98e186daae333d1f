#include "streamfix/answer.h"

#include <algorithm>
#include <set>

#include "streamfix/errors.h"

namespace streamfix {

std::size_t Universe::CellCount() const {
  return atoms.size() * static_cast<std::size_t>(horizon.Length());
}

Stream Universe::Full() const {
  Stream s;
  for (TimePoint u : horizon.Points()) {
    for (const auto& a : atoms) s.Insert(u, a);
  }
  return s;
}

Universe DefaultUniverse(const Program& program, const Stream& data,
                         TimePoint t, const AtomSet& gamma) {
  Universe u;
  for (const auto& a : AtomsOf(program)) {
    if (gamma.count(a) == 0) u.atoms.insert(a);
  }
  for (const auto& a : data.Atoms()) u.atoms.insert(a);

  TimePoint lo = t;
  TimePoint hi = t;
  if (!data.empty()) {
    lo = std::min(lo, data.Support().lo());
    hi = std::max(hi, data.Support().hi().value());
  }
  hi = std::max(hi, MaxAtTime(program));
  const std::uint64_t radius = MaxFiniteWindowRadius(program);
  lo = lo > radius ? lo - radius : 1;
  u.horizon = Interval::Closed(lo, hi + radius);
  return u;
}

std::vector<std::size_t> ReductIndices(const Program& program,
                                       const Stream& stream, TimePoint t,
                                       const AtomSet& gamma) {
  return FiredRules(program, stream, t, gamma);
}

Program Reduct(const Program& program, const Stream& stream, TimePoint t,
               const AtomSet& gamma) {
  Program reduct;
  for (std::size_t i : ReductIndices(program, stream, t, gamma)) {
    reduct.rules.push_back(program.rules[i]);
  }
  return reduct;
}

bool IsTModelDirect(const Program& program, const Stream& stream, TimePoint t,
                    const Stream& data, const AtomSet& gamma) {
  if (!IsSubstream(data, stream)) return false;
  for (const auto& rule : program.rules) {
    if (Entails(stream, t, BodyFormula(rule), gamma) &&
        !Entails(stream, t, rule.head, gamma))
      return false;
  }
  return true;
}

bool IsTModelViaTp(const Program& program, const Stream& stream, TimePoint t,
                   const Stream& data, const AtomSet& gamma) {
  if (!IsSubstream(data, stream)) return false;
  return IsSubstream(Tp(program, data, gamma, t, stream), stream);
}

bool IsTModel(const Program& program, const Stream& stream, TimePoint t,
              const Stream& data, const AtomSet& gamma) {
  const bool direct = IsTModelDirect(program, stream, t, data, gamma);
  const bool via_tp = IsTModelViaTp(program, stream, t, data, gamma);
  if (direct != via_tp) {
    throw DomainError(
        "model check and T_P prefixed-point check disagree on " +
        ToString(stream) + " at t=" + std::to_string(t) +
        "; some rule head is not " + std::to_string(t) + "-consistent");
  }
  return direct;
}

namespace {

// True iff no stream J with D <= J < I satisfies `is_model`.
template <typename IsModel>
bool NoSmallerModel(const Stream& stream, const Stream& data,
                    std::size_t bound, IsModel&& is_model) {
  const std::vector<Cell> cells = Difference(stream, data).Cells();
  return ForEachCellSubset(cells, bound, [&](const std::vector<Cell>& chosen) {
    if (chosen.size() == cells.size()) return true;
    Stream smaller = data;
    for (const auto& c : chosen) smaller.Insert(c.time, c.atom);
    return !is_model(smaller);
  });
}

}  // namespace

bool IsTAnswerStream(const Program& program, const Stream& stream, TimePoint t,
                     const Stream& data, const AtomSet& gamma,
                     const SearchBounds& bounds) {
  if (!IsSubstream(data, stream)) return false;
  const Program reduct = Reduct(program, stream, t, gamma);
  if (!IsTModelDirect(reduct, stream, t, data, gamma)) return false;
  return NoSmallerModel(stream, data, bounds.enumeration, [&](const Stream& j) {
    return IsTModelDirect(reduct, j, t, data, gamma);
  });
}

bool IsTTModel(const Program& program, const Stream& stream,
               const Interval& range, TimePoint t, const Stream& data,
               const AtomSet& gamma) {
  if (!IsSubstream(data, stream)) return false;
  for (const auto& rule : program.rules) {
    if (EntailsFixed(stream, range, t, BodyFormula(rule), gamma) &&
        !EntailsFixed(stream, range, t, rule.head, gamma))
      return false;
  }
  return true;
}

bool IsTTAnswerStream(const Program& program, const Stream& stream,
                      const Interval& range, TimePoint t, const Stream& data,
                      const AtomSet& gamma, const SearchBounds& bounds) {
  if (!range.bounded() || !range.Contains(t)) {
    throw DomainError("time point " + std::to_string(t) +
                      " must lie in the bounded interval " + ToString(range));
  }
  if (!IsSubstream(data, stream)) return false;
  Program reduct;
  for (const auto& rule : program.rules) {
    if (EntailsFixed(stream, range, t, BodyFormula(rule), gamma)) {
      reduct.rules.push_back(rule);
    }
  }
  if (!IsTTModel(reduct, stream, range, t, data, gamma)) return false;
  return NoSmallerModel(stream, data, bounds.enumeration, [&](const Stream& j) {
    return IsTTModel(reduct, j, range, t, data, gamma);
  });
}

bool IsPhiAnswerStream(const Program& program, const Stream& stream,
                       TimePoint t, const Stream& data, const AtomSet& gamma,
                       const SearchBounds& bounds) {
  if (!IsTModel(program, stream, t, data, gamma)) return false;
  return PhiDagger(program, data, gamma, t, stream, bounds.three_valued)
             .Fixpoint() == stream;
}

std::string ToString(AnswerMode mode) {
  switch (mode) {
    case AnswerMode::kFlp: return "flp";
    case AnswerMode::kFixpoint: return "fixpoint";
    case AnswerMode::kBeck: return "beck";
  }
  return "?";
}

namespace {

void CheckUniverse(const Universe& universe, const Stream& data,
                   const AnswerQuery& query) {
  if (!universe.horizon.bounded()) {
    throw DomainError("universe horizon must be bounded");
  }
  if (!IsSubstream(data, universe.Full())) {
    throw DomainError("data stream " + ToString(data) +
                      " does not fit the universe");
  }
  if (query.mode == AnswerMode::kBeck && !query.interval.bounded()) {
    throw DomainError("beck mode needs a bounded interval T");
  }
}

bool Accepts(const Program& program, const Stream& stream, TimePoint t,
             const Stream& data, const AtomSet& gamma, const AnswerQuery& query,
             const SearchBounds& bounds) {
  switch (query.mode) {
    case AnswerMode::kFlp:
      return IsTAnswerStream(program, stream, t, data, gamma, bounds);
    case AnswerMode::kFixpoint:
      return IsPhiAnswerStream(program, stream, t, data, gamma, bounds);
    case AnswerMode::kBeck:
      return IsTTAnswerStream(program, stream, query.interval, t, data, gamma,
                              bounds);
  }
  return false;
}

// Calls visit(base ∪ subset) for every subset of the free cells.
template <typename Visit>
void ForEachExtension(const Stream& base, const std::vector<Cell>& free,
                      std::size_t bound, const char* what, Visit&& visit) {
  if (free.size() > bound) throw BoundExceeded(what, free.size(), bound);
  ForEachCellSubset(free, bound, [&](const std::vector<Cell>& chosen) {
    Stream s = base;
    for (const auto& c : chosen) s.Insert(c.time, c.atom);
    visit(s);
    return true;
  });
}

// Least stream L above D with L = D ∪ M_{L,t}(heads).
Stream LeastHeadClosure(const Formula& heads, const Stream& data, TimePoint t,
                        const AtomSet& gamma) {
  Stream current = data;
  while (true) {
    Stream next = Union(data, PartialModel(current, t, heads, gamma));
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace

std::vector<Stream> EnumerateAnswerStreams(const Program& program, TimePoint t,
                                           const Stream& data,
                                           const AtomSet& gamma,
                                           const Universe& universe,
                                           const AnswerQuery& query,
                                           const SearchBounds& bounds) {
  CheckUniverse(universe, data, query);
  const Stream full = universe.Full();
  AtomSet searchable;
  for (const auto& a : HeadAtoms(program)) {
    if (gamma.count(a) == 0 && universe.atoms.count(a) > 0) searchable.insert(a);
  }
  auto free_cells = [&](const Stream& base, const Interval& range) {
    std::vector<Cell> cells;
    for (const auto& c : Difference(full, base).Cells()) {
      if (searchable.count(c.atom) > 0 && range.Contains(c.time))
        cells.push_back(c);
    }
    return cells;
  };

  std::set<Stream> candidates;
  if (query.mode == AnswerMode::kBeck) {
    // Only time points in T are ever inspected.
    ForEachExtension(data, free_cells(data, query.interval), bounds.enumeration,
                     "answer-stream search cells",
                     [&](const Stream& s) { candidates.insert(s); });
  } else {
    const std::size_t n = program.rules.size();
    if (n > bounds.reduct_rules) {
      throw BoundExceeded("rules for reduct guessing", n, bounds.reduct_rules);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::size_t> chosen;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::uint64_t{1} << i)) chosen.push_back(i);
      }
      const Formula heads = HeadConjunction(program, chosen);
      const Stream least = LeastHeadClosure(heads, data, t, gamma);
      if (!IsSubstream(least, full)) continue;
      if (Entails(least, t, heads, gamma)) {
        candidates.insert(least);
        continue;
      }
      ForEachExtension(least, free_cells(least, universe.horizon),
                       bounds.enumeration, "answer-stream search cells",
                       [&](const Stream& s) { candidates.insert(s); });
    }
  }

  std::vector<Stream> result;
  for (const auto& candidate : candidates) {
    if (Accepts(program, candidate, t, data, gamma, query, bounds)) {
      result.push_back(candidate);
    }
  }
  return result;
}

std::vector<Stream> EnumerateAnswerStreamsExhaustive(
    const Program& program, TimePoint t, const Stream& data,
    const AtomSet& gamma, const Universe& universe, const AnswerQuery& query,
    const SearchBounds& bounds) {
  CheckUniverse(universe, data, query);
  std::vector<Stream> result;
  ForEachExtension(data, Difference(universe.Full(), data).Cells(),
                   bounds.enumeration, "universe cells", [&](const Stream& s) {
                     if (Accepts(program, s, t, data, gamma, query, bounds))
                       result.push_back(s);
                   });
  std::sort(result.begin(), result.end());
  return result;
}

BoxplusTranslation BoxplusTranslate(const Program& program,
                                    const Interval& range, TimePoint t,
                                    const Atom& marker) {
  if (!range.bounded()) {
    throw DomainError("translation needs a nonempty bounded interval, got " +
                      ToString(range));
  }
  if (!range.Contains(t)) {
    throw DomainError("time point " + std::to_string(t) + " is not in " +
                      ToString(range));
  }
  if (AtomsOf(program).count(marker) > 0) {
    throw DomainError("marker atom '" + marker + "' already occurs in the program");
  }
  const ExtNat left(t - range.lo());
  const ExtNat right(range.hi().value() - t);
  auto wrap = [&](const Formula& f) { return Formula::Window(left, right, f); };

  BoxplusTranslation result{{}, marker};
  for (const auto& rule : program.rules) {
    std::vector<Formula> positive;
    std::vector<Formula> negative;
    for (const auto& b : rule.positive) positive.push_back(wrap(b));
    for (const auto& b : rule.negative) negative.push_back(wrap(b));
    result.program.rules.push_back(
        MakeRule(wrap(rule.head), std::move(positive), std::move(negative)));
  }
  for (TimePoint u : range.Points()) {
    result.program.rules.push_back(
        MakeFact(Formula::At(u, Formula::Atom(marker))));
  }
  return result;
}

std::vector<AtomSet> OrdinaryAnswerSets(const Program& program,
                                        std::size_t bound) {
  if (!IsOrdinary(program)) {
    throw DomainError("answer sets are only defined here for ordinary programs");
  }
  const std::vector<Atom> atoms = [&] {
    const AtomSet set = AtomsOf(program);
    return std::vector<Atom>(set.begin(), set.end());
  }();
  if (atoms.size() > bound) {
    throw BoundExceeded("atoms for answer-set enumeration", atoms.size(), bound);
  }

  std::vector<AtomSet> result;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms.size());
       ++mask) {
    AtomSet candidate;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) candidate.insert(atoms[i]);
    }
    // Least model of the Gelfond-Lifschitz reduct P^candidate.
    AtomSet least;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& rule : program.rules) {
        const bool blocked = std::any_of(
            rule.negative.begin(), rule.negative.end(),
            [&](const Formula& b) { return candidate.count(b.atom()) > 0; });
        if (blocked) continue;
        const bool positive_holds = std::all_of(
            rule.positive.begin(), rule.positive.end(), [&](const Formula& b) {
              return b.is(FormulaKind::kTop) || least.count(b.atom()) > 0;
            });
        if (positive_holds && least.insert(rule.head.atom()).second) {
          changed = true;
        }
      }
    }
    if (least == candidate) result.push_back(candidate);
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace streamfix
