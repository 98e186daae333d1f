#ifndef STREAMFIX_FORMULA_H_
#define STREAMFIX_FORMULA_H_

#include <memory>
#include <string>
#include <vector>

#include "streamfix/stream.h"

namespace streamfix {

enum class FormulaKind {
  kTop,
  kAtom,
  kNeg,
  kAnd,
  kOr,
  kImplies,
  kDiamond,
  kBox,
  kAt,
  kWindow,
};

// Immutable formula tree. Copies share structure.
class Formula {
 public:
  // The default formula is true.
  Formula();

  static Formula Top();
  static Formula Atom(const streamfix::Atom& name);
  static Formula Neg(Formula operand);
  static Formula And(Formula lhs, Formula rhs);
  static Formula Or(Formula lhs, Formula rhs);
  static Formula Implies(Formula lhs, Formula rhs);
  static Formula Diamond(Formula operand);
  static Formula Box(Formula operand);
  // Throws DomainError for t = 0.
  static Formula At(TimePoint t, Formula operand);
  // l and r are independent radii into the past and the future.
  static Formula Window(ExtNat l, ExtNat r, Formula operand);

  // Left-nested conjunction; true for an empty list, the element itself for a
  // singleton.
  static Formula Conjunction(const std::vector<Formula>& conjuncts);

  FormulaKind kind() const;
  bool is(FormulaKind k) const { return kind() == k; }

  const streamfix::Atom& atom() const;  // kAtom
  const Formula& operand() const;       // kNeg, kDiamond, kBox, kAt, kWindow
  const Formula& lhs() const;           // kAnd, kOr, kImplies
  const Formula& rhs() const;           // kAnd, kOr, kImplies
  TimePoint time() const;               // kAt
  ExtNat left() const;                  // kWindow
  ExtNat right() const;                 // kWindow

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);

  std::shared_ptr<const Node> node_;
};

struct Classification {
  bool box_free = true;
  bool monotone = true;
  bool normal = true;

  friend bool operator==(const Classification&,
                         const Classification&) = default;
};

// box-free: no box. monotone: no negation, implication or box. normal: no
// negation, disjunction, implication or diamond.
Classification Classify(const Formula& f);
inline bool IsNormal(const Formula& f) { return Classify(f).normal; }
inline bool IsMonotone(const Formula& f) { return Classify(f).monotone; }
inline bool IsBoxFree(const Formula& f) { return Classify(f).box_free; }
bool ContainsKind(const Formula& f, FormulaKind kind);

AtomSet AtomsOf(const Formula& f);
// Number of nodes.
std::size_t FormulaSize(const Formula& f);

// Splits nested conjunctions into their conjuncts, left to right.
std::vector<Formula> Conjuncts(const Formula& f);

// Sound syntactic check that the normal formula f has a t-model and that the
// model operator builds one. Tracks the range of time points reachable through
// the enclosing windows; an atom outside Γ must be evaluated inside it. May
// reject some consistent formulas. Throws DomainError for non-normal f.
bool CheckTConsistent(const Formula& f, TimePoint t, const AtomSet& gamma = {});

// head :- pos_1, ..., pos_j, not neg_1, ..., not neg_k.
struct Rule {
  Formula head;
  std::vector<Formula> positive;
  std::vector<Formula> negative;

  friend bool operator==(const Rule&, const Rule&) = default;
};

// Throws DomainError when head is not normal. A rule without body literals
// becomes a fact with the single positive literal true.
Rule MakeRule(Formula head, std::vector<Formula> positive = {},
              std::vector<Formula> negative = {});
inline Rule MakeFact(Formula head) { return MakeRule(std::move(head)); }

bool IsFact(const Rule& r);
// B(r): the positive literals conjoined with the negated negative literals.
Formula BodyFormula(const Rule& r);
// Body literals as formulas, negative ones wrapped in a negation.
std::vector<Formula> BodyLiterals(const Rule& r);

struct Program {
  std::vector<Rule> rules;

  friend bool operator==(const Program&, const Program&) = default;
};

AtomSet AtomsOf(const Program& p);
AtomSet HeadAtoms(const Program& p);
// An ordinary rule only uses atoms (a fact's body true is allowed).
bool IsOrdinary(const Program& p);
// Largest finite window bound occurring anywhere in the program.
std::uint64_t MaxFiniteWindowRadius(const Program& p);
// Largest @ time point occurring anywhere in the program, 0 when none.
TimePoint MaxAtTime(const Program& p);

std::string ToString(const Formula& f);
std::string ToString(const Rule& r);
std::string ToString(const Program& p);

}  // namespace streamfix

#endif  // STREAMFIX_FORMULA_H_
