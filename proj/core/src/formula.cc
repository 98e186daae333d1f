#include "streamfix/formula.h"

#include <algorithm>
#include <sstream>
#include <utility>

#include "streamfix/errors.h"

namespace streamfix {

struct Formula::Node {
  FormulaKind kind = FormulaKind::kTop;
  streamfix::Atom atom;
  TimePoint time = 0;
  ExtNat left;
  ExtNat right;
  std::vector<Formula> children;
};

Formula::Formula() {
  static const auto top = std::make_shared<const Node>();
  node_ = top;
}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::Top() { return Formula(); }

Formula Formula::Atom(const streamfix::Atom& name) {
  if (name.empty()) throw DomainError("empty atom name");
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::kAtom;
  node->atom = name;
  return Formula(std::move(node));
}

namespace {

template <typename Node>
std::shared_ptr<Node> MakeNode(FormulaKind kind, std::vector<Formula> children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->children = std::move(children);
  return node;
}

}  // namespace

Formula Formula::Neg(Formula operand) {
  return Formula(MakeNode<Node>(FormulaKind::kNeg, {std::move(operand)}));
}

Formula Formula::And(Formula lhs, Formula rhs) {
  return Formula(
      MakeNode<Node>(FormulaKind::kAnd, {std::move(lhs), std::move(rhs)}));
}

Formula Formula::Or(Formula lhs, Formula rhs) {
  return Formula(
      MakeNode<Node>(FormulaKind::kOr, {std::move(lhs), std::move(rhs)}));
}

Formula Formula::Implies(Formula lhs, Formula rhs) {
  return Formula(
      MakeNode<Node>(FormulaKind::kImplies, {std::move(lhs), std::move(rhs)}));
}

Formula Formula::Diamond(Formula operand) {
  return Formula(MakeNode<Node>(FormulaKind::kDiamond, {std::move(operand)}));
}

Formula Formula::Box(Formula operand) {
  return Formula(MakeNode<Node>(FormulaKind::kBox, {std::move(operand)}));
}

Formula Formula::At(TimePoint t, Formula operand) {
  if (t == 0) throw DomainError("@ requires a time point >= 1");
  auto node = MakeNode<Node>(FormulaKind::kAt, {std::move(operand)});
  node->time = t;
  return Formula(std::move(node));
}

Formula Formula::Window(ExtNat l, ExtNat r, Formula operand) {
  auto node = MakeNode<Node>(FormulaKind::kWindow, {std::move(operand)});
  node->left = l;
  node->right = r;
  return Formula(std::move(node));
}

Formula Formula::Conjunction(const std::vector<Formula>& conjuncts) {
  if (conjuncts.empty()) return Top();
  Formula result = conjuncts.front();
  for (std::size_t i = 1; i < conjuncts.size(); ++i) {
    result = And(result, conjuncts[i]);
  }
  return result;
}

FormulaKind Formula::kind() const { return node_->kind; }
const streamfix::Atom& Formula::atom() const { return node_->atom; }
const Formula& Formula::operand() const { return node_->children.at(0); }
const Formula& Formula::lhs() const { return node_->children.at(0); }
const Formula& Formula::rhs() const { return node_->children.at(1); }
TimePoint Formula::time() const { return node_->time; }
ExtNat Formula::left() const { return node_->left; }
ExtNat Formula::right() const { return node_->right; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.atom == y.atom && x.time == y.time &&
         x.left == y.left && x.right == y.right && x.children == y.children;
}

Classification Classify(const Formula& f) {
  Classification c;
  switch (f.kind()) {
    case FormulaKind::kTop:
    case FormulaKind::kAtom:
      return c;
    case FormulaKind::kNeg:
      c = Classify(f.operand());
      c.monotone = false;
      c.normal = false;
      return c;
    case FormulaKind::kDiamond:
      c = Classify(f.operand());
      c.normal = false;
      return c;
    case FormulaKind::kBox:
      c = Classify(f.operand());
      c.box_free = false;
      c.monotone = false;
      return c;
    case FormulaKind::kAt:
    case FormulaKind::kWindow:
      return Classify(f.operand());
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
    case FormulaKind::kImplies: {
      Classification l = Classify(f.lhs());
      Classification r = Classify(f.rhs());
      c.box_free = l.box_free && r.box_free;
      c.monotone = l.monotone && r.monotone;
      c.normal = l.normal && r.normal;
      if (f.is(FormulaKind::kOr)) c.normal = false;
      if (f.is(FormulaKind::kImplies)) c.normal = c.monotone = false;
      return c;
    }
  }
  return c;
}

bool ContainsKind(const Formula& f, FormulaKind kind) {
  if (f.kind() == kind) return true;
  switch (f.kind()) {
    case FormulaKind::kTop:
    case FormulaKind::kAtom:
      return false;
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
    case FormulaKind::kImplies:
      return ContainsKind(f.lhs(), kind) || ContainsKind(f.rhs(), kind);
    default:
      return ContainsKind(f.operand(), kind);
  }
}

namespace {

void CollectAtoms(const Formula& f, AtomSet& out) {
  switch (f.kind()) {
    case FormulaKind::kTop:
      return;
    case FormulaKind::kAtom:
      out.insert(f.atom());
      return;
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
    case FormulaKind::kImplies:
      CollectAtoms(f.lhs(), out);
      CollectAtoms(f.rhs(), out);
      return;
    default:
      CollectAtoms(f.operand(), out);
  }
}

// Visits every node in prefix order.
template <typename Fn>
void Walk(const Formula& f, Fn&& fn) {
  fn(f);
  switch (f.kind()) {
    case FormulaKind::kTop:
    case FormulaKind::kAtom:
      return;
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
    case FormulaKind::kImplies:
      Walk(f.lhs(), fn);
      Walk(f.rhs(), fn);
      return;
    default:
      Walk(f.operand(), fn);
  }
}

}  // namespace

AtomSet AtomsOf(const Formula& f) {
  AtomSet atoms;
  CollectAtoms(f, atoms);
  return atoms;
}

std::size_t FormulaSize(const Formula& f) {
  std::size_t n = 0;
  Walk(f, [&](const Formula&) { ++n; });
  return n;
}

std::vector<Formula> Conjuncts(const Formula& f) {
  if (!f.is(FormulaKind::kAnd)) return {f};
  std::vector<Formula> result = Conjuncts(f.lhs());
  for (auto& c : Conjuncts(f.rhs())) result.push_back(std::move(c));
  return result;
}

namespace {

// Evaluation points beyond this behave like the last one checked: every @
// constant and every finite window edge relative to them lies behind.
TimePoint RepresentativeHorizon(const Formula& f, TimePoint from) {
  TimePoint max_at = 0;
  std::uint64_t radii = 0;
  Walk(f, [&](const Formula& g) {
    if (g.is(FormulaKind::kAt)) max_at = std::max(max_at, g.time());
    if (g.is(FormulaKind::kWindow)) {
      if (!g.left().is_infinite()) radii += g.left().value();
      if (!g.right().is_infinite()) radii += g.right().value();
    }
  });
  return std::max(from, max_at) + radii + 1;
}

bool Consistent(const Formula& f, TimePoint t, const Interval& reach,
                const AtomSet& gamma) {
  switch (f.kind()) {
    case FormulaKind::kTop:
      return true;
    case FormulaKind::kAtom:
      return gamma.count(f.atom()) > 0 || reach.Contains(t);
    case FormulaKind::kAnd:
      return Consistent(f.lhs(), t, reach, gamma) &&
             Consistent(f.rhs(), t, reach, gamma);
    case FormulaKind::kAt:
      return Consistent(f.operand(), f.time(), reach, gamma);
    case FormulaKind::kWindow:
      return Consistent(f.operand(), t,
                        reach.Intersect(WindowRange(f.left(), f.right(), t)),
                        gamma);
    case FormulaKind::kBox: {
      if (reach.empty()) return true;
      const TimePoint last =
          reach.bounded() ? reach.hi().value()
                          : RepresentativeHorizon(f.operand(), reach.lo());
      for (TimePoint u = reach.lo(); u <= last; ++u) {
        if (!Consistent(f.operand(), u, reach, gamma)) return false;
      }
      return true;
    }
    default:
      throw DomainError("t-consistency check requires a normal formula: " +
                        ToString(f));
  }
}

}  // namespace

bool CheckTConsistent(const Formula& f, TimePoint t, const AtomSet& gamma) {
  if (!IsNormal(f)) {
    throw DomainError("t-consistency check requires a normal formula: " +
                      ToString(f));
  }
  return Consistent(f, t, Interval::From(1), gamma);
}

Rule MakeRule(Formula head, std::vector<Formula> positive,
              std::vector<Formula> negative) {
  if (!IsNormal(head)) {
    throw DomainError("rule head must be a normal formula: " + ToString(head));
  }
  if (positive.empty() && negative.empty()) positive.push_back(Formula::Top());
  return Rule{std::move(head), std::move(positive), std::move(negative)};
}

bool IsFact(const Rule& r) {
  return r.negative.empty() && r.positive.size() == 1 &&
         r.positive.front().is(FormulaKind::kTop);
}

std::vector<Formula> BodyLiterals(const Rule& r) {
  std::vector<Formula> literals = r.positive;
  for (const auto& n : r.negative) literals.push_back(Formula::Neg(n));
  return literals;
}

Formula BodyFormula(const Rule& r) {
  return Formula::Conjunction(BodyLiterals(r));
}

AtomSet AtomsOf(const Program& p) {
  AtomSet atoms;
  for (const auto& r : p.rules) {
    CollectAtoms(r.head, atoms);
    for (const auto& b : r.positive) CollectAtoms(b, atoms);
    for (const auto& b : r.negative) CollectAtoms(b, atoms);
  }
  return atoms;
}

AtomSet HeadAtoms(const Program& p) {
  AtomSet atoms;
  for (const auto& r : p.rules) CollectAtoms(r.head, atoms);
  return atoms;
}

bool IsOrdinary(const Program& p) {
  auto atomic = [](const Formula& f) { return f.is(FormulaKind::kAtom); };
  for (const auto& r : p.rules) {
    if (!atomic(r.head)) return false;
    if (IsFact(r)) continue;
    if (!std::all_of(r.positive.begin(), r.positive.end(), atomic) ||
        !std::all_of(r.negative.begin(), r.negative.end(), atomic))
      return false;
  }
  return true;
}

namespace {

template <typename Fn>
void WalkProgram(const Program& p, Fn&& fn) {
  for (const auto& r : p.rules) {
    Walk(r.head, fn);
    for (const auto& b : r.positive) Walk(b, fn);
    for (const auto& b : r.negative) Walk(b, fn);
  }
}

}  // namespace

std::uint64_t MaxFiniteWindowRadius(const Program& p) {
  std::uint64_t radius = 0;
  WalkProgram(p, [&](const Formula& f) {
    if (!f.is(FormulaKind::kWindow)) return;
    if (!f.left().is_infinite()) radius = std::max(radius, f.left().value());
    if (!f.right().is_infinite()) radius = std::max(radius, f.right().value());
  });
  return radius;
}

TimePoint MaxAtTime(const Program& p) {
  TimePoint t = 0;
  WalkProgram(p, [&](const Formula& f) {
    if (f.is(FormulaKind::kAt)) t = std::max(t, f.time());
  });
  return t;
}

namespace {

// Binding strength used by the printer; higher binds tighter.
int Precedence(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kImplies:
      return 1;
    case FormulaKind::kOr:
      return 2;
    case FormulaKind::kAnd:
      return 3;
    case FormulaKind::kTop:
    case FormulaKind::kAtom:
      return 5;
    default:
      return 4;
  }
}

void Print(const Formula& f, int min_precedence, std::ostream& out) {
  const bool parens = Precedence(f) < min_precedence;
  if (parens) out << '(';
  switch (f.kind()) {
    case FormulaKind::kTop:
      out << "true";
      break;
    case FormulaKind::kAtom:
      out << f.atom();
      break;
    case FormulaKind::kNeg:
      out << '!';
      Print(f.operand(), 4, out);
      break;
    case FormulaKind::kDiamond:
      out << "diamond ";
      Print(f.operand(), 4, out);
      break;
    case FormulaKind::kBox:
      out << "box ";
      Print(f.operand(), 4, out);
      break;
    case FormulaKind::kAt:
      out << '@' << f.time() << ' ';
      Print(f.operand(), 4, out);
      break;
    case FormulaKind::kWindow:
      out << '[' << ToString(f.left()) << ',' << ToString(f.right()) << "] ";
      Print(f.operand(), 4, out);
      break;
    case FormulaKind::kAnd:
      Print(f.lhs(), 3, out);
      out << " & ";
      Print(f.rhs(), 4, out);
      break;
    case FormulaKind::kOr:
      Print(f.lhs(), 2, out);
      out << " | ";
      Print(f.rhs(), 3, out);
      break;
    case FormulaKind::kImplies:
      Print(f.lhs(), 2, out);
      out << " -> ";
      Print(f.rhs(), 1, out);
      break;
  }
  if (parens) out << ')';
}

}  // namespace

std::string ToString(const Formula& f) {
  std::ostringstream out;
  Print(f, 0, out);
  return out.str();
}

std::string ToString(const Rule& r) {
  std::ostringstream out;
  Print(r.head, 0, out);
  if (!IsFact(r)) {
    out << " :- ";
    bool first = true;
    for (const auto& b : r.positive) {
      if (!first) out << ", ";
      first = false;
      Print(b, 0, out);
    }
    for (const auto& b : r.negative) {
      if (!first) out << ", ";
      first = false;
      out << "not ";
      Print(b, 0, out);
    }
  }
  out << '.';
  return out.str();
}

std::string ToString(const Program& p) {
  std::string text;
  for (const auto& r : p.rules) {
    text += ToString(r);
    text += '\n';
  }
  return text;
}

}  // namespace streamfix
