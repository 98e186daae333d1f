#include "streamfix/formula.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "streamfix/errors.h"

namespace streamfix {
namespace {

const ExtNat kInf = ExtNat::Infinity();
Formula A(const char* name) { return Formula::Atom(name); }

TEST(FormulaTest, DefaultIsTop) {
  EXPECT_TRUE(Formula().is(FormulaKind::kTop));
  EXPECT_EQ(Formula(), Formula::Top());
}

TEST(FormulaTest, StructuralEquality) {
  EXPECT_EQ(Formula::And(A("a"), A("b")), Formula::And(A("a"), A("b")));
  EXPECT_NE(Formula::And(A("a"), A("b")), Formula::And(A("b"), A("a")));
  EXPECT_NE(Formula::Window(ExtNat(1), kInf, A("a")),
            Formula::Window(ExtNat(1), ExtNat(5), A("a")));
}

TEST(FormulaTest, RejectsAtZero) {
  EXPECT_THROW(Formula::At(0, A("a")), DomainError);
}

TEST(FormulaTest, WindowRadiiAreIndependent) {
  const Formula w = Formula::Window(kInf, ExtNat(0), Formula::Box(A("a")));
  EXPECT_TRUE(w.left().is_infinite());
  EXPECT_EQ(w.right(), ExtNat(0));
}

TEST(FormulaTest, ConjunctionIsLeftNested) {
  EXPECT_EQ(Formula::Conjunction({}), Formula::Top());
  EXPECT_EQ(Formula::Conjunction({A("a")}), A("a"));
  EXPECT_EQ(Formula::Conjunction({A("a"), A("b"), A("c")}),
            Formula::And(Formula::And(A("a"), A("b")), A("c")));
  EXPECT_EQ(Conjuncts(Formula::Conjunction({A("a"), A("b"), A("c")})),
            (std::vector<Formula>{A("a"), A("b"), A("c")}));
}

TEST(ClassifyTest, WindowedAtConjunction) {
  const Formula f = Formula::And(
      Formula::Window(ExtNat(0), ExtNat(0), Formula::At(1, A("a"))),
      Formula::At(2, A("b")));
  const Classification c = Classify(f);
  EXPECT_TRUE(c.box_free);
  EXPECT_TRUE(c.normal);
  EXPECT_TRUE(c.monotone);
}

TEST(ClassifyTest, BoxConjunction) {
  const Classification c = Classify(Formula::And(Formula::Box(A("a")), A("b")));
  EXPECT_FALSE(c.box_free);
  EXPECT_TRUE(c.normal);
  EXPECT_FALSE(c.monotone);
}

TEST(ClassifyTest, Negation) {
  const Classification c = Classify(Formula::Neg(A("a")));
  EXPECT_FALSE(c.normal);
  EXPECT_FALSE(c.monotone);
  EXPECT_TRUE(c.box_free);
}

TEST(ClassifyTest, DiamondIsMonotoneButNotNormal) {
  const Classification c = Classify(Formula::Diamond(A("a")));
  EXPECT_TRUE(c.monotone);
  EXPECT_FALSE(c.normal);
  const Classification d = Classify(Formula::Or(A("a"), A("b")));
  EXPECT_TRUE(d.monotone);
  EXPECT_FALSE(d.normal);
  EXPECT_FALSE(IsMonotone(Formula::Implies(A("a"), A("b"))));
}

TEST(FormulaTest, AtomsAndSize) {
  const Rule r4 = fixtures::RunningRule(4);
  EXPECT_EQ(AtomsOf(r4.head), (AtomSet{"a", "b"}));
  EXPECT_EQ(FormulaSize(r4.head), 5u);
  EXPECT_EQ(AtomsOf(fixtures::Running()), (AtomSet{"a", "b", "c", "d"}));
  EXPECT_EQ(HeadAtoms(fixtures::Running()), (AtomSet{"a", "b", "c"}));
  EXPECT_EQ(MaxFiniteWindowRadius(fixtures::Running()), 3u);
  EXPECT_EQ(MaxAtTime(fixtures::Running()), 7u);
}

TEST(BodyFormulaTest, RunningRules) {
  EXPECT_EQ(BodyFormula(fixtures::RunningRule(4)),
            Formula::And(
                Formula::Window(ExtNat(0), ExtNat(1), Formula::Diamond(A("c"))),
                Formula::Box(A("d"))));
  EXPECT_EQ(BodyFormula(fixtures::RunningRule(1)),
            Formula::Neg(Formula::At(7, A("c"))));
}

TEST(BodyFormulaTest, FactBodyIsTop) {
  const Rule fact = MakeFact(A("a"));
  EXPECT_TRUE(IsFact(fact));
  EXPECT_EQ(fact.positive, std::vector<Formula>{Formula::Top()});
  EXPECT_TRUE(fact.negative.empty());
  EXPECT_EQ(BodyFormula(fact), Formula::Top());
  EXPECT_FALSE(IsFact(fixtures::RunningRule(1)));
}

TEST(RuleTest, RejectsNonNormalHead) {
  EXPECT_THROW(MakeRule(Formula::Diamond(A("a"))), DomainError);
  EXPECT_THROW(MakeRule(Formula::Or(A("a"), A("b"))), DomainError);
  EXPECT_NO_THROW(MakeRule(Formula::Box(A("a")), {Formula::Neg(A("b"))}));
}

TEST(ProgramTest, Ordinary) {
  EXPECT_TRUE(IsOrdinary(fixtures::Fact()));
  EXPECT_FALSE(IsOrdinary(fixtures::Circular()));
  EXPECT_TRUE(IsOrdinary({{MakeRule(A("a"), {A("b")}, {A("c")})}}));
}

TEST(CheckTConsistentTest, WindowedFutureReferenceIsInconsistent) {
  EXPECT_FALSE(CheckTConsistent(
      Formula::Window(ExtNat(0), ExtNat(0), Formula::At(2, A("a"))), 1));
}

TEST(CheckTConsistentTest, PlainCases) {
  EXPECT_TRUE(CheckTConsistent(Formula::At(2, A("a")), 5));
  EXPECT_TRUE(CheckTConsistent(A("a"), 1));
  EXPECT_TRUE(CheckTConsistent(A("a"), 99));
  for (int i = 1; i <= 4; ++i) {
    EXPECT_TRUE(CheckTConsistent(fixtures::RunningRule(i).head, 5)) << i;
  }
}

TEST(CheckTConsistentTest, BackgroundAtomsAreExempt) {
  const Formula f =
      Formula::Window(ExtNat(0), ExtNat(0), Formula::At(2, A("d")));
  EXPECT_FALSE(CheckTConsistent(f, 1));
  EXPECT_TRUE(CheckTConsistent(f, 1, {"d"}));
}

TEST(CheckTConsistentTest, RejectsNonNormal) {
  EXPECT_THROW(CheckTConsistent(Formula::Neg(A("a")), 1), DomainError);
}

TEST(PrinterTest, RunningProgram) {
  EXPECT_EQ(ToString(fixtures::Running()),
            "@2 a :- not @7 c.\n"
            "[inf,0] box a :- not c.\n"
            "[1,inf] box c :- not @2 a.\n"
            "[2,3] box (a & b) :- [0,1] diamond c, box d.\n");
}

TEST(PrinterTest, Precedence) {
  EXPECT_EQ(ToString(Formula::Implies(A("a"), Formula::Implies(A("b"), A("c")))),
            "a -> b -> c");
  EXPECT_EQ(ToString(Formula::Implies(Formula::Implies(A("a"), A("b")), A("c"))),
            "(a -> b) -> c");
  EXPECT_EQ(ToString(Formula::And(Formula::Or(A("a"), A("b")), A("c"))),
            "(a | b) & c");
  EXPECT_EQ(ToString(Formula::Neg(Formula::And(A("a"), A("b")))), "!(a & b)");
  EXPECT_EQ(ToString(Formula::Top()), "true");
  EXPECT_EQ(ToString(MakeFact(A("a"))), "a.");
}

}  // namespace
}  // namespace streamfix
