#include "fixtures.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace streamfix::fixtures {

namespace {

Formula A(const char* name) { return Formula::Atom(name); }
const ExtNat kInf = ExtNat::Infinity();

}  // namespace

Rule RunningRule(int index) {
  switch (index) {
    case 1:
      return MakeRule(Formula::At(2, A("a")), {}, {Formula::At(7, A("c"))});
    case 2:
      return MakeRule(Formula::Window(kInf, ExtNat(0), Formula::Box(A("a"))),
                      {}, {A("c")});
    case 3:
      return MakeRule(Formula::Window(ExtNat(1), kInf, Formula::Box(A("c"))),
                      {}, {Formula::At(2, A("a"))});
    case 4:
      return MakeRule(
          Formula::Window(ExtNat(2), ExtNat(3),
                          Formula::Box(Formula::And(A("a"), A("b")))),
          {Formula::Window(ExtNat(0), ExtNat(1), Formula::Diamond(A("c"))),
           Formula::Box(A("d"))},
          {});
  }
  throw std::out_of_range("running program has rules 1..4");
}

Program Running() {
  return {{RunningRule(1), RunningRule(2), RunningRule(3), RunningRule(4)}};
}

Stream RunningData() { return {{1, {"a"}}, {5, {"a", "b"}}, {10, {"c"}}}; }

AtomSet RunningGamma() { return {"d"}; }

Stream RunningI() {
  return {{1, {"a"}},           {3, {"a", "b"}},      {4, {"a", "b", "c"}},
          {5, {"a", "b", "c"}}, {6, {"a", "b", "c"}}, {7, {"a", "b", "c"}},
          {8, {"a", "b", "c"}}, {9, {"c"}},           {10, {"c"}}};
}

Stream RunningJ() {
  return {{1, {"a"}}, {2, {"a"}}, {3, {"a"}}, {4, {"a"}}, {5, {"a", "b"}},
          {10, {"c"}}};
}

Stream RunningSecondStage() {
  return {{1, {"a"}}, {4, {"c"}}, {5, {"a", "b", "c"}}, {6, {"c"}},
          {7, {"c"}}, {8, {"c"}}, {9, {"c"}},           {10, {"c"}}};
}

Program Circular() {
  return {{MakeRule(A("a"), {Formula::Box(A("b"))}),
           MakeRule(A("b"), {Formula::Box(A("a"))})}};
}

Program Fact() { return {{MakeFact(A("a"))}}; }

std::string DataPath(const std::string& name) {
  return std::string(STREAMFIX_TEST_DATA_DIR) + "/" + name;
}

std::string ReadData(const std::string& name) {
  std::ifstream in(DataPath(name));
  if (!in) throw std::runtime_error("missing test data " + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace streamfix::fixtures
