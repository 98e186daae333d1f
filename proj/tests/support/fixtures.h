#ifndef STREAMFIX_TESTS_FIXTURES_H_
#define STREAMFIX_TESTS_FIXTURES_H_

#include <string>

#include "streamfix/formula.h"
#include "streamfix/stream.h"

namespace streamfix::fixtures {

// The four-rule running program over a, b, c with background atom d,
// evaluated at 5.
Program Running();
Rule RunningRule(int index);  // 1-based
Stream RunningData();         // {a}_1 {a,b}_5 {c}_10
AtomSet RunningGamma();       // {d}
Stream RunningI();
Stream RunningJ();
// Second stage of the Phi iteration towards RunningI.
Stream RunningSecondStage();
constexpr TimePoint kRunningTime = 5;

// a :- box b.  b :- box a.
Program Circular();
// a.
Program Fact();

// Absolute path of a file under tests/data.
std::string DataPath(const std::string& name);
std::string ReadData(const std::string& name);

}  // namespace streamfix::fixtures

#endif  // STREAMFIX_TESTS_FIXTURES_H_
