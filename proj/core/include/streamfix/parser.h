#ifndef STREAMFIX_PARSER_H_
#define STREAMFIX_PARSER_H_

#include <string_view>

#include "streamfix/formula.h"

namespace streamfix {

// Program text: one rule per "head :- body." or "head.", '%' comments.
// Operators: "!" (classical negation), "&", "|", "->", "box", "diamond",
// "@T", "[l,r]" (with "inf"), "true"; "not" marks a default-negated body
// literal. Throws ParseError with location and expected tokens; a program
// without rules, "@0" and non-normal heads are errors.
Program ParseProgram(std::string_view text);

// A single formula, no trailing period. A leading "not" reads like a negative
// body literal and yields the negation of the rest.
Formula ParseFormula(std::string_view text);

}  // namespace streamfix

#endif  // STREAMFIX_PARSER_H_
