#ifndef STREAMFIX_SERIALIZE_H_
#define STREAMFIX_SERIALIZE_H_

#include <optional>
#include <string>
#include <string_view>

#include "streamfix/levelmap.h"
#include "streamfix/operators.h"
#include "streamfix/stream.h"

namespace streamfix {

// Contents of a stream file: lines "t: a b ...", an optional "gamma: ..."
// line, '#' comments and blank lines.
struct StreamFile {
  Stream stream;
  std::optional<AtomSet> gamma;
};

// Throws ParseError with the line and column of the first malformed token.
StreamFile ParseStreamFile(std::string_view text);
std::string FormatStreamFile(const Stream& stream,
                             const std::optional<AtomSet>& gamma = {});

// Single-line JSON: [{"t":1,"atoms":["a"]},...] sorted by t.
std::string StreamToJson(const Stream& stream);
// Throws ParseError for malformed input.
Stream StreamFromJson(std::string_view text);

// {"stages":[<stream>,...],"converged":true}
std::string TraceToJson(const FixpointTrace& trace);
// {"levels":[{"level":0,"stream":<stream>},...]}
std::string PartitioningToJson(const Partitioning& s);

}  // namespace streamfix

#endif  // STREAMFIX_SERIALIZE_H_
