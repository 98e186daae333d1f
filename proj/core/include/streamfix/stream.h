#ifndef STREAMFIX_STREAM_H_
#define STREAMFIX_STREAM_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace streamfix {

// Time points start at 1.
using TimePoint = std::uint64_t;
using Atom = std::string;
using AtomSet = std::set<Atom>;

// A natural number or infinity.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr explicit ExtNat(std::uint64_t value) : value_(value) {}

  static constexpr ExtNat Infinity() {
    ExtNat n;
    n.infinite_ = true;
    return n;
  }

  constexpr bool is_infinite() const { return infinite_; }
  // Only meaningful when finite.
  constexpr std::uint64_t value() const { return value_; }

  friend constexpr bool operator==(const ExtNat& a, const ExtNat& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtNat& a,
                                                    const ExtNat& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

std::string ToString(const ExtNat& n);

// Closed interval of time points [lo, hi], hi possibly infinite, or the empty
// interval.
class Interval {
 public:
  Interval() = default;  // empty

  static Interval Empty() { return Interval(); }
  // Returns the empty interval when lo > hi. lo is clamped to 1.
  static Interval Closed(TimePoint lo, ExtNat hi);
  static Interval Closed(TimePoint lo, TimePoint hi) {
    return Closed(lo, ExtNat(hi));
  }
  static Interval From(TimePoint lo) { return Closed(lo, ExtNat::Infinity()); }

  bool empty() const { return empty_; }
  TimePoint lo() const { return lo_; }
  ExtNat hi() const { return hi_; }
  bool bounded() const { return !empty_ && !hi_.is_infinite(); }

  bool Contains(TimePoint t) const;
  Interval Intersect(const Interval& other) const;
  bool IsSubsetOf(const Interval& other) const;
  // Number of time points; only valid for bounded intervals.
  std::uint64_t Length() const;
  // Time points of a bounded interval in increasing order.
  std::vector<TimePoint> Points() const;

  friend bool operator==(const Interval& a, const Interval& b) {
    if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  bool empty_ = true;
  TimePoint lo_ = 1;
  ExtNat hi_;
};

std::string ToString(const Interval& interval);

// One atom occurrence.
struct Cell {
  TimePoint time;
  Atom atom;

  friend auto operator<=>(const Cell&, const Cell&) = default;
  friend bool operator==(const Cell&, const Cell&) = default;
};

// A stream with finite support. Time points absent from the map carry the
// empty set; no stored entry is ever empty, so equality is structural.
class Stream {
 public:
  using Entries = std::map<TimePoint, AtomSet>;

  Stream() = default;
  Stream(std::initializer_list<std::pair<const TimePoint, AtomSet>> entries);
  explicit Stream(Entries entries);

  static Stream FromCells(const std::vector<Cell>& cells);

  // Throws DomainError for t = 0.
  void Insert(TimePoint t, const Atom& atom);
  void Erase(TimePoint t, const Atom& atom);

  bool Contains(TimePoint t, const Atom& atom) const;
  const AtomSet& AtomsAt(TimePoint t) const;
  const Entries& entries() const { return entries_; }

  bool empty() const { return entries_.empty(); }
  // Total number of atom occurrences.
  std::size_t Size() const;
  Interval Support() const;
  AtomSet Atoms() const;
  std::vector<Cell> Cells() const;

  friend bool operator==(const Stream&, const Stream&) = default;
  friend bool operator<(const Stream& a, const Stream& b) {
    return a.entries_ < b.entries_;
  }

 private:
  Entries entries_;
};

// Rendering: "{a}_1 {a,b}_5 {c}_10"; the empty stream is "{}".
std::string ToString(const Stream& s);

bool IsSubstream(const Stream& sub, const Stream& super);
Stream Union(const Stream& a, const Stream& b);
// Point-wise relative complement a - b.
Stream Difference(const Stream& a, const Stream& b);
Stream Restrict(const Stream& s, const Interval& range);

// Time points selected by the window [l, r] at t: [max(1, t - l), t + r].
Interval WindowRange(ExtNat l, ExtNat r, TimePoint t);
Stream ApplyWindow(const Stream& s, ExtNat l, ExtNat r, TimePoint t);

// A stream seen through a (possibly nested) sequence of windows. Atom lookups
// outside the accumulated window range fail, and the support of the view is
// the window range intersected with the support of the underlying stream, so
// that I[4,inf] over a stream with support [1,10] has support [4,10] whether
// or not I_4 is empty.
//
// Holds a pointer to the stream; the stream must outlive the view.
class StreamView {
 public:
  explicit StreamView(const Stream& s)
      : stream_(&s), range_(Interval::From(1)) {}

  StreamView Window(ExtNat l, ExtNat r, TimePoint t) const;

  bool Holds(TimePoint t, const Atom& atom) const {
    return range_.Contains(t) && stream_->Contains(t, atom);
  }
  Interval Support() const { return range_.Intersect(stream_->Support()); }
  const Interval& range() const { return range_; }
  const Stream& stream() const { return *stream_; }
  Stream Materialize() const { return Restrict(*stream_, range_); }

 private:
  StreamView(const Stream* s, Interval range) : stream_(s), range_(range) {}

  const Stream* stream_;
  Interval range_;
};

// A 3-valued stream (lower, upper) with lower a substream of upper.
class ThreeValuedStream {
 public:
  // Throws DomainError unless lower is a substream of upper.
  ThreeValuedStream(Stream lower, Stream upper);
  static ThreeValuedStream Exact(const Stream& s) { return {s, s}; }

  const Stream& lower() const { return lower_; }
  const Stream& upper() const { return upper_; }
  bool IsExact() const { return lower_ == upper_; }

  friend bool operator==(const ThreeValuedStream&,
                         const ThreeValuedStream&) = default;

 private:
  Stream lower_;
  Stream upper_;
};

// (I, J) <=_p (I', J') iff I is a substream of I' and J' of J.
bool PrecisionLeq(const ThreeValuedStream& p, const ThreeValuedStream& q);

inline constexpr std::size_t kDefaultSubstreamBound = 24;

// Calls visit(subset) for every subset of cells, ordered by size and then
// lexicographically by cell index. Stops early when visit returns false.
// Returns false iff stopped early. Throws BoundExceeded when
// cells.size() > bound.
bool ForEachCellSubset(const std::vector<Cell>& cells, std::size_t bound,
                       const std::function<bool(const std::vector<Cell>&)>& visit);

// All 2^n substreams of s, each exactly once, smallest first.
std::vector<Stream> EnumerateSubstreams(const Stream& s,
                                        std::size_t bound = kDefaultSubstreamBound);

}  // namespace streamfix

#endif  // STREAMFIX_STREAM_H_
