#include "streamfix/stream.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "streamfix/errors.h"

namespace streamfix {

std::string ToString(const ExtNat& n) {
  return n.is_infinite() ? "inf" : std::to_string(n.value());
}

Interval Interval::Closed(TimePoint lo, ExtNat hi) {
  lo = std::max<TimePoint>(lo, 1);
  if (hi < ExtNat(lo)) return Empty();
  Interval result;
  result.empty_ = false;
  result.lo_ = lo;
  result.hi_ = hi;
  return result;
}

bool Interval::Contains(TimePoint t) const {
  return !empty_ && t >= lo_ && ExtNat(t) <= hi_;
}

Interval Interval::Intersect(const Interval& other) const {
  if (empty_ || other.empty_) return Empty();
  return Closed(std::max(lo_, other.lo_), std::min(hi_, other.hi_));
}

bool Interval::IsSubsetOf(const Interval& other) const {
  if (empty_) return true;
  if (other.empty_) return false;
  return lo_ >= other.lo_ && hi_ <= other.hi_;
}

std::uint64_t Interval::Length() const {
  if (empty_) return 0;
  if (hi_.is_infinite()) throw DomainError("length of an unbounded interval");
  return hi_.value() - lo_ + 1;
}

std::vector<TimePoint> Interval::Points() const {
  std::vector<TimePoint> points;
  if (empty_) return points;
  if (hi_.is_infinite()) throw DomainError("points of an unbounded interval");
  for (TimePoint t = lo_; t <= hi_.value(); ++t) points.push_back(t);
  return points;
}

std::string ToString(const Interval& interval) {
  if (interval.empty()) return "{}";
  return "[" + std::to_string(interval.lo()) + "," + ToString(interval.hi()) +
         "]";
}

Stream::Stream(
    std::initializer_list<std::pair<const TimePoint, AtomSet>> entries) {
  for (const auto& [t, atoms] : entries) {
    for (const auto& a : atoms) Insert(t, a);
  }
}

Stream::Stream(Entries entries) {
  for (auto& [t, atoms] : entries) {
    for (const auto& a : atoms) Insert(t, a);
  }
}

Stream Stream::FromCells(const std::vector<Cell>& cells) {
  Stream s;
  for (const auto& c : cells) s.Insert(c.time, c.atom);
  return s;
}

void Stream::Insert(TimePoint t, const Atom& atom) {
  if (t == 0) throw DomainError("time points start at 1");
  entries_[t].insert(atom);
}

void Stream::Erase(TimePoint t, const Atom& atom) {
  auto it = entries_.find(t);
  if (it == entries_.end()) return;
  it->second.erase(atom);
  if (it->second.empty()) entries_.erase(it);
}

bool Stream::Contains(TimePoint t, const Atom& atom) const {
  auto it = entries_.find(t);
  return it != entries_.end() && it->second.count(atom) > 0;
}

const AtomSet& Stream::AtomsAt(TimePoint t) const {
  static const AtomSet kEmpty;
  auto it = entries_.find(t);
  return it == entries_.end() ? kEmpty : it->second;
}

std::size_t Stream::Size() const {
  return std::accumulate(
      entries_.begin(), entries_.end(), std::size_t{0},
      [](std::size_t n, const auto& e) { return n + e.second.size(); });
}

Interval Stream::Support() const {
  if (entries_.empty()) return Interval::Empty();
  return Interval::Closed(entries_.begin()->first, entries_.rbegin()->first);
}

AtomSet Stream::Atoms() const {
  AtomSet atoms;
  for (const auto& [t, set] : entries_) atoms.insert(set.begin(), set.end());
  return atoms;
}

std::vector<Cell> Stream::Cells() const {
  std::vector<Cell> cells;
  for (const auto& [t, set] : entries_) {
    for (const auto& a : set) cells.push_back({t, a});
  }
  return cells;
}

std::string ToString(const Stream& s) {
  if (s.empty()) return "{}";
  std::ostringstream out;
  bool first_entry = true;
  for (const auto& [t, atoms] : s.entries()) {
    if (!first_entry) out << ' ';
    first_entry = false;
    out << '{';
    bool first_atom = true;
    for (const auto& a : atoms) {
      if (!first_atom) out << ',';
      first_atom = false;
      out << a;
    }
    out << "}_" << t;
  }
  return out.str();
}

bool IsSubstream(const Stream& sub, const Stream& super) {
  for (const auto& [t, atoms] : sub.entries()) {
    const AtomSet& other = super.AtomsAt(t);
    if (!std::includes(other.begin(), other.end(), atoms.begin(), atoms.end()))
      return false;
  }
  return true;
}

Stream Union(const Stream& a, const Stream& b) {
  Stream result = a;
  for (const auto& [t, atoms] : b.entries()) {
    for (const auto& x : atoms) result.Insert(t, x);
  }
  return result;
}

Stream Difference(const Stream& a, const Stream& b) {
  Stream result;
  for (const auto& [t, atoms] : a.entries()) {
    const AtomSet& other = b.AtomsAt(t);
    for (const auto& x : atoms) {
      if (other.count(x) == 0) result.Insert(t, x);
    }
  }
  return result;
}

Stream Restrict(const Stream& s, const Interval& range) {
  Stream result;
  for (const auto& [t, atoms] : s.entries()) {
    if (!range.Contains(t)) continue;
    for (const auto& x : atoms) result.Insert(t, x);
  }
  return result;
}

Interval WindowRange(ExtNat l, ExtNat r, TimePoint t) {
  TimePoint lo = 1;
  if (!l.is_infinite() && l.value() < t) lo = t - l.value();
  ExtNat hi = r.is_infinite() ? ExtNat::Infinity() : ExtNat(t + r.value());
  return Interval::Closed(lo, hi);
}

Stream ApplyWindow(const Stream& s, ExtNat l, ExtNat r, TimePoint t) {
  return Restrict(s, WindowRange(l, r, t));
}

StreamView StreamView::Window(ExtNat l, ExtNat r, TimePoint t) const {
  return StreamView(stream_, range_.Intersect(WindowRange(l, r, t)));
}

ThreeValuedStream::ThreeValuedStream(Stream lower, Stream upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (!IsSubstream(lower_, upper_)) {
    throw DomainError("3-valued stream requires lower " + ToString(lower_) +
                      " to be a substream of upper " + ToString(upper_));
  }
}

bool PrecisionLeq(const ThreeValuedStream& p, const ThreeValuedStream& q) {
  return IsSubstream(p.lower(), q.lower()) && IsSubstream(q.upper(), p.upper());
}

bool ForEachCellSubset(
    const std::vector<Cell>& cells, std::size_t bound,
    const std::function<bool(const std::vector<Cell>&)>& visit) {
  const std::size_t n = cells.size();
  if (n > bound) throw BoundExceeded("substream enumeration", n, bound);
  std::vector<Cell> chosen;
  std::vector<std::size_t> index;
  for (std::size_t k = 0; k <= n; ++k) {
    index.resize(k);
    std::iota(index.begin(), index.end(), std::size_t{0});
    while (true) {
      chosen.clear();
      for (std::size_t i : index) chosen.push_back(cells[i]);
      if (!visit(chosen)) return false;
      // Advance to the next k-combination in lexicographic order.
      std::size_t pos = k;
      while (pos > 0 && index[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++index[pos - 1];
      for (std::size_t j = pos; j < k; ++j) index[j] = index[j - 1] + 1;
    }
  }
  return true;
}

std::vector<Stream> EnumerateSubstreams(const Stream& s, std::size_t bound) {
  std::vector<Stream> result;
  ForEachCellSubset(s.Cells(), bound, [&](const std::vector<Cell>& chosen) {
    result.push_back(Stream::FromCells(chosen));
    return true;
  });
  return result;
}

}  // namespace streamfix
