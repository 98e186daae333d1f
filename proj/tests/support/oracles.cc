#include "oracles.h"

#include <algorithm>
#include <stdexcept>

namespace streamfix::oracle {

namespace {

using Gamma = std::set<std::string>;

Range Meet(Range a, std::uint64_t lo, std::uint64_t hi) {
  Range r;
  r.lo = std::max(a.lo, lo);
  r.hi = std::min(a.hi, hi);
  r.empty = a.empty || r.lo > r.hi;
  return r;
}

Range WindowOf(const Formula& f, std::uint64_t t) {
  std::uint64_t lo = 1;
  if (!f.left().is_infinite() && f.left().value() < t) lo = t - f.left().value();
  std::uint64_t hi = kUnbounded;
  if (!f.right().is_infinite()) hi = t + f.right().value();
  return {lo, hi, false};
}

bool Inside(const Range& r, std::uint64_t t) {
  return !r.empty && r.lo <= t && t <= r.hi;
}

// Points of frame ∩ [min time, max time] of the stream.
std::vector<std::uint64_t> SupportPoints(const Pairs& s, const Range& frame) {
  std::vector<std::uint64_t> out;
  if (s.empty()) return out;
  const Range r = Meet(frame, s.begin()->first, s.rbegin()->first);
  if (r.empty) return out;
  for (std::uint64_t u = r.lo; u <= r.hi; ++u) out.push_back(u);
  return out;
}

bool BodyHolds(const Rule& rule, const auto& holds) {
  for (const auto& b : rule.positive) {
    if (!holds(b)) return false;
  }
  for (const auto& b : rule.negative) {
    if (holds(b)) return false;
  }
  return true;
}

std::vector<Pair> Minus(const Pairs& a, const Pairs& b) {
  std::vector<Pair> out;
  for (const auto& p : a) {
    if (!b.count(p)) out.push_back(p);
  }
  return out;
}

bool Includes(const Pairs& big, const Pairs& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Pairs With(Pairs base, const std::vector<Pair>& extra) {
  base.insert(extra.begin(), extra.end());
  return base;
}

// No J with data <= J < stream satisfies is_model.
template <typename IsModel>
bool Minimal(const Pairs& stream, const Pairs& data, IsModel&& is_model) {
  const std::vector<Pair> free = Minus(stream, data);
  for (const auto& subset : Subsets(free)) {
    if (subset.size() == free.size()) continue;
    if (is_model(With(data, subset))) return false;
  }
  return true;
}

}  // namespace

Pairs ToPairs(const Stream& s) {
  Pairs out;
  for (const auto& [t, atoms] : s.entries()) {
    for (const auto& a : atoms) out.insert({t, a});
  }
  return out;
}

Stream FromPairs(const Pairs& p) {
  Stream s;
  for (const auto& [t, a] : p) s.Insert(t, a);
  return s;
}

bool Entails(const Pairs& stream, std::uint64_t t, const Formula& f,
             const Gamma& gamma, Range frame) {
  switch (f.kind()) {
    case FormulaKind::kTop:
      return true;
    case FormulaKind::kAtom:
      return gamma.count(f.atom()) > 0 ||
             (Inside(frame, t) && stream.count({t, f.atom()}) > 0);
    case FormulaKind::kNeg:
      return !Entails(stream, t, f.operand(), gamma, frame);
    case FormulaKind::kAnd:
      return Entails(stream, t, f.lhs(), gamma, frame) &&
             Entails(stream, t, f.rhs(), gamma, frame);
    case FormulaKind::kOr:
      return Entails(stream, t, f.lhs(), gamma, frame) ||
             Entails(stream, t, f.rhs(), gamma, frame);
    case FormulaKind::kImplies:
      return !Entails(stream, t, f.lhs(), gamma, frame) ||
             Entails(stream, t, f.rhs(), gamma, frame);
    case FormulaKind::kDiamond:
      for (auto u : SupportPoints(stream, frame)) {
        if (Entails(stream, u, f.operand(), gamma, frame)) return true;
      }
      return false;
    case FormulaKind::kBox:
      for (auto u : SupportPoints(stream, frame)) {
        if (!Entails(stream, u, f.operand(), gamma, frame)) return false;
      }
      return true;
    case FormulaKind::kAt:
      return Entails(stream, f.time(), f.operand(), gamma, frame);
    case FormulaKind::kWindow: {
      const Range w = WindowOf(f, t);
      return Entails(stream, t, f.operand(), gamma, Meet(frame, w.lo, w.hi));
    }
  }
  throw std::logic_error("unknown formula kind");
}

bool EntailsFixed(const Pairs& stream, std::uint64_t lo, std::uint64_t hi,
                  std::uint64_t t, const Formula& f, const Gamma& gamma) {
  auto rec = [&](std::uint64_t u, const Formula& g) {
    return EntailsFixed(stream, lo, hi, u, g, gamma);
  };
  switch (f.kind()) {
    case FormulaKind::kTop:
      return true;
    case FormulaKind::kAtom:
      return gamma.count(f.atom()) > 0 || stream.count({t, f.atom()}) > 0;
    case FormulaKind::kNeg:
      return !rec(t, f.operand());
    case FormulaKind::kAnd:
      return rec(t, f.lhs()) && rec(t, f.rhs());
    case FormulaKind::kOr:
      return rec(t, f.lhs()) || rec(t, f.rhs());
    case FormulaKind::kImplies:
      return !rec(t, f.lhs()) || rec(t, f.rhs());
    case FormulaKind::kDiamond:
      for (auto u = lo; u <= hi; ++u) {
        if (rec(u, f.operand())) return true;
      }
      return false;
    case FormulaKind::kBox:
      for (auto u = lo; u <= hi; ++u) {
        if (!rec(u, f.operand())) return false;
      }
      return true;
    case FormulaKind::kAt:
      return lo <= f.time() && f.time() <= hi && rec(f.time(), f.operand());
    case FormulaKind::kWindow: {
      const Range w = WindowOf(f, t);
      Pairs cut;
      for (const auto& p : stream) {
        if (Inside(w, p.first)) cut.insert(p);
      }
      return EntailsFixed(cut, lo, hi, t, f.operand(), gamma);
    }
  }
  throw std::logic_error("unknown formula kind");
}

bool Entails3(const Pairs& lower, const Pairs& upper, std::uint64_t t,
              const Formula& f, const Gamma& gamma) {
  for (const auto& subset : Subsets(Minus(upper, lower))) {
    if (!Entails(With(lower, subset), t, f, gamma)) return false;
  }
  return true;
}

Pairs M(const Pairs& stream, std::uint64_t t, const Formula& f,
        const Gamma& gamma, Range frame) {
  switch (f.kind()) {
    case FormulaKind::kTop:
      return {};
    case FormulaKind::kAtom:
      if (gamma.count(f.atom())) return {};
      return {{t, f.atom()}};
    case FormulaKind::kAnd: {
      Pairs out = M(stream, t, f.lhs(), gamma, frame);
      const Pairs rhs = M(stream, t, f.rhs(), gamma, frame);
      out.insert(rhs.begin(), rhs.end());
      return out;
    }
    case FormulaKind::kBox: {
      Pairs out;
      for (auto u : SupportPoints(stream, frame)) {
        const Pairs part = M(stream, u, f.operand(), gamma, frame);
        out.insert(part.begin(), part.end());
      }
      return out;
    }
    case FormulaKind::kAt:
      return M(stream, f.time(), f.operand(), gamma, frame);
    case FormulaKind::kWindow: {
      const Range w = WindowOf(f, t);
      return M(stream, t, f.operand(), gamma, Meet(frame, w.lo, w.hi));
    }
    default:
      throw std::invalid_argument("partial model of a non-normal formula");
  }
}

Pairs MM(const Pairs& stream, std::uint64_t t, const Formula& f,
         const Gamma& gamma) {
  return M(M(stream, t, f, gamma), t, f, gamma);
}

bool IsModel(const Program& p, const Pairs& stream, std::uint64_t t,
             const Pairs& data, const Gamma& gamma) {
  if (!Includes(stream, data)) return false;
  auto holds = [&](const Formula& f) { return Entails(stream, t, f, gamma); };
  for (const auto& rule : p.rules) {
    if (BodyHolds(rule, holds) && !holds(rule.head)) return false;
  }
  return true;
}

namespace {

Pairs ApplyHeads(const std::vector<Formula>& heads, const Pairs& base,
                 const Pairs& data, std::uint64_t t, const Gamma& gamma) {
  Pairs first;
  for (const auto& h : heads) {
    const Pairs part = M(base, t, h, gamma);
    first.insert(part.begin(), part.end());
  }
  Pairs out = data;
  for (const auto& h : heads) {
    const Pairs part = M(first, t, h, gamma);
    out.insert(part.begin(), part.end());
  }
  return out;
}

}  // namespace

Pairs Tp(const Program& p, const Pairs& data, const Gamma& gamma,
         std::uint64_t t, const Pairs& stream) {
  std::vector<Formula> heads;
  auto holds = [&](const Formula& f) { return Entails(stream, t, f, gamma); };
  for (const auto& rule : p.rules) {
    if (BodyHolds(rule, holds)) heads.push_back(rule.head);
  }
  return ApplyHeads(heads, stream, data, t, gamma);
}

Pairs Phi(const Program& p, const Pairs& data, const Gamma& gamma,
          std::uint64_t t, const Pairs& lower, const Pairs& upper) {
  std::vector<Formula> heads;
  const auto subsets = Subsets(Minus(upper, lower));
  for (const auto& rule : p.rules) {
    bool always = true;
    for (const auto& subset : subsets) {
      const Pairs k = With(lower, subset);
      auto holds = [&](const Formula& f) { return Entails(k, t, f, gamma); };
      if (!BodyHolds(rule, holds)) {
        always = false;
        break;
      }
    }
    if (always) heads.push_back(rule.head);
  }
  return ApplyHeads(heads, lower, data, t, gamma);
}

std::vector<Pairs> PhiStages(const Program& p, const Pairs& data,
                             const Gamma& gamma, std::uint64_t t,
                             const Pairs& upper) {
  std::vector<Pairs> stages{Pairs()};
  for (int i = 0; i < 10000; ++i) {
    Pairs next = Phi(p, data, gamma, t, stages.back(), upper);
    const bool repeated = next == stages.back();
    stages.push_back(std::move(next));
    if (repeated) return stages;
  }
  throw std::runtime_error("Phi iteration did not stabilise");
}

bool IsTAnswerStream(const Program& p, const Pairs& stream, std::uint64_t t,
                     const Pairs& data, const Gamma& gamma) {
  Program reduct;
  auto holds = [&](const Formula& f) { return Entails(stream, t, f, gamma); };
  for (const auto& rule : p.rules) {
    if (BodyHolds(rule, holds)) reduct.rules.push_back(rule);
  }
  if (!IsModel(reduct, stream, t, data, gamma)) return false;
  return Minimal(stream, data, [&](const Pairs& j) {
    return IsModel(reduct, j, t, data, gamma);
  });
}

bool IsTTAnswerStream(const Program& p, const Pairs& stream, std::uint64_t lo,
                      std::uint64_t hi, std::uint64_t t, const Pairs& data,
                      const Gamma& gamma) {
  auto is_model = [&](const Program& q, const Pairs& s) {
    if (!Includes(s, data)) return false;
    auto holds = [&](const Formula& f) {
      return EntailsFixed(s, lo, hi, t, f, gamma);
    };
    for (const auto& rule : q.rules) {
      if (BodyHolds(rule, holds) && !holds(rule.head)) return false;
    }
    return true;
  };
  Program reduct;
  auto holds = [&](const Formula& f) {
    return EntailsFixed(stream, lo, hi, t, f, gamma);
  };
  for (const auto& rule : p.rules) {
    if (BodyHolds(rule, holds)) reduct.rules.push_back(rule);
  }
  if (!is_model(reduct, stream)) return false;
  return Minimal(stream, data,
                 [&](const Pairs& j) { return is_model(reduct, j); });
}

bool IsPhiAnswerStream(const Program& p, const Pairs& stream, std::uint64_t t,
                       const Pairs& data, const Gamma& gamma) {
  if (!IsModel(p, stream, t, data, gamma)) return false;
  return PhiStages(p, data, gamma, t, stream).back() == stream;
}

std::vector<Pairs> AnswerStreams(const Program& p, std::uint64_t t,
                                 const Pairs& data, const Gamma& gamma,
                                 const std::set<std::string>& atoms,
                                 std::uint64_t lo, std::uint64_t hi, Kind kind,
                                 std::uint64_t fixed_lo, std::uint64_t fixed_hi) {
  Pairs full;
  for (auto u = lo; u <= hi; ++u) {
    for (const auto& a : atoms) full.insert({u, a});
  }
  std::vector<Pairs> out;
  for (const auto& subset : Subsets(Minus(full, data))) {
    const Pairs s = With(data, subset);
    bool ok = false;
    switch (kind) {
      case Kind::kFlp: ok = IsTAnswerStream(p, s, t, data, gamma); break;
      case Kind::kFixpoint: ok = IsPhiAnswerStream(p, s, t, data, gamma); break;
      case Kind::kBeck:
        ok = IsTTAnswerStream(p, s, fixed_lo, fixed_hi, t, data, gamma);
        break;
    }
    if (ok) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const Pairs& a, const Pairs& b) {
    return FromPairs(a) < FromPairs(b);
  });
  return out;
}

std::vector<std::set<std::string>> StableModels(const Program& p) {
  std::set<std::string> names;
  auto collect = [&](const Formula& f) {
    if (f.is(FormulaKind::kAtom)) names.insert(f.atom());
  };
  for (const auto& rule : p.rules) {
    collect(rule.head);
    for (const auto& b : rule.positive) collect(b);
    for (const auto& b : rule.negative) collect(b);
  }
  const std::vector<std::string> all(names.begin(), names.end());

  auto satisfies = [&](const Program& q, const std::set<std::string>& a) {
    for (const auto& rule : q.rules) {
      bool body = true;
      for (const auto& b : rule.positive) {
        if (b.is(FormulaKind::kAtom) && !a.count(b.atom())) body = false;
      }
      if (body && !a.count(rule.head.atom())) return false;
    }
    return true;
  };

  std::vector<std::set<std::string>> out;
  for (const auto& subset : Subsets(all)) {
    const std::set<std::string> a(subset.begin(), subset.end());
    Program reduct;
    for (const auto& rule : p.rules) {
      bool blocked = false;
      for (const auto& b : rule.negative) {
        if (a.count(b.atom())) blocked = true;
      }
      if (!blocked) reduct.rules.push_back(rule);
    }
    if (!satisfies(reduct, a)) continue;
    bool minimal = true;
    const std::vector<std::string> members(a.begin(), a.end());
    for (const auto& smaller : Subsets(members)) {
      if (smaller.size() < members.size() &&
          satisfies(reduct, {smaller.begin(), smaller.end()})) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace streamfix::oracle
