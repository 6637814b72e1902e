// Copyright (c) 2026 the dasp authors
// SPDX-License-Identifier: MIT

#include "dasp/oracle.hpp"

#include <algorithm>

namespace dasp {

std::vector<Rule> reduct(const std::vector<Rule>& rules,
                         const std::vector<Atom>& positiveAtoms) {
  std::vector<Rule> out;
  auto inSet = [&](Atom a) {
    return std::binary_search(positiveAtoms.begin(), positiveAtoms.end(), a);
  };
  for (const Rule& r : rules) {
    bool blocked = false;
    for (Literal l : r.body) {
      if (l.negative() && inSet(l.atom())) {
        blocked = true;
        break;
      }
    }
    if (blocked) continue;
    Rule kept;
    kept.head = r.head;
    for (Literal l : r.body) {
      if (l.positive()) kept.body.push_back(l);
    }
    out.push_back(std::move(kept));
  }
  return out;
}

Completion completionOf(const Program& p) {
  Completion c;
  c.universe = atomsOf(p);
  c.ruleClauses.reserve(p.rules.size());
  for (const Rule& r : p.rules) c.ruleClauses.push_back(clauseForm(r));
  c.supports.resize(c.universe.size());
  for (std::size_t i = 0; i < c.universe.size(); ++i) {
    Atom a = c.universe[i];
    for (const Rule& r : p.rules) {
      if (!std::binary_search(r.head.begin(), r.head.end(), a)) continue;
      std::vector<Literal> conj = r.body;
      for (Atom b : r.head) {
        if (b != a) conj.push_back(Literal::neg(b));
      }
      c.supports[i].push_back(std::move(conj));
    }
  }
  return c;
}

namespace {

std::vector<Rule> materialize(const Theory& t) {
  std::vector<Rule> rules = t.rules;
  for (const Clause& c : t.clauses) {
    std::vector<Literal> body;
    body.reserve(c.size());
    for (Literal l : c) body.push_back(l.opposite());
    rules.push_back(makeRule({}, std::move(body)));
  }
  return rules;
}

}  // namespace

BruteOracle::BruteOracle(const Theory& t, std::size_t atomCap)
    : universe_(atomsOf(t)), rules_(materialize(t)) {
  if (universe_.size() > atomCap || universe_.size() > 62) {
    throw CapError("atom universe of size " + std::to_string(universe_.size()) +
                   " exceeds the brute-force cap of " +
                   std::to_string(std::min<std::size_t>(atomCap, 62)));
  }
  Atom maxAtom = universe_.empty() ? 0 : universe_.back();
  indexOfAtom_.assign(maxAtom + 1, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < universe_.size(); ++i) indexOfAtom_[universe_[i]] = i;
  ruleMasks_.reserve(rules_.size());
  for (const Rule& r : rules_) {
    RuleMasks m;
    for (Atom a : r.head) m.head |= Mask(1) << indexOfAtom_[a];
    for (Literal l : r.body) {
      Mask bit = Mask(1) << indexOfAtom_[l.atom()];
      if (l.positive()) {
        m.bodyPos |= bit;
      } else {
        m.bodyNeg |= bit;
      }
    }
    ruleMasks_.push_back(m);
  }
}

Mask BruteOracle::maskOf(const std::vector<Atom>& atoms) const {
  Mask m = 0;
  for (Atom a : atoms) m |= Mask(1) << indexOfAtom_[a];
  return m;
}

std::vector<Atom> BruteOracle::atomsOfMask(Mask m) const {
  std::vector<Atom> out;
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (m & (Mask(1) << i)) out.push_back(universe_[i]);
  }
  return out;
}

LitSet BruteOracle::litSetOf(const Record& r) const {
  LitSet s;
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    Atom a = universe_[i];
    if (r.contains(Literal::pos(a))) s.pos |= Mask(1) << i;
    if (r.contains(Literal::neg(a))) s.neg |= Mask(1) << i;
  }
  return s;
}

LitSet BruteOracle::completeLitSet(Mask m) const {
  LitSet s;
  s.pos = m;
  Mask all = width() == 0 ? 0 : (width() == 62 ? ~Mask(0) >> 2 : (Mask(1) << width()) - 1);
  s.neg = all & ~m;
  return s;
}

bool BruteOracle::isClassicalModel(Mask m) const {
  for (const RuleMasks& r : ruleMasks_) {
    bool bodyHolds = ((r.bodyPos & m) == r.bodyPos) && ((r.bodyNeg & m) == 0);
    if (bodyHolds && (r.head & m) == 0) return false;
  }
  return true;
}

bool BruteOracle::ruleSupports(const Rule& r, Atom a, const LitSet& l) const {
  if (!std::binary_search(r.head.begin(), r.head.end(), a)) return false;
  for (Literal b : r.body) {
    std::size_t i = indexOfAtom_[b.atom()];
    Mask bit = Mask(1) << i;
    if (b.positive() ? (l.neg & bit) != 0 : (l.pos & bit) != 0) return false;
  }
  for (Atom h : r.head) {
    if (h == a) continue;
    if (l.pos & (Mask(1) << indexOfAtom_[h])) return false;
  }
  return true;
}

bool BruteOracle::isSupportedModel(Mask m) const {
  if (!isClassicalModel(m)) return false;
  LitSet l = completeLitSet(m);
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if ((m & (Mask(1) << i)) == 0) continue;
    Atom a = universe_[i];
    bool supported = false;
    for (const Rule& r : rules_) {
      if (ruleSupports(r, a, l)) {
        supported = true;
        break;
      }
    }
    if (!supported) return false;
  }
  return true;
}

bool BruteOracle::maskSatisfiesRules(const std::vector<Rule>& rules, Mask m) const {
  for (const Rule& r : rules) {
    bool bodyHolds = true;
    for (Literal l : r.body) {
      Mask bit = Mask(1) << indexOfAtom_[l.atom()];
      if (l.positive() ? (m & bit) == 0 : (m & bit) != 0) {
        bodyHolds = false;
        break;
      }
    }
    if (!bodyHolds) continue;
    bool headHolds = false;
    for (Atom a : r.head) {
      if (m & (Mask(1) << indexOfAtom_[a])) {
        headHolds = true;
        break;
      }
    }
    if (!headHolds) return false;
  }
  return true;
}

bool BruteOracle::isStableReduct(Mask m) const {
  std::vector<Rule> red = reduct(rules_, atomsOfMask(m));
  if (!maskSatisfiesRules(red, m)) return false;
  if (m == 0) return true;
  for (Mask y = (m - 1) & m;; y = (y - 1) & m) {
    if (maskSatisfiesRules(red, y)) return false;
    if (y == 0) break;
  }
  return true;
}

bool BruteOracle::isUnfoundedSet(Mask x, const LitSet& l) const {
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    Mask bit = Mask(1) << i;
    if ((x & bit) == 0) continue;
    Atom a = universe_[i];
    for (std::size_t ri = 0; ri < rules_.size(); ++ri) {
      const Rule& r = rules_[ri];
      if (!std::binary_search(r.head.begin(), r.head.end(), a)) continue;
      const RuleMasks& rm = ruleMasks_[ri];
      bool bodyContradicted = (rm.bodyPos & l.neg) != 0 || (rm.bodyNeg & l.pos) != 0;
      if (bodyContradicted) continue;
      if ((rm.bodyPos & x) != 0) continue;
      Mask otherHeads = rm.head & ~(Mask(1) << i);
      if ((otherHeads & ~x & l.pos) != 0) continue;
      return false;
    }
  }
  return true;
}

std::optional<Mask> BruteOracle::findNonemptyUnfoundedSubset(Mask within,
                                                             const LitSet& l) const {
  if (within == 0) return std::nullopt;
  for (Mask x = within;; x = (x - 1) & within) {
    if (x != 0 && isUnfoundedSet(x, l)) return x;
    if (x == 0) break;
  }
  return std::nullopt;
}

bool BruteOracle::isStableUnfounded(Mask m) const {
  if (!isClassicalModel(m)) return false;
  return !findNonemptyUnfoundedSubset(m, completeLitSet(m)).has_value();
}

std::vector<Mask> BruteOracle::classicalModels() const {
  if (width() > 25) {
    throw CapError("model enumeration over " + std::to_string(width()) +
                   " atoms is not tractable");
  }
  std::vector<Mask> out;
  Mask end = Mask(1) << width();
  for (Mask m = 0; m < end; ++m) {
    if (isClassicalModel(m)) out.push_back(m);
  }
  return out;
}

std::vector<Mask> BruteOracle::supportedModels() const {
  std::vector<Mask> out;
  for (Mask m : classicalModels()) {
    if (isSupportedModel(m)) out.push_back(m);
  }
  return out;
}

std::vector<Mask> BruteOracle::stableModelsReduct() const {
  std::vector<Mask> out;
  for (Mask m : classicalModels()) {
    if (isStableReduct(m)) out.push_back(m);
  }
  return out;
}

std::vector<Mask> BruteOracle::stableModelsUnfounded() const {
  std::vector<Mask> out;
  for (Mask m : classicalModels()) {
    if (isStableUnfounded(m)) out.push_back(m);
  }
  return out;
}

bool BruteOracle::satisfiesCompletion(const Completion& c, Mask m) const {
  for (const Clause& cl : c.ruleClauses) {
    bool sat = false;
    for (Literal l : cl) {
      Mask bit = Mask(1) << indexOfAtom_[l.atom()];
      if (l.positive() ? (m & bit) != 0 : (m & bit) == 0) {
        sat = true;
        break;
      }
    }
    if (!sat && !cl.empty()) return false;
    if (cl.empty()) return false;
  }
  for (std::size_t i = 0; i < c.universe.size(); ++i) {
    Mask bit = Mask(1) << indexOfAtom_[c.universe[i]];
    if ((m & bit) == 0) continue;
    bool someSupport = false;
    for (const auto& conj : c.supports[i]) {
      bool holds = true;
      for (Literal l : conj) {
        Mask b = Mask(1) << indexOfAtom_[l.atom()];
        if (l.positive() ? (m & b) == 0 : (m & b) != 0) {
          holds = false;
          break;
        }
      }
      if (holds) {
        someSupport = true;
        break;
      }
    }
    if (!someSupport) return false;
  }
  return true;
}

}  // namespace dasp
