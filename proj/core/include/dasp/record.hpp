// Copyright (c) 2026 the dasp authors
// SPDX-License-Identifier: MIT

#ifndef DASP_RECORD_HPP
#define DASP_RECORD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dasp/literal.hpp"

namespace dasp {

// An ordered, repetition-free string of literals, some marked as decisions,
// plus an optional conflict marker raised by propagation on an empty clause.
// The string may contain an atom in both polarities; that makes it
// inconsistent, as does the conflict marker.
class Record {
 public:
  struct Entry {
    Literal lit;
    bool decision;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Record() = default;

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty() && !falsum_; }

  bool contains(Literal l) const {
    Atom a = l.atom();
    if (a >= flags_.size()) return false;
    return (flags_[a] & (l.positive() ? kPos : kNeg)) != 0;
  }

  bool assigns(Atom a) const {
    return a < flags_.size() && flags_[a] != 0;
  }

  bool hasFalsum() const { return falsum_; }

  bool consistent() const { return !falsum_ && clashCount_ == 0; }
  bool inconsistent() const { return !consistent(); }

  bool hasDecision() const { return decisionCount_ > 0; }
  std::size_t decisionCount() const { return decisionCount_; }

  // Precondition: neither this literal nor a falsum duplicate is present.
  void append(Literal l, bool decision) {
    Atom a = l.atom();
    if (a >= flags_.size()) flags_.resize(a + 1, 0);
    std::uint8_t bit = l.positive() ? kPos : kNeg;
    std::uint8_t other = l.positive() ? kNeg : kPos;
    if ((flags_[a] & other) != 0) ++clashCount_;
    flags_[a] = static_cast<std::uint8_t>(flags_[a] | bit);
    entries_.push_back(Entry{l, decision});
    if (decision) ++decisionCount_;
  }

  void raiseFalsum() { falsum_ = true; }

  void popEntry() {
    Entry e = entries_.back();
    entries_.pop_back();
    if (e.decision) --decisionCount_;
    Atom a = e.lit.atom();
    std::uint8_t bit = e.lit.positive() ? kPos : kNeg;
    std::uint8_t other = e.lit.positive() ? kNeg : kPos;
    if ((flags_[a] & other) != 0) --clashCount_;
    flags_[a] = static_cast<std::uint8_t>(flags_[a] & ~bit);
  }

  // Index of the rightmost decision entry, if any.
  std::optional<std::size_t> lastDecisionIndex() const {
    for (std::size_t i = entries_.size(); i-- > 0;) {
      if (entries_[i].decision) return i;
    }
    return std::nullopt;
  }

  // L l^d L'  =>  L (opposite l); drops the falsum marker with the suffix
  // and returns the flipped literal.
  Literal flipLastDecision() {
    auto idx = lastDecisionIndex();
    Literal l = entries_[*idx].lit;
    while (entries_.size() > *idx) popEntry();
    falsum_ = false;
    Literal flipped = l.opposite();
    append(flipped, false);
    return flipped;
  }

  // Removes everything after position idx inclusive.
  void truncate(std::size_t idx) {
    while (entries_.size() > idx) popEntry();
    falsum_ = false;
  }

  void clear() {
    entries_.clear();
    flags_.assign(flags_.size(), 0);
    clashCount_ = 0;
    decisionCount_ = 0;
    falsum_ = false;
  }

  // True if every atom in the sorted list is assigned.
  bool covers(const std::vector<Atom>& atoms) const {
    for (Atom a : atoms) {
      if (!assigns(a)) return false;
    }
    return true;
  }

  // Atoms assigned positively, restricted to the given sorted universe.
  std::vector<Atom> positivePart(const std::vector<Atom>& universe) const {
    std::vector<Atom> out;
    for (Atom a : universe) {
      if (contains(Literal::pos(a))) out.push_back(a);
    }
    return out;
  }

  // Literals over the given universe, in universe order (both polarities
  // possible for an inconsistent record).
  std::vector<Literal> restriction(const std::vector<Atom>& universe) const {
    std::vector<Literal> out;
    for (Atom a : universe) {
      if (contains(Literal::neg(a))) out.push_back(Literal::neg(a));
      if (contains(Literal::pos(a))) out.push_back(Literal::pos(a));
    }
    return out;
  }

  // Lengths of the decision-delimited segments: |L0|, |L1|, ..., |Lk| for
  // L0 d1 L1 ... dk Lk. Decision literals start a fresh segment and are not
  // counted inside it.
  std::vector<std::size_t> depthSequence() const {
    std::vector<std::size_t> seq{0};
    for (const Entry& e : entries_) {
      if (e.decision) {
        seq.push_back(0);
      } else {
        ++seq.back();
      }
    }
    return seq;
  }

  // Key that forgets order within decision-delimited segments; used to
  // quotient exploration graphs.
  std::string quotientKey(const AtomTable& tab) const;

  std::string render(const AtomTable& tab) const;

  friend bool operator==(const Record& a, const Record& b) {
    return a.entries_ == b.entries_ && a.falsum_ == b.falsum_;
  }

 private:
  static constexpr std::uint8_t kPos = 1;
  static constexpr std::uint8_t kNeg = 2;

  std::vector<Entry> entries_;
  std::vector<std::uint8_t> flags_;
  std::size_t clashCount_ = 0;
  std::size_t decisionCount_ = 0;
  bool falsum_ = false;
};

}  // namespace dasp

#endif
