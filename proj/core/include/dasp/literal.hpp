// Copyright (c) 2026 the dasp authors
// SPDX-License-Identifier: MIT

#ifndef DASP_LITERAL_HPP
#define DASP_LITERAL_HPP

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dasp {

using Atom = std::uint32_t;

// A literal is an atom or its classical negation. Encoded as a single
// integer so that literals order canonically: for one atom the negative
// literal precedes the positive one, and atoms order by id.
class Literal {
 public:
  Literal() : code_(0) {}
  static Literal pos(Atom a) { return Literal(2 * a + 1); }
  static Literal neg(Atom a) { return Literal(2 * a); }

  Atom atom() const { return code_ / 2; }
  bool positive() const { return (code_ & 1u) != 0; }
  bool negative() const { return (code_ & 1u) == 0; }
  Literal opposite() const { return Literal(code_ ^ 1u); }

  std::uint32_t code() const { return code_; }
  static Literal fromCode(std::uint32_t c) { return Literal(c); }

  friend auto operator<=>(Literal, Literal) = default;

 private:
  explicit Literal(std::uint32_t code) : code_(code) {}
  std::uint32_t code_;
};

// Interns atom names in first-seen order; ids are dense and stable.
class AtomTable {
 public:
  Atom intern(std::string_view name) {
    auto it = index_.find(std::string(name));
    if (it != index_.end()) return it->second;
    Atom id = static_cast<Atom>(names_.size());
    names_.emplace_back(name);
    index_.emplace(names_.back(), id);
    return id;
  }

  bool contains(std::string_view name) const {
    return index_.find(std::string(name)) != index_.end();
  }

  const std::string& name(Atom a) const { return names_[a]; }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Atom> index_;
};

inline std::string renderLiteral(const AtomTable& tab, Literal l) {
  if (l.positive()) return tab.name(l.atom());
  return "not " + tab.name(l.atom());
}

// Classical rendering (for clauses): "-a" instead of "not a".
inline std::string renderClassical(const AtomTable& tab, Literal l) {
  if (l.positive()) return tab.name(l.atom());
  return "-" + tab.name(l.atom());
}

}  // namespace dasp

#endif
