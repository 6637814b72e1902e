// Copyright (c) 2026 the dasp authors
// SPDX-License-Identifier: MIT

#ifndef DASP_PROGRAM_HPP
#define DASP_PROGRAM_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "dasp/literal.hpp"

namespace dasp {

// A disjunctive rule a1 | ... | ak :- b1, ..., bm. Head atoms and body
// literals are kept sorted and duplicate-free; rule order in a program is
// meaningful and preserved.
struct Rule {
  std::vector<Atom> head;
  std::vector<Literal> body;

  friend auto operator<=>(const Rule&, const Rule&) = default;
};

// A propositional clause: an ordered literal sequence. Duplicates are
// preserved; structural identity of generated formulas depends on it.
using Clause = std::vector<Literal>;

struct Program {
  std::shared_ptr<AtomTable> atoms;
  std::vector<Rule> rules;
};

struct Formula {
  std::shared_ptr<AtomTable> atoms;
  std::vector<Clause> clauses;
};

// What the engines run on: rules contribute support and unfounded-set
// structure as well as their clause forms; bare clauses contribute clause
// forms only.
struct Theory {
  std::shared_ptr<AtomTable> atoms;
  std::vector<Rule> rules;
  std::vector<Clause> clauses;
};

inline Theory theoryOf(const Program& p) { return Theory{p.atoms, p.rules, {}}; }
inline Theory theoryOf(const Formula& f) { return Theory{f.atoms, {}, f.clauses}; }

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column)
      : std::runtime_error(message + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Parses the textual rule format. Throws ParseError on malformed input.
// An existing table may be supplied so several programs share atom ids.
Program parseProgram(std::string_view text,
                     std::shared_ptr<AtomTable> table = nullptr);

std::string renderRule(const AtomTable& tab, const Rule& r);
std::string renderProgram(const Program& p);

// Renders a clause as the constraint rule that forbids its violation.
std::string renderClauseAsRule(const AtomTable& tab, const Clause& c);
std::string renderClause(const AtomTable& tab, const Clause& c);
std::string renderFormula(const Formula& f);

// The clause form of a rule: head atoms positively, body literals negated,
// head first, both parts in canonical order.
Clause clauseForm(const Rule& r);

// Sorted distinct atoms occurring in rules and clauses.
std::vector<Atom> atomsOf(const Theory& t);
std::vector<Atom> atomsOf(const Program& p);
std::vector<Atom> atomsOf(const Formula& f);

// Canonical program view: rules sorted lexicographically, duplicates removed.
std::vector<Rule> canonicalRules(const std::vector<Rule>& rules);

// Normalizes head and body of a freshly built rule (sort, dedup).
Rule makeRule(std::vector<Atom> head, std::vector<Literal> body);

}  // namespace dasp

#endif
