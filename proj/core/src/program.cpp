// Copyright (c) 2026 the dasp authors
// SPDX-License-Identifier: MIT

#include "dasp/program.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace dasp {
namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skipSpace() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        if (c == '\n') {
          ++line_;
          lineStart_ = pos_ + 1;
        }
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool atEnd() {
    skipSpace();
    return pos_ >= text_.size();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool consume(char c) {
    skipSpace();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool consumeArrow() {
    skipSpace();
    if (pos_ + 1 < text_.size() && text_[pos_] == ':' && text_[pos_ + 1] == '-') {
      pos_ += 2;
      return true;
    }
    return false;
  }

  // Reads a word [a-z][A-Za-z0-9_]*; empty result means no word here.
  std::string word() {
    skipSpace();
    if (pos_ >= text_.size() || !std::islower(static_cast<unsigned char>(text_[pos_]))) {
      return {};
    }
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++pos_;
      } else {
        break;
      }
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  bool nextIsSpace() const {
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '%';
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, pos_ - lineStart_ + 1);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t lineStart_ = 0;
};

void checkAtomName(Lexer& lex, const std::string& name) {
  if (name.find("__") != std::string::npos) {
    lex.fail("atom name '" + name + "' contains the reserved sequence '__'");
  }
}

}  // namespace

Rule makeRule(std::vector<Atom> head, std::vector<Literal> body) {
  std::sort(head.begin(), head.end());
  head.erase(std::unique(head.begin(), head.end()), head.end());
  std::sort(body.begin(), body.end());
  body.erase(std::unique(body.begin(), body.end()), body.end());
  return Rule{std::move(head), std::move(body)};
}

Program parseProgram(std::string_view text, std::shared_ptr<AtomTable> table) {
  Program p;
  p.atoms = table ? std::move(table) : std::make_shared<AtomTable>();
  Lexer lex(text);

  while (!lex.atEnd()) {
    std::vector<Atom> head;
    std::vector<Literal> body;
    bool sawHead = false;
    bool sawArrow = false;

    std::string first = lex.word();
    if (!first.empty()) {
      checkAtomName(lex, first);
      sawHead = true;
      head.push_back(p.atoms->intern(first));
      while (lex.consume('|')) {
        std::string next = lex.word();
        if (next.empty()) lex.fail("expected atom after '|'");
        checkAtomName(lex, next);
        head.push_back(p.atoms->intern(next));
      }
    }

    if (lex.consumeArrow()) {
      sawArrow = true;
      bool expectLit = false;
      while (true) {
        std::string w = lex.word();
        if (w.empty()) {
          if (expectLit) lex.fail("expected literal after ','");
          break;
        }
        bool negate = false;
        if (w == "not" && lex.nextIsSpace()) {
          std::string a = lex.word();
          if (a.empty()) lex.fail("expected atom after 'not'");
          checkAtomName(lex, a);
          negate = true;
          w = a;
        } else {
          checkAtomName(lex, w);
        }
        Atom a = p.atoms->intern(w);
        body.push_back(negate ? Literal::neg(a) : Literal::pos(a));
        if (!lex.consume(',')) break;
        expectLit = true;
      }
    }

    if (!sawHead && !sawArrow) {
      lex.fail("expected a rule");
    }
    if (!lex.consume('.')) {
      lex.fail("expected '.' at end of rule");
    }
    p.rules.push_back(makeRule(std::move(head), std::move(body)));
  }
  return p;
}

std::string renderRule(const AtomTable& tab, const Rule& r) {
  std::string out;
  for (std::size_t i = 0; i < r.head.size(); ++i) {
    if (i) out += " | ";
    out += tab.name(r.head[i]);
  }
  if (!r.body.empty() || r.head.empty()) {
    out += r.head.empty() ? ":-" : " :-";
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      out += i ? ", " : " ";
      out += renderLiteral(tab, r.body[i]);
    }
  }
  out += ".";
  return out;
}

std::string renderProgram(const Program& p) {
  std::string out;
  for (const Rule& r : p.rules) {
    out += renderRule(*p.atoms, r);
    out += "\n";
  }
  return out;
}

std::string renderClauseAsRule(const AtomTable& tab, const Clause& c) {
  std::string out = ":-";
  for (std::size_t i = 0; i < c.size(); ++i) {
    out += i ? ", " : " ";
    out += renderLiteral(tab, c[i].opposite());
  }
  out += ".";
  return out;
}

std::string renderClause(const AtomTable& tab, const Clause& c) {
  if (c.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += " | ";
    out += renderClassical(tab, c[i]);
  }
  return out;
}

std::string renderFormula(const Formula& f) {
  std::string out;
  for (const Clause& c : f.clauses) {
    out += renderClause(*f.atoms, c);
    out += "\n";
  }
  return out;
}

Clause clauseForm(const Rule& r) {
  Clause c;
  c.reserve(r.head.size() + r.body.size());
  for (Atom a : r.head) c.push_back(Literal::pos(a));
  for (Literal l : r.body) c.push_back(l.opposite());
  return c;
}

std::vector<Atom> atomsOf(const Theory& t) {
  std::set<Atom> seen;
  for (const Rule& r : t.rules) {
    seen.insert(r.head.begin(), r.head.end());
    for (Literal l : r.body) seen.insert(l.atom());
  }
  for (const Clause& c : t.clauses) {
    for (Literal l : c) seen.insert(l.atom());
  }
  return std::vector<Atom>(seen.begin(), seen.end());
}

std::vector<Atom> atomsOf(const Program& p) { return atomsOf(Theory{p.atoms, p.rules, {}}); }
std::vector<Atom> atomsOf(const Formula& f) { return atomsOf(Theory{f.atoms, {}, f.clauses}); }

std::vector<Rule> canonicalRules(const std::vector<Rule>& rules) {
  std::vector<Rule> out = rules;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace dasp
