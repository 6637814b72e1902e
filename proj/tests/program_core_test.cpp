// Copyright (c) 2026 the dasp authors
// SPDX-License-Identifier: MIT

#include <doctest.h>

#include "dasp/program.hpp"
#include "dasp/record.hpp"

using namespace dasp;

TEST_SUITE_BEGIN("program_core");

TEST_CASE("parses facts, constraints and disjunctive rules") {
  Program p = parseProgram("a.\n a | b :- c, not d.\n :- a, not c.\n :-.\n");
  REQUIRE(p.rules.size() == 4);
  CHECK(p.rules[0].head.size() == 1);
  CHECK(p.rules[0].body.empty());
  CHECK(p.rules[1].head.size() == 2);
  CHECK(p.rules[1].body.size() == 2);
  CHECK(p.rules[2].head.empty());
  CHECK(p.rules[3].head.empty());
  CHECK(p.rules[3].body.empty());

  Atom a = p.atoms->intern("a");
  Atom c = p.atoms->intern("c");
  Atom d = p.atoms->intern("d");
  CHECK(p.rules[1].body[0] == Literal::pos(c));
  CHECK(p.rules[1].body[1] == Literal::neg(d));
  CHECK(p.rules[2].body[0] == Literal::pos(a));
  CHECK(p.rules[2].body[1] == Literal::neg(c));
}

TEST_CASE("head and body are sorted and duplicate-free") {
  Program p = parseProgram("b | a | b :- c, c, not d, a.");
  REQUIRE(p.rules.size() == 1);
  const Rule& r = p.rules[0];
  CHECK(r.head.size() == 2);
  CHECK(std::is_sorted(r.head.begin(), r.head.end()));
  CHECK(r.body.size() == 3);
  CHECK(std::is_sorted(r.body.begin(), r.body.end()));
}

TEST_CASE("comments and whitespace are skipped") {
  Program p = parseProgram("% leading comment\n a :- % inline\n   b. % trailing\n");
  REQUIRE(p.rules.size() == 1);
  CHECK(p.rules[0].head.size() == 1);
  CHECK(p.rules[0].body.size() == 1);
}

TEST_CASE("negation requires whitespace and binds one atom") {
  Program p = parseProgram("a :- not b.\nc :- nota.\nd :- not.\n");
  CHECK(p.rules[0].body[0] == Literal::neg(p.atoms->intern("b")));
  CHECK(p.rules[1].body[0] == Literal::pos(p.atoms->intern("nota")));
  CHECK(p.rules[2].body[0] == Literal::pos(p.atoms->intern("not")));
}

TEST_CASE("rejects malformed input") {
  CHECK_THROWS_AS(parseProgram("."), ParseError);
  CHECK_THROWS_AS(parseProgram("a"), ParseError);
  CHECK_THROWS_AS(parseProgram("A."), ParseError);
  CHECK_THROWS_AS(parseProgram("a | ."), ParseError);
  CHECK_THROWS_AS(parseProgram("a :- b,."), ParseError);
  CHECK_THROWS_AS(parseProgram("a :- not ."), ParseError);
  CHECK_THROWS_AS(parseProgram("a__b."), ParseError);
  CHECK_THROWS_AS(parseProgram("a :- x__r."), ParseError);
  CHECK_THROWS_AS(parseProgram("a b."), ParseError);
}

TEST_CASE("parse error carries position") {
  try {
    parseProgram("a.\nb :- c,\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() >= 2);
  }
}

TEST_CASE("rendering is canonical and reparse-stable") {
  std::string src = "b|a:-c,not d,c.\n:-.\na.\n";
  Program p1 = parseProgram(src);
  std::string s1 = renderProgram(p1);
  Program p2 = parseProgram(s1);
  std::string s2 = renderProgram(p2);
  CHECK(s1 == s2);
  CHECK(s1 == "b | a :- c, not d.\n:-.\na.\n");
}

TEST_CASE("clause form puts head first then negated body") {
  Program p = parseProgram("a | b :- c, not d.");
  Clause c = clauseForm(p.rules[0]);
  Atom a = p.atoms->intern("a");
  Atom b = p.atoms->intern("b");
  Atom cc = p.atoms->intern("c");
  Atom d = p.atoms->intern("d");
  REQUIRE(c.size() == 4);
  CHECK(c[0] == Literal::pos(a));
  CHECK(c[1] == Literal::pos(b));
  CHECK(c[2] == Literal::neg(cc));
  CHECK(c[3] == Literal::pos(d));
}

TEST_CASE("atomsOf collects head and body atoms sorted") {
  Program p = parseProgram("x :- y, not z.\nw.\n");
  std::vector<Atom> atoms = atomsOf(p);
  CHECK(atoms.size() == 4);
  CHECK(std::is_sorted(atoms.begin(), atoms.end()));
}

TEST_CASE("canonicalRules sorts and dedups") {
  Program p = parseProgram("b.\na.\nb.\n");
  std::vector<Rule> canon = canonicalRules(p.rules);
  CHECK(canon.size() == 2);
  CHECK(canon[0] < canon[1]);
}

TEST_CASE("literal ordering puts negative before positive per atom") {
  CHECK(Literal::neg(0) < Literal::pos(0));
  CHECK(Literal::pos(0) < Literal::neg(1));
}

TEST_CASE("record append, membership and consistency") {
  Record r;
  r.append(Literal::pos(0), true);
  r.append(Literal::neg(1), false);
  CHECK(r.contains(Literal::pos(0)));
  CHECK(!r.contains(Literal::neg(0)));
  CHECK(r.assigns(1));
  CHECK(r.consistent());
  r.append(Literal::neg(0), false);
  CHECK(r.inconsistent());
  r.popEntry();
  CHECK(r.consistent());
}

TEST_CASE("falsum makes a record inconsistent") {
  Record r;
  CHECK(r.consistent());
  r.raiseFalsum();
  CHECK(r.inconsistent());
  CHECK(r.hasFalsum());
}

TEST_CASE("flipLastDecision drops the tail and negates the decision") {
  Record r;
  r.append(Literal::pos(0), false);
  r.append(Literal::pos(1), true);
  r.append(Literal::pos(2), false);
  r.append(Literal::neg(3), true);
  r.append(Literal::pos(4), false);
  Literal flipped = r.flipLastDecision();
  CHECK(flipped == Literal::pos(3));
  REQUIRE(r.size() == 4);
  CHECK(r.entries()[3].lit == Literal::pos(3));
  CHECK(!r.entries()[3].decision);
  CHECK(r.hasDecision());
  Literal again = r.flipLastDecision();
  CHECK(again == Literal::neg(1));
  CHECK(r.size() == 2);
  CHECK(!r.hasDecision());
}

TEST_CASE("depth sequence counts segment lengths") {
  Record r;
  CHECK(r.depthSequence() == std::vector<std::size_t>{0});
  r.append(Literal::pos(0), false);
  r.append(Literal::pos(1), false);
  r.append(Literal::pos(2), true);
  r.append(Literal::pos(3), false);
  CHECK(r.depthSequence() == std::vector<std::size_t>({2, 1}));
}

TEST_CASE("covers and positive part respect the universe") {
  Record r;
  r.append(Literal::pos(1), false);
  r.append(Literal::neg(2), false);
  std::vector<Atom> universe{1, 2};
  CHECK(r.covers(universe));
  CHECK(!r.covers(std::vector<Atom>{1, 2, 3}));
  CHECK(r.positivePart(universe) == std::vector<Atom>{1});
  auto lits = r.restriction(std::vector<Atom>{1, 2, 3});
  REQUIRE(lits.size() == 2);
  CHECK(lits[0] == Literal::pos(1));
  CHECK(lits[1] == Literal::neg(2));
}

TEST_CASE("quotient key forgets order inside segments only") {
  AtomTable tab;
  Record r1;
  r1.append(Literal::pos(0), false);
  r1.append(Literal::neg(1), false);
  r1.append(Literal::pos(2), true);
  r1.append(Literal::pos(3), false);
  Record r2;
  r2.append(Literal::neg(1), false);
  r2.append(Literal::pos(0), false);
  r2.append(Literal::pos(2), true);
  r2.append(Literal::pos(3), false);
  Record r3;
  r3.append(Literal::pos(0), false);
  r3.append(Literal::pos(2), true);
  r3.append(Literal::neg(1), false);
  r3.append(Literal::pos(3), false);
  CHECK(r1.quotientKey(tab) == r2.quotientKey(tab));
  CHECK(r1.quotientKey(tab) != r3.quotientKey(tab));
}

TEST_CASE("record render marks decisions and falsum") {
  AtomTable tab;
  Atom a = tab.intern("a");
  Atom b = tab.intern("b");
  Record r;
  r.append(Literal::pos(a), true);
  r.append(Literal::neg(b), false);
  CHECK(r.render(tab) == "a* -b");
  r.raiseFalsum();
  CHECK(r.render(tab) == "a* -b #false");
}

TEST_SUITE_END();
