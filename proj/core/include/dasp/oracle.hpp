// Copyright (c) 2026 the dasp authors
// SPDX-License-Identifier: MIT

#ifndef DASP_ORACLE_HPP
#define DASP_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dasp/program.hpp"
#include "dasp/record.hpp"

namespace dasp {

// Interpretations over a fixed sorted atom universe, one bit per atom.
using Mask = std::uint64_t;

// A (possibly partial, possibly inconsistent) set of literals as two masks.
struct LitSet {
  Mask pos = 0;
  Mask neg = 0;
};

class CapError : public std::runtime_error {
 public:
  explicit CapError(const std::string& message) : std::runtime_error(message) {}
};

// The reduct w.r.t. a set of atoms taken as true: rules whose negative body
// meets the set are dropped, the remaining rules lose their negative bodies.
std::vector<Rule> reduct(const std::vector<Rule>& rules,
                         const std::vector<Atom>& positiveAtoms);

// The completion of a program: every rule's clause form, plus one
// "a implies some support" formula per atom, with the support of atom a
// through rule (A | a :- B) being the conjunction of B and the negations
// of the other head atoms A.
struct Completion {
  std::vector<Clause> ruleClauses;
  // supports[i] belongs to universe atom i; each inner vector is one
  // support conjunction (disjunct of the support DNF), rules in program
  // order, body literals before negated head atoms.
  std::vector<std::vector<std::vector<Literal>>> supports;
  std::vector<Atom> universe;
};

Completion completionOf(const Program& p);

// Exhaustive ground semantics over at most `atomCap` atoms (hard limit 62).
// Clauses in the theory act as constraints: they must hold classically and
// they support nothing.
class BruteOracle {
 public:
  explicit BruteOracle(const Theory& t, std::size_t atomCap = 20);

  const std::vector<Atom>& universe() const { return universe_; }
  std::size_t width() const { return universe_.size(); }

  Mask maskOf(const std::vector<Atom>& atoms) const;
  std::vector<Atom> atomsOfMask(Mask m) const;
  LitSet litSetOf(const Record& r) const;
  LitSet completeLitSet(Mask m) const;

  bool isClassicalModel(Mask m) const;
  bool isSupportedModel(Mask m) const;
  bool isStableReduct(Mask m) const;
  bool isStableUnfounded(Mask m) const;

  std::vector<Mask> classicalModels() const;
  std::vector<Mask> supportedModels() const;
  std::vector<Mask> stableModelsReduct() const;
  std::vector<Mask> stableModelsUnfounded() const;

  // Rule (A | a :- B) supports a w.r.t. L iff no literal of B is
  // contradicted by L and no atom of A is in L.
  bool ruleSupports(const Rule& r, Atom a, const LitSet& l) const;

  // X is unfounded on L iff every a in X in every rule with a in the head
  // has a contradicted body, a positive body atom in X, or another head
  // atom outside X that is in L.
  bool isUnfoundedSet(Mask x, const LitSet& l) const;
  std::optional<Mask> findNonemptyUnfoundedSubset(Mask within, const LitSet& l) const;

  bool satisfiesCompletion(const Completion& c, Mask m) const;

  const std::vector<Rule>& materializedRules() const { return rules_; }

 private:
  struct RuleMasks {
    Mask head = 0;
    Mask bodyPos = 0;
    Mask bodyNeg = 0;
  };

  bool maskSatisfiesRules(const std::vector<Rule>& rules, Mask m) const;

  std::vector<Atom> universe_;
  std::vector<std::size_t> indexOfAtom_;
  std::vector<Rule> rules_;
  std::vector<RuleMasks> ruleMasks_;
};

}  // namespace dasp

#endif
