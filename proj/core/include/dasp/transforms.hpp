// Copyright (c) 2026 the dasp authors
// SPDX-License-Identifier: MIT

#ifndef DASP_TRANSFORMS_HPP
#define DASP_TRANSFORMS_HPP

#include <string>
#include <vector>

#include "dasp/program.hpp"
#include "dasp/record.hpp"

namespace dasp {

// Names for generated atoms. User atoms cannot contain "__", and the
// literal tags P/N keep distinct bodies distinct, so these are injective.
std::string bodyKey(const AtomTable& tab, const std::vector<Literal>& body);
Atom auxBodyAtom(AtomTable& tab, const std::vector<Literal>& body);
Atom auxHeadBodyAtom(AtomTable& tab, Atom a, const std::vector<Literal>& body);
Atom auxRejectAtom(AtomTable& tab, Atom a);
Atom auxSupportAtom(AtomTable& tab, Atom a);

// Clausified completion: every rule's clause form, then for each atom the
// distributed support clauses.
Formula cnfcomp(const Program& p);

// Clausified completion through explicit definitions for bodies and for
// (head atom, rule) pairs of disjunctive rules.
Formula genCmodels(const Program& p);

// Minimality test formula for a candidate record: some candidate atom must
// be dropped, no new atom may be added, and the candidate-kept reduct rules
// stay in force.
Formula testCmodels(const Program& p, const Record& candidate);

// Rewrites disjunction through choice on the head atoms plus saturation
// constraints requiring each chosen atom to be supported.
Program genGnt(const Program& p);

// Minimality test program for a candidate record, searching for a proper
// submodel of the candidate-kept reduct.
Program testGnt(const Program& p, const Record& candidate);

// Minimality test clauses for a candidate record: kept reduct rules with
// their candidate head atoms, plus one clause dropping some candidate atom.
Formula testDlv(const Program& p, const Record& candidate);

// Degenerate witness for head-cycle-free programs: decided by a direct
// unfounded-set check, yielding an unsatisfiable or an empty formula.
Formula testDlv0(const Program& p, const Record& candidate);

}  // namespace dasp

#endif
