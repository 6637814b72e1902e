// Copyright (c) 2026 the dasp authors
// SPDX-License-Identifier: MIT

#ifndef DASP_COMPONENTS_HPP
#define DASP_COMPONENTS_HPP

#include <cstddef>
#include <vector>

#include "dasp/program.hpp"
#include "dasp/record.hpp"

namespace dasp {

// Strongly connected components of the positive dependency graph (an edge
// from each head atom to each positive body atom), with head-cycle-freeness
// per component: a component is head-cycle-free when no rule has two head
// atoms inside it.
struct Components {
  std::vector<std::vector<Atom>> sccs;   // each sorted; ordered by least atom
  std::vector<bool> headCycleFree;       // per scc
  std::vector<std::size_t> nonHcfSccs;   // indices into sccs, in scc order

  std::size_t sccIndexOf(Atom a) const { return sccOf_[a]; }

  std::vector<std::size_t> sccOf_;
};

Components computeComponents(const Theory& t);

bool isHeadCycleFree(const Theory& t);

// Atoms that belong to some unfounded set confined to their own component,
// w.r.t. the record. Exact for conflict detection on complete consistent
// records; a sound under-approximation elsewhere. Enumerates subsets inside
// non-head-cycle-free components, so their size is capped.
std::vector<Atom> componentUnfoundedAtoms(const Theory& t, const Components& c,
                                          const Record& l,
                                          std::size_t nonHcfCap = 20);

// True when some nonempty unfounded set lies inside the positive part of
// the record (the candidate's atoms), w.r.t. the record itself.
bool hasUnfoundedSubsetOfPositives(const Theory& t, const Components& c,
                                   const Record& l, std::size_t nonHcfCap = 20);

// Same check restricted to head-cycle-free components only.
bool hasHcfUnfoundedSubsetOfPositives(const Theory& t, const Components& c,
                                      const Record& l);

}  // namespace dasp

#endif
