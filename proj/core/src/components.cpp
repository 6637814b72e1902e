// Copyright (c) 2026 the dasp authors
// SPDX-License-Identifier: MIT

#include "dasp/components.hpp"

#include <algorithm>
#include <set>

#include "dasp/oracle.hpp"

namespace dasp {
namespace {

struct HeadIndex {
  std::vector<std::vector<std::size_t>> rulesWithHead;  // by raw atom id

  HeadIndex(const Theory& t, Atom maxAtom) {
    rulesWithHead.resize(maxAtom + 1);
    for (std::size_t i = 0; i < t.rules.size(); ++i) {
      for (Atom a : t.rules[i].head) rulesWithHead[a].push_back(i);
    }
  }
};

// A rule leaves atom `a` inside a candidate set exactly when none of the
// three release conditions holds: contradicted body, positive body atom in
// the set, or another head atom outside the set that the record holds true.
bool ruleReleases(const Rule& r, Atom a, const Record& l,
                  const std::set<Atom>& x) {
  for (Literal b : r.body) {
    if (l.contains(b.opposite())) return false;
  }
  for (Literal b : r.body) {
    if (b.positive() && x.count(b.atom())) return false;
  }
  for (Atom h : r.head) {
    if (h != a && !x.count(h) && l.contains(Literal::pos(h))) return false;
  }
  return true;
}

bool isUnfounded(const Theory& t, const HeadIndex& idx, const Record& l,
                 const std::set<Atom>& x) {
  for (Atom a : x) {
    for (std::size_t ri : idx.rulesWithHead[a]) {
      if (ruleReleases(t.rules[ri], a, l, x)) return false;
    }
  }
  return true;
}

// Greatest unfounded subset of the domain, valid when no rule has two head
// atoms inside the domain's component (the release test is then monotone).
std::set<Atom> fixpointUnfounded(const Theory& t, const HeadIndex& idx,
                                 const Record& l, const std::vector<Atom>& domain) {
  std::set<Atom> x(domain.begin(), domain.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = x.begin(); it != x.end();) {
      bool released = false;
      for (std::size_t ri : idx.rulesWithHead[*it]) {
        if (ruleReleases(t.rules[ri], *it, l, x)) {
          released = true;
          break;
        }
      }
      if (released) {
        it = x.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  return x;
}

// Union of all unfounded subsets of the domain, by enumeration.
std::set<Atom> enumeratedUnfounded(const Theory& t, const HeadIndex& idx,
                                   const Record& l, const std::vector<Atom>& domain,
                                   std::size_t cap) {
  if (domain.size() > cap) {
    throw CapError("non-head-cycle-free component of size " +
                   std::to_string(domain.size()) + " exceeds the cap of " +
                   std::to_string(cap));
  }
  std::set<Atom> found;
  std::uint64_t end = std::uint64_t(1) << domain.size();
  for (std::uint64_t bits = 1; bits < end; ++bits) {
    std::set<Atom> x;
    for (std::size_t i = 0; i < domain.size(); ++i) {
      if (bits & (std::uint64_t(1) << i)) x.insert(domain[i]);
    }
    bool alreadyCovered =
        std::includes(found.begin(), found.end(), x.begin(), x.end());
    if (alreadyCovered) continue;
    if (isUnfounded(t, idx, l, x)) found.insert(x.begin(), x.end());
  }
  return found;
}

std::vector<Atom> positiveDomain(const std::vector<Atom>& scc, const Record& l) {
  std::vector<Atom> out;
  for (Atom a : scc) {
    if (l.contains(Literal::pos(a))) out.push_back(a);
  }
  return out;
}

}  // namespace

Components computeComponents(const Theory& t) {
  Components c;
  std::vector<Atom> universe = atomsOf(t);
  if (universe.empty()) return c;
  Atom maxAtom = universe.back();

  std::vector<std::vector<Atom>> succ(maxAtom + 1);
  for (const Rule& r : t.rules) {
    for (Atom h : r.head) {
      for (Literal b : r.body) {
        if (b.positive()) succ[h].push_back(b.atom());
      }
    }
  }

  // Iterative Tarjan over the universe.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(maxAtom + 1, kUnset);
  std::vector<std::size_t> low(maxAtom + 1, 0);
  std::vector<bool> onStack(maxAtom + 1, false);
  std::vector<Atom> stack;
  std::size_t counter = 0;

  struct Frame {
    Atom atom;
    std::size_t child;
  };

  for (Atom root : universe) {
    if (index[root] != kUnset) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    onStack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.child < succ[f.atom].size()) {
        Atom next = succ[f.atom][f.child++];
        if (index[next] == kUnset) {
          index[next] = low[next] = counter++;
          stack.push_back(next);
          onStack[next] = true;
          frames.push_back(Frame{next, 0});
        } else if (onStack[next]) {
          low[f.atom] = std::min(low[f.atom], index[next]);
        }
      } else {
        if (low[f.atom] == index[f.atom]) {
          std::vector<Atom> scc;
          while (true) {
            Atom a = stack.back();
            stack.pop_back();
            onStack[a] = false;
            scc.push_back(a);
            if (a == f.atom) break;
          }
          std::sort(scc.begin(), scc.end());
          c.sccs.push_back(std::move(scc));
        }
        Atom done = f.atom;
        frames.pop_back();
        if (!frames.empty()) {
          low[frames.back().atom] = std::min(low[frames.back().atom], low[done]);
        }
      }
    }
  }

  std::sort(c.sccs.begin(), c.sccs.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  c.sccOf_.assign(maxAtom + 1, 0);
  for (std::size_t i = 0; i < c.sccs.size(); ++i) {
    for (Atom a : c.sccs[i]) c.sccOf_[a] = i;
  }

  c.headCycleFree.assign(c.sccs.size(), true);
  for (const Rule& r : t.rules) {
    if (r.head.size() < 2) continue;
    for (std::size_t i = 0; i < r.head.size(); ++i) {
      for (std::size_t j = i + 1; j < r.head.size(); ++j) {
        if (c.sccOf_[r.head[i]] == c.sccOf_[r.head[j]]) {
          c.headCycleFree[c.sccOf_[r.head[i]]] = false;
        }
      }
    }
  }
  for (std::size_t i = 0; i < c.sccs.size(); ++i) {
    if (!c.headCycleFree[i]) c.nonHcfSccs.push_back(i);
  }
  return c;
}

bool isHeadCycleFree(const Theory& t) {
  return computeComponents(t).nonHcfSccs.empty();
}

std::vector<Atom> componentUnfoundedAtoms(const Theory& t, const Components& c,
                                          const Record& l, std::size_t nonHcfCap) {
  std::vector<Atom> universe = atomsOf(t);
  if (universe.empty()) return {};
  HeadIndex idx(t, universe.back());
  std::set<Atom> out;
  for (std::size_t i = 0; i < c.sccs.size(); ++i) {
    std::set<Atom> part =
        c.headCycleFree[i]
            ? fixpointUnfounded(t, idx, l, c.sccs[i])
            : enumeratedUnfounded(t, idx, l, c.sccs[i], nonHcfCap);
    out.insert(part.begin(), part.end());
  }
  return std::vector<Atom>(out.begin(), out.end());
}

bool hasUnfoundedSubsetOfPositives(const Theory& t, const Components& c,
                                   const Record& l, std::size_t nonHcfCap) {
  std::vector<Atom> universe = atomsOf(t);
  if (universe.empty()) return false;
  HeadIndex idx(t, universe.back());
  for (std::size_t i = 0; i < c.sccs.size(); ++i) {
    std::vector<Atom> domain = positiveDomain(c.sccs[i], l);
    if (domain.empty()) continue;
    if (c.headCycleFree[i]) {
      if (!fixpointUnfounded(t, idx, l, domain).empty()) return true;
    } else {
      if (!enumeratedUnfounded(t, idx, l, domain, nonHcfCap).empty()) return true;
    }
  }
  return false;
}

bool hasHcfUnfoundedSubsetOfPositives(const Theory& t, const Components& c,
                                      const Record& l) {
  std::vector<Atom> universe = atomsOf(t);
  if (universe.empty()) return false;
  HeadIndex idx(t, universe.back());
  for (std::size_t i = 0; i < c.sccs.size(); ++i) {
    if (!c.headCycleFree[i]) continue;
    std::vector<Atom> domain = positiveDomain(c.sccs[i], l);
    if (domain.empty()) continue;
    if (!fixpointUnfounded(t, idx, l, domain).empty()) return true;
  }
  return false;
}

}  // namespace dasp
