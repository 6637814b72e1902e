// Copyright (c) 2026 the dasp authors
// SPDX-License-Identifier: MIT

#include "dasp/record.hpp"

#include <algorithm>

namespace dasp {

std::string Record::quotientKey(const AtomTable&) const {
  std::string key;
  std::vector<std::uint32_t> segment;
  auto flush = [&] {
    std::sort(segment.begin(), segment.end());
    for (std::uint32_t c : segment) {
      key += std::to_string(c);
      key += ',';
    }
    segment.clear();
    key += ';';
  };
  for (const Entry& e : entries_) {
    if (e.decision) {
      flush();
      key += 'd';
      key += std::to_string(e.lit.code());
      key += ';';
    } else {
      segment.push_back(e.lit.code());
    }
  }
  flush();
  if (falsum_) key += '!';
  return key;
}

std::string Record::render(const AtomTable& tab) const {
  std::string out;
  for (const Entry& e : entries_) {
    if (!out.empty()) out += ' ';
    out += renderClassical(tab, e.lit);
    if (e.decision) out += '*';
  }
  if (falsum_) {
    if (!out.empty()) out += ' ';
    out += "#false";
  }
  return out;
}

}  // namespace dasp
