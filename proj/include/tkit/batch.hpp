#pragma once

#include <string>
#include <vector>

#include "tkit/enumerator.hpp"
#include "tkit/nat.hpp"
#include "tkit/normalize.hpp"
#include "tkit/reducibility.hpp"

namespace tkit {

// Batch drivers over independent normalizations.  `threads` selects the
// execution lane: 1 runs the plain serial loop (the reference), 0 uses the
// OpenMP default, anything else pins the team size.  Results are collected
// into index-addressed slots, so output order never depends on the lane.

struct RoundtripRow {
  std::string term;   // canonical census term
  Nat code;           // its oslash code
  bool in_range = false;
  bool ok = false;
  uint64_t steps = 0;
  uint64_t delta_hits = 0;
  double wall_ms = 0.0;
  std::string produced;  // normal form of E applied to the code
  std::string error;
};

struct RoundtripReport {
  std::string type_text;
  std::vector<RoundtripRow> rows;
  size_t checked = 0;
  size_t passed = 0;
  bool all_ok = true;  // over the in-range rows
};

RoundtripReport roundtrip_suite(const TypePtr& tau, const Nat& max_code,
                                uint32_t census_size, const Budget& budget,
                                int threads);

// Normalizes N A for every census element and checks that the resulting
// numerals separate terms exactly: equal numeral iff alpha-equal term.
struct SeparationReport {
  std::vector<Nat> numerals;  // one per census element
  size_t pairs_checked = 0;
  bool all_ok = true;
  std::vector<std::string> failures;
};

SeparationReport separation_suite(const std::vector<TermPtr>& census,
                                  const ReducibilityWitness& witness,
                                  const Budget& budget, int threads);

int effective_threads(int requested);

}  // namespace tkit
