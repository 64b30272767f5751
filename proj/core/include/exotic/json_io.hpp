#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "exotic/family.hpp"
#include "exotic/gap.hpp"
#include "exotic/search.hpp"
#include "exotic/selftest.hpp"
#include "exotic/verify.hpp"

namespace exotic {

// Machine-readable output. Every JSON writer emits exactly one document,
// an array at top level, in a fixed key order. Rationals use the shared
// text format; integers are decimal strings.

void write_triples_json(std::ostream& out, const std::vector<ExoticTriple>& triples);

/// Columns: a, b, c, root_a1, root_b1, root_c1, root_ab1, root_ac1,
/// root_bc1, root_abc1 (one header line, then one row per triple).
void write_triples_csv(std::ostream& out, const std::vector<ExoticTriple>& triples);

void write_verify_json(std::ostream& out, const Rat& a, const Rat& b, const Rat& c,
                       const VerifyResult& result);

void write_search_outcome_json(std::ostream& out, const SearchOutcome& outcome);
void write_search_stats(std::ostream& err, const IntegerSearchStats& stats);

void write_case1_json(std::ostream& out, const std::vector<Case1Hit>& hits);

void write_gap_sweep_json(std::ostream& out, const GapSweepResult& result);

void write_suites_json(std::ostream& out, const std::vector<SuiteResult>& suites);

}  // namespace exotic
