#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "exotic/family.hpp"

namespace exotic {

/// An integer triple where {1,a,b,c} is a Diophantine quadruple but abc+1
/// is not a square, i.e. the only obstruction to being exotic.
struct IntegerNearMiss {
  long a;
  long b;
  long c;
  bool c_gt_4ab;  // observed, never assumed
};

struct IntegerSearchStats {
  long pairs_examined = 0;       // (a, b) candidates of square-minus-one form
  long pairs_admissible = 0;     // pairs surviving the ab+1 square prune
  long c_candidates = 0;         // (a, b, c) candidates entering the c loop
  long pruned_ac = 0;            // dropped because ac+1 is not a square
  long pruned_bc = 0;            // dropped because bc+1 is not a square
  long quadruples = 0;           // {1,a,b,c} Diophantine quadruples found
};

struct SearchOutcome {
  /// Integer exotic triples; provably none exist, so any entry signals an
  /// implementation bug and is surfaced loudly by callers.
  std::vector<ExoticTriple> exotic_found;
  std::vector<IntegerNearMiss> near_misses;
  IntegerSearchStats stats;
};

/// Exhaustive scan over integer 3 <= a < b < c <= c_max with a, b, c each
/// one less than a square (forced by the a+1, b+1, c+1 conditions),
/// pruning pairs whose ab+1 is not square before the c loop. Results are
/// sorted by (a, b, c) and identical for every thread count.
/// Requires 3 <= c_max <= 2'000'000 (the c loop stays in 64-bit range).
SearchOutcome search_integer_exotic(long c_max, int threads = 1);

/// Rational search over pairs r, s of height <= h_max with a = r^2 - 1 and
/// b = s^2 - 1: whenever ab+1 is a square t^2, both regular extensions
/// c = ab + 1 -+ 2t of the pair (1, ab) are tested with verify_exotic.
/// Every output satisfies r3(1, ab, c) = 0 by construction; non-regular
/// exotic triples are out of reach of this strategy. Deduplicated,
/// triple_order_less order, independent of the thread count.
std::vector<ExoticTriple> search_rational_exotic(long h_max, int threads = 1);

enum class Case1Class {
  zero_entry,
  repeated_entry,
  square_failure,
  nondegenerate_exotic,  // would contradict the rank-zero case; expect none
};

std::string_view case1_class_name(Case1Class c);

/// A rational point (s, c) of the octic
///   s^8 + 2s^6 c - 2s^6 + s^4 c^2 - 6 s^4 c - s^4 + 2 s^2 c - 2 s^2 + 1 = 0
/// paired with r = +-1/s, classified by what disqualifies the triple
/// (r^2-1, s^2-1, c); both signs of r give the same triple.
struct Case1Hit {
  Rat s;
  Rat c;
  Case1Class classification;
};

/// Scans every rational s != 0 of height <= h_max, solving the octic as a
/// quadratic in c with coefficients (s^4, 2s^6 - 6s^4 + 2s^2,
/// s^8 - 2s^6 - s^4 - 2s^2 + 1) exactly.
std::vector<Case1Hit> case1_scan(long h_max);

}  // namespace exotic
