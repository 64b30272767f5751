#pragma once

#include <array>
#include <vector>

#include "exotic/rat.hpp"

namespace exotic {

/// Exact polynomial identity behind the gap argument:
///   (c+1)(abc+1) - (ac+1)(bc+1) = c(a-1)(b-1).
/// Holds identically; the boolean return lets suites assert it pointwise.
bool identity_check(const Rat& a, const Rat& b, const Rat& c);

/// The full picture of the gap argument for one integer Diophantine
/// quadruple {1, a, b, c}: exact integer roots, a rigorous rational
/// enclosure of the irrational u = sqrt(abc+1), the induced enclosure of
/// M = 2*rab*(z*u - sac*tbc), and the inequalities that trap the integer
/// M strictly between (a-1)(b-1) and (a-1)(b-1) + 1/2.
struct GapReport {
  Int a, b, c;
  Int z;    // sqrt(c+1)
  Int rab;  // sqrt(ab+1)
  Int sac;  // sqrt(ac+1)
  Int tbc;  // sqrt(bc+1)

  Rat u_lo, u_hi;          // u_lo^2 <= abc+1 <= u_hi^2, width 10^-scale
  Rat m_lo, m_hi;          // enclosure of M
  Rat zu_st_lo, zu_st_hi;  // enclosure of z*u + sac*tbc

  Int target;           // (a-1)(b-1)
  bool abc1_is_square;  // must be false; true is a contradiction alarm
  bool gap_ok;          // target < m_lo and m_hi < target + 1/2
  bool zu_st_bounds_ok;  // 2c*sqrt(ab) < z*u + sac*tbc < 2*rab*c, rigorous
};

/// Requires 3 <= a < b < c, {1,a,b,c} a Diophantine quadruple, and
/// c > 4ab; violations raise std::domain_error with messages
/// "not ordered", "not a quadruple with 1", "c <= 4ab" and
/// "roots not integral" respectively. Enclosures are exact rational
/// arithmetic on scaled integer square roots; no floating point.
GapReport gap_check(const Int& a, const Int& b, const Int& c, unsigned scale_digits = 20);

struct GapSweepResult {
  /// One report per quadruple with c > 4ab, sorted by (a, b, c).
  std::vector<GapReport> reports;
  /// Quadruples with c <= 4ab, listed without a gap claim. None are known
  /// to exist; the list stays in the contract so a surprise is visible.
  std::vector<std::array<Int, 3>> skipped;
};

/// Runs gap_check on every integer Diophantine quadruple {1,a,b,c} with
/// 3 <= a < b < c <= c_max found by the search-style enumeration.
GapSweepResult gap_sweep(long c_max, int threads = 1, unsigned scale_digits = 20);

}  // namespace exotic
