#include "exotic/gap.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "exotic/search.hpp"
#include "exotic/verify.hpp"

namespace exotic {

bool identity_check(const Rat& a, const Rat& b, const Rat& c) {
  Rat lhs = (c + 1) * (a * b * c + 1) - (a * c + 1) * (b * c + 1);
  Rat rhs = c * (a - 1) * (b - 1);
  return lhs == rhs;
}

namespace {

// Exact integer square root of a value that must be a perfect square.
Int exact_root(const Int& n) {
  auto r = int_sqrt(n);
  if (!r.exact) {
    throw std::domain_error("gap_check: roots not integral");
  }
  return r.root;
}

// [floor(sqrt(n * scale^2)) / scale, (floor + 1) / scale] encloses sqrt(n);
// the lower endpoint squares to <= n and the upper to > n.
struct SqrtEnclosure {
  Rat lo;
  Rat hi;
  bool exact;  // n is a perfect square (then lo * lo == n)
};

SqrtEnclosure enclose_sqrt(const Int& n, const Int& scale) {
  auto scaled = int_sqrt(n * scale * scale);
  SqrtEnclosure out;
  out.lo = make_rat(scaled.root, scale);
  out.hi = make_rat(scaled.root + 1, scale);
  out.exact = scaled.exact;
  return out;
}

}  // namespace

GapReport gap_check(const Int& a, const Int& b, const Int& c, unsigned scale_digits) {
  if (!(1 <= a && a < b && b < c)) {
    throw std::domain_error("gap_check: not ordered");
  }
  // For a positive integer a distinct from 1 with a+1 a square, a >= 3 is
  // automatic, so the quadruple check also enforces the lower bound.
  if (!verify_diophantine_with_one(Rat(a), Rat(b), Rat(c))) {
    throw std::domain_error("gap_check: not a quadruple with 1");
  }
  if (!(c > 4 * a * b)) {
    throw std::domain_error("gap_check: c <= 4ab");
  }

  GapReport report;
  report.a = a;
  report.b = b;
  report.c = c;
  report.z = exact_root(c + 1);
  report.rab = exact_root(a * b + 1);
  report.sac = exact_root(a * c + 1);
  report.tbc = exact_root(b * c + 1);
  report.target = (a - 1) * (b - 1);

  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, scale_digits);

  const Int abc1 = a * b * c + 1;
  SqrtEnclosure u = enclose_sqrt(abc1, scale);
  report.u_lo = u.lo;
  report.u_hi = u.hi;
  report.abc1_is_square = u.exact;

  // M = 2*rab*(z*u - sac*tbc) is increasing in u, so endpoints map to
  // endpoints.
  Rat st(Int(report.sac * report.tbc));
  Rat two_rab(Int(2 * report.rab));
  Rat z(report.z);
  report.m_lo = two_rab * (z * u.lo - st);
  report.m_hi = two_rab * (z * u.hi - st);
  report.zu_st_lo = z * u.lo + st;
  report.zu_st_hi = z * u.hi + st;

  report.gap_ok =
      Rat(report.target) < report.m_lo && report.m_hi < Rat(report.target) + make_rat(1, 2);

  // Lower bound 2c*sqrt(ab) uses the strict upper endpoint of a sqrt(ab)
  // enclosure, so zu_st_lo beating it beats the true bound as well.
  SqrtEnclosure sqrt_ab = enclose_sqrt(Int(a * b), scale);
  report.zu_st_bounds_ok = report.zu_st_lo > 2 * Rat(c) * sqrt_ab.hi &&
                           report.zu_st_hi < Rat(Int(2 * report.rab * c));
  return report;
}

GapSweepResult gap_sweep(long c_max, int threads, unsigned scale_digits) {
  // The quadruple enumeration is exactly the integer search's; its
  // near-misses and (hypothetical) exotic hits together are all the
  // Diophantine quadruples {1,a,b,c} in range.
  SearchOutcome search = search_integer_exotic(c_max, threads);

  std::vector<std::array<Int, 3>> quadruples;
  quadruples.reserve(search.near_misses.size() + search.exotic_found.size());
  for (const IntegerNearMiss& miss : search.near_misses) {
    quadruples.push_back({Int(miss.a), Int(miss.b), Int(miss.c)});
  }
  for (const ExoticTriple& triple : search.exotic_found) {
    quadruples.push_back({Int(triple.a.get_num()), Int(triple.b.get_num()),
                          Int(triple.c.get_num())});
  }
  std::sort(quadruples.begin(), quadruples.end());

  GapSweepResult result;
  for (const auto& [a, b, c] : quadruples) {
    if (c > 4 * a * b) {
      result.reports.push_back(gap_check(a, b, c, scale_digits));
    } else {
      result.skipped.push_back({a, b, c});
    }
  }
  return result;
}

}  // namespace exotic
