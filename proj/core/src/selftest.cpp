#include "exotic/selftest.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "exotic/gap.hpp"
#include "exotic/regularity.hpp"

namespace exotic {

Rat RatGen::next() {
  const long num = static_cast<long>(rng_() % 20001) - 10000;  // [-10^4, 10^4]
  const long den = static_cast<long>(rng_() % 10000) + 1;      // [1, 10^4]
  return make_rat(num, den);
}

std::vector<SuiteResult> run_identity_suites(long trials, std::uint64_t seed) {
  if (trials < 1) {
    throw std::domain_error("run_identity_suites: trials must be >= 1");
  }
  RatGen gen(seed);

  SuiteResult r3_suite{"r3-symmetry-expansion", trials, 0};
  SuiteResult r4_suite{"r4-symmetry", trials, 0};
  SuiteResult factor_suite{"difference-factorization", trials, 0};
  SuiteResult gap_suite{"gap-identity", trials, 0};
  SuiteResult cstar_suite{"c-star-zeroes-factor", trials, 0};
  SuiteResult quadric_suite{"quadric-symmetry", trials, 0};

  for (long trial = 0; trial < trials; ++trial) {
    const Rat a = gen.next();
    const Rat b = gen.next();
    const Rat c = gen.next();
    const Rat d = gen.next();
    const Rat r = gen.next();
    const Rat s = gen.next();

    {
      const Rat reference = r3_eval(a, b, c);
      const Rat expanded =
          a * a + b * b + c * c - 2 * a * b - 2 * a * c - 2 * b * c - 4;
      bool good = reference == expanded;
      const std::array<std::array<const Rat*, 3>, 6> perms = {{{&a, &b, &c},
                                                               {&a, &c, &b},
                                                               {&b, &a, &c},
                                                               {&b, &c, &a},
                                                               {&c, &a, &b},
                                                               {&c, &b, &a}}};
      for (const auto& p : perms) {
        good = good && r3_eval(*p[0], *p[1], *p[2]) == reference;
      }
      if (!good) {
        ++r3_suite.failures;
      }
    }

    {
      const Rat reference = r4_eval(a, b, c, d);
      const std::array<Rat, 4> vals = {a, b, c, d};
      std::array<int, 4> idx = {0, 1, 2, 3};
      bool good = true;
      do {
        good = good && r4_eval(vals[idx[0]], vals[idx[1]], vals[idx[2]], vals[idx[3]]) ==
                           reference;
      } while (std::next_permutation(idx.begin(), idx.end()));
      if (!good) {
        ++r4_suite.failures;
      }
    }

    {
      const FactorizationCheck check = factorization_check(r, s, c);
      if (check.difference != check.product) {
        ++factor_suite.failures;
      }
    }

    if (!identity_check(a, b, c)) {
      ++gap_suite.failures;
    }

    {
      const Rat third_factor = r * r * s * s - 2 * s * s - 2 * r * r + 5 + 2 * c_star(r, s);
      if (third_factor != 0) {
        ++cstar_suite.failures;
      }
    }

    if (quadric_eval(r, s, QuadricSign::plus) != quadric_eval(s, r, QuadricSign::plus) ||
        quadric_eval(r, s, QuadricSign::minus) != quadric_eval(s, r, QuadricSign::minus)) {
      ++quadric_suite.failures;
    }
  }

  return {r3_suite, r4_suite, factor_suite, gap_suite, cstar_suite, quadric_suite};
}

}  // namespace exotic
