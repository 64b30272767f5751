#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "exotic/rat.hpp"

namespace exotic {

/// Deterministic rational generator for the identity suites: canonical
/// values with |num| <= 10^4 and 1 <= den <= 10^4, reproducible across
/// platforms for a fixed seed (raw mt19937_64 output, no distributions).
class RatGen {
 public:
  explicit RatGen(std::uint64_t seed) : rng_(seed) {}

  Rat next();

 private:
  std::mt19937_64 rng_;
};

struct SuiteResult {
  std::string name;
  long trials = 0;
  long failures = 0;

  bool ok() const { return failures == 0; }
};

/// Pointwise checks of the polynomial identities at pseudorandom rational
/// points: r3 symmetry plus its expanded form, r4 symmetry, the r3 - r4
/// difference factorization, the (c+1)(abc+1) - (ac+1)(bc+1) identity,
/// c_star zeroing the third factor, and quadric r <-> s symmetry. All
/// comparisons are exact; 1000 points vastly exceeds the degree bounds.
std::vector<SuiteResult> run_identity_suites(long trials, std::uint64_t seed);

}  // namespace exotic
