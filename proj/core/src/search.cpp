#include "exotic/search.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <tuple>

#include "exotic/parallel.hpp"

namespace exotic {

namespace {

struct IntegerBucket {
  std::vector<ExoticTriple> exotic;
  std::vector<IntegerNearMiss> near;
  IntegerSearchStats stats;
};

ExoticTriple make_integer_exotic(long a, long b, long c) {
  // a < b < c already; reaching here contradicts the integer emptiness
  // theorem, but the triple is still packaged faithfully.
  Rat ra = make_rat(a);
  Rat rb = make_rat(b);
  Rat rc = make_rat(c);
  VerifyResult verified = verify_exotic(ra, rb, rc);
  if (!verified.ok()) {
    throw std::logic_error("search_integer_exotic: candidate failed re-verification");
  }
  return ExoticTriple{std::move(ra), std::move(rb), std::move(rc),
                      *std::move(verified.certificate), std::nullopt};
}

}  // namespace

SearchOutcome search_integer_exotic(long c_max, int threads) {
  if (c_max < 3) {
    throw std::domain_error("search_integer_exotic: c_max must be >= 3");
  }
  if (c_max > 2'000'000) {
    throw std::domain_error("search_integer_exotic: c_max above the 64-bit safe bound");
  }

  // a = alpha^2 - 1 etc.; gamma_max picks up every c <= c_max.
  long gamma_max = 1;
  while ((gamma_max + 1) * (gamma_max + 1) - 1 <= c_max) {
    ++gamma_max;
  }
  std::vector<long> alphas;
  for (long alpha = 2; alpha < gamma_max; ++alpha) {
    alphas.push_back(alpha);
  }

  std::vector<IntegerBucket> buckets(
      std::max<std::size_t>(1, std::min<std::size_t>(alphas.size(), std::max(threads, 1))));
  detail::parallel_ranges(alphas.size(), threads, [&](std::size_t chunk, std::size_t begin,
                                                      std::size_t end) {
    IntegerBucket& bucket = buckets[chunk];
    for (std::size_t i = begin; i < end; ++i) {
      const long alpha = alphas[i];
      const long a = alpha * alpha - 1;
      for (long beta = alpha + 1; beta * beta - 1 < c_max; ++beta) {
        const long b = beta * beta - 1;
        ++bucket.stats.pairs_examined;
        if (!is_square(Int(a) * b + 1)) {
          continue;  // prune before the c loop
        }
        ++bucket.stats.pairs_admissible;
        for (long gamma = beta + 1; gamma <= gamma_max; ++gamma) {
          const long c = gamma * gamma - 1;
          ++bucket.stats.c_candidates;
          if (!is_square(Int(a) * c + 1)) {
            ++bucket.stats.pruned_ac;
            continue;
          }
          if (!is_square(Int(b) * c + 1)) {
            ++bucket.stats.pruned_bc;
            continue;
          }
          ++bucket.stats.quadruples;
          if (is_square(Int(a) * b * c + 1)) {
            bucket.exotic.push_back(make_integer_exotic(a, b, c));
          } else {
            bucket.near.push_back(IntegerNearMiss{a, b, c, c > 4 * Int(a) * b});
          }
        }
      }
    }
  });

  SearchOutcome outcome;
  for (const IntegerBucket& bucket : buckets) {
    outcome.exotic_found.insert(outcome.exotic_found.end(), bucket.exotic.begin(),
                                bucket.exotic.end());
    outcome.near_misses.insert(outcome.near_misses.end(), bucket.near.begin(),
                               bucket.near.end());
    outcome.stats.pairs_examined += bucket.stats.pairs_examined;
    outcome.stats.pairs_admissible += bucket.stats.pairs_admissible;
    outcome.stats.c_candidates += bucket.stats.c_candidates;
    outcome.stats.pruned_ac += bucket.stats.pruned_ac;
    outcome.stats.pruned_bc += bucket.stats.pruned_bc;
    outcome.stats.quadruples += bucket.stats.quadruples;
  }
  auto near_less = [](const IntegerNearMiss& lhs, const IntegerNearMiss& rhs) {
    return std::tie(lhs.a, lhs.b, lhs.c) < std::tie(rhs.a, rhs.b, rhs.c);
  };
  std::sort(outcome.near_misses.begin(), outcome.near_misses.end(), near_less);
  std::sort(outcome.exotic_found.begin(), outcome.exotic_found.end(), triple_order_less);
  return outcome;
}

std::vector<ExoticTriple> search_rational_exotic(long h_max, int threads) {
  if (h_max < 1) {
    throw std::domain_error("search_rational_exotic: h_max must be >= 1");
  }
  const std::vector<Rat> values = enumerate_rats(h_max);
  const std::size_t n = values.size();

  std::vector<std::vector<ExoticTriple>> buckets(
      std::max<std::size_t>(1, std::min<std::size_t>(n, std::max(threads, 1))));
  detail::parallel_ranges(n, threads, [&](std::size_t chunk, std::size_t begin,
                                          std::size_t end) {
    std::vector<ExoticTriple>& bucket = buckets[chunk];
    for (std::size_t i = begin; i < end; ++i) {
      Rat a = values[i] * values[i] - 1;
      if (a == 0) {
        continue;
      }
      for (std::size_t j = i + 1; j < n; ++j) {
        Rat b = values[j] * values[j] - 1;
        if (b == 0 || a == b) {
          continue;
        }
        Rat ab1 = a * b + 1;
        auto t = rat_sqrt(ab1);
        if (!t) {
          continue;
        }
        for (int branch = 0; branch < 2; ++branch) {
          // The regular extensions of the pair (1, ab).
          Rat c = branch == 0 ? Rat(ab1 - 2 * *t) : Rat(ab1 + 2 * *t);
          std::array<Rat, 3> entries = {a, b, c};
          std::sort(entries.begin(), entries.end());
          VerifyResult verified = verify_exotic(entries[0], entries[1], entries[2]);
          if (verified.ok()) {
            bucket.push_back(ExoticTriple{entries[0], entries[1], entries[2],
                                          *std::move(verified.certificate), std::nullopt});
          }
        }
      }
    }
  });

  std::vector<ExoticTriple> merged;
  for (std::vector<ExoticTriple>& bucket : buckets) {
    merged.insert(merged.end(), std::make_move_iterator(bucket.begin()),
                  std::make_move_iterator(bucket.end()));
  }
  std::sort(merged.begin(), merged.end(), triple_order_less);
  merged.erase(std::unique(merged.begin(), merged.end(), same_triple_values), merged.end());
  return merged;
}

std::string_view case1_class_name(Case1Class c) {
  switch (c) {
    case Case1Class::zero_entry:
      return "zero_entry";
    case Case1Class::repeated_entry:
      return "repeated_entry";
    case Case1Class::square_failure:
      return "square_failure";
    case Case1Class::nondegenerate_exotic:
      return "nondegenerate_exotic";
  }
  return "unknown";
}

std::vector<Case1Hit> case1_scan(long h_max) {
  if (h_max < 1) {
    throw std::domain_error("case1_scan: h_max must be >= 1");
  }
  std::vector<Case1Hit> hits;
  for (const Rat& s : enumerate_rats(h_max)) {
    if (s == 0) {
      continue;
    }
    Rat s2 = s * s;
    Rat s4 = s2 * s2;
    Rat s6 = s4 * s2;
    Rat s8 = s4 * s4;
    // The octic as a quadratic in c.
    Rat qa = s4;
    Rat qb = 2 * s6 - 6 * s4 + 2 * s2;
    Rat qc = s8 - 2 * s6 - s4 - 2 * s2 + 1;
    Rat disc = qb * qb - 4 * qa * qc;
    if (sgn(disc) < 0) {
      continue;
    }
    auto sqrt_disc = rat_sqrt(disc);
    if (!sqrt_disc) {
      continue;
    }
    std::vector<Rat> roots;
    roots.push_back((-qb - *sqrt_disc) / (2 * qa));
    if (*sqrt_disc != 0) {
      roots.push_back((-qb + *sqrt_disc) / (2 * qa));
    }
    Rat a = 1 / s2 - 1;  // r = +-1/s, both signs give the same a = r^2 - 1
    Rat b = s2 - 1;
    for (Rat& c : roots) {
      Case1Class cls;
      if (a == 0 || b == 0 || c == 0) {
        cls = Case1Class::zero_entry;
      } else if (a == b || a == c || b == c) {
        cls = Case1Class::repeated_entry;
      } else if (verify_exotic(a, b, c).ok()) {
        cls = Case1Class::nondegenerate_exotic;
      } else {
        cls = Case1Class::square_failure;
      }
      hits.push_back(Case1Hit{s, std::move(c), cls});
    }
  }
  return hits;
}

}  // namespace exotic
