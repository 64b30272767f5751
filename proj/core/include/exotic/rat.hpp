#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace exotic {

/// Arbitrary-precision signed integer.
using Int = mpz_class;

/// Arbitrary-precision rational, kept in canonical form: positive
/// denominator, gcd(|num|, den) = 1, zero stored as 0/1. All arithmetic
/// on Rat values renormalizes, so structural equality is value equality.
using Rat = mpq_class;

/// Canonical rational num/den. Throws std::invalid_argument when den = 0.
Rat make_rat(Int num, Int den = 1);

struct IntSqrtResult {
  Int root;    // floor(sqrt(n))
  bool exact;  // root * root == n
};

/// Floor square root of a nonnegative integer with an exactness flag.
/// Throws std::domain_error for negative input.
IntSqrtResult int_sqrt(const Int& n);

/// True iff n >= 0 and n is a perfect square.
bool is_square(const Int& n);

/// The nonnegative rational square root of q, present iff q >= 0 and both
/// the numerator and denominator of its canonical form are perfect squares.
std::optional<Rat> rat_sqrt(const Rat& q);

/// Naive height max(|num|, den) of the canonical form.
Int height(const Rat& q);

/// All reduced rationals with height <= h_max, each exactly once, in a
/// fixed deterministic order: ascending height, then ascending |numerator|,
/// then ascending denominator, positive before negative at equal |value|.
/// So the sequence starts 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, -1/3, ...
std::vector<Rat> enumerate_rats(long h_max);

/// Text form "p/q" in lowest terms with q > 0, or "p" when q = 1.
std::string rat_to_string(const Rat& q);

/// Parses the rational text format; input is canonicalized, so
/// rat_to_string(parse_rat(s)) round-trips exactly for canonical s.
std::optional<Rat> try_parse_rat(std::string_view text);

/// As try_parse_rat but throws std::invalid_argument on malformed input.
Rat parse_rat(std::string_view text);

}  // namespace exotic
