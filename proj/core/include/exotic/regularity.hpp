#pragma once

#include <optional>

#include "exotic/rat.hpp"

namespace exotic {

/// r3(a,b,c) = (a+b-c)^2 - 4(ab+1). Fully symmetric in its arguments;
/// a triple is regular when it vanishes.
Rat r3_eval(const Rat& a, const Rat& b, const Rat& c);

/// r4(a,b,c,d) = (a+b-c-d)^2 - 4(ab+1)(cd+1). Fully symmetric; a quadruple
/// is regular when it vanishes.
Rat r4_eval(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

struct PairExtensions {
  Rat c_minus;  // a + b - 2*sqrt(ab+1)
  Rat c_plus;   // a + b + 2*sqrt(ab+1)
};

/// The two values c with r3(a,b,c) = 0, present iff ab+1 is a rational
/// square.
std::optional<PairExtensions> regular_pair_extensions(const Rat& a, const Rat& b);

struct DerivedRoots {
  Rat root_ab1;   // |(1+ab-c)/2|, squares to ab+1
  Rat root_abc1;  // |(ab+c-1)/2|, squares to abc+1
  Rat root_c1;    // |(c+1-ab)/2|, squares to c+1
};

/// When r3(1, ab, c) = 0 the quantities ab+1, abc+1 and c+1 are squares
/// with the closed-form roots above. Throws std::domain_error when the
/// precondition r3(1, a*b, c) = 0 fails.
DerivedRoots derived_roots_from_r3(const Rat& a, const Rat& b, const Rat& c);

/// c*(r,s) = (-r^2 s^2 + 2 s^2 + 2 r^2 - 5) / 2, symmetric in r and s.
Rat c_star(const Rat& r, const Rat& s);

struct FactorizationCheck {
  Rat difference;  // r3(1, (r^2-1)(s^2-1), c) - r4(1, r^2-1, s^2-1, c)
  Rat product;     // (rs-1)(rs+1)(r^2 s^2 - 2 s^2 - 2 r^2 + 5 + 2c)
};

/// Both sides of the difference factorization; they are equal identically.
FactorizationCheck factorization_check(const Rat& r, const Rat& s, const Rat& c);

enum class QuadricSign { plus, minus };

/// r^2 s^2 - (4/3) r^2 +/- (2/3) rs - (4/3) s^2 + 7/3, the pair of quadric
/// curves cut out by c = c*(r,s); each is symmetric under r <-> s.
Rat quadric_eval(const Rat& r, const Rat& s, QuadricSign sign);

struct RegularityReport {
  Rat r3_1ab_c;                 // r3(1, a*b, c)
  Rat r4_1abc;                  // r4(1, a, b, c)
  Rat r3_abc;                   // r3(a, b, c)
  bool quadruple_regular;       // r4(1,a,b,c) == 0
  bool product_triple_regular;  // r3(1,a*b,c) == 0
};

}  // namespace exotic
