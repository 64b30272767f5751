#include "exotic/regularity.hpp"

#include <stdexcept>

namespace exotic {

Rat r3_eval(const Rat& a, const Rat& b, const Rat& c) {
  Rat t = a + b - c;
  return t * t - 4 * (a * b + 1);
}

Rat r4_eval(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  Rat t = a + b - c - d;
  return t * t - 4 * (a * b + 1) * (c * d + 1);
}

std::optional<PairExtensions> regular_pair_extensions(const Rat& a, const Rat& b) {
  auto t = rat_sqrt(a * b + 1);
  if (!t) {
    return std::nullopt;
  }
  Rat two_t = 2 * *t;
  return PairExtensions{a + b - two_t, a + b + two_t};
}

DerivedRoots derived_roots_from_r3(const Rat& a, const Rat& b, const Rat& c) {
  Rat ab = a * b;
  if (r3_eval(1, ab, c) != 0) {
    throw std::domain_error("derived_roots_from_r3: triple is not r3-regular with 1");
  }
  DerivedRoots roots{abs(Rat((1 + ab - c) / 2)), abs(Rat((ab + c - 1) / 2)),
                     abs(Rat((c + 1 - ab) / 2))};
  // The factorization guarantees these; breaking one means r3 above lied.
  if (roots.root_ab1 * roots.root_ab1 != ab + 1 ||
      roots.root_abc1 * roots.root_abc1 != ab * c + 1 ||
      roots.root_c1 * roots.root_c1 != c + 1) {
    throw std::logic_error("derived_roots_from_r3: root postcondition failed");
  }
  return roots;
}

Rat c_star(const Rat& r, const Rat& s) {
  Rat r2 = r * r;
  Rat s2 = s * s;
  return (-r2 * s2 + 2 * s2 + 2 * r2 - 5) / 2;
}

FactorizationCheck factorization_check(const Rat& r, const Rat& s, const Rat& c) {
  Rat a = r * r - 1;
  Rat b = s * s - 1;
  Rat difference = r3_eval(1, a * b, c) - r4_eval(1, a, b, c);
  Rat rs = r * s;
  Rat product = (rs - 1) * (rs + 1) * (rs * rs - 2 * s * s - 2 * r * r + 5 + 2 * c);
  return FactorizationCheck{difference, product};
}

Rat quadric_eval(const Rat& r, const Rat& s, QuadricSign sign) {
  Rat r2 = r * r;
  Rat s2 = s * s;
  Rat middle = make_rat(2, 3) * r * s;
  if (sign == QuadricSign::minus) {
    middle = -middle;
  }
  return r2 * s2 - make_rat(4, 3) * r2 + middle - make_rat(4, 3) * s2 + make_rat(7, 3);
}

}  // namespace exotic
