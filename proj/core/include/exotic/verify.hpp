#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "exotic/rat.hpp"
#include "exotic/regularity.hpp"

namespace exotic {

/// The seven nonnegative rational roots witnessing that a+1, b+1, c+1,
/// ab+1, ac+1, bc+1, abc+1 are all squares.
struct SquareCertificate {
  Rat root_a1;
  Rat root_b1;
  Rat root_c1;
  Rat root_ab1;
  Rat root_ac1;
  Rat root_bc1;
  Rat root_abc1;

  bool operator==(const SquareCertificate& other) const = default;
};

enum class ExoticCondition {
  a_plus_one,
  b_plus_one,
  c_plus_one,
  ab_plus_one,
  ac_plus_one,
  bc_plus_one,
  abc_plus_one,
  entries_distinct,
  entries_nonzero,
};

std::string_view condition_name(ExoticCondition condition);

struct VerifyResult {
  /// Present iff failures is empty.
  std::optional<SquareCertificate> certificate;
  /// Every failing condition, in declaration order of ExoticCondition.
  std::vector<ExoticCondition> failures;

  bool ok() const { return failures.empty(); }
};

/// Certifies or refutes the exotic property for {a, b, c}: the triple must
/// consist of distinct nonzero rationals and the seven quantities above
/// must all be rational squares. Failure is a value, never an error.
VerifyResult verify_exotic(const Rat& a, const Rat& b, const Rat& c);

/// True iff {1, a, b, c} is a rational Diophantine quadruple: four distinct
/// nonzero entries with a+1, b+1, c+1, ab+1, ac+1, bc+1 all squares.
bool verify_diophantine_with_one(const Rat& a, const Rat& b, const Rat& c);

/// Evaluates r4(1,a,b,c), r3(1,ab,c) and r3(a,b,c) and flags which vanish.
RegularityReport regularity_report(const Rat& a, const Rat& b, const Rat& c);

}  // namespace exotic
