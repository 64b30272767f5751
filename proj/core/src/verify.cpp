#include "exotic/verify.hpp"

namespace exotic {

std::string_view condition_name(ExoticCondition condition) {
  switch (condition) {
    case ExoticCondition::a_plus_one:
      return "a_plus_one";
    case ExoticCondition::b_plus_one:
      return "b_plus_one";
    case ExoticCondition::c_plus_one:
      return "c_plus_one";
    case ExoticCondition::ab_plus_one:
      return "ab_plus_one";
    case ExoticCondition::ac_plus_one:
      return "ac_plus_one";
    case ExoticCondition::bc_plus_one:
      return "bc_plus_one";
    case ExoticCondition::abc_plus_one:
      return "abc_plus_one";
    case ExoticCondition::entries_distinct:
      return "entries_distinct";
    case ExoticCondition::entries_nonzero:
      return "entries_nonzero";
  }
  return "unknown";
}

VerifyResult verify_exotic(const Rat& a, const Rat& b, const Rat& c) {
  VerifyResult result;
  SquareCertificate cert;

  struct Target {
    Rat value;
    Rat* root;
    ExoticCondition condition;
  };
  Target targets[] = {
      {a + 1, &cert.root_a1, ExoticCondition::a_plus_one},
      {b + 1, &cert.root_b1, ExoticCondition::b_plus_one},
      {c + 1, &cert.root_c1, ExoticCondition::c_plus_one},
      {a * b + 1, &cert.root_ab1, ExoticCondition::ab_plus_one},
      {a * c + 1, &cert.root_ac1, ExoticCondition::ac_plus_one},
      {b * c + 1, &cert.root_bc1, ExoticCondition::bc_plus_one},
      {a * b * c + 1, &cert.root_abc1, ExoticCondition::abc_plus_one},
  };
  for (Target& target : targets) {
    if (auto root = rat_sqrt(target.value)) {
      *target.root = *std::move(root);
    } else {
      result.failures.push_back(target.condition);
    }
  }
  if (a == b || a == c || b == c) {
    result.failures.push_back(ExoticCondition::entries_distinct);
  }
  if (a == 0 || b == 0 || c == 0) {
    result.failures.push_back(ExoticCondition::entries_nonzero);
  }
  if (result.failures.empty()) {
    result.certificate = std::move(cert);
  }
  return result;
}

bool verify_diophantine_with_one(const Rat& a, const Rat& b, const Rat& c) {
  if (a == 0 || b == 0 || c == 0 || a == 1 || b == 1 || c == 1) {
    return false;
  }
  if (a == b || a == c || b == c) {
    return false;
  }
  return rat_sqrt(a + 1) && rat_sqrt(b + 1) && rat_sqrt(c + 1) && rat_sqrt(a * b + 1) &&
         rat_sqrt(a * c + 1) && rat_sqrt(b * c + 1);
}

RegularityReport regularity_report(const Rat& a, const Rat& b, const Rat& c) {
  RegularityReport report;
  report.r3_1ab_c = r3_eval(1, a * b, c);
  report.r4_1abc = r4_eval(1, a, b, c);
  report.r3_abc = r3_eval(a, b, c);
  report.quadruple_regular = report.r4_1abc == 0;
  report.product_triple_regular = report.r3_1ab_c == 0;
  return report;
}

}  // namespace exotic
