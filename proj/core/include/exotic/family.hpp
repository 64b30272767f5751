#pragma once

#include <optional>
#include <vector>

#include "exotic/curve.hpp"
#include "exotic/verify.hpp"

namespace exotic {

/// Intermediates of the point-to-triple map on E2. For an affine point
/// (x, y):
///   u = (2y - 6x + 42) / (x^2 - 6x - 3)
///   s = (x^2 - 12x + 39 + 2y) / (x^2 - 6x - 3)
///   r = ((x-3)u^2 + 7u - 1) / (3u^2 + 6u - 1)
///   c = c_star(r, s)
/// and the candidate triple is (r^2 - 1, s^2 - 1, c). Both denominators
/// have irrational roots, so they never vanish at rational points.
struct ParamIntermediates {
  Rat u;
  Rat s;
  Rat r;
  Rat c;
};

/// Throws std::domain_error at infinity or for points not on E2, and
/// std::logic_error should a denominator ever vanish.
ParamIntermediates param_map(const CurvePoint& p);

struct TripleProvenance {
  Rat x;       // source point on E2
  Rat y;
  long k;      // multiple of the generator [3,-12]
  bool twist;  // whether [6,0] was added
};

/// A verified exotic triple: distinct nonzero rationals stored sorted
/// ascending, with the certificate computed for that sorted order.
struct ExoticTriple {
  Rat a;
  Rat b;
  Rat c;
  SquareCertificate certificate;
  std::optional<TripleProvenance> provenance;

  /// max(height(a), height(b), height(c)), the output ordering measure.
  Int max_height() const;
};

/// Equal as sorted value triples (certificates follow from the values).
bool same_triple_values(const ExoticTriple& lhs, const ExoticTriple& rhs);

/// Deterministic output order: ascending max_height, ties broken
/// lexicographically on (a, b, c).
bool triple_order_less(const ExoticTriple& lhs, const ExoticTriple& rhs);

/// The generator [3,-12] of infinite order on E2.
CurvePoint e2_generator();

/// The two-torsion point [6,0] on E2.
CurvePoint e2_two_torsion();

/// Maps a point of E2 to its exotic triple. Absent for the point at
/// infinity and for degenerate images (a zero or repeated entry). A
/// nondegenerate image failing verification is a hard std::logic_error,
/// never an absent value.
std::optional<ExoticTriple> to_triple(const CurvePoint& p);

/// As above, recording provenance (p, k, twist) on the result.
std::optional<ExoticTriple> to_triple(const CurvePoint& p, long k, bool twist);

struct FamilyStats {
  long points_evaluated = 0;
  long degenerate = 0;
  /// Duplicates between P and P + [6,0] (expected for every k).
  long torsion_coincidences = 0;
  /// Duplicates across distinct cosets {P, P+T}; none are expected, and
  /// any observed collision is surfaced here rather than assumed away.
  long cross_coset_collisions = 0;
};

/// Evaluates to_triple on kG + eT for k in [-k_max, k_max] \ {0} and
/// e in {0, 1}, with G = [3,-12] and T = [6,0]; drops absences,
/// deduplicates by sorted triple value and returns triple_order_less
/// order. Provenance records the first producing point in scan order
/// (k = 1, 2, ... with lanes +k, +k twisted, -k, -k twisted).
std::vector<ExoticTriple> generate_family(long k_max, FamilyStats* stats = nullptr);

}  // namespace exotic
