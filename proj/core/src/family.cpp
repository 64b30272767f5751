#include "exotic/family.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace exotic {

ParamIntermediates param_map(const CurvePoint& p) {
  if (p.is_infinity()) {
    throw std::domain_error("param_map: map undefined at infinity");
  }
  if (!(p.curve() == curve_e2())) {
    throw std::domain_error("param_map: point is not on E2");
  }
  const Rat& x = p.x();
  const Rat& y = p.y();

  Rat denom_u = x * x - 6 * x - 3;
  if (denom_u == 0) {
    throw std::logic_error("param_map: x^2 - 6x - 3 vanished at a rational point");
  }
  ParamIntermediates out;
  out.u = (2 * y - 6 * x + 42) / denom_u;
  out.s = (x * x - 12 * x + 39 + 2 * y) / denom_u;

  Rat denom_r = 3 * out.u * out.u + 6 * out.u - 1;
  if (denom_r == 0) {
    throw std::logic_error("param_map: 3u^2 + 6u - 1 vanished at a rational point");
  }
  out.r = ((x - 3) * out.u * out.u + 7 * out.u - 1) / denom_r;
  out.c = c_star(out.r, out.s);
  return out;
}

Int ExoticTriple::max_height() const {
  Int h = height(a);
  Int hb = height(b);
  if (hb > h) {
    h = hb;
  }
  Int hc = height(c);
  if (hc > h) {
    h = hc;
  }
  return h;
}

bool same_triple_values(const ExoticTriple& lhs, const ExoticTriple& rhs) {
  return lhs.a == rhs.a && lhs.b == rhs.b && lhs.c == rhs.c;
}

bool triple_order_less(const ExoticTriple& lhs, const ExoticTriple& rhs) {
  Int lh = lhs.max_height();
  Int rh = rhs.max_height();
  if (lh != rh) {
    return lh < rh;
  }
  if (lhs.a != rhs.a) {
    return lhs.a < rhs.a;
  }
  if (lhs.b != rhs.b) {
    return lhs.b < rhs.b;
  }
  return lhs.c < rhs.c;
}

CurvePoint e2_generator() {
  return CurvePoint::affine(curve_e2(), make_rat(3), make_rat(-12));
}

CurvePoint e2_two_torsion() {
  return CurvePoint::affine(curve_e2(), make_rat(6), make_rat(0));
}

namespace {

std::optional<ExoticTriple> to_triple_impl(const CurvePoint& p,
                                           std::optional<TripleProvenance> provenance) {
  if (p.is_infinity()) {
    return std::nullopt;
  }
  ParamIntermediates param = param_map(p);
  std::array<Rat, 3> entries = {param.r * param.r - 1, param.s * param.s - 1, param.c};
  if (entries[0] == 0 || entries[1] == 0 || entries[2] == 0 || entries[0] == entries[1] ||
      entries[0] == entries[2] || entries[1] == entries[2]) {
    return std::nullopt;
  }
  std::sort(entries.begin(), entries.end());
  VerifyResult verified = verify_exotic(entries[0], entries[1], entries[2]);
  if (!verified.ok()) {
    // The construction guarantees all seven squares; reaching this line
    // means the group law or the map is broken.
    throw std::logic_error("to_triple: nondegenerate image failed verification at point " +
                           point_to_string(p));
  }
  return ExoticTriple{entries[0], entries[1], entries[2], *std::move(verified.certificate),
                      std::move(provenance)};
}

}  // namespace

std::optional<ExoticTriple> to_triple(const CurvePoint& p) {
  return to_triple_impl(p, std::nullopt);
}

std::optional<ExoticTriple> to_triple(const CurvePoint& p, long k, bool twist) {
  if (p.is_infinity()) {
    return std::nullopt;
  }
  return to_triple_impl(p, TripleProvenance{p.x(), p.y(), k, twist});
}

std::vector<ExoticTriple> generate_family(long k_max, FamilyStats* stats) {
  if (k_max < 1) {
    throw std::domain_error("generate_family: k_max must be >= 1");
  }
  FamilyStats local;
  const CurvePoint generator = e2_generator();
  const CurvePoint torsion = e2_two_torsion();

  // Dedup by value; remember which |coset| = (signed k) first produced a
  // value so cross-coset collisions can be counted.
  struct Entry {
    std::size_t index;
    long coset;
  };
  std::map<std::array<Rat, 3>, Entry> seen;
  std::vector<ExoticTriple> triples;

  CurvePoint multiple = CurvePoint::infinity(curve_e2());
  for (long k = 1; k <= k_max; ++k) {
    multiple = add(multiple, generator);  // multiple = k * G
    const CurvePoint twisted = add(multiple, torsion);
    const std::array<std::tuple<CurvePoint, long, bool>, 4> lanes = {
        std::tuple{multiple, k, false},
        std::tuple{twisted, k, true},
        std::tuple{negate(multiple), -k, false},
        std::tuple{negate(twisted), -k, true},  // -(kG + T) = -kG + T
    };
    for (const auto& [point, signed_k, twist] : lanes) {
      ++local.points_evaluated;
      auto triple = to_triple(point, signed_k, twist);
      if (!triple) {
        ++local.degenerate;
        continue;
      }
      std::array<Rat, 3> key = {triple->a, triple->b, triple->c};
      auto [it, inserted] = seen.try_emplace(std::move(key), Entry{triples.size(), signed_k});
      if (inserted) {
        triples.push_back(*std::move(triple));
      } else if (it->second.coset == signed_k) {
        ++local.torsion_coincidences;
      } else {
        ++local.cross_coset_collisions;
      }
    }
  }

  std::sort(triples.begin(), triples.end(), triple_order_less);
  if (stats != nullptr) {
    *stats = local;
  }
  return triples;
}

}  // namespace exotic
