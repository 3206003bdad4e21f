#pragma once

#include <cstdint>
#include <utility>

#include "triquad/chow.hpp"

namespace triquad {

/// Numerical invariants of rank-2 bundles on F: Euler characteristic,
/// twist/dual Chern transforms, the constraint equations of the
/// classification, and zero-locus degree/genus.

/// Chern data (c1, c2) of a rank-2 bundle. Arbitrary data is representable;
/// admissibility is always a separate verdict.
struct BundleData {
  DivisorClass c1;
  CurveClass c2;
  bool operator==(const BundleData&) const = default;
  auto operator<=>(const BundleData&) const = default;
};

/// Fixed intersection-theoretic constants of F. The second Todd-type class
/// enters only through its contractions (omega2 . c1 = 4 * sum(alpha_i) and
/// omega1 . omega2 = -24), so only those are stored.
struct FConstants {
  DivisorClass omega1 = {-2, -2, -2};  // = -2h
  std::int64_t omega1_omega2 = -24;
  std::int64_t degree = 6;  // h^3
  int rank = 2;

  static std::int64_t omega2_dot(const DivisorClass& c1) {
    return checked_mul(4, checked_add(checked_add(c1.d1, c1.d2), c1.d3));
  }
};

/// Signalled when an intersection-number parity makes a half-integer formula
/// non-integral; this is a meaningful inadmissibility signal, never rounded.
class parity_error : public std::domain_error {
public:
  explicit parity_error(const std::string& what) : std::domain_error(what) {}
};

/// chi(E) for a rank-2 bundle with Chern data B. Computed twice -- from the
/// hand-specialized closed form
///   2 + a1 a2 a3 + (a1 a2 + a1 a3 + a2 a3) + (a1 + a2 + a3)
///     - (a . b)/2 - (b1 + b2 + b3)
/// and from the general Riemann-Roch expression evaluated with exact Chow
/// products -- and the two paths must agree. Throws parity_error when
/// c1 . c2 is odd ("non-integral chi; inconsistent Chern data").
std::int64_t chi_rank2(const BundleData& B);

/// The general Riemann-Roch path alone (exposed for the agreement tests):
/// 24 chi = -r w1w2 + 4 (c1^3 - 3 c1 c2 + 3 c3) - 6 (w1 c1^2 - 2 w1 c2)
///          + 2 (w1^2 c1 + w2 c1), with c3 = 0.
std::int64_t chi_rank2_general(const BundleData& B);

/// Chern transform of E(D): c1' = c1 + 2D, c2' = c2 + c1.D + D.D.
BundleData twist(const BundleData& B, const DivisorClass& D);

/// Chern transform of the dual: (c1, c2) -> (-c1, c2).
BundleData dual(const BundleData& B);

/// Degree and arithmetic genus of the zero locus of a general section
/// vanishing in codimension 2: deg = h.c2, pa = (c1.c2)/2 - deg + 1.
/// Throws parity_error ("non-integral genus") when c1.c2 is odd.
std::pair<std::int64_t, std::int64_t> zero_locus_invariants(const BundleData& B);

/// c1.c2 = 2 a1 a2 a3, forced for the bundles under classification.
std::int64_t c1c2_constraint(const DivisorClass& c1);

/// Indicator e(c1, D): 1 iff D = c1.
int e_flag(const DivisorClass& c1, const DivisorClass& D);

/// h.c2 = a1 a2 a3 + (1-a1)(1-a2)(1-a3) + 1 - e.
std::int64_t hc2_constraint(const DivisorClass& c1, int e);

/// Boundary indicators: eta1(D) = h^2(O(D-2h)), eta2(D) = h^3(O(D-2h)).
/// On the divisor candidate list these equal the indicator of D in |2h_j|
/// resp. D = 0.
std::int64_t eta1(const DivisorClass& D);
std::int64_t eta2(const DivisorClass& D);

/// Class of the residual codimension-2 part after splitting off a divisor D:
/// c2(E(-D)) = c2 - c1.D + D^2.
CurveClass residual_class(const DivisorClass& c1, const CurveClass& c2, const DivisorClass& D);

}  // namespace triquad
