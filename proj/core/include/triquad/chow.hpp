#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "triquad/checked.hpp"

namespace triquad {

/// Exact arithmetic in the Chow ring of the triple quadric threefold
/// F = P1 x P1 x P1:  A(F) = Z[h1,h2,h3] / (h1^2, h2^2, h3^2).
///
/// Grading: degree 0 (units), degree 1 (divisors, basis h1,h2,h3),
/// degree 2 (curves, basis h2h3, h1h3, h1h2) and degree 3 (points, basis
/// h1h2h3). The curve basis is indexed so that the i-th curve generator is
/// the product of the two divisor generators other than h_i; with this
/// convention the divisor/curve intersection pairing is a plain dot product.

using Triple = std::array<std::int64_t, 3>;

/// Divisor class d1*h1 + d2*h2 + d3*h3.
struct DivisorClass {
  std::int64_t d1 = 0, d2 = 0, d3 = 0;

  constexpr std::int64_t operator[](int i) const { return i == 0 ? d1 : (i == 1 ? d2 : d3); }
  bool operator==(const DivisorClass&) const = default;
  auto operator<=>(const DivisorClass&) const = default;

  /// Every coefficient non-negative (the class of an effective divisor).
  bool is_effective() const { return d1 >= 0 && d2 >= 0 && d3 >= 0; }

  Triple as_triple() const { return {d1, d2, d3}; }
  static DivisorClass from_triple(const Triple& t) { return {t[0], t[1], t[2]}; }
};

/// Curve class b1*h2h3 + b2*h1h3 + b3*h1h2.
struct CurveClass {
  std::int64_t b1 = 0, b2 = 0, b3 = 0;

  constexpr std::int64_t operator[](int i) const { return i == 0 ? b1 : (i == 1 ? b2 : b3); }
  bool operator==(const CurveClass&) const = default;
  auto operator<=>(const CurveClass&) const = default;

  /// Every coefficient non-negative (necessary for the class of a curve).
  bool is_effective_candidate() const { return b1 >= 0 && b2 >= 0 && b3 >= 0; }

  Triple as_triple() const { return {b1, b2, b3}; }
  static CurveClass from_triple(const Triple& t) { return {t[0], t[1], t[2]}; }
};

/// Full graded element of A(F).
struct ChowClass {
  std::int64_t c0 = 0;
  DivisorClass c1part;
  CurveClass c2part;
  std::int64_t c3 = 0;

  bool operator==(const ChowClass&) const = default;
};

DivisorClass add(const DivisorClass& a, const DivisorClass& b);
DivisorClass sub(const DivisorClass& a, const DivisorClass& b);
DivisorClass neg(const DivisorClass& a);
DivisorClass scale(std::int64_t k, const DivisorClass& a);
CurveClass add(const CurveClass& a, const CurveClass& b);
CurveClass sub(const CurveClass& a, const CurveClass& b);
CurveClass neg(const CurveClass& a);

/// The hyperplane class h = h1 + h2 + h3.
inline DivisorClass hyperplane() { return {1, 1, 1}; }

ChowClass embed(std::int64_t n);
ChowClass embed(const DivisorClass& d);
ChowClass embed(const CurveClass& c);
ChowClass embed_point(std::int64_t n);

ChowClass add(const ChowClass& x, const ChowClass& y);
ChowClass sub(const ChowClass& x, const ChowClass& y);

/// Graded product with h_i^2 = 0; associative, commutative, distributive.
ChowClass mul(const ChowClass& x, const ChowClass& y);

/// Product of two divisor classes as a curve class:
/// (d2 e3 + d3 e2, d1 e3 + d3 e1, d1 e2 + d2 e1).
CurveClass divisor_product(const DivisorClass& a, const DivisorClass& b);

/// Intersection number of a divisor with a curve: the dot product
/// d1 b1 + d2 b2 + d3 b3 under the dual basis convention.
std::int64_t intersect_dc(const DivisorClass& d, const CurveClass& c);

/// A permutation of the three factors, stored as images: out[p[i]] = in[i].
using Perm = std::array<int, 3>;

const std::array<Perm, 6>& all_perms();
Perm compose(const Perm& p, const Perm& q);  // apply q first, then p
Perm inverse(const Perm& p);

Triple apply_perm(const Perm& p, const Triple& t);
DivisorClass apply_perm(const Perm& p, const DivisorClass& d);
/// The curve basis co-varies with the divisor basis (generator i is the
/// product of the generators other than i), so the same index action applies.
CurveClass apply_perm(const Perm& p, const CurveClass& c);

/// Comparator key used for canonical representatives: entries are compared
/// lexicographically with 0 sorting *after* every positive value (support
/// first); negative values compare normally.
bool support_lex_less(const std::vector<Triple>& a, const std::vector<Triple>& b);

struct S3Canonical {
  DivisorClass alpha;
  std::vector<Triple> attached;
  Perm perm;  // the permutation that was applied
};

/// Canonical representative of (alpha, attached...) under the simultaneous
/// S3 action: alpha is sorted ascending; among the permutations achieving
/// that, the one minimizing the attached triples under support_lex_less is
/// chosen (attached triples in argument order). Idempotent and
/// orbit-invariant.
S3Canonical canonicalize_s3(const DivisorClass& alpha, const std::vector<Triple>& attached);

}  // namespace triquad
