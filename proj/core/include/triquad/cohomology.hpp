#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "triquad/chow.hpp"

namespace triquad {

/// Line-bundle cohomology on F = P1 x P1 x P1 via the Kunneth formula, and
/// the derived predicates used by the classification engines.

/// Cohomology dimensions h^0..h^3 of a line bundle.
struct CohomologyVector {
  std::int64_t h0 = 0, h1 = 0, h2 = 0, h3 = 0;
  bool operator==(const CohomologyVector&) const = default;
  std::int64_t operator[](int i) const { return i == 0 ? h0 : (i == 1 ? h1 : (i == 2 ? h2 : h3)); }
};

/// h^i(P1, O(d)) for i in {0,1}: h0 = d+1 when d >= 0, h1 = -d-1 when
/// d <= -2, else 0. Any other i is a contract violation.
std::int64_t h_p1(int i, std::int64_t d);

/// h^i(F, O(D)) as the Kunneth convolution of the factor dimensions.
std::int64_t kunneth_h(int i, const DivisorClass& D);

CohomologyVector cohomology(const DivisorClass& D);

/// A line bundle has no middle cohomology in any twist by a multiple of h.
/// The infinite quantifier over twists reduces to the window
/// t in [-max(d_i)-2, -min(d_i)+2]: outside it every Kunneth term for h^1 and
/// h^2 needs one factor <= -2 and another >= 0 simultaneously, which is
/// impossible. `extra_window` widens the window (used by the soundness
/// property test).
bool is_acm_line(const DivisorClass& D, std::int64_t extra_window = 0);

/// The minimal twist with sections is zero: h^0(D) > 0 and h^0(D - h) = 0;
/// closed form: all d_i >= 0 and min d_i = 0 (the Kunneth evaluation is kept
/// as a redundant assertion).
bool is_initialized_line(const DivisorClass& D);

/// Exhaustive search for initialized line bundles without middle cohomology
/// over {0 <= d_i <= bound, min d_i = 0}. At the default bound this is
/// exactly the 13 classes {0} u perms(1,0,0) u perms(1,1,0) u perms(2,1,0).
std::vector<DivisorClass> initialized_acm_line_bundles(std::int64_t bound = 4);

/// dim Ext^1(O(target), O(sub)) = h^1(F, O(sub - target)).
std::int64_t ext1_line(const DivisorClass& target, const DivisorClass& sub);

/// Numerical hypotheses for reconstructing a rank-2 bundle from a
/// codimension-2 curve: existence needs h^2(F, -L) = 0, uniqueness
/// h^1(F, -L) = 0.
struct SerreConditions {
  bool existence_ok = false;
  bool uniqueness_ok = false;
  bool operator==(const SerreConditions&) const = default;
};
SerreConditions serre_conditions(const DivisorClass& L);

}  // namespace triquad
