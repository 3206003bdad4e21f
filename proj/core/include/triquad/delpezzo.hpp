#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "triquad/chow.hpp"

namespace triquad {

/// Picard-lattice computations on the degree-6 del Pezzo surface S (a
/// hyperplane section of F, the plane blown up in three general points):
/// curve-class enumeration by degree and genus, the quadratic involution,
/// pushforward to curve classes on F, and normal-bundle Euler
/// characteristics.

/// The class a*l - b1*e1 - b2*e2 - b3*e3 (b_i stored with positive sign for
/// the subtracted multiples). Lattice: l^2 = 1, e_i^2 = -1, mixed products 0;
/// hyperplane class 3l - e1 - e2 - e3.
struct SurfaceClass {
  std::int64_t a = 0, b1 = 0, b2 = 0, b3 = 0;
  bool operator==(const SurfaceClass&) const = default;
  auto operator<=>(const SurfaceClass&) const = default;
};

/// Intersection product: a_x a_y - sum b_{x,i} b_{y,i}.
std::int64_t s_intersect(const SurfaceClass& x, const SurfaceClass& y);

/// Degree against the hyperplane class: 3a - sum b_i.
std::int64_t s_degree(const SurfaceClass& C);

/// Adjunction genus 1 + (C^2 - deg)/2; throws parity_error when odd.
std::int64_t s_genus(const SurfaceClass& C);

/// All classes with a >= 0, b_i >= 0 of the given degree and genus,
/// canonicalized by sorting b_i descending. The a-range comes from the
/// Cauchy-Schwarz bound (3a - deg)^2 <= 3(a^2 - (deg + 2 genus - 2));
/// `widen` enlarges the search box (bound-soundness checks).
std::vector<SurfaceClass> curve_classes(std::int64_t degree, std::int64_t genus,
                                        std::int64_t widen = 0);

/// The lattice involution of the quadratic plane transformation centered at
/// the three blown-up points: a' = 2a - b1 - b2 - b3, b_i' = a - b_j - b_k.
SurfaceClass cremona(const SurfaceClass& C);

/// Orbit representatives under the group generated by b_i-permutations and
/// the quadratic involution; the representative is the lexicographically
/// smallest (a; b sorted descending) in the orbit.
std::vector<SurfaceClass> orbit_reduce(const std::vector<SurfaceClass>& classes);

/// Class of the curve inside the ambient threefold: (a-b1, a-b2, a-b3).
CurveClass pushforward(const SurfaceClass& C);

/// chi(O_S(C)) = 1 + (C^2 + deg)/2 and the normal-bundle Euler
/// characteristic chi(N) = chi(O_S(C)) + (deg + 1 - genus) - 1, for genus 0
/// or 1 classes.
std::pair<std::int64_t, std::int64_t> normal_chi(const SurfaceClass& C);

}  // namespace triquad
