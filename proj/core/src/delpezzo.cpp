#include "triquad/delpezzo.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "triquad/invariants.hpp"

namespace triquad {

std::int64_t s_intersect(const SurfaceClass& x, const SurfaceClass& y) {
  std::int64_t r = checked_mul(x.a, y.a);
  r = checked_sub(r, checked_mul(x.b1, y.b1));
  r = checked_sub(r, checked_mul(x.b2, y.b2));
  r = checked_sub(r, checked_mul(x.b3, y.b3));
  return r;
}

std::int64_t s_degree(const SurfaceClass& C) {
  return checked_sub(checked_mul(3, C.a),
                     checked_add(checked_add(C.b1, C.b2), C.b3));
}

std::int64_t s_genus(const SurfaceClass& C) {
  const std::int64_t diff = checked_sub(s_intersect(C, C), s_degree(C));
  if (diff % 2 != 0) throw parity_error("non-integral genus");
  return checked_add(1, diff / 2);
}

namespace {

SurfaceClass sorted_desc(const SurfaceClass& C) {
  Triple b{C.b1, C.b2, C.b3};
  std::sort(b.begin(), b.end(), std::greater<>());
  return {C.a, b[0], b[1], b[2]};
}

std::int64_t isqrt_floor(std::int64_t n) {
  std::int64_t r = 0;
  while (checked_mul(r + 1, r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::vector<SurfaceClass> curve_classes(std::int64_t degree, std::int64_t genus,
                                        std::int64_t widen) {
  if (degree < 1) throw std::invalid_argument("curve_classes: degree must be >= 1");
  const std::int64_t self = checked_add(degree, checked_mul(2, checked_sub(genus, 1)));

  // Cauchy-Schwarz: (sum b_i)^2 <= 3 sum b_i^2 with sum b_i = 3a - degree and
  // sum b_i^2 = a^2 - C^2 bounds a to a finite interval.
  std::int64_t a_max = 0;
  for (std::int64_t a = 0; a <= checked_add(checked_mul(2, degree), 4); ++a) {
    const std::int64_t lhs = checked_mul(checked_sub(checked_mul(3, a), degree),
                                         checked_sub(checked_mul(3, a), degree));
    const std::int64_t rhs = checked_mul(3, checked_sub(checked_mul(a, a), self));
    if (lhs <= rhs) a_max = a;
  }
  a_max = checked_add(a_max, widen);

  std::set<SurfaceClass> out;
  for (std::int64_t a = 0; a <= a_max; ++a) {
    const std::int64_t bsum = checked_sub(checked_mul(3, a), degree);
    const std::int64_t bsq = checked_sub(checked_mul(a, a), self);
    if (bsum < 0 || bsq < 0) continue;
    const std::int64_t bmax = checked_add(isqrt_floor(bsq), widen);
    for (std::int64_t b1 = 0; b1 <= bmax; ++b1)
      for (std::int64_t b2 = 0; b2 <= b1; ++b2) {
        const std::int64_t b3 = bsum - b1 - b2;
        if (b3 < 0 || b3 > b2) continue;
        if (b1 * b1 + b2 * b2 + b3 * b3 != bsq) continue;
        out.insert({a, b1, b2, b3});
      }
  }
  return {out.begin(), out.end()};
}

SurfaceClass cremona(const SurfaceClass& C) {
  const std::int64_t bsum = checked_add(checked_add(C.b1, C.b2), C.b3);
  return {checked_sub(checked_mul(2, C.a), bsum),
          checked_sub(C.a, checked_add(C.b2, C.b3)),
          checked_sub(C.a, checked_add(C.b1, C.b3)),
          checked_sub(C.a, checked_add(C.b1, C.b2))};
}

std::vector<SurfaceClass> orbit_reduce(const std::vector<SurfaceClass>& classes) {
  std::set<SurfaceClass> reps;
  std::set<SurfaceClass> assigned;
  for (const SurfaceClass& start : classes) {
    if (assigned.count(sorted_desc(start))) continue;
    // Close the orbit under b-permutations and the quadratic involution.
    std::set<SurfaceClass> orbit;
    std::vector<SurfaceClass> queue = {sorted_desc(start)};
    while (!queue.empty()) {
      const SurfaceClass c = queue.back();
      queue.pop_back();
      if (!orbit.insert(c).second) continue;
      queue.push_back(sorted_desc(cremona(c)));
      // Permutations collapse to the sorted form, already applied.
    }
    reps.insert(*orbit.begin());
    for (const SurfaceClass& c : orbit) assigned.insert(c);
  }
  return {reps.begin(), reps.end()};
}

CurveClass pushforward(const SurfaceClass& C) {
  return {checked_sub(C.a, C.b1), checked_sub(C.a, C.b2), checked_sub(C.a, C.b3)};
}

std::pair<std::int64_t, std::int64_t> normal_chi(const SurfaceClass& C) {
  const std::int64_t genus = s_genus(C);
  if (genus != 0 && genus != 1)
    throw std::invalid_argument("normal_chi: only genus 0 and 1 classes are supported");
  const std::int64_t deg = s_degree(C);
  const std::int64_t sum = checked_add(s_intersect(C, C), deg);
  if (sum % 2 != 0) throw parity_error("non-integral chi");
  const std::int64_t chi_os_c = checked_add(1, sum / 2);
  const std::int64_t chi_n =
      checked_sub(checked_add(chi_os_c, checked_add(checked_sub(deg, genus), 1)), 1);
  return {chi_os_c, chi_n};
}

}  // namespace triquad
