#include "triquad/invariants.hpp"

#include <stdexcept>

#include "triquad/cohomology.hpp"

namespace triquad {

namespace {

std::int64_t sum3(const Triple& t) {
  return checked_add(checked_add(t[0], t[1]), t[2]);
}

}  // namespace

std::int64_t chi_rank2_general(const BundleData& B) {
  const FConstants F;
  const ChowClass c1 = embed(B.c1);
  const ChowClass c2 = embed(B.c2);
  const ChowClass w1 = embed(F.omega1);

  const std::int64_t c1_cubed = mul(mul(c1, c1), c1).c3;
  const std::int64_t c1_c2 = mul(c1, c2).c3;
  const std::int64_t w1_c1_sq = mul(w1, mul(c1, c1)).c3;
  const std::int64_t w1_c2 = mul(w1, c2).c3;
  const std::int64_t w1sq_c1 = mul(mul(w1, w1), c1).c3;
  const std::int64_t c3 = 0;  // rank 2 on a threefold

  // 24 chi = -r w1w2 + 4 (c1^3 - 3 c1 c2 + 3 c3)
  //          - 6 (w1 c1^2 - 2 w1 c2) + 2 (w1^2 c1 + w2 c1)
  std::int64_t total = checked_mul(-F.rank, F.omega1_omega2);
  total = checked_add(total, checked_mul(4, checked_add(checked_sub(c1_cubed, checked_mul(3, c1_c2)),
                                                        checked_mul(3, c3))));
  total = checked_sub(total, checked_mul(6, checked_sub(w1_c1_sq, checked_mul(2, w1_c2))));
  total = checked_add(total, checked_mul(2, checked_add(w1sq_c1, FConstants::omega2_dot(B.c1))));
  if (total % 24 != 0) throw parity_error("non-integral chi; inconsistent Chern data");
  return total / 24;
}

std::int64_t chi_rank2(const BundleData& B) {
  const Triple a = B.c1.as_triple();
  const Triple b = B.c2.as_triple();
  const std::int64_t dot = intersect_dc(B.c1, B.c2);
  if (dot % 2 != 0) throw parity_error("non-integral chi; inconsistent Chern data");

  std::int64_t chi = 2;
  chi = checked_add(chi, checked_mul(checked_mul(a[0], a[1]), a[2]));
  chi = checked_add(chi, checked_add(checked_add(checked_mul(a[0], a[1]), checked_mul(a[0], a[2])),
                                     checked_mul(a[1], a[2])));
  chi = checked_add(chi, sum3(a));
  chi = checked_sub(chi, dot / 2);
  chi = checked_sub(chi, sum3(b));

  const std::int64_t general = chi_rank2_general(B);
  if (general != chi) throw std::logic_error("chi evaluation paths disagree");
  return chi;
}

BundleData twist(const BundleData& B, const DivisorClass& D) {
  return {add(B.c1, scale(2, D)),
          add(add(B.c2, divisor_product(B.c1, D)), divisor_product(D, D))};
}

BundleData dual(const BundleData& B) { return {neg(B.c1), B.c2}; }

std::pair<std::int64_t, std::int64_t> zero_locus_invariants(const BundleData& B) {
  const std::int64_t dot = intersect_dc(B.c1, B.c2);
  if (dot % 2 != 0) throw parity_error("non-integral genus");
  const std::int64_t degree = intersect_dc(hyperplane(), B.c2);
  const std::int64_t pa = checked_add(checked_sub(dot / 2, degree), 1);
  return {degree, pa};
}

std::int64_t c1c2_constraint(const DivisorClass& c1) {
  return checked_mul(2, checked_mul(checked_mul(c1.d1, c1.d2), c1.d3));
}

int e_flag(const DivisorClass& c1, const DivisorClass& D) { return D == c1 ? 1 : 0; }

std::int64_t hc2_constraint(const DivisorClass& c1, int e) {
  const std::int64_t prod = checked_mul(checked_mul(c1.d1, c1.d2), c1.d3);
  const std::int64_t coprod =
      checked_mul(checked_mul(1 - c1.d1, 1 - c1.d2), 1 - c1.d3);
  return checked_sub(checked_add(checked_add(prod, coprod), 1), e);
}

std::int64_t eta1(const DivisorClass& D) {
  return kunneth_h(2, sub(D, scale(2, hyperplane())));
}

std::int64_t eta2(const DivisorClass& D) {
  return kunneth_h(3, sub(D, scale(2, hyperplane())));
}

CurveClass residual_class(const DivisorClass& c1, const CurveClass& c2, const DivisorClass& D) {
  return add(sub(c2, divisor_product(c1, D)), divisor_product(D, D));
}

}  // namespace triquad
