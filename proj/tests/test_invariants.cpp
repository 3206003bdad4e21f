#include <random>

#include "doctest.h"
#include "triquad/invariants.hpp"

using namespace triquad;

TEST_CASE("quoted Euler characteristics") {
  CHECK(chi_rank2({{1, 2, 3}, {4, 1, 2}}) == 12);
  CHECK(chi_rank2({{2, 2, 2}, {2, 2, 4}}) == 12);
  CHECK(chi_rank2({{2, 2, 2}, {2, 3, 3}}) == 12);
  CHECK(chi_rank2({{0, 0, 0}, {0, 0, 0}}) == 2);
}

TEST_CASE("odd intersection numbers are rejected, not rounded") {
  const BundleData odd{{1, 0, 0}, {1, 0, 0}};
  CHECK_THROWS_AS((void)chi_rank2(odd), parity_error);
  CHECK_THROWS_AS((void)zero_locus_invariants(odd), parity_error);
}

TEST_CASE("closed form and direct evaluation agree") {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<std::int64_t> coef(-9, 9);
  int evaluated = 0;
  while (evaluated < 2000) {
    const BundleData B{{coef(rng), coef(rng), coef(rng)},
                       {coef(rng), coef(rng), coef(rng)}};
    if (intersect_dc(B.c1, B.c2) % 2 != 0) continue;
    CHECK(chi_rank2(B) == chi_rank2_general(B));
    ++evaluated;
  }
}

TEST_CASE("chi of split Chern data equals the sum of line chis") {
  for (std::int64_t a1 = -4; a1 <= 4; ++a1)
    for (std::int64_t a2 = -4; a2 <= 4; ++a2)
      for (std::int64_t a3 = -4; a3 <= 4; ++a3)
        for (std::int64_t b1 = -4; b1 <= 4; ++b1)
          for (std::int64_t b2 = -4; b2 <= 4; ++b2)
            for (std::int64_t b3 = -4; b3 <= 4; ++b3) {
              const DivisorClass L1{a1, a2, a3};
              const DivisorClass L2{b1, b2, b3};
              const std::int64_t want = (a1 + 1) * (a2 + 1) * (a3 + 1) +
                                        (b1 + 1) * (b2 + 1) * (b3 + 1);
              if (chi_rank2({add(L1, L2), divisor_product(L1, L2)}) != want) {
                FAIL("split chi mismatch at (", a1, ",", a2, ",", a3, ")+(",
                     b1, ",", b2, ",", b3, ")");
              }
            }
}

TEST_CASE("twist transform") {
  const BundleData B{{2, 2, 2}, {2, 2, 4}};
  const BundleData t = twist(B, {-1, -1, -1});
  CHECK(t.c1 == DivisorClass{0, 0, 0});
  CHECK(t.c2 == CurveClass{0, 0, 2});
  CHECK(twist(B, {0, 0, 0}) == B);
  CHECK(twist(t, hyperplane()) == B);
}

TEST_CASE("twist is a homomorphism and dual an involution") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> coef(-6, 6);
  for (int it = 0; it < 1000; ++it) {
    const BundleData B{{coef(rng), coef(rng), coef(rng)},
                       {coef(rng), coef(rng), coef(rng)}};
    const DivisorClass D1{coef(rng), coef(rng), coef(rng)};
    const DivisorClass D2{coef(rng), coef(rng), coef(rng)};
    CHECK(twist(twist(B, D1), D2) == twist(B, add(D1, D2)));
    CHECK(dual(dual(B)) == B);
    CHECK(dual(twist(B, D1)) == twist(dual(B), neg(D1)));
  }
}

TEST_CASE("initialized twist of the dual matches the quoted residuals") {
  CHECK(twist(dual({{0, 2, 2}, {2, 0, 0}}), hyperplane()).c2 == CurveClass{0, 0, 0});
  CHECK(twist(dual({{1, 1, 2}, {0, 2, 1}}), hyperplane()).c2 == CurveClass{-1, 1, 1});
}

TEST_CASE("zero-locus degree and genus") {
  CHECK(zero_locus_invariants({{2, 2, 2}, {2, 3, 3}}) == std::pair<std::int64_t, std::int64_t>{8, 1});
  CHECK(zero_locus_invariants({{1, 2, 3}, {4, 1, 2}}) == std::pair<std::int64_t, std::int64_t>{7, 0});
  CHECK(zero_locus_invariants({{0, 0, 0}, {1, 0, 0}}) == std::pair<std::int64_t, std::int64_t>{1, 0});
}

TEST_CASE("constraint right-hand sides") {
  CHECK(c1c2_constraint({1, 2, 3}) == 12);
  CHECK(c1c2_constraint({2, 2, 2}) == 16);
  CHECK(intersect_dc({2, 2, 2}, {2, 3, 3}) == 16);
  CHECK(c1c2_constraint({0, 0, 2}) == 0);

  CHECK(hc2_constraint({1, 2, 3}, 0) == 7);
  CHECK(hc2_constraint({2, 2, 2}, 0) == 8);
  CHECK(hc2_constraint({0, 0, 1}, 1) == 0);
}

TEST_CASE("divisor equality indicator") {
  CHECK(e_flag({0, 0, 1}, {0, 0, 1}) == 1);
  CHECK(e_flag({0, 0, 2}, {0, 0, 1}) == 0);
  CHECK(e_flag({0, 0, 0}, {0, 0, 0}) == 1);
}

TEST_CASE("boundary indicators") {
  CHECK(eta1({0, 0, 2}) == 1);
  CHECK(eta2({0, 0, 2}) == 0);
  CHECK(eta1({0, 0, 0}) == 0);
  CHECK(eta2({0, 0, 0}) == 1);
  CHECK(eta1({0, 1, 1}) == 0);
  CHECK(eta2({0, 1, 1}) == 0);
}

TEST_CASE("residual class after splitting off a divisor") {
  CHECK(residual_class({1, 2, 2}, {2, 1, 2}, {0, 1, 2}) == CurveClass{0, -1, 1});
  CHECK(residual_class({1, 2, 2}, {2, 2, 1}, {0, 1, 2}) == CurveClass{0, 0, 0});
  CHECK(residual_class({1, 2, 2}, {2, 1, 2}, {0, 0, 0}) == CurveClass{2, 1, 2});
}
