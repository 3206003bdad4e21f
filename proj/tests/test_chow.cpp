#include <random>
#include <set>

#include "doctest.h"
#include "triquad/chow.hpp"

using namespace triquad;

TEST_CASE("monomial products") {
  // h1 . h2h3 = h1h2h3
  const ChowClass p = mul(embed(DivisorClass{1, 0, 0}), embed(CurveClass{1, 0, 0}));
  CHECK(p == embed_point(1));

  // h^3 = 6 points
  const ChowClass h = embed(hyperplane());
  CHECK(mul(mul(h, h), h).c3 == 6);

  // (h1 + h2)^2 = 2 h1h2
  const ChowClass d = embed(DivisorClass{1, 1, 0});
  CHECK(mul(d, d) == embed(CurveClass{0, 0, 2}));
}

TEST_CASE("divisor products") {
  CHECK(divisor_product({0, 1, 2}, {0, 1, 2}) == CurveClass{4, 0, 0});
  CHECK(divisor_product({1, 2, 2}, {0, 1, 2}) == CurveClass{6, 2, 1});
  CHECK(divisor_product({0, 0, 0}, {5, -3, 7}) == CurveClass{0, 0, 0});
}

TEST_CASE("intersection pairing") {
  CHECK(intersect_dc({1, 2, 3}, {4, 1, 2}) == 12);
  CHECK(intersect_dc(hyperplane(), {3, 1, 4}) == 8);
  CHECK(intersect_dc({0, 0, 0}, {9, 9, 9}) == 0);
}

TEST_CASE("intersection pairing agrees with the graded product") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> coef(-9, 9);
  for (int it = 0; it < 500; ++it) {
    const DivisorClass D{coef(rng), coef(rng), coef(rng)};
    const CurveClass C{coef(rng), coef(rng), coef(rng)};
    CHECK(intersect_dc(D, C) == mul(embed(D), embed(C)).c3);
  }
}

TEST_CASE("self-product of a divisor has even entries") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::int64_t> coef(-9, 9);
  for (int it = 0; it < 500; ++it) {
    const DivisorClass D{coef(rng), coef(rng), coef(rng)};
    const CurveClass sq = divisor_product(D, D);
    CHECK(sq.b1 % 2 == 0);
    CHECK(sq.b2 % 2 == 0);
    CHECK(sq.b3 % 2 == 0);
  }
}

TEST_CASE("ring axioms on random classes") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> coef(-5, 5);
  auto random_class = [&] {
    ChowClass x;
    x.c0 = coef(rng);
    x.c1part = {coef(rng), coef(rng), coef(rng)};
    x.c2part = {coef(rng), coef(rng), coef(rng)};
    x.c3 = coef(rng);
    return x;
  };
  for (int it = 0; it < 300; ++it) {
    const ChowClass x = random_class(), y = random_class(), z = random_class();
    CHECK(mul(x, y) == mul(y, x));
    CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
    CHECK(mul(x, add(y, z)) == add(mul(x, y), mul(x, z)));
  }
}

TEST_CASE("overflow is detected") {
  const std::int64_t big = std::int64_t{1} << 62;
  CHECK_THROWS_AS((void)mul(embed(DivisorClass{big, 0, 0}), embed(DivisorClass{0, big, 0})),
                  overflow_error);
  CHECK_THROWS_AS((void)checked_add(big, big), overflow_error);
}

TEST_CASE("canonical form sorts the divisor class") {
  const S3Canonical c = canonicalize_s3({3, 1, 2}, {});
  CHECK(c.alpha == DivisorClass{1, 2, 3});
}

TEST_CASE("canonical form breaks stabilizer ties on the attached triples") {
  const S3Canonical c = canonicalize_s3({0, 0, 1}, {Triple{0, 1, 0}});
  CHECK(c.alpha == DivisorClass{0, 0, 1});
  CHECK(c.attached[0] == Triple{1, 0, 0});

  const S3Canonical u = canonicalize_s3({2, 2, 2}, {Triple{4, 2, 2}});
  CHECK(u.attached[0] == Triple{2, 2, 4});
}

TEST_CASE("canonical form is idempotent and orbit-invariant") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::int64_t> coef(-3, 3);
  std::uniform_int_distribution<int> pidx(0, 5);
  for (int it = 0; it < 500; ++it) {
    const DivisorClass alpha{coef(rng), coef(rng), coef(rng)};
    const Triple t{coef(rng), coef(rng), coef(rng)};
    const S3Canonical once = canonicalize_s3(alpha, {t});
    const S3Canonical twice = canonicalize_s3(once.alpha, once.attached);
    CHECK(once.alpha == twice.alpha);
    CHECK(once.attached == twice.attached);

    const Perm p = all_perms()[pidx(rng)];
    const S3Canonical moved = canonicalize_s3(apply_perm(p, alpha), {apply_perm(p, t)});
    CHECK(once.alpha == moved.alpha);
    CHECK(once.attached == moved.attached);
  }
}

TEST_CASE("permutation composition and inversion") {
  for (const Perm& p : all_perms()) {
    CHECK(compose(p, inverse(p)) == Perm{0, 1, 2});
    CHECK(compose(inverse(p), p) == Perm{0, 1, 2});
  }
  std::set<Perm> distinct(all_perms().begin(), all_perms().end());
  CHECK(distinct.size() == 6);
}
