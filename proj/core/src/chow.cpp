#include "triquad/chow.hpp"

#include <algorithm>
#include <limits>

namespace triquad {

DivisorClass add(const DivisorClass& a, const DivisorClass& b) {
  return {checked_add(a.d1, b.d1), checked_add(a.d2, b.d2), checked_add(a.d3, b.d3)};
}

DivisorClass sub(const DivisorClass& a, const DivisorClass& b) {
  return {checked_sub(a.d1, b.d1), checked_sub(a.d2, b.d2), checked_sub(a.d3, b.d3)};
}

DivisorClass neg(const DivisorClass& a) { return sub({0, 0, 0}, a); }

DivisorClass scale(std::int64_t k, const DivisorClass& a) {
  return {checked_mul(k, a.d1), checked_mul(k, a.d2), checked_mul(k, a.d3)};
}

CurveClass add(const CurveClass& a, const CurveClass& b) {
  return {checked_add(a.b1, b.b1), checked_add(a.b2, b.b2), checked_add(a.b3, b.b3)};
}

CurveClass sub(const CurveClass& a, const CurveClass& b) {
  return {checked_sub(a.b1, b.b1), checked_sub(a.b2, b.b2), checked_sub(a.b3, b.b3)};
}

CurveClass neg(const CurveClass& a) { return sub({0, 0, 0}, a); }

ChowClass embed(std::int64_t n) { return {n, {}, {}, 0}; }
ChowClass embed(const DivisorClass& d) { return {0, d, {}, 0}; }
ChowClass embed(const CurveClass& c) { return {0, {}, c, 0}; }
ChowClass embed_point(std::int64_t n) { return {0, {}, {}, n}; }

ChowClass add(const ChowClass& x, const ChowClass& y) {
  return {checked_add(x.c0, y.c0), add(x.c1part, y.c1part), add(x.c2part, y.c2part),
          checked_add(x.c3, y.c3)};
}

ChowClass sub(const ChowClass& x, const ChowClass& y) {
  return {checked_sub(x.c0, y.c0), sub(x.c1part, y.c1part), sub(x.c2part, y.c2part),
          checked_sub(x.c3, y.c3)};
}

CurveClass divisor_product(const DivisorClass& a, const DivisorClass& b) {
  return {checked_add(checked_mul(a.d2, b.d3), checked_mul(a.d3, b.d2)),
          checked_add(checked_mul(a.d1, b.d3), checked_mul(a.d3, b.d1)),
          checked_add(checked_mul(a.d1, b.d2), checked_mul(a.d2, b.d1))};
}

std::int64_t intersect_dc(const DivisorClass& d, const CurveClass& c) {
  return checked_add(checked_add(checked_mul(d.d1, c.b1), checked_mul(d.d2, c.b2)),
                     checked_mul(d.d3, c.b3));
}

ChowClass mul(const ChowClass& x, const ChowClass& y) {
  ChowClass r;
  // degree 0
  r.c0 = checked_mul(x.c0, y.c0);
  // degree 1
  r.c1part = add(scale(x.c0, y.c1part), scale(y.c0, x.c1part));
  // degree 2: scalar * curve parts plus divisor * divisor
  const CurveClass x0y2{checked_mul(x.c0, y.c2part.b1), checked_mul(x.c0, y.c2part.b2),
                        checked_mul(x.c0, y.c2part.b3)};
  const CurveClass y0x2{checked_mul(y.c0, x.c2part.b1), checked_mul(y.c0, x.c2part.b2),
                        checked_mul(y.c0, x.c2part.b3)};
  r.c2part = add(add(x0y2, y0x2), divisor_product(x.c1part, y.c1part));
  // degree 3: scalar * point, divisor * curve (dot product), both orders
  r.c3 = checked_add(checked_add(checked_mul(x.c0, y.c3), checked_mul(y.c0, x.c3)),
                     checked_add(intersect_dc(x.c1part, y.c2part),
                                 intersect_dc(y.c1part, x.c2part)));
  return r;
}

const std::array<Perm, 6>& all_perms() {
  static const std::array<Perm, 6> perms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
  }};
  return perms;
}

Perm compose(const Perm& p, const Perm& q) {
  // out[ (p.q)[i] ] = in[i] means (p.q)[i] = p[q[i]]
  return {p[q[0]], p[q[1]], p[q[2]]};
}

Perm inverse(const Perm& p) {
  Perm inv{};
  for (int i = 0; i < 3; ++i) inv[p[i]] = i;
  return inv;
}

Triple apply_perm(const Perm& p, const Triple& t) {
  Triple out{};
  for (int i = 0; i < 3; ++i) out[p[i]] = t[i];
  return out;
}

DivisorClass apply_perm(const Perm& p, const DivisorClass& d) {
  return DivisorClass::from_triple(apply_perm(p, d.as_triple()));
}

CurveClass apply_perm(const Perm& p, const CurveClass& c) {
  return CurveClass::from_triple(apply_perm(p, c.as_triple()));
}

namespace {

// Key for support-first comparison: zero sorts after any positive entry.
std::int64_t support_key(std::int64_t v) {
  return v == 0 ? std::numeric_limits<std::int64_t>::max() : v;
}

bool support_lex_less_triple(const Triple& a, const Triple& b) {
  for (int i = 0; i < 3; ++i) {
    if (support_key(a[i]) != support_key(b[i])) return support_key(a[i]) < support_key(b[i]);
  }
  return false;
}

bool triple_equal(const Triple& a, const Triple& b) { return a == b; }

}  // namespace

bool support_lex_less(const std::vector<Triple>& a, const std::vector<Triple>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (!triple_equal(a[i], b[i])) return support_lex_less_triple(a[i], b[i]);
  }
  return a.size() < b.size();
}

S3Canonical canonicalize_s3(const DivisorClass& alpha, const std::vector<Triple>& attached) {
  Triple sorted_alpha = alpha.as_triple();
  std::sort(sorted_alpha.begin(), sorted_alpha.end());

  bool have = false;
  S3Canonical best;
  for (const Perm& p : all_perms()) {
    if (apply_perm(p, alpha.as_triple()) != sorted_alpha) continue;
    std::vector<Triple> imgs;
    imgs.reserve(attached.size());
    for (const Triple& t : attached) imgs.push_back(apply_perm(p, t));
    if (!have || support_lex_less(imgs, best.attached)) {
      best = {DivisorClass::from_triple(sorted_alpha), std::move(imgs), p};
      have = true;
    }
  }
  return best;
}

}  // namespace triquad
