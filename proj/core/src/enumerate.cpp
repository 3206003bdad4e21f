#include "triquad/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

#include "triquad/cohomology.hpp"

namespace triquad {

std::string to_string(DivisorialVerdict v) {
  switch (v) {
    case DivisorialVerdict::NegativeClass: return "NegativeClass";
    case DivisorialVerdict::EmptyEForbidden: return "EmptyEForbidden";
    case DivisorialVerdict::GloballyGeneratedContradiction:
      return "GloballyGeneratedContradiction";
  }
  return "?";
}

std::optional<DivisorialVerdict> divisorial_verdict_from_string(const std::string& s) {
  if (s == "NegativeClass") return DivisorialVerdict::NegativeClass;
  if (s == "EmptyEForbidden") return DivisorialVerdict::EmptyEForbidden;
  if (s == "GloballyGeneratedContradiction")
    return DivisorialVerdict::GloballyGeneratedContradiction;
  return std::nullopt;
}

std::string to_string(IntermediateVerdict v) {
  switch (v) {
    case IntermediateVerdict::Admissible: return "Admissible";
    case IntermediateVerdict::Decomposable: return "Decomposable";
    case IntermediateVerdict::NonExistent: return "NonExistent";
    case IntermediateVerdict::ExcludedEmpty: return "ExcludedEmpty";
    case IntermediateVerdict::ExcludedDualPositivity: return "ExcludedDualPositivity";
  }
  return "?";
}

std::optional<IntermediateVerdict> intermediate_verdict_from_string(const std::string& s) {
  if (s == "Admissible") return IntermediateVerdict::Admissible;
  if (s == "Decomposable") return IntermediateVerdict::Decomposable;
  if (s == "NonExistent") return IntermediateVerdict::NonExistent;
  if (s == "ExcludedEmpty") return IntermediateVerdict::ExcludedEmpty;
  if (s == "ExcludedDualPositivity") return IntermediateVerdict::ExcludedDualPositivity;
  return std::nullopt;
}

std::vector<CurveClass> solve_alpha_beta(const DivisorClass& alpha, int e,
                                         const CurveClass& lower_bounds) {
  const std::int64_t target_dot = c1c2_constraint(alpha);
  const std::int64_t target_sum = hc2_constraint(alpha, e);
  std::vector<CurveClass> out;
  if (target_sum < 0) return out;
  for (std::int64_t b1 = lower_bounds.b1; b1 <= target_sum; ++b1) {
    for (std::int64_t b2 = lower_bounds.b2; b1 + b2 <= target_sum; ++b2) {
      const std::int64_t b3 = target_sum - b1 - b2;
      if (b3 < lower_bounds.b3) continue;
      const CurveClass beta{b1, b2, b3};
      if (intersect_dc(alpha, beta) == target_dot) out.push_back(beta);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DivisorCandidate> divisor_candidates() {
  return {{{0, 0, 0}, false}, {{0, 0, 1}, true}, {{0, 1, 1}, true},
          {{0, 0, 2}, true},  {{0, 1, 2}, true}, {{0, 2, 2}, false}};
}

namespace {

/// Sorted first-Chern candidates for the tables: 0 <= a_i <= 2 ascending,
/// a_1 <= 1 <= a_3, alpha != 0.
std::vector<DivisorClass> table_alphas() {
  std::vector<DivisorClass> out;
  for (std::int64_t a1 = 0; a1 <= 2; ++a1)
    for (std::int64_t a2 = a1; a2 <= 2; ++a2)
      for (std::int64_t a3 = a2; a3 <= 2; ++a3) {
        if (a1 > 1 || a3 < 1) continue;
        out.push_back({a1, a2, a3});
      }
  return out;
}

std::vector<DivisorClass> nonzero_divisor_arrangements() {
  std::set<DivisorClass> seen;
  for (const DivisorCandidate& cand : divisor_candidates()) {
    if (!cand.allowed_nonzero) continue;
    for (const Perm& p : all_perms()) seen.insert(apply_perm(p, cand.cls));
  }
  return {seen.begin(), seen.end()};
}

DivisorialVerdict classify_residual(const CurveClass& classE) {
  if (!classE.is_effective_candidate()) return DivisorialVerdict::NegativeClass;
  if (classE == CurveClass{0, 0, 0}) return DivisorialVerdict::EmptyEForbidden;
  // The only effective nonzero residual classes that occur are the unit
  // classes, sums of two distinct unit classes, and doubled unit classes;
  // each of those forces global generation, contradicting the divisorial
  // hypothesis.
  Triple entries = classE.as_triple();
  std::sort(entries.begin(), entries.end());
  const bool unit = entries == Triple{0, 0, 1};
  const bool two_units = entries == Triple{0, 1, 1};
  const bool doubled = entries == Triple{0, 0, 2};
  if (!(unit || two_units || doubled))
    throw std::logic_error("unexpected effective residual class in divisorial enumeration");
  return DivisorialVerdict::GloballyGeneratedContradiction;
}

DivisorialCaseRow canonical_row(const DivisorClass& alpha, const DivisorClass& delta, int e,
                                const CurveClass& beta, const CurveClass& classE) {
  const S3Canonical canon = canonicalize_s3(
      alpha, {delta.as_triple(), beta.as_triple(), classE.as_triple()});
  DivisorialCaseRow row;
  row.alpha = canon.alpha;
  row.delta = DivisorClass::from_triple(canon.attached[0]);
  row.e = e;
  row.beta = CurveClass::from_triple(canon.attached[1]);
  row.classE = CurveClass::from_triple(canon.attached[2]);
  row.verdict = classify_residual(row.classE);
  return row;
}

}  // namespace

std::vector<DivisorialCaseRow> divisorial_table() {
  std::set<DivisorialCaseRow> rows;
  const std::vector<DivisorClass> deltas = nonzero_divisor_arrangements();
  for (const DivisorClass& alpha : table_alphas()) {
    for (const DivisorClass& delta : deltas) {
      if (!sub(alpha, delta).is_effective()) continue;
      const int e = e_flag(alpha, delta);
      for (const CurveClass& beta : solve_alpha_beta(alpha, e, {0, 0, 0})) {
        const CurveClass classE = residual_class(alpha, beta, delta);
        rows.insert(canonical_row(alpha, delta, e, beta, classE));
      }
    }
  }
  return {rows.begin(), rows.end()};
}

namespace {

struct IntermediateCaseInfo {
  char label;
  IntermediateVerdict verdict;
  std::optional<std::pair<DivisorClass, DivisorClass>> split;
};

const std::map<std::pair<DivisorClass, CurveClass>, IntermediateCaseInfo>& intermediate_info() {
  using P = std::pair<DivisorClass, DivisorClass>;
  static const std::map<std::pair<DivisorClass, CurveClass>, IntermediateCaseInfo> info = {
      {{{0, 0, 2}, {0, 0, 0}}, {'L', IntermediateVerdict::ExcludedEmpty, std::nullopt}},
      {{{0, 0, 1}, {1, 0, 0}}, {'M', IntermediateVerdict::Admissible, std::nullopt}},
      {{{0, 1, 1}, {1, 0, 0}},
       {'N', IntermediateVerdict::Decomposable, P{{0, 1, 0}, {0, 0, 1}}}},
      {{{0, 1, 2}, {1, 0, 0}},
       {'P', IntermediateVerdict::Decomposable, P{{0, 1, 1}, {0, 0, 1}}}},
      {{{1, 1, 1}, {1, 1, 0}},
       {'Q', IntermediateVerdict::Decomposable, P{{1, 1, 0}, {0, 0, 1}}}},
      {{{1, 1, 1}, {2, 0, 0}}, {'R', IntermediateVerdict::NonExistent, std::nullopt}},
      {{{0, 2, 2}, {2, 0, 0}},
       {'S', IntermediateVerdict::ExcludedDualPositivity, std::nullopt}},
      {{{1, 1, 2}, {1, 1, 1}},
       {'T', IntermediateVerdict::Decomposable, P{{0, 1, 1}, {1, 0, 1}}}},
      {{{1, 1, 2}, {2, 0, 1}},
       {'U', IntermediateVerdict::ExcludedDualPositivity, std::nullopt}},
      {{{1, 2, 2}, {2, 1, 2}}, {'V', IntermediateVerdict::Admissible, std::nullopt}},
      {{{1, 2, 2}, {2, 3, 0}},
       {'W', IntermediateVerdict::ExcludedDualPositivity, std::nullopt}},
  };
  return info;
}

}  // namespace

std::vector<IntermediateCaseRow> intermediate_table() {
  std::set<std::pair<DivisorClass, CurveClass>> cases;
  for (const DivisorClass& alpha : table_alphas()) {
    for (const CurveClass& beta : solve_alpha_beta(alpha, 0, {0, 0, 0})) {
      const S3Canonical canon = canonicalize_s3(alpha, {beta.as_triple()});
      cases.insert({canon.alpha, CurveClass::from_triple(canon.attached[0])});
    }
  }

  std::vector<IntermediateCaseRow> rows;
  for (const auto& [alpha, beta] : cases) {
    const auto it = intermediate_info().find({alpha, beta});
    if (it == intermediate_info().end())
      throw std::logic_error("unexpected case in the no-divisor enumeration");
    const IntermediateCaseInfo& info = it->second;

    IntermediateCaseRow row;
    row.label = info.label;
    row.alpha = alpha;
    row.beta = beta;
    const auto [deg, pa] = zero_locus_invariants({alpha, beta});
    row.degE = deg;
    row.paE = pa;
    row.verdict = info.verdict;
    row.split = info.split;

    // Internal cross-checks of the recorded verdict data.
    if (row.split) {
      const auto& [l1, l2] = *row.split;
      if (add(l1, l2) != alpha || divisor_product(l1, l2) != beta ||
          !is_acm_line(l1) || !is_acm_line(l2))
        throw std::logic_error("inconsistent split pair in case table");
    }
    if (info.verdict == IntermediateVerdict::ExcludedDualPositivity) {
      // The initialized twist of the dual must have a second Chern class
      // that is zero or has a negative entry.
      const CurveClass c2d = twist(dual({alpha, beta}), hyperplane()).c2;
      if (c2d.is_effective_candidate() && c2d != CurveClass{0, 0, 0})
        throw std::logic_error("dual-positivity verdict not supported by the invariants");
    }
    rows.push_back(row);
  }

  std::sort(rows.begin(), rows.end(),
            [](const IntermediateCaseRow& a, const IntermediateCaseRow& b) {
              return a.label < b.label;
            });
  if (rows.size() != 11) throw std::logic_error("no-divisor enumeration must have 11 cases");
  return rows;
}

std::vector<CurveClass> ulrich_c2_options() {
  std::set<CurveClass> out;
  const DivisorClass alpha{2, 2, 2};
  for (std::int64_t b1 = 2; b1 <= 8; ++b1)
    for (std::int64_t b2 = 2; b1 + b2 <= 8; ++b2) {
      const std::int64_t b3 = 8 - b1 - b2;
      if (b3 < 2) continue;
      const S3Canonical canon = canonicalize_s3(alpha, {Triple{b1, b2, b3}});
      out.insert(CurveClass::from_triple(canon.attached[0]));
    }
  return {out.begin(), out.end()};
}

std::vector<RationalOption> rational_c2_options() {
  const DivisorClass alpha{1, 2, 3};
  // All arrangements with sum 7, entries >= 1 and pairwise sums >= 3.
  std::set<CurveClass> arrangements;
  for (std::int64_t b1 = 1; b1 <= 7; ++b1)
    for (std::int64_t b2 = 1; b1 + b2 <= 7; ++b2) {
      const std::int64_t b3 = 7 - b1 - b2;
      if (b3 < 1) continue;
      if (b1 + b2 < 3 || b1 + b3 < 3 || b2 + b3 < 3) continue;
      arrangements.insert({b1, b2, b3});
    }

  // Group by multiset orbit; admissible arrangements are those meeting the
  // intersection constraint alpha . beta = 12 exactly as aligned.
  std::map<Triple, std::vector<CurveClass>> orbits;
  for (const CurveClass& beta : arrangements) {
    Triple key = beta.as_triple();
    std::sort(key.begin(), key.end());
    orbits[key].push_back(beta);
  }

  std::vector<RationalOption> out;
  for (const auto& [key, members] : orbits) {
    bool any = false;
    for (const CurveClass& beta : members) {
      if (intersect_dc(alpha, beta) == c1c2_constraint(alpha)) {
        out.push_back({beta, true});
        any = true;
      }
    }
    if (!any) {
      Triple desc = key;
      std::sort(desc.begin(), desc.end(), std::greater<>());
      out.push_back({CurveClass::from_triple(desc), false});
    }
  }
  std::sort(out.begin(), out.end(), [](const RationalOption& a, const RationalOption& b) {
    return a.beta < b.beta;
  });
  return out;
}

bool theorem_a_filter(const DivisorClass& c1) {
  const bool in_box = c1.d1 >= 0 && c1.d1 <= 2 && c1.d2 >= 0 && c1.d2 <= 2 &&
                      c1.d3 >= 0 && c1.d3 <= 2;
  Triple sorted = c1.as_triple();
  std::sort(sorted.begin(), sorted.end());
  return in_box || sorted == Triple{1, 2, 3};
}

namespace {

struct Family {
  DivisorClass c1;                 // sorted representative
  std::vector<CurveClass> c2s;     // canonical c2 options
  std::string curve_description;
  std::string indecomposability_condition;
};

const std::vector<Family>& families() {
  static const std::vector<Family> fams = {
      {{0, 0, 0},
       {{1, 0, 0}},
       "line (degree 1, arithmetic genus 0)",
       "always indecomposable"},
      {{0, 0, 1},
       {{1, 0, 0}},
       "line (degree 1, arithmetic genus 0)",
       "always indecomposable"},
      {{1, 2, 2},
       {{2, 1, 2}},
       "quintic curve of arithmetic genus 0",
       "always indecomposable"},
      {{1, 2, 3},
       {{4, 1, 2}, {3, 3, 1}},
       "rational normal curve of degree 7",
       "always indecomposable"},
      {{2, 2, 2},
       {{2, 2, 4}, {2, 3, 3}},
       "elliptic normal curve of degree 8, genus 1",
       "indecomposable unless the curve is the complete intersection of two "
       "divisors of classes (0,2,1) and (2,0,1)"},
  };
  return fams;
}

}  // namespace

std::vector<BundleData> admissible_pairs() {
  std::vector<BundleData> out;
  for (const Family& f : families())
    for (const CurveClass& c2 : f.c2s) out.push_back({f.c1, c2});
  std::sort(out.begin(), out.end());
  return out;
}

ClassificationVerdict theorem_b_verdict(const DivisorClass& c1, const CurveClass& c2) {
  const S3Canonical canon = canonicalize_s3(c1, {c2.as_triple()});
  const DivisorClass c1c = canon.alpha;
  const CurveClass c2c = CurveClass::from_triple(canon.attached[0]);

  ClassificationVerdict verdict;
  verdict.c1_sorted = c1c;
  for (const Family& f : families()) {
    if (f.c1 != c1c) continue;
    verdict.allowed_c2 = f.c2s;
    if (std::find(f.c2s.begin(), f.c2s.end(), c2c) != f.c2s.end()) {
      verdict.admissible = true;
      verdict.curve_description = f.curve_description;
      verdict.indecomposability_condition = f.indecomposability_condition;
    }
    break;
  }
  return verdict;
}

std::pair<DivisorClass, DivisorClass> canonicalize_pair(const DivisorClass& c1,
                                                        const DivisorClass& L1,
                                                        const DivisorClass& L2) {
  bool have = false;
  std::vector<Triple> best;
  for (const Perm& p : all_perms()) {
    if (apply_perm(p, c1) != c1) continue;
    for (const auto& ordered : {std::pair{L1, L2}, std::pair{L2, L1}}) {
      std::vector<Triple> cand = {apply_perm(p, ordered.first).as_triple(),
                                  apply_perm(p, ordered.second).as_triple()};
      if (!have || support_lex_less(cand, best)) {
        best = std::move(cand);
        have = true;
      }
    }
  }
  return {DivisorClass::from_triple(best[0]), DivisorClass::from_triple(best[1])};
}

std::vector<std::pair<DivisorClass, DivisorClass>> decomposable_candidates(
    const DivisorClass& c1, std::optional<std::int64_t> h0_total,
    std::optional<CurveClass> c2_target) {
  std::set<std::pair<DivisorClass, DivisorClass>> out;
  for (const DivisorClass& L1 : initialized_acm_line_bundles()) {
    const DivisorClass L2 = sub(c1, L1);
    if (!is_acm_line(L2)) continue;
    // The second summand is either initialized as well, or one of the
    // sectionless duals of an initialized class.
    if (!is_initialized_line(L2) && !is_initialized_line(neg(L2))) continue;
    if (h0_total && checked_add(kunneth_h(0, L1), kunneth_h(0, L2)) != *h0_total) continue;
    if (c2_target && divisor_product(L1, L2) != *c2_target) continue;
    out.insert(canonicalize_pair(c1, L1, L2));
  }
  return {out.begin(), out.end()};
}

}  // namespace triquad
