#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conformance.hpp"
#include "golden.hpp"
#include "render.hpp"
#include "triquad/cohomology.hpp"
#include "triquad/delpezzo.hpp"
#include "triquad/enumerate.hpp"
#include "triquad/invariants.hpp"

namespace {

using namespace triquad;
using nlohmann::ordered_json;

std::string triple_text(const Triple& t) {
  std::ostringstream os;
  os << "(" << t[0] << "," << t[1] << "," << t[2] << ")";
  return os.str();
}

struct Options {
  std::string format;
  Format resolved = Format::Csv;
};

void add_format_flag(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format: csv, json or md")
      ->check(CLI::IsMember({"csv", "json", "md"}));
}

int emit(const Table& table, const Options& opt, const ordered_json* json_override = nullptr) {
  print_table(std::cout, table, opt.resolved, json_override);
  return 0;
}

int run_cohom(const std::vector<std::int64_t>& d, const Options& opt) {
  const CohomologyVector h = cohomology({d[0], d[1], d[2]});
  Table t;
  t.columns = {"h0", "h1", "h2", "h3"};
  t.rows = {{h.h0, h.h1, h.h2, h.h3}};
  const ordered_json obj = {{"h0", h.h0}, {"h1", h.h1}, {"h2", h.h2}, {"h3", h.h3}};
  return emit(t, opt, &obj);
}

int run_chi(const std::vector<std::int64_t>& c, const Options& opt) {
  const BundleData B{{c[0], c[1], c[2]}, {c[3], c[4], c[5]}};
  const std::int64_t chi = chi_rank2(B);
  const auto [deg, pa] = zero_locus_invariants(B);
  Table t;
  t.columns = {"chi", "deg", "pa"};
  t.rows = {{chi, deg, pa}};
  return emit(t, opt);
}

int run_ext(const std::vector<std::int64_t>& v, const Options& opt) {
  const std::int64_t e = ext1_line({v[0], v[1], v[2]}, {v[3], v[4], v[5]});
  Table t;
  t.columns = {"ext1"};
  t.rows = {{e}};
  return emit(t, opt);
}

int run_acm_lines(std::int64_t bound, const Options& opt) {
  Table t;
  t.columns = {"d1", "d2", "d3"};
  for (const DivisorClass& D : initialized_acm_line_bundles(bound))
    t.rows.push_back({D.d1, D.d2, D.d3});
  return emit(t, opt);
}

int run_table(const std::string& which, const std::string& verdict, const Options& opt) {
  Table t;
  if (which == "divisorial") {
    t.columns = {"a1", "a2", "a3", "d1", "d2", "d3", "e",
                 "b1", "b2", "b3", "cE1", "cE2", "cE3", "verdict"};
    for (const DivisorialCaseRow& row : divisorial_table()) {
      if (!verdict.empty() && to_string(row.verdict) != verdict) continue;
      t.rows.push_back({row.alpha.d1, row.alpha.d2, row.alpha.d3, row.delta.d1, row.delta.d2,
                        row.delta.d3, row.e, row.beta.b1, row.beta.b2, row.beta.b3,
                        row.classE.b1, row.classE.b2, row.classE.b3, to_string(row.verdict)});
    }
  } else {
    t.columns = {"label", "a1", "a2", "a3", "b1", "b2", "b3", "deg", "pa", "verdict", "split"};
    for (const IntermediateCaseRow& row : intermediate_table()) {
      if (!verdict.empty() && to_string(row.verdict) != verdict) continue;
      std::string split;
      if (row.split)
        split = triple_text(row.split->first.as_triple()) + "+" +
                triple_text(row.split->second.as_triple());
      t.rows.push_back({std::string(1, row.label), row.alpha.d1, row.alpha.d2, row.alpha.d3,
                        row.beta.b1, row.beta.b2, row.beta.b3, row.degE, row.paE,
                        to_string(row.verdict), split});
    }
  }
  return emit(t, opt);
}

int run_classify(const std::vector<std::int64_t>& c1v,
                 const std::vector<std::int64_t>& c2v, const Options& opt) {
  const DivisorClass c1{c1v[0], c1v[1], c1v[2]};
  Table t;
  t.columns = {"field", "value"};
  const bool in_bounds = theorem_a_filter(c1);
  t.rows.push_back({"within_c1_bounds", in_bounds});
  if (!in_bounds) {
    t.rows.push_back({"summary", "outside the first-Chern-class bounds"});
    return emit(t, opt);
  }

  if (c2v.empty()) {
    const ClassificationVerdict v = theorem_b_verdict(c1, {0, 0, 0});
    t.rows.push_back({"c1_sorted", triple_text(v.c1_sorted.as_triple())});
    std::string allowed;
    for (const CurveClass& c2 : v.allowed_c2)
      allowed += (allowed.empty() ? "" : " ") + triple_text(c2.as_triple());
    t.rows.push_back({"allowed_c2", allowed});
    t.rows.push_back({"summary", allowed.empty()
                                     ? "no admissible second Chern class for this c1"
                                     : "admissible for the listed c2 values"});
    return emit(t, opt);
  }

  const CurveClass c2{c2v[0], c2v[1], c2v[2]};
  const ClassificationVerdict v = theorem_b_verdict(c1, c2);
  t.rows.push_back({"c1_sorted", triple_text(v.c1_sorted.as_triple())});
  t.rows.push_back({"admissible", v.admissible});
  std::string allowed;
  for (const CurveClass& a : v.allowed_c2)
    allowed += (allowed.empty() ? "" : " ") + triple_text(a.as_triple());
  t.rows.push_back({"allowed_c2", allowed});
  if (v.admissible) {
    t.rows.push_back({"section_curve", v.curve_description});
    t.rows.push_back({"indecomposability", v.indecomposability_condition});
    const auto [deg, pa] = zero_locus_invariants({c1, c2});
    t.rows.push_back({"deg", deg});
    t.rows.push_back({"pa", pa});
  } else {
    t.rows.push_back({"summary", "not admissible"});
  }
  std::string splits;
  for (const auto& [l1, l2] : decomposable_candidates(c1, std::nullopt, c2))
    splits += (splits.empty() ? "" : " ") + triple_text(l1.as_triple()) + "+" +
              triple_text(l2.as_triple());
  t.rows.push_back({"split_candidates", splits});
  return emit(t, opt);
}

int run_dp_classes(std::int64_t degree, std::int64_t genus, std::int64_t widen, bool reduce,
                   const Options& opt) {
  std::vector<SurfaceClass> classes = curve_classes(degree, genus, widen);
  if (reduce) classes = orbit_reduce(classes);
  Table t;
  t.columns = {"a", "b1", "b2", "b3", "p1", "p2", "p3"};
  for (const SurfaceClass& C : classes) {
    const CurveClass push = pushforward(C);
    t.rows.push_back({C.a, C.b1, C.b2, C.b3, push.b1, push.b2, push.b3});
  }
  return emit(t, opt);
}

int run_dp_push(const std::vector<std::int64_t>& v, const Options& opt) {
  const CurveClass push = pushforward({v[0], v[1], v[2], v[3]});
  Table t;
  t.columns = {"b1", "b2", "b3"};
  t.rows = {{push.b1, push.b2, push.b3}};
  return emit(t, opt);
}

int run_dp_cremona(const std::vector<std::int64_t>& v, const Options& opt) {
  const SurfaceClass C = cremona({v[0], v[1], v[2], v[3]});
  Table t;
  t.columns = {"a", "b1", "b2", "b3"};
  t.rows = {{C.a, C.b1, C.b2, C.b3}};
  return emit(t, opt);
}

int run_verify(const std::string& only, const Options& opt) {
  const ConformanceReport report = run_conformance(golden_dir(), only);
  Table t;
  t.columns = {"name", "scope", "provenance", "status", "detail"};
  ordered_json checks = ordered_json::array();
  for (const ConformanceCheck& c : report.checks) {
    t.rows.push_back({c.name, c.scope, c.provenance, c.status, c.detail});
    checks.push_back({{"name", c.name},
                      {"scope", c.scope},
                      {"provenance", c.provenance},
                      {"status", c.status},
                      {"detail", c.detail}});
  }
  const ordered_json obj = {
      {"checks", checks},
      {"summary",
       {{"pass", report.passed},
        {"fail", report.failed},
        {"paper-discrepancy", report.discrepancies}}}};
  emit(t, opt, &obj);
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact intersection theory and rank-2 bundle classification on the product "
               "of three projective lines"};
  app.require_subcommand(1);
  Options opt;

  std::vector<std::int64_t> cohom_d;
  CLI::App* cohom_cmd = app.add_subcommand("cohom", "Line-bundle cohomology h0..h3");
  cohom_cmd->add_option("d", cohom_d, "Divisor class d1 d2 d3")->expected(3)->required();
  add_format_flag(cohom_cmd, opt);

  std::vector<std::int64_t> chi_v;
  CLI::App* chi_cmd = app.add_subcommand("chi", "Euler characteristic of rank-2 Chern data");
  chi_cmd->add_option("c", chi_v, "Chern data a1 a2 a3 b1 b2 b3")->expected(6)->required();
  add_format_flag(chi_cmd, opt);

  std::vector<std::int64_t> ext_v;
  CLI::App* ext_cmd = app.add_subcommand("ext", "dim Ext^1 between two line bundles");
  ext_cmd->add_option("d", ext_v, "Target then sub: t1 t2 t3 s1 s2 s3")->expected(6)->required();
  add_format_flag(ext_cmd, opt);

  std::int64_t acm_bound = 4;
  CLI::App* acm_cmd = app.add_subcommand(
      "acm-lines", "Initialized line bundles with no middle cohomology in any twist");
  acm_cmd->add_option("--bound", acm_bound, "Coefficient search bound");
  add_format_flag(acm_cmd, opt);

  std::string table_which;
  std::string table_verdict;
  CLI::App* table_cmd = app.add_subcommand("table", "Classification case tables");
  table_cmd->add_option("which", table_which, "divisorial or intermediate")
      ->check(CLI::IsMember({"divisorial", "intermediate"}))
      ->required();
  table_cmd->add_option("--verdict", table_verdict, "Keep only rows with this verdict");
  add_format_flag(table_cmd, opt);

  std::vector<std::int64_t> classify_c1, classify_c2;
  CLI::App* classify_cmd = app.add_subcommand("classify", "Admissibility of Chern data");
  classify_cmd->add_option("c1", classify_c1, "First Chern class a1 a2 a3")
      ->expected(3)
      ->required();
  classify_cmd->add_option("--c2", classify_c2, "Second Chern class b1 b2 b3")->expected(3);
  add_format_flag(classify_cmd, opt);

  CLI::App* dp_cmd = app.add_subcommand("delpezzo", "Degree-6 surface lattice computations");
  dp_cmd->require_subcommand(1);
  std::int64_t dp_degree = 0, dp_genus = 0, dp_widen = 0;
  bool dp_reduce = false;
  CLI::App* dp_classes = dp_cmd->add_subcommand("classes", "Curve classes by degree and genus");
  dp_classes->add_option("degree", dp_degree)->required();
  dp_classes->add_option("genus", dp_genus)->required();
  dp_classes->add_option("--widen", dp_widen, "Enlarge the search box");
  dp_classes->add_flag("--reduce", dp_reduce, "Orbit representatives only");
  add_format_flag(dp_classes, opt);
  std::vector<std::int64_t> dp_push_v, dp_cremona_v;
  CLI::App* dp_push = dp_cmd->add_subcommand("push", "Pushforward to the ambient threefold");
  dp_push->add_option("c", dp_push_v, "Class a b1 b2 b3")->expected(4)->required();
  add_format_flag(dp_push, opt);
  CLI::App* dp_crem = dp_cmd->add_subcommand("cremona", "Quadratic lattice involution");
  dp_crem->add_option("c", dp_cremona_v, "Class a b1 b2 b3")->expected(4)->required();
  add_format_flag(dp_crem, opt);

  std::string verify_only;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the conformance suite against the golden data");
  verify_cmd->add_option("--only", verify_only,
                         "Restrict to one scope (cohomology, invariants, tables, "
                         "classifiers, delpezzo, properties)")
      ->check(CLI::IsMember({"cohomology", "invariants", "tables", "classifiers",
                             "delpezzo", "properties"}));
  add_format_flag(verify_cmd, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!resolve_format(opt.format, opt.resolved)) return 2;

  try {
    if (*cohom_cmd) return run_cohom(cohom_d, opt);
    if (*chi_cmd) return run_chi(chi_v, opt);
    if (*ext_cmd) return run_ext(ext_v, opt);
    if (*acm_cmd) return run_acm_lines(acm_bound, opt);
    if (*table_cmd) return run_table(table_which, table_verdict, opt);
    if (*classify_cmd) return run_classify(classify_c1, classify_c2, opt);
    if (*dp_classes) return run_dp_classes(dp_degree, dp_genus, dp_widen, dp_reduce, opt);
    if (*dp_push) return run_dp_push(dp_push_v, opt);
    if (*dp_crem) return run_dp_cremona(dp_cremona_v, opt);
    if (*verify_cmd) return run_verify(verify_only, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
