// acceptance gate: thirteen criteria, one pass/fail line each; exit code is
// the number of failed criteria

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "lieq/criteria.hpp"
#include "lieq/pairspec.hpp"
#include "lieq/report.hpp"
#include "lieq/survey.hpp"
#include "oracles.hpp"

using namespace lieq;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool ok) {
  std::cout << "criterion " << n << " (" << what << "): " << (ok ? "pass" : "FAIL") << std::endl;
  if (!ok) ++failures;
}

RootSystem build_rs(const std::string& t) { return build_root_system(*parse_cartan_type(t)); }

ReductivePair load_fixture_pair(const std::string& name) {
  std::ifstream in(std::string(LIEQ_FIXTURES) + "/" + name, std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  auto f = parse_pair_spec(in);
  return build_pair(f, build_ambient(f));
}

std::string item(const CaseReport& r, const std::string& name) {
  for (const auto& it : r.items)
    if (it.name == name) return it.computed;
  return "<missing>";
}

void criterion1() {
  bool ok = build_rs("G2").all_roots.size() == 12 &&
            oracle::same_root_set(build_rs("G2").all_roots, oracle::g2_roots()) &&
            oracle::same_root_set(build_rs("F4").all_roots, oracle::f4_roots()) &&
            oracle::same_root_set(build_rs("E8").all_roots, oracle::e8_roots()) &&
            oracle::same_root_set(build_rs("E7").all_roots, oracle::e7_roots_appendix());
  auto e6 = build_rs("E6");
  auto e6_oracle = oracle::e8_sub_roots(e6.simple_roots);
  ok = ok && e6_oracle.size() == 72 && oracle::same_root_set(e6.all_roots, e6_oracle) &&
       build_rs("F4").all_roots.size() == 48 && build_rs("E7").all_roots.size() == 126 &&
       build_rs("E8").all_roots.size() == 240;
  report(1, "root counts vs enumeration oracle", ok);
}

void criterion2() {
  auto t2 = filter_table2(table1_entries(2000));
  bool ok = t2.rows.size() == 9 && t2.tail_certified;
  bool sp2 = false, e8 = false;
  for (const auto& e : t2.rows) {
    if (e.g_label == "sp(2)" && e.h_label == "so(3)" && e.dim_g == 10 && e.dim_h == 3) sp2 = true;
    if (e.g_label == "E8" && e.h_label == "su(3)+E6" && e.dim_g == 248 && e.dim_h == 86) e8 = true;
  }
  report(2, "table 2 regeneration", ok && sp2 && e8);
}

void criterion3() {
  auto r = run_case("1");
  report(3, "case 1 centralizer 5 < 13", r.pass() && item(r, "dim centralizer") == "5" &&
                                             item(r, "bound dim g - 2 dim h") == "13");
}

void criterion4() {
  auto r = run_case("2");
  report(4, "case 2 centralizer 2 < 4",
         r.pass() && item(r, "dim centralizer") == "2" && item(r, "bound dim g - 2 dim h") == "4");
}

void criterion5() {
  // every admissible center-1 stratum of F4 gives orbit_dim + 1 = 31, against
  // dim m = 35 (case 3) and 34 (case 4); admissible means the centralizer
  // clears the dim g - 2 dim h bound, below which a witness cannot exist
  auto f4 = build_rs("F4");
  bool ok = true;
  for (long long dim_h : {17, 18}) {
    long long bound = 52 - 2 * dim_h;
    int strata = 0;
    for (const auto& s : enumerate_strata(f4)) {
      if (s.centralizer.center_dim != 1 || s.centralizer.total_dim < bound) continue;
      ++strata;
      long long orbit = 52 - s.centralizer.total_dim;
      if (orbit + 1 != 31) ok = false;
      if (orbit + 1 >= 52 - dim_h) ok = false;  // must contradict dim m
    }
    if (strata == 0) ok = false;
  }
  ok = ok && run_case("3").pass() && run_case("4").pass();
  report(5, "cases 3/4 orbit bound 31", ok);
}

void criterion6() {
  auto r = run_case("5");
  report(6, "case 5 mismatch 31 vs 23",
         r.pass() && item(r, "torus-level centralizer dim") == "31" &&
             item(r, "dim ker l = dim m - dim h") == "23");
}

void criterion7() {
  auto r = run_case("6");
  report(7, "case 6 max centralizer 31 (D4), 88 < 90",
         r.pass() && item(r, "max centralizer with center >= 3") == "31" &&
             item(r, "witness type") == "D4+R3");
}

void criterion8() {
  auto r = run_case("7");
  bool commuting = false;
  {
    std::istringstream in(item(r, "commuting subspace dim in m'"));
    int d = 0;
    in >> d;
    commuting = d >= 3;
  }
  report(8, "case 7 max centralizer 48 (D5), commuting 3-space",
         r.pass() && item(r, "max centralizer with center >= 3") == "48" &&
             item(r, "witness type") == "D5+R3" && commuting);
}

void criterion9() {
  auto c8 = run_case("8");
  auto c9 = run_case("9");
  report(9, "cases 8/9 centralizer types",
         c8.pass() && item(c8, "centralizer type") == "A1+A1+A1+R3" &&
             item(c8, "dim centralizer") == "12" && c9.pass() &&
             item(c9, "centralizer type") == "A1+A1+A1+A1+R4" &&
             item(c9, "dim centralizer") == "16");
}

void criterion10() {
  auto r = run_case("appendix");
  report(10, "appendix slice and 24 centralizer roots",
         r.pass() && item(r, "dim t cap m") == "2" && item(r, "centralizer roots") == "24" &&
             item(r, "centralizer type") == "D4+R3" && item(r, "dim centralizer") == "31");
}

void criterion11() {
  bool ok = true;
  for (const char* name :
       {"so7-g2.pair", "g2-su3.pair", "su2su2-diag.pair", "so5-so3so2.pair"}) {
    auto p = load_fixture_pair(name);
    if (finsler_space_check(p, 8, 2024).outcome != Outcome::HoldsProbabilistically) ok = false;
  }
  for (const char* name : {"su2su2-diag.pair", "so5-so3so2.pair"}) {
    auto p = load_fixture_pair(name);
    if (!symmetric_pair_test(p)) ok = false;
    for (const auto& a : p.m_basis)
      for (const auto& b : p.m_basis)
        if (!in_span(p.h_basis, p.g.bracket(a, b))) ok = false;
  }
  report(11, "positive classifications hold probabilistically", ok);
}

void criterion12() {
  auto g = compact_form(build_rs("A1"));
  auto p = reductive_decomposition(g, resolve_embedding(g, ExplicitSpec{{}}));
  auto v = finsler_space_check(p, 8, 2024);
  bool ok = v.outcome == Outcome::FailsWithWitness && v.witness.has_value();
  if (ok) {
    // reproducible: the same seed re-derives the same witness, and the
    // witness fails the per-vector criterion in isolation
    auto again = finsler_space_check(p, 8, 2024);
    ok = again.witness == v.witness &&
         finsler_equigeodesic_vector(p, *v.witness).outcome != Outcome::Holds;
  }
  report(12, "negative classification with reproducible witness", ok);
}

void criterion13() {
  bool ok = true;
  // jacobi and ad-invariance per the sampling policy
  for (auto t : {"A2", "C2", "G2", "B3"}) {
    auto g = compact_form(build_rs(t));
    if (!verify_jacobi(g, true).pass) ok = false;
    SplitMix rng(99);
    for (int s = 0; s < 10; ++s) {
      Vec x, y, z;
      for (int i = 0; i < g.dim; ++i) {
        x.push_back(Rat(rng.range(-5, 5)));
        y.push_back(Rat(rng.range(-5, 5)));
        z.push_back(Rat(rng.range(-5, 5)));
      }
      if (dot(g.bi_form.apply(g.bracket(x, y)), z) != -dot(g.bi_form.apply(y), g.bracket(x, z)))
        ok = false;
    }
  }
  for (auto t : {"F4", "E6"})
    if (!verify_jacobi(compact_form(build_rs(t)), false, 2024, 2000).pass) ok = false;
  // centralizer cross-oracle on 100+ seeded cartan vectors
  SplitMix rng(2024);
  int checked = 0;
  for (auto t : {"A2", "B2", "C3", "G2", "A3", "D4", "F4", "A5", "B3", "D6"}) {
    auto rs = build_rs(t);
    auto g = compact_form(rs);
    for (int s = 0; s < 12; ++s) {
      Vec u = zero_vec(rs.space.dim);
      for (const auto& a : rs.simple_roots)
        u = add(u, scale(Rat(rng.range(-6, 6)) * Rat(2) / rs.norm2(a), a));
      int expect = rs.rank() + static_cast<int>(orthogonal_subsystem(rs, u).size());
      if (static_cast<int>(centralizer(g, g.cartan_element(u)).size()) != expect) ok = false;
      ++checked;
    }
  }
  if (checked < 100) ok = false;
  // byte-deterministic reports
  auto r1 = render_case(run_case("2"), ReportFormat::Text);
  auto r2 = render_case(run_case("2"), ReportFormat::Text);
  auto tb1 = render_table2(filter_table2(table1_entries(2000)), ReportFormat::Records);
  auto tb2 = render_table2(filter_table2(table1_entries(2000)), ReportFormat::Records);
  if (r1 != r2 || tb1 != tb2) ok = false;
  report(13, "property suites", ok);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  criterion13();
  std::cout << (failures == 0 ? "acceptance: all criteria pass" : "acceptance: FAILURES")
            << std::endl;
  return failures;
}
