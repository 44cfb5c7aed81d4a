#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lieq/report.hpp"
#include "lieq/survey.hpp"

using namespace lieq;

static bool has_entry(const std::vector<SurveyEntry>& es, const std::string& g,
                      const std::string& h, long long dg, long long dh) {
  for (const auto& e : es)
    if (e.g_label == g && e.h_label == h && e.dim_g == dg && e.dim_h == dh) return true;
  return false;
}

TEST_CASE("table 1 instantiation contains the fixed and parametrized rows") {
  auto t1 = table1_entries(2000);
  CHECK(has_entry(t1, "sp(2)", "so(3)", 10, 3));
  CHECK(has_entry(t1, "so(7)", "G2", 21, 14));
  CHECK(has_entry(t1, "E8", "su(3)+E6", 248, 86));
  CHECK(has_entry(t1, "su(6)", "su(3)+su(2)", 35, 11));      // su(pq) at (3,2)
  CHECK(has_entry(t1, "so(12)", "sp(1)+sp(3)", 66, 24));     // so(4n) at n=3
  CHECK(has_entry(t1, "so(16)", "sp(1)+sp(4)", 120, 39));    // so(4n) at n=4
  CHECK(has_entry(t1, "su(10)", "su(5)", 99, 24));           // su(n(n-1)/2) at n=5
  CHECK(has_entry(t1, "so(10)", "so(5)", 45, 10));           // so(2n^2+n) at n=2
  // all dims positive and consistent
  for (const auto& e : t1) {
    CHECK(e.dim_g > e.dim_h);
    CHECK(e.dim_h > 0);
    CHECK(e.rank_g > 0);
  }
}

TEST_CASE("the inequality filter reproduces exactly the nine candidate rows") {
  auto t2 = filter_table2(table1_entries(2000));
  REQUIRE(t2.rows.size() == 9);
  CHECK(has_entry(t2.rows, "su(6)", "su(3)+su(2)", 35, 11));
  CHECK(has_entry(t2.rows, "sp(2)", "so(3)", 10, 3));
  CHECK(has_entry(t2.rows, "F4", "so(3)+G2", 52, 17));
  CHECK(has_entry(t2.rows, "F4", "su(3)+su(3)", 52, 18));
  CHECK(has_entry(t2.rows, "E7", "su(2)+F4", 133, 55));
  CHECK(has_entry(t2.rows, "E7", "su(3)+su(6)", 133, 43));
  CHECK(has_entry(t2.rows, "E8", "su(3)+E6", 248, 86));
  CHECK(has_entry(t2.rows, "so(12)", "sp(1)+sp(3)", 66, 24));
  CHECK(has_entry(t2.rows, "so(16)", "sp(1)+sp(4)", 120, 39));
  // the two exceptional pairs satisfy the inequality but are classified apart
  REQUIRE(t2.excluded_exceptional.size() == 2);
  CHECK(has_entry(t2.excluded_exceptional, "so(7)", "G2", 21, 14));
  CHECK(has_entry(t2.excluded_exceptional, "G2", "su(3)", 14, 8));
  CHECK(t2.tail_certified);
}

TEST_CASE("the filter is stable under a larger scan bound") {
  auto t2 = filter_table2(table1_entries(6000));
  CHECK(t2.rows.size() == 9);
  CHECK(t2.tail_certified);
}

TEST_CASE("all case replays pass") {
  for (const auto& id : all_case_ids()) {
    auto r = run_case(id);
    INFO("case ", id);
    CHECK(r.pass());
  }
}

TEST_CASE("case reports contain the quoted numerical values") {
  auto get = [](const CaseReport& r, const std::string& name) -> std::string {
    for (const auto& it : r.items)
      if (it.name == name) return it.computed;
    return "<missing>";
  };
  auto c1 = run_case("1");
  CHECK(get(c1, "dim centralizer") == "5");
  CHECK(get(c1, "bound dim g - 2 dim h") == "13");
  auto c2 = run_case("2");
  CHECK(get(c2, "dim centralizer") == "2");
  auto c5 = run_case("5");
  CHECK(get(c5, "torus-level centralizer dim") == "31");
  CHECK(get(c5, "dim ker l = dim m - dim h") == "23");
  auto c7 = run_case("7");
  CHECK(get(c7, "max centralizer with center >= 3") == "48");
  CHECK(get(c7, "commuting subspace dim in m'") == "3");
  auto ap = run_case("appendix");
  CHECK(get(ap, "centralizer roots") == "24");
  CHECK(get(ap, "centralizer type") == "D4+R3");
}

TEST_CASE("report rendering is deterministic") {
  auto r = run_case("2");
  CHECK(render_case(r, ReportFormat::Text) == render_case(r, ReportFormat::Text));
  auto t2 = filter_table2(table1_entries(2000));
  std::string a = render_table2(t2, ReportFormat::Records);
  std::string b = render_table2(filter_table2(table1_entries(2000)), ReportFormat::Records);
  CHECK(a == b);
}
