#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lieq/flags.hpp"

using namespace lieq;

static RootSystem build(const std::string& t) { return build_root_system(*parse_cartan_type(t)); }

TEST_CASE("centralizer types on quoted witness vectors") {
  auto a5 = build("A5");
  auto c1 = centralizer_type(a5, {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(-3), Rat(3)});
  CHECK(c1.label() == "R5");
  CHECK(c1.total_dim == 5);

  auto d6 = build("D6");
  auto c8 = centralizer_type(d6, {Rat(1), Rat(1), Rat(2), Rat(2), Rat(-3), Rat(-3)});
  CHECK(c8.label() == "A1+A1+A1+R3");
  CHECK(c8.total_dim == 12);
  CHECK(c8.center_dim == 3);

  auto d8 = build("D8");
  auto c9 =
      centralizer_type(d8, {Rat(1), Rat(1), Rat(2), Rat(2), Rat(3), Rat(3), Rat(-6), Rat(-6)});
  CHECK(c9.label() == "A1+A1+A1+A1+R4");
  CHECK(c9.total_dim == 16);
  CHECK(c9.center_dim == 4);
}

TEST_CASE("the zero vector is degenerate with the full centralizer") {
  auto rs = build("F4");
  auto c = centralizer_type(rs, zero_vec(4));
  CHECK(c.degenerate);
  CHECK(c.total_dim == 52);
}

TEST_CASE("stratum enumeration covers subsets of the simple roots") {
  auto a2 = build("A2");
  auto strata = enumerate_strata(a2);
  // subsets: {} -> R2, {a1} and {a2} -> A1+R1, {a1,a2} -> A2
  REQUIRE(strata.size() == 3);
  bool r2 = false, a1r1 = false, full = false;
  for (const auto& s : strata) {
    if (s.centralizer.label() == "R2") r2 = true;
    if (s.centralizer.label() == "A1+R1") a1r1 = true;
    if (s.centralizer.label() == "A2") full = true;
  }
  CHECK(r2);
  CHECK(a1r1);
  CHECK(full);
}

TEST_CASE("strata totals are consistent with root counts") {
  for (auto t : {"A3", "B3", "C3", "G2", "F4"}) {
    auto rs = build(t);
    for (const auto& s : enumerate_strata(rs)) {
      int comp_dim = 0, comp_rank = 0;
      for (const auto& c : s.centralizer.components) {
        comp_dim += type_dim(c);
        comp_rank += c.rank;
      }
      CHECK(s.centralizer.total_dim == s.centralizer.center_dim + comp_dim);
      CHECK(s.centralizer.center_dim == rs.rank() - comp_rank);
      CHECK(s.centralizer.total_dim <= rs.rank() + static_cast<int>(rs.all_roots.size()));
    }
  }
}

TEST_CASE("f4 center-1 strata peak at total dim 22") {
  auto f4 = build("F4");
  int best = 0;
  for (const auto& s : enumerate_strata(f4))
    if (s.centralizer.center_dim == 1) best = std::max(best, s.centralizer.total_dim);
  CHECK(best == 22);
}

TEST_CASE("max centralizer with prescribed center") {
  auto [m_e7, w_e7] = max_centralizer_with_center(build("E7"), 3);
  CHECK(m_e7 == 31);
  REQUIRE(!w_e7.empty());
  CHECK(w_e7.front().centralizer.label() == "D4+R3");

  auto [m_e8, w_e8] = max_centralizer_with_center(build("E8"), 3);
  CHECK(m_e8 == 48);
  CHECK(w_e8.front().centralizer.label() == "D5+R3");
}
