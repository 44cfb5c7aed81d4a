#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lieq/chevalley.hpp"

using namespace lieq;

static CompactLieAlgebra build(const std::string& t) {
  return compact_form(build_root_system(*parse_cartan_type(t)));
}

TEST_CASE("structure constants have the p+1 magnitude and antisymmetry") {
  for (auto t : {"A2", "C2", "G2", "B3", "D4"}) {
    auto rs = build_root_system(*parse_cartan_type(t));
    auto sc = chevalley_constants(rs);
    int nr = static_cast<int>(rs.all_roots.size());
    for (int a = 0; a < nr; ++a)
      for (int b = 0; b < nr; ++b) {
        Vec sum = add(rs.all_roots[a], rs.all_roots[b]);
        if (!rs.is_root(sum)) {
          CHECK(sc.n(a, b) == 0);
          continue;
        }
        CHECK(sc.n(a, b) == -sc.n(b, a));
        // |N| = p+1 where p is the length of the string below
        int p = 0;
        Vec back = rs.all_roots[b];
        while (true) {
          back = sub(back, rs.all_roots[a]);
          if (!rs.is_root(back)) break;
          ++p;
        }
        CHECK(boost::multiprecision::abs(sc.n(a, b)) == p + 1);
      }
  }
}

TEST_CASE("jacobi identity holds exhaustively on small algebras") {
  for (auto t : {"A1", "A2", "C2", "G2", "B3", "A3"}) {
    auto g = build(t);
    auto rep = verify_jacobi(g, true);
    CHECK(rep.exhaustive);
    CHECK(rep.pass);
  }
}

TEST_CASE("jacobi identity holds on sampled triples for larger algebras") {
  for (auto t : {"F4", "D5", "E6"}) {
    auto g = build(t);
    auto rep = verify_jacobi(g, false, 2024, 2000);
    CHECK(rep.pass);
  }
}

TEST_CASE("bi form is ad invariant and positive definite") {
  SplitMix rng(31);
  for (auto t : {"A2", "C2", "G2", "B3"}) {
    auto g = build(t);
    CHECK(is_positive_definite(g.bi_form));
    for (int s = 0; s < 25; ++s) {
      auto rnd = [&] {
        Vec v;
        for (int i = 0; i < g.dim; ++i) v.push_back(Rat(rng.range(-5, 5)));
        return v;
      };
      Vec x = rnd(), y = rnd(), z = rnd();
      Rat lhs = dot(g.bi_form.apply(g.bracket(x, y)), z);
      Rat rhs = -dot(g.bi_form.apply(y), g.bracket(x, z));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("centralizer kernel agrees with the root-counting oracle on seeded cartan vectors") {
  SplitMix rng(2024);
  int checked = 0;
  for (auto t : {"A2", "B2", "C3", "G2", "A3", "D4", "F4", "A5", "B3", "D6"}) {
    auto rs = build_root_system(*parse_cartan_type(t));
    auto g = compact_form(rs);
    for (int s = 0; s < 12; ++s) {
      // random integer combination of simple coroots, so u lies in the torus
      Vec u = zero_vec(rs.space.dim);
      for (const auto& a : rs.simple_roots)
        u = add(u, scale(Rat(rng.range(-6, 6)) * Rat(2) / rs.norm2(a), a));
      auto ker = centralizer(g, g.cartan_element(u));
      int expect = rs.rank() + static_cast<int>(orthogonal_subsystem(rs, u).size());
      CHECK(static_cast<int>(ker.size()) == expect);
      ++checked;
    }
  }
  CHECK(checked >= 100);
}

TEST_CASE("so(n) matrix backend brackets and dimensions") {
  for (int n : {4, 5, 7}) {
    auto g = so_matrix_algebra(n);
    CHECK(g.dim == n * (n - 1) / 2);
    CHECK(verify_jacobi(g, true).pass);
    // matrix commutator oracle on random elements
    SplitMix rng(41);
    for (int s = 0; s < 10; ++s) {
      Vec x, y;
      for (int i = 0; i < g.dim; ++i) x.push_back(Rat(rng.range(-4, 4)));
      for (int i = 0; i < g.dim; ++i) y.push_back(Rat(rng.range(-4, 4)));
      Mat xm = so_element_matrix(g, x), ym = so_element_matrix(g, y);
      Mat comm = xm.mul(ym);
      Mat yx = ym.mul(xm);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) comm(a, b) -= yx(a, b);
      CHECK(so_matrix_to_element(g, comm) == g.bracket(x, y));
    }
  }
}

TEST_CASE("simple ideal split") {
  // so(4) is not simple: two 3-dimensional ideals
  auto so4 = so_matrix_algebra(4);
  auto ideals = simple_ideals(so4);
  REQUIRE(ideals.size() == 2);
  CHECK(ideals[0].size() == 3);
  CHECK(ideals[1].size() == 3);
  // each ideal is closed under bracketing with the whole algebra
  for (const auto& ideal : ideals)
    for (const auto& v : ideal)
      for (int i = 0; i < so4.dim; ++i)
        CHECK(in_span(ideal, so4.bracket(so4.basis_element(i), v)));
  // a simple algebra is a single ideal
  CHECK(simple_ideals(build("G2")).size() == 1);
}
