#pragma once

// brute-force enumeration oracles used by the tests; these rebuild expected
// root sets from the closed-form realization descriptions, independently of
// the reflection-closure generator

#include <algorithm>
#include <set>
#include <vector>

#include "lieq/rootsys.hpp"

namespace oracle {

using lieq::Rat;
using lieq::Vec;

inline std::vector<Vec> g2_roots() {
  // sum-zero vectors in R^3 with coords in {-2..2} and norm 2 or 6
  std::vector<Vec> out;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) {
        if (a + b + c != 0) continue;
        int n = a * a + b * b + c * c;
        if (n == 2 || n == 6) out.push_back({Rat(a), Rat(b), Rat(c)});
      }
  return out;
}

inline std::vector<Vec> f4_roots() {
  // all-integer or all-half-odd vectors in R^4 with norm 1 or 2
  std::vector<Vec> out;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d) {
          bool all_even = (a % 2 == 0) && (b % 2 == 0) && (c % 2 == 0) && (d % 2 == 0);
          bool all_odd = (a % 2 != 0) && (b % 2 != 0) && (c % 2 != 0) && (d % 2 != 0);
          if (!all_even && !all_odd) continue;
          int n4 = a * a + b * b + c * c + d * d;  // 4 * norm2
          if (n4 == 4 || n4 == 8)
            out.push_back({Rat(a, 2), Rat(b, 2), Rat(c, 2), Rat(d, 2)});
        }
  return out;
}

inline std::vector<Vec> e8_roots() {
  // Bourbaki: ±e_i±e_j, and all-(±1/2) vectors with an even number of minuses
  std::vector<Vec> out;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Vec v(8, Rat(0));
          v[i] = si;
          v[j] = sj;
          out.push_back(v);
        }
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    Vec v(8, Rat(1, 2));
    for (int i = 0; i < 8; ++i)
      if (mask & (1 << i)) v[i] = Rat(-1, 2);
    out.push_back(v);
  }
  return out;
}

// E6 and E7(as sub of E8) oracles: E8 roots lying in the integer span of the
// given simple roots
inline std::vector<Vec> e8_sub_roots(const std::vector<Vec>& simple) {
  auto basis = lieq::Mat::from_rows(simple).transpose();
  std::vector<Vec> out;
  for (const auto& r : oracle::e8_roots()) {
    auto sol = lieq::solve(basis, r);
    if (!sol) continue;
    bool integral = true;
    for (const auto& c : *sol)
      if (boost::multiprecision::denominator(c) != 1) integral = false;
    if (integral) out.push_back(r);
  }
  return out;
}

inline std::vector<Vec> e7_roots_appendix() {
  // the 7th coordinate carries f7 = sqrt(2) e7 with <f7,f7> = 2
  std::vector<Vec> out;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Vec v(7, Rat(0));
          v[i] = si;
          v[j] = sj;
          out.push_back(v);
        }
  for (int s : {1, -1}) {
    Vec v(7, Rat(0));
    v[6] = s;
    out.push_back(v);
  }
  for (int mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;  // even count of +1/2
    for (int s : {1, -1}) {
      Vec v(7, Rat(-1, 2));
      for (int i = 0; i < 6; ++i)
        if (mask & (1 << i)) v[i] = Rat(1, 2);
      v[6] = Rat(s, 2);
      out.push_back(v);
    }
  }
  return out;
}

inline bool same_root_set(std::vector<Vec> a, std::vector<Vec> b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace oracle
