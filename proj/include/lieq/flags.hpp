#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "lieq/rootsys.hpp"

namespace lieq {

// centralizer c_g(u) of a torus vector, read off the Dynkin diagram:
// center of dimension n − k plus the subsystem orthogonal to u
struct CentralizerType {
  int center_dim = 0;
  std::vector<CartanType> components;  // sorted by label
  int total_dim = 0;
  bool degenerate = false;  // u = 0: the whole algebra

  std::string label() const {
    std::string s;
    for (const auto& c : components) {
      if (!s.empty()) s += "+";
      s += c.label();
    }
    if (center_dim > 0) {
      if (!s.empty()) s += "+";
      s += "R" + std::to_string(center_dim);
    }
    return s.empty() ? "0" : s;
  }

  bool operator==(const CentralizerType& o) const {
    return center_dim == o.center_dim && total_dim == o.total_dim && label() == o.label();
  }
  bool operator<(const CentralizerType& o) const {
    if (total_dim != o.total_dim) return total_dim < o.total_dim;
    if (center_dim != o.center_dim) return center_dim < o.center_dim;
    return label() < o.label();
  }
};

namespace detail {

inline CentralizerType centralizer_from_roots(const RootSystem& rs,
                                              const std::vector<Root>& orth_roots) {
  CentralizerType ct;
  auto comps = classify_subsystem(rs.space, orth_roots);
  int comp_rank = 0, comp_roots = 0;
  for (const auto& c : comps) {
    comp_rank += c.rank;
    comp_roots += type_root_count(c);
  }
  std::sort(comps.begin(), comps.end(),
            [](const CartanType& a, const CartanType& b) { return a.label() < b.label(); });
  ct.components = comps;
  ct.center_dim = rs.rank() - comp_rank;
  ct.total_dim = rs.rank() + comp_roots;
  if (static_cast<int>(orth_roots.size()) != comp_roots)
    throw std::logic_error("orthogonal subsystem size mismatch");
  return ct;
}

}  // namespace detail

inline CentralizerType centralizer_type(const RootSystem& rs, const Vec& u) {
  if (is_zero(u)) {
    CentralizerType ct;
    ct.degenerate = true;
    ct.components = rs.components;
    std::sort(ct.components.begin(), ct.components.end(),
              [](const CartanType& a, const CartanType& b) { return a.label() < b.label(); });
    ct.center_dim = 0;
    int r = 0;
    for (const auto& c : rs.components) r += type_dim(c);
    ct.total_dim = r;
    return ct;
  }
  Vec dom = dominant_representative(rs, u).first;
  return detail::centralizer_from_roots(rs, orthogonal_subsystem(rs, dom));
}

struct FlagStratum {
  std::vector<int> simple_root_subset;
  CentralizerType centralizer;
  int orbit_dim = 0;
};

inline FlagStratum stratum_for_subset(const RootSystem& rs, const std::vector<int>& subset) {
  FlagStratum st;
  st.simple_root_subset = subset;
  // roots of the subsystem generated by the chosen simple roots: the roots
  // whose simple-coordinate support lies in the subset
  std::vector<bool> chosen(rs.rank(), false);
  for (int i : subset) chosen[i] = true;
  std::vector<Root> sub;
  int npos = static_cast<int>(rs.positive_roots.size());
  for (int p = 0; p < npos; ++p) {
    bool ok = true;
    for (int j = 0; j < rs.rank(); ++j)
      if (rs.simple_coords[p][j] != 0 && !chosen[j]) {
        ok = false;
        break;
      }
    if (ok) {
      sub.push_back(rs.positive_roots[p]);
      sub.push_back(scale(Rat(-1), rs.positive_roots[p]));
    }
  }
  st.centralizer = detail::centralizer_from_roots(rs, sub);
  int dim_g = rs.rank() + 2 * npos;
  st.orbit_dim = dim_g - st.centralizer.total_dim;
  return st;
}

// one stratum per simple-root subset, deduplicated by centralizer type
inline std::vector<FlagStratum> enumerate_strata(const RootSystem& rs) {
  int n = rs.rank();
  std::map<CentralizerType, FlagStratum> seen;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) subset.push_back(i);
    FlagStratum st = stratum_for_subset(rs, subset);
    seen.try_emplace(st.centralizer, std::move(st));
  }
  std::vector<FlagStratum> out;
  for (auto& [k, v] : seen) out.push_back(std::move(v));
  return out;
}

inline std::pair<int, std::vector<FlagStratum>> max_centralizer_with_center(
    const RootSystem& rs, int cmin) {
  if (cmin < 0 || cmin > rs.rank()) throw std::invalid_argument("cmin out of range");
  int best = -1;
  std::vector<FlagStratum> witnesses;
  for (const auto& st : enumerate_strata(rs)) {
    if (st.centralizer.center_dim < cmin) continue;
    if (st.centralizer.total_dim > best) {
      best = st.centralizer.total_dim;
      witnesses.clear();
    }
    if (st.centralizer.total_dim == best) witnesses.push_back(st);
  }
  return {best, witnesses};
}

}  // namespace lieq
