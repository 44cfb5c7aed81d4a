#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lieq/linalg.hpp"

namespace lieq {

struct CartanType {
  char series;  // 'A'..'G'
  int rank;

  bool operator==(const CartanType& o) const { return series == o.series && rank == o.rank; }
  bool operator<(const CartanType& o) const {
    return series != o.series ? series < o.series : rank < o.rank;
  }
  std::string label() const { return std::string(1, series) + std::to_string(rank); }
};

inline void validate_cartan_type(const CartanType& t) {
  auto fail = [&] { throw std::invalid_argument("invalid Cartan type " + t.label()); };
  switch (t.series) {
    case 'A': if (t.rank < 1) fail(); break;
    case 'B': case 'C': if (t.rank < 2) fail(); break;
    case 'D': if (t.rank < 3) fail(); break;
    case 'E': if (t.rank < 6 || t.rank > 8) fail(); break;
    case 'F': if (t.rank != 4) fail(); break;
    case 'G': if (t.rank != 2) fail(); break;
    default: fail();
  }
}

inline int type_dim(const CartanType& t) {
  int n = t.rank;
  switch (t.series) {
    case 'A': return n * (n + 2);
    case 'B': case 'C': return n * (2 * n + 1);
    case 'D': return n * (2 * n - 1);
    case 'G': return 14;
    case 'F': return 52;
    case 'E': return n == 6 ? 78 : (n == 7 ? 133 : 248);
  }
  return 0;
}

inline int type_root_count(const CartanType& t) { return type_dim(t) - t.rank; }

inline std::optional<CartanType> parse_cartan_type(const std::string& s) {
  if (s.size() < 2) return std::nullopt;
  CartanType t{s[0], 0};
  try {
    t.rank = std::stoi(s.substr(1));
  } catch (...) {
    return std::nullopt;
  }
  try {
    validate_cartan_type(t);
  } catch (...) {
    return std::nullopt;
  }
  return t;
}

struct QuadraticSpace {
  int dim = 0;
  Mat gram;  // symmetric positive definite

  Rat inner(const Vec& a, const Vec& b) const {
    Rat s(0);
    for (int i = 0; i < dim; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < dim; ++j)
        if (gram(i, j) != 0 && b[j] != 0) s += a[i] * gram(i, j) * b[j];
    }
    return s;
  }

  static QuadraticSpace euclidean(int n) {
    return QuadraticSpace{n, Mat::identity(n)};
  }
};

// Leading-principal-minor test.
inline bool is_positive_definite(const Mat& g) {
  if (g.rows() != g.cols()) return false;
  std::size_t n = g.rows();
  Mat a = g;
  // fraction-free-ish Gaussian elimination tracking pivot signs
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

using Root = Vec;

struct RootSystem {
  std::vector<CartanType> components;  // one entry for irreducible systems
  QuadraticSpace space;
  std::vector<Root> simple_roots;
  std::vector<Root> positive_roots;  // ordered by (height, lex)
  std::vector<Root> all_roots;       // positives then matching negatives
  std::vector<Vec> simple_coords;    // expansion of each positive root over simple_roots

  int rank() const { return static_cast<int>(simple_roots.size()); }

  std::string type_label() const {
    std::string s;
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (i) s += '+';
      s += components[i].label();
    }
    return s;
  }

  // index into all_roots, or -1
  int root_index(const Root& r) const {
    auto it = index_.find(r);
    return it == index_.end() ? -1 : it->second;
  }
  bool is_root(const Root& r) const { return index_.count(r) > 0; }

  int negate_index(int i) const {
    int np = static_cast<int>(positive_roots.size());
    return i < np ? i + np : i - np;
  }

  Rat inner(const Vec& a, const Vec& b) const { return space.inner(a, b); }
  Rat norm2(const Vec& a) const { return space.inner(a, a); }

  Vec reflect(const Root& alpha, const Vec& v) const {
    Rat c = Rat(2) * inner(v, alpha) / norm2(alpha);
    return sub(v, scale(c, alpha));
  }

  void build_index() {
    index_.clear();
    for (std::size_t i = 0; i < all_roots.size(); ++i)
      index_[all_roots[i]] = static_cast<int>(i);
  }

 private:
  std::map<Root, int> index_;
};

namespace detail {

inline Vec ev(int dim, int i, Rat c = Rat(1)) {
  Vec v = zero_vec(dim);
  v[i] = c;
  return v;
}

struct Realization {
  QuadraticSpace space;
  std::vector<Root> simple_roots;
};

inline Realization default_realization(const CartanType& t) {
  validate_cartan_type(t);
  int n = t.rank;
  Realization r;
  auto chain = [&](int dim) {
    r.space = QuadraticSpace::euclidean(dim);
    for (int i = 0; i + 1 < n; ++i) {
      Vec v = zero_vec(dim);
      v[i] = 1;
      v[i + 1] = -1;
      r.simple_roots.push_back(v);
    }
  };
  switch (t.series) {
    case 'A':
      chain(n + 1);
      {
        Vec v = zero_vec(n + 1);
        v[n - 1] = 1;
        v[n] = -1;
        r.simple_roots.push_back(v);
      }
      break;
    case 'B':
      chain(n);
      r.simple_roots.push_back(ev(n, n - 1));
      break;
    case 'C':
      chain(n);
      // rank 2 uses the short-root presentation {±e_i, ±e1±e2} (sp(2) ≅ so(5))
      r.simple_roots.push_back(n == 2 ? ev(n, n - 1) : ev(n, n - 1, Rat(2)));
      break;
    case 'D':
      chain(n);
      {
        Vec v = zero_vec(n);
        v[n - 2] = 1;
        v[n - 1] = 1;
        r.simple_roots.push_back(v);
      }
      break;
    case 'G': {
      r.space = QuadraticSpace::euclidean(3);
      Vec a1 = zero_vec(3), a2 = zero_vec(3);
      a1[0] = 1; a1[1] = -1;
      a2[0] = -2; a2[1] = 1; a2[2] = 1;
      r.simple_roots = {a1, a2};
      break;
    }
    case 'F': {
      r.space = QuadraticSpace::euclidean(4);
      Vec a1 = zero_vec(4), a2 = zero_vec(4), a3 = zero_vec(4), a4 = zero_vec(4);
      a1[1] = 1; a1[2] = -1;
      a2[2] = 1; a2[3] = -1;
      a3[3] = 1;
      a4[0] = Rat(1, 2); a4[1] = Rat(-1, 2); a4[2] = Rat(-1, 2); a4[3] = Rat(-1, 2);
      r.simple_roots = {a1, a2, a3, a4};
      break;
    }
    case 'E': {
      if (n == 7) {
        // E7 carried rationally: f7 stands for sqrt(2)*e7, with <f7,f7> = 2.
        r.space = QuadraticSpace::euclidean(7);
        r.space.gram(6, 6) = 2;
        for (int i = 0; i + 1 < 6; ++i) {
          Vec v = zero_vec(7);
          v[i] = 1;
          v[i + 1] = -1;
          r.simple_roots.push_back(v);
        }
        Vec a6 = zero_vec(7);
        a6[4] = 1; a6[5] = 1;
        r.simple_roots.push_back(a6);
        Vec a7(7, Rat(-1, 2));
        r.simple_roots.push_back(a7);
      } else {
        // Bourbaki E6/E8 in R^8
        r.space = QuadraticSpace::euclidean(8);
        Vec a1 = zero_vec(8);
        for (int i = 0; i < 8; ++i) a1[i] = (i == 0 || i == 7) ? Rat(1, 2) : Rat(-1, 2);
        Vec a2 = zero_vec(8);
        a2[0] = 1; a2[1] = 1;
        r.simple_roots = {a1, a2};
        for (int i = 3; i <= n; ++i) {
          Vec v = zero_vec(8);
          v[i - 3] = -1;
          v[i - 2] = 1;
          r.simple_roots.push_back(v);
        }
      }
      break;
    }
  }
  return r;
}

}  // namespace detail

inline Mat cartan_matrix(const QuadraticSpace& space, const std::vector<Root>& simple) {
  Mat c(simple.size(), simple.size());
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t j = 0; j < simple.size(); ++j)
      c(i, j) = Rat(2) * space.inner(simple[i], simple[j]) / space.inner(simple[j], simple[j]);
  return c;
}

// Reflection closure from the simple roots; fills positives, ordering and coords.
inline RootSystem build_root_system(const CartanType& type,
                                    std::optional<detail::Realization> realization = {}) {
  validate_cartan_type(type);
  detail::Realization real = realization ? *realization : detail::default_realization(type);
  if (static_cast<int>(real.simple_roots.size()) != type.rank)
    throw std::invalid_argument("realization rank mismatch for " + type.label());
  if (!is_positive_definite(real.space.gram))
    throw std::invalid_argument("gram matrix not positive definite");
  if (realization) {
    Mat expected = cartan_matrix(detail::default_realization(type).space,
                                 detail::default_realization(type).simple_roots);
    Mat got = cartan_matrix(real.space, real.simple_roots);
    if (!(expected == got))
      throw std::invalid_argument("supplied simple roots have wrong Cartan matrix for " +
                                  type.label());
  }

  RootSystem rs;
  rs.components = {type};
  rs.space = real.space;
  rs.simple_roots = real.simple_roots;

  std::map<Root, int> seen;
  std::vector<Root> work = real.simple_roots;
  for (auto& r : work) seen.emplace(r, 0);
  while (!work.empty()) {
    Root r = work.back();
    work.pop_back();
    for (const auto& s : rs.simple_roots) {
      Rat c = Rat(2) * rs.space.inner(r, s) / rs.space.inner(s, s);
      Root refl = sub(r, scale(c, s));
      if (seen.emplace(refl, 0).second) work.push_back(refl);
    }
  }

  // expansion over simple roots; positive iff all coefficients >= 0
  Mat basis_t = Mat::from_rows(rs.simple_roots).transpose();
  std::vector<std::pair<std::pair<Rat, Vec>, std::pair<Root, Vec>>> pos;  // (height, lex-coords) key
  for (const auto& [root, _] : seen) {
    auto coeffs = solve(basis_t, root);
    if (!coeffs) throw std::logic_error("root outside simple-root span");
    bool nonneg = true, nonpos = true;
    Rat height(0);
    for (const auto& c : *coeffs) {
      if (c < 0) nonneg = false;
      if (c > 0) nonpos = false;
      height += c;
    }
    if (!nonneg && !nonpos) throw std::logic_error("root neither positive nor negative");
    if (nonneg && !is_zero(root))
      pos.push_back({{height, root}, {root, *coeffs}});
  }
  std::sort(pos.begin(), pos.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [key, rv] : pos) {
    rs.positive_roots.push_back(rv.first);
    rs.simple_coords.push_back(rv.second);
  }
  rs.all_roots = rs.positive_roots;
  for (const auto& r : rs.positive_roots) rs.all_roots.push_back(scale(Rat(-1), r));
  rs.build_index();
  if (static_cast<int>(rs.all_roots.size()) != type_root_count(type))
    throw std::logic_error("root count mismatch for " + type.label());
  return rs;
}

inline RootSystem build_root_system(const CartanType& type, const QuadraticSpace& space,
                                    const std::vector<Root>& simple) {
  return build_root_system(type, detail::Realization{space, simple});
}

// Block-diagonal sum; component lists concatenate.
inline RootSystem direct_sum(const RootSystem& a, const RootSystem& b) {
  RootSystem rs;
  rs.components = a.components;
  rs.components.insert(rs.components.end(), b.components.begin(), b.components.end());
  int da = a.space.dim, db = b.space.dim;
  rs.space.dim = da + db;
  rs.space.gram = Mat(da + db, da + db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) rs.space.gram(i, j) = a.space.gram(i, j);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j) rs.space.gram(da + i, da + j) = b.space.gram(i, j);
  auto embed = [&](const Vec& v, bool first) {
    Vec w = zero_vec(da + db);
    for (std::size_t i = 0; i < v.size(); ++i) w[(first ? 0 : da) + i] = v[i];
    return w;
  };
  for (const auto& r : a.simple_roots) rs.simple_roots.push_back(embed(r, true));
  for (const auto& r : b.simple_roots) rs.simple_roots.push_back(embed(r, false));
  for (std::size_t i = 0; i < a.positive_roots.size(); ++i) {
    rs.positive_roots.push_back(embed(a.positive_roots[i], true));
    Vec c = a.simple_coords[i];
    c.resize(a.rank() + b.rank(), Rat(0));
    rs.simple_coords.push_back(c);
  }
  for (std::size_t i = 0; i < b.positive_roots.size(); ++i) {
    rs.positive_roots.push_back(embed(b.positive_roots[i], false));
    Vec c = zero_vec(a.rank() + b.rank());
    for (int j = 0; j < b.rank(); ++j) c[a.rank() + j] = b.simple_coords[i][j];
    rs.simple_coords.push_back(c);
  }
  rs.all_roots = rs.positive_roots;
  for (const auto& r : rs.positive_roots) rs.all_roots.push_back(scale(Rat(-1), r));
  rs.build_index();
  return rs;
}

// Simple-reflection descent to the dominant chamber.
inline std::pair<Vec, std::vector<int>> dominant_representative(const RootSystem& rs,
                                                                const Vec& u) {
  Vec v = u;
  std::vector<int> word;
  for (;;) {
    bool moved = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (rs.inner(rs.simple_roots[i], v) < 0) {
        v = rs.reflect(rs.simple_roots[i], v);
        word.push_back(i);
        moved = true;
        break;
      }
    }
    if (!moved) return {v, word};
  }
}

inline std::vector<Root> orthogonal_subsystem(const RootSystem& rs, const Vec& u) {
  std::vector<Root> out;
  for (const auto& r : rs.all_roots)
    if (rs.inner(r, u) == 0) out.push_back(r);
  return out;
}

// Classification of a closed subsystem into irreducible Cartan types.
// Rank-2 B/C and D3 collapse to the canonical labels C2 and A3.
inline std::vector<CartanType> classify_subsystem(const QuadraticSpace& space,
                                                  const std::vector<Root>& roots) {
  if (roots.empty()) return {};
  std::map<Root, int> set;
  for (const auto& r : roots) set.emplace(r, 0);
  for (const auto& r : roots)
    if (!set.count(scale(Rat(-1), r)))
      throw std::invalid_argument("subsystem not closed under negation");
  for (const auto& a : roots)
    for (const auto& b : roots) {
      Rat c = Rat(2) * space.inner(b, a) / space.inner(a, a);
      if (!set.count(sub(b, scale(c, a))))
        throw std::invalid_argument("subsystem not closed under reflection");
    }

  // lexicographic positivity, then indecomposable positives as a simple system
  std::vector<Root> pos;
  for (const auto& r : roots) {
    for (const auto& x : r) {
      if (x > 0) { pos.push_back(r); break; }
      if (x < 0) break;
    }
  }
  std::vector<Root> simple;
  for (const auto& r : pos) {
    bool decomposable = false;
    for (const auto& a : pos) {
      if (decomposable) break;
      for (const auto& b : pos)
        if (add(a, b) == r) { decomposable = true; break; }
    }
    if (!decomposable) simple.push_back(r);
  }

  // connected components of the Dynkin graph
  int n = static_cast<int>(simple.size());
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < n; ++b)
        if (comp[b] < 0 && space.inner(simple[a], simple[b]) != 0) {
          comp[b] = ncomp;
          stack.push_back(b);
        }
    }
    ++ncomp;
  }

  std::vector<CartanType> result;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) nodes.push_back(i);
    int r = static_cast<int>(nodes.size());
    if (r == 1) { result.push_back({'A', 1}); continue; }

    // edge weights a_ij * a_ji in {1,2,3}
    auto weight = [&](int a, int b) -> int {
      Rat aij = Rat(2) * space.inner(simple[a], simple[b]) / space.inner(simple[b], simple[b]);
      Rat aji = Rat(2) * space.inner(simple[b], simple[a]) / space.inner(simple[a], simple[a]);
      Rat w = aij * aji;
      return static_cast<int>(w.convert_to<Int>());
    };
    std::vector<std::vector<int>> adj(r);
    int max_w = 0;
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b)
        if (space.inner(simple[nodes[a]], simple[nodes[b]]) != 0) {
          adj[a].push_back(b);
          adj[b].push_back(a);
          max_w = std::max(max_w, weight(nodes[a], nodes[b]));
        }

    if (max_w == 3) {
      if (r != 2) throw std::logic_error("G2 edge in higher-rank component");
      result.push_back({'G', 2});
      continue;
    }
    std::vector<int> branch, leaves;
    for (int a = 0; a < r; ++a) {
      if (adj[a].size() >= 3) branch.push_back(a);
      if (adj[a].size() == 1) leaves.push_back(a);
    }
    if (max_w == 1) {
      if (branch.empty()) { result.push_back({'A', r}); continue; }
      if (branch.size() != 1 || adj[branch[0]].size() != 3)
        throw std::logic_error("unrecognized simply-laced diagram");
      // arm lengths from the branch node
      std::vector<int> arms;
      for (int s : adj[branch[0]]) {
        int len = 1, prev = branch[0], cur = s;
        while (adj[cur].size() == 2) {
          int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
          prev = cur;
          cur = nxt;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1) result.push_back({'D', r});
      else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        result.push_back({'E', r});
      else throw std::logic_error("unrecognized branched diagram");
      continue;
    }
    // one double edge
    if (r == 2) { result.push_back({'C', 2}); continue; }
    int da = -1, db = -1;
    for (int a = 0; a < r && da < 0; ++a)
      for (int b : adj[a])
        if (b > a && weight(nodes[a], nodes[b]) == 2) { da = a; db = b; break; }
    if (da < 0) throw std::logic_error("missing double edge");
    if (adj[da].size() == 2 && adj[db].size() == 2 && r == 4 && branch.empty()) {
      result.push_back({'F', 4});
      continue;
    }
    // chain with the double edge at one end: short end node -> B, long -> C
    int end = adj[da].size() == 1 ? da : db;
    int other = end == da ? db : da;
    if (adj[end].size() != 1) throw std::logic_error("unrecognized doubly-laced diagram");
    bool end_short = space.inner(simple[nodes[end]], simple[nodes[end]]) <
                     space.inner(simple[nodes[other]], simple[nodes[other]]);
    result.push_back({end_short ? 'B' : 'C', r});
  }
  std::sort(result.begin(), result.end());
  return result;
}

inline std::vector<CartanType> classify_subsystem(const RootSystem& rs,
                                                  const std::vector<Root>& roots) {
  return classify_subsystem(rs.space, roots);
}

// ---- text serialization: "type rank dim", gram rows, simple roots, all roots ----

inline std::string serialize_root_system(const RootSystem& rs) {
  std::ostringstream os;
  os << rs.type_label() << ' ' << rs.rank() << ' ' << rs.space.dim << '\n';
  for (int i = 0; i < rs.space.dim; ++i) {
    for (int j = 0; j < rs.space.dim; ++j) os << (j ? " " : "") << rs.space.gram(i, j);
    os << '\n';
  }
  auto emit = [&](const Vec& v) {
    for (std::size_t j = 0; j < v.size(); ++j) os << (j ? " " : "") << v[j];
    os << '\n';
  };
  for (const auto& r : rs.simple_roots) emit(r);
  for (const auto& r : rs.all_roots) emit(r);
  return os.str();
}

inline Vec parse_vec_line(const std::string& line, int dim) {
  std::istringstream is(line);
  Vec v;
  std::string tok;
  while (is >> tok) v.push_back(parse_rat(tok));
  if (static_cast<int>(v.size()) != dim)
    throw std::runtime_error("expected " + std::to_string(dim) + " entries");
  return v;
}

inline RootSystem parse_root_system(std::istream& in) {
  std::string label;
  int rank, dim;
  if (!(in >> label >> rank >> dim)) throw std::runtime_error("bad root system header");
  std::string rest;
  std::getline(in, rest);
  std::vector<CartanType> comps;
  std::istringstream ls(label);
  std::string part;
  while (std::getline(ls, part, '+')) {
    auto t = parse_cartan_type(part);
    if (!t) throw std::runtime_error("bad type label " + part);
    comps.push_back(*t);
  }
  QuadraticSpace space;
  space.dim = dim;
  space.gram = Mat(dim, dim);
  std::string line;
  for (int i = 0; i < dim; ++i) {
    if (!std::getline(in, line)) throw std::runtime_error("truncated gram matrix");
    Vec row = parse_vec_line(line, dim);
    for (int j = 0; j < dim; ++j) space.gram(i, j) = row[j];
  }
  std::vector<Root> simple;
  for (int i = 0; i < rank; ++i) {
    if (!std::getline(in, line)) throw std::runtime_error("truncated simple roots");
    simple.push_back(parse_vec_line(line, dim));
  }
  std::vector<Root> listed;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    listed.push_back(parse_vec_line(line, dim));
  }
  // rebuild by closure and verify against the listed roots
  RootSystem rs;
  if (comps.size() == 1) {
    rs = build_root_system(comps[0], space, simple);
  } else {
    // componentwise closure inside the shared space
    rs.components = comps;
    rs.space = space;
    rs.simple_roots = simple;
    std::map<Root, int> seen;
    std::vector<Root> work = simple;
    for (auto& r : work) seen.emplace(r, 0);
    while (!work.empty()) {
      Root r = work.back();
      work.pop_back();
      for (const auto& s : simple) {
        Rat c = Rat(2) * space.inner(r, s) / space.inner(s, s);
        Root refl = sub(r, scale(c, s));
        if (seen.emplace(refl, 0).second) work.push_back(refl);
      }
    }
    Mat basis_t = Mat::from_rows(simple).transpose();
    std::vector<std::pair<std::pair<Rat, Vec>, std::pair<Root, Vec>>> pos;
    for (const auto& [root, _] : seen) {
      auto coeffs = solve(basis_t, root);
      if (!coeffs) throw std::runtime_error("root outside simple span");
      bool nonneg = true;
      Rat height(0);
      for (const auto& c : *coeffs) {
        if (c < 0) { nonneg = false; break; }
        height += c;
      }
      if (nonneg && !is_zero(root)) pos.push_back({{height, root}, {root, *coeffs}});
    }
    std::sort(pos.begin(), pos.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [key, rv] : pos) {
      rs.positive_roots.push_back(rv.first);
      rs.simple_coords.push_back(rv.second);
    }
    rs.all_roots = rs.positive_roots;
    for (const auto& r : rs.positive_roots) rs.all_roots.push_back(scale(Rat(-1), r));
    rs.build_index();
  }
  if (!listed.empty()) {
    if (listed.size() != rs.all_roots.size())
      throw std::runtime_error("listed root count disagrees with closure");
    for (const auto& r : listed)
      if (!rs.is_root(r)) throw std::runtime_error("listed root not generated by closure");
  }
  return rs;
}

}  // namespace lieq
