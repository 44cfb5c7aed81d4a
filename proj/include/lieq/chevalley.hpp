#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lieq/rootsys.hpp"

namespace lieq {

// Chevalley constants N_{α,β} over all ordered root pairs with α+β ∈ Δ.
// Signs fixed by height-then-lex ordering of positive roots with
// extraspecial pairs taken positive; |N_{α,β}| = p+1 from the root string.
struct StructureConstants {
  RootSystem root_system;
  std::map<std::pair<int, int>, Int> N;  // keyed by all_roots indices

  Int n(int a, int b) const {
    auto it = N.find({a, b});
    return it == N.end() ? Int(0) : it->second;
  }
};

namespace detail {

class ChevalleyBuilder {
 public:
  explicit ChevalleyBuilder(const RootSystem& rs) : rs_(rs), npos_(rs.positive_roots.size()) {}

  StructureConstants run() {
    StructureConstants sc{rs_, {}};
    int total = static_cast<int>(rs_.all_roots.size());
    for (int a = 0; a < total; ++a)
      for (int b = 0; b < total; ++b) {
        if (a == b || rs_.negate_index(a) == b) continue;
        Vec sum = add(rs_.all_roots[a], rs_.all_roots[b]);
        if (!rs_.is_root(sum)) continue;
        Rat v = nval(a, b);
        Int vi = v.convert_to<Int>();
        if (Rat(vi) != v) throw std::logic_error("non-integer Chevalley constant");
        int p = string_p(b, a);
        if (vi != p + 1 && vi != -(p + 1))
          throw std::logic_error("Chevalley magnitude rule violated");
        sc.N[{a, b}] = vi;
      }
    return sc;
  }

 private:
  const RootSystem& rs_;
  int npos_;
  std::map<std::pair<int, int>, Rat> memo_;

  bool positive(int a) const { return a < npos_; }
  int index_of(const Vec& v) const { return rs_.root_index(v); }

  // p = max{k : β - kα ∈ Δ}
  int string_p(int b, int a) const {
    int p = 0;
    Vec v = rs_.all_roots[b];
    const Vec& alpha = rs_.all_roots[a];
    for (;;) {
      v = sub(v, alpha);
      if (!rs_.is_root(v)) return p;
      ++p;
    }
  }

  // extraspecial pair (a1, b1) for a non-simple positive root γ:
  // minimal a1 in the positive ordering with γ - a1 a positive root.
  std::pair<int, int> extraspecial(int g) const {
    const Vec& gamma = rs_.positive_roots[g];
    for (int a = 0; a < npos_; ++a) {
      Vec rest = sub(gamma, rs_.positive_roots[a]);
      int b = index_of(rest);
      if (b >= 0 && b < npos_) return {a, b};
    }
    throw std::logic_error("no special pair for positive root");
  }

  // N over arbitrary-sign root indices, via sign reductions to positive pairs.
  Rat nval(int a, int b) {
    if (positive(a) && positive(b)) return npos_val(a, b);
    if (!positive(a) && !positive(b))
      return -npos_val(rs_.negate_index(a), rs_.negate_index(b));
    if (!positive(a)) return -nval(b, a);
    // a positive, b negative, s = α+β ∈ Δ
    Vec s = add(rs_.all_roots[a], rs_.all_roots[b]);
    int si = index_of(s);
    Rat s2 = rs_.norm2(s);
    if (positive(si)) {
      // N_{α,β} = (|s|²/|α|²)·N_{β,−s} with both args negative
      Rat a2 = rs_.norm2(rs_.all_roots[a]);
      return -(s2 / a2) * npos_val(rs_.negate_index(b), si);
    }
    Rat b2 = rs_.norm2(rs_.all_roots[b]);
    return (s2 / b2) * npos_val(rs_.negate_index(si), a);
  }

  Rat npos_val(int a, int b) {
    if (a > b) return -npos_val(b, a);
    auto key = std::make_pair(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Vec gamma = add(rs_.positive_roots[a], rs_.positive_roots[b]);
    int g = index_of(gamma);
    if (g < 0 || g >= npos_) throw std::logic_error("npos_val: sum not a positive root");
    Rat result;
    auto [a1, b1] = extraspecial(g);
    if (a1 == a && b1 == b) {
      result = Rat(string_p(b, a) + 1);
    } else {
      // Jacobi for (−α₁, α, β); every N on the right has a lower-height sum.
      int na1 = rs_.negate_index(a1);
      Rat t1(0), t2(0);
      Vec d1 = sub(rs_.positive_roots[a], rs_.positive_roots[a1]);
      if (rs_.is_root(d1)) t1 = nval(na1, a) * nval(index_of(d1), b);
      Vec d2 = sub(rs_.positive_roots[b], rs_.positive_roots[a1]);
      if (rs_.is_root(d2)) t2 = nval(b, na1) * nval(index_of(d2), a);
      Rat denom = nval(g, na1);
      if (denom == 0) throw std::logic_error("vanishing extraspecial divisor");
      result = (-t1 - t2) / denom;
    }
    memo_.emplace(key, result);
    return result;
  }
};

}  // namespace detail

inline StructureConstants chevalley_constants(const RootSystem& rs) {
  return detail::ChevalleyBuilder(rs).run();
}

using AlgebraElement = Vec;

// Compact real form on the basis {i·h_{α_k}} ∪ {u_α = e_α − e_{−α},
// v_α = i(e_α + e_{−α}) : α ∈ Δ⁺}, or the matrix backend so(n) on E_ij − E_ji.
// bi_form is the negative Killing form rescaled to an integer matrix of content 1.
struct CompactLieAlgebra {
  std::optional<RootSystem> roots;
  int so_n = 0;
  int dim = 0;
  int rank = 0;  // Cartan basis size for root-backed algebras, else 0
  std::vector<std::vector<std::pair<int, Rat>>> table;  // [e_i,e_j] for i<j at i*dim+j
  Mat bi_form;
  Rat bi_scale = Rat(1);  // bi_form = bi_scale · (−Killing)

  bool root_backed() const { return roots.has_value(); }
  int u_index(int p) const { return rank + 2 * p; }
  int v_index(int p) const { return rank + 2 * p + 1; }

  const std::vector<std::pair<int, Rat>>& pair_bracket(int i, int j) const {
    return table[static_cast<std::size_t>(i) * dim + j];
  }

  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const {
    if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
      throw std::invalid_argument("bracket: dimension mismatch");
    AlgebraElement out = zero_vec(dim);
    for (int i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < dim; ++j) {
        if (y[j] == 0 || i == j) continue;
        Rat c = x[i] * y[j];
        if (i < j)
          for (const auto& [k, val] : pair_bracket(i, j)) out[k] += c * val;
        else
          for (const auto& [k, val] : pair_bracket(j, i)) out[k] -= c * val;
      }
    }
    return out;
  }

  Rat killing(const AlgebraElement& x, const AlgebraElement& y) const {
    if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
      throw std::invalid_argument("killing: dimension mismatch");
    return dot(x, bi_form.apply(y));
  }

  AlgebraElement basis_element(int i) const {
    AlgebraElement e = zero_vec(dim);
    e[i] = 1;
    return e;
  }

  std::string basis_label(int i) const {
    if (!root_backed()) {
      // so(n) backend: recover (a,b) from the lex position
      int idx = i;
      for (int a = 0; a < so_n; ++a)
        for (int b = a + 1; b < so_n; ++b)
          if (idx-- == 0) return "X" + std::to_string(a + 1) + "," + std::to_string(b + 1);
      return "?";
    }
    if (i < rank) return "h" + std::to_string(i + 1);
    int p = (i - rank) / 2;
    return ((i - rank) % 2 ? "v" : "u") + std::to_string(p);
  }

  // Cartan element t_u with β(t_u) = <β,u> for all roots β; u must lie in the
  // coroot span of the root-space.
  AlgebraElement cartan_element(const Vec& u) const {
    if (!root_backed()) throw std::invalid_argument("cartan_element needs a root-backed algebra");
    const RootSystem& rs = *roots;
    std::vector<Vec> coroots;
    for (int j = 0; j < rank; ++j) {
      const Root& a = rs.simple_roots[j];
      coroots.push_back(scale(Rat(2) / rs.norm2(a), a));
    }
    auto d = solve(Mat::from_rows(coroots).transpose(), u);
    if (!d) throw std::invalid_argument("vector outside the coroot span");
    AlgebraElement x = zero_vec(dim);
    for (int j = 0; j < rank; ++j) x[j] = (*d)[j];
    return x;
  }
};

// column j of ad(x): [x, e_j]
inline Mat ad_matrix(const CompactLieAlgebra& g, const AlgebraElement& x) {
  Mat m(g.dim, g.dim);
  for (int j = 0; j < g.dim; ++j) {
    AlgebraElement col = g.bracket(x, g.basis_element(j));
    for (int i = 0; i < g.dim; ++i) m(i, j) = col[i];
  }
  return m;
}

inline std::vector<Vec> centralizer(const CompactLieAlgebra& g, const AlgebraElement& x) {
  return kernel(ad_matrix(g, x));
}

namespace detail {

// sparse adjoint maps: adj[i][k] = list of (l, c) with [e_i, e_k] = Σ c e_l
using SparseAd = std::vector<std::vector<std::vector<std::pair<int, Rat>>>>;

inline SparseAd sparse_ads(const CompactLieAlgebra& g) {
  SparseAd adj(g.dim, std::vector<std::vector<std::pair<int, Rat>>>(g.dim));
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j)
      for (const auto& [k, c] : g.pair_bracket(i, j)) {
        adj[i][j].push_back({k, c});
        adj[j][i].push_back({k, -c});
      }
  return adj;
}

inline Rat killing_trace(const SparseAd& adj, int i, int j, int dim) {
  Rat acc(0);
  for (int k = 0; k < dim; ++k)
    for (const auto& [m, d] : adj[j][k])
      for (const auto& [l, c] : adj[i][m])
        if (l == k) acc += d * c;
  return acc;
}

// -Killing, rescaled to integer entries of content 1; returns (matrix, scale).
// For root-backed algebras the Killing form pairs only opposite weight spaces,
// so in the compact basis it is diagonal outside the Cartan block; the
// (u_α, v_α) pairings also vanish.
inline std::pair<Mat, Rat> bi_form_of(const CompactLieAlgebra& g) {
  SparseAd adj = sparse_ads(g);
  Mat b(g.dim, g.dim);
  if (g.root_backed()) {
    for (int i = 0; i < g.rank; ++i)
      for (int j = i; j < g.rank; ++j)
        b(i, j) = b(j, i) = -killing_trace(adj, i, j, g.dim);
    for (int i = g.rank; i < g.dim; ++i) b(i, i) = -killing_trace(adj, i, i, g.dim);
  } else {
    for (int i = 0; i < g.dim; ++i)
      for (int j = i; j < g.dim; ++j)
        b(i, j) = b(j, i) = -killing_trace(adj, i, j, g.dim);
  }
  Int content(0);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) {
      const Rat& e = b(i, j);
      if (denominator(e) != 1) throw std::logic_error("non-integer Killing entry");
      content = gcd(content, numerator(e));
    }
  if (content == 0) throw std::logic_error("zero Killing form");
  Rat scale = Rat(1) / Rat(content);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) b(i, j) *= scale;
  return {b, scale};
}

}  // namespace detail

inline CompactLieAlgebra compact_form(const RootSystem& rs, const StructureConstants& sc) {
  CompactLieAlgebra g;
  g.roots = rs;
  g.rank = rs.rank();
  int npos = static_cast<int>(rs.positive_roots.size());
  g.dim = g.rank + 2 * npos;
  g.table.assign(static_cast<std::size_t>(g.dim) * g.dim, {});

  auto set_pair = [&](int i, int j, std::vector<std::pair<int, Rat>> terms) {
    // normalize to i<j
    std::vector<std::pair<int, Rat>> cleaned;
    for (auto& [k, c] : terms)
      if (c != 0) cleaned.push_back({k, c});
    if (i < j)
      g.table[static_cast<std::size_t>(i) * g.dim + j] = std::move(cleaned);
    else {
      for (auto& [k, c] : cleaned) c = -c;
      g.table[static_cast<std::size_t>(j) * g.dim + i] = std::move(cleaned);
    }
  };

  // coroot expansions: α_p^∨ = Σ_j coroot_coeff[p][j] α_j^∨
  std::vector<Vec> simple_coroots;
  for (int j = 0; j < g.rank; ++j) {
    const Root& a = rs.simple_roots[j];
    simple_coroots.push_back(scale(Rat(2) / rs.norm2(a), a));
  }
  Mat coroot_t = Mat::from_rows(simple_coroots).transpose();
  std::vector<Vec> coroot_coeff(npos);
  for (int p = 0; p < npos; ++p) {
    Vec co = scale(Rat(2) / rs.norm2(rs.positive_roots[p]), rs.positive_roots[p]);
    auto d = solve(coroot_t, co);
    if (!d) throw std::logic_error("coroot outside simple coroot span");
    coroot_coeff[p] = *d;
  }

  // pairing α(h_{α_k}) = <α, α_k^∨>
  auto pairing = [&](int p, int k) {
    return Rat(2) * rs.inner(rs.positive_roots[p], rs.simple_roots[k]) /
           rs.norm2(rs.simple_roots[k]);
  };

  for (int k = 0; k < g.rank; ++k)
    for (int p = 0; p < npos; ++p) {
      Rat c = pairing(p, k);
      set_pair(k, g.u_index(p), {{g.v_index(p), c}});
      set_pair(k, g.v_index(p), {{g.u_index(p), -c}});
    }

  // resolve u/v vectors attached to a signed root index
  auto u_of = [&](int ri) -> std::pair<int, Rat> {
    return ri < npos ? std::make_pair(g.u_index(ri), Rat(1))
                     : std::make_pair(g.u_index(ri - npos), Rat(-1));
  };
  auto v_of = [&](int ri) -> std::pair<int, Rat> {
    return ri < npos ? std::make_pair(g.v_index(ri), Rat(1))
                     : std::make_pair(g.v_index(ri - npos), Rat(1));
  };

  for (int p = 0; p < npos; ++p) {
    // [u_p, v_p] = 2 i h_{α_p}
    std::vector<std::pair<int, Rat>> terms;
    for (int j = 0; j < g.rank; ++j) terms.push_back({j, Rat(2) * coroot_coeff[p][j]});
    set_pair(g.u_index(p), g.v_index(p), std::move(terms));

    for (int q = p + 1; q < npos; ++q) {
      Vec sum = add(rs.positive_roots[p], rs.positive_roots[q]);
      Vec diff = sub(rs.positive_roots[p], rs.positive_roots[q]);
      int s = rs.root_index(sum), d = rs.root_index(diff);
      Rat nsum = s >= 0 ? Rat(sc.n(p, q)) : Rat(0);
      Rat ndiff = d >= 0 ? Rat(sc.n(p, rs.negate_index(q))) : Rat(0);

      std::vector<std::pair<int, Rat>> uu, uv, vu, vv;
      if (s >= 0) {
        auto [ui, usign] = u_of(s);
        auto [vi, vsign] = v_of(s);
        uu.push_back({ui, nsum * usign});
        uv.push_back({vi, nsum * vsign});
        vu.push_back({vi, nsum * vsign});
        vv.push_back({ui, -nsum * usign});
      }
      if (d >= 0) {
        auto [ui, usign] = u_of(d);
        auto [vi, vsign] = v_of(d);
        uu.push_back({ui, -ndiff * usign});
        uv.push_back({vi, ndiff * vsign});
        vu.push_back({vi, -ndiff * vsign});
        vv.push_back({ui, -ndiff * usign});
      }
      set_pair(g.u_index(p), g.u_index(q), std::move(uu));
      set_pair(g.u_index(p), g.v_index(q), std::move(uv));
      set_pair(g.v_index(p), g.u_index(q), std::move(vu));
      set_pair(g.v_index(p), g.v_index(q), std::move(vv));
    }
  }

  auto [b, scl] = detail::bi_form_of(g);
  g.bi_form = std::move(b);
  g.bi_scale = scl;
  return g;
}

inline CompactLieAlgebra compact_form(const RootSystem& rs) {
  return compact_form(rs, chevalley_constants(rs));
}

inline CompactLieAlgebra so_matrix_algebra(int n) {
  if (n < 3) throw std::invalid_argument("so_matrix_algebra needs n >= 3");
  CompactLieAlgebra g;
  g.so_n = n;
  g.dim = n * (n - 1) / 2;
  g.rank = 0;
  g.table.assign(static_cast<std::size_t>(g.dim) * g.dim, {});

  std::vector<std::pair<int, int>> idx;  // basis i -> (a,b), a<b
  std::map<std::pair<int, int>, int> rev;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      rev[{a, b}] = static_cast<int>(idx.size());
      idx.push_back({a, b});
    }
  // [X_ab, X_cd] = δ_bc X_ad + δ_ad X_bc − δ_ac X_bd − δ_bd X_ac
  auto term = [&](int a, int b) -> std::pair<int, Rat> {
    if (a == b) return {-1, Rat(0)};
    return a < b ? std::make_pair(rev[{a, b}], Rat(1)) : std::make_pair(rev[{b, a}], Rat(-1));
  };
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j) {
      auto [a, b] = idx[i];
      auto [c, d] = idx[j];
      std::map<int, Rat> acc;
      auto addt = [&](int x, int y, int sgn) {
        auto [k, s] = term(x, y);
        if (k >= 0) acc[k] += sgn * s;
      };
      if (b == c) addt(a, d, 1);
      if (a == d) addt(b, c, 1);
      if (a == c) addt(b, d, -1);
      if (b == d) addt(a, c, -1);
      std::vector<std::pair<int, Rat>> terms;
      for (auto& [k, v] : acc)
        if (v != 0) terms.push_back({k, v});
      g.table[static_cast<std::size_t>(i) * g.dim + j] = std::move(terms);
    }

  auto [bf, scl] = detail::bi_form_of(g);
  g.bi_form = std::move(bf);
  g.bi_scale = scl;
  return g;
}

// so(n) backend helpers
inline Mat so_basis_matrix(const CompactLieAlgebra& g, int i) {
  int n = g.so_n;
  Mat m(n, n);
  int k = i;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (k-- == 0) {
        m(a, b) = 1;
        m(b, a) = -1;
        return m;
      }
  throw std::out_of_range("so basis index");
}

inline Mat so_element_matrix(const CompactLieAlgebra& g, const AlgebraElement& x) {
  int n = g.so_n;
  Mat m(n, n);
  int i = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      m(a, b) = x[i];
      m(b, a) = -x[i];
      ++i;
    }
  return m;
}

inline AlgebraElement so_matrix_to_element(const CompactLieAlgebra& g, const Mat& m) {
  AlgebraElement x = zero_vec(g.dim);
  int i = 0;
  for (int a = 0; a < g.so_n; ++a)
    for (int b = a + 1; b < g.so_n; ++b) x[i++] = m(a, b);
  return x;
}

struct JacobiReport {
  bool exhaustive = false;
  long checked = 0;
  bool pass = true;
};

inline AlgebraElement jacobiator(const CompactLieAlgebra& g, const AlgebraElement& x,
                                 const AlgebraElement& y, const AlgebraElement& z) {
  return add(add(g.bracket(g.bracket(x, y), z), g.bracket(g.bracket(y, z), x)),
             g.bracket(g.bracket(z, x), y));
}

// Exhaustive basis-triple Jacobi check for dim ≤ 52, else seeded sampling.
inline JacobiReport verify_jacobi(const CompactLieAlgebra& g, bool full = false,
                                  std::uint64_t seed = 2024, long samples = 10000) {
  JacobiReport rep;
  rep.exhaustive = full || g.dim <= 52;
  if (rep.exhaustive) {
    for (int i = 0; i < g.dim && rep.pass; ++i)
      for (int j = i + 1; j < g.dim && rep.pass; ++j)
        for (int k = j + 1; k < g.dim; ++k) {
          ++rep.checked;
          if (!is_zero(jacobiator(g, g.basis_element(i), g.basis_element(j),
                                  g.basis_element(k)))) {
            rep.pass = false;
            break;
          }
        }
  } else {
    SplitMix rng(seed);
    for (long t = 0; t < samples; ++t) {
      int i = static_cast<int>(rng.range(0, g.dim - 1));
      int j = static_cast<int>(rng.range(0, g.dim - 1));
      int k = static_cast<int>(rng.range(0, g.dim - 1));
      ++rep.checked;
      if (!is_zero(jacobiator(g, g.basis_element(i), g.basis_element(j),
                              g.basis_element(k)))) {
        rep.pass = false;
        break;
      }
    }
  }
  return rep;
}

// Pairwise bi-orthogonal minimal ideals; a nonzero center comes first as an
// abelian summand.
inline std::vector<std::vector<Vec>> simple_ideals(const CompactLieAlgebra& g) {
  std::vector<std::vector<Vec>> out;

  if (g.root_backed()) {
    // ideals are the root-system components; basis vectors split accordingly
    const RootSystem& rs = *g.roots;
    // component of each simple root: walk rank offsets per component
    std::vector<int> simple_comp(rs.rank());
    int off = 0, ci = 0;
    for (const auto& t : rs.components) {
      for (int j = 0; j < t.rank; ++j) simple_comp[off + j] = ci;
      off += t.rank;
      ++ci;
    }
    int ncomp = static_cast<int>(rs.components.size());
    std::vector<std::vector<Vec>> ideals(ncomp);
    for (int j = 0; j < rs.rank(); ++j)
      ideals[simple_comp[j]].push_back(g.basis_element(j));
    for (std::size_t p = 0; p < rs.positive_roots.size(); ++p) {
      int comp = -1;
      for (int j = 0; j < rs.rank(); ++j)
        if (rs.simple_coords[p][j] != 0) { comp = simple_comp[j]; break; }
      ideals[comp].push_back(g.basis_element(g.u_index(static_cast<int>(p))));
      ideals[comp].push_back(g.basis_element(g.v_index(static_cast<int>(p))));
    }
    return ideals;
  }

  if (g.so_n != 0 && g.so_n != 4) {
    // so(n) is simple for n = 3 and n ≥ 5: a single ideal, the whole algebra
    std::vector<Vec> whole;
    for (int i = 0; i < g.dim; ++i) whole.push_back(g.basis_element(i));
    return {whole};
  }

  // matrix/so(4) route: commutant of the adjoint representation
  if (g.so_n != 4 && g.dim > 60)
    throw std::invalid_argument("simple_ideals: dimension too large for commutant search");
  int n = g.dim;
  std::vector<Mat> ads;
  for (int i = 0; i < n; ++i) ads.push_back(ad_matrix(g, g.basis_element(i)));
  // unknowns T (n×n, row-major); constraints T·A − A·T = 0
  Mat sys(0, n * n);
  for (const auto& a : ads) {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        Vec row = zero_vec(n * n);
        for (int k = 0; k < n; ++k) {
          if (a(k, c) != 0) row[r * n + k] += a(k, c);   // (T A)_{rc}
          if (a(r, k) != 0) row[k * n + c] -= a(r, k);   // (A T)_{rc}
        }
        if (!is_zero(row)) sys.append_row(row);
      }
  }
  auto comm = kernel(sys);
  if (comm.size() == 1) return {[&] {
    std::vector<Vec> whole;
    for (int i = 0; i < n; ++i) whole.push_back(g.basis_element(i));
    return whole;
  }()};
  // generic commutant element; its eigenspaces are sums of ideals
  Vec tvec = zero_vec(n * n);
  for (std::size_t i = 0; i < comm.size(); ++i) axpy(Rat(static_cast<int>(i) + 1), comm[i], tvec);
  Mat t(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) t(r, c) = tvec[r * n + c];
  // rational eigenvalues via kernel probes on candidate roots of the char poly:
  // the eigenvalues are rational; scan divisor-bounded candidates cheaply by
  // solving det-free: collect eigenspaces until the dimensions fill up.
  std::vector<std::vector<Vec>> spaces;
  int found = 0;
  // candidate eigenvalues: entries of T are rational; eigenvalues lie among
  // the roots of the minimal polynomial — probe small rationals first, then
  // fall back to the characteristic-matrix pivot values.
  std::vector<Rat> candidates;
  for (int a = -12; a <= 12; ++a) candidates.push_back(Rat(a));
  for (const auto& lam : candidates) {
    if (found >= n) break;
    Mat shifted = t;
    for (int i = 0; i < n; ++i) shifted(i, i) -= lam;
    auto ker = kernel(shifted);
    if (!ker.empty()) {
      spaces.push_back(ker);
      found += static_cast<int>(ker.size());
    }
  }
  if (found != n) throw std::logic_error("simple_ideals: eigen decomposition incomplete");
  return spaces;
}

}  // namespace lieq
