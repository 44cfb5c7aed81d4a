#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lieq/chevalley.hpp"

namespace lieq {

// h ⊂ g given in one of four ways.  Torus vectors are written in the
// root-space coordinates of g (they name elements of t via cartan_element).
struct RegularSpec {
  std::vector<int> root_indices;  // indices into all_roots, closed under ± and sums
  std::vector<Vec> subtorus;      // root-space coordinates
};
struct TorusRestrictedSpec {
  std::vector<Vec> torus_basis;  // basis of t∩h, root-space coordinates
};
struct ExplicitSpec {
  std::vector<AlgebraElement> images;
};
struct InvolutionSpec {
  Mat sigma;
};
using EmbeddingSpec = std::variant<RegularSpec, TorusRestrictedSpec, ExplicitSpec, InvolutionSpec>;

struct ResolvedSubalgebra {
  std::vector<AlgebraElement> basis;
  bool torus_only = false;
  std::vector<Vec> torus_h;  // root-space coordinates, torus-restricted specs only
};

namespace detail {

inline Mat inv(const Mat& m) {
  auto r = inverse(m);
  if (!r) throw std::logic_error("singular Gram matrix");
  return *r;
}

// span membership against a fixed echelonized basis
class SpanChecker {
 public:
  explicit SpanChecker(const std::vector<Vec>& basis) {
    if (basis.empty()) return;
    mat_ = Mat::from_rows(basis);
    pivots_ = rref(mat_);
  }
  bool contains(const Vec& v) const {
    if (pivots_.empty()) return is_zero(v);
    Vec r = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      std::size_t p = pivots_[i];
      if (r[p] != 0) axpy(-r[p], mat_.row(static_cast<int>(i)), r);
    }
    return is_zero(r);
  }

 private:
  Mat mat_;
  std::vector<std::size_t> pivots_;
};

inline void verify_subalgebra(const CompactLieAlgebra& g, const std::vector<AlgebraElement>& basis) {
  if (static_cast<int>(reduced_basis(basis).size()) != static_cast<int>(basis.size()))
    throw std::invalid_argument("subalgebra basis is linearly dependent");
  SpanChecker span(basis);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!span.contains(g.bracket(basis[i], basis[j])))
        throw std::invalid_argument("basis not closed under bracket");
}

}  // namespace detail

inline ResolvedSubalgebra resolve_embedding(const CompactLieAlgebra& g, const EmbeddingSpec& spec) {
  ResolvedSubalgebra out;

  if (auto* reg = std::get_if<RegularSpec>(&spec)) {
    if (!g.root_backed()) throw std::invalid_argument("regular embedding needs a root-backed algebra");
    const RootSystem& rs = *g.roots;
    std::vector<bool> in_set(rs.all_roots.size(), false);
    for (int i : reg->root_indices) {
      if (i < 0 || i >= static_cast<int>(rs.all_roots.size()))
        throw std::invalid_argument("root index out of range");
      in_set[i] = true;
    }
    for (int i : reg->root_indices) {
      if (!in_set[rs.negate_index(i)])
        throw std::invalid_argument("regular root set not closed under negation");
      for (int j : reg->root_indices) {
        Vec s = add(rs.all_roots[i], rs.all_roots[j]);
        int k = rs.root_index(s);
        if (k >= 0 && !in_set[k]) throw std::invalid_argument("regular root set not closed under sums");
      }
    }
    // the coroot of every chosen root must lie in the subtorus span
    std::vector<Vec> tspan = reg->subtorus;
    detail::SpanChecker torus_span(tspan);
    int npos = static_cast<int>(rs.positive_roots.size());
    for (int i : reg->root_indices) {
      Vec coroot = scale(Rat(2) / rs.norm2(rs.all_roots[i]), rs.all_roots[i]);
      if (!torus_span.contains(coroot))
        throw std::invalid_argument("subtorus does not contain a chosen coroot");
    }
    for (const Vec& t : tspan) out.basis.push_back(g.cartan_element(t));
    for (int i : reg->root_indices)
      if (i < npos) {
        out.basis.push_back(g.basis_element(g.u_index(i)));
        out.basis.push_back(g.basis_element(g.v_index(i)));
      }
    out.basis = reduced_basis(out.basis);
    detail::verify_subalgebra(g, out.basis);
    return out;
  }

  if (auto* tr = std::get_if<TorusRestrictedSpec>(&spec)) {
    out.torus_only = true;
    out.torus_h = reduced_basis(tr->torus_basis);
    for (const Vec& t : out.torus_h) out.basis.push_back(g.cartan_element(t));
    return out;
  }

  if (auto* ex = std::get_if<ExplicitSpec>(&spec)) {
    out.basis = ex->images;
    detail::verify_subalgebra(g, out.basis);
    return out;
  }

  const auto& inv = std::get<InvolutionSpec>(spec);
  const Mat& s = inv.sigma;
  if (s.rows() != g.dim || s.cols() != g.dim) throw std::invalid_argument("involution size mismatch");
  Mat sq = s.mul(s);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      if (sq(i, j) != (i == j ? Rat(1) : Rat(0)))
        throw std::invalid_argument("matrix is not an involution");
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j) {
      Vec lhs = s.apply(g.bracket(g.basis_element(i), g.basis_element(j)));
      Vec rhs = g.bracket(s.apply(g.basis_element(i)), s.apply(g.basis_element(j)));
      if (lhs != rhs) throw std::invalid_argument("matrix is not a bracket automorphism");
    }
  Mat shifted = s;
  for (int i = 0; i < g.dim; ++i) shifted(i, i) -= 1;
  out.basis = kernel(shifted);
  detail::verify_subalgebra(g, out.basis);
  return out;
}

struct ReductivePair {
  CompactLieAlgebra g;
  std::vector<AlgebraElement> h_basis;
  std::vector<AlgebraElement> m_basis;
  int dim_h = 0, dim_m = 0;
  Mat projector_h, projector_m;
  bool torus_only = false;
  std::vector<Vec> torus_h;  // root-space coordinates when torus_only
  std::string name;

  AlgebraElement pr_m(const AlgebraElement& x) const { return projector_m.apply(x); }
  AlgebraElement pr_h(const AlgebraElement& x) const { return projector_h.apply(x); }

  // m-basis coordinates of an element of m
  Vec m_coords(const AlgebraElement& x) const {
    auto c = solve(Mat::from_rows(m_basis).transpose(), x);
    if (!c) throw std::invalid_argument("element not in m");
    return *c;
  }
  AlgebraElement from_m_coords(const Vec& c) const {
    AlgebraElement x = zero_vec(g.dim);
    for (int i = 0; i < dim_m; ++i) axpy(c[i], m_basis[i], x);
    return x;
  }
  void require_full() const {
    if (torus_only)
      throw std::invalid_argument("pair is torus-restricted; only torus-level operations apply");
  }
};

inline ReductivePair reductive_decomposition(const CompactLieAlgebra& g,
                                             const ResolvedSubalgebra& h) {
  ReductivePair p;
  p.g = g;
  p.h_basis = h.basis;
  p.torus_only = h.torus_only;
  p.torus_h = h.torus_h;
  p.dim_h = static_cast<int>(h.basis.size());

  // m = bi-orthogonal complement of h
  Mat cond(0, g.dim);
  for (const auto& x : p.h_basis) cond.append_row(g.bi_form.apply(x));
  p.m_basis = p.h_basis.empty() ? [&] {
    std::vector<Vec> full;
    for (int i = 0; i < g.dim; ++i) full.push_back(g.basis_element(i));
    return full;
  }() : kernel(cond);
  p.dim_m = static_cast<int>(p.m_basis.size());
  if (p.dim_h + p.dim_m != g.dim) throw std::logic_error("decomposition dimensions off");

  // bi-orthogonal projector onto h: H^T (H B H^T)^{-1} H B
  if (p.dim_h == 0) {
    p.projector_h = Mat(g.dim, g.dim);
  } else {
    Mat hmat = Mat::from_rows(p.h_basis);
    Mat hb = hmat.mul(g.bi_form);
    Mat gram = hb.mul(hmat.transpose());
    p.projector_h = hmat.transpose().mul(detail::inv(gram)).mul(hb);
  }
  p.projector_m = Mat::identity(g.dim);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) p.projector_m(i, j) -= p.projector_h(i, j);

  if (!p.torus_only) {
    // reductivity: [h, m] ⊆ m (forced by ad-invariance of the form; checked anyway)
    for (const auto& x : p.h_basis)
      for (const auto& y : p.m_basis)
        if (!is_zero(p.pr_h(g.bracket(x, y)))) throw std::logic_error("[h,m] escapes m");
  }
  return p;
}

inline bool symmetric_pair_test(const ReductivePair& p) {
  p.require_full();
  for (std::size_t i = 0; i < p.m_basis.size(); ++i)
    for (std::size_t j = i + 1; j < p.m_basis.size(); ++j)
      if (!is_zero(p.pr_m(p.g.bracket(p.m_basis[i], p.m_basis[j])))) return false;
  return true;
}

enum class SplitVerdict { Irreducible, ReducibleWithWitness, Indeterminate };

struct IsotypicSplit {
  std::vector<std::vector<AlgebraElement>> summands;  // g-coordinates
  int commutant_dim = 0;
  SplitVerdict verdict = SplitVerdict::Indeterminate;
  std::vector<AlgebraElement> witness;  // a proper invariant subspace, when reducible
};

namespace detail {

// rational roots of the monic minimal polynomial of a rational square matrix
inline std::vector<Rat> rational_min_poly_roots(const Mat& c) {
  int n = c.rows();
  // Krylov-free: find the first linear dependence among vectorized powers of c
  std::vector<Vec> powers;
  Mat pw = Mat::identity(n);
  Mat dep(0, n * n);
  std::vector<Rat> coeffs;
  for (int d = 0;; ++d) {
    Vec flat = zero_vec(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) flat[i * n + j] = pw(i, j);
    auto sol = solve(dep.transpose(), flat);
    if (sol) {
      coeffs = *sol;  // c^d = Σ coeffs_k c^k, so min poly = x^d − Σ coeffs_k x^k
      break;
    }
    dep.append_row(flat);
    pw = pw.mul(c);
  }
  int d = static_cast<int>(coeffs.size());
  // integer polynomial a_d x^d + ... + a_0 with a_d > 0
  Int lcm_den(1);
  for (const Rat& q : coeffs) lcm_den = lcm(lcm_den, denominator(q));
  std::vector<Int> a(d + 1);
  a[d] = lcm_den;
  for (int k = 0; k < d; ++k) a[k] = (-coeffs[k] * Rat(lcm_den)).convert_to<Int>();
  auto eval_zero = [&](const Rat& x) {
    Rat acc(0), p(1);
    for (int k = 0; k <= d; ++k) {
      acc += Rat(a[k]) * p;
      p *= x;
    }
    return acc == 0;
  };
  std::vector<Rat> roots;
  if (eval_zero(Rat(0))) roots.push_back(Rat(0));
  Int a0 = a[0];
  while (a0 == 0) {  // factor out x
    a.erase(a.begin());
    --d;
    a0 = a[0];
  }
  auto divisors = [](Int v) {
    if (v < 0) v = -v;
    std::vector<Int> ds;
    for (Int i = 1; i * i <= v && i < 100000; ++i)
      if (v % i == 0) {
        ds.push_back(i);
        ds.push_back(v / i);
      }
    return ds;
  };
  for (const Int& p : divisors(a0))
    for (const Int& q : divisors(a[d])) {
      Rat cand(p, q);
      if (eval_zero(cand)) roots.push_back(cand);
      if (eval_zero(-cand)) roots.push_back(-cand);
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace detail

inline IsotypicSplit isotypic_split(const ReductivePair& p) {
  p.require_full();
  IsotypicSplit out;
  if (p.dim_m == 0) {
    out.commutant_dim = 0;
    out.verdict = SplitVerdict::Irreducible;
    return out;
  }
  const CompactLieAlgebra& g = p.g;
  int n = p.dim_m;

  // ad(h_a)|_m in m-coordinates
  Mat mt = Mat::from_rows(p.m_basis).transpose();
  std::vector<Mat> ads;
  for (const auto& x : p.h_basis) {
    Mat a(n, n);
    for (int j = 0; j < n; ++j) {
      auto col = solve(mt, g.bracket(x, p.m_basis[j]));
      if (!col) throw std::logic_error("[h,m] escapes m");
      for (int i = 0; i < n; ++i) a(i, j) = (*col)[i];
    }
    ads.push_back(std::move(a));
  }

  // commutant of ad(h)|_m
  Mat sys(0, n * n);
  for (const auto& a : ads)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        Vec row = zero_vec(n * n);
        for (int k = 0; k < n; ++k) {
          if (a(k, c) != 0) row[r * n + k] += a(k, c);
          if (a(r, k) != 0) row[k * n + c] -= a(r, k);
        }
        if (!is_zero(row)) sys.append_row(row);
      }
  auto comm = p.dim_h == 0 ? std::vector<Vec>{} : kernel(sys);
  out.commutant_dim = p.dim_h == 0 ? n * n : static_cast<int>(comm.size());

  // h-Casimir on m from the inverse Gram of bi|_h
  std::vector<std::vector<AlgebraElement>> summands_m;
  if (p.dim_h > 0) {
    Mat hmat = Mat::from_rows(p.h_basis);
    Mat gram = hmat.mul(g.bi_form).mul(hmat.transpose());
    Mat ginv = detail::inv(gram);
    Mat cas(n, n);
    for (int a = 0; a < p.dim_h; ++a)
      for (int b = 0; b < p.dim_h; ++b) {
        if (ginv(a, b) == 0) continue;
        Mat prod = ads[a].mul(ads[b]);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) cas(i, j) += ginv(a, b) * prod(i, j);
      }
    int covered = 0;
    for (const Rat& lam : detail::rational_min_poly_roots(cas)) {
      Mat shifted = cas;
      for (int i = 0; i < n; ++i) shifted(i, i) -= lam;
      auto ker = kernel(shifted);
      if (!ker.empty()) {
        summands_m.push_back(ker);
        covered += static_cast<int>(ker.size());
      }
    }
    if (covered < n) {
      // residual invariant block with irrational Casimir spectrum: the kernel
      // of Π(cas − λ) over the rational eigenvalues found so far
      Mat prod = Mat::identity(n);
      for (const Rat& lam : detail::rational_min_poly_roots(cas)) {
        Mat shifted = cas;
        for (int i = 0; i < n; ++i) shifted(i, i) -= lam;
        prod = prod.mul(shifted);
      }
      std::vector<Vec> residual;
      // solve prod·x spanning: residual = column space of prod
      auto cols = reduced_basis([&] {
        std::vector<Vec> cs;
        Mat pt = prod.transpose();
        for (int i = 0; i < n; ++i)
          if (!is_zero(pt.row(i))) cs.push_back(pt.row(i));
        return cs;
      }());
      summands_m.push_back(cols);
    }
  } else {
    summands_m.push_back({});
    for (int i = 0; i < n; ++i) {
      Vec e = zero_vec(n);
      e[i] = 1;
      summands_m.back().push_back(e);
    }
  }

  for (const auto& s : summands_m) {
    out.summands.push_back({});
    for (const auto& v : s) out.summands.back().push_back(p.from_m_coords(v));
  }

  // invariance of each summand, and bi-orthogonality across summands
  {
    for (std::size_t si = 0; si < out.summands.size(); ++si) {
      detail::SpanChecker span(out.summands[si]);
      for (const auto& x : p.h_basis)
        for (const auto& v : out.summands[si])
          if (!span.contains(g.bracket(x, v))) throw std::logic_error("summand not invariant");
      for (std::size_t sj = si + 1; sj < out.summands.size(); ++sj)
        for (const auto& v : out.summands[si])
          for (const auto& w : out.summands[sj])
            if (g.killing(v, w) != 0) throw std::logic_error("summands not bi-orthogonal");
    }
  }

  if (out.commutant_dim == 1) {
    out.verdict = SplitVerdict::Irreducible;
  } else if (out.summands.size() > 1) {
    out.verdict = SplitVerdict::ReducibleWithWitness;
    out.witness = out.summands.front();
  } else if (!comm.empty()) {
    // single Casimir block: try a commutant element's rational spectral projector
    Mat t(n, n);
    for (std::size_t i = 0; i < comm.size(); ++i)
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) t(r, c) += Rat(static_cast<int>(i) + 1) * comm[i][r * n + c];
    for (const Rat& lam : detail::rational_min_poly_roots(t)) {
      Mat shifted = t;
      for (int i = 0; i < n; ++i) shifted(i, i) -= lam;
      auto ker = kernel(shifted);
      if (!ker.empty() && static_cast<int>(ker.size()) < n) {
        out.verdict = SplitVerdict::ReducibleWithWitness;
        for (const auto& v : ker) out.witness.push_back(p.from_m_coords(v));
        break;
      }
    }
  }
  return out;
}

// factor of a local product decomposition, in ambient coordinates
struct PairFactor {
  std::vector<AlgebraElement> g_basis, h_basis, m_basis;
  CartanType type{'?', 0};   // component type when known
  bool abelian = false;      // center summand of a non-semisimple ambient
  int dim_g() const { return static_cast<int>(g_basis.size()); }
  int dim_h() const { return static_cast<int>(h_basis.size()); }
  int dim_m() const { return static_cast<int>(m_basis.size()); }
};

struct LocalDecomposition {
  bool ok = false;
  std::vector<PairFactor> factors;
  int witness_ideal = -1;  // ideal where pr(h) ≠ h ∩ g_i
};

inline LocalDecomposition local_decompose(const ReductivePair& p) {
  p.require_full();
  LocalDecomposition out;
  auto ideals = simple_ideals(p.g);
  std::vector<std::vector<Vec>> h_parts;
  int total_h = 0;
  for (const auto& gi : ideals) {
    auto hi = subspace_intersection(p.h_basis, gi);
    total_h += static_cast<int>(hi.size());
    h_parts.push_back(std::move(hi));
  }
  if (total_h != p.dim_h) {
    // offending ideal: the complement of g_i meets h in fewer dimensions than
    // dim h − dim(h ∩ g_i), i.e. pr_{g_i}(h) is strictly larger than h ∩ g_i
    out.ok = false;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      // bi-orthogonal projection of h onto g_i, compared with h ∩ g_i
      Mat imat = Mat::from_rows(ideals[i]);
      Mat ib = imat.mul(p.g.bi_form);
      Mat proj = imat.transpose().mul(detail::inv(ib.mul(imat.transpose()))).mul(ib);
      std::vector<Vec> projected;
      for (const auto& x : p.h_basis) projected.push_back(proj.apply(x));
      if (static_cast<int>(reduced_basis(projected).size()) >
          static_cast<int>(h_parts[i].size())) {
        out.witness_ideal = static_cast<int>(i);
        break;
      }
    }
    if (out.witness_ideal < 0) out.witness_ideal = 0;
    return out;
  }
  out.ok = true;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    PairFactor f;
    f.g_basis = ideals[i];
    f.h_basis = h_parts[i];
    f.m_basis = subspace_intersection(p.m_basis, ideals[i]);
    if (f.dim_h() + f.dim_m() != f.dim_g()) throw std::logic_error("factor dims off");
    if (p.g.root_backed())
      f.type = p.g.roots->components[i];
    else if (p.g.so_n > 0 && ideals.size() == 1)
      f.type = p.g.so_n % 2 ? CartanType{'B', p.g.so_n / 2} : CartanType{'D', p.g.so_n / 2};
    out.factors.push_back(std::move(f));
  }
  return out;
}

// The stabilizer algebra of the standard associative 3-form on R^7, inside the
// so(7) matrix backend.  Convention: ω = +1 on the oriented Fano lines
// (1,2,3), (1,4,5), (1,7,6), (2,4,6), (2,5,7), (3,4,7), (3,6,5), antisymmetric
// otherwise.  The 14-dim solution space is computed by solving ω∘(ad x) = 0,
// not hardcoded.
inline std::vector<AlgebraElement> g2_basis_in_so7(const CompactLieAlgebra& so7) {
  if (so7.so_n != 7) throw std::invalid_argument("expected the so(7) matrix backend");
  int triples[7][3] = {{0, 1, 2}, {0, 3, 4}, {0, 6, 5}, {1, 3, 5},
                       {1, 4, 6}, {2, 3, 6}, {2, 5, 4}};
  // ω as a fully antisymmetric array
  Rat omega[7][7][7] = {};
  for (auto& t : triples) {
    int a = t[0], b = t[1], c = t[2];
    omega[a][b][c] = omega[b][c][a] = omega[c][a][b] = 1;
    omega[a][c][b] = omega[c][b][a] = omega[b][a][c] = -1;
  }
  Mat sys(0, so7.dim);
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c) {
        Vec row = zero_vec(so7.dim);
        for (int i = 0; i < so7.dim; ++i) {
          Mat x = so_basis_matrix(so7, i);
          Rat acc(0);
          for (int k = 0; k < 7; ++k) {
            acc += x(k, a) * omega[k][b][c];
            acc += x(k, b) * omega[a][k][c];
            acc += x(k, c) * omega[a][b][k];
          }
          row[i] = acc;
        }
        if (!is_zero(row)) sys.append_row(row);
      }
  return kernel(sys);
}

// symmetric test for a factor, run inside the ambient algebra
inline bool factor_symmetric(const CompactLieAlgebra& g, const PairFactor& f) {
  detail::SpanChecker hspan(f.h_basis);
  for (std::size_t i = 0; i < f.m_basis.size(); ++i)
    for (std::size_t j = i + 1; j < f.m_basis.size(); ++j)
      if (!hspan.contains(g.bracket(f.m_basis[i], f.m_basis[j]))) return false;
  return true;
}

}  // namespace lieq
