#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieq/pairs.hpp"

namespace lieq {

// block-scalar metric operator attached to an isotypic split
struct MetricOperator {
  std::vector<Rat> block_scalars;
  Mat lambda;  // on g, acting as c_i on the i-th summand and 0 on h
};

inline MetricOperator metric_operator(const ReductivePair& p, const IsotypicSplit& split,
                                      const std::vector<Rat>& scalars) {
  if (scalars.size() != split.summands.size())
    throw std::invalid_argument("one scalar per summand required");
  for (const Rat& c : scalars)
    if (c <= 0) throw std::invalid_argument("metric scalars must be positive");
  MetricOperator op;
  op.block_scalars = scalars;
  // Λ = Σ c_i P_i with P_i the bi-orthogonal projector onto the i-th summand
  op.lambda = Mat(p.g.dim, p.g.dim);
  for (std::size_t s = 0; s < split.summands.size(); ++s) {
    Mat smat = Mat::from_rows(split.summands[s]);
    Mat sb = smat.mul(p.g.bi_form);
    Mat proj = smat.transpose().mul(detail::inv(sb.mul(smat.transpose()))).mul(sb);
    for (int i = 0; i < p.g.dim; ++i)
      for (int j = 0; j < p.g.dim; ++j) op.lambda(i, j) += scalars[s] * proj(i, j);
  }
  return op;
}

inline MetricOperator identity_metric(const ReductivePair& p) {
  MetricOperator op;
  op.block_scalars = {Rat(1)};
  op.lambda = p.projector_m;
  return op;
}

enum class Outcome { Holds, FailsWithWitness, HoldsProbabilistically, Indeterminate };

inline std::string outcome_str(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::FailsWithWitness: return "fails-with-witness";
    case Outcome::HoldsProbabilistically: return "holds-probabilistically";
    default: return "indeterminate";
  }
}

struct Verdict {
  Outcome outcome = Outcome::Indeterminate;
  std::optional<AlgebraElement> witness;
  int trials = 0;
  std::uint64_t seed = 0;
};

// ⟨Λ u_m, [w,u]_m⟩ = 0 for every w in the m-basis
inline bool riemannian_geodesic_vector(const ReductivePair& p, const MetricOperator& op,
                                       const AlgebraElement& u) {
  p.require_full();
  AlgebraElement um = p.pr_m(u);
  if (is_zero(um)) throw std::invalid_argument("u has no m-component");
  AlgebraElement lu = op.lambda.apply(um);
  for (const auto& w : p.m_basis)
    if (p.g.killing(lu, p.pr_m(p.g.bracket(w, u))) != 0) return false;
  return true;
}

inline Verdict riemannian_equigeodesic_vector(const ReductivePair& p, const IsotypicSplit& split,
                                              const AlgebraElement& u) {
  p.require_full();
  Verdict v;
  if (split.commutant_dim != static_cast<int>(split.summands.size())) {
    // isotypic multiplicity: metric operators can mix copies, no block reduction
    v.outcome = Outcome::Indeterminate;
    return v;
  }
  // pairwise non-isomorphic summands: Λ is block scalar, condition is
  // [pr_i(u), u]_m = 0 for every i
  for (const auto& s : split.summands) {
    Mat smat = Mat::from_rows(s);
    Mat sb = smat.mul(p.g.bi_form);
    Mat proj = smat.transpose().mul(detail::inv(sb.mul(smat.transpose()))).mul(sb);
    AlgebraElement ui = proj.apply(u);
    AlgebraElement br = p.pr_m(p.g.bracket(ui, u));
    if (!is_zero(br)) {
      v.outcome = Outcome::FailsWithWitness;
      v.witness = ui;
      return v;
    }
  }
  v.outcome = Outcome::Holds;
  return v;
}

struct SliceData {
  AlgebraElement u;
  std::vector<Vec> hu;      // [h, u]
  std::vector<Vec> v_u;     // bi-orthogonal complement of [h,u] in m
  std::vector<Vec> v_u0;    // ad(c_h(u))-fixed part of V_u
  std::vector<Vec> v_u1;    // bi-orthogonal complement of V_u0 in V_u
};

inline SliceData slice_data(const ReductivePair& p, const AlgebraElement& u) {
  p.require_full();
  SliceData s;
  s.u = u;
  std::vector<Vec> hu_raw;
  for (const auto& x : p.h_basis) hu_raw.push_back(p.g.bracket(x, u));
  s.hu = reduced_basis(hu_raw);

  // V_u: vectors of m bi-orthogonal to [h,u]
  Mat cond(0, p.g.dim);
  for (const auto& x : s.hu) cond.append_row(p.g.bi_form.apply(x));
  std::vector<Vec> vu_all = cond.rows() == 0 ? std::vector<Vec>{} : kernel(cond);
  s.v_u = cond.rows() == 0 ? p.m_basis : subspace_intersection(vu_all, p.m_basis);

  // c_h(u): kernel of x ↦ [x,u] on h
  Mat cmap(0, static_cast<int>(p.h_basis.size()));
  {
    std::vector<Vec> cols;
    for (const auto& x : p.h_basis) cols.push_back(p.g.bracket(x, u));
    Mat m = Mat::from_rows(cols).transpose();  // g.dim × dim_h
    cmap = m;
  }
  std::vector<Vec> chu_coords = kernel(cmap);
  std::vector<AlgebraElement> chu;
  for (const auto& c : chu_coords) {
    AlgebraElement x = zero_vec(p.g.dim);
    for (std::size_t i = 0; i < p.h_basis.size(); ++i) axpy(c[i], p.h_basis[i], x);
    chu.push_back(x);
  }

  // V_u0: joint kernel of ad(c_h(u)) on V_u
  if (s.v_u.empty()) return s;
  Mat joint(0, static_cast<int>(s.v_u.size()));
  for (const auto& x : chu) {
    Mat a(p.g.dim, static_cast<int>(s.v_u.size()));
    for (std::size_t j = 0; j < s.v_u.size(); ++j) {
      Vec br = p.g.bracket(x, s.v_u[j]);
      for (int i = 0; i < p.g.dim; ++i) a(i, static_cast<int>(j)) = br[i];
    }
    for (int i = 0; i < p.g.dim; ++i)
      if (!is_zero(a.row(i))) joint.append_row(a.row(i));
  }
  std::vector<Vec> fixed_coords = joint.rows() == 0 ? std::vector<Vec>{} : kernel(joint);
  if (joint.rows() == 0) {
    s.v_u0 = s.v_u;
  } else {
    for (const auto& c : fixed_coords) {
      AlgebraElement v = zero_vec(p.g.dim);
      for (std::size_t i = 0; i < s.v_u.size(); ++i) axpy(c[i], s.v_u[i], v);
      s.v_u0.push_back(v);
    }
  }
  // V_u1: bi-orthogonal complement of V_u0 within V_u
  if (s.v_u0.empty()) {
    s.v_u1 = s.v_u;
  } else {
    Mat oc(0, p.g.dim);
    for (const auto& x : s.v_u0) oc.append_row(p.g.bi_form.apply(x));
    s.v_u1 = subspace_intersection(kernel(oc), s.v_u);
  }
  return s;
}

// sufficient certificate for the slice criterion [u,m]_m ⊆ [u,h] + V_{u,1};
// the ad(c_h(u)) surrogate for V_{u,1} only shrinks the right-hand side, so
// `holds` is sound and a miss stays indeterminate
inline Verdict finsler_equigeodesic_vector(const ReductivePair& p, const AlgebraElement& u) {
  p.require_full();
  if (is_zero(u)) throw std::invalid_argument("u must be nonzero");
  Verdict v;
  SliceData s = slice_data(p, u);
  std::vector<Vec> rhs = s.hu;
  for (const auto& x : s.v_u1) rhs.push_back(x);
  detail::SpanChecker span(reduced_basis(rhs));
  for (const auto& w : p.m_basis)
    if (!span.contains(p.pr_m(p.g.bracket(u, w)))) {
      v.outcome = Outcome::Indeterminate;
      return v;
    }
  v.outcome = Outcome::Holds;
  return v;
}

namespace detail {

inline AlgebraElement random_m_vector(const ReductivePair& p, SplitMix& rng) {
  Vec c(p.dim_m);
  for (int i = 0; i < p.dim_m; ++i) {
    std::int64_t x = rng.range(-13, 12);
    if (x >= 0) ++x;  // coordinates in {−13..13} \ {0}
    c[i] = Rat(x);
  }
  return p.from_m_coords(c);
}

inline bool space_inclusion_at(const ReductivePair& p, const AlgebraElement& u) {
  // [m,u]_m ⊆ [h,u], by rank comparison of stacked matrices
  Mat stack(0, p.g.dim);
  for (const auto& x : p.h_basis) stack.append_row(p.g.bracket(x, u));
  int r1 = rank(stack);
  for (const auto& w : p.m_basis) stack.append_row(p.pr_m(p.g.bracket(w, u)));
  return rank(stack) == r1;
}

}  // namespace detail

inline Verdict finsler_space_check(const ReductivePair& p, int trials = 8,
                                   std::uint64_t seed = 2024) {
  p.require_full();
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  Verdict v;
  v.trials = trials;
  v.seed = seed;
  bool saw_unconfirmed_failure = false;
  for (int t = 0; t < trials; ++t) {
    SplitMix rng(mix64(seed ^ mix64(static_cast<std::uint64_t>(t) + 1)));
    AlgebraElement u = detail::random_m_vector(p, rng);
    if (is_zero(u)) continue;
    if (detail::space_inclusion_at(p, u)) continue;
    // confirm off a measure-zero accident: perturb three times
    int confirmed = 0;
    for (int k = 0; k < 3; ++k) {
      AlgebraElement delta = detail::random_m_vector(p, rng);
      AlgebraElement pert = u;
      axpy(Rat(1, 7), delta, pert);
      if (!detail::space_inclusion_at(p, pert)) ++confirmed;
    }
    if (confirmed == 3) {
      v.outcome = Outcome::FailsWithWitness;
      v.witness = u;
      return v;
    }
    saw_unconfirmed_failure = true;
  }
  v.outcome = saw_unconfirmed_failure ? Outcome::Indeterminate : Outcome::HoldsProbabilistically;
  return v;
}

struct Lemma5Report {
  int dim_g = 0, dim_h = 0, dim_m = 0, rank_g = 0;
  bool ineq3 = false;  // 2 dim h + rk g > dim m
  struct WitnessCheck {
    AlgebraElement u;
    int dim_centralizer = 0;
    int bound = 0;  // dim g − 2 dim h
    bool ineq1 = false;
  };
  std::vector<WitnessCheck> witnesses;
};

inline Lemma5Report lemma5_numeric(int dim_g, int dim_h, int rank_g) {
  Lemma5Report r;
  r.dim_g = dim_g;
  r.dim_h = dim_h;
  r.dim_m = dim_g - dim_h;
  r.rank_g = rank_g;
  r.ineq3 = 2 * dim_h + rank_g > r.dim_m;
  return r;
}

inline Lemma5Report lemma5_numeric(const ReductivePair& p,
                                   const std::vector<AlgebraElement>& witness_vectors = {}) {
  int rank_g = p.g.root_backed() ? p.g.roots->rank() : p.g.so_n / 2;
  Lemma5Report r = lemma5_numeric(p.g.dim, p.dim_h, rank_g);
  for (const auto& u : witness_vectors) {
    Lemma5Report::WitnessCheck w;
    w.u = u;
    w.dim_centralizer = static_cast<int>(centralizer(p.g, u).size());
    w.bound = p.g.dim - 2 * p.dim_h;
    w.ineq1 = w.dim_centralizer >= w.bound;
    r.witnesses.push_back(std::move(w));
  }
  return r;
}

enum class FactorLabel { Symmetric, Spin7G2, G2Su3, Other };

inline std::string factor_label_str(FactorLabel l) {
  switch (l) {
    case FactorLabel::Symmetric: return "symmetric";
    case FactorLabel::Spin7G2: return "spin7-g2";
    case FactorLabel::G2Su3: return "g2-su3";
    default: return "other";
  }
}

struct FinslerClassification {
  bool decomposed = false;
  bool finsler_equigeodesic = false;
  std::vector<FactorLabel> labels;
  Verdict space_check;  // cross-check on the whole pair
  int witness_ideal = -1;
};

inline FinslerClassification classify_finsler(const ReductivePair& p, int trials = 8,
                                              std::uint64_t seed = 2024) {
  p.require_full();
  FinslerClassification out;
  LocalDecomposition dec = local_decompose(p);
  out.decomposed = dec.ok;
  if (!dec.ok) {
    out.finsler_equigeodesic = false;
    out.witness_ideal = dec.witness_ideal;
    out.space_check = finsler_space_check(p, trials, seed);
    return out;
  }
  bool all_good = true;
  for (const auto& f : dec.factors) {
    FactorLabel label = FactorLabel::Other;
    if (f.dim_g() == 21 && f.dim_h() == 14 && f.type.series == 'B' && f.type.rank == 3)
      label = FactorLabel::Spin7G2;
    else if (f.dim_g() == 14 && f.dim_h() == 8 && f.type.series == 'G')
      label = FactorLabel::G2Su3;
    else if (factor_symmetric(p.g, f))
      label = FactorLabel::Symmetric;
    if (label == FactorLabel::Other) all_good = false;
    out.labels.push_back(label);
  }
  out.finsler_equigeodesic = all_good;
  out.space_check = finsler_space_check(p, trials, seed);
  // classification and the sampled space check must not contradict each other
  if (all_good && out.space_check.outcome == Outcome::FailsWithWitness)
    throw std::logic_error("classification contradicts the sampled space check");
  return out;
}

}  // namespace lieq
