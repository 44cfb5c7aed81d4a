#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lieq/pairs.hpp"

namespace lieq {

// text description of a homogeneous pair: ambient algebra, embedding variant
// with payload, optional witness vectors and metadata.  The serializer is the
// format's normal form; parse ∘ serialize is the identity on bytes.
struct PairSpecFile {
  std::string name;
  std::string case_id;                     // replayed case this pair belongs to
  std::optional<CartanType> ambient_type;  // root-backed ambient
  int so_matrix_n = 0;                     // or the matrix backend so(n)
  int dim_h_meta = -1;                     // quoted dim h when the payload is partial
  EmbeddingSpec spec;
  std::vector<Vec> witnesses;
};

namespace detail {

inline std::string vec_str(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += rat_str(v[i]);
  }
  return s;
}

inline Vec parse_vec(std::istringstream& in) {
  Vec v;
  std::string tok;
  while (in >> tok) v.push_back(parse_rat(tok));
  return v;
}

}  // namespace detail

inline std::string serialize_pair_spec(const PairSpecFile& f) {
  std::ostringstream out;
  out << "pair-spec v1\n";
  out << "name " << f.name << "\n";
  if (!f.case_id.empty()) out << "case " << f.case_id << "\n";
  if (f.ambient_type)
    out << "ambient type " << f.ambient_type->label() << "\n";
  else
    out << "ambient so-matrix " << f.so_matrix_n << "\n";
  if (f.dim_h_meta >= 0) out << "dim-h " << f.dim_h_meta << "\n";
  if (const auto* reg = std::get_if<RegularSpec>(&f.spec)) {
    out << "variant regular\n";
    out << "roots";
    for (int i : reg->root_indices) out << ' ' << i;
    out << "\n";
    for (const auto& v : reg->subtorus) out << "torus " << detail::vec_str(v) << "\n";
  } else if (const auto* tr = std::get_if<TorusRestrictedSpec>(&f.spec)) {
    out << "variant torus-restricted\n";
    for (const auto& v : tr->torus_basis) out << "torus " << detail::vec_str(v) << "\n";
  } else if (const auto* ex = std::get_if<ExplicitSpec>(&f.spec)) {
    out << "variant explicit\n";
    for (const auto& v : ex->images) out << "basis " << detail::vec_str(v) << "\n";
  } else {
    const auto& inv = std::get<InvolutionSpec>(f.spec);
    out << "variant involution\n";
    for (std::size_t i = 0; i < inv.sigma.rows(); ++i)
      out << "sigma " << detail::vec_str(inv.sigma.row(static_cast<int>(i))) << "\n";
  }
  for (const auto& w : f.witnesses) out << "witness " << detail::vec_str(w) << "\n";
  out << "end\n";
  return out.str();
}

inline PairSpecFile parse_pair_spec(std::istream& in) {
  PairSpecFile f;
  std::string line;
  if (!std::getline(in, line) || line != "pair-spec v1")
    throw std::invalid_argument("pair-spec: bad header");
  std::string variant;
  RegularSpec reg;
  TorusRestrictedSpec tr;
  ExplicitSpec ex;
  std::vector<Vec> sigma_rows;
  bool done = false;
  while (std::getline(in, line)) {
    if (line == "end") {
      done = true;
      break;
    }
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "name") {
      ls >> std::ws;
      std::getline(ls, f.name);
    } else if (key == "case") {
      ls >> f.case_id;
    } else if (key == "ambient") {
      std::string kind;
      ls >> kind;
      if (kind == "type") {
        std::string t;
        ls >> t;
        auto ct = parse_cartan_type(t);
        if (!ct) throw std::invalid_argument("pair-spec: bad ambient type " + t);
        f.ambient_type = *ct;
      } else if (kind == "so-matrix") {
        ls >> f.so_matrix_n;
      } else {
        throw std::invalid_argument("pair-spec: bad ambient kind " + kind);
      }
    } else if (key == "dim-h") {
      ls >> f.dim_h_meta;
    } else if (key == "variant") {
      ls >> variant;
    } else if (key == "roots") {
      int i;
      while (ls >> i) reg.root_indices.push_back(i);
    } else if (key == "torus") {
      (variant == "regular" ? reg.subtorus : tr.torus_basis).push_back(detail::parse_vec(ls));
    } else if (key == "basis") {
      ex.images.push_back(detail::parse_vec(ls));
    } else if (key == "sigma") {
      sigma_rows.push_back(detail::parse_vec(ls));
    } else if (key == "witness") {
      f.witnesses.push_back(detail::parse_vec(ls));
    } else {
      throw std::invalid_argument("pair-spec: unknown key " + key);
    }
  }
  if (!done) throw std::invalid_argument("pair-spec: missing end");
  if (variant == "regular")
    f.spec = std::move(reg);
  else if (variant == "torus-restricted")
    f.spec = std::move(tr);
  else if (variant == "explicit")
    f.spec = std::move(ex);
  else if (variant == "involution")
    f.spec = InvolutionSpec{Mat::from_rows(sigma_rows)};
  else
    throw std::invalid_argument("pair-spec: unknown variant " + variant);
  return f;
}

inline CompactLieAlgebra build_ambient(const PairSpecFile& f) {
  if (f.ambient_type) return compact_form(build_root_system(*f.ambient_type));
  if (f.so_matrix_n >= 2) return so_matrix_algebra(f.so_matrix_n);
  throw std::invalid_argument("pair-spec: no ambient algebra");
}

inline ReductivePair build_pair(const PairSpecFile& f, const CompactLieAlgebra& g) {
  auto p = reductive_decomposition(g, resolve_embedding(g, f.spec));
  p.name = f.name;
  return p;
}

}  // namespace lieq
