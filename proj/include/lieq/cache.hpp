#pragma once

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "lieq/chevalley.hpp"

namespace lieq {

// structure-constant cache: one file per Cartan type, keyed by a hash of the
// realization and a convention version.  A loaded entry is trusted only after
// a fixed Jacobi sample re-passes.
inline constexpr int kCacheVersion = 1;
inline constexpr int kCacheJacobiSamples = 200;
inline constexpr std::uint64_t kCacheJacobiSeed = 2024;

namespace detail {

inline std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace detail

inline std::string realization_hash(const RootSystem& rs) {
  return detail::fnv1a_hex(serialize_root_system(rs));
}

inline std::string cache_path(const std::string& cache_dir, const CartanType& type) {
  return cache_dir + "/" + type.label() + "-v" + std::to_string(kCacheVersion) + ".scache";
}

inline std::string serialize_cache_entry(const CartanType& type, const StructureConstants& sc) {
  std::ostringstream out;
  out << "lieq-scache v" << kCacheVersion << "\n";
  out << "type " << type.label() << "\n";
  out << "realization " << realization_hash(sc.root_system) << "\n";
  out << "pairs " << sc.N.size() << "\n";
  for (const auto& [key, n] : sc.N) out << key.first << " " << key.second << " " << n << "\n";
  out << "end\n";
  return out.str();
}

// returns false on any malformed content; never throws on corruption
inline bool parse_cache_entry(std::istream& in, const CartanType& type, const RootSystem& rs,
                              StructureConstants& out) {
  try {
    std::string line;
    if (!std::getline(in, line) || line != "lieq-scache v" + std::to_string(kCacheVersion))
      return false;
    if (!std::getline(in, line) || line != "type " + type.label()) return false;
    if (!std::getline(in, line) || line != "realization " + realization_hash(rs)) return false;
    if (!std::getline(in, line)) return false;
    std::istringstream hs(line);
    std::string key;
    std::size_t count;
    if (!(hs >> key >> count) || key != "pairs") return false;
    out.root_system = rs;
    out.N.clear();
    for (std::size_t k = 0; k < count; ++k) {
      if (!std::getline(in, line)) return false;
      std::istringstream ls(line);
      int i, j;
      std::string num;
      if (!(ls >> i >> j >> num)) return false;
      int nr = static_cast<int>(rs.all_roots.size());
      if (i < 0 || i >= nr || j < 0 || j >= nr) return false;
      out.N[{i, j}] = Int(num);
    }
    if (!std::getline(in, line) || line != "end") return false;
    return true;
  } catch (...) {
    return false;
  }
}

struct CachedBuild {
  CompactLieAlgebra g;
  JacobiReport jacobi;
  bool from_cache = false;
  bool cache_corrupt = false;  // a stale or damaged entry was replaced
  std::string path;
};

inline void write_cache_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::create_directories(fs::path(path).parent_path());
  std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary);
    out << content;
    if (!out) {
      std::remove(tmp.c_str());
      return;  // cache is best-effort; failure to persist is not an error
    }
  }
  std::rename(tmp.c_str(), path.c_str());
}

// build a root-backed compact form, using the cache directory when nonempty
inline CachedBuild cached_compact_form(const CartanType& type, const std::string& cache_dir) {
  CachedBuild r;
  auto rs = build_root_system(type);
  if (!cache_dir.empty()) {
    r.path = cache_path(cache_dir, type);
    std::ifstream in(r.path, std::ios::binary);
    if (in) {
      StructureConstants sc;
      if (parse_cache_entry(in, type, rs, sc)) {
        CompactLieAlgebra g = compact_form(rs, sc);
        JacobiReport rep = verify_jacobi(g, false, kCacheJacobiSeed, kCacheJacobiSamples);
        if (rep.pass) {
          r.g = std::move(g);
          r.jacobi = rep;
          r.from_cache = true;
          return r;
        }
      }
      r.cache_corrupt = true;
    }
  }
  auto sc = chevalley_constants(rs);
  r.g = compact_form(rs, sc);
  r.jacobi = verify_jacobi(r.g, false, kCacheJacobiSeed, kCacheJacobiSamples);
  if (!cache_dir.empty()) write_cache_atomically(r.path, serialize_cache_entry(type, sc));
  return r;
}

}  // namespace lieq
