#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bistellar/complex.hpp"
#include "bistellar/moves.hpp"

namespace bistellar {

/// The boundary of the (n+1)-simplex on vertices 0 ... n+1.
inline Complex sphere_boundary(int n) {
  if (n < 0) throw RangeError("sphere dimension must be nonnegative");
  std::vector<VertexId> all;
  for (int v = 0; v <= n + 1; ++v) all.push_back(static_cast<VertexId>(v));
  std::vector<Simplex> facets;
  for_each_face(Simplex::from_sorted(all), n, [&](Simplex s) { facets.push_back(std::move(s)); });
  return Complex::from_facets(n, std::move(facets));
}

/// The single n-simplex on vertices 0 ... n.
inline Complex simplex_complex(int n) {
  if (n < 0) throw RangeError("simplex dimension must be nonnegative");
  std::vector<VertexId> all;
  for (int v = 0; v <= n; ++v) all.push_back(static_cast<VertexId>(v));
  return Complex::from_facets(n, {Simplex::from_sorted(all)});
}

/// S^p * S^q, a (p+q+1)-sphere.
inline Complex sphere_join(int p, int q) {
  if (p < 0 || q < 0) throw RangeError("sphere dimensions must be nonnegative");
  return join(sphere_boundary(p), sphere_boundary(q));
}

/// Cone with apex `apex` over c.
inline Complex cone(const Complex& c, VertexId apex) { return join(c, Complex::from_facets(0, {Simplex{apex}})); }

/// Cycle on vertices 0 ... length-1.
inline Complex cycle(int length) {
  if (length < 3) throw RangeError("a cycle needs at least 3 vertices");
  std::vector<Simplex> edges;
  for (int i = 0; i < length; ++i) {
    edges.push_back(Simplex{static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % length)});
  }
  return Complex::from_facets(1, std::move(edges));
}

/// The 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline Complex torus7() {
  std::vector<Simplex> facets;
  for (VertexId i = 0; i < 7; ++i) {
    facets.push_back(Simplex{i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back(Simplex{i, (i + 2) % 7, (i + 3) % 7});
  }
  return Complex::from_facets(2, std::move(facets));
}

/**
 * Icosahedron labeled so that v and v + 6 are antipodal: 0 is the top,
 * 1 ... 5 the upper ring, 6 the bottom and 7 ... 11 the lower ring.
 */
inline Complex icosahedron() {
  auto upper = [](int k) { return static_cast<VertexId>(1 + ((k % 5) + 5) % 5); };
  // The lower-ring vertex between upper k and k+1 is antipodal to upper k+3.
  auto lower = [&](int k) { return upper(k + 3) + 6; };
  const VertexId top = 0;
  const VertexId bottom = 6;
  std::vector<Simplex> facets;
  for (int k = 0; k < 5; ++k) {
    facets.push_back(Simplex{top, upper(k), upper(k + 1)});
    facets.push_back(Simplex{upper(k), upper(k + 1), lower(k)});
    facets.push_back(Simplex{upper(k + 1), lower(k), lower(k + 1)});
    facets.push_back(Simplex{bottom, lower(k), lower(k + 1)});
  }
  return Complex::from_facets(2, std::move(facets));
}

/// The antipodal vertex map of `icosahedron()`.
inline VertexId antipodal_class(VertexId v) { return v % 6; }

/// The 6-vertex projective plane, the quotient of the icosahedron by the antipodal map.
inline Complex rp2_6() { return icosahedron().relabeled(antipodal_class); }

namespace detail {

inline Complex glue_along_facets(const Complex& x, const Complex& y, bool reverse) {
  const Simplex& fx = x.facets().front();
  const Simplex& fy = y.facets().front();
  const VertexId offset = x.max_vertex().value_or(0) + 1;
  std::vector<VertexId> targets(fx.begin(), fx.end());
  if (reverse) std::swap(targets[targets.size() - 2], targets[targets.size() - 1]);
  auto map = [&](VertexId v) -> VertexId {
    for (std::size_t i = 0; i < fy.size(); ++i) {
      if (fy[i] == v) return targets[i];
    }
    return v + offset;
  };
  std::vector<Simplex> facets(x.facets().begin() + 1, x.facets().end());
  for (auto it = y.facets().begin() + 1; it != y.facets().end(); ++it) facets.push_back(it->mapped(map));
  return Complex::from_facets(x.dimension(), std::move(facets));
}

}  // namespace detail

/**
 * Connected sum of closed manifolds of dimension 1 to 3: the first facet of
 * each is removed and the two boundary spheres are identified by the
 * order-preserving vertex bijection. If that result fails verification, the
 * bijection with its last two vertices swapped is used instead.
 */
inline Complex connected_sum(const Complex& x, const Complex& y) {
  if (x.dimension() != y.dimension()) throw DimensionError("connected sum of complexes of different dimensions");
  if (x.dimension() < 1 || x.dimension() > 3) throw DimensionError("connected sum is supported for dimensions 1 to 3");
  if (is_combinatorial_manifold(x) != Verdict::Verified || is_combinatorial_manifold(y) != Verdict::Verified) {
    throw PreconditionError("connected sum requires verified closed manifolds");
  }
  Complex sum = detail::glue_along_facets(x, y, false);
  if (is_combinatorial_manifold(sum) == Verdict::Verified) return sum;
  sum = detail::glue_along_facets(x, y, true);
  if (is_combinatorial_manifold(sum) != Verdict::Verified) throw Error("connected sum failed manifold verification");
  return sum;
}

namespace detail {

inline int parse_count(const std::string& text, const std::string& spec) {
  const bool digits = std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  if (text.empty() || text.size() > 3 || !digits) {
    throw ParseError("bad number '" + text + "' in generator spec '" + spec + "'");
  }
  return std::stoi(text);
}

}  // namespace detail

/**
 * Builds a complex from a generator spec: `sphere:n`, `simplex:n`, `cycle:n`,
 * `join:p,q`, `torus7`, `rp2_6`, `icosahedron`, or `consum:a,b` where a and b
 * are themselves specs.
 */
inline Complex named_complex(const std::string& spec) {
  auto arg = [&](const std::string& prefix) -> std::optional<std::string> {
    if (spec.rfind(prefix, 0) != 0) return std::nullopt;
    return spec.substr(prefix.size());
  };
  if (spec == "torus7") return torus7();
  if (spec == "rp2_6") return rp2_6();
  if (spec == "icosahedron") return icosahedron();
  if (auto a = arg("sphere:")) return sphere_boundary(detail::parse_count(*a, spec));
  if (auto a = arg("simplex:")) return simplex_complex(detail::parse_count(*a, spec));
  if (auto a = arg("cycle:")) return cycle(detail::parse_count(*a, spec));
  if (auto a = arg("join:")) {
    const auto comma = a->find(',');
    if (comma == std::string::npos) throw ParseError("join spec needs two dimensions: '" + spec + "'");
    return sphere_join(detail::parse_count(a->substr(0, comma), spec),
                       detail::parse_count(a->substr(comma + 1), spec));
  }
  if (auto a = arg("consum:")) {
    // Operands may contain commas themselves; take the first split where both parse.
    for (std::size_t comma = a->find(','); comma != std::string::npos; comma = a->find(',', comma + 1)) {
      Complex left;
      Complex right;
      try {
        left = named_complex(a->substr(0, comma));
        right = named_complex(a->substr(comma + 1));
      } catch (const ParseError&) {
        continue;
      }
      return connected_sum(left, right);
    }
    throw ParseError("connected sum spec needs two generator specs: '" + spec + "'");
  }
  throw ParseError("unknown generator '" + spec + "'");
}

struct ZooEntry {
  std::string name;
  Complex complex;
  std::int64_t expected_chi = 0;
  int dimension = 0;
  Verdict verified = Verdict::Unknown;
};

namespace detail {

inline ZooEntry make_entry(std::string name, Complex c, std::int64_t chi) {
  ZooEntry e;
  e.name = std::move(name);
  e.dimension = c.dimension();
  e.expected_chi = chi;
  e.verified = is_combinatorial_manifold(c);
  e.complex = std::move(c);
  return e;
}

inline std::int64_t sphere_chi(int n) { return n % 2 == 0 ? 2 : 0; }

}  // namespace detail

inline constexpr std::size_t kZooWalkSteps = 50;
inline constexpr std::uint64_t kZooWalkSeeds[] = {1, 2, 3};

/// Facet cap used for the walk variants of a zoo entry.
inline std::size_t zoo_walk_cap(const Complex& c) { return 2 * c.facet_count() + 20; }

/**
 * The test corpus in dimension n (1 to 5): spheres from joins and simplex
 * boundaries, closed surfaces, connected sums, and for each of these three
 * fixed-seed walk variants named "<base>~walk<seed>".
 */
inline std::vector<ZooEntry> zoo(int n) {
  if (n < 1 || n > 5) throw RangeError("zoo dimension must be in [1, 5]");
  std::vector<ZooEntry> base;
  const std::int64_t s = detail::sphere_chi(n);
  base.push_back(detail::make_entry("sphere:" + std::to_string(n), sphere_boundary(n), s));
  for (int p = 0; p <= (n - 1) / 2; ++p) {
    const int q = n - 1 - p;
    base.push_back(detail::make_entry("join:" + std::to_string(p) + "," + std::to_string(q), sphere_join(p, q), s));
  }
  if (n == 1) base.push_back(detail::make_entry("cycle:5", cycle(5), 0));
  if (n == 2) {
    base.push_back(detail::make_entry("icosahedron", icosahedron(), 2));
    base.push_back(detail::make_entry("torus7", torus7(), 0));
    base.push_back(detail::make_entry("rp2_6", rp2_6(), 1));
    base.push_back(detail::make_entry("consum:torus7,torus7", connected_sum(torus7(), torus7()), -2));
    base.push_back(detail::make_entry("consum:rp2_6,rp2_6", connected_sum(rp2_6(), rp2_6()), 0));
    base.push_back(detail::make_entry("consum:torus7,rp2_6", connected_sum(torus7(), rp2_6()), -1));
  }
  if (n == 3) {
    base.push_back(detail::make_entry("consum:sphere:3,join:1,1", connected_sum(sphere_boundary(3), sphere_join(1, 1)), 0));
  }
  std::vector<ZooEntry> out;
  for (const ZooEntry& e : base) {
    out.push_back(e);
    for (std::uint64_t seed : kZooWalkSeeds) {
      WalkTrace t = random_walk(e.complex, kZooWalkSteps, seed, zoo_walk_cap(e.complex));
      out.push_back(detail::make_entry(e.name + "~walk" + std::to_string(seed), std::move(t.final_complex),
                                       e.expected_chi));
    }
  }
  return out;
}

}  // namespace bistellar
