#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bistellar/errors.hpp"
#include "bistellar/fvector.hpp"
#include "bistellar/simplex.hpp"

namespace bistellar {

using FaceSet = std::unordered_set<Simplex, SimplexHash>;

/**
 * A simplicial complex stored by its maximal faces (facets).
 *
 * Complexes built with `from_facets` are pure: every facet has exactly
 * `dimension() + 1` vertices. `from_faces` accepts arbitrary face lists and
 * keeps the maximal ones, which is how unions and intersections of
 * subcomplexes are represented. The facet list is always sorted, so two
 * complexes with the same face set compare equal.
 *
 * A complex with no facets is "void" (it has no faces at all, not even the
 * empty one); the complex whose only facet is the empty simplex is the unit
 * for joins.
 */
class Complex {
 public:
  Complex() = default;

  static Complex from_facets(int dimension, std::vector<Simplex> facets) {
    if (dimension < -1) throw RangeError("complex dimension must be at least -1");
    for (const Simplex& f : facets) {
      if (f.dimension() != dimension) {
        throw DimensionError("facet " + f.to_string() + " has dimension " + std::to_string(f.dimension()) +
                             ", expected " + std::to_string(dimension));
      }
    }
    Complex c;
    c.dimension_ = dimension;
    c.facets_ = std::move(facets);
    std::sort(c.facets_.begin(), c.facets_.end());
    c.facets_.erase(std::unique(c.facets_.begin(), c.facets_.end()), c.facets_.end());
    return c;
  }

  /// The complex generated by `faces`; only maximal faces are kept.
  static Complex from_faces(std::vector<Simplex> faces) {
    std::sort(faces.begin(), faces.end(), [](const Simplex& a, const Simplex& b) {
      return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    Complex c;
    c.dimension_ = faces.empty() ? -1 : faces.front().dimension();
    for (Simplex& f : faces) {
      const bool covered = std::any_of(c.facets_.begin(), c.facets_.end(), [&](const Simplex& kept) {
        return kept.size() > f.size() && f.is_face_of(kept);
      });
      if (!covered) c.facets_.push_back(std::move(f));
    }
    std::sort(c.facets_.begin(), c.facets_.end());
    return c;
  }

  /// {∅}: the (-1)-dimensional complex whose only face is the empty simplex.
  static Complex empty_simplex() { return from_facets(-1, {Simplex{}}); }

  /// A complex of the given nominal dimension with no faces.
  static Complex void_complex(int dimension) { return from_facets(dimension, {}); }

  int dimension() const { return dimension_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }
  bool is_void() const { return facets_.empty(); }

  bool is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return f.dimension() == dimension_; });
  }

  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    for (const Simplex& f : facets_) out.insert(out.end(), f.begin(), f.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::optional<VertexId> max_vertex() const {
    std::optional<VertexId> m;
    for (const Simplex& f : facets_) {
      if (!f.empty() && (!m || f.vertices().back() > *m)) m = f.vertices().back();
    }
    return m;
  }

  bool has_face(const Simplex& s) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return s.is_face_of(f); });
  }

  bool has_facet(const Simplex& s) const { return std::binary_search(facets_.begin(), facets_.end(), s); }

  /// Applies an injective vertex map to every facet.
  template <typename Map>
  Complex relabeled(Map&& map) const {
    std::vector<Simplex> out;
    out.reserve(facets_.size());
    for (const Simplex& f : facets_) out.push_back(f.mapped(map));
    if (is_pure()) return from_facets(dimension_, std::move(out));
    return from_faces(std::move(out));
  }

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  int dimension_ = -1;
  std::vector<Simplex> facets_;
};

/// Every face of the complex, the empty simplex included when the complex is not void.
inline FaceSet all_faces(const Complex& c) {
  FaceSet out;
  for (const Simplex& f : c.facets()) for_each_subface(f, [&](Simplex s) { out.insert(std::move(s)); });
  return out;
}

/// The k-dimensional faces in lexicographic order; -1 <= k <= dimension.
inline std::vector<Simplex> faces(const Complex& c, int k) {
  if (k < -1 || k > c.dimension()) {
    throw RangeError("face dimension " + std::to_string(k) + " outside [-1, " + std::to_string(c.dimension()) + "]");
  }
  FaceSet seen;
  for (const Simplex& f : c.facets()) for_each_face(f, k, [&](Simplex s) { seen.insert(std::move(s)); });
  std::vector<Simplex> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline FVector f_vector(const Complex& c) {
  const int n = c.dimension();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(std::max(n + 1, 0)), 0);
  for (const Simplex& s : all_faces(c)) {
    if (!s.empty()) ++counts[static_cast<std::size_t>(s.dimension())];
  }
  return FVector(n, std::move(counts));
}

inline std::int64_t euler_characteristic(const Complex& c) { return f_vector(c).euler_characteristic(); }

/// Maps every codimension-one face of a pure complex to the indices of the facets containing it.
inline std::unordered_map<Simplex, std::vector<std::size_t>, SimplexHash> ridge_incidence(const Complex& c) {
  std::unordered_map<Simplex, std::vector<std::size_t>, SimplexHash> out;
  const auto& fs = c.facets();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = 0; j < fs[i].size(); ++j) out[fs[i].without_vertex(j)].push_back(i);
  }
  return out;
}

inline Complex link(const Complex& c, const Simplex& s) {
  std::vector<Simplex> out;
  for (const Simplex& f : c.facets()) {
    if (s.is_face_of(f)) out.push_back(f.without(s));
  }
  if (out.empty()) throw NotAFaceError(s.to_string() + " is not a face of the complex");
  if (c.is_pure()) return Complex::from_facets(c.dimension() - static_cast<int>(s.size()), std::move(out));
  return Complex::from_faces(std::move(out));
}

inline Complex star(const Complex& c, const Simplex& s) {
  std::vector<Simplex> out;
  for (const Simplex& f : c.facets()) {
    if (s.is_face_of(f)) out.push_back(f);
  }
  if (out.empty()) throw NotAFaceError(s.to_string() + " is not a face of the complex");
  return Complex::from_faces(std::move(out));
}

/// A join together with the shift applied to the second operand's vertex ids (0 if none was needed).
struct JoinResult {
  Complex complex;
  VertexId offset = 0;
};

/**
 * The join x * y. If the vertex sets overlap, every vertex of y is shifted
 * by max(x) + 1 first; the shift is reported in the result.
 */
inline JoinResult join_with_offset(const Complex& x, const Complex& y) {
  const auto vx = x.vertices();
  const auto vy = y.vertices();
  std::vector<VertexId> common;
  std::set_intersection(vx.begin(), vx.end(), vy.begin(), vy.end(), std::back_inserter(common));
  VertexId offset = 0;
  if (!common.empty()) offset = *x.max_vertex() + 1;
  std::vector<Simplex> out;
  out.reserve(x.facet_count() * y.facet_count());
  for (const Simplex& f : x.facets()) {
    for (const Simplex& g : y.facets()) {
      out.push_back(f.united_with(g.mapped([offset](VertexId v) { return v + offset; })));
    }
  }
  const int dim = x.dimension() + y.dimension() + 1;
  if (x.is_pure() && y.is_pure()) return {Complex::from_facets(dim, std::move(out)), offset};
  return {Complex::from_faces(std::move(out)), offset};
}

inline Complex join(const Complex& x, const Complex& y) { return join_with_offset(x, y).complex; }

/// Facets are the codimension-one faces lying in exactly one facet.
inline Complex boundary_complex(const Complex& c) {
  if (!c.is_pure()) throw NonPseudomanifoldError("boundary requires a pure complex");
  if (c.dimension() < 0) throw RangeError("boundary requires dimension >= 0");
  std::vector<Simplex> out;
  for (const auto& [ridge, incident] : ridge_incidence(c)) {
    if (incident.size() >= 3) {
      throw NonPseudomanifoldError("face " + ridge.to_string() + " lies in " + std::to_string(incident.size()) +
                                   " facets");
    }
    if (incident.size() == 1) out.push_back(ridge);
  }
  return Complex::from_facets(c.dimension() - 1, std::move(out));
}

/// Vertex map sending the second copy of a double to fresh ids; boundary vertices are fixed.
struct DoubleLabels {
  Complex boundary;
  VertexId offset = 0;
  std::vector<VertexId> boundary_vertices;

  VertexId second_copy(VertexId v) const {
    return std::binary_search(boundary_vertices.begin(), boundary_vertices.end(), v) ? v : v + offset;
  }
};

inline DoubleLabels double_labels(const Complex& m) {
  DoubleLabels labels;
  labels.boundary = boundary_complex(m);
  labels.boundary_vertices = labels.boundary.vertices();
  labels.offset = m.max_vertex().value_or(0) + 1;
  return labels;
}

/**
 * Two copies of m glued by the identity along the boundary. The result is a
 * simplicial complex only when every face of m spanned by boundary vertices
 * is itself a boundary face; otherwise a GluingError is thrown and
 * `double_f_vector` still gives the face numbers of the glued cell complex.
 */
inline Complex double_complex(const Complex& m) {
  const DoubleLabels labels = double_labels(m);
  const FaceSet boundary_faces = all_faces(labels.boundary);
  for (const Simplex& s : all_faces(m)) {
    const bool spanned = std::all_of(s.begin(), s.end(), [&](VertexId v) {
      return std::binary_search(labels.boundary_vertices.begin(), labels.boundary_vertices.end(), v);
    });
    if (!s.empty() && spanned && !boundary_faces.contains(s)) {
      throw GluingError("face " + s.to_string() + " is spanned by boundary vertices but is not a boundary face");
    }
  }
  std::vector<Simplex> out = m.facets();
  for (const Simplex& f : m.facets()) out.push_back(f.mapped([&](VertexId v) { return labels.second_copy(v); }));
  return Complex::from_facets(m.dimension(), std::move(out));
}

/// Face numbers of the double, counted on the glued cell complex (faces tagged by copy).
inline FVector double_f_vector(const Complex& m) {
  const DoubleLabels labels = double_labels(m);
  const FaceSet boundary_faces = all_faces(labels.boundary);
  std::set<std::pair<int, Simplex>> cells;
  for (const Simplex& s : all_faces(m)) {
    if (s.empty()) continue;
    cells.emplace(1, s);
    cells.emplace(boundary_faces.contains(s) ? 1 : 2, s);
  }
  std::vector<std::int64_t> counts(static_cast<std::size_t>(m.dimension() + 1), 0);
  for (const auto& cell : cells) ++counts[static_cast<std::size_t>(cell.second.dimension())];
  return FVector(m.dimension(), std::move(counts));
}

/// Union of two subcomplexes of a common vertex labeling.
inline Complex complex_union(const Complex& x, const Complex& y) {
  std::vector<Simplex> out = x.facets();
  out.insert(out.end(), y.facets().begin(), y.facets().end());
  return Complex::from_faces(std::move(out));
}

/// The complex whose face set is the intersection of the two face sets.
inline Complex complex_intersection(const Complex& x, const Complex& y) {
  const FaceSet fy = all_faces(y);
  std::vector<Simplex> out;
  for (const Simplex& s : all_faces(x)) {
    if (fy.contains(s)) out.push_back(s);
  }
  return Complex::from_faces(std::move(out));
}

struct PseudomanifoldReport {
  bool pure = false;
  bool closed = false;     // every codimension-one face lies in exactly two facets
  bool connected = false;  // facets connected through shared codimension-one faces
  std::size_t ridges_with_one_facet = 0;
  std::size_t ridges_with_many_facets = 0;

  bool ok() const { return pure && closed && connected; }
};

namespace detail {

/// Number of components of the facet graph whose edges are shared ridges.
inline std::size_t facet_components(const Complex& c) {
  const std::size_t n = c.facet_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& [ridge, incident] : ridge_incidence(c)) {
    for (std::size_t i = 1; i < incident.size(); ++i) parent[find(incident[i])] = find(incident[0]);
  }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < n; ++i) roots += find(i) == i;
  return roots;
}

}  // namespace detail

inline PseudomanifoldReport closed_pseudomanifold_report(const Complex& c) {
  PseudomanifoldReport r;
  r.pure = c.is_pure();
  if (!r.pure || c.is_void()) return r;
  if (c.dimension() >= 0) {
    for (const auto& [ridge, incident] : ridge_incidence(c)) {
      if (incident.size() == 1) ++r.ridges_with_one_facet;
      if (incident.size() > 2) ++r.ridges_with_many_facets;
    }
  }
  r.closed = c.dimension() >= 0 && r.ridges_with_one_facet == 0 && r.ridges_with_many_facets == 0;
  r.connected = detail::facet_components(c) == 1;
  return r;
}

inline bool is_closed_pseudomanifold(const Complex& c) { return closed_pseudomanifold_report(c).ok(); }

enum class Verdict { Verified, Refuted, Unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "Verified";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

/**
 * Decides whether c is a closed connected combinatorial manifold.
 *
 * Exact up to dimension 3: in dimension 2 every vertex link must be a single
 * cycle, in dimension 3 every vertex link must be a closed connected surface
 * with Euler characteristic 2. From dimension 4 on only the pseudomanifold
 * conditions are checked, so the answer is Refuted or Unknown.
 */
inline Verdict is_combinatorial_manifold(const Complex& c) {
  if (!is_closed_pseudomanifold(c)) return Verdict::Refuted;
  const int n = c.dimension();
  if (n <= 1) return Verdict::Verified;
  if (n >= 4) return Verdict::Unknown;
  for (VertexId v : c.vertices()) {
    const Complex lk = link(c, Simplex{v});
    if (is_combinatorial_manifold(lk) != Verdict::Verified) return Verdict::Refuted;
    if (n == 3 && euler_characteristic(lk) != 2) return Verdict::Refuted;
  }
  return Verdict::Verified;
}

}  // namespace bistellar
