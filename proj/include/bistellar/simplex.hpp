#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "bistellar/errors.hpp"

namespace bistellar {

using VertexId = std::uint32_t;

/**
 * A face of a simplicial complex: a finite set of vertices kept as a strictly
 * increasing sequence. The empty simplex has dimension -1.
 */
class Simplex {
 public:
  Simplex() = default;

  Simplex(std::initializer_list<VertexId> vertices) : Simplex(std::vector<VertexId>(vertices)) {}

  /// Sorts the input; repeated vertices are rejected.
  explicit Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
      throw PreconditionError("simplex has a repeated vertex");
    }
  }

  /// Wraps an already strictly increasing sequence without checking it.
  static Simplex from_sorted(std::vector<VertexId> vertices) {
    Simplex s;
    s.vertices_ = std::move(vertices);
    return s;
  }

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  std::span<const VertexId> vertices() const { return vertices_; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }

  bool contains(VertexId v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

  bool is_face_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
  }

  Simplex united_with(const Simplex& other) const {
    std::vector<VertexId> out;
    out.reserve(size() + other.size());
    std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                   std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  Simplex without(const Simplex& other) const {
    std::vector<VertexId> out;
    std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                        std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  Simplex without_vertex(std::size_t position) const {
    std::vector<VertexId> out = vertices_;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(position));
    return from_sorted(std::move(out));
  }

  /// The codimension-one faces, ordered by the position of the dropped vertex.
  std::vector<Simplex> boundary_facets() const {
    std::vector<Simplex> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(without_vertex(i));
    return out;
  }

  /// Applies a vertex map; the map must be injective on this simplex.
  template <typename Map>
  Simplex mapped(Map&& map) const {
    std::vector<VertexId> out;
    out.reserve(size());
    for (VertexId v : vertices_) out.push_back(static_cast<VertexId>(map(v)));
    return Simplex(std::move(out));
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(vertices_[i]);
    }
    return s + "]";
  }

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex& a, const Simplex& b) { return a.vertices_ <=> b.vertices_; }

 private:
  std::vector<VertexId> vertices_;
};

/// Calls `fn` with every (k+1)-vertex face of `s`, in lexicographic order.
template <typename Fn>
void for_each_face(const Simplex& s, int k, Fn&& fn) {
  const int m = static_cast<int>(s.size());
  const int r = k + 1;
  if (r < 0 || r > m) return;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<VertexId> buf(static_cast<std::size_t>(r));
  while (true) {
    for (int i = 0; i < r; ++i) buf[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    fn(Simplex::from_sorted(buf));
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - r + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// Calls `fn` with every face of `s`, the empty face included.
template <typename Fn>
void for_each_subface(const Simplex& s, Fn&& fn) {
  const std::size_t m = s.size();
  std::vector<VertexId> buf;
  buf.reserve(m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    buf.clear();
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::uint64_t{1} << i)) buf.push_back(s[i]);
    }
    fn(Simplex::from_sorted(buf));
  }
}

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL ^ s.size();
    for (VertexId v : s) h = (h ^ v) * 0x100000001b3ULL;
    return h;
  }
};

}  // namespace bistellar
