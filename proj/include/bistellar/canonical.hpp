#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <vector>

#include "bistellar/complex.hpp"

namespace bistellar {

namespace detail {

using Certificate = std::vector<Simplex>;

/// Vertex-connected pieces of a complex, each as a list of facet indices.
inline std::vector<std::vector<std::size_t>> vertex_components(const Complex& c) {
  const auto& fs = c.facets();
  std::vector<std::size_t> parent(fs.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::map<VertexId, std::size_t> owner;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (VertexId v : fs[i]) {
      auto [it, fresh] = owner.emplace(v, i);
      if (!fresh) parent[find(i)] = find(it->second);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < fs.size(); ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

/**
 * Canonical certificate of a strongly connected pure complex in which every
 * ridge lies in at most two facets.
 *
 * A starting facet with an ordering of its vertices determines a labeling:
 * breadth-first search across ridges gives each newly reached vertex the next
 * free label, with ridges visited in order of the label of the dropped
 * vertex. The certificate is the smallest relabeled facet list over all
 * starting flags. Candidate flags are restricted by vertex degree, which is
 * invariant under isomorphism and so does not affect the result.
 */
inline Certificate flag_certificate(const std::vector<Simplex>& facets) {
  const std::size_t count = facets.size();
  std::map<VertexId, std::size_t> degree;
  for (const Simplex& f : facets) for (VertexId v : f) ++degree[v];

  std::unordered_map<Simplex, std::vector<std::size_t>, SimplexHash> ridges;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < facets[i].size(); ++j) ridges[facets[i].without_vertex(j)].push_back(i);
  }

  auto degree_key = [&](const Simplex& f) {
    std::vector<std::size_t> key;
    for (VertexId v : f) key.push_back(degree[v]);
    std::sort(key.begin(), key.end());
    return key;
  };
  std::vector<std::size_t> best_key;
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < count; ++i) {
    auto key = degree_key(facets[i]);
    if (starts.empty() || key < best_key) {
      best_key = key;
      starts.assign(1, i);
    } else if (key == best_key) {
      starts.push_back(i);
    }
  }

  Certificate best;
  std::unordered_map<VertexId, VertexId> label;
  std::vector<VertexId> by_label;
  std::vector<char> visited(count);
  for (std::size_t start : starts) {
    std::vector<VertexId> order(facets[start].begin(), facets[start].end());
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
      return degree[a] != degree[b] ? degree[a] < degree[b] : a < b;
    });
    do {
      if (!std::is_sorted(order.begin(), order.end(),
                          [&](VertexId a, VertexId b) { return degree[a] < degree[b]; })) {
        continue;
      }
      label.clear();
      by_label.clear();
      std::fill(visited.begin(), visited.end(), 0);
      for (VertexId v : order) {
        label.emplace(v, static_cast<VertexId>(by_label.size()));
        by_label.push_back(v);
      }
      std::deque<std::size_t> queue{start};
      visited[start] = 1;
      while (!queue.empty()) {
        const Simplex& f = facets[queue.front()];
        queue.pop_front();
        std::vector<std::pair<VertexId, std::size_t>> dropped;
        for (std::size_t j = 0; j < f.size(); ++j) dropped.emplace_back(label.at(f[j]), j);
        std::sort(dropped.begin(), dropped.end());
        for (auto [unused, j] : dropped) {
          for (std::size_t g : ridges.at(f.without_vertex(j))) {
            if (visited[g]) continue;
            visited[g] = 1;
            for (VertexId w : facets[g]) {
              if (label.emplace(w, static_cast<VertexId>(by_label.size())).second) by_label.push_back(w);
            }
            queue.push_back(g);
          }
        }
      }
      Certificate cert;
      cert.reserve(count);
      for (const Simplex& f : facets) cert.push_back(f.mapped([&](VertexId v) { return label.at(v); }));
      std::sort(cert.begin(), cert.end());
      if (best.empty() || cert < best) best = std::move(cert);
    } while (std::next_permutation(order.begin(), order.end(), [&](VertexId a, VertexId b) {
      return degree[a] != degree[b] ? degree[a] < degree[b] : a < b;
    }));
  }
  return best;
}

/// Smallest relabeled facet list over every vertex permutation.
inline Certificate brute_force_certificate(const std::vector<Simplex>& facets) {
  std::vector<VertexId> verts;
  for (const Simplex& f : facets) verts.insert(verts.end(), f.begin(), f.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (verts.size() > 9) throw PreconditionError("canonical form: too many vertices for exhaustive search");
  std::vector<VertexId> perm(verts.size());
  std::iota(perm.begin(), perm.end(), VertexId{0});
  Certificate best;
  do {
    Certificate cert;
    for (const Simplex& f : facets) {
      cert.push_back(f.mapped([&](VertexId v) {
        return perm[static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin())];
      }));
    }
    std::sort(cert.begin(), cert.end());
    if (best.empty() || cert < best) best = std::move(cert);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool strongly_connected_thin(const std::vector<Simplex>& facets) {
  const Complex piece = Complex::from_facets(facets.front().dimension(), facets);
  for (const auto& [ridge, incident] : ridge_incidence(piece)) {
    if (incident.size() > 2) return false;
  }
  return facet_components(piece) == 1;
}

}  // namespace detail

/**
 * A relabeling of c onto vertices 0, 1, ... that depends only on the
 * isomorphism class of c: two pure complexes are isomorphic exactly when
 * their canonical forms are equal.
 *
 * Vertex-connected pieces are labeled independently, sorted, and concatenated.
 * Pieces that are not strongly connected pseudomanifolds-with-boundary fall
 * back to exhaustive search and are limited to 9 vertices.
 */
inline Complex canonical_form(const Complex& c) {
  if (!c.is_pure()) throw PreconditionError("canonical form requires a pure complex");
  if (c.dimension() < 0) return c;
  std::vector<detail::Certificate> pieces;
  for (const auto& members : detail::vertex_components(c)) {
    std::vector<Simplex> facets;
    for (std::size_t i : members) facets.push_back(c.facets()[i]);
    pieces.push_back(detail::strongly_connected_thin(facets) ? detail::flag_certificate(facets)
                                                             : detail::brute_force_certificate(facets));
  }
  std::sort(pieces.begin(), pieces.end());
  std::vector<Simplex> out;
  VertexId offset = 0;
  for (const auto& piece : pieces) {
    VertexId top = 0;
    for (const Simplex& f : piece) {
      out.push_back(f.mapped([offset](VertexId v) { return v + offset; }));
      top = std::max(top, f.vertices().back());
    }
    offset += top + 1;
  }
  return Complex::from_facets(c.dimension(), std::move(out));
}

inline bool isomorphic(const Complex& a, const Complex& b) {
  if (a.dimension() != b.dimension() || a.facet_count() != b.facet_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace bistellar
