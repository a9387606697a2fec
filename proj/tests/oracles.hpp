#pragma once

// Independent reference computations used only by the tests. None of these
// go through the library's face enumeration, join formula or elimination.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "bistellar/bistellar.hpp"

namespace oracle {

using bistellar::Complex;
using bistellar::FVector;
using bistellar::Simplex;
using bistellar::VertexId;

/// Face numbers by testing every subset of the vertex set against every facet.
inline FVector f_vector(const Complex& c) {
  const auto verts = c.vertices();
  if (verts.size() > 20) throw std::logic_error("oracle::f_vector: too many vertices");
  const int n = c.dimension();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(std::max(n + 1, 0)), 0);
  std::vector<std::uint32_t> facet_masks;
  for (const Simplex& f : c.facets()) {
    std::uint32_t m = 0;
    for (VertexId v : f) {
      m |= 1u << static_cast<unsigned>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    }
    facet_masks.push_back(m);
  }
  for (std::uint32_t s = 1; s < (1u << verts.size()); ++s) {
    const bool face = std::any_of(facet_masks.begin(), facet_masks.end(), [s](std::uint32_t m) { return (s & m) == s; });
    if (face) ++counts[static_cast<std::size_t>(__builtin_popcount(s) - 1)];
  }
  return FVector(n, std::move(counts));
}

/// Facets of x * y built directly, with y shifted past x's vertices.
inline Complex explicit_join(const Complex& x, const Complex& y) {
  const VertexId shift = x.vertices().empty() ? 0 : x.vertices().back() + 1;
  std::vector<Simplex> out;
  for (const Simplex& f : x.facets()) {
    for (const Simplex& g : y.facets()) {
      std::vector<VertexId> verts(f.begin(), f.end());
      for (VertexId v : g) verts.push_back(v + shift);
      out.emplace_back(std::move(verts));
    }
  }
  return Complex::from_facets(x.dimension() + y.dimension() + 1, std::move(out));
}

/// The m-simplex, or its boundary, on vertices 0 ... m.
inline Complex simplex(int m, bool boundary) {
  std::vector<Simplex> facets;
  std::vector<VertexId> all(static_cast<std::size_t>(m + 1));
  std::iota(all.begin(), all.end(), VertexId{0});
  if (!boundary) return Complex::from_facets(m, {Simplex(all)});
  for (int drop = 0; drop <= m; ++drop) {
    std::vector<VertexId> f;
    for (VertexId v : all) {
      if (v != static_cast<VertexId>(drop)) f.push_back(v);
    }
    facets.emplace_back(std::move(f));
  }
  return Complex::from_facets(m - 1, std::move(facets));
}

/// f(A * dB) - f(dA * B) with dim A = a, dim B = n - a, measured on explicit complexes.
inline std::vector<std::int64_t> measured_delta(int n, int a) {
  const Complex inserted = explicit_join(simplex(a, false), simplex(n - a, true));
  const Complex removed = explicit_join(simplex(a, true), simplex(n - a, false));
  const FVector fi = oracle::f_vector(inserted);
  const FVector fr = oracle::f_vector(removed);
  std::vector<std::int64_t> d;
  for (int k = 0; k <= n; ++k) d.push_back(fi.at(k) - fr.at(k));
  return d;
}

/// Determinant by the Leibniz permutation expansion.
inline bistellar::BigInt leibniz_det(const std::vector<std::vector<bistellar::BigInt>>& m) {
  const std::size_t k = m.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  bistellar::BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
    }
    bistellar::BigInt term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < k; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Rank as the size of the largest nonvanishing minor.
inline std::size_t minor_rank(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t r = rows.size();
  const std::size_t c = rows[0].size();
  for (std::size_t size = std::min(r, c); size > 0; --size) {
    std::vector<bool> row_pick(r, false), col_pick(c, false);
    std::fill(row_pick.begin(), row_pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::fill(col_pick.begin(), col_pick.end(), false);
      std::fill(col_pick.begin(), col_pick.begin() + static_cast<std::ptrdiff_t>(size), true);
      do {
        std::vector<std::vector<bistellar::BigInt>> minor;
        for (std::size_t i = 0; i < r; ++i) {
          if (!row_pick[i]) continue;
          std::vector<bistellar::BigInt> row;
          for (std::size_t j = 0; j < c; ++j) {
            if (col_pick[j]) row.emplace_back(rows[i][j]);
          }
          minor.push_back(std::move(row));
        }
        if (leibniz_det(minor) != 0) return size;
      } while (std::prev_permutation(col_pick.begin(), col_pick.end()));
    } while (std::prev_permutation(row_pick.begin(), row_pick.end()));
  }
  return 0;
}

/// A random subcomplex generated by a nonempty random subset of the facets of c.
template <typename Rng>
Complex random_subcomplex(const Complex& c, Rng& rng) {
  std::vector<Simplex> picked;
  std::bernoulli_distribution coin(0.5);
  while (picked.empty()) {
    for (const Simplex& f : c.facets()) {
      if (coin(rng)) picked.push_back(f);
    }
  }
  return Complex::from_facets(c.dimension(), std::move(picked));
}

/// A random vertex permutation of c.
template <typename Rng>
Complex shuffled(const Complex& c, Rng& rng) {
  const auto verts = c.vertices();
  std::vector<VertexId> image(verts.begin(), verts.end());
  for (VertexId& v : image) v += 100;
  std::shuffle(image.begin(), image.end(), rng);
  return c.relabeled([&](VertexId v) {
    return image[static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin())];
  });
}

}  // namespace oracle
