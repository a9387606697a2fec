#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "bistellar/complex.hpp"
#include "bistellar/functional.hpp"

namespace bistellar {

/**
 * A located bistellar move of type i in an n-dimensional complex: the star
 * sigma * d(tau) is replaced by d(sigma) * tau, where dim sigma = n - i and
 * dim tau = i. For i = 0, sigma is a facet and tau a vertex not yet in the
 * complex.
 */
struct MoveSite {
  int type = 0;
  Simplex sigma;
  Simplex tau;

  std::string to_string() const {
    return "type " + std::to_string(type) + " sigma " + sigma.to_string() + " tau " + tau.to_string();
  }

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
  friend auto operator<=>(const MoveSite&, const MoveSite&) = default;
};

namespace detail {

/// Admissible sites of the given type, or of every type when `only_type` is negative.
inline std::vector<MoveSite> collect_sites(const Complex& c, int only_type) {
  const int n = c.dimension();
  const auto& fs = c.facets();
  std::vector<MoveSite> sites;
  if (only_type <= 0) {
    const VertexId fresh = c.max_vertex().value_or(0) + (c.is_void() ? 0 : 1);
    for (const Simplex& f : fs) sites.push_back({0, f, Simplex{fresh}});
  }
  if (only_type == 0) return sites;

  std::unordered_map<Simplex, std::vector<std::size_t>, SimplexHash> star;
  for (std::size_t idx = 0; idx < fs.size(); ++idx) {
    for_each_subface(fs[idx], [&](Simplex s) {
      if (!s.empty() && s.dimension() < n) star[std::move(s)].push_back(idx);
    });
  }
  for (const auto& [sigma, containing] : star) {
    const int i = n - sigma.dimension();
    if (only_type > 0 && i != only_type) continue;
    if (containing.size() != static_cast<std::size_t>(i + 1)) continue;
    std::vector<VertexId> apexes;
    for (std::size_t idx : containing) {
      const Simplex rest = fs[idx].without(sigma);
      apexes.insert(apexes.end(), rest.begin(), rest.end());
    }
    std::sort(apexes.begin(), apexes.end());
    apexes.erase(std::unique(apexes.begin(), apexes.end()), apexes.end());
    if (apexes.size() != static_cast<std::size_t>(i + 1)) continue;
    Simplex tau = Simplex::from_sorted(std::move(apexes));
    const bool present = i == n ? c.has_facet(tau) : star.contains(tau);
    if (!present) sites.push_back({i, sigma, std::move(tau)});
  }
  std::sort(sites.begin(), sites.end());
  return sites;
}

inline void require_closed(const Complex& c) {
  if (!is_closed_pseudomanifold(c)) throw PreconditionError("moves require a closed connected pseudomanifold");
}

}  // namespace detail

/// Every admissible site of type i, in canonical order.
inline std::vector<MoveSite> enumerate_moves(const Complex& c, int i) {
  if (i < 0 || i > c.dimension()) {
    throw RangeError("move type " + std::to_string(i) + " outside [0, " + std::to_string(c.dimension()) + "]");
  }
  detail::require_closed(c);
  return detail::collect_sites(c, i);
}

/// Every admissible site of every type, ordered by type and then by sigma.
inline std::vector<MoveSite> enumerate_all_moves(const Complex& c) {
  detail::require_closed(c);
  return detail::collect_sites(c, -1);
}

inline bool is_admissible(const Complex& c, const MoveSite& site) {
  const int n = c.dimension();
  const int i = site.type;
  if (i < 0 || i > n || site.sigma.dimension() != n - i || site.tau.dimension() != i) return false;
  if (i == 0) {
    const auto verts = c.vertices();
    return c.has_facet(site.sigma) && !std::binary_search(verts.begin(), verts.end(), site.tau[0]);
  }
  if (site.sigma.without(site.tau).size() != site.sigma.size()) return false;
  std::size_t containing = 0;
  for (const Simplex& f : c.facets()) {
    if (site.tau.is_face_of(f)) return false;
    if (site.sigma.is_face_of(f)) {
      ++containing;
      if (!f.without(site.sigma).is_face_of(site.tau)) return false;
    }
  }
  return containing == static_cast<std::size_t>(i + 1);
}

/// Replaces sigma * d(tau) by d(sigma) * tau.
inline Complex apply_move(const Complex& c, const MoveSite& site) {
  if (!is_admissible(c, site)) throw StaleSiteError("site " + site.to_string() + " is not admissible");
  std::vector<Simplex> removed;
  for (const Simplex& g : site.tau.boundary_facets()) removed.push_back(site.sigma.united_with(g));
  std::sort(removed.begin(), removed.end());
  std::vector<Simplex> out;
  out.reserve(c.facet_count() + site.sigma.size());
  std::set_difference(c.facets().begin(), c.facets().end(), removed.begin(), removed.end(), std::back_inserter(out));
  for (const Simplex& g : site.sigma.boundary_facets()) out.push_back(g.united_with(site.tau));
  return Complex::from_facets(c.dimension(), std::move(out));
}

/// The site of type n - i that undoes `site` in the complex it produced.
inline MoveSite inverse_site(const Complex& after, const MoveSite& site) {
  return {after.dimension() - site.type, site.tau, site.sigma};
}

/// Change in the facet count caused by a type-i move in dimension n.
inline long facet_change(int n, int i) { return static_cast<long>(n) - 2L * i; }

struct WalkStep {
  MoveSite site;
  FVector f;  // after the move
};

enum class WalkStatus { Completed, Stuck };

struct WalkTrace {
  std::uint64_t seed = 0;
  std::size_t size_cap = 0;
  std::size_t requested_steps = 0;
  FVector initial;
  std::vector<WalkStep> steps;
  WalkStatus status = WalkStatus::Completed;
  Complex final_complex;
};

/**
 * A seeded random walk through the flip graph. Each step draws uniformly from
 * the flat list of admissible sites of all types, after discarding sites
 * that would take the facet count above `size_cap`. The walk stops early if
 * no site remains.
 */
inline WalkTrace random_walk(const Complex& start, std::size_t steps, std::uint64_t seed, std::size_t size_cap) {
  detail::require_closed(start);
  if (size_cap < start.facet_count()) throw PreconditionError("size cap is below the current facet count");
  WalkTrace trace;
  trace.seed = seed;
  trace.size_cap = size_cap;
  trace.requested_steps = steps;
  trace.initial = f_vector(start);
  boost::random::mt19937_64 rng(seed);
  Complex current = start;
  const int n = start.dimension();
  for (std::size_t k = 0; k < steps; ++k) {
    std::vector<MoveSite> sites = detail::collect_sites(current, -1);
    const long count = static_cast<long>(current.facet_count());
    std::erase_if(sites, [&](const MoveSite& s) {
      return count + facet_change(n, s.type) > static_cast<long>(size_cap);
    });
    if (sites.empty()) {
      trace.status = WalkStatus::Stuck;
      break;
    }
    boost::random::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
    const MoveSite& site = sites[pick(rng)];
    current = apply_move(current, site);
    trace.steps.push_back({site, f_vector(current)});
  }
  trace.final_complex = std::move(current);
  return trace;
}

}  // namespace bistellar
