#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bistellar/complex.hpp"
#include "bistellar/functional.hpp"

namespace bistellar {

using IntMatrix = std::vector<std::vector<BigInt>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Row echelon form over the integers together with its pivot columns.
struct Echelon {
  IntMatrix rows;  // the first `pivots.size()` rows are nonzero
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/**
 * Fraction-free (Bareiss) elimination. Every intermediate entry is a minor of
 * the input, so each division by the previous pivot is exact.
 */
inline Echelon fraction_free_echelon(IntMatrix m) {
  Echelon e;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  BigInt previous = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        const BigInt numerator = m[r][col] * m[i][j] - m[i][col] * m[r][j];
        if (numerator % previous != 0) throw std::logic_error("fraction-free elimination: inexact division");
        m[i][j] = numerator / previous;
      }
      m[i][col] = 0;
    }
    previous = m[r][col];
    e.pivots.push_back(col);
    ++r;
  }
  e.rows = std::move(m);
  return e;
}

/// Reduced row echelon form over the rationals (pivots scaled to 1), zero rows dropped.
inline RationalMatrix reduced_echelon(const RationalMatrix& input) {
  RationalMatrix m = input;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational pivot = m[r][col];
    for (Rational& x : m[r]) x /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][col] == 0) continue;
      const Rational factor = m[i][col];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

/// Basis of {x : m x = 0} in reduced echelon form.
inline RationalMatrix integer_nullspace(const IntMatrix& m, std::size_t cols) {
  const Echelon e = fraction_free_echelon(m);
  RationalMatrix pivot_rows;
  for (std::size_t r = 0; r < e.rank(); ++r) {
    std::vector<Rational> row;
    for (const BigInt& x : e.rows[r]) row.emplace_back(x);
    pivot_rows.push_back(std::move(row));
  }
  const RationalMatrix reduced = reduced_echelon(pivot_rows);
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t p : e.pivots) is_pivot[p] = 1;
  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[free] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots[r]] = -reduced[r][free];
    basis.push_back(std::move(x));
  }
  return reduced_echelon(basis);
}

struct NullspaceBasis {
  int n = 0;
  std::vector<DeltaVector> constraints;  // types 0 ... floor(n/2)
  std::vector<LinearFunctional> basis;
  std::size_t rank_of_constraints = 0;

  std::size_t dimension() const { return basis.size(); }
};

/// The constraint matrix with rows Δ(n, a), a = 0 ... floor(n/2).
inline IntMatrix constraint_matrix(int n) {
  IntMatrix m;
  for (int a = 0; a <= n / 2; ++a) {
    std::vector<BigInt> row;
    for (std::int64_t x : move_delta(n, a).entries) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  return m;
}

/**
 * All coefficient vectors c with c . Δ(n, a) = 0 for every move type.
 * Only types a <= floor(n/2) are imposed; Δ(n, n-a) = -Δ(n, a) covers the rest.
 */
inline NullspaceBasis invariant_nullspace(int n) {
  if (n < 1) throw RangeError("invariant nullspace needs dimension >= 1");
  NullspaceBasis out;
  out.n = n;
  for (int a = 0; a <= n / 2; ++a) out.constraints.push_back(move_delta(n, a));
  const IntMatrix m = constraint_matrix(n);
  out.rank_of_constraints = fraction_free_echelon(m).rank();
  for (auto& row : integer_nullspace(m, static_cast<std::size_t>(n + 1))) out.basis.emplace_back(n, std::move(row));
  return out;
}

/// True when the linear part of v annihilates Δ(v.n, a) for every a in [0, n].
inline bool annihilates_all_moves(const LinearFunctional& v) {
  for (int a = 0; a <= v.n; ++a) {
    if (v.dot(move_delta(v.n, a).entries) != 0) return false;
  }
  return true;
}

/// Rank of a list of functionals' linear parts.
inline std::size_t functional_rank(const std::vector<LinearFunctional>& vs) {
  RationalMatrix m;
  for (const auto& v : vs) m.push_back(v.coeffs);
  return reduced_echelon(m).size();
}

inline bool in_span(const LinearFunctional& v, const std::vector<LinearFunctional>& basis) {
  std::vector<LinearFunctional> extended = basis;
  extended.push_back(v);
  return functional_rank(extended) == functional_rank(basis);
}

/// v(S^n) / 2 for a move-invariant linear functional v.
inline Rational proportionality_constant(const LinearFunctional& v) {
  if (v.constant != 0) throw NotAnInvariantError("functional has a nonzero constant term");
  if (!annihilates_all_moves(v)) throw NotAnInvariantError("functional " + v.to_string() + " is not move-invariant");
  return v(sphere_f_vector(v.n)) / 2;
}

struct TheoremViolation {
  std::size_t basis_index = 0;
  std::size_t corpus_index = 0;
  Rational value;
  Rational expected;
};

struct TheoremReport {
  int n = 0;
  std::string status;  // "vacuous", "pass" or "fail"
  std::vector<LinearFunctional> basis;
  std::vector<Rational> constants;
  std::size_t corpus_size = 0;
  std::size_t checks = 0;
  std::vector<TheoremViolation> violations;

  bool passed() const { return status != "fail"; }
};

/**
 * Evaluates every invariant basis functional v on every f-vector and checks
 * v(f) = (v(S^n) / 2) * chi(f); in odd dimensions additionally v(f) = 0.
 */
inline TheoremReport verify_theorem(int n, const std::vector<FVector>& corpus) {
  TheoremReport report;
  report.n = n;
  report.corpus_size = corpus.size();
  const NullspaceBasis ns = invariant_nullspace(n);
  report.basis = ns.basis;
  for (const auto& v : ns.basis) report.constants.push_back(proportionality_constant(v));
  if (corpus.empty()) {
    report.status = "vacuous";
    return report;
  }
  for (std::size_t j = 0; j < corpus.size(); ++j) {
    if (corpus[j].n != n) throw DimensionError("corpus entry " + std::to_string(j) + " has the wrong dimension");
    const Rational chi = corpus[j].euler_characteristic();
    for (std::size_t i = 0; i < ns.basis.size(); ++i) {
      const Rational value = ns.basis[i](corpus[j]);
      const Rational expected = report.constants[i] * chi;
      ++report.checks;
      if (value != expected) report.violations.push_back({i, j, value, expected});
      if (n % 2 == 1) {
        ++report.checks;
        if (value != 0) report.violations.push_back({i, j, value, Rational(0)});
      }
    }
  }
  report.status = report.violations.empty() ? "pass" : "fail";
  return report;
}

/// v(M) - v(dM) / 2 for an n-dimensional pseudomanifold with boundary M.
inline Rational tilde_v(const LinearFunctional& v, const Complex& m) {
  if (m.dimension() != v.n) throw DimensionError("functional and complex dimensions differ");
  return v(f_vector(m)) - v(f_vector(boundary_complex(m))) / 2;
}

struct RankRow {
  int n = 0;
  int move_types = 0;  // floor(n/2) + 1
  std::size_t rank = 0;
  std::size_t nullity = 0;
  std::size_t ds_rank = 0;  // rank of the linear parts of h_k - h_{n+1-k}
  // Reference counts to compare against: floor(n/2) conditions in every
  // dimension; floor(n/2)+1 invariants for odd n and n/2 for even n.
  std::size_t stated_rank = 0;
  std::size_t stated_nullity = 0;
  bool rank_matches = false;
  bool nullity_matches = false;
};

inline std::vector<RankRow> rank_report(int n_max) {
  if (n_max < 1) throw RangeError("rank report needs n_max >= 1");
  std::vector<RankRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const NullspaceBasis ns = invariant_nullspace(n);
    RankRow row;
    row.n = n;
    row.move_types = n / 2 + 1;
    row.rank = ns.rank_of_constraints;
    row.nullity = ns.dimension();
    std::vector<LinearFunctional> ds;
    for (int k = 0; k <= (n + 1) / 2; ++k) ds.push_back(ds_functional(n, k));
    row.ds_rank = functional_rank(ds);
    row.stated_rank = static_cast<std::size_t>(n / 2);
    row.stated_nullity = static_cast<std::size_t>(n % 2 == 1 ? n / 2 + 1 : n / 2);
    row.rank_matches = row.rank == row.stated_rank;
    row.nullity_matches = row.nullity == row.stated_nullity;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bistellar
