#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bistellar/errors.hpp"
#include "bistellar/fvector.hpp"
#include "bistellar/rational.hpp"

namespace bistellar {

/// v(f) = constant + sum_i coeffs[i] * f_i on n-dimensional f-vectors.
struct LinearFunctional {
  int n = 0;
  std::vector<Rational> coeffs;
  Rational constant = 0;

  LinearFunctional() = default;
  LinearFunctional(int dimension, std::vector<Rational> c, Rational k = 0)
      : n(dimension), coeffs(std::move(c)), constant(std::move(k)) {
    if (static_cast<int>(coeffs.size()) != n + 1) throw DimensionError("functional needs dimension + 1 coefficients");
  }

  /// Lower-dimensional f-vectors are padded with zeros.
  Rational operator()(const FVector& f) const {
    if (f.n > n) throw DimensionError("f-vector dimension exceeds functional dimension");
    Rational total = constant;
    for (int i = 0; i <= n; ++i) total += coeffs[static_cast<std::size_t>(i)] * f.at(i);
    return total;
  }

  /// Linear part only.
  Rational dot(std::span<const std::int64_t> x) const {
    if (x.size() != coeffs.size()) throw DimensionError("dot product length mismatch");
    Rational total = 0;
    for (std::size_t i = 0; i < x.size(); ++i) total += coeffs[i] * x[i];
    return total;
  }

  LinearFunctional linear_part() const { return {n, coeffs, 0}; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i) s += ", ";
      s += bistellar::to_string(coeffs[i]);
    }
    s += ")";
    if (constant != 0) s += " + " + bistellar::to_string(constant);
    return s;
  }

  friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;
};

/// Change of the f-vector under a move of type a in dimension n.
struct DeltaVector {
  int n = 0;
  int type = 0;
  std::vector<std::int64_t> entries;

  std::string to_string() const { return FVector(n, entries).to_string(); }
  friend bool operator==(const DeltaVector&, const DeltaVector&) = default;
};

struct HVector {
  int n = 0;
  std::vector<std::int64_t> entries;  // h_0 ... h_{n+1}

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(entries[i]);
    }
    return s + ")";
  }
  friend bool operator==(const HVector&, const HVector&) = default;
};

namespace detail {

inline std::int64_t to_int64(const BigInt& x) {
  if (x > BigInt(INT64_MAX) || x < BigInt(INT64_MIN)) throw RangeError("value does not fit in 64 bits");
  return static_cast<std::int64_t>(x);
}

/// Face numbers of the m-simplex indexed from -1: entry k+1 is C(m+1, k+1).
inline std::vector<BigInt> simplex_numbers(int m) {
  std::vector<BigInt> out;
  for (int k = -1; k <= m; ++k) out.push_back(binomial(m + 1, k + 1));
  return out;
}

/// Same for the boundary of the m-simplex (the top entry is dropped).
inline std::vector<BigInt> simplex_boundary_numbers(int m) {
  auto out = simplex_numbers(m);
  out.pop_back();
  return out;
}

/// f(X * Y) from f(X), f(Y), all indexed from -1.
inline std::vector<BigInt> join_numbers(const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
  std::vector<BigInt> out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

inline int sign(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace detail

/**
 * The f-vector change of a type-a move in dimension n, which replaces
 * dA * B by A * dB with dim A = a and dim B = n - a:
 * delta = f(A * dB) - f(dA * B), from the join formula.
 */
inline DeltaVector move_delta(int n, int a) {
  if (n < 0 || a < 0 || a > n) {
    throw RangeError("move type " + std::to_string(a) + " outside [0, " + std::to_string(n) + "]");
  }
  const auto inserted = detail::join_numbers(detail::simplex_numbers(a), detail::simplex_boundary_numbers(n - a));
  const auto removed = detail::join_numbers(detail::simplex_boundary_numbers(a), detail::simplex_numbers(n - a));
  DeltaVector d{n, a, {}};
  for (int k = 0; k <= n; ++k) {
    const std::size_t at = static_cast<std::size_t>(k + 1);
    const BigInt in = at < inserted.size() ? inserted[at] : BigInt(0);
    const BigInt out = at < removed.size() ? removed[at] : BigInt(0);
    d.entries.push_back(detail::to_int64(in - out));
  }
  return d;
}

/**
 * h_k = sum_{i=0}^{k} (-1)^{k-i} C(n+1-i, k-i) f_{i-1}, k = 0 ... n+1, with
 * f_{-1} = 1; equivalently sum_k h_k x^{n+1-k} = sum_i f_{i-1} (x-1)^{n+1-i}.
 */
inline HVector h_vector(const FVector& f) {
  const int n = f.n;
  HVector h{n, {}};
  for (int k = 0; k <= n + 1; ++k) {
    BigInt total = 0;
    for (int i = 0; i <= k; ++i) total += detail::sign(k - i) * binomial(n + 1 - i, k - i) * f.at(i - 1);
    h.entries.push_back(detail::to_int64(total));
  }
  return h;
}

/// Inverse of h_vector: f_{i-1} = sum_{k=0}^{i} C(n+1-k, i-k) h_k.
inline FVector f_from_h(const HVector& h) {
  const int n = h.n;
  std::vector<std::int64_t> counts;
  for (int i = 1; i <= n + 1; ++i) {
    BigInt total = 0;
    for (int k = 0; k <= i; ++k) total += binomial(n + 1 - k, i - k) * h.entries[static_cast<std::size_t>(k)];
    counts.push_back(detail::to_int64(total));
  }
  return FVector(n, std::move(counts));
}

/// h_k - h_{n+1-k} for k = 0 ... floor((n+1)/2).
inline std::vector<Rational> dehn_sommerville(const FVector& f) {
  const HVector h = h_vector(f);
  std::vector<Rational> out;
  for (int k = 0; k <= (f.n + 1) / 2; ++k) {
    out.emplace_back(h.entries[static_cast<std::size_t>(k)] - h.entries[static_cast<std::size_t>(f.n + 1 - k)]);
  }
  return out;
}

namespace detail {

/// h_k as an affine functional of (f_0, ..., f_n).
inline LinearFunctional h_functional(int n, int k) {
  LinearFunctional v(n, std::vector<Rational>(static_cast<std::size_t>(n + 1), Rational(0)));
  for (int i = 0; i <= k; ++i) {
    const Rational c = Rational(sign(k - i) * binomial(n + 1 - i, k - i));
    if (i == 0) {
      v.constant += c;
    } else {
      v.coeffs[static_cast<std::size_t>(i - 1)] += c;
    }
  }
  return v;
}

}  // namespace detail

/// h_k - h_{n+1-k} expanded as constant + sum c_i f_i.
inline LinearFunctional ds_functional(int n, int k) {
  if (n < 0 || k < 0 || k > (n + 1) / 2) {
    throw RangeError("Dehn-Sommerville index " + std::to_string(k) + " outside [0, " + std::to_string((n + 1) / 2) +
                     "]");
  }
  const LinearFunctional lo = detail::h_functional(n, k);
  const LinearFunctional hi = detail::h_functional(n, n + 1 - k);
  LinearFunctional v(n, lo.coeffs, lo.constant - hi.constant);
  for (std::size_t i = 0; i < v.coeffs.size(); ++i) v.coeffs[i] -= hi.coeffs[i];
  return v;
}

inline LinearFunctional euler_functional(int n) {
  if (n < 0) throw RangeError("dimension must be nonnegative");
  std::vector<Rational> c;
  for (int i = 0; i <= n; ++i) c.emplace_back(detail::sign(i));
  return {n, std::move(c)};
}

/// (n+1) f_n - 2 f_{n-1}: every ridge of a closed pseudomanifold lies in two facets.
inline LinearFunctional universal_relation(int n) {
  if (n < 1) throw RangeError("universal relation needs dimension >= 1");
  std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
  c[static_cast<std::size_t>(n - 1)] = -2;
  c[static_cast<std::size_t>(n)] = n + 1;
  return {n, std::move(c)};
}

/// f(boundary of the (n+1)-simplex), the standard n-sphere.
inline FVector sphere_f_vector(int n) {
  std::vector<std::int64_t> counts;
  for (int k = 0; k <= n; ++k) counts.push_back(detail::to_int64(binomial(n + 2, k + 1)));
  return FVector(n, std::move(counts));
}

}  // namespace bistellar
