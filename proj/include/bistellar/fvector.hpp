#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bistellar/errors.hpp"

namespace bistellar {

/// Face numbers (f_0, ..., f_n) of an n-dimensional complex; f_{-1} = 1 is implicit.
struct FVector {
  int n = -1;
  std::vector<std::int64_t> counts;

  FVector() = default;
  FVector(int dimension, std::vector<std::int64_t> values) : n(dimension), counts(std::move(values)) {
    if (static_cast<int>(counts.size()) != n + 1) throw DimensionError("f-vector length must be dimension + 1");
  }

  /// f_k for -1 <= k; entries above the dimension read as zero.
  std::int64_t at(int k) const {
    if (k == -1) return 1;
    if (k < -1) throw RangeError("f-vector index below -1");
    return k <= n ? counts[static_cast<std::size_t>(k)] : 0;
  }

  std::int64_t euler_characteristic() const {
    std::int64_t chi = 0;
    for (int k = 0; k <= n; ++k) chi += (k % 2 == 0 ? 1 : -1) * counts[static_cast<std::size_t>(k)];
    return chi;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(counts[i]);
    }
    return s + ")";
  }

  friend bool operator==(const FVector&, const FVector&) = default;
};

}  // namespace bistellar
