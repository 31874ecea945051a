#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "conic/bivar_poly.hpp"
#include "conic/fq_field.hpp"

namespace conic {

/// Polynomials over one finite field whose common zeros in F^2 are sought.
struct PointSystem {
  FqFieldPtr field;
  std::vector<BivarPoly<FqElement>> equations;
};

struct RationalPoint {
  FqFieldPtr field;
  FqElement x;
  FqElement y;
};

/// Exhaustive scan of F^2 in (x, y) bit order; returns the first common
/// zero. Reference implementation for the parallel kernels.
std::optional<RationalPoint> find_common_zero_serial(const PointSystem& system);
std::uint64_t count_common_zeros_serial(const PointSystem& system);

/// OpenMP versions. Same results as the serial scan for any schedule: the
/// witness returned is the one with the smallest (x, y) index.
std::optional<RationalPoint> find_common_zero_parallel(const PointSystem& system);
std::uint64_t count_common_zeros_parallel(const PointSystem& system);

inline std::optional<RationalPoint> find_common_zero(const PointSystem& system, bool parallel) {
  return parallel ? find_common_zero_parallel(system) : find_common_zero_serial(system);
}

}  // namespace conic
