#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "conic/conic_analyzer.hpp"
#include "conic/point_search.hpp"

namespace conic {

struct OracleConfig {
  /// Extension degrees m = 1..degree_bound of B/P are searched.
  int degree_bound = 2;
  /// Largest |F|^2 a single fiber search may scan.
  std::uint64_t max_points = std::uint64_t{1} << 22;
  bool parallel = true;

  /// Throws InputError if degree_bound < 1.
  void validate() const;
};

/// A point of a fiber over the prime primes_above_2(ring)[prime_index],
/// with coordinates in the degree-extension_degree extension of B/P.
struct FiberWitness {
  std::size_t prime_index = 0;
  int extension_degree = 1;
  RationalPoint point;
};

/// Point where g and both partials vanish modulo some prime above 2.
std::optional<FiberWitness> find_singular_fiber_point(const ConicInput& input,
                                                      const OracleConfig& cfg = {});

/// Point of V(P, F_P P^-1) on the fiber over some P ⊇ (2, b)B. F_P is
/// rebuilt here by substitution into g and the square roots by search, so
/// the result is independent of the analyzer's closed forms.
std::optional<FiberWitness> find_nonregular_point(const ConicInput& input,
                                                  const OracleConfig& cfg = {});

bool smooth_oracle(const ConicInput& input, const OracleConfig& cfg = {});
bool regular_oracle(const ConicInput& input, const OracleConfig& cfg = {});

/// The family (p+1)X^p + p^2 Y^p - 1 over Z.
struct Example14Report {
  bool not_smooth = false;
  bool regular = false;
  bool identity_ok = false;
  friend bool operator==(const Example14Report&, const Example14Report&) = default;
};

/// p must be a prime <= 50; throws InputError otherwise.
Example14Report example14_verify(long p);

bool is_small_prime(long p);

}  // namespace conic
