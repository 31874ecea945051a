#pragma once

// Slow reference implementations, written without the library's algorithms.

#include <cstdint>
#include <random>
#include <vector>

#include "conic/number_ring.hpp"

namespace brute {

inline int deg(std::uint64_t p) { return p ? 63 - __builtin_clzll(p) : -1; }

/// Schoolbook product; deg(a) + deg(b) < 64.
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  for (int i = 0; i <= deg(a); ++i) {
    if ((a >> i) & 1) r ^= b << i;
  }
  return r;
}

inline std::uint64_t mod(std::uint64_t a, std::uint64_t m) {
  const int dm = deg(m);
  while (deg(a) >= dm) a ^= m << (deg(a) - dm);
  return a;
}

/// Trial division by every polynomial of degree 1..deg/2.
inline bool irreducible(std::uint64_t p) {
  const int d = deg(p);
  if (d < 1) return false;
  for (std::uint64_t q = 2; deg(q) <= d / 2; ++q) {
    if (mod(p, q) == 0) return false;
  }
  return true;
}

/// Monic irreducible factors with multiplicity, smallest first.
inline std::vector<std::pair<std::uint64_t, int>> factor(std::uint64_t p) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t q = 2; deg(p) >= 1 && deg(q) <= deg(p); ++q) {
    if (!irreducible(q)) continue;
    int k = 0;
    while (deg(p) >= 1 && mod(p, q) == 0) {
      std::uint64_t quotient = 0;
      std::uint64_t rem = p;
      while (deg(rem) >= deg(q)) {
        const int s = deg(rem) - deg(q);
        quotient ^= std::uint64_t{1} << s;
        rem ^= q << s;
      }
      p = quotient;
      ++k;
    }
    if (k) out.emplace_back(q, k);
  }
  return out;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20260214);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline conic::IntVector random_coords(int n, long bound) {
  conic::IntVector v;
  for (int i = 0; i < n; ++i) v.emplace_back(uniform(-bound, bound));
  return v;
}

}  // namespace brute
