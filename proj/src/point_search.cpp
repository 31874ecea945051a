#include "conic/point_search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "conic/errors.hpp"

namespace conic {

namespace {

struct CompiledTerm {
  Gf2Poly coeff;
  unsigned i;
  unsigned j;
};

// Equations lowered to raw representatives so the inner loop touches no
// shared_ptr reference counts.
struct CompiledSystem {
  Gf2Poly modulus;
  std::uint64_t size = 0;
  unsigned max_x = 0;
  unsigned max_y = 0;
  std::vector<std::vector<CompiledTerm>> equations;
};

CompiledSystem compile(const PointSystem& system) {
  CompiledSystem out;
  out.modulus = system.field->modulus();
  out.size = system.field->size();
  for (const auto& eq : system.equations) {
    std::vector<CompiledTerm> terms;
    for (const auto& [m, c] : eq.terms()) {
      if (!c.field()->same_as(*system.field)) throw FieldMismatchError();
      terms.push_back({c.value(), m.x, m.y});
      out.max_x = std::max(out.max_x, m.x);
      out.max_y = std::max(out.max_y, m.y);
    }
    out.equations.push_back(std::move(terms));
  }
  return out;
}

void fill_powers(const Gf2Poly& base, unsigned max_exp, const Gf2Poly& modulus,
                 std::vector<Gf2Poly>& out) {
  out.resize(max_exp + 1);
  out[0] = Gf2Poly::one();
  for (unsigned k = 1; k <= max_exp; ++k) out[k] = gf2_mulmod(out[k - 1], base, modulus);
}

bool vanishes(const CompiledSystem& sys, const std::vector<Gf2Poly>& xp, const std::vector<Gf2Poly>& yp) {
  for (const auto& eq : sys.equations) {
    Gf2Poly acc;
    for (const auto& t : eq) {
      acc += gf2_mulmod(t.coeff, gf2_mulmod(xp[t.i], yp[t.j], sys.modulus), sys.modulus);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

void check_size(const CompiledSystem& sys) {
  if (sys.size > (std::uint64_t{1} << 31)) throw CapacityError("point search field too large");
}

std::optional<RationalPoint> make_point(const PointSystem& system, std::uint64_t index,
                                        std::uint64_t q) {
  if (index == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return RationalPoint{system.field, system.field->element(index / q), system.field->element(index % q)};
}

}  // namespace

std::optional<RationalPoint> find_common_zero_serial(const PointSystem& system) {
  const CompiledSystem sys = compile(system);
  check_size(sys);
  const std::uint64_t q = sys.size;
  std::vector<Gf2Poly> xp, yp;
  for (std::uint64_t x = 0; x < q; ++x) {
    fill_powers(Gf2Poly::from_bits(x), sys.max_x, sys.modulus, xp);
    for (std::uint64_t y = 0; y < q; ++y) {
      fill_powers(Gf2Poly::from_bits(y), sys.max_y, sys.modulus, yp);
      if (vanishes(sys, xp, yp)) return make_point(system, x * q + y, q);
    }
  }
  return std::nullopt;
}

std::uint64_t count_common_zeros_serial(const PointSystem& system) {
  const CompiledSystem sys = compile(system);
  check_size(sys);
  const std::uint64_t q = sys.size;
  std::uint64_t count = 0;
  std::vector<Gf2Poly> xp, yp;
  for (std::uint64_t x = 0; x < q; ++x) {
    fill_powers(Gf2Poly::from_bits(x), sys.max_x, sys.modulus, xp);
    for (std::uint64_t y = 0; y < q; ++y) {
      fill_powers(Gf2Poly::from_bits(y), sys.max_y, sys.modulus, yp);
      if (vanishes(sys, xp, yp)) ++count;
    }
  }
  return count;
}

std::optional<RationalPoint> find_common_zero_parallel(const PointSystem& system) {
  const CompiledSystem sys = compile(system);
  check_size(sys);
  const auto q = static_cast<std::int64_t>(sys.size);
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};

#pragma omp parallel
  {
    std::vector<Gf2Poly> xp, yp;
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t x = 0; x < q; ++x) {
      const auto row_start = static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(q);
      if (row_start >= best.load(std::memory_order_relaxed)) continue;
      fill_powers(Gf2Poly::from_bits(static_cast<std::uint64_t>(x)), sys.max_x, sys.modulus, xp);
      for (std::int64_t y = 0; y < q; ++y) {
        fill_powers(Gf2Poly::from_bits(static_cast<std::uint64_t>(y)), sys.max_y, sys.modulus, yp);
        if (!vanishes(sys, xp, yp)) continue;
        const std::uint64_t index = row_start + static_cast<std::uint64_t>(y);
        std::uint64_t current = best.load();
        while (index < current && !best.compare_exchange_weak(current, index)) {
        }
        break;
      }
    }
  }
  return make_point(system, best.load(), sys.size);
}

std::uint64_t count_common_zeros_parallel(const PointSystem& system) {
  const CompiledSystem sys = compile(system);
  check_size(sys);
  const auto q = static_cast<std::int64_t>(sys.size);
  std::uint64_t count = 0;

#pragma omp parallel reduction(+ : count)
  {
    std::vector<Gf2Poly> xp, yp;
#pragma omp for schedule(static)
    for (std::int64_t x = 0; x < q; ++x) {
      fill_powers(Gf2Poly::from_bits(static_cast<std::uint64_t>(x)), sys.max_x, sys.modulus, xp);
      for (std::int64_t y = 0; y < q; ++y) {
        fill_powers(Gf2Poly::from_bits(static_cast<std::uint64_t>(y)), sys.max_y, sys.modulus, yp);
        if (vanishes(sys, xp, yp)) ++count;
      }
    }
  }
  return count;
}

}  // namespace conic
