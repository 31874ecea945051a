#include "conic/bivar_poly.hpp"

namespace conic {

namespace {

FqElement power(const FqElement& base, unsigned e) { return base.pow(e); }

template <class Map>
FqElement evaluate_with(const BivarPoly<FqElement>& p, const FqElement& x, const FqElement& y,
                        Map&& map) {
  if (!x.field()->same_as(*y.field())) throw FieldMismatchError();
  FqElement acc = x.field()->zero();
  for (const auto& [m, c] : p.terms()) acc += map(c) * power(x, m.x) * power(y, m.y);
  return acc;
}

}  // namespace

FqElement poly_eval(const BivarPoly<FqElement>& p, const FqElement& x, const FqElement& y) {
  return evaluate_with(p, x, y, [&](const FqElement& c) -> const FqElement& {
    if (!c.field()->same_as(*x.field())) throw FieldMismatchError();
    return c;
  });
}

FqElement poly_eval(const BivarPoly<FqElement>& p, const FieldEmbedding& embed, const FqElement& x,
                    const FqElement& y) {
  if (!x.field()->same_as(*embed.target())) throw FieldMismatchError();
  return evaluate_with(p, x, y, [&](const FqElement& c) { return embed(c); });
}

BivarPoly<FqElement> poly_reduce_mod_P(const BivarPoly<RingElement>& p, const PrimeAbove2& prime) {
  return p.map_coeffs([&](const RingElement& c) { return prime.residue(c); });
}

}  // namespace conic
