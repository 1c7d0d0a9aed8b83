#pragma once

#include <vector>

#include "hecke/eltrans/quot.hpp"

namespace hecke {

template <class F>
struct TorsionShape {
  int max_degree = 6;
  int max_points = 3;
  int max_generators = 2;  // per point
  int max_order = 3;
  bool allow_infinity = true;
  bool reduced = false;  // only order-1 generators, one per point
};

/// Random nonzero torsion module over V with degree at most shape.max_degree.
template <class F>
TorsionModule<F> random_torsion(const Bundle<F>& V, Rng& rng, const TorsionShape<F>& shape) {
  const F& f = V.field;
  const size_t r = V.rank();
  while (true) {
    TorsionModule<F> t{V, {}};
    const int npts = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(shape.max_points)));
    std::vector<CurvePoint<F>> pts;
    for (int i = 0; i < npts; ++i) {
      CurvePoint<F> x = (shape.allow_infinity && rng.below(5) == 0) ? CurvePoint<F>::infinity(f)
                                                                     : CurvePoint<F>::finite(f.random(rng));
      if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
    }
    for (const auto& x : pts) {
      const int ng = shape.reduced ? 1 : 1 + static_cast<int>(rng.below(static_cast<uint64_t>(shape.max_generators)));
      for (int g = 0; g < ng; ++g) {
        const int k = shape.reduced ? 1 : 1 + static_cast<int>(rng.below(static_cast<uint64_t>(shape.max_order)));
        std::vector<Poly<F>> numer;
        for (size_t i = 0; i < r; ++i) numer.push_back(random_poly(f, rng, k - 1));
        t.add(make_part(x, k, std::move(numer)));
      }
    }
    if (t.parts.empty()) continue;
    const int d = torsion_degree(t);
    if (d >= 1 && d <= shape.max_degree) return t;
  }
}

}  // namespace hecke
