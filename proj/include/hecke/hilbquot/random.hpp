#pragma once

#include <vector>

#include "hecke/hilbquot/zscheme.hpp"

namespace hecke {

struct ZShape {
  int max_length = 6;
  int max_order = 3;
  int max_points = 3;
  bool allow_infinity = true;
  int fiber_stack = 0;  // if > 0, add this many extra length-1 clusters in one fiber
};

/// Random curvilinear subscheme of PV (rank r), resampled until branch points are distinct.
template <class F>
ZScheme<F> random_zscheme(const F& f, size_t r, Rng& rng, const ZShape& shape) {
  if (r == 1 && shape.fiber_stack > 1) throw std::invalid_argument("a rank-1 fiber holds one branch point");
  while (true) {
    std::vector<Cluster<F>> cs;
    int len = 0;
    const int npts = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(shape.max_points)));
    for (int i = 0; i < npts && len < shape.max_length; ++i) {
      const CurvePoint<F> x = (shape.allow_infinity && rng.below(5) == 0) ? CurvePoint<F>::infinity(f)
                                                                          : CurvePoint<F>::finite(f.random(rng));
      const int k = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(std::min(shape.max_order, shape.max_length - len))));
      std::vector<Poly<F>> jet;
      for (size_t c = 0; c < r; ++c) jet.push_back(random_poly(f, rng, k - 1));
      cs.push_back({x, k, jet});
      len += k;
    }
    if (shape.fiber_stack > 0) {
      const CurvePoint<F> x = CurvePoint<F>::finite(f.random(rng));
      for (int i = 0; i < shape.fiber_stack; ++i) {
        std::vector<Poly<F>> jet;
        for (size_t c = 0; c < r; ++c) jet.push_back(Poly<F>::constant(f, f.random(rng)));
        cs.push_back({x, 1, jet});
      }
    }
    try {
      return make_zscheme(std::move(cs));
    } catch (const std::invalid_argument&) {
      continue;  // vanishing jet or repeated branch point
    }
  }
}

}  // namespace hecke
