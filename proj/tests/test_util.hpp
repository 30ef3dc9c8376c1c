#pragma once

#include <random>

#include "ksg/linalg.hpp"

namespace ksg::testutil {

inline Rational rand_rational(std::mt19937_64& gen, int max_abs_num = 12, int max_den = 8) {
  std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return make_rational(num(gen), den(gen));
}

inline QuadExt rand_quadext(std::mt19937_64& gen, long radical = 2) {
  return QuadExt(rand_rational(gen), rand_rational(gen), radical);
}

inline QuadExt rand_nonzero_quadext(std::mt19937_64& gen, long radical = 2) {
  for (;;) {
    QuadExt q = rand_quadext(gen, radical);
    if (!q.is_zero()) return q;
  }
}

// Small-integer rational vector, never zero.
inline Vec rand_rational_ray(std::mt19937_64& gen, int dim, int max_abs = 4) {
  std::uniform_int_distribution<int> entry(-max_abs, max_abs);
  for (;;) {
    Vec v(dim);
    bool nonzero = false;
    for (int i = 0; i < dim; ++i) {
      int e = entry(gen);
      v(i) = QuadExt(e);
      nonzero |= (e != 0);
    }
    if (nonzero) return v;
  }
}

}  // namespace ksg::testutil
