#pragma once
#include <cstdint>
#include <cstddef>

namespace curvkit {

// Radical-inverse (van der Corput) in the given prime base.
inline double radical_inverse(uint64_t i, uint32_t base) {
  double inv = 1.0 / base, f = inv, x = 0.0;
  while (i > 0) {
    x += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return x;
}

// Halton point in [0,1)^dim (dim <= 3); `seed` offsets the index so runs with
// different seeds draw different deterministic sequences.
inline void halton_point(uint64_t i, uint64_t seed, int dim, double* out) {
  static const uint32_t primes[3] = {2, 3, 5};
  for (int k = 0; k < dim; ++k) out[k] = radical_inverse(i + seed + 1, primes[k]);
}

}  // namespace curvkit
