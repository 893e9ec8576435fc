#pragma once

// Seeded generators for randomized identity checks. Output depends only on the
// seed: the engine is mt19937_64 and values are drawn by plain modular
// reduction, so runs are reproducible across standard libraries.

#include <cstdint>
#include <random>

#include "qwitt/laurent.hpp"
#include "qwitt/report.hpp"

namespace qwitt {

class SampleSource {
 public:
  explicit SampleSource(std::uint64_t seed, QRational q = QRational::q()) : engine_(seed), q_(std::move(q)) {}

  /// Uniform in [lo, hi].
  int uniform(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  /// One of +-1, +-2, +-1/2, q, 1/q.
  QRational coefficient();

  /// Up to `max_terms` terms with exponents in the window; possibly zero.
  LaurentPoly laurent(Window w, int max_terms = 3);
  /// Same, never zero.
  LaurentPoly nonzero_laurent(Window w, int max_terms = 3);
  /// Nonzero, every exponent congruent to `residue` modulo `modulus` (> 0).
  LaurentPoly homogeneous(Window w, int modulus, int residue, int max_terms = 3);

 private:
  std::mt19937_64 engine_;
  QRational q_;
};

}  // namespace qwitt
