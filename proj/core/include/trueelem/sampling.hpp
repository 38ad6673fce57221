#pragma once

// Seeded random generators for ring elements, matrices in the various
// subgroups and words. Identical seeds give identical streams.

#include <cstdint>
#include <random>
#include <utility>

#include "trueelem/congruence.hpp"

namespace trueelem {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::mt19937_64& engine() { return engine_; }

  long uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }
  /// Ordered pair of distinct indices in 1..n.
  std::pair<int, int> index_pair(int n);

  RingValue value(const RingSpec& spec, long bound);
  /// N * (random value), an element of the ideal.
  RingValue ideal_element(const Ideal& ideal, long bound);

  /// Product of `letters` random elementary matrices e_ij(c), |c| <= bound,
  /// c drawn from the ideal when one is given.
  GroupExpr elementary_word(const RingSpec& spec, int n, int letters, long bound, const Ideal* ideal = nullptr);
  SqMatrix special_linear(const RingSpec& spec, int n, int letters = 6, long bound = 3);

  /// Random element of Omega_n(I) (diagonal mod I, det 1).
  SqMatrix omega_matrix(const RingSpec& spec, int n, const Ideal& ideal);
  /// Random element of Gamma_n(I), built from E(I) generators.
  SqMatrix gamma_matrix(const RingSpec& spec, int n, const Ideal& ideal);
  /// Random element of Delta_n(I): F(I) letters times an element of Gamma_n(I^2).
  SqMatrix delta_matrix(const RingSpec& spec, int n, const Ideal& ideal);
  /// Random nested expression using every node kind. Letters have
  /// coefficients in the ideal when one is given; symbol letters appear only
  /// when `symbols` is set.
  GroupExpr random_expr(const RingSpec& spec, int n, int depth, const Ideal* ideal = nullptr, bool symbols = true);

  /// Random zero-trace matrix with entries in I.
  SlResidueMatrix zero_trace_residue(const Ideal& ideal, int n, long bound = 5);

 private:
  SqMatrix omega_block_integers(int n, const Ideal& ideal);

  std::mt19937_64 engine_;
};

}  // namespace trueelem
