#pragma once

// Reproducible random inputs for property batteries: small exact scalars,
// sparse polynomials, and directions in V.

#include "ddk/polyring.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace ddk {

/// splitmix64 finalizer; derives independent stream seeds.
std::uint64_t mix_seed(std::uint64_t x);
/// Stream seed for task `index` of `suite` under the run seed.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view suite, std::uint64_t index);

struct ScalarOptions {
  int max_abs = 5;          // numerator bound
  int max_den = 3;          // denominator bound
  bool imaginary = false;   // allow an i component
  bool radicals = false;    // allow sqrt(2), sqrt(3) parts
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }
  int uniform_int(int lo, int hi);
  bool coin(double p = 0.5);

  Rational rational(int max_abs = 5, int max_den = 3);
  FieldElem scalar(const ScalarOptions& opt = {});
  FieldElem nonzero_scalar(const ScalarOptions& opt = {});
  /// Random polynomial with up to max_terms terms of degree <= max_degree.
  Polynomial polynomial(int nvars, int max_degree, int max_terms, const ScalarOptions& opt = {});
  /// Nonzero integer vector in V (sum zero for type A).
  Point direction(const RootSystemA& rs, int max_abs = 3);

 private:
  std::mt19937_64 rng_;
};

}  // namespace ddk
