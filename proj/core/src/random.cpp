#include "ddk/random.hpp"

namespace ddk {

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view suite, std::uint64_t index) {
  // FNV-1a over the suite name keeps streams stable across builds.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : suite) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return mix_seed(mix_seed(seed ^ h) + index);
}

int Sampler::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Rational Sampler::rational(int max_abs, int max_den) {
  return make_rational(uniform_int(-max_abs, max_abs), uniform_int(1, max_den));
}

FieldElem Sampler::scalar(const ScalarOptions& opt) {
  FieldElem x(rational(opt.max_abs, opt.max_den));
  if (opt.imaginary && coin(0.4)) x += FieldElem::imag_unit() * FieldElem(rational(opt.max_abs, opt.max_den));
  if (opt.radicals && coin(0.4)) {
    static constexpr std::uint64_t kRadicands[] = {2, 3};
    x += FieldElem::sqrt(kRadicands[uniform_int(0, 1)]) * FieldElem(rational(opt.max_abs, opt.max_den));
  }
  return x;
}

FieldElem Sampler::nonzero_scalar(const ScalarOptions& opt) {
  for (;;) {
    FieldElem x = scalar(opt);
    if (!x.is_zero()) return x;
  }
}

Polynomial Sampler::polynomial(int nvars, int max_degree, int max_terms, const ScalarOptions& opt) {
  std::vector<Polynomial::Term> terms;
  int count = uniform_int(1, max_terms);
  std::vector<int> e(static_cast<std::size_t>(nvars));
  for (int t = 0; t < count; ++t) {
    int deg = uniform_int(0, max_degree);
    std::fill(e.begin(), e.end(), 0);
    for (int d = 0; d < deg; ++d) ++e[static_cast<std::size_t>(uniform_int(0, nvars - 1))];
    terms.emplace_back(Monomial(e), nonzero_scalar(opt));
  }
  return Polynomial(nvars, std::move(terms));
}

Point Sampler::direction(const RootSystemA& rs, int max_abs) {
  const int n = rs.ambient_dim();
  for (;;) {
    Point xi(static_cast<std::size_t>(n));
    long sum = 0;
    bool nonzero = false;
    for (int j = 0; j < n; ++j) {
      long v = uniform_int(-max_abs, max_abs);
      if (!rs.is_line() && j == n - 1) v = -sum;
      sum += v;
      nonzero = nonzero || v != 0;
      xi[static_cast<std::size_t>(j)] = FieldElem(v);
    }
    if (nonzero) return xi;
  }
}

}  // namespace ddk
