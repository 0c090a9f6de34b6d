#pragma once

// Sparse multivariate polynomials over FieldElem and rational sections:
// polynomials divided by monomials in the positive-root linear forms
// <alpha, x>. Sections are closed under every operator in this library.

#include "ddk/algebra.hpp"
#include "ddk/rootsys.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ddk {

/// Exponent vector packed one byte per variable (at most 8 variables,
/// exponents below 256).
class Monomial {
 public:
  static constexpr int kMaxVars = 8;

  constexpr Monomial() = default;
  explicit Monomial(std::span<const int> exponents);
  static constexpr Monomial from_bits(std::uint64_t bits) {
    Monomial m;
    m.bits_ = bits;
    return m;
  }
  static Monomial variable(int i, int power = 1);

  int exponent(int i) const { return static_cast<int>((bits_ >> (8 * i)) & 0xffU); }
  int degree() const;
  std::uint64_t bits() const { return bits_; }
  Monomial with_exponent(int i, int e) const;
  std::vector<int> exponents(int nvars) const;

  /// Product; the caller guarantees no exponent overflows 255.
  Monomial operator*(Monomial o) const { return from_bits(bits_ + o.bits_); }
  auto operator<=>(const Monomial&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

class Polynomial {
 public:
  using Term = std::pair<Monomial, FieldElem>;

  Polynomial() = default;
  explicit Polynomial(int nvars);
  /// Terms may be unsorted and contain duplicates or zeros.
  Polynomial(int nvars, std::vector<Term> terms);

  static Polynomial constant(int nvars, const FieldElem& c);
  static Polynomial variable(int nvars, int i);
  /// sum_i coeffs[i] * x_i
  static Polynomial linear(int nvars, std::span<const FieldElem> coeffs);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  FieldElem constant_term() const;
  int degree() const;
  bool is_homogeneous() const;
  const std::vector<Term>& terms() const { return terms_; }
  FieldElem coefficient(Monomial m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const FieldElem& s);
  friend Polynomial operator*(const FieldElem& s, const Polynomial& a) { return a * s; }
  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  Polynomial derivative(int i) const;
  Polynomial directional_derivative(std::span<const FieldElem> xi) const;
  /// Coefficientwise complex conjugation.
  Polynomial conj() const;
  /// p(x) with x_j replaced by sign * x_{target[j]}.
  Polynomial permute_variables(std::span<const int> target, int sign) const;
  /// Multiply by the root linear form <alpha, x>.
  Polynomial times_root_form(const Root& r) const;
  /// Exact quotient by <alpha, x>, or nullopt when not divisible.
  std::optional<Polynomial> divide_by_root_form(const Root& r) const;

  FieldElem evaluate(std::span<const FieldElem> x) const;
  std::complex<double> evaluate_approx(std::span<const double> x) const;

  /// Graded rendering in the textual polynomial grammar.
  std::string to_string() const;

 private:
  int nvars_ = 0;
  std::vector<Term> terms_;  // sorted by monomial bits, no zero coefficients
};

/// Hash-map accumulator used to build polynomials term by term.
class PolyAccumulator {
 public:
  explicit PolyAccumulator(int nvars) : nvars_(nvars) {}
  void add(Monomial m, const FieldElem& c);
  void add(const Polynomial& p);
  void add_scaled(const Polynomial& p, const FieldElem& s);
  Polynomial finish();

 private:
  int nvars_;
  std::unordered_map<std::uint64_t, FieldElem> acc_;
};

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// num / prod_alpha <alpha,x>^{den[alpha]}, kept normalized: num is not
/// divisible by any root form with positive exponent, and zero has an
/// empty denominator. Normal forms are unique, so == is structural.
class RationalSection {
 public:
  RationalSection() = default;
  explicit RationalSection(RootSystemPtr rs);
  RationalSection(RootSystemPtr rs, Polynomial num);
  RationalSection(RootSystemPtr rs, Polynomial num, std::vector<int> den);

  static RationalSection constant(RootSystemPtr rs, const FieldElem& c);
  static RationalSection variable(RootSystemPtr rs, int i);
  /// 1 / <alpha, x>^power
  static RationalSection inverse_root_form(RootSystemPtr rs, int root, int power = 1);

  const RootSystemPtr& system() const { return rs_; }
  const Polynomial& num() const { return num_; }
  const std::vector<int>& den() const { return den_; }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;
  int pole_order() const;

  RationalSection operator-() const;
  friend RationalSection operator+(const RationalSection& a, const RationalSection& b);
  friend RationalSection operator-(const RationalSection& a, const RationalSection& b);
  friend RationalSection operator*(const RationalSection& a, const RationalSection& b);
  friend RationalSection operator*(const RationalSection& a, const FieldElem& s);
  friend RationalSection operator*(const FieldElem& s, const RationalSection& a) { return a * s; }
  RationalSection& operator+=(const RationalSection& o) { return *this = *this + o; }
  RationalSection& operator-=(const RationalSection& o) { return *this = *this - o; }
  bool operator==(const RationalSection& o) const { return num_ == o.num_ && den_ == o.den_; }

  RationalSection conj() const;
  std::string to_string() const;

 private:
  void normalize();
  RootSystemPtr rs_;
  Polynomial num_;
  std::vector<int> den_;
};

RationalSection directional_derivative(std::span<const FieldElem> xi, const RationalSection& f);
/// x -> f(w x).
RationalSection compose_group(const GroupElement& w, const RationalSection& f);
/// (f - f o s_alpha) / <alpha, x>
RationalSection divided_difference(int root, const RationalSection& f);
/// Exact value; throws PoleError at a pole.
FieldElem evaluate(const RationalSection& f, std::span<const FieldElem> x);
std::complex<double> evaluate_approx(const RationalSection& f, std::span<const double> x);

/// Multiply num by prod <alpha,x>^{exps[alpha]}.
Polynomial times_root_forms(const RootSystemA& rs, Polynomial p, std::span<const int> exps);

}  // namespace ddk
