#pragma once

// Exact scalars: rationals, Gaussian rationals, and the multi-quadratic
// extension Q(i)[sqrt(d1), sqrt(d2), ...] with radicals adjoined on demand.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ddk {

/// Arbitrary precision rational, always stored in lowest terms with a
/// positive denominator (GMP canonicalizes after every operation).
using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& r);
/// Accepts `p` or `p/q` with optional sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);
bool is_integer(const Rational& r);

/// Largest s with s*s | n, and the squarefree cofactor: n = s^2 * d.
struct SquarefreeSplit {
  std::uint64_t square_root;
  std::uint64_t squarefree;
};
SquarefreeSplit split_squarefree(std::uint64_t n);
bool is_squarefree(std::uint64_t n);

/// a + b*i with rational a, b.
struct Gaussian {
  Rational re;
  Rational im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  Gaussian conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  Gaussian operator-() const { return {-re, -im}; }
  Gaussian operator+(const Gaussian& o) const { return {re + o.re, im + o.im}; }
  Gaussian operator-(const Gaussian& o) const { return {re - o.re, im - o.im}; }
  Gaussian operator*(const Gaussian& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
};

/// Element of Q(i)[sqrt(d) : d squarefree], stored as a sparse map from
/// squarefree radicand to Gaussian coefficient. Radicand 1 is the
/// Gaussian-rational part. Zero coefficients are never stored, so the
/// representation is canonical and == is structural.
class FieldElem {
 public:
  struct Term {
    std::uint64_t radicand;
    Gaussian coeff;
    bool operator==(const Term& o) const {
      return radicand == o.radicand && coeff == o.coeff;
    }
  };

  FieldElem() = default;
  FieldElem(long v);  // NOLINT(google-explicit-constructor)
  FieldElem(const Rational& r);  // NOLINT(google-explicit-constructor)
  FieldElem(const Gaussian& g);  // NOLINT(google-explicit-constructor)

  static FieldElem zero() { return {}; }
  static FieldElem one() { return FieldElem(1L); }
  static FieldElem imag_unit();
  /// sqrt(n) for n >= 0, with square factors pulled out.
  static FieldElem sqrt(std::uint64_t n);
  /// sqrt(r) for rational r >= 0 (sqrt(p/q) = sqrt(p*q)/q).
  static FieldElem sqrt(const Rational& r);
  static FieldElem gaussian(const Rational& re, const Rational& im);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True when no radical other than 1 is present.
  bool is_gaussian_rational() const;
  /// True when the element is a plain rational (no i, no radicals).
  bool is_rational() const;
  Rational rational_part() const;  // coefficient.re of radicand 1
  const std::vector<Term>& terms() const { return terms_; }

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o) { return *this *= o.inv(); }

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    return a * b.inv();
  }
  bool operator==(const FieldElem& o) const { return terms_ == o.terms_; }

  /// Multiplicative inverse by conjugate-product rationalization.
  /// Throws DivisionByZero on zero.
  FieldElem inv() const;
  /// Complex conjugation: i -> -i, radicals fixed.
  FieldElem conj() const;
  /// Flip the sign of every radical whose radicand is divisible by prime p.
  FieldElem radical_conjugate(std::uint64_t prime) const;
  std::complex<double> approx() const;

  /// Rendered in the textual scalar grammar, e.g. `3/2`, `-i`, `sqrt(3)/2`.
  std::string to_string() const;

 private:
  void add_term(std::uint64_t radicand, const Gaussian& c);
  std::vector<Term> terms_;  // sorted by radicand
};

std::ostream& operator<<(std::ostream& os, const FieldElem& x);
std::ostream& operator<<(std::ostream& os, const Gaussian& x);

/// Dense matrix over FieldElem (row-major).
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols);
  FieldMatrix(std::size_t rows, std::size_t cols, std::vector<FieldElem> entries);

  static FieldMatrix identity(std::size_t n);
  static FieldMatrix scalar(std::size_t n, const FieldElem& s);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElem& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  FieldMatrix operator*(const FieldMatrix& o) const;
  FieldMatrix operator+(const FieldMatrix& o) const;
  FieldMatrix operator-(const FieldMatrix& o) const;
  FieldMatrix operator*(const FieldElem& s) const;
  bool operator==(const FieldMatrix& o) const = default;

  /// Conjugate transpose.
  FieldMatrix adjoint() const;
  bool is_zero() const;
  /// Kronecker product this (x) o.
  FieldMatrix kron(const FieldMatrix& o) const;
  /// Inverse by Gauss-Jordan over the field; throws DivisionByZero when singular.
  FieldMatrix inverse() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElem> data_;
};

}  // namespace ddk
