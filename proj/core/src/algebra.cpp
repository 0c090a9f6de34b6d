#include "ddk/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace ddk {

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s, true)) throw std::invalid_argument("not a rational: '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    return Rational(mpz_class(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("not a rational: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw DivisionByZero("rational with zero denominator: '" + s + "'");
  Rational r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

SquarefreeSplit split_squarefree(std::uint64_t n) {
  if (n == 0) return {0, 0};
  std::uint64_t root = 1;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      root *= p;
    }
  }
  return {root, rest};
}

bool is_squarefree(std::uint64_t n) { return n != 0 && split_squarefree(n).square_root == 1; }

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Gaussian mul_gauss(const Gaussian& a, const Gaussian& b) {
  const bool ar = sgn(a.im) == 0;
  const bool br = sgn(b.im) == 0;
  if (ar && br) return {a.re * b.re, Rational(0)};
  if (ar) return {a.re * b.re, a.re * b.im};
  if (br) return {a.re * b.re, a.im * b.re};
  return a * b;
}

}  // namespace

FieldElem::FieldElem(long v) {
  if (v != 0) terms_.push_back({1, {Rational(v), Rational(0)}});
}

FieldElem::FieldElem(const Rational& r) {
  if (sgn(r) != 0) terms_.push_back({1, {r, Rational(0)}});
}

FieldElem::FieldElem(const Gaussian& g) {
  if (!g.is_zero()) terms_.push_back({1, g});
}

FieldElem FieldElem::imag_unit() { return FieldElem(Gaussian{Rational(0), Rational(1)}); }

FieldElem FieldElem::gaussian(const Rational& re, const Rational& im) {
  return FieldElem(Gaussian{re, im});
}

FieldElem FieldElem::sqrt(std::uint64_t n) {
  FieldElem out;
  if (n == 0) return out;
  auto [root, free] = split_squarefree(n);
  out.terms_.push_back({free, {Rational(static_cast<unsigned long>(root)), Rational(0)}});
  return out;
}

FieldElem FieldElem::sqrt(const Rational& r) {
  if (sgn(r) < 0) throw std::domain_error("sqrt of negative rational");
  if (sgn(r) == 0) return {};
  mpz_class pq = r.get_num() * r.get_den();
  if (!pq.fits_ulong_p()) throw std::overflow_error("radicand too large");
  FieldElem s = FieldElem::sqrt(static_cast<std::uint64_t>(pq.get_ui()));
  return s * FieldElem(Rational(mpz_class(1), r.get_den()));
}

bool FieldElem::is_one() const {
  return terms_.size() == 1 && terms_[0].radicand == 1 && terms_[0].coeff.re == 1 &&
         sgn(terms_[0].coeff.im) == 0;
}

bool FieldElem::is_gaussian_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1);
}

bool FieldElem::is_rational() const {
  return is_gaussian_rational() && (terms_.empty() || sgn(terms_[0].coeff.im) == 0);
}

Rational FieldElem::rational_part() const {
  if (!terms_.empty() && terms_[0].radicand == 1) return terms_[0].coeff.re;
  return Rational(0);
}

void FieldElem::add_term(std::uint64_t radicand, const Gaussian& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), radicand,
                             [](const Term& t, std::uint64_t d) { return t.radicand < d; });
  if (it != terms_.end() && it->radicand == radicand) {
    it->coeff.re += c.re;
    it->coeff.im += c.im;
    if (it->coeff.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term{radicand, c});
  }
}

FieldElem FieldElem::operator-() const {
  FieldElem out = *this;
  for (auto& t : out.terms_) {
    t.coeff.re = -t.coeff.re;
    t.coeff.im = -t.coeff.im;
  }
  return out;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  for (const auto& t : o.terms_) add_term(t.radicand, t.coeff);
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  for (const auto& t : o.terms_) add_term(t.radicand, -t.coeff);
  return *this;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  FieldElem out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.terms_.size() == 1 && b.terms_.size() == 1 && a.terms_[0].radicand == 1) {
    out.terms_.push_back({b.terms_[0].radicand, mul_gauss(a.terms_[0].coeff, b.terms_[0].coeff)});
    return out;
  }
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      std::uint64_t g = std::gcd(ta.radicand, tb.radicand);
      std::uint64_t d = (ta.radicand / g) * (tb.radicand / g);
      Gaussian c = mul_gauss(ta.coeff, tb.coeff);
      if (g != 1) {
        Rational gr(static_cast<unsigned long>(g));
        c.re *= gr;
        c.im *= gr;
      }
      out.add_term(d, c);
    }
  }
  return out;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) { return *this = *this * o; }

FieldElem FieldElem::conj() const {
  FieldElem out = *this;
  for (auto& t : out.terms_) t.coeff.im = -t.coeff.im;
  return out;
}

FieldElem FieldElem::radical_conjugate(std::uint64_t prime) const {
  FieldElem out = *this;
  for (auto& t : out.terms_)
    if (t.radicand % prime == 0) t.coeff = -t.coeff;
  return out;
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero field element");
  std::set<std::uint64_t> primes;
  for (const auto& t : terms_)
    for (auto p : prime_factors(t.radicand)) primes.insert(p);
  FieldElem reduced = *this;
  FieldElem numer = FieldElem::one();
  for (auto p : primes) {
    FieldElem c = reduced.radical_conjugate(p);
    numer *= c;
    reduced *= c;
  }
  // reduced is now a nonzero Gaussian rational.
  const Gaussian& g = reduced.terms_.at(0).coeff;
  Rational n2 = g.norm2();
  Gaussian ginv{g.re / n2, -g.im / n2};
  return numer * FieldElem(ginv);
}

std::complex<double> FieldElem::approx() const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& t : terms_) {
    double r = std::sqrt(static_cast<double>(t.radicand));
    acc += std::complex<double>(t.coeff.re.get_d(), t.coeff.im.get_d()) * r;
  }
  return acc;
}

namespace {

// One signed summand: r * [i] * [sqrt(d)].
void render_summand(std::ostringstream& os, const Rational& r, bool imag, std::uint64_t d,
                    bool first) {
  const bool neg = sgn(r) < 0;
  if (first) {
    if (neg) os << '-';
  } else {
    os << (neg ? " - " : " + ");
  }
  mpz_class p = abs(r.get_num());
  const mpz_class& q = r.get_den();
  std::vector<std::string> factors;
  if (p != 1 || (!imag && d == 1)) factors.push_back(p.get_str());
  if (imag) factors.emplace_back("i");
  if (d != 1) factors.push_back("sqrt(" + std::to_string(d) + ")");
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) os << '*';
    os << factors[k];
  }
  if (q != 1) os << '/' << q.get_str();
}

}  // namespace

std::string FieldElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (sgn(t.coeff.re) != 0) {
      render_summand(os, t.coeff.re, false, t.radicand, first);
      first = false;
    }
    if (sgn(t.coeff.im) != 0) {
      render_summand(os, t.coeff.im, true, t.radicand, first);
      first = false;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.to_string(); }

std::ostream& operator<<(std::ostream& os, const Gaussian& x) {
  return os << FieldElem(x).to_string();
}

// ---------------------------------------------------------------------------
// FieldMatrix

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, std::vector<FieldElem> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
}

FieldMatrix FieldMatrix::identity(std::size_t n) { return scalar(n, FieldElem::one()); }

FieldMatrix FieldMatrix::scalar(std::size_t n, const FieldElem& s) {
  FieldMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch in product");
  FieldMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElem& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const FieldElem& b = o(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
  FieldMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += o.data_[k];
  return out;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
  FieldMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= o.data_[k];
  return out;
}

FieldMatrix FieldMatrix::operator*(const FieldElem& s) const {
  FieldMatrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

FieldMatrix FieldMatrix::adjoint() const {
  FieldMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
  return out;
}

bool FieldMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const FieldElem& x) { return x.is_zero(); });
}

FieldMatrix FieldMatrix::kron(const FieldMatrix& o) const {
  FieldMatrix out(rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const FieldElem& a = (*this)(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < o.rows_; ++k)
        for (std::size_t l = 0; l < o.cols_; ++l) out(i * o.rows_ + k, j * o.cols_ + l) = a * o(k, l);
    }
  return out;
}

FieldMatrix FieldMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = rows_;
  FieldMatrix a = *this;
  FieldMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw DivisionByZero("singular matrix");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    FieldElem s = a(col, col).inv();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= s;
      inv(col, j) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      FieldElem f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::string FieldMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).to_string();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace ddk
