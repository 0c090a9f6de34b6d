#include "ddk/polyring.hpp"

#include <algorithm>
#include <sstream>

namespace ddk {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument("too many variables for Monomial");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 255) throw std::out_of_range("monomial exponent out of range");
    bits_ |= static_cast<std::uint64_t>(exponents[i]) << (8 * i);
  }
}

Monomial Monomial::variable(int i, int power) {
  if (i < 0 || i >= kMaxVars || power < 0 || power > 255) throw std::out_of_range("bad monomial variable");
  return from_bits(static_cast<std::uint64_t>(power) << (8 * i));
}

int Monomial::degree() const {
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) d += exponent(i);
  return d;
}

Monomial Monomial::with_exponent(int i, int e) const {
  std::uint64_t mask = std::uint64_t{0xff} << (8 * i);
  return from_bits((bits_ & ~mask) | (static_cast<std::uint64_t>(e) << (8 * i)));
}

std::vector<int> Monomial::exponents(int nvars) const {
  std::vector<int> e(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) e[static_cast<std::size_t>(i)] = exponent(i);
  return e;
}

// ---------------------------------------------------------------------------
// PolyAccumulator

void PolyAccumulator::add(Monomial m, const FieldElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc_.try_emplace(m.bits(), c);
  if (!inserted) it->second += c;
}

void PolyAccumulator::add(const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) add(m, c);
}

void PolyAccumulator::add_scaled(const Polynomial& p, const FieldElem& s) {
  if (s.is_zero()) return;
  for (const auto& [m, c] : p.terms()) add(m, c * s);
}

Polynomial PolyAccumulator::finish() {
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc_.size());
  for (auto& [bits, c] : acc_)
    if (!c.is_zero()) terms.emplace_back(Monomial::from_bits(bits), std::move(c));
  acc_.clear();
  return Polynomial(nvars_, std::move(terms));
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > Monomial::kMaxVars) throw std::invalid_argument("unsupported variable count");
}

Polynomial::Polynomial(int nvars, std::vector<Term> terms) : Polynomial(nvars) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().first == t.first) {
      terms_.back().second += t.second;
      if (terms_.back().second.is_zero()) terms_.pop_back();
    } else if (!t.second.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(int nvars, const FieldElem& c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.emplace_back(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index out of range");
  Polynomial p(nvars);
  p.terms_.emplace_back(Monomial::variable(i), FieldElem::one());
  return p;
}

Polynomial Polynomial::linear(int nvars, std::span<const FieldElem> coeffs) {
  std::vector<Term> t;
  for (int i = 0; i < nvars && i < static_cast<int>(coeffs.size()); ++i)
    t.emplace_back(Monomial::variable(i), coeffs[static_cast<std::size_t>(i)]);
  return Polynomial(nvars, std::move(t));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.bits() == 0);
}

FieldElem Polynomial::constant_term() const {
  if (!terms_.empty() && terms_[0].first.bits() == 0) return terms_[0].second;
  return {};
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_[0].first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.first.degree() == d; });
}

FieldElem Polynomial::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial x) { return t.first < x; });
  if (it != terms_.end() && it->first == m) return it->second;
  return {};
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

namespace {

template <bool Subtract>
std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      if constexpr (Subtract)
        out.emplace_back(b[j].first, -b[j].second);
      else
        out.push_back(b[j]);
      ++j;
    } else {
      FieldElem c = a[i].second;
      if constexpr (Subtract)
        c -= b[j].second;
      else
        c += b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

void check_same_vars(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomials over different variable counts");
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_vars(*this, o);
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  terms_ = merge_terms<false>(terms_, o.terms_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_vars(*this, o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms<true>(terms_, o.terms_);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_vars(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars());
  if (a.degree() + b.degree() > 255) throw std::overflow_error("polynomial degree exceeds 255");
  if (b.terms_.size() == 1) {
    // Shifting every monomial by the same amount keeps the order.
    Polynomial out(a.nvars());
    out.terms_.reserve(a.terms_.size());
    const auto& [mb, cb] = b.terms_[0];
    for (const auto& [ma, ca] : a.terms_) out.terms_.emplace_back(ma * mb, ca * cb);
    return out;
  }
  if (a.terms_.size() == 1) return b * a;
  PolyAccumulator acc(a.nvars());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) acc.add(ma * mb, ca * cb);
  return acc.finish();
}

Polynomial operator*(const Polynomial& a, const FieldElem& s) {
  Polynomial out(a.nvars());
  if (s.is_zero()) return out;
  out.terms_.reserve(a.terms_.size());
  for (const auto& [m, c] : a.terms_) out.terms_.emplace_back(m, c * s);
  return out;
}

Polynomial Polynomial::derivative(int i) const {
  Polynomial out(nvars_);
  const std::uint64_t unit = std::uint64_t{1} << (8 * i);
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(i);
    if (e == 0) continue;
    out.terms_.emplace_back(Monomial::from_bits(m.bits() - unit), c * FieldElem(static_cast<long>(e)));
  }
  // Subtracting the same unit from every surviving monomial preserves order.
  return out;
}

Polynomial Polynomial::directional_derivative(std::span<const FieldElem> xi) const {
  Polynomial out(nvars_);
  for (int i = 0; i < nvars_ && i < static_cast<int>(xi.size()); ++i) {
    const FieldElem& c = xi[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    out += derivative(i) * c;
  }
  return out;
}

Polynomial Polynomial::conj() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.second = t.second.conj();
  return out;
}

Polynomial Polynomial::permute_variables(std::span<const int> target, int sign) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    std::uint64_t bits = 0;
    for (int j = 0; j < nvars_; ++j)
      bits |= static_cast<std::uint64_t>(m.exponent(j)) << (8 * target[static_cast<std::size_t>(j)]);
    const bool flip = sign < 0 && (m.degree() % 2 == 1);
    t.emplace_back(Monomial::from_bits(bits), flip ? -c : c);
  }
  return Polynomial(nvars_, std::move(t));
}

Polynomial Polynomial::times_root_form(const Root& r) const {
  Polynomial out(nvars_);
  if (is_zero()) return out;
  const Monomial xi = Monomial::variable(r.i);
  std::vector<Term> a;
  a.reserve(terms_.size());
  for (const auto& [m, c] : terms_) a.emplace_back(m * xi, c);
  if (r.is_line()) {
    out.terms_ = std::move(a);
    return out;
  }
  const Monomial xj = Monomial::variable(r.j);
  std::vector<Term> b;
  b.reserve(terms_.size());
  for (const auto& [m, c] : terms_) b.emplace_back(m * xj, c);
  out.terms_ = merge_terms<true>(a, b);
  return out;
}

std::optional<Polynomial> Polynomial::divide_by_root_form(const Root& r) const {
  if (is_zero()) return Polynomial(nvars_);
  const std::uint64_t unit_i = std::uint64_t{1} << (8 * r.i);
  if (r.is_line()) {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m.exponent(r.i) == 0) return std::nullopt;
      out.terms_.emplace_back(Monomial::from_bits(m.bits() - unit_i), c);
    }
    return out;
  }
  // x_i^a x_j^b m = (x_i - x_j) * m x_j^b sum_{t<a} x_i^{a-1-t} x_j^t + m x_j^{a+b};
  // divisible iff the remainder p|_{x_i = x_j} vanishes.
  PolyAccumulator rem(nvars_);
  for (const auto& [m, c] : terms_) {
    int a = m.exponent(r.i);
    int b = m.exponent(r.j);
    rem.add(m.with_exponent(r.i, 0).with_exponent(r.j, a + b), c);
  }
  if (!rem.finish().is_zero()) return std::nullopt;
  PolyAccumulator q(nvars_);
  for (const auto& [m, c] : terms_) {
    int a = m.exponent(r.i);
    int b = m.exponent(r.j);
    Monomial base = m.with_exponent(r.i, 0).with_exponent(r.j, 0);
    for (int t = 0; t < a; ++t) q.add(base.with_exponent(r.i, a - 1 - t).with_exponent(r.j, b + t), c);
  }
  return q.finish();
}

FieldElem Polynomial::evaluate(std::span<const FieldElem> x) const {
  if (static_cast<int>(x.size()) < nvars_) throw std::invalid_argument("evaluate: point too short");
  std::vector<std::vector<FieldElem>> powers(static_cast<std::size_t>(nvars_));
  FieldElem s;
  for (const auto& [m, c] : terms_) {
    FieldElem v = c;
    for (int i = 0; i < nvars_; ++i) {
      int e = m.exponent(i);
      if (e == 0) continue;
      auto& pw = powers[static_cast<std::size_t>(i)];
      if (pw.empty()) pw.push_back(FieldElem::one());
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * x[static_cast<std::size_t>(i)]);
      v *= pw[static_cast<std::size_t>(e)];
    }
    s += v;
  }
  return s;
}

std::complex<double> Polynomial::evaluate_approx(std::span<const double> x) const {
  std::complex<double> s{0.0, 0.0};
  for (const auto& [m, c] : terms_) {
    double v = 1.0;
    for (int i = 0; i < nvars_; ++i) {
      int e = m.exponent(i);
      for (int k = 0; k < e; ++k) v *= x[static_cast<std::size_t>(i)];
    }
    s += c.approx() * v;
  }
  return s;
}

namespace {

bool single_summand(const std::string& s) {
  return s.find(" + ", 1) == std::string::npos && s.find(" - ", 1) == std::string::npos;
}

std::string render_monomial(Monomial m, int nvars) {
  std::string out;
  for (int i = 0; i < nvars; ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [this](const Term* a, const Term* b) {
    int da = a->first.degree();
    int db = b->first.degree();
    if (da != db) return da > db;
    return a->first.exponents(nvars_) > b->first.exponents(nvars_);
  });
  std::ostringstream os;
  bool first = true;
  for (const Term* t : order) {
    std::string mono = render_monomial(t->first, nvars_);
    std::string coef = t->second.to_string();
    bool neg = false;
    std::string body;
    if (single_summand(coef)) {
      if (coef[0] == '-') {
        neg = true;
        coef.erase(0, 1);
      }
      if (mono.empty())
        body = coef;
      else if (coef == "1")
        body = mono;
      else
        body = coef + "*" + mono;
    } else {
      body = mono.empty() ? "(" + coef + ")" : "(" + coef + ")*" + mono;
    }
    if (first)
      os << (neg ? "-" : "") << body;
    else
      os << (neg ? " - " : " + ") << body;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RationalSection

RationalSection::RationalSection(RootSystemPtr rs)
    : rs_(std::move(rs)),
      num_(rs_->ambient_dim()),
      den_(static_cast<std::size_t>(rs_->num_roots()), 0) {}

RationalSection::RationalSection(RootSystemPtr rs, Polynomial num)
    : rs_(std::move(rs)), num_(std::move(num)), den_(static_cast<std::size_t>(rs_->num_roots()), 0) {
  if (num_.nvars() != rs_->ambient_dim()) throw std::invalid_argument("section numerator has wrong variable count");
}

RationalSection::RationalSection(RootSystemPtr rs, Polynomial num, std::vector<int> den)
    : rs_(std::move(rs)), num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != rs_->ambient_dim()) throw std::invalid_argument("section numerator has wrong variable count");
  if (static_cast<int>(den_.size()) != rs_->num_roots()) throw std::invalid_argument("section denominator size mismatch");
  for (int e : den_)
    if (e < 0) throw std::invalid_argument("negative denominator exponent");
  normalize();
}

RationalSection RationalSection::constant(RootSystemPtr rs, const FieldElem& c) {
  int n = rs->ambient_dim();
  return RationalSection(std::move(rs), Polynomial::constant(n, c));
}

RationalSection RationalSection::variable(RootSystemPtr rs, int i) {
  int n = rs->ambient_dim();
  return RationalSection(std::move(rs), Polynomial::variable(n, i));
}

RationalSection RationalSection::inverse_root_form(RootSystemPtr rs, int root, int power) {
  std::vector<int> den(static_cast<std::size_t>(rs->num_roots()), 0);
  den.at(static_cast<std::size_t>(root)) = power;
  int n = rs->ambient_dim();
  return RationalSection(std::move(rs), Polynomial::constant(n, FieldElem::one()), std::move(den));
}

bool RationalSection::is_polynomial() const {
  return std::all_of(den_.begin(), den_.end(), [](int e) { return e == 0; });
}

int RationalSection::pole_order() const {
  int s = 0;
  for (int e : den_) s += e;
  return s;
}

void RationalSection::normalize() {
  if (num_.is_zero()) {
    std::fill(den_.begin(), den_.end(), 0);
    return;
  }
  for (std::size_t a = 0; a < den_.size(); ++a) {
    while (den_[a] > 0) {
      auto q = num_.divide_by_root_form(rs_->root(static_cast<int>(a)));
      if (!q) break;
      num_ = std::move(*q);
      --den_[a];
    }
  }
}

Polynomial times_root_forms(const RootSystemA& rs, Polynomial p, std::span<const int> exps) {
  for (std::size_t a = 0; a < exps.size(); ++a)
    for (int e = 0; e < exps[a]; ++e) p = p.times_root_form(rs.root(static_cast<int>(a)));
  return p;
}

RationalSection RationalSection::operator-() const {
  RationalSection out = *this;
  out.num_ = -out.num_;
  return out;
}

namespace {

const RootSystemPtr& pick_system(const RationalSection& a, const RationalSection& b) {
  if (a.system()) return a.system();
  if (b.system()) return b.system();
  throw std::invalid_argument("operation on sections without a root system");
}

template <bool Subtract>
RationalSection add_sections(const RationalSection& a, const RationalSection& b) {
  const RootSystemPtr& rs = pick_system(a, b);
  if (a.is_zero()) return Subtract ? -b : b;
  if (b.is_zero()) return a;
  if (a.den() == b.den()) {
    Polynomial n = Subtract ? a.num() - b.num() : a.num() + b.num();
    return RationalSection(rs, std::move(n), a.den());
  }
  std::vector<int> lcm(a.den().size());
  std::vector<int> ea(a.den().size());
  std::vector<int> eb(a.den().size());
  for (std::size_t k = 0; k < lcm.size(); ++k) {
    lcm[k] = std::max(a.den()[k], b.den()[k]);
    ea[k] = lcm[k] - a.den()[k];
    eb[k] = lcm[k] - b.den()[k];
  }
  Polynomial na = times_root_forms(*rs, a.num(), ea);
  Polynomial nb = times_root_forms(*rs, b.num(), eb);
  return RationalSection(rs, Subtract ? na - nb : na + nb, std::move(lcm));
}

}  // namespace

RationalSection operator+(const RationalSection& a, const RationalSection& b) { return add_sections<false>(a, b); }

RationalSection operator-(const RationalSection& a, const RationalSection& b) { return add_sections<true>(a, b); }

RationalSection operator*(const RationalSection& a, const RationalSection& b) {
  const RootSystemPtr& rs = pick_system(a, b);
  if (a.is_zero() || b.is_zero()) return RationalSection(rs);
  std::vector<int> den(a.den().size());
  for (std::size_t k = 0; k < den.size(); ++k) den[k] = a.den()[k] + b.den()[k];
  return RationalSection(rs, a.num() * b.num(), std::move(den));
}

RationalSection operator*(const RationalSection& a, const FieldElem& s) {
  if (s.is_zero()) return RationalSection(a.system());
  RationalSection out = a;
  out.num_ = a.num_ * s;
  return out;
}

RationalSection RationalSection::conj() const {
  RationalSection out = *this;
  out.num_ = num_.conj();
  return out;
}

std::string RationalSection::to_string() const {
  if (is_polynomial()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::vector<std::string> factors;
  for (std::size_t a = 0; a < den_.size(); ++a) {
    if (den_[a] == 0) continue;
    const Root& r = rs_->root(static_cast<int>(a));
    std::string f = r.is_line() ? "x" + std::to_string(r.i + 1)
                                : "(x" + std::to_string(r.i + 1) + " - x" + std::to_string(r.j + 1) + ")";
    if (den_[a] > 1) f += "^" + std::to_string(den_[a]);
    factors.push_back(f);
  }
  std::string d;
  for (std::size_t k = 0; k < factors.size(); ++k) d += (k ? "*" : "") + factors[k];
  if (factors.size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

// ---------------------------------------------------------------------------
// Operators

RationalSection directional_derivative(std::span<const FieldElem> xi, const RationalSection& f) {
  const RootSystemPtr& rs = f.system();
  if (f.is_polynomial()) return RationalSection(rs, f.num().directional_derivative(xi));
  // d(a / prod l^d) = [da * prod_S l - a * sum_b d_b <b,xi> prod_{S\b} l] / (D + 1_S)
  const auto& den = f.den();
  std::vector<int> support(den.size(), 0);
  for (std::size_t k = 0; k < den.size(); ++k) support[k] = den[k] > 0 ? 1 : 0;
  Polynomial numer = times_root_forms(*rs, f.num().directional_derivative(xi), support);
  Point xiv(xi.begin(), xi.end());
  for (std::size_t b = 0; b < den.size(); ++b) {
    if (den[b] == 0) continue;
    FieldElem c = pairing(*rs, static_cast<int>(b), xiv);
    if (c.is_zero()) continue;
    std::vector<int> others = support;
    others[b] = 0;
    numer -= times_root_forms(*rs, f.num(), others) * (c * FieldElem(static_cast<long>(den[b])));
  }
  std::vector<int> newden(den.size());
  for (std::size_t k = 0; k < den.size(); ++k) newden[k] = den[k] + support[k];
  return RationalSection(rs, std::move(numer), std::move(newden));
}

RationalSection compose_group(const GroupElement& w, const RationalSection& f) {
  const RootSystemPtr& rs = f.system();
  if (f.is_zero() || w.is_identity()) return f;
  GroupElement winv = w.inverse();
  // (w x)_i = sign * x_{w^{-1}(i)}
  Polynomial num = f.num().permute_variables(winv.perm(), w.sign());
  std::vector<int> den(f.den().size(), 0);
  int sign = 1;
  for (std::size_t a = 0; a < f.den().size(); ++a) {
    int d = f.den()[a];
    if (d == 0) continue;
    // <alpha, w x> = <w^{-1} alpha, x> = s * <beta, x>
    auto [beta, s] = winv.act_on_root(*rs, static_cast<int>(a));
    den[static_cast<std::size_t>(beta)] = d;
    if (s < 0 && d % 2 == 1) sign = -sign;
  }
  if (sign < 0) num = -num;
  return RationalSection(rs, std::move(num), std::move(den));
}

RationalSection divided_difference(int root, const RationalSection& f) {
  const RootSystemPtr& rs = f.system();
  RationalSection diff = f - compose_group(GroupElement::reflection(*rs, root), f);
  if (diff.is_zero()) return diff;
  std::vector<int> den = diff.den();
  den.at(static_cast<std::size_t>(root)) += 1;
  return RationalSection(rs, diff.num(), std::move(den));
}

FieldElem evaluate(const RationalSection& f, std::span<const FieldElem> x) {
  const RootSystemPtr& rs = f.system();
  Point xp(x.begin(), x.end());
  FieldElem d = FieldElem::one();
  for (std::size_t a = 0; a < f.den().size(); ++a) {
    int e = f.den()[a];
    if (e == 0) continue;
    FieldElem l = pairing(*rs, static_cast<int>(a), xp);
    if (l.is_zero()) throw PoleError("evaluation at a pole of " + f.to_string());
    for (int k = 0; k < e; ++k) d *= l;
  }
  return f.num().evaluate(x) * d.inv();
}

std::complex<double> evaluate_approx(const RationalSection& f, std::span<const double> x) {
  const RootSystemPtr& rs = f.system();
  double d = 1.0;
  for (std::size_t a = 0; a < f.den().size(); ++a) {
    int e = f.den()[a];
    if (e == 0) continue;
    double l = pairing(*rs, static_cast<int>(a), x);
    if (l == 0.0) throw PoleError("evaluation at a pole of " + f.to_string());
    for (int k = 0; k < e; ++k) d *= l;
  }
  return f.num().evaluate_approx(x) / d;
}

}  // namespace ddk
