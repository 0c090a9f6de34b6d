#include "ddk/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ddk {

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(std::vector<int> perm, int sign) : perm_(std::move(perm)), sign_(sign) {
  compute_word();
}

GroupElement GroupElement::identity(const RootSystemA& rs) {
  std::vector<int> p(static_cast<std::size_t>(rs.ambient_dim()));
  std::iota(p.begin(), p.end(), 0);
  return GroupElement(std::move(p), 1);
}

GroupElement GroupElement::generator(const RootSystemA& rs, int g) {
  if (g < 0 || g >= rs.num_generators()) throw std::out_of_range("generator index out of range");
  if (rs.is_line()) return GroupElement({0}, -1);
  auto e = identity(rs);
  std::swap(e.perm_[static_cast<std::size_t>(g)], e.perm_[static_cast<std::size_t>(g + 1)]);
  e.compute_word();
  return e;
}

GroupElement GroupElement::from_word(const RootSystemA& rs, std::span<const int> word) {
  auto w = identity(rs);
  for (int g : word) w = w * generator(rs, g);
  return w;
}

GroupElement GroupElement::reflection(const RootSystemA& rs, int root) {
  const Root& r = rs.root(root);
  if (r.is_line()) return GroupElement({0}, -1);
  auto e = identity(rs);
  std::swap(e.perm_[static_cast<std::size_t>(r.i)], e.perm_[static_cast<std::size_t>(r.j)]);
  e.compute_word();
  return e;
}

bool GroupElement::is_identity() const {
  if (sign_ != 1) return false;
  for (std::size_t k = 0; k < perm_.size(); ++k)
    if (perm_[k] != static_cast<int>(k)) return false;
  return true;
}

void GroupElement::compute_word() {
  word_.clear();
  if (perm_.size() == 1) {
    if (sign_ == -1) word_.push_back(0);
    return;
  }
  // Right-multiplying by s_k at a descent shortens w; w s_{k1}...s_{km} = e
  // gives w = s_{km} ... s_{k1}.
  std::vector<int> p = perm_;
  std::vector<int> steps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      if (p[k] > p[k + 1]) {
        std::swap(p[k], p[k + 1]);
        steps.push_back(static_cast<int>(k));
        changed = true;
      }
    }
  }
  word_.assign(steps.rbegin(), steps.rend());
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (perm_.size() != o.perm_.size()) throw std::invalid_argument("group elements of different rank");
  std::vector<int> p(perm_.size());
  for (std::size_t j = 0; j < p.size(); ++j) p[j] = perm_[static_cast<std::size_t>(o.perm_[j])];
  return GroupElement(std::move(p), sign_ * o.sign_);
}

GroupElement GroupElement::inverse() const {
  std::vector<int> p(perm_.size());
  for (std::size_t j = 0; j < p.size(); ++j) p[static_cast<std::size_t>(perm_[j])] = static_cast<int>(j);
  return GroupElement(std::move(p), sign_);
}

Point GroupElement::apply(const Point& x) const {
  Point out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j)
    out[static_cast<std::size_t>(perm_[j])] = sign_ == 1 ? x[j] : -x[j];
  return out;
}

std::vector<double> GroupElement::apply(std::span<const double> x) const {
  std::vector<double> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) out[static_cast<std::size_t>(perm_[j])] = sign_ * x[j];
  return out;
}

std::pair<int, int> GroupElement::act_on_root(const RootSystemA& rs, int root) const {
  const Root& r = rs.root(root);
  if (r.is_line()) return {0, sign_};
  int a = perm_[static_cast<std::size_t>(r.i)];
  int b = perm_[static_cast<std::size_t>(r.j)];
  if (a < b) return {rs.root_index(a, b), 1};
  return {rs.root_index(b, a), -1};
}

// ---------------------------------------------------------------------------
// RootSystemA

RootSystemA RootSystemA::line() {
  RootSystemA rs;
  rs.rank_ = 1;
  rs.ambient_ = 1;
  rs.line_ = true;
  rs.roots_ = {Root{0, -1}};
  return rs;
}

RootSystemA RootSystemA::type_a(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("type A rank must be in 1..7");
  RootSystemA rs;
  rs.rank_ = n;
  rs.ambient_ = n + 1;
  rs.line_ = false;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) rs.roots_.push_back(Root{i, j});
  return rs;
}

RootSystemA RootSystemA::from_selector(std::string_view selector, int max_rank) {
  if (selector.size() < 2 || (selector[0] != 'A' && selector[0] != 'a'))
    throw std::invalid_argument("group selector must look like A1..A" + std::to_string(max_rank));
  int n = 0;
  for (char c : selector.substr(1)) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad group selector '" + std::string(selector) + "'");
    n = n * 10 + (c - '0');
    if (n > 100) break;
  }
  if (n < 1 || n > max_rank)
    throw std::invalid_argument("group rank out of range 1.." + std::to_string(max_rank) + ": '" +
                                std::string(selector) + "'");
  return n == 1 ? line() : type_a(n);
}

int RootSystemA::root_index(int i, int j) const {
  if (line_) return (i == 0 && j < 0) ? 0 : -1;
  if (i < 0 || j <= i || j > rank_) return -1;
  // Roots are listed row by row: (0,1),(0,2),...,(0,n),(1,2),...
  int idx = 0;
  for (int a = 0; a < i; ++a) idx += rank_ - a;
  return idx + (j - i - 1);
}

int RootSystemA::simple_root(int g) const {
  if (line_) return 0;
  return root_index(g, g + 1);
}

std::vector<int> RootSystemA::root_vector(int idx) const {
  const Root& r = root(idx);
  std::vector<int> v(static_cast<std::size_t>(ambient_), 0);
  v[static_cast<std::size_t>(r.i)] = 1;
  if (!r.is_line()) v[static_cast<std::size_t>(r.j)] = -1;
  return v;
}

std::string RootSystemA::selector() const { return "A" + std::to_string(rank_); }

RootSystemPtr make_root_system(const RootSystemA& rs) { return std::make_shared<const RootSystemA>(rs); }

// ---------------------------------------------------------------------------
// Multiplicity

Multiplicity::Multiplicity(const RootSystemA& rs, const Rational& k)
    : values_(static_cast<std::size_t>(rs.num_roots()), k) {}

Multiplicity::Multiplicity(const RootSystemA& rs, std::vector<Rational> values) : values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != rs.num_roots())
    throw std::invalid_argument("multiplicity needs one value per positive root");
  // Type A: W acts transitively on roots, so invariance means constant.
  for (const auto& v : values_)
    if (v != values_.front()) throw std::invalid_argument("multiplicity is not W-invariant");
}

bool Multiplicity::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return sgn(v) == 0; });
}

bool Multiplicity::has_polynomial_weight() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rational& v) { return sgn(v) >= 0 && is_integer(v); });
}

// ---------------------------------------------------------------------------
// Free functions

FieldElem pairing(const RootSystemA& rs, int root, const Point& x) {
  const Root& r = rs.root(root);
  if (r.is_line()) return x.at(0);
  return x.at(static_cast<std::size_t>(r.i)) - x.at(static_cast<std::size_t>(r.j));
}

double pairing(const RootSystemA& rs, int root, std::span<const double> x) {
  const Root& r = rs.root(root);
  if (r.is_line()) return x[0];
  return x[static_cast<std::size_t>(r.i)] - x[static_cast<std::size_t>(r.j)];
}

FieldElem dot(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  FieldElem s;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero() && !b[k].is_zero()) s += a[k] * b[k];
  return s;
}

Point reflect(const RootSystemA& rs, int root, const Point& x) {
  if (static_cast<int>(x.size()) != rs.ambient_dim()) throw std::invalid_argument("reflect: dimension mismatch");
  auto alpha = rs.root_vector(root);
  FieldElem c = pairing(rs, root, x) * FieldElem(make_rational(2, rs.root_norm2(root)));
  Point out = x;
  for (std::size_t k = 0; k < out.size(); ++k)
    if (alpha[k] != 0) out[k] -= c * FieldElem(static_cast<long>(alpha[k]));
  return out;
}

double weight_eval(const RootSystemA& rs, const Multiplicity& k, std::span<const double> x) {
  double w = 1.0;
  for (int a = 0; a < rs.num_roots(); ++a) {
    const double e = 2.0 * k.value(a).get_d();
    if (e == 0.0) continue;
    const double p = std::abs(pairing(rs, a, x));
    if (p == 0.0) {
      if (e < 0.0) throw WeightDomainError("weight undefined on a wall for negative multiplicity");
      return 0.0;
    }
    w *= std::pow(p, e);
  }
  return w;
}

double weight_eval(const RootSystemA& rs, const Multiplicity& k, const Point& x) {
  std::vector<double> xd;
  xd.reserve(x.size());
  for (const auto& c : x) xd.push_back(c.approx().real());
  return weight_eval(rs, k, xd);
}

bool chamber_contains(const RootSystemA& rs, std::span<const double> x) {
  for (int a = 0; a < rs.num_roots(); ++a)
    if (!(pairing(rs, a, x) > 0.0)) return false;
  return true;
}

std::vector<GroupElement> enumerate_group(const RootSystemA& rs, int bound) {
  if (rs.rank() > bound)
    throw RankBoundExceeded("group enumeration limited to rank " + std::to_string(bound));
  std::vector<GroupElement> out;
  if (rs.is_line()) {
    out.emplace_back(std::vector<int>{0}, 1);
    out.emplace_back(std::vector<int>{0}, -1);
    return out;
  }
  std::vector<int> p(static_cast<std::size_t>(rs.ambient_dim()));
  std::iota(p.begin(), p.end(), 0);
  do {
    out.emplace_back(p, 1);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool in_subspace(const RootSystemA& rs, const Point& x) {
  if (rs.is_line()) return true;
  FieldElem s;
  for (const auto& c : x) s += c;
  return s.is_zero();
}

}  // namespace ddk
