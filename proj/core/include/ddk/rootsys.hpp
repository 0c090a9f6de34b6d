#pragma once

// Type-A root systems, the symmetric group acting on ambient coordinates,
// Weyl chambers, multiplicities, and the numeric Heckman-Opdam weight.
//
// Two conventions are supported:
//  * line():     rank 1 on R, single positive root alpha = 1, <alpha,alpha> = 1,
//                W = Z/2 acting by x -> -x.
//  * type_a(n):  ambient R^{n+1}, positive roots e_i - e_j (i < j),
//                <alpha,alpha> = 2, W = S_{n+1} permuting coordinates.

#include "ddk/algebra.hpp"

#include <memory>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace ddk {

/// Coordinates in the ambient space. Directions xi are the same type.
using Point = std::vector<FieldElem>;

/// A positive root e_i - e_j (0-based, i < j), or the line root when j < 0.
struct Root {
  int i = 0;
  int j = -1;
  bool is_line() const { return j < 0; }
  bool operator==(const Root&) const = default;
};

class RootSystemA;

/// Element of W with a reduced word in the simple generators.
/// For type_a, perm is the one-line notation w(0..n); w acts on points by
/// (w x)_{w(j)} = x_j, i.e. w e_j = e_{w(j)}. For the line, perm = {0} and
/// sign = -1 encodes the reflection.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(std::vector<int> perm, int sign);

  static GroupElement identity(const RootSystemA& rs);
  static GroupElement generator(const RootSystemA& rs, int g);
  static GroupElement from_word(const RootSystemA& rs, std::span<const int> word);
  /// The reflection s_alpha for positive root index `root`.
  static GroupElement reflection(const RootSystemA& rs, int root);

  const std::vector<int>& perm() const { return perm_; }
  int sign() const { return sign_; }
  /// Reduced word g_1 ... g_m with w = s_{g_1} ... s_{g_m}.
  const std::vector<int>& word() const { return word_; }
  bool is_identity() const;

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  bool operator==(const GroupElement& o) const { return perm_ == o.perm_ && sign_ == o.sign_; }

  Point apply(const Point& x) const;
  std::vector<double> apply(std::span<const double> x) const;
  /// w(alpha) = sign * alpha', returned as (index of alpha', sign).
  std::pair<int, int> act_on_root(const RootSystemA& rs, int root) const;

 private:
  void compute_word();
  std::vector<int> perm_;
  int sign_ = 1;
  std::vector<int> word_;
};

class RootSystemA {
 public:
  static RootSystemA line();
  static RootSystemA type_a(int n);
  /// `A1` maps to line(); `A2`..`A<max_rank>` map to type_a(n).
  static RootSystemA from_selector(std::string_view selector, int max_rank = 6);

  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_; }
  bool is_line() const { return line_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_generators() const { return rank_; }
  const std::vector<Root>& positive_roots() const { return roots_; }
  const Root& root(int idx) const { return roots_.at(static_cast<std::size_t>(idx)); }
  /// Index of e_i - e_j for i < j; -1 when absent.
  int root_index(int i, int j) const;
  /// Root index of the simple root for generator g.
  int simple_root(int g) const;
  /// Root as an ambient vector of integers.
  std::vector<int> root_vector(int idx) const;
  int root_norm2(int) const { return line_ ? 1 : 2; }
  std::string selector() const;

  bool operator==(const RootSystemA& o) const {
    return rank_ == o.rank_ && line_ == o.line_;
  }

 private:
  int rank_ = 1;
  int ambient_ = 1;
  bool line_ = true;
  std::vector<Root> roots_;
};

using RootSystemPtr = std::shared_ptr<const RootSystemA>;
RootSystemPtr make_root_system(const RootSystemA& rs);

/// W-invariant multiplicity function with rational values. Type A has a
/// single root orbit, so every positive root carries the same value.
class Multiplicity {
 public:
  Multiplicity() = default;
  Multiplicity(const RootSystemA& rs, const Rational& k);
  /// Per-root values; throws std::invalid_argument unless W-invariant.
  Multiplicity(const RootSystemA& rs, std::vector<Rational> values);

  const Rational& value(int root) const { return values_.at(static_cast<std::size_t>(root)); }
  const std::vector<Rational>& values() const { return values_; }
  bool is_zero() const;
  /// True when every 2k(alpha) is an even nonnegative integer.
  bool has_polynomial_weight() const;

 private:
  std::vector<Rational> values_;
};

/// Euclidean pairing of root `root` with x.
FieldElem pairing(const RootSystemA& rs, int root, const Point& x);
double pairing(const RootSystemA& rs, int root, std::span<const double> x);
/// General ambient inner product.
FieldElem dot(const Point& a, const Point& b);

/// s_alpha(x) = x - 2<alpha,x>/<alpha,alpha> alpha.
Point reflect(const RootSystemA& rs, int root, const Point& x);

/// An operation's documented precondition does not hold for its inputs.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class WeightDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// delta_k(x) = prod |<alpha,x>|^{2k(alpha)} in double precision.
/// Throws WeightDomainError when x lies on a wall with 2k(alpha) < 0.
double weight_eval(const RootSystemA& rs, const Multiplicity& k, std::span<const double> x);
double weight_eval(const RootSystemA& rs, const Multiplicity& k, const Point& x);

/// Strictly inside the fundamental chamber: <alpha,x> > 0 for all positive roots.
bool chamber_contains(const RootSystemA& rs, std::span<const double> x);

class RankBoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// All elements of W with reduced words; throws RankBoundExceeded when
/// rank > bound.
std::vector<GroupElement> enumerate_group(const RootSystemA& rs, int bound = 6);

/// True when x sums to zero (trivially true on the line).
bool in_subspace(const RootSystemA& rs, const Point& x);

}  // namespace ddk
