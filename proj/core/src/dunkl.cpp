#include "ddk/dunkl.hpp"

namespace ddk {

DunklContext::DunklContext(RootSystemPtr rs, Multiplicity mult) : system(std::move(rs)), k(std::move(mult)) {
  if (static_cast<int>(k.values().size()) != system->num_roots())
    throw std::invalid_argument("multiplicity does not match the root system");
}

DunklContext::DunklContext(RootSystemPtr rs, const Rational& k_value)
    : DunklContext(rs, Multiplicity(*rs, k_value)) {}

OrthonormalBasis::OrthonormalBasis(std::vector<Point> vectors) : u_(std::move(vectors)) {}

OrthonormalBasis OrthonormalBasis::standard(const RootSystemA& rs) {
  if (rs.is_line()) return OrthonormalBasis({Point{FieldElem::one()}});
  const int n = rs.rank();
  std::vector<Point> u;
  for (int a = 1; a <= n; ++a) {
    FieldElem s = FieldElem::sqrt(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(a + 1)).inv();
    Point v(static_cast<std::size_t>(n + 1));
    for (int j = 0; j < a; ++j) v[static_cast<std::size_t>(j)] = s;
    v[static_cast<std::size_t>(a)] = s * FieldElem(static_cast<long>(-a));
    u.push_back(std::move(v));
  }
  return OrthonormalBasis(std::move(u));
}

OrthonormalBasis OrthonormalBasis::transformed(const OrthonormalBasis& b, const GroupElement& w) {
  std::vector<Point> u;
  for (const auto& v : b.u_) u.push_back(w.apply(v));
  return OrthonormalBasis(std::move(u));
}

OrthonormalBasis OrthonormalBasis::flipped(const OrthonormalBasis& b, const std::vector<int>& signs) {
  std::vector<Point> u = b.u_;
  for (std::size_t a = 0; a < u.size() && a < signs.size(); ++a)
    if (signs[a] < 0)
      for (auto& c : u[a]) c = -c;
  return OrthonormalBasis(std::move(u));
}

bool OrthonormalBasis::is_orthonormal(const RootSystemA& rs) const {
  if (size() != rs.rank()) return false;
  for (int a = 0; a < size(); ++a) {
    if (static_cast<int>(u_[static_cast<std::size_t>(a)].size()) != rs.ambient_dim()) return false;
    if (!in_subspace(rs, u_[static_cast<std::size_t>(a)])) return false;
    for (int b = 0; b < size(); ++b) {
      FieldElem d = dot(u_[static_cast<std::size_t>(a)], u_[static_cast<std::size_t>(b)]);
      if (d != FieldElem(a == b ? 1L : 0L)) return false;
    }
  }
  return true;
}

void require_direction(const RootSystemA& rs, const Point& xi) {
  if (static_cast<int>(xi.size()) != rs.ambient_dim())
    throw PreconditionError("direction has " + std::to_string(xi.size()) + " coordinates, expected " +
                            std::to_string(rs.ambient_dim()));
  if (!in_subspace(rs, xi)) throw PreconditionError("direction is not in V (coordinates must sum to zero)");
}

RationalSection dunkl_apply(const DunklContext& ctx, const Point& xi, const RationalSection& f) {
  const RootSystemA& rs = *ctx.system;
  require_direction(rs, xi);
  RationalSection out = directional_derivative(xi, f);
  for (int a = 0; a < rs.num_roots(); ++a) {
    if (sgn(ctx.k.value(a)) == 0) continue;
    FieldElem c = pairing(rs, a, xi);
    if (c.is_zero()) continue;
    RationalSection dd = divided_difference(a, f);
    if (dd.is_zero()) continue;
    out += dd * (c * FieldElem(ctx.k.value(a)));
  }
  return out;
}

RationalSection drift_apply(const DunklContext& ctx, const Point& xi, const RationalSection& f) {
  const RootSystemA& rs = *ctx.system;
  require_direction(rs, xi);
  RationalSection out = directional_derivative(xi, f);
  if (f.is_zero()) return out;
  for (int a = 0; a < rs.num_roots(); ++a) {
    if (sgn(ctx.k.value(a)) == 0) continue;
    FieldElem c = pairing(rs, a, xi);
    if (c.is_zero()) continue;
    out += f * RationalSection::inverse_root_form(ctx.system, a) * (c * FieldElem(ctx.k.value(a)));
  }
  return out;
}

RationalSection dunkl_laplacian(const DunklContext& ctx, const OrthonormalBasis& basis, const RationalSection& f) {
  RationalSection out(ctx.system);
  for (const auto& u : basis.vectors()) out += dunkl_apply(ctx, u, dunkl_apply(ctx, u, f));
  return out;
}

RationalSection dunkl_laplacian_gram(const DunklContext& ctx, const RationalSection& f) {
  const RootSystemA& rs = *ctx.system;
  const int n = rs.num_generators();
  std::vector<Point> v;
  for (int g = 0; g < n; ++g) {
    Point p;
    for (int c : rs.root_vector(rs.simple_root(g))) p.emplace_back(static_cast<long>(c));
    v.push_back(std::move(p));
  }
  FieldMatrix gram(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      gram(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) =
          dot(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)]);
  FieldMatrix ginv = gram.inverse();
  std::vector<RationalSection> tb;
  for (int b = 0; b < n; ++b) tb.push_back(dunkl_apply(ctx, v[static_cast<std::size_t>(b)], f));
  RationalSection out(ctx.system);
  for (int a = 0; a < n; ++a) {
    RationalSection inner(ctx.system);
    for (int b = 0; b < n; ++b) {
      const FieldElem& c = ginv(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      if (!c.is_zero()) inner += tb[static_cast<std::size_t>(b)] * c;
    }
    out += dunkl_apply(ctx, v[static_cast<std::size_t>(a)], inner);
  }
  return out;
}

RationalSection flat_laplacian(const OrthonormalBasis& basis, const RationalSection& f) {
  RationalSection out(f.system());
  for (const auto& u : basis.vectors()) out += directional_derivative(u, directional_derivative(u, f));
  return out;
}

RationalSection commutator(const DunklContext& ctx, const Point& xi, const Point& eta, const RationalSection& f) {
  return dunkl_apply(ctx, xi, dunkl_apply(ctx, eta, f)) - dunkl_apply(ctx, eta, dunkl_apply(ctx, xi, f));
}

}  // namespace ddk
