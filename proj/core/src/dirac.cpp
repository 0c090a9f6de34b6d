#include "ddk/dirac.hpp"

namespace ddk {

DiracContext::DiracContext(DunklContext ctx, Representation rep)
    : DiracContext(ctx, std::move(rep), OrthonormalBasis::standard(*ctx.system)) {}

DiracContext::DiracContext(DunklContext ctx, Representation rep, OrthonormalBasis b)
    : dunkl(std::move(ctx)), gens(dunkl.system->rank()), basis(std::move(b)), rho(std::move(rep)) {
  if (!(*rho.system() == *dunkl.system)) throw std::invalid_argument("representation is for a different group");
  if (!basis.is_orthonormal(*dunkl.system)) throw std::invalid_argument("basis is not orthonormal in V");
}

namespace {

void require_components(const DiracContext& dctx, const VectorField& f) {
  if (static_cast<int>(f.size()) != dctx.components())
    throw std::invalid_argument("field has " + std::to_string(f.size()) + " components, expected " +
                                std::to_string(dctx.components()) + " (spinor " +
                                std::to_string(dctx.gens.dim_spinor()) + " x rep " + std::to_string(dctx.rho.dim()) +
                                ")");
}

// T^rho_xi on every spinor slice.
VectorField twisted_on_slices(const DiracContext& dctx, const Point& xi, const VectorField& f) {
  const int d = dctx.rho.dim();
  VectorField out;
  out.reserve(f.size());
  for (int s = 0; s < dctx.gens.dim_spinor(); ++s) {
    VectorField slice(f.begin() + s * d, f.begin() + (s + 1) * d);
    VectorField t = twisted_dunkl_apply(dctx.dunkl, dctx.rho, xi, slice);
    out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

// (M (x) I_d) F
VectorField spinor_action(const DiracContext& dctx, const FieldMatrix& m, const VectorField& f) {
  return apply_matrix(m.kron(FieldMatrix::identity(static_cast<std::size_t>(dctx.rho.dim()))), f);
}

VectorField dirac_with_basis(const DiracContext& dctx, const OrthonormalBasis& basis, const VectorField& f) {
  require_components(dctx, f);
  VectorField out = zero_field(dctx.dunkl.system, dctx.components());
  for (int a = 0; a < dctx.gens.n(); ++a)
    out = add(out, spinor_action(dctx, dctx.gens.e(a), twisted_on_slices(dctx, basis[a], f)));
  return out;
}

}  // namespace

VectorField dirac_dunkl_apply(const DiracContext& dctx, const VectorField& f) {
  return dirac_with_basis(dctx, dctx.basis, f);
}

VectorField twisted_laplacian(const DiracContext& dctx, const VectorField& f) {
  require_components(dctx, f);
  VectorField out = zero_field(dctx.dunkl.system, dctx.components());
  for (const auto& u : dctx.basis.vectors()) out = add(out, twisted_on_slices(dctx, u, twisted_on_slices(dctx, u, f)));
  return out;
}

VectorField dirac_square_residual(const DiracContext& dctx, const VectorField& f) {
  return add(dirac_dunkl_apply(dctx, dirac_dunkl_apply(dctx, f)), twisted_laplacian(dctx, f));
}

bool SquareDecomposition::consistent() const { return add(anticommutator_part, commutator_part) == residual; }

SquareDecomposition decompose_square(const DiracContext& dctx, const VectorField& f) {
  require_components(dctx, f);
  const int n = dctx.gens.n();
  std::vector<VectorField> t1;
  for (int a = 0; a < n; ++a) t1.push_back(twisted_on_slices(dctx, dctx.basis[a], f));
  SquareDecomposition out;
  out.anticommutator_part = twisted_laplacian(dctx, f);
  out.commutator_part = zero_field(dctx.dunkl.system, dctx.components());
  for (int a = 0; a < n; ++a) {
    const auto& ua = dctx.basis[a];
    VectorField taa = twisted_on_slices(dctx, ua, t1[static_cast<std::size_t>(a)]);
    out.anticommutator_part = add(out.anticommutator_part, spinor_action(dctx, dctx.gens.e(a) * dctx.gens.e(a), taa));
    for (int b = a + 1; b < n; ++b) {
      VectorField comm = sub(twisted_on_slices(dctx, ua, t1[static_cast<std::size_t>(b)]),
                             twisted_on_slices(dctx, dctx.basis[b], t1[static_cast<std::size_t>(a)]));
      out.commutator_part = add(out.commutator_part, spinor_action(dctx, dctx.gens.e(a) * dctx.gens.e(b), comm));
    }
  }
  out.residual = dirac_square_residual(dctx, f);
  return out;
}

namespace {

std::vector<Point> swap_plane(const OrthonormalBasis& b, int a, int c, bool quarter) {
  std::vector<Point> u = b.vectors();
  auto neg = [](Point p) {
    for (auto& x : p) x = -x;
    return p;
  };
  const auto ia = static_cast<std::size_t>(a);
  const auto ic = static_cast<std::size_t>(c);
  if (quarter) {
    Point ua = u[ia];
    u[ia] = u[ic];
    u[ic] = neg(ua);
  } else {
    u[ia] = neg(u[ia]);
    u[ic] = neg(u[ic]);
  }
  return u;
}

}  // namespace

BasisChange plane_rotation_pi(const DiracContext& dctx, int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= dctx.gens.n() || b >= dctx.gens.n())
    throw std::invalid_argument("rotation plane needs two distinct basis indices");
  BasisChange ch{"pi rotation in plane (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")",
                 OrthonormalBasis(swap_plane(dctx.basis, a, b, false)), dctx.gens.e(a) * dctx.gens.e(b)};
  return ch;
}

BasisChange plane_rotation_quarter(const DiracContext& dctx, int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= dctx.gens.n() || b >= dctx.gens.n())
    throw std::invalid_argument("rotation plane needs two distinct basis indices");
  const auto d = static_cast<std::size_t>(dctx.gens.dim_spinor());
  const FieldElem r = FieldElem::sqrt(make_rational(1, 2));
  OrthonormalBasis basis(swap_plane(dctx.basis, a, b, true));
  FieldMatrix eab = dctx.gens.e(a) * dctx.gens.e(b);
  for (int sign : {1, -1}) {
    BasisChange ch{"quarter rotation in plane (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")", basis,
                   (FieldMatrix::identity(d) + eab * FieldElem(static_cast<long>(sign))) * r};
    if (lift_intertwines(dctx, ch)) return ch;
  }
  throw std::logic_error("no exact spin lift found for quarter rotation");
}

bool lift_intertwines(const DiracContext& dctx, const BasisChange& change) {
  const int n = dctx.gens.n();
  FieldMatrix sinv = change.lift.inverse();
  for (int b = 0; b < n; ++b) {
    // f_b = sum_a R_ab e_a with R_ab = <u'_a, u_b>
    FieldMatrix fb(static_cast<std::size_t>(dctx.gens.dim_spinor()), static_cast<std::size_t>(dctx.gens.dim_spinor()));
    for (int a = 0; a < n; ++a) {
      FieldElem r = dot(change.basis[a], dctx.basis[b]);
      if (!r.is_zero()) fb = fb + dctx.gens.e(a) * r;
    }
    if (change.lift * fb * sinv != dctx.gens.e(b)) return false;
  }
  return true;
}

bool basis_invariance_check(const DiracContext& dctx, const VectorField& f, const BasisChange& change) {
  if (!change.basis.is_orthonormal(*dctx.dunkl.system)) return false;
  if (!lift_intertwines(dctx, change)) return false;
  VectorField lhs = dirac_with_basis(dctx, change.basis, f);
  VectorField rhs = spinor_action(dctx, change.lift.inverse(),
                                  dirac_dunkl_apply(dctx, spinor_action(dctx, change.lift, f)));
  return lhs == rhs;
}

}  // namespace ddk
