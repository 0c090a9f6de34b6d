#include "ddk/calogero.hpp"

#include "ddk/random.hpp"

#include <set>

namespace ddk {

const char* to_string(Variant v) {
  switch (v) {
    case Variant::a2_trivial:
      return "a2_trivial";
    case Variant::a2_sign:
      return "a2_sign";
    case Variant::a2_irrep2d:
      return "a2_irrep2d";
    case Variant::an_trivial:
      return "an_trivial";
    case Variant::an_sign:
      return "an_sign";
    case Variant::an_rep:
      return "an_rep";
  }
  return "?";
}

const std::vector<Variant>& all_variants() {
  static const std::vector<Variant> v{Variant::a2_trivial, Variant::a2_sign, Variant::a2_irrep2d,
                                      Variant::an_trivial, Variant::an_sign, Variant::an_rep};
  return v;
}

Variant parse_variant(std::string_view name) {
  for (Variant v : all_variants())
    if (name == to_string(v)) return v;
  throw std::invalid_argument("unknown variant '" + std::string(name) + "'");
}

ExplicitOperator ExplicitOperator::a2(Variant v, const Rational& k12, const Rational& k23, const Rational& k13) {
  if (v != Variant::a2_trivial && v != Variant::a2_sign && v != Variant::a2_irrep2d)
    throw std::invalid_argument("a2() builds the A2 variants");
  auto rs = make_root_system(RootSystemA::type_a(2));
  std::vector<Rational> k(3);
  k[static_cast<std::size_t>(rs->root_index(0, 1))] = k12;
  k[static_cast<std::size_t>(rs->root_index(1, 2))] = k23;
  k[static_cast<std::size_t>(rs->root_index(0, 2))] = k13;
  return ExplicitOperator{v, rs, std::move(k), 0, 1, std::nullopt};
}

ExplicitOperator ExplicitOperator::an(Variant v, const RootSystemPtr& rs, const Rational& k, int p, int q,
                                      std::optional<Representation> rep) {
  if (v != Variant::an_trivial && v != Variant::an_sign && v != Variant::an_rep)
    throw std::invalid_argument("an() builds the A_n variants");
  if (rs->is_line()) throw std::invalid_argument("A_n variants use ambient coordinates (rank >= 2)");
  if (p == q || p < 0 || q < 0 || p >= rs->ambient_dim() || q >= rs->ambient_dim())
    throw std::invalid_argument("direction e_p - e_q needs distinct in-range p, q");
  if (v == Variant::an_rep && !rep) throw std::invalid_argument("an_rep needs a representation");
  std::vector<Rational> kk(static_cast<std::size_t>(rs->num_roots()), k);
  return ExplicitOperator{v, rs, std::move(kk), p, q, std::move(rep)};
}

int ExplicitOperator::dim() const {
  switch (variant) {
    case Variant::a2_irrep2d:
      return 2;
    case Variant::an_rep:
      return rho->dim();
    default:
      return 1;
  }
}

Representation ExplicitOperator::generic_rep() const {
  switch (variant) {
    case Variant::a2_trivial:
    case Variant::an_trivial:
      return Representation::builtin("trivial", system);
    case Variant::a2_sign:
    case Variant::an_sign:
      return Representation::builtin("sign", system);
    case Variant::a2_irrep2d:
      return Representation::builtin("irrep2d", system);
    case Variant::an_rep:
      return *rho;
  }
  throw std::logic_error("unreachable");
}

namespace {

// p(x) with x_i and x_j exchanged.
Polynomial swap_vars(const Polynomial& p, int i, int j) {
  std::vector<Polynomial::Term> terms;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e = m.exponents(p.nvars());
    std::swap(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(j)]);
    terms.emplace_back(Monomial(e), c);
  }
  return Polynomial(p.nvars(), std::move(terms));
}

// coeff * num / (x_i - x_j)
RationalSection over_difference(const ExplicitOperator& op, int i, int j, const Polynomial& num, const FieldElem& coeff) {
  std::vector<int> den(static_cast<std::size_t>(op.system->num_roots()), 0);
  den[static_cast<std::size_t>(op.system->root_index(i, j))] = 1;
  return RationalSection(op.system, num * coeff, std::move(den));
}

Polynomial d_dx(const Polynomial& p, int i, int j) { return p.derivative(i) - p.derivative(j); }

FieldElem kval(const ExplicitOperator& op, int i, int j) {
  return FieldElem(op.k[static_cast<std::size_t>(op.system->root_index(i, j))]);
}

// T_{e1-e2} for the A2 displays; sigma = +1 (trivial) or -1 (sign).
RationalSection a2_scalar(const ExplicitOperator& op, const Polynomial& f, int sigma) {
  const FieldElem s(static_cast<long>(sigma));
  RationalSection out(op.system, d_dx(f, 0, 1));
  out += over_difference(op, 0, 1, f - swap_vars(f, 0, 1) * s, FieldElem(2L) * kval(op, 0, 1));
  out -= over_difference(op, 1, 2, f - swap_vars(f, 1, 2) * s, kval(op, 1, 2));
  out += over_difference(op, 0, 2, f - swap_vars(f, 0, 2) * s, kval(op, 0, 2));
  return out;
}

VectorField a2_irrep(const ExplicitOperator& op, const Polynomial& phi1, const Polynomial& phi2) {
  const FieldElem half(make_rational(1, 2));
  const FieldElem r3 = FieldElem::sqrt(std::uint64_t{3}) * half;
  const Polynomial a1 = swap_vars(phi1, 0, 1), a2 = swap_vars(phi2, 0, 1);  // (x2,x1,x3)
  const Polynomial b1 = swap_vars(phi1, 1, 2), b2 = swap_vars(phi2, 1, 2);  // (x1,x3,x2)
  const Polynomial c1 = swap_vars(phi1, 0, 2), c2 = swap_vars(phi2, 0, 2);  // (x3,x2,x1)
  const FieldElem k12 = FieldElem(2L) * kval(op, 0, 1);
  const FieldElem k23 = kval(op, 1, 2);
  const FieldElem k13 = kval(op, 0, 2);

  RationalSection t1(op.system, d_dx(phi1, 0, 1));
  t1 += over_difference(op, 0, 1, phi1 - a1, k12);
  t1 -= over_difference(op, 1, 2, phi1 + b1 * half - b2 * r3, k23);
  t1 += over_difference(op, 0, 2, phi1 + c1 * half + c2 * r3, k13);

  RationalSection t2(op.system, d_dx(phi2, 0, 1));
  t2 += over_difference(op, 0, 1, phi2 + a2, k12);
  t2 -= over_difference(op, 1, 2, phi2 - b1 * r3 - b2 * half, k23);
  t2 += over_difference(op, 0, 2, phi2 + c1 * r3 - c2 * half, k13);
  return {t1, t2};
}

// <e_i - e_j, e_p - e_q>
long kronecker_pairing(int i, int j, int p, int q) {
  return (i == p) - (i == q) - (j == p) + (j == q);
}

VectorField an_general(const ExplicitOperator& op, const std::vector<Polynomial>& phi) {
  const int d = static_cast<int>(phi.size());
  const int amb = op.system->ambient_dim();
  VectorField out;
  for (const auto& c : phi) out.emplace_back(op.system, d_dx(c, op.p, op.q));
  for (int i = 0; i < amb; ++i) {
    for (int j = i + 1; j < amb; ++j) {
      long pair = kronecker_pairing(i, j, op.p, op.q);
      if (pair == 0) continue;
      FieldElem coeff = kval(op, i, j) * FieldElem(pair);
      std::vector<Polynomial> swapped;
      for (const auto& c : phi) swapped.push_back(swap_vars(c, i, j));
      // rho(s_ij) from its reduced word (trivial: 1, sign: -1)
      FieldMatrix r;
      if (op.variant == Variant::an_trivial)
        r = FieldMatrix::identity(1);
      else if (op.variant == Variant::an_sign)
        r = FieldMatrix::scalar(1, FieldElem(-1L));
      else
        r = op.rho->of(GroupElement::reflection(*op.system, op.system->root_index(i, j)));
      for (int a = 0; a < d; ++a) {
        Polynomial diff = phi[static_cast<std::size_t>(a)];
        for (int b = 0; b < d; ++b) {
          const FieldElem& m = r(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
          if (!m.is_zero()) diff -= swapped[static_cast<std::size_t>(b)] * m;
        }
        out[static_cast<std::size_t>(a)] += over_difference(op, i, j, diff, coeff);
      }
    }
  }
  return out;
}

}  // namespace

VectorField explicit_apply(const ExplicitOperator& op, const VectorField& phi) {
  if (static_cast<int>(phi.size()) != op.dim())
    throw std::invalid_argument("field has " + std::to_string(phi.size()) + " components, variant " +
                                to_string(op.variant) + " expects " + std::to_string(op.dim()));
  std::vector<Polynomial> polys;
  for (const auto& c : phi) {
    if (!c.is_polynomial()) throw PreconditionError("explicit operators take polynomial components");
    polys.push_back(c.num());
  }
  switch (op.variant) {
    case Variant::a2_trivial:
      return {a2_scalar(op, polys[0], 1)};
    case Variant::a2_sign:
      return {a2_scalar(op, polys[0], -1)};
    case Variant::a2_irrep2d:
      return a2_irrep(op, polys[0], polys[1]);
    default:
      return an_general(op, polys);
  }
}

CrosscheckResult crosscheck_generic(const ExplicitOperator& op, int trials, std::uint64_t seed, int max_degree) {
  CrosscheckResult res{op.variant};
  const Rational& k0 = op.k.front();
  for (const auto& v : op.k)
    if (v != k0) throw PreconditionError("generic operator needs a W-invariant multiplicity (equal k_ij)");
  DunklContext ctx(op.system, k0);
  Representation rho = op.generic_rep();
  Point xi(static_cast<std::size_t>(op.system->ambient_dim()), FieldElem::zero());
  xi[static_cast<std::size_t>(op.p)] = FieldElem(1L);
  xi[static_cast<std::size_t>(op.q)] = FieldElem(-1L);
  Sampler s(seed);
  for (int t = 0; t < trials; ++t) {
    VectorField phi;
    for (int c = 0; c < op.dim(); ++c)
      phi.emplace_back(op.system, s.polynomial(op.system->ambient_dim(), max_degree, 5, {.imaginary = true}));
    VectorField diff = sub(explicit_apply(op, phi), twisted_dunkl_apply(ctx, rho, xi, phi));
    ++res.trials;
    if (is_zero(diff))
      ++res.passed;
    else if (res.witness.empty())
      res.witness = "Phi = " + to_string(phi) + "; residual = " + to_string(diff);
  }
  return res;
}

HamiltonianReport hamiltonian_report(const RootSystemPtr& rs, std::string_view rep, const Rational& k, int degree_cap) {
  if (rep != "trivial" && rep != "sign")
    throw std::invalid_argument("Hamiltonian reports cover the scalar representations trivial and sign");
  HamiltonianReport out;
  out.rep = std::string(rep);
  const int amb = rs->ambient_dim();
  // Monomials up to degree_cap, graded.
  std::vector<Polynomial> monomials;
  std::vector<int> e(static_cast<std::size_t>(amb), 0);
  auto enumerate = [&](auto&& self, int var, int remaining) -> void {
    if (var == amb - 1) {
      e[static_cast<std::size_t>(var)] = remaining;
      monomials.emplace_back(amb, std::vector<Polynomial::Term>{{Monomial(e), FieldElem::one()}});
      return;
    }
    for (int a = remaining; a >= 0; --a) {
      e[static_cast<std::size_t>(var)] = a;
      self(self, var + 1, remaining - a);
    }
  };
  for (int d = 0; d <= degree_cap; ++d) enumerate(enumerate, 0, d);

  std::vector<Polynomial> basis;
  if (rep == "trivial") {
    basis = monomials;
  } else {
    auto group = enumerate_group(*rs);
    std::set<std::string> seen;
    for (const auto& m : monomials) {
      RationalSection alt(rs);
      for (const auto& w : group) {
        int sign = static_cast<int>(w.word().size() % 2 == 0 ? 1 : -1);
        alt += compose_group(w, RationalSection(rs, m)) * FieldElem(static_cast<long>(sign));
      }
      if (alt.is_zero()) continue;
      // normalize the leading coefficient so +-multiples are not repeated
      const FieldElem lead = alt.num().terms().back().second;
      Polynomial p = alt.num() * lead.inv();
      if (seen.insert(p.to_string()).second) basis.push_back(p);
    }
  }

  DunklContext ctx(rs, k);
  DiracContext dctx(ctx, Representation::builtin(rep, rs));
  const int spin = dctx.gens.dim_spinor();
  for (const auto& f : basis) {
    out.basis.push_back(f.to_string());
    VectorField image = zero_field(rs, 1);
    for (int a = 0; a < dctx.basis.size(); ++a) {
      const Point& u = dctx.basis[a];
      image = add(image, twisted_dunkl_apply(ctx, dctx.rho, u, twisted_dunkl_apply(ctx, dctx.rho, u, {RationalSection(rs, f)})));
    }
    out.images.push_back(to_string(image));
    // spinor field with f in the first slot
    VectorField spinor = zero_field(rs, spin);
    spinor[0] = RationalSection(rs, f);
    VectorField res = dirac_square_residual(dctx, spinor);
    if (!is_zero(res)) {
      out.square_identity = false;
      if (out.witness.empty()) out.witness = "f = " + f.to_string() + "; residual = " + to_string(res);
    }
  }
  return out;
}

}  // namespace ddk
